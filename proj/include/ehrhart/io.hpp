#ifndef EHRHART_IO_HPP
#define EHRHART_IO_HPP

#include <string>

#include <json.hpp>

#include "ehrhart/decomposition.hpp"
#include "ehrhart/ehrhart.hpp"
#include "ehrhart/inequalities.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/reflexivity.hpp"
#include "ehrhart/triangulation.hpp"

namespace ehrhart {

using json = nlohmann::ordered_json;

// {"rank": n, "vertices": [[int, ...], ...]}; exact integers only.
LatticePolytope polytope_from_json(const json& doc);
json polytope_to_json(const LatticePolytope& p);
LatticePolytope read_polytope_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

// {"points": [[int, ...], ...], "maximal_faces": [[idx, ...], ...]}
BoundaryTriangulation triangulation_from_json(const json& doc, int d);
json triangulation_to_json(const BoundaryTriangulation& t);

json profile_to_json(const EhrhartProfile& p);
json decomposition_to_json(const ABDecomposition& d);
json reflexivity_to_json(const ReflexivityReport& r);
json inequality_to_json(const InequalityReport& r);

json int_to_json(const Int& v);
json poly_to_json(const IntPolynomial& p);

} // namespace ehrhart

#endif
