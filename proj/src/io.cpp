#include "ehrhart/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include "ehrhart/errors.hpp"

namespace ehrhart {

namespace {

Int int_from_json(const json& v) {
    if (!v.is_number_integer())
        throw ParseError("expected an exact integer, got " + v.dump());
    return Int(v.get<long long>());
}

Point point_from_json(const json& v) {
    if (!v.is_array()) throw ParseError("expected a coordinate array");
    Point p;
    p.reserve(v.size());
    for (const auto& c : v) p.push_back(int_from_json(c));
    return p;
}

} // namespace

json int_to_json(const Int& v) {
    // Inputs are desk-scale; counts stay far below 2^63.
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw InternalError("integer too large for JSON serialization");
    return json(v.convert_to<long long>());
}

json poly_to_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(int_to_json(c));
    return arr;
}

LatticePolytope polytope_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("rank") || !doc.contains("vertices"))
        throw ParseError("polytope document needs \"rank\" and \"vertices\"");
    if (!doc["rank"].is_number_integer()) throw ParseError("\"rank\" must be an integer");
    int rank = doc["rank"].get<int>();
    if (rank < 0) throw ParseError("\"rank\" must be non-negative");
    if (!doc["vertices"].is_array() || doc["vertices"].empty())
        throw ParseError("\"vertices\" must be a non-empty array");
    std::vector<Point> pts;
    for (const auto& v : doc["vertices"]) {
        Point p = point_from_json(v);
        if (static_cast<int>(p.size()) != rank)
            throw ParseError("vertex length disagrees with \"rank\"");
        pts.push_back(std::move(p));
    }
    try {
        return LatticePolytope::from_points(rank, std::move(pts));
    } catch (const DegeneratePolytope&) {
        throw;
    }
}

json polytope_to_json(const LatticePolytope& p) {
    json doc;
    doc["rank"] = p.rank();
    json verts = json::array();
    for (const auto& v : p.vertices()) {
        json pt = json::array();
        for (const auto& c : v) pt.push_back(int_to_json(c));
        verts.push_back(std::move(pt));
    }
    doc["vertices"] = std::move(verts);
    return doc;
}

LatticePolytope read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return polytope_from_json(doc);
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << doc.dump(2) << "\n";
}

BoundaryTriangulation triangulation_from_json(const json& doc, int d) {
    if (!doc.is_object() || !doc.contains("points") || !doc.contains("maximal_faces"))
        throw ParseError("triangulation document needs \"points\" and \"maximal_faces\"");
    BoundaryTriangulation t;
    t.d = d;
    t.regular_by_construction = false;
    for (const auto& v : doc["points"]) t.points.push_back(point_from_json(v));
    for (const auto& f : doc["maximal_faces"]) {
        if (!f.is_array()) throw ParseError("maximal face must be an index array");
        std::vector<int> face;
        for (const auto& i : f) {
            if (!i.is_number_integer()) throw ParseError("face index must be an integer");
            int idx = i.get<int>();
            if (idx < 0 || idx >= static_cast<int>(t.points.size()))
                throw ParseError("face index out of range");
            face.push_back(idx);
        }
        std::sort(face.begin(), face.end());
        t.maximal_faces.push_back(std::move(face));
    }
    std::sort(t.maximal_faces.begin(), t.maximal_faces.end());
    return t;
}

json triangulation_to_json(const BoundaryTriangulation& t) {
    json doc;
    json pts = json::array();
    for (const auto& p : t.points) {
        json pt = json::array();
        for (const auto& c : p) pt.push_back(int_to_json(c));
        pts.push_back(std::move(pt));
    }
    doc["points"] = std::move(pts);
    json faces = json::array();
    for (const auto& f : t.maximal_faces) faces.push_back(f);
    doc["maximal_faces"] = std::move(faces);
    return doc;
}

json profile_to_json(const EhrhartProfile& p) {
    json doc;
    doc["d"] = p.d;
    json f = json::array();
    for (const auto& c : p.f) f.push_back(int_to_json(c));
    doc["f"] = std::move(f);
    doc["delta"] = poly_to_json(p.delta);
    doc["s"] = p.s;
    doc["l"] = p.l;
    doc["delta_bar"] = poly_to_json(p.delta_bar);
    return doc;
}

json decomposition_to_json(const ABDecomposition& d) {
    json doc;
    doc["a"] = poly_to_json(d.a);
    doc["b"] = poly_to_json(d.b);
    doc["l"] = d.l;
    return doc;
}

json reflexivity_to_json(const ReflexivityReport& r) {
    json doc;
    doc["is_reflexive"] = r.is_reflexive;
    doc["is_translate_of_reflexive"] = r.is_translate_of_reflexive;
    if (r.translation) {
        json pt = json::array();
        for (const auto& c : *r.translation) pt.push_back(int_to_json(c));
        doc["translation"] = std::move(pt);
    } else {
        doc["translation"] = nullptr;
    }
    doc["delta_symmetric"] = r.delta_symmetric;
    doc["b_is_zero"] = r.b_is_zero;
    return doc;
}

json inequality_to_json(const InequalityReport& r) {
    json doc;
    doc["family"] = family_name(r.family);
    doc["holds"] = r.holds;
    if (r.vacuous) doc["vacuous"] = true;
    if (r.first_violation) {
        doc["first_violation"] = *r.first_violation;
        doc["lhs"] = int_to_json(r.lhs);
        doc["rhs"] = int_to_json(r.rhs);
    }
    return doc;
}

} // namespace ehrhart
