#include "ehrhart/reflexivity.hpp"

#include "ehrhart/errors.hpp"

namespace ehrhart {

bool is_reflexive(const LatticePolytope& p, const ScanOptions& opts) {
    if (!p.full_dimensional()) throw DegeneratePolytope("is_reflexive requires full dimension");
    if (p.dim() == 0) return false;
    std::vector<Point> interior = lattice_points(p, 1, PointFilter::Interior, opts);
    if (interior.size() != 1) return false;
    for (const auto& c : interior[0])
        if (c != 0) return false;
    for (const auto& f : p.facets())
        if (f.offset != 1) return false;
    return true;
}

std::pair<bool, std::optional<Point>> is_translate_of_reflexive(const LatticePolytope& p,
                                                                const ScanOptions& opts) {
    if (!p.full_dimensional())
        throw DegeneratePolytope("is_translate_of_reflexive requires full dimension");
    if (p.dim() == 0) return {false, std::nullopt};
    std::vector<Point> interior = lattice_points(p, 1, PointFilter::Interior, opts);
    if (interior.size() != 1) return {false, std::nullopt};
    Point w = interior[0];
    Point neg(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) neg[j] = -w[j];
    return {is_reflexive(p.translated(neg), opts), w};
}

ReflexivityReport stanley_symmetry_check(const LatticePolytope& p, const EhrhartProfile& profile,
                                         const ABDecomposition& dec, const ScanOptions& opts) {
    ReflexivityReport rep;
    rep.is_reflexive = is_reflexive(p, opts);
    rep.delta_symmetric = profile.delta.is_palindromic(profile.s);
    rep.b_is_zero = dec.b.is_zero();
    auto [translate, w] = is_translate_of_reflexive(p.dilated(profile.l), opts);
    rep.is_translate_of_reflexive = translate;
    rep.translation = w;
    if (rep.delta_symmetric != rep.b_is_zero || rep.b_is_zero != rep.is_translate_of_reflexive)
        throw TataViolation("symmetry/b=0/reflexive-translate predicates disagree");
    return rep;
}

} // namespace ehrhart
