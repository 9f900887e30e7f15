#include "ehrhart/constructions.hpp"

#include "ehrhart/errors.hpp"

namespace ehrhart {

LatticePolytope standard_simplex(int d) {
    if (d < 0) throw DegeneratePolytope("negative dimension");
    std::vector<Point> pts;
    pts.push_back(Point(d, Int(0)));
    for (int i = 0; i < d; ++i) {
        Point e(d, Int(0));
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    return LatticePolytope::from_points(d, std::move(pts));
}

LatticePolytope standard_reflexive_simplex(int d) {
    if (d < 1) throw DegeneratePolytope("reflexive simplex needs dimension >= 1");
    std::vector<Point> pts;
    for (int i = 0; i < d; ++i) {
        Point e(d, Int(0));
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    pts.push_back(Point(d, Int(-1)));
    return LatticePolytope::from_points(d, std::move(pts));
}

LatticePolytope unit_cube(int d) {
    if (d < 0) throw DegeneratePolytope("negative dimension");
    std::vector<Point> pts;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        Point v(d);
        for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1;
        pts.push_back(std::move(v));
    }
    return LatticePolytope::from_points(d, std::move(pts));
}

LatticePolytope dilate(const LatticePolytope& p, const Int& k) {
    if (k < 1) throw DegeneratePolytope("dilation factor must be positive");
    return p.dilated(k);
}

LatticePolytope pyramid(const LatticePolytope& p) {
    if (!p.full_dimensional()) throw DegeneratePolytope("pyramid requires full dimension");
    std::vector<Point> pts;
    for (const auto& v : p.vertices()) {
        Point w = v;
        w.push_back(1);
        pts.push_back(std::move(w));
    }
    pts.push_back(Point(p.rank() + 1, Int(0)));
    return LatticePolytope::from_points(p.rank() + 1, std::move(pts));
}

LatticePolytope henk_tagami_tensor(const LatticePolytope& p, const LatticePolytope& q) {
    if (!p.full_dimensional() || !q.full_dimensional())
        throw DimensionMismatch("tensor factors must be full-dimensional");
    const int n = p.rank(), m = q.rank();
    std::vector<Point> pts;
    for (const auto& v : p.vertices()) {
        Point w = v;
        w.resize(n + m + 1, Int(0));
        pts.push_back(std::move(w));
    }
    for (const auto& v : q.vertices()) {
        Point w(n + m + 1, Int(0));
        for (int j = 0; j < m; ++j) w[n + j] = v[j];
        w[n + m] = 1;
        pts.push_back(std::move(w));
    }
    return LatticePolytope::from_points(n + m + 1, std::move(pts));
}

LatticePolytope henk_tagami_example() {
    std::vector<Point> pts = {
        {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0},
        {0, 1, 2, 0, 0}, {0, 0, 0, 3, 1}, {0, 0, 0, 0, 1},
    };
    return LatticePolytope::from_points(5, std::move(pts));
}

} // namespace ehrhart
