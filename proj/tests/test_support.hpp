#pragma once

// Shared helpers for the unit test suites: deterministic random geometry and
// small brute-force oracles kept independent of the library internals.

#include <random>
#include <vector>

#include "reachmt/geometry.hpp"

namespace testsupport {

using reachmt::Polytope;
using reachmt::Vector;

inline Vector vec2(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

inline Vector unit_dir(double angle) { return vec2(std::cos(angle), std::sin(angle)); }

inline Vector random_unit_dir(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    return unit_dir(u(rng));
}

inline std::vector<Vector> random_cloud(std::mt19937& rng, int n, double radius = 1.0) {
    std::uniform_real_distribution<double> u(-radius, radius);
    std::vector<Vector> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(vec2(u(rng), u(rng)));
    return pts;
}

inline Polytope random_polytope(std::mt19937& rng, int n_points = 12, double radius = 1.0) {
    return Polytope::from_vertices(random_cloud(rng, n_points, radius), 2);
}

// Equality of convex sets through the exact planar Hausdorff distance.
inline bool same_set(const Polytope& p, const Polytope& q, double tolerance = 1e-12) {
    return reachmt::hausdorff_distance(p, q) <= tolerance;
}

inline double cross2(const Vector& u, const Vector& v) { return u[0] * v[1] - u[1] * v[0]; }

// Brute-force membership oracle: x lies in co(pts) iff it lies in some triangle
// of points from the cloud (or on a segment for degenerate clouds). O(n^3).
inline bool in_hull_brute(const Vector& x, const std::vector<Vector>& pts, double tolerance = 1e-12) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((x - pts[i]).norm() <= tolerance) return true;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (reachmt::detail::dist_point_segment(x, pts[i], pts[j]) <= tolerance) return true;
            for (std::size_t k = j + 1; k < n; ++k) {
                const double d1 = cross2(pts[j] - pts[i], x - pts[i]);
                const double d2 = cross2(pts[k] - pts[j], x - pts[j]);
                const double d3 = cross2(pts[i] - pts[k], x - pts[k]);
                const bool has_neg = d1 < -tolerance || d2 < -tolerance || d3 < -tolerance;
                const bool has_pos = d1 > tolerance || d2 > tolerance || d3 > tolerance;
                if (!(has_neg && has_pos)) return true;
            }
        }
    }
    return false;
}

}  // namespace testsupport
