#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "reachmt/common.hpp"

namespace reachmt {

namespace detail {

/// Index of the vertex maximizing <l, v>; exact-value ties resolved toward the
/// lexicographically largest coordinate vector.
inline std::size_t argmax_index(const std::vector<Vector>& pts, const Vector& l) {
    std::size_t best = 0;
    double best_val = l.dot(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double v = l.dot(pts[i]);
        if (v > best_val || (v == best_val && lex_less(pts[best], pts[i]))) {
            best = i;
            best_val = v;
        }
    }
    return best;
}

inline double cloud_diameter(const std::vector<Vector>& pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, (pts[i] - pts[j]).norm());
    return d;
}

inline std::vector<Vector> dedup_points(std::vector<Vector> pts, double tolerance) {
    std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) { return lex_less(b, a); });
    std::vector<Vector> kept;
    kept.reserve(pts.size());
    for (const auto& p : pts) {
        bool fresh = true;
        for (const auto& q : kept) {
            if ((p - q).norm() <= tolerance) {
                fresh = false;
                break;
            }
        }
        if (fresh) kept.push_back(p);
    }
    return kept;
}

inline double cross2(const Vector& u, const Vector& v) { return u[0] * v[1] - u[1] * v[0]; }

/// Andrew's monotone chain. Returns the hull in counterclockwise order starting
/// at the lexicographically smallest point; collinear points are eliminated with
/// a cross-product cutoff relative to the cloud scale.
inline std::vector<Vector> monotone_chain(std::vector<Vector> pts, double eps_cross) {
    std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) { return lex_less(a, b); });
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Vector> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= eps_cross) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross2(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= eps_cross) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline double dist_point_segment(const Vector& x, const Vector& a, const Vector& b) {
    const Vector d = b - a;
    const double len2 = d.squaredNorm();
    if (len2 == 0.0) return (x - a).norm();
    const double t = std::clamp((x - a).dot(d) / len2, 0.0, 1.0);
    return (x - (a + t * d)).norm();
}

/// Distance from x to co(pts) via Wolfe's nearest-point method. Used for
/// dimensions above two, where no ordered hull is maintained.
inline double wolfe_distance(const Vector& x, const std::vector<const Vector*>& pts) {
    const Eigen::Index n = x.size();
    std::size_t start = 0;
    double best = (*pts[0] - x).squaredNorm();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double d = (*pts[i] - x).squaredNorm();
        if (d < best) {
            best = d;
            start = i;
        }
    }
    std::vector<std::size_t> active{start};
    std::vector<double> lambda{1.0};
    Vector y = *pts[start];

    for (int iter = 0; iter < 200; ++iter) {
        const Vector w = y - x;
        const double wnorm2 = w.squaredNorm();
        if (wnorm2 <= 1e-30) return 0.0;
        std::size_t jstar = 0;
        double lowest = w.dot(*pts[0]);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            const double v = w.dot(*pts[i]);
            if (v < lowest) {
                lowest = v;
                jstar = i;
            }
        }
        if (w.dot(y) - lowest <= 1e-12 * std::max(1.0, wnorm2)) break;
        if (std::find(active.begin(), active.end(), jstar) == active.end()) {
            active.push_back(jstar);
            lambda.push_back(0.0);
        }
        for (int minor = 0; minor < 200; ++minor) {
            const std::size_t m = active.size();
            Matrix a(n, static_cast<Eigen::Index>(m));
            for (std::size_t q = 0; q < m; ++q) a.col(static_cast<Eigen::Index>(q)) = *pts[active[q]];
            Matrix kkt = Matrix::Zero(m + 1, m + 1);
            kkt.topLeftCorner(m, m) = a.transpose() * a;
            kkt.topRightCorner(m, 1).setOnes();
            kkt.bottomLeftCorner(1, m).setOnes();
            Vector rhs(m + 1);
            rhs.head(m) = a.transpose() * x;
            rhs[static_cast<Eigen::Index>(m)] = 1.0;
            const Vector sol = kkt.completeOrthogonalDecomposition().solve(rhs);
            const Vector mu = sol.head(m);
            if (mu.minCoeff() >= -1e-12) {
                lambda.assign(mu.data(), mu.data() + m);
                y = a * mu;
                break;
            }
            double theta = 1.0;
            for (std::size_t q = 0; q < m; ++q) {
                const double muq = mu[static_cast<Eigen::Index>(q)];
                if (muq < 0.0 && lambda[q] > muq) theta = std::min(theta, lambda[q] / (lambda[q] - muq));
            }
            for (std::size_t q = 0; q < m; ++q)
                lambda[q] += theta * (mu[static_cast<Eigen::Index>(q)] - lambda[q]);
            for (std::size_t q = m; q-- > 0;) {
                if (lambda[q] <= 1e-12) {
                    active.erase(active.begin() + static_cast<std::ptrdiff_t>(q));
                    lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(q));
                }
            }
            Vector ynew = Vector::Zero(n);
            for (std::size_t q = 0; q < active.size(); ++q) ynew += lambda[q] * *pts[active[q]];
            y = ynew;
        }
    }
    return (y - x).norm();
}

/// Extreme-point filter for dimensions above two: a point is dropped exactly
/// when it lies in the hull of the remaining points.
inline std::vector<Vector> filter_extreme_points(const std::vector<Vector>& pts, double tolerance) {
    std::vector<Vector> kept = pts;
    for (std::size_t i = kept.size(); i-- > 0;) {
        if (kept.size() == 1) break;
        std::vector<const Vector*> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(&kept[j]);
        if (wolfe_distance(kept[i], others) <= tolerance)
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return kept;
}

}  // namespace detail

/// Convex compact set stored as its extreme points. In the plane the vertices
/// are kept in counterclockwise hull order (a strictly convex ring) whenever the
/// set is full-dimensional; singletons and segments are valid degenerate cases.
class Polytope {
public:
    Polytope() = default;

    /// Normalizing factory: dedups, drops non-extreme points, orders 2D rings.
    static Polytope from_vertices(std::vector<Vector> points, int dim) {
        if (points.empty()) throw std::invalid_argument("Polytope: empty vertex list");
        for (const auto& p : points)
            if (p.size() != dim) throw std::invalid_argument("Polytope: vertex dimension mismatch");
        const double scale = std::max(1.0, detail::cloud_diameter(points));
        points = detail::dedup_points(std::move(points), tol::dedup * scale);

        Polytope out;
        out.dim_ = dim;
        if (points.size() == 1) {
            out.vertices_ = std::move(points);
            return out;
        }
        if (dim == 1) {
            auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                                [](const Vector& a, const Vector& b) { return a[0] < b[0]; });
            out.vertices_ = {*lo, *hi};
            return out;
        }
        if (dim == 2) {
            out.vertices_ = detail::monotone_chain(std::move(points), tol::collinear * scale * scale);
            out.ring_ = out.vertices_.size() >= 3;
            return out;
        }
        out.vertices_ = detail::filter_extreme_points(points, tol::dedup * scale);
        return out;
    }

    static Polytope singleton(Vector p) {
        Polytope out;
        out.dim_ = static_cast<int>(p.size());
        out.vertices_.push_back(std::move(p));
        return out;
    }

    static Polytope interval(double lo, double hi) {
        std::vector<Vector> pts;
        pts.push_back(Vector::Constant(1, lo));
        pts.push_back(Vector::Constant(1, hi));
        return from_vertices(std::move(pts), 1);
    }

    static Polytope box(const Vector& lo, const Vector& hi) {
        const int d = static_cast<int>(lo.size());
        std::vector<Vector> corners;
        corners.reserve(std::size_t{1} << d);
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
            Vector c(d);
            for (int i = 0; i < d; ++i) c[i] = (mask >> i) & 1 ? hi[i] : lo[i];
            corners.push_back(std::move(c));
        }
        return from_vertices(std::move(corners), d);
    }

    int dim() const { return dim_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vector>& vertices() const { return vertices_; }
    /// True when the vertices form a counterclockwise strictly convex 2D ring.
    bool has_ring() const { return ring_; }

    double support(const Vector& l) const {
        require_nonempty();
        double best = l.dot(vertices_[0]);
        for (std::size_t i = 1; i < vertices_.size(); ++i) best = std::max(best, l.dot(vertices_[i]));
        return best;
    }

    /// A vertex attaining the support value; ties resolved lexicographically.
    const Vector& supporting_point(const Vector& l) const {
        require_nonempty();
        return vertices_[detail::argmax_index(vertices_, l)];
    }

    double distance_to(const Vector& x) const {
        require_nonempty();
        if (dim_ == 1) {
            const double lo = vertices_.front()[0], hi = vertices_.back()[0];
            return std::max({std::min(lo, hi) - x[0], x[0] - std::max(lo, hi), 0.0});
        }
        if (dim_ == 2) {
            if (vertices_.size() == 1) return (x - vertices_[0]).norm();
            if (vertices_.size() == 2) return detail::dist_point_segment(x, vertices_[0], vertices_[1]);
            bool inside = true;
            for (std::size_t i = 0; i < vertices_.size(); ++i) {
                const Vector& a = vertices_[i];
                const Vector& b = vertices_[(i + 1) % vertices_.size()];
                if (detail::cross2(b - a, x - a) < 0.0) {
                    inside = false;
                    break;
                }
            }
            if (inside) return 0.0;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < vertices_.size(); ++i)
                best = std::min(best, detail::dist_point_segment(x, vertices_[i], vertices_[(i + 1) % vertices_.size()]));
            return best;
        }
        std::vector<const Vector*> ptrs;
        ptrs.reserve(vertices_.size());
        for (const auto& v : vertices_) ptrs.push_back(&v);
        return detail::wolfe_distance(x, ptrs);
    }

    bool contains(const Vector& x, double tolerance) const { return distance_to(x) <= tolerance; }

    double diameter() const { return detail::cloud_diameter(vertices_); }

    Vector centroid() const {
        require_nonempty();
        Vector c = Vector::Zero(dim_);
        for (const auto& v : vertices_) c += v;
        return c / static_cast<double>(vertices_.size());
    }

    /// Shoelace area of the 2D ring; zero for degenerate sets.
    double area() const {
        if (dim_ != 2 || !ring_) return 0.0;
        double twice = 0.0;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const Vector& a = vertices_[i];
            const Vector& b = vertices_[(i + 1) % vertices_.size()];
            twice += a[0] * b[1] - a[1] * b[0];
        }
        return 0.5 * twice;
    }

private:
    void require_nonempty() const {
        if (vertices_.empty()) throw std::invalid_argument("Polytope: empty vertex list");
    }

    int dim_ = 0;
    std::vector<Vector> vertices_;
    bool ring_ = false;
};

inline Polytope convex_hull_normalize(std::vector<Vector> points, int dim) {
    return Polytope::from_vertices(std::move(points), dim);
}

inline Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<Vector> sums;
    sums.reserve(p.size() * q.size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) sums.push_back(a + b);
    return Polytope::from_vertices(std::move(sums), p.dim());
}

inline Polytope linear_image(const Matrix& m, const Polytope& p) {
    if (m.cols() != p.dim()) throw std::invalid_argument("linear_image: shape mismatch");
    std::vector<Vector> mapped;
    mapped.reserve(p.size());
    for (const auto& v : p.vertices()) mapped.push_back(m * v);
    return Polytope::from_vertices(std::move(mapped), static_cast<int>(m.rows()));
}

inline Polytope translate(const Polytope& p, const Vector& shift) {
    std::vector<Vector> moved;
    moved.reserve(p.size());
    for (const auto& v : p.vertices()) moved.push_back(v + shift);
    return Polytope::from_vertices(std::move(moved), p.dim());
}

/// Exact Hausdorff distance for dimensions up to two. The maximum of the
/// distance function over a convex set is attained at an extreme point, so
/// scanning vertices against the other polytope is exact.
inline double hausdorff_distance(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("hausdorff_distance: dimension mismatch");
    if (p.dim() > 2)
        throw std::invalid_argument("hausdorff_distance: exact evaluation is 1D/2D; use hausdorff_bracket");
    double d = 0.0;
    for (const auto& v : p.vertices()) d = std::max(d, q.distance_to(v));
    for (const auto& w : q.vertices()) d = std::max(d, p.distance_to(w));
    return d;
}

struct HausdorffBracket {
    double lower = 0.0;
    double upper = 0.0;
    double width() const { return upper - lower; }
};

/// Finite set of unit directions with a certified covering density:
/// every unit vector lies within chord distance density_eps of the grid.
struct DirectionGrid {
    int dim = 0;
    std::vector<Vector> directions;
    double density_eps = 0.0;

    std::size_t size() const { return directions.size(); }
};

/// Uniform angular grid in the plane (density 2*sin(pi/(2n))) or the two signed
/// directions on the line (density 0).
inline DirectionGrid uniform_direction_grid(int dim, int n) {
    DirectionGrid g;
    g.dim = dim;
    if (dim == 1) {
        if (n < 1) throw std::invalid_argument("uniform_direction_grid: need at least one direction");
        g.directions.push_back(Vector::Constant(1, 1.0));
        g.directions.push_back(Vector::Constant(1, -1.0));
        g.density_eps = 0.0;
        return g;
    }
    if (dim != 2) throw std::invalid_argument("uniform_direction_grid: certified grids are 1D/2D only");
    if (n < 3) throw std::invalid_argument("uniform_direction_grid: need at least 3 directions");
    g.directions.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n;
        Vector l(2);
        l << std::cos(angle), std::sin(angle);
        g.directions.push_back(std::move(l));
    }
    g.density_eps = 2.0 * std::sin(std::numbers::pi / (2.0 * n));
    return g;
}

/// Inner polytope approximation from supporting points in the grid directions.
/// Always a subset of p; Hausdorff error at most 2*diam(p)*density_eps.
inline Polytope polytope_from_directions(const Polytope& p, const DirectionGrid& g) {
    if (g.dim != p.dim()) throw std::invalid_argument("polytope_from_directions: dimension mismatch");
    std::vector<Vector> pts;
    pts.reserve(g.size());
    for (const auto& l : g.directions) pts.push_back(p.supporting_point(l));
    return Polytope::from_vertices(std::move(pts), p.dim());
}

namespace detail {

inline std::vector<Vector> sample_directions(int dim, int n, unsigned seed) {
    std::vector<Vector> dirs;
    dirs.reserve(n);
    if (dim == 2) {
        for (int k = 0; k < n; ++k) {
            const double angle = 2.0 * std::numbers::pi * k / n;
            Vector l(2);
            l << std::cos(angle), std::sin(angle);
            dirs.push_back(std::move(l));
        }
        return dirs;
    }
    if (dim == 3) {
        // Fibonacci sphere
        const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < n; ++k) {
            const double z = 1.0 - 2.0 * (k + 0.5) / n;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double a = golden * k;
            Vector l(3);
            l << r * std::cos(a), r * std::sin(a), z;
            dirs.push_back(std::move(l));
        }
        return dirs;
    }
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss;
    while (static_cast<int>(dirs.size()) < n) {
        Vector l(dim);
        for (int i = 0; i < dim; ++i) l[i] = gauss(rng);
        const double norm = l.norm();
        if (norm > 1e-12) dirs.push_back(l / norm);
    }
    return dirs;
}

}  // namespace detail

/// Sampled two-sided bracket on the Hausdorff distance in any dimension.
/// lower = max support gap over the sampled directions; upper adds the
/// Lipschitz slack of the support difference times the estimated grid density.
inline HausdorffBracket hausdorff_bracket(const Polytope& p, const Polytope& q, int n_dirs = 512) {
    if (p.dim() != q.dim()) throw std::invalid_argument("hausdorff_bracket: dimension mismatch");
    const int dim = p.dim();
    const auto dirs = detail::sample_directions(dim, n_dirs, 0x5eedu);
    HausdorffBracket b;
    for (const auto& l : dirs) b.lower = std::max(b.lower, std::abs(p.support(l) - q.support(l)));

    double eps = 0.0;
    if (dim <= 2) {
        eps = dim == 1 ? 0.0 : 2.0 * std::sin(std::numbers::pi / (2.0 * n_dirs));
    } else {
        const auto probes = detail::sample_directions(dim, 4 * n_dirs, 0xfeedu);
        for (const auto& u : probes) {
            double nearest = std::numeric_limits<double>::infinity();
            for (const auto& l : dirs) nearest = std::min(nearest, (u - l).norm());
            eps = std::max(eps, nearest);
        }
    }
    double radius = 0.0;
    for (const auto& v : p.vertices()) radius = std::max(radius, v.norm());
    for (const auto& w : q.vertices()) radius = std::max(radius, w.norm());
    b.upper = b.lower + 2.0 * radius * eps;
    return b;
}

}  // namespace reachmt
