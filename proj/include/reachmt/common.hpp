#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace reachmt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using RowVector = Eigen::RowVectorXd;

/// Propagation or mesh construction failed structurally (non-nested fronts,
/// degenerate hulls, singular transition matrices).
class structural_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A run would exceed the configured work cap.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad configuration or unusable input files.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested feature is outside the supported problem class.
class unsupported_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace tol {
// Vertex dedup distance, scaled by the cloud diameter.
inline constexpr double dedup = 1e-9;
// Relative cross-product cutoff for collinear elimination in 2D hulls.
inline constexpr double collinear = 1e-12;
// Accepted slack when comparing support values of nested fronts.
inline constexpr double nesting = 1e-9;
// Barycentric coordinates down to -barycentric are snapped onto the simplex.
inline constexpr double barycentric = 1e-9;
// Dead zone of the signum used for control synthesis.
inline constexpr double signum = 1e-12;
// Relative smallest-singular-value threshold for step-matrix invertibility.
inline constexpr double phi_sigma = 1e-12;
// Relative singular-value threshold for the controllability rank test.
inline constexpr double rank_sigma = 1e-10;
}  // namespace tol

inline bool lex_less(const Vector& a, const Vector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace reachmt
