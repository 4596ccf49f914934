#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace equigraph {

struct JacobiOptions {
    /// Rotations are skipped for off-diagonal entries below this magnitude.
    double rotation_threshold = 1e-14;
    /// Stop once the off-diagonal Frobenius norm drops below tolerance * n.
    double tolerance = 1e-12;
    int max_sweeps = 100;
};

class JacobiNoConvergence : public std::runtime_error {
public:
    JacobiNoConvergence(int sweeps, double off_norm)
        : std::runtime_error("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
                             " sweeps (off-diagonal norm " + std::to_string(off_norm) + ")"),
          sweeps(sweeps),
          off_norm(off_norm) {}
    int sweeps;
    double off_norm;
};

namespace detail {

template <typename Scalar>
Scalar off_diagonal_norm(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
    Scalar sum = 0;
    const auto n = a.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i != j) sum += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

}  // namespace detail

/// Eigenvalues of a real symmetric matrix by cyclic-by-row Jacobi rotations,
/// sorted descending. Only the input's lower and upper triangles must agree;
/// symmetry is not checked.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> jacobi_eigenvalues(
    const Eigen::MatrixBase<Derived>& input, const JacobiOptions& options = {}) {
    using Scalar = typename Derived::Scalar;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (input.rows() != input.cols()) throw std::invalid_argument("jacobi_eigenvalues: matrix not square");

    Matrix a = input;
    const Eigen::Index n = a.rows();
    const Scalar stop = static_cast<Scalar>(options.tolerance) * static_cast<Scalar>(std::max<Eigen::Index>(n, 1));
    const Scalar skip = static_cast<Scalar>(options.rotation_threshold);

    int sweep = 0;
    Scalar off = detail::off_diagonal_norm(a);
    while (off >= stop) {
        if (sweep == options.max_sweeps) throw JacobiNoConvergence(sweep, static_cast<double>(off));
        ++sweep;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Scalar apq = a(p, q);
                if (std::abs(apq) < skip) continue;
                const Scalar theta = (a(q, q) - a(p, p)) / (2 * apq);
                const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const Scalar c = 1 / std::sqrt(t * t + 1);
                const Scalar s = t * c;
                const Scalar tau = s / (1 + c);

                Scalar* colp = a.col(p).data();
                Scalar* colq = a.col(q).data();
                for (Eigen::Index r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const Scalar g = colp[r];
                    const Scalar h = colq[r];
                    colp[r] = g - s * (h + g * tau);
                    colq[r] = h + s * (g - h * tau);
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0;
                a(q, p) = 0;
                for (Eigen::Index r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    a(p, r) = colp[r];
                    a(q, r) = colq[r];
                }
            }
        }
        off = detail::off_diagonal_norm(a);
    }

    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values = a.diagonal();
    std::sort(values.data(), values.data() + values.size(), std::greater<Scalar>());
    return values;
}

}  // namespace equigraph
