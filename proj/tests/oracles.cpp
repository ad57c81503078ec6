#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace oracle {

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    std::vector<std::complex<double>> roots;
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = es.eigenvalues()[i];
        for (int it = 0; it < 8; ++it) {
            std::complex<double> p = c.back(), dp = 0;
            for (int k = n - 1; k >= 0; --k) {
                dp = dp * z + p;
                p = p * z + c[static_cast<std::size_t>(k)];
            }
            if (std::abs(dp) == 0) break;
            const std::complex<double> step = p / dp;
            z -= step;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
        }
        roots.push_back(z);
    }
    return roots;
}

int real_root_count(const std::vector<double>& c, double tol) {
    int count = 0;
    for (const auto& z : polynomial_roots(c))
        if (std::abs(z.imag()) < tol) ++count;
    return count;
}

int projective_real_roots(const std::array<double, 5>& q) {
    // Q(z, 1) = M z^4 + L z^3 + H z^2 + D z + A
    std::vector<double> low{q[4], q[3], q[2], q[1], q[0]};
    int at_infinity = 0;
    while (!low.empty() && low.back() == 0) {
        low.pop_back();
        ++at_infinity;
    }
    return at_infinity + real_root_count(low);
}

std::array<double, 3> symmetric_eigenvalues(const std::array<std::array<double, 3>, 3>& m) {
    Eigen::Matrix3d a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(a, Eigen::EigenvaluesOnly);
    const auto& v = es.eigenvalues();
    return {v(0), v(1), v(2)};
}

}  // namespace oracle
