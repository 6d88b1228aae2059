#include "shapesphere/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "shapesphere/errors.hpp"

namespace shapesphere {

int effective_degree(std::span<const double> c) {
    double scale = 0.0;
    for (double x : c) scale = std::max(scale, std::abs(x));
    if (!(scale > 0.0)) throw DegenerateInputError("zero polynomial has no roots");
    int n = static_cast<int>(c.size()) - 1;
    while (n > 0 && std::abs(c[n]) < 1e-14 * scale) --n;
    return n;
}

std::complex<double> evaluate_polynomial(std::span<const double> c, std::complex<double> y) {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
    return acc;
}

std::vector<std::complex<double>> polynomial_roots(std::span<const double> c) {
    const int n = effective_degree(c);
    std::vector<std::complex<double>> roots;
    if (n == 0) return roots;

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw DegenerateInputError("companion eigenvalue solver failed");

    const auto head = c.first(static_cast<std::size_t>(n) + 1);
    std::vector<double> deriv;
    for (int k = 1; k <= n; ++k) deriv.push_back(k * c[k]);

    for (int i = 0; i < n; ++i) {
        std::complex<double> r = solver.eigenvalues()[i];
        const std::complex<double> p = evaluate_polynomial(head, r);
        const std::complex<double> dp = evaluate_polynomial(deriv, r);
        if (std::abs(dp) > 0.0) {
            const std::complex<double> polished = r - p / dp;
            if (std::abs(evaluate_polynomial(head, polished)) <= std::abs(p)) r = polished;
        }
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

}  // namespace shapesphere
