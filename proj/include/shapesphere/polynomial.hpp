#pragma once

#include <complex>
#include <span>
#include <vector>

namespace shapesphere {

/// All complex roots of sum_k c[k] Y^k, from the eigenvalues of the companion
/// matrix followed by one Newton step per root. Leading coefficients below
/// 1e-14 of the largest are dropped first. Throws DegenerateInputError for the
/// zero polynomial.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> ascending);

/// Effective degree after the same leading-coefficient trimming.
int effective_degree(std::span<const double> ascending);

std::complex<double> evaluate_polynomial(std::span<const double> ascending, std::complex<double> y);

}  // namespace shapesphere
