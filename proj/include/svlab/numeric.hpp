#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace svlab {

/// Largest eigenvalue of a Hermitian positive semidefinite operator given by
/// its application, via power iteration: deterministic seed 42 start vector,
/// relative tolerance 1e-10, at most 1e4 iterations.
double power_iteration_psd(const std::function<std::vector<std::complex<double>>(
                               const std::vector<std::complex<double>>&)>& apply,
                           int dim, unsigned long long seed = 42,
                           double tol = 1e-10, int max_iter = 10000);

/// Operator 2-norm of a dense matrix (largest singular value).
double operator_norm(const std::vector<std::vector<std::complex<double>>>& m);

/// Extreme eigenvalues of a dense Hermitian matrix by shifted power
/// iteration; returns {min, max}.
std::pair<double, double> hermitian_eig_range(
    const std::vector<std::vector<std::complex<double>>>& m);

/// Solves (A + i*alpha) X = I for a dense real-symmetric A; returns the dense
/// inverse, via LU with partial pivoting.
std::vector<std::vector<std::complex<double>>> resolvent_inverse(
    const std::vector<std::vector<std::complex<double>>>& a, double alpha);

}  // namespace svlab
