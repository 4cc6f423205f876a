#include "svlab/numeric.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace svlab {

namespace {

using CVec = std::vector<std::complex<double>>;
using CMat = std::vector<std::vector<std::complex<double>>>;

double norm2(const CVec& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

double power_iteration_psd(const std::function<CVec(const CVec&)>& apply, int dim,
                           unsigned long long seed, double tol, int max_iter) {
  if (dim == 0) return 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CVec v(static_cast<size_t>(dim));
  for (auto& x : v) x = {u(rng), u(rng)};
  double n = norm2(v);
  for (auto& x : v) x /= n;

  double lambda = 0;
  for (int it = 0; it < max_iter; ++it) {
    CVec w = apply(v);
    const double wn = norm2(w);
    if (wn == 0) return 0.0;
    double rayleigh = 0;
    for (size_t i = 0; i < v.size(); ++i) rayleigh += (std::conj(v[i]) * w[i]).real();
    for (auto& x : w) x /= wn;
    v = std::move(w);
    if (it > 0 && std::abs(rayleigh - lambda) <= tol * std::max(1.0, std::abs(rayleigh))) {
      return rayleigh;
    }
    lambda = rayleigh;
  }
  return lambda;
}

double operator_norm(const CMat& m) {
  if (m.empty() || m[0].empty()) return 0.0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  auto apply = [&](const CVec& v) {
    CVec mv(static_cast<size_t>(rows), std::complex<double>(0, 0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) mv[size_t(i)] += m[size_t(i)][size_t(j)] * v[size_t(j)];
    CVec out(static_cast<size_t>(cols), std::complex<double>(0, 0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out[size_t(j)] += std::conj(m[size_t(i)][size_t(j)]) * mv[size_t(i)];
    return out;
  };
  const double lambda = power_iteration_psd(apply, cols);
  return std::sqrt(std::max(0.0, lambda));
}

std::pair<double, double> hermitian_eig_range(const CMat& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return {0.0, 0.0};
  auto apply_shifted = [&](double shift, int sign) {
    return [&m, shift, sign, n](const CVec& v) {
      CVec out(static_cast<size_t>(n), std::complex<double>(0, 0));
      for (int i = 0; i < n; ++i) {
        std::complex<double> acc = 0;
        for (int j = 0; j < n; ++j) acc += m[size_t(i)][size_t(j)] * v[size_t(j)];
        out[size_t(i)] = double(sign) * acc + shift * v[size_t(i)];
      }
      return out;
    };
  };
  // Spectral radius bound, then shifted iterations pick out both ends.
  double radius = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) row += std::abs(m[size_t(i)][size_t(j)]);
    radius = std::max(radius, row);
  }
  const double hi = power_iteration_psd(apply_shifted(radius, +1), n) - radius;
  const double lo = radius - power_iteration_psd(apply_shifted(radius, -1), n);
  return {lo, hi};
}

CMat resolvent_inverse(const CMat& a, double alpha) {
  const int n = static_cast<int>(a.size());
  CMat lu = a;
  for (int i = 0; i < n; ++i) lu[size_t(i)][size_t(i)] += std::complex<double>(0, alpha);

  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(lu[size_t(i)][size_t(k)]) > std::abs(lu[size_t(p)][size_t(k)])) p = i;
    if (std::abs(lu[size_t(p)][size_t(k)]) == 0.0)
      throw std::runtime_error("resolvent_inverse: singular matrix");
    std::swap(lu[size_t(p)], lu[size_t(k)]);
    std::swap(perm[size_t(p)], perm[size_t(k)]);
    for (int i = k + 1; i < n; ++i) {
      lu[size_t(i)][size_t(k)] /= lu[size_t(k)][size_t(k)];
      const auto f = lu[size_t(i)][size_t(k)];
      if (f == std::complex<double>(0, 0)) continue;
      for (int j = k + 1; j < n; ++j) lu[size_t(i)][size_t(j)] -= f * lu[size_t(k)][size_t(j)];
    }
  }

  CMat inv(static_cast<size_t>(n), CVec(static_cast<size_t>(n), std::complex<double>(0, 0)));
  for (int col = 0; col < n; ++col) {
    CVec x(static_cast<size_t>(n), std::complex<double>(0, 0));
    for (int i = 0; i < n; ++i) x[size_t(i)] = perm[size_t(i)] == col ? 1.0 : 0.0;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) x[size_t(i)] -= lu[size_t(i)][size_t(j)] * x[size_t(j)];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) x[size_t(i)] -= lu[size_t(i)][size_t(j)] * x[size_t(j)];
      x[size_t(i)] /= lu[size_t(i)][size_t(i)];
    }
    for (int i = 0; i < n; ++i) inv[size_t(i)][size_t(col)] = x[size_t(i)];
  }
  return inv;
}

}  // namespace svlab
