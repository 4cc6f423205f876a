#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "svlab/cplx.hpp"
#include "svlab/mode.hpp"

namespace svlab {

/// Frequency -> coefficient tables. Exact maps carry trig polynomials
/// (integer frequencies, or half-odd ones for the Neveu-Schwarz G grid);
/// float maps come out of quadrature.
using ModeMapQ = std::map<HalfInt, CRat>;
using ModeMapF = std::map<HalfInt, std::complex<double>>;

ModeMapQ conv(const ModeMapQ& a, const ModeMapQ& b);
ModeMapF conv(const ModeMapF& a, const ModeMapF& b);

/// d/dtheta on the circle: multiplies each coefficient by i*frequency.
ModeMapQ derivative_map(const ModeMapQ& a);
ModeMapF derivative_map(const ModeMapF& a);

/// Integral over the circle in the convention of the central terms:
/// int_{-pi}^{pi} f(e^{i theta}) d theta = 2 pi * (coefficient at 0).
CRat circle_integral(const ModeMapQ& a);
std::complex<double> circle_integral(const ModeMapF& a);

HalfInt max_frequency(const ModeMapQ& a);
HalfInt max_frequency(const ModeMapF& a);

/// Smooth test function on the circle: an exact trigonometric polynomial or
/// a numerically integrated bump with support metadata.
class TestFunction {
public:
  enum class Kind { TrigPoly, Bump };

  static TestFunction trig(ModeMapQ coeffs, std::string name = "");

  /// Smooth compactly supported function given by evaluators; support is the
  /// open arc (lo, hi) within (-pi, pi).
  static TestFunction bump(std::function<double(double)> eval,
                           std::function<double(double)> deriv, double lo, double hi,
                           std::string name = "");

  /// The standard bump exp(-1/((hi-t)(t-lo))) on (lo, hi).
  static TestFunction standard_bump(double lo, double hi);

  /// Smooth plateau: 0 outside (lo, hi), exactly 1 on [flat_lo, flat_hi],
  /// smoothstep transitions in between.
  static TestFunction flat_bump(double lo, double flat_lo, double flat_hi, double hi);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool is_real() const { return real_; }
  const ModeMapQ& coeffs() const;  // TrigPoly only
  std::optional<std::pair<double, double>> support() const { return support_; }

  double eval(double theta) const;
  double deriv(double theta) const;

  /// True if all stored frequencies are integers (TrigPoly only).
  bool integer_frequencies() const;
  /// True if all stored frequencies are half-odd integers (TrigPoly only).
  bool half_odd_frequencies() const;

  /// Support admissibility for Neveu-Schwarz G-smearing: the closed support
  /// must avoid -1. Bumps carry their arc; an exact trig polynomial is
  /// admissible exactly when its frequencies are half-odd (it then lives on
  /// the cut circle).
  bool ns_g_admissible() const;

private:
  Kind kind_ = Kind::TrigPoly;
  std::string name_;
  bool real_ = true;
  ModeMapQ coeffs_;
  std::function<double(double)> eval_, deriv_;
  std::optional<std::pair<double, double>> support_;
};

enum class FieldKind { L, G };

/// Frequency grid for a smeared field: integers for L (both sectors) and
/// Ramond G; half-odd integers for NS G.
struct ModeGrid {
  bool half_odd = false;
  HalfInt cutoff;  // frequencies nu with |nu| <= cutoff
};

ModeGrid field_grid(FieldKind kind, Sector sector, HalfInt mode_cutoff);

/// Fourier coefficients f_hat(nu) = (1/2pi) int f(e^{i theta}) e^{-i nu theta} d theta
/// on the grid. Exact table lookup for trig polynomials (the table must live
/// on the requested grid); adaptive quadrature to 1e-12 for bumps. NS
/// G-smearing of a function whose support reaches -1 is rejected.
ModeMapF fourier_modes(const TestFunction& f, const ModeGrid& grid);

/// Exact coefficients for a trig polynomial on a matching grid.
ModeMapQ exact_modes(const TestFunction& f, FieldKind kind, Sector sector);

/// Adaptive Gauss-Kronrod integral of a complex-valued integrand.
std::complex<double> integrate_gk(const std::function<std::complex<double>(double)>& fn,
                                  double a, double b, double abs_tol = 1e-12);

}  // namespace svlab
