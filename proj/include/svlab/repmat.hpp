#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svlab/blockop.hpp"
#include "svlab/verma.hpp"

namespace svlab {

using ExactOp = BlockOp<CRat>;
using FloatOp = BlockOp<std::complex<double>>;

/// Matrix of a mode on the orthogonalized quotient; raisingDepth
/// max(0, -index). Columns whose image pokes above the cutoff are the
/// compression of the true action (safe-window semantics downstream).
ExactOp build_operator(const QuotientModule& mod, const Mode& m);

/// Exact-backend operator rescaled to the orthonormal basis.
FloatOp to_float(const ExactOp& op);

/// Identity (optionally scaled).
ExactOp identity_op(const QuotientModule& mod, const CRat& scale = CRat(Rational(1)));
FloatOp identity_op_f(const QuotientModule& mod, std::complex<double> scale = 1.0);

struct RelationResidual {
  bool window_empty = false;
  HalfInt max_input_level;
  bool exact_zero = false;
  double max_abs = 0.0;
};

/// Residual of the defining bracket relation for a pair of modes, restricted
/// to columns of level <= cutoff - (|index a| + |index b|). Exactly zero in
/// exact arithmetic on a nonempty window.
RelationResidual relation_residual(const QuotientModule& mod, const Mode& a, const Mode& b);

/// Q = G_0 in the Ramond sector. Level-preserving and odd; Q^2 = L_0 - c/24
/// exactly on the full truncation.
ExactOp supercharge(const QuotientModule& mod);

/// Exact residual of Q^2 - (L_0 - c/24) over the whole truncation.
double supercharge_square_residual(const QuotientModule& mod, bool* exact_zero = nullptr);

struct HeatTraceResult {
  std::map<HalfInt, int> multiplicities;
  double partial_sum = 0.0;            // with the sector's natural shift
  double partial_sum_unshifted = 0.0;  // H = L_0
  double tail_estimate = 0.0;          // geometric upper-estimate bracket, heuristic
};

HeatTraceResult heat_trace(const QuotientModule& mod, double beta);

struct GradedIndexResult {
  std::map<HalfInt, std::pair<int, int>> even_odd;  // per-level quotient dims
  bool exact = false;        // every level > 0 cancels, so the sum is an integer
  long exact_value = 0;      // meaningful when exact
  double value = 0.0;        // float evaluation of the graded heat sum
};

/// Tr(Gamma e^{-beta Q^2}) at truncation. Requires the graded case h = c/24;
/// parity_flip swaps the grading of the component (direct-sum bookkeeping).
GradedIndexResult graded_index(const QuotientModule& mod, double beta,
                               bool parity_flip = false);

/// Direct sum of graded components: traces and indices add.
struct DirectSumComponent {
  ModuleSpec spec;
  bool parity_flip = false;
};
GradedIndexResult graded_index_sum(const std::vector<DirectSumComponent>& components,
                                   double beta, HalfInt cutoff);

struct EnergyBoundEntry {
  Mode mode;
  bool window_empty = false;
  double computed_norm = 0.0;
  std::optional<double> paper_bound;  // sqrt(2 + c r^2 / 3) for G modes
  std::optional<double> minimal_m;    // smallest admissible M for L modes
  bool within_bound = true;
};

/// Per-mode energy-bound report: for G_r the norm of G_r (1+L_0)^{-1/2} on
/// the safe window against the closed-form bound; for L_m the minimal M at
/// truncation (the bound asserts existence only).
std::vector<EnergyBoundEntry> energy_bound_report(const QuotientModule& mod,
                                                  HalfInt max_l_index, HalfInt max_g_index,
                                                  double float_tol = 1e-9);

}  // namespace svlab
