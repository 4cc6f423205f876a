#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svlab/algebra.hpp"
#include "svlab/basis.hpp"
#include "svlab/rational.hpp"

namespace svlab {

struct ModuleSpec {
  Sector sector;
  Rational c;
  Rational h;
  HalfInt cutoff;
};

/// Dense exact-rational matrix. Small and unapologetically simple; all the
/// heavy structure lives in the level grading, not here.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Rational(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  bool is_symmetric() const;
  RatMatrix mul(const RatMatrix& o) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Result of acting with a mode on a basis monomial: exact coordinates over
/// PBW monomials, plus a flag when components above the cutoff were cut.
struct ActResult {
  std::map<PBWMonomial, Rational> terms;
  bool truncated = false;
};

/// PSD analysis of one symmetric rational matrix: congruence transform U with
/// U^T G U = diag(d, 0, ..., 0), d > 0 on the first `rank` entries. When the
/// form is indefinite, `witness` holds a vector of negative norm and `psd` is
/// false (rank/U then cover only the steps completed).
struct LdltResult {
  bool psd = true;
  int rank = 0;
  RatMatrix transform;               // n x n, columns are the new basis vectors
  std::vector<Rational> diag;        // first `rank` entries, positive
  std::optional<std::vector<Rational>> witness;
  std::optional<Rational> witness_norm2;
};

LdltResult ldlt_psd(const RatMatrix& gram);

/// Level-truncated lowest-weight module with exact generator action and
/// Shapovalov forms. Adjoints follow L_m* = L_{-m}, G_r* = G_{-r}; the
/// lowest-weight vector has norm 1 and is even.
class VermaModule {
public:
  explicit VermaModule(ModuleSpec spec);

  const ModuleSpec& spec() const { return spec_; }
  const LevelBasis& basis() const { return basis_; }

  /// Exact coordinates of m . v. Components above the cutoff are dropped and
  /// flagged, never silently lost.
  const ActResult& act(const Mode& m, const PBWMonomial& v);

  /// Applies a mode to a coordinate vector over a fixed level (columns of
  /// operators are built from this).
  std::map<PBWMonomial, Rational> act(const Mode& m,
                                      const std::map<PBWMonomial, Rational>& vec,
                                      bool* truncated = nullptr);

  /// Exact Gram matrix of the level; symmetric by construction.
  const RatMatrix& gram_matrix(HalfInt level);

private:
  ActResult act_uncached(const Mode& m, const PBWMonomial& v);
  void add_scaled(std::map<PBWMonomial, Rational>& into, const ActResult& from,
                  const Rational& scale, bool* truncated);

  ModuleSpec spec_;
  LevelBasis basis_;
  std::map<std::pair<Mode, PBWMonomial>, ActResult> act_cache_;
  std::map<HalfInt, RatMatrix> gram_cache_;
};

/// Per-level-and-parity slice of the orthogonalized quotient.
struct QuotientBlock {
  HalfInt level;
  Parity parity;
  std::vector<PBWMonomial> monomials;   // the level's monomials of this parity
  std::vector<int> monomial_pos;        // their positions in the full level basis
  int rank = 0;                         // quotient dimension of the slice
  RatMatrix basis_vectors;              // monomials x rank, G-orthogonal columns
  std::vector<Rational> diag;           // <e_a, e_a> for each quotient vector
  RatMatrix projector;                  // rank x monomials: quotient coordinates
};

struct UnitarityVerdict {
  HalfInt level;
  bool psd = true;
  int rank = 0;
  int dim = 0;
  std::optional<std::string> witness_desc;
  std::optional<Rational> witness_norm2;
  std::optional<std::vector<Rational>> witness;  // coordinates over the level basis
};

/// Exact PSD verdict per level (no floating point): pivoted rational
/// elimination, witness vector returned when indefinite.
std::vector<UnitarityVerdict> unitarity_scan(VermaModule& module);

class NotUnitaryError : public std::runtime_error {
public:
  NotUnitaryError(HalfInt level, std::string msg)
      : std::runtime_error(std::move(msg)), level(level) {}
  HalfInt level;
};

/// The irreducible quotient: per (level, parity), a basis of the quotient by
/// the Gram radical together with the diagonalized form. Throws
/// NotUnitaryError when some level is indefinite; PSD-singular levels
/// proceed with the rank deficiency recorded.
class QuotientModule {
public:
  explicit QuotientModule(ModuleSpec spec);

  const ModuleSpec& spec() const { return spec_; }
  VermaModule& verma() { return verma_; }
  const std::vector<QuotientBlock>& blocks() const { return blocks_; }
  const QuotientBlock& block(int id) const { return blocks_[size_t(id)]; }
  int block_id(HalfInt level, Parity parity) const;  // -1 if absent

  int total_dim() const { return total_dim_; }
  std::map<HalfInt, int> quotient_dims() const;
  std::map<HalfInt, std::pair<int, int>> even_odd_dims() const;

private:
  ModuleSpec spec_;
  VermaModule verma_;
  std::vector<QuotientBlock> blocks_;
  std::map<std::pair<std::int64_t, int>, int> block_ids_;
  int total_dim_ = 0;
};

}  // namespace svlab
