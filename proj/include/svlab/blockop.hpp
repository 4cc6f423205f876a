#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "svlab/cplx.hpp"
#include "svlab/verma.hpp"

namespace svlab {

template <class T>
class DenseMat {
public:
  DenseMat() = default;
  DenseMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, T{}) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const T& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

inline double scalar_abs(const CRat& x) { return x.abs(); }
inline double scalar_abs(const std::complex<double>& x) { return std::abs(x); }
inline bool scalar_is_zero(const CRat& x) { return x.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }
inline CRat scalar_conj(const CRat& x) { return x.conj(); }
inline std::complex<double> scalar_conj(const std::complex<double>& x) { return std::conj(x); }

/// Operator on the truncated quotient module, stored blockwise over
/// (level, parity) slices. The exact backend (CRat) keeps coordinates in the
/// diagonalized-but-unnormalized quotient basis, so adjoints twist by the
/// block diagonals; the float backend (complex<double>) lives in the
/// orthonormalized basis where the adjoint is the conjugate transpose.
template <class T>
class BlockOp {
public:
  BlockOp() = default;
  BlockOp(const QuotientModule* mod, std::optional<Parity> parity, HalfInt raising_depth,
          std::string label)
      : mod_(mod), parity_(parity), raising_depth_(raising_depth), label_(std::move(label)) {}

  const QuotientModule* module() const { return mod_; }
  std::optional<Parity> parity() const { return parity_; }
  HalfInt raising_depth() const { return raising_depth_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  const std::map<std::pair<int, int>, DenseMat<T>>& blocks() const { return blocks_; }

  DenseMat<T>& block(int tgt, int src) {
    auto it = blocks_.find({tgt, src});
    if (it != blocks_.end()) return it->second;
    DenseMat<T> m(mod_->block(tgt).rank, mod_->block(src).rank);
    return blocks_.emplace(std::make_pair(tgt, src), std::move(m)).first->second;
  }

  void prune() {
    for (auto it = blocks_.begin(); it != blocks_.end();) {
      bool all_zero = true;
      for (int i = 0; i < it->second.rows() && all_zero; ++i)
        for (int j = 0; j < it->second.cols(); ++j)
          if (!scalar_is_zero(it->second.at(i, j))) {
            all_zero = false;
            break;
          }
      it = all_zero ? blocks_.erase(it) : ++it;
    }
  }

  BlockOp operator+(const BlockOp& o) const {
    BlockOp r = *this;
    r.parity_ = (parity_ && o.parity_ && *parity_ == *o.parity_) ? parity_ : std::nullopt;
    r.raising_depth_ = std::max(raising_depth_, o.raising_depth_);
    r.label_ = "(" + label_ + " + " + o.label_ + ")";
    for (const auto& [key, m] : o.blocks_) {
      DenseMat<T>& dst = r.block(key.first, key.second);
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) dst.at(i, j) = dst.at(i, j) + m.at(i, j);
    }
    r.prune();
    return r;
  }

  BlockOp operator-(const BlockOp& o) const { return *this + o.scaled(T(-1), o.label_); }

  BlockOp scaled(const T& s, const std::string& new_label = "") const {
    BlockOp r = *this;
    if (!new_label.empty()) r.label_ = new_label;
    for (auto& [key, m] : r.blocks_)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * s;
    r.prune();
    return r;
  }

  /// this * o (apply o first).
  BlockOp mul(const BlockOp& o) const {
    BlockOp r(mod_, std::nullopt, raising_depth_ + o.raising_depth_,
              label_ + "*" + o.label_);
    if (parity_ && o.parity_)
      r.parity_ = (*parity_ == *o.parity_) ? Parity::Even : Parity::Odd;
    for (const auto& [kb, mb] : o.blocks_) {
      for (const auto& [ka, ma] : blocks_) {
        if (ka.second != kb.first) continue;
        DenseMat<T>& dst = r.block(ka.first, kb.second);
        for (int i = 0; i < ma.rows(); ++i)
          for (int k = 0; k < ma.cols(); ++k) {
            const T& a = ma.at(i, k);
            if (scalar_is_zero(a)) continue;
            for (int j = 0; j < mb.cols(); ++j) {
              const T& b = mb.at(k, j);
              if (!scalar_is_zero(b)) dst.at(i, j) = dst.at(i, j) + a * b;
            }
          }
      }
    }
    r.prune();
    return r;
  }

  /// Hilbert-space adjoint.
  BlockOp adjoint() const {
    BlockOp r(mod_, parity_, raising_depth_, label_ + "*adj");
    HalfInt depth;
    for (const auto& [key, m] : blocks_) {
      const auto& tb = mod_->block(key.first);
      const auto& sb = mod_->block(key.second);
      DenseMat<T>& dst = r.block(key.second, key.first);
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
          if constexpr (std::is_same_v<T, CRat>) {
            dst.at(j, i) = scalar_conj(m.at(i, j)) * CRat(tb.diag[size_t(i)] / sb.diag[size_t(j)]);
          } else {
            dst.at(j, i) = scalar_conj(m.at(i, j));
          }
        }
      const HalfInt d = sb.level - tb.level;
      if (d > depth) depth = d;
    }
    r.raising_depth_ = depth;
    return r;
  }

  /// Conjugation by the grading: gamma(a) = Gamma a Gamma.
  BlockOp conjugated_by_grading() const {
    BlockOp r = *this;
    r.label_ = "gamma(" + label_ + ")";
    for (auto& [key, m] : r.blocks_) {
      const int sign = (mod_->block(key.first).parity == mod_->block(key.second).parity) ? 1 : -1;
      if (sign == 1) continue;
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * T(-1);
    }
    return r;
  }

  /// Drops every block whose source level exceeds max_src_level.
  BlockOp restricted(HalfInt max_src_level) const {
    BlockOp r(mod_, parity_, raising_depth_, label_ + "|win");
    for (const auto& [key, m] : blocks_)
      if (mod_->block(key.second).level <= max_src_level) r.blocks_[key] = m;
    return r;
  }

  bool is_zero() const {
    for (const auto& [key, m] : blocks_)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          if (!scalar_is_zero(m.at(i, j))) return false;
    return true;
  }

  double max_abs() const {
    double mx = 0;
    for (const auto& [key, m] : blocks_)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) mx = std::max(mx, scalar_abs(m.at(i, j)));
    return mx;
  }

private:
  const QuotientModule* mod_ = nullptr;
  std::optional<Parity> parity_;
  HalfInt raising_depth_;
  std::string label_;
  std::map<std::pair<int, int>, DenseMat<T>> blocks_;
};

/// Graded bracket of parity-homogeneous operators: anticommutator when both
/// are odd, commutator otherwise.
template <class T>
BlockOp<T> graded_bracket(const BlockOp<T>& a, const BlockOp<T>& b) {
  if (!a.parity() || !b.parity())
    throw std::invalid_argument("graded_bracket needs parity-homogeneous operators");
  const bool both_odd = *a.parity() == Parity::Odd && *b.parity() == Parity::Odd;
  BlockOp<T> ab = a.mul(b);
  BlockOp<T> ba = b.mul(a);
  BlockOp<T> r = both_odd ? ab + ba : ab - ba;
  r.set_label("[" + a.label() + "," + b.label() + "]");
  return r;
}

/// Flat indexing of the quotient basis, block by block.
class FlatIndex {
public:
  explicit FlatIndex(const QuotientModule& mod) : mod_(&mod) {
    offsets_.reserve(mod.blocks().size());
    int off = 0;
    for (const auto& b : mod.blocks()) {
      offsets_.push_back(off);
      off += b.rank;
    }
    dim_ = off;
  }

  int dim() const { return dim_; }
  int offset(int block_id) const { return offsets_[size_t(block_id)]; }

  /// Energies h + level - shift, one entry per flat basis vector.
  std::vector<double> energies(double shift) const {
    std::vector<double> e(static_cast<size_t>(dim_));
    const double h = to_double(mod_->spec().h);
    for (size_t b = 0; b < mod_->blocks().size(); ++b) {
      const auto& blk = mod_->blocks()[b];
      for (int a = 0; a < blk.rank; ++a)
        e[size_t(offsets_[b] + a)] = h + blk.level.to_double() - shift;
    }
    return e;
  }

  /// +/-1 per flat basis vector.
  std::vector<int> parities() const {
    std::vector<int> p(static_cast<size_t>(dim_));
    for (size_t b = 0; b < mod_->blocks().size(); ++b) {
      const auto& blk = mod_->blocks()[b];
      for (int a = 0; a < blk.rank; ++a)
        p[size_t(offsets_[b] + a)] = blk.parity == Parity::Even ? 1 : -1;
    }
    return p;
  }

private:
  const QuotientModule* mod_;
  std::vector<int> offsets_;
  int dim_ = 0;
};

/// Flattens a float block operator to a dense matrix over the flat basis.
/// Window restrictions are applied beforehand via BlockOp::restricted.
DenseMat<std::complex<double>> flatten(const BlockOp<std::complex<double>>& op,
                                       const FlatIndex& idx);

/// Block-sparse matrix-vector product over the flat basis.
std::vector<std::complex<double>> apply_op(const BlockOp<std::complex<double>>& op,
                                           const FlatIndex& idx,
                                           const std::vector<std::complex<double>>& v);

/// Operator 2-norm of a float block operator via power iteration on A*A.
double block_op_norm(const BlockOp<std::complex<double>>& op, const FlatIndex& idx);

}  // namespace svlab
