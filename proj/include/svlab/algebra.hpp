#pragma once

#include <map>
#include <string>
#include <vector>

#include "svlab/mode.hpp"
#include "svlab/poly.hpp"

namespace svlab {

/// Linear combination of normal-ordered words with PolyCH coefficients.
/// Zero coefficients are never stored.
class FormalCombination {
public:
  FormalCombination() = default;

  static FormalCombination zero() { return {}; }
  static FormalCombination term(Word w, PolyCH coeff) {
    FormalCombination f;
    f.add(std::move(w), std::move(coeff));
    return f;
  }

  void add(Word w, PolyCH coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FormalCombination& operator+=(const FormalCombination& o) {
    for (const auto& [w, p] : o.terms_) add(w, p);
    return *this;
  }
  FormalCombination operator-() const {
    FormalCombination r;
    for (const auto& [w, p] : terms_) r.terms_[w] = -p;
    return r;
  }
  FormalCombination operator*(const Rational& s) const {
    FormalCombination r;
    if (s == 0) return r;
    for (const auto& [w, p] : terms_) r.terms_[w] = p * s;
    return r;
  }
  FormalCombination operator*(const PolyCH& s) const {
    FormalCombination r;
    for (const auto& [w, p] : terms_) r.add(w, p * s);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const FormalCombination& o) const { return terms_ == o.terms_; }

  const std::map<Word, PolyCH>& terms() const { return terms_; }

  std::string str() const;

private:
  std::map<Word, PolyCH> terms_;
};

/// Graded bracket [a,b] from the defining relations: commutator unless both
/// arguments are odd, anticommutator for two G modes. Central terms appear
/// as multiples of the empty word with coefficient linear in c. Central
/// inputs bracket to zero.
FormalCombination bracket(const Mode& a, const Mode& b, Sector sector);

/// PBW rewriting engine built from the bracket alone. The normal form puts
/// all G modes before all L modes; within each kind indices ascend left to
/// right (L weakly, G strictly; a repeated G_r collapses to half its
/// anticommutator). Keeps a cache across calls.
class PbwRewriter {
public:
  explicit PbwRewriter(Sector sector) : sector_(sector) {}

  FormalCombination normal_order(const Word& word);

  /// Product of two combinations, re-normal-ordered.
  FormalCombination product(const FormalCombination& a, const FormalCombination& b);

  Sector sector() const { return sector_; }

private:
  Sector sector_;
  std::map<Word, FormalCombination> cache_;
};

/// One-shot convenience over a throwaway rewriter.
FormalCombination normal_order(const Word& word, Sector sector);

/// True if the word is in PBW normal order (no rewriting applicable).
bool is_normal_ordered(const Word& word);

}  // namespace svlab
