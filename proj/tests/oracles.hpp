#pragma once

// Test-side oracles, deliberately independent of the library's rewriting
// cache and action recursion. Everything here works by repeated bracket
// moves on raw words.

#include <cstdint>
#include <map>
#include <vector>

#include "svlab/algebra.hpp"
#include "svlab/basis.hpp"
#include "svlab/poly.hpp"

namespace svlab::oracle {

/// <h| word |h> as a polynomial in (c, h). Brute force: sort the word by
/// ascending mode index one adjacent swap at a time, inserting brackets;
/// negative leading modes kill <h|, positive trailing modes kill |h>, L_0
/// strips off as h, adjacent equal odd modes contract to half their
/// anticommutator. No caching, no PBW normal form.
inline PolyCH vev(const Word& word, Sector sector) {
  if (word.empty()) return PolyCH(rat(1));

  size_t odd_count = 0;
  for (const auto& m : word)
    if (m.odd()) ++odd_count;
  if (odd_count % 2 == 1) return PolyCH();  // graded form: odd words have no vev

  if (word.front().index < HalfInt()) return PolyCH();
  if (word.back().index > HalfInt()) return PolyCH();
  if (word.front().kind == ModeKind::L && word.front().index == HalfInt()) {
    Word rest(word.begin() + 1, word.end());
    return PolyCH::h_times(rat(1)) * vev(rest, sector);
  }
  if (word.back().kind == ModeKind::L && word.back().index == HalfInt()) {
    Word rest(word.begin(), word.end() - 1);
    return PolyCH::h_times(rat(1)) * vev(rest, sector);
  }

  // Adjacent equal odd pair: G_r G_r = (1/2){G_r, G_r}.
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i].odd() && word[i] == word[i + 1]) {
      Word prefix(word.begin(), word.begin() + i);
      Word tail(word.begin() + i + 2, word.end());
      PolyCH out;
      const FormalCombination contraction = bracket(word[i], word[i], sector);
      for (const auto& [w, coeff] : contraction.terms()) {
        Word replaced = prefix;
        replaced.insert(replaced.end(), w.begin(), w.end());
        replaced.insert(replaced.end(), tail.begin(), tail.end());
        out += vev(replaced, sector) * (coeff * rat(1, 2));
      }
      return out;
    }
  }

  // First adjacent inversion under (index, then L before G): a b = sign b a
  // + [a, b]. The kind tie-break flushes L_0 out of G_0 runs.
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    const Mode& a = word[i];
    const Mode& b = word[i + 1];
    const bool inverted =
        a.index > b.index ||
        (a.index == b.index && a.kind == ModeKind::G && b.kind == ModeKind::L);
    if (!inverted) continue;
    Word prefix(word.begin(), word.begin() + i);
    Word tail(word.begin() + i + 2, word.end());

    Word swapped = prefix;
    swapped.push_back(b);
    swapped.push_back(a);
    swapped.insert(swapped.end(), tail.begin(), tail.end());
    const Rational sign = (a.odd() && b.odd()) ? rat(-1) : rat(1);
    PolyCH out = vev(swapped, sector) * sign;

    const FormalCombination br = bracket(a, b, sector);
    for (const auto& [w, coeff] : br.terms()) {
      Word replaced = prefix;
      replaced.insert(replaced.end(), w.begin(), w.end());
      replaced.insert(replaced.end(), tail.begin(), tail.end());
      out += vev(replaced, sector) * coeff;
    }
    return out;
  }

  // Ascending, no annihilators at either end, no L_0, no equal odd pairs:
  // only mixed G_0 / L-free words could land here, and those were consumed
  // above. Nothing is left to contribute.
  return PolyCH();
}

/// Adjoint word of a creation monomial: reversed order, negated indices.
inline Word adjoint_word(const PBWMonomial& m) {
  Word w = m.word();
  Word adj;
  for (auto it = w.rbegin(); it != w.rend(); ++it) adj.push_back(it->adjoint());
  return adj;
}

/// Gram entry <u, v> as a polynomial in (c, h), via the vev oracle.
inline PolyCH gram_entry(const PBWMonomial& u, const PBWMonomial& v, Sector sector) {
  Word w = adjoint_word(u);
  Word wv = v.word();
  w.insert(w.end(), wv.begin(), wv.end());
  return vev(w, sector);
}

/// Level dimensions by pure partition counting: L parts are integers >= 1
/// with multiplicity, G parts are distinct (half-odd >= 1/2 in NS; integers
/// >= 1 plus an optional G_0 factor in Ramond). Works in twice-levels.
inline std::map<std::int64_t, long> level_dims_oracle(Sector sector, std::int64_t max_twice_level) {
  std::vector<long> bose(max_twice_level + 1, 0);
  bose[0] = 1;
  for (std::int64_t part = 2; part <= max_twice_level; part += 2)  // L_{-n}: twice-level 2n
    for (std::int64_t lv = part; lv <= max_twice_level; ++lv) bose[lv] += bose[lv - part];

  std::vector<long> full = bose;
  if (sector == Sector::NeveuSchwarz) {
    for (std::int64_t part = 1; part <= max_twice_level; part += 2)  // G_{-r}: twice-level 2r odd
      for (std::int64_t lv = max_twice_level; lv >= part; --lv) full[lv] += full[lv - part];
  } else {
    for (std::int64_t part = 2; part <= max_twice_level; part += 2)
      for (std::int64_t lv = max_twice_level; lv >= part; --lv) full[lv] += full[lv - part];
    for (auto& x : full) x *= 2;  // optional G_0
  }

  std::map<std::int64_t, long> out;
  const std::int64_t step = sector == Sector::NeveuSchwarz ? 1 : 2;
  for (std::int64_t lv = 0; lv <= max_twice_level; lv += step) out[lv] = full[lv];
  return out;
}

}  // namespace svlab::oracle
