#include "svlab/algebra.hpp"

#include <stdexcept>

namespace svlab {

std::string FormalCombination::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, p] : terms_) {
    if (!s.empty()) s += "  +  ";
    s += "(" + p.str() + ")";
    for (const auto& m : w) s += " " + m.str();
    if (w.empty()) s += " 1";
  }
  return s;
}

FormalCombination bracket(const Mode& a, const Mode& b, Sector sector) {
  require_valid(a, sector);
  require_valid(b, sector);
  if (a.kind == ModeKind::Central || b.kind == ModeKind::Central)
    return FormalCombination::zero();

  FormalCombination out;
  if (a.kind == ModeKind::L && b.kind == ModeKind::L) {
    // [L_m, L_n] = (m-n) L_{m+n} + c/12 (m^3 - m) delta_{m+n,0}
    const Rational m = rat(a.index), n = rat(b.index);
    out.add({Mode::L(a.index + b.index)}, PolyCH(m - n));
    if ((a.index + b.index).twice() == 0)
      out.add({}, PolyCH::c_times((m * m * m - m) / 12));
  } else if (a.kind == ModeKind::L && b.kind == ModeKind::G) {
    // [L_m, G_r] = (m/2 - r) G_{m+r}
    const Rational m = rat(a.index), r = rat(b.index);
    out.add({Mode::G(a.index + b.index)}, PolyCH(m / 2 - r));
  } else if (a.kind == ModeKind::G && b.kind == ModeKind::L) {
    // [G_r, L_m] = -[L_m, G_r]
    const Rational m = rat(b.index), r = rat(a.index);
    out.add({Mode::G(a.index + b.index)}, PolyCH(r - m / 2));
  } else {
    // [G_r, G_s] = 2 L_{r+s} + c/3 (r^2 - 1/4) delta_{r+s,0}
    const Rational r = rat(a.index);
    out.add({Mode::L(a.index + b.index)}, PolyCH(rat(2)));
    if ((a.index + b.index).twice() == 0)
      out.add({}, PolyCH::c_times((r * r - rat(1, 4)) / 3));
  }
  return out;
}

namespace {

// PBW position: G block first, then L block; indices ascend within a block.
bool ordered_pair(const Mode& x, const Mode& y) {
  if (x.kind == ModeKind::G && y.kind == ModeKind::L) return true;
  if (x.kind == ModeKind::L && y.kind == ModeKind::G) return false;
  if (x.kind == ModeKind::G) return x.index < y.index;  // strict: G_r G_r handled separately
  return x.index <= y.index;
}

}  // namespace

bool is_normal_ordered(const Word& word) {
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (!ordered_pair(word[i], word[i + 1])) return false;
  return true;
}

FormalCombination PbwRewriter::normal_order(const Word& word) {
  for (const auto& m : word) {
    require_valid(m, sector_);
    if (m.kind == ModeKind::Central)
      throw std::invalid_argument("central element cannot appear in a word");
  }
  if (is_normal_ordered(word)) return FormalCombination::term(word, PolyCH(rat(1)));

  if (auto it = cache_.find(word); it != cache_.end()) return it->second;

  // Rewrite at the first out-of-order (or repeated-G) adjacent pair.
  FormalCombination result;
  for (size_t i = 0;; ++i) {
    const Mode& x = word[i];
    const Mode& y = word[i + 1];
    if (ordered_pair(x, y)) continue;

    Word prefix(word.begin(), word.begin() + i);
    Word suffix(word.begin() + i + 2, word.end());

    FormalCombination middle;
    if (x.kind == ModeKind::G && x.index == y.index) {
      // G_r G_r = (1/2){G_r, G_r}
      middle = bracket(x, y, sector_) * rat(1, 2);
    } else {
      // x y = +/- y x + [x, y]
      Word swapped = prefix;
      swapped.push_back(y);
      swapped.push_back(x);
      swapped.insert(swapped.end(), suffix.begin(), suffix.end());
      const Rational sign = (x.odd() && y.odd()) ? rat(-1) : rat(1);
      result += normal_order(swapped) * sign;
      middle = bracket(x, y, sector_);
    }
    for (const auto& [w, coeff] : middle.terms()) {
      Word glued = prefix;
      glued.insert(glued.end(), w.begin(), w.end());
      glued.insert(glued.end(), suffix.begin(), suffix.end());
      result += normal_order(glued) * coeff;
    }
    break;
  }

  cache_.emplace(word, result);
  return result;
}

FormalCombination PbwRewriter::product(const FormalCombination& a,
                                       const FormalCombination& b) {
  FormalCombination out;
  for (const auto& [wa, pa] : a.terms())
    for (const auto& [wb, pb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out += normal_order(w) * (pa * pb);
    }
  return out;
}

FormalCombination normal_order(const Word& word, Sector sector) {
  PbwRewriter rw(sector);
  return rw.normal_order(word);
}

}  // namespace svlab
