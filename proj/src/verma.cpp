#include "svlab/verma.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace svlab {

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::mul(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::logic_error("RatMatrix::mul shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

LdltResult ldlt_psd(const RatMatrix& gram) {
  const int n = gram.rows();
  assert(gram.is_symmetric());
  RatMatrix m = gram;
  RatMatrix u(n, n);
  for (int i = 0; i < n; ++i) u.at(i, i) = 1;

  std::vector<bool> done(n, false);
  std::vector<int> pivots;
  LdltResult res;

  auto column_of = [&](int j) {
    std::vector<Rational> col(n);
    for (int i = 0; i < n; ++i) col[i] = u.at(i, j);
    return col;
  };

  for (;;) {
    int p = -1;
    for (int j = 0; j < n; ++j) {
      if (done[j] || m.at(j, j) == 0) continue;
      if (p < 0 || abs(m.at(j, j)) > abs(m.at(p, p))) p = j;
    }
    if (p < 0) {
      // All remaining diagonal entries vanish. Any surviving off-diagonal
      // entry makes a [[0,b],[b,0]] block, which is indefinite.
      for (int j = 0; j < n; ++j) {
        if (done[j]) continue;
        for (int k = j + 1; k < n; ++k) {
          if (done[k] || m.at(j, k) == 0) continue;
          const int sgn = m.at(j, k) > 0 ? 1 : -1;
          std::vector<Rational> w(n);
          for (int i = 0; i < n; ++i) w[i] = u.at(i, j) - Rational(sgn) * u.at(i, k);
          res.psd = false;
          res.witness = std::move(w);
          res.witness_norm2 = Rational(-2) * abs(m.at(j, k));
          return res;
        }
      }
      break;  // remaining block is zero: done
    }
    const Rational pivot = m.at(p, p);
    if (pivot < 0) {
      res.psd = false;
      res.witness = column_of(p);
      res.witness_norm2 = pivot;
      return res;
    }
    done[p] = true;
    pivots.push_back(p);
    res.diag.push_back(pivot);

    std::vector<Rational> coupling(n);
    for (int j = 0; j < n; ++j)
      if (!done[j]) coupling[j] = m.at(j, p);
    for (int j = 0; j < n; ++j) {
      if (done[j] || coupling[j] == 0) continue;
      const Rational f = coupling[j] / pivot;
      for (int i = 0; i < n; ++i)
        if (u.at(i, p) != 0) u.at(i, j) -= f * u.at(i, p);
      for (int k = 0; k < n; ++k) {
        if (done[k]) continue;
        if (coupling[k] != 0) m.at(j, k) -= f * coupling[k];
      }
      m.at(j, p) = 0;
      m.at(p, j) = 0;
    }
  }

  // Column order: pivots first (quotient), untouched-null columns last.
  res.rank = static_cast<int>(pivots.size());
  res.transform = RatMatrix(n, n);
  int col = 0;
  for (int p : pivots) {
    for (int i = 0; i < n; ++i) res.transform.at(i, col) = u.at(i, p);
    ++col;
  }
  for (int j = 0; j < n; ++j) {
    if (done[j]) continue;
    for (int i = 0; i < n; ++i) res.transform.at(i, col) = u.at(i, j);
    ++col;
  }
  return res;
}

VermaModule::VermaModule(ModuleSpec spec)
    : spec_(std::move(spec)), basis_(spec_.sector, spec_.cutoff) {}

namespace {

bool is_creation(const Mode& m, Sector sector) {
  if (m.index < HalfInt()) return true;
  return m.kind == ModeKind::G && m.index == HalfInt() && sector == Sector::Ramond;
}

// Can m be written in front of v with the word still in PBW order?
bool can_prepend(const Mode& m, const PBWMonomial& v) {
  if (m.kind == ModeKind::G) {
    return v.g_modes.empty() || m.index < v.g_modes.front();
  }
  if (!v.g_modes.empty()) return false;  // L modes sit after the G block
  return v.l_modes.empty() || m.index <= v.l_modes.front();
}

PBWMonomial prepended(const Mode& m, const PBWMonomial& v) {
  PBWMonomial r = v;
  if (m.kind == ModeKind::G)
    r.g_modes.insert(r.g_modes.begin(), m.index);
  else
    r.l_modes.insert(r.l_modes.begin(), m.index);
  return r;
}

// First mode of the word and the remaining monomial.
std::pair<Mode, PBWMonomial> split_head(const PBWMonomial& v) {
  PBWMonomial rest = v;
  if (!v.g_modes.empty()) {
    rest.g_modes.erase(rest.g_modes.begin());
    return {Mode::G(v.g_modes.front()), rest};
  }
  rest.l_modes.erase(rest.l_modes.begin());
  return {Mode::L(v.l_modes.front()), rest};
}

}  // namespace

void VermaModule::add_scaled(std::map<PBWMonomial, Rational>& into, const ActResult& from,
                             const Rational& scale, bool* truncated) {
  if (from.truncated && truncated) *truncated = true;
  if (scale == 0) return;
  for (const auto& [mono, coeff] : from.terms) {
    auto it = into.find(mono);
    if (it == into.end()) {
      Rational v = coeff * scale;
      if (v != 0) into.emplace(mono, std::move(v));
    } else {
      it->second += coeff * scale;
      if (it->second == 0) into.erase(it);
    }
  }
}

const ActResult& VermaModule::act(const Mode& m, const PBWMonomial& v) {
  auto key = std::make_pair(m, v);
  if (auto it = act_cache_.find(key); it != act_cache_.end()) return it->second;
  ActResult r = act_uncached(m, v);
  return act_cache_.emplace(std::move(key), std::move(r)).first->second;
}

ActResult VermaModule::act_uncached(const Mode& m, const PBWMonomial& v) {
  require_valid(m, spec_.sector);
  if (m.kind == ModeKind::Central)
    throw std::invalid_argument("central element does not act as a word generator");

  ActResult out;
  const HalfInt target = v.level() - m.index;
  if (target < HalfInt()) return out;  // below the lowest weight: exactly zero
  if (target > spec_.cutoff) {
    out.truncated = true;
    return out;
  }

  // L_0 shortcut: the basis is an L_0 eigenbasis.
  if (m.kind == ModeKind::L && m.index == HalfInt()) {
    out.terms[v] = spec_.h + rat(v.level());
    if (out.terms[v] == 0) out.terms.clear();
    return out;
  }

  if (v.empty()) {
    if (is_creation(m, spec_.sector)) {
      out.terms[prepended(m, v)] = 1;
    }
    // Positive modes annihilate |h>; L_0 handled above. Nothing else.
    return out;
  }

  if (is_creation(m, spec_.sector) && can_prepend(m, v)) {
    out.terms[prepended(m, v)] = 1;
    return out;
  }

  auto [head, rest] = split_head(v);

  if (m.kind == ModeKind::G && head.kind == ModeKind::G && m.index == head.index) {
    // G_r G_r = (1/2){G_r, G_r} = L_{2r} + c/6 (r^2 - 1/4) delta_{2r,0}
    const FormalCombination sq = bracket(m, head, spec_.sector) * rat(1, 2);
    for (const auto& [w, poly] : sq.terms()) {
      const Rational coeff = poly.eval(spec_.c, spec_.h);
      if (w.empty()) {
        add_scaled(out.terms, ActResult{{{rest, Rational(1)}}, false}, coeff,
                   &out.truncated);
      } else {
        add_scaled(out.terms, act(w.front(), rest), coeff, &out.truncated);
      }
    }
    return out;
  }

  // m . head = sign . head . m + [m, head]
  const Rational sign = (m.odd() && head.odd()) ? rat(-1) : rat(1);
  const ActResult& inner = act(m, rest);
  for (const auto& [mono, coeff] : inner.terms)
    add_scaled(out.terms, act(head, mono), coeff * sign, &out.truncated);
  if (inner.truncated) out.truncated = true;

  const FormalCombination br = bracket(m, head, spec_.sector);
  for (const auto& [w, poly] : br.terms()) {
    const Rational coeff = poly.eval(spec_.c, spec_.h);
    if (w.empty()) {
      add_scaled(out.terms, ActResult{{{rest, Rational(1)}}, false}, coeff, &out.truncated);
    } else {
      add_scaled(out.terms, act(w.front(), rest), coeff, &out.truncated);
    }
  }
  return out;
}

std::map<PBWMonomial, Rational> VermaModule::act(const Mode& m,
                                                 const std::map<PBWMonomial, Rational>& vec,
                                                 bool* truncated) {
  std::map<PBWMonomial, Rational> out;
  bool trunc = false;
  for (const auto& [mono, coeff] : vec) {
    const ActResult& r = act(m, mono);
    if (r.truncated) trunc = true;
    for (const auto& [u, c2] : r.terms) {
      auto it = out.find(u);
      if (it == out.end()) {
        Rational v = c2 * coeff;
        if (v != 0) out.emplace(u, std::move(v));
      } else {
        it->second += c2 * coeff;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  if (truncated) *truncated = trunc;
  return out;
}

const RatMatrix& VermaModule::gram_matrix(HalfInt level) {
  if (auto it = gram_cache_.find(level); it != gram_cache_.end()) return it->second;
  if (level > spec_.cutoff)
    throw std::invalid_argument("gram_matrix: level exceeds cutoff");

  const auto& monos = basis_.at_level(level);
  const int n = static_cast<int>(monos.size());
  RatMatrix g(n, n);

  // Rows whose leading mode strictly lowers the level first; rows led by
  // G_0 (level-preserving) reference same-level rows of pure-L monomials,
  // which the first pass has already produced.
  auto fill_row = [&](int i) {
    const PBWMonomial& wi = monos[size_t(i)];
    if (wi.empty()) {
      for (int j = 0; j < n; ++j) g.at(i, j) = monos[size_t(j)].empty() ? 1 : 0;
      return;
    }
    auto [head, tail] = split_head(wi);
    const HalfInt tail_level = tail.level();
    const Mode lower = head.adjoint();
    const RatMatrix& g_tail =
        tail_level == level ? g : gram_matrix(tail_level);  // same-level only for G_0 heads
    const auto& tail_basis = basis_.at_level(tail_level);
    const int ti = [&] {
      for (size_t k = 0; k < tail_basis.size(); ++k)
        if (tail_basis[k] == tail) return static_cast<int>(k);
      throw std::logic_error("gram: tail monomial missing");
    }();
    for (int j = 0; j < n; ++j) {
      const ActResult& down = act(lower, monos[size_t(j)]);
      Rational acc = 0;
      for (const auto& [u, coeff] : down.terms) {
        const int k = basis_.index_of(u);
        if (k >= 0) acc += coeff * g_tail.at(ti, k);
      }
      g.at(i, j) = std::move(acc);
    }
  };

  std::vector<int> second_pass;
  for (int i = 0; i < n; ++i) {
    const PBWMonomial& wi = monos[size_t(i)];
    if (!wi.empty() && !wi.g_modes.empty() && wi.g_modes.front() == HalfInt()) {
      second_pass.push_back(i);
      continue;
    }
    fill_row(i);
  }
  for (int i : second_pass) fill_row(i);

  return gram_cache_.emplace(level, std::move(g)).first->second;
}

std::vector<UnitarityVerdict> unitarity_scan(VermaModule& module) {
  std::vector<UnitarityVerdict> out;
  for (HalfInt lvl : module.basis().levels()) {
    const RatMatrix& g = module.gram_matrix(lvl);
    LdltResult r = ldlt_psd(g);
    UnitarityVerdict v;
    v.level = lvl;
    v.dim = g.rows();
    v.psd = r.psd;
    v.rank = r.rank;
    if (!r.psd) {
      v.witness = r.witness;
      v.witness_norm2 = r.witness_norm2;
      const auto& monos = module.basis().at_level(lvl);
      std::string desc;
      for (size_t i = 0; i < r.witness->size(); ++i) {
        const Rational& c = (*r.witness)[i];
        if (c == 0) continue;
        if (!desc.empty()) desc += " + ";
        desc += "(" + rat_str(c) + ")" + monos[i].str();
      }
      v.witness_desc = desc;
    }
    out.push_back(std::move(v));
  }
  return out;
}

QuotientModule::QuotientModule(ModuleSpec spec) : spec_(spec), verma_(std::move(spec)) {
  for (HalfInt lvl : verma_.basis().levels()) {
    const RatMatrix& g = verma_.gram_matrix(lvl);
    const auto& monos = verma_.basis().at_level(lvl);
    for (Parity par : {Parity::Even, Parity::Odd}) {
      QuotientBlock blk;
      blk.level = lvl;
      blk.parity = par;
      for (size_t i = 0; i < monos.size(); ++i) {
        if (monos[i].parity() == par) {
          blk.monomials.push_back(monos[i]);
          blk.monomial_pos.push_back(static_cast<int>(i));
        }
      }
      if (blk.monomials.empty()) continue;
      const int nb = static_cast<int>(blk.monomials.size());
      RatMatrix sub(nb, nb);
      for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b)
          sub.at(a, b) = g.at(blk.monomial_pos[size_t(a)], blk.monomial_pos[size_t(b)]);
      LdltResult r = ldlt_psd(sub);
      if (!r.psd) {
        throw NotUnitaryError(
            lvl, "not unitary at (c=" + rat_str(spec_.c) + ", h=" + rat_str(spec_.h) +
                     "): Gram form indefinite at level " + lvl.str() +
                     " (witness norm^2 = " + rat_str(*r.witness_norm2) + ")");
      }
      blk.rank = r.rank;
      blk.diag = r.diag;
      blk.basis_vectors = RatMatrix(nb, r.rank);
      for (int i = 0; i < nb; ++i)
        for (int a = 0; a < r.rank; ++a)
          blk.basis_vectors.at(i, a) = r.transform.at(i, a);
      // Quotient coordinates of x: y_a = <e_a, x> / d_a = (E^T Gblk x)_a / d_a.
      blk.projector = RatMatrix(r.rank, nb);
      for (int a = 0; a < r.rank; ++a)
        for (int x = 0; x < nb; ++x) {
          Rational acc = 0;
          for (int y = 0; y < nb; ++y) {
            const Rational& e = blk.basis_vectors.at(y, a);
            if (e != 0) acc += e * sub.at(y, x);
          }
          blk.projector.at(a, x) = acc / blk.diag[size_t(a)];
        }
      total_dim_ += blk.rank;
      block_ids_[{lvl.twice(), par == Parity::Even ? 0 : 1}] =
          static_cast<int>(blocks_.size());
      blocks_.push_back(std::move(blk));
    }
  }
}

int QuotientModule::block_id(HalfInt level, Parity parity) const {
  auto it = block_ids_.find({level.twice(), parity == Parity::Even ? 0 : 1});
  return it == block_ids_.end() ? -1 : it->second;
}

std::map<HalfInt, int> QuotientModule::quotient_dims() const {
  std::map<HalfInt, int> dims;
  for (HalfInt lvl : verma_.basis().levels()) dims[lvl] = 0;
  for (const auto& b : blocks_) dims[b.level] += b.rank;
  return dims;
}

std::map<HalfInt, std::pair<int, int>> QuotientModule::even_odd_dims() const {
  std::map<HalfInt, std::pair<int, int>> dims;
  for (HalfInt lvl : verma_.basis().levels()) dims[lvl] = {0, 0};
  for (const auto& b : blocks_) {
    if (b.parity == Parity::Even)
      dims[b.level].first += b.rank;
    else
      dims[b.level].second += b.rank;
  }
  return dims;
}

}  // namespace svlab
