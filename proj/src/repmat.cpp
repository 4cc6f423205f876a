#include "svlab/repmat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "svlab/numeric.hpp"

namespace svlab {

DenseMat<std::complex<double>> flatten(const BlockOp<std::complex<double>>& op,
                                       const FlatIndex& idx) {
  DenseMat<std::complex<double>> m(idx.dim(), idx.dim());
  for (const auto& [key, blk] : op.blocks()) {
    const int ro = idx.offset(key.first);
    const int co = idx.offset(key.second);
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) m.at(ro + i, co + j) = blk.at(i, j);
  }
  return m;
}

std::vector<std::complex<double>> apply_op(const BlockOp<std::complex<double>>& op,
                                           const FlatIndex& idx,
                                           const std::vector<std::complex<double>>& v) {
  std::vector<std::complex<double>> out(size_t(idx.dim()), {0, 0});
  for (const auto& [key, blk] : op.blocks()) {
    const int ro = idx.offset(key.first);
    const int co = idx.offset(key.second);
    for (int i = 0; i < blk.rows(); ++i) {
      std::complex<double> acc = 0;
      for (int j = 0; j < blk.cols(); ++j) acc += blk.at(i, j) * v[size_t(co + j)];
      out[size_t(ro + i)] += acc;
    }
  }
  return out;
}

double block_op_norm(const BlockOp<std::complex<double>>& op, const FlatIndex& idx) {
  const BlockOp<std::complex<double>> adj = op.adjoint();
  auto apply = [&](const std::vector<std::complex<double>>& v) {
    return apply_op(adj, idx, apply_op(op, idx, v));
  };
  const double lambda = power_iteration_psd(apply, idx.dim());
  return std::sqrt(std::max(0.0, lambda));
}

ExactOp build_operator(const QuotientModule& mod, const Mode& m) {
  require_valid(m, mod.spec().sector);
  ExactOp op(&mod, m.parity(), m.raising_depth(), m.str());
  auto& verma = const_cast<QuotientModule&>(mod).verma();

  for (size_t src_id = 0; src_id < mod.blocks().size(); ++src_id) {
    const QuotientBlock& src = mod.blocks()[src_id];
    if (src.rank == 0) continue;
    const HalfInt tgt_level = src.level - m.index;
    const Parity tgt_parity = m.odd() ? flip(src.parity) : src.parity;
    const int tgt_id = mod.block_id(tgt_level, tgt_parity);
    if (tgt_id < 0) continue;
    const QuotientBlock& tgt = mod.block(tgt_id);
    if (tgt.rank == 0) continue;

    // act on each quotient basis vector, then project back.
    DenseMat<CRat>& blk = op.block(tgt_id, int(src_id));
    for (int a = 0; a < src.rank; ++a) {
      std::map<PBWMonomial, Rational> vec;
      for (size_t i = 0; i < src.monomials.size(); ++i) {
        const Rational& coeff = src.basis_vectors.at(int(i), a);
        if (coeff != 0) vec[src.monomials[i]] = coeff;
      }
      const auto image = verma.act(m, vec);
      // coordinates over the target block's monomials
      std::vector<Rational> img_coords(tgt.monomials.size(), Rational(0));
      for (const auto& [mono, coeff] : image) {
        auto it = std::lower_bound(tgt.monomials.begin(), tgt.monomials.end(), mono);
        if (it != tgt.monomials.end() && *it == mono)
          img_coords[size_t(it - tgt.monomials.begin())] = coeff;
        else if (coeff != 0)
          throw std::logic_error("build_operator: image escaped its parity block");
      }
      for (int b = 0; b < tgt.rank; ++b) {
        Rational acc = 0;
        for (size_t x = 0; x < img_coords.size(); ++x)
          if (img_coords[x] != 0) acc += tgt.projector.at(b, int(x)) * img_coords[x];
        blk.at(b, a) = CRat(std::move(acc));
      }
    }
  }
  op.prune();
  return op;
}

FloatOp to_float(const ExactOp& op) {
  const QuotientModule* mod = op.module();
  FloatOp out(mod, op.parity(), op.raising_depth(), op.label());
  for (const auto& [key, blk] : op.blocks()) {
    const auto& tb = mod->block(key.first);
    const auto& sb = mod->block(key.second);
    DenseMat<std::complex<double>>& dst = out.block(key.first, key.second);
    for (int i = 0; i < blk.rows(); ++i) {
      const double dt = std::sqrt(to_double(tb.diag[size_t(i)]));
      for (int j = 0; j < blk.cols(); ++j) {
        const double ds = std::sqrt(to_double(sb.diag[size_t(j)]));
        dst.at(i, j) = blk.at(i, j).to_complex() * (dt / ds);
      }
    }
  }
  out.prune();
  return out;
}

ExactOp identity_op(const QuotientModule& mod, const CRat& scale) {
  ExactOp op(&mod, Parity::Even, HalfInt(), "1");
  for (size_t b = 0; b < mod.blocks().size(); ++b) {
    if (mod.blocks()[b].rank == 0) continue;
    DenseMat<CRat>& blk = op.block(int(b), int(b));
    for (int i = 0; i < blk.rows(); ++i) blk.at(i, i) = scale;
  }
  op.prune();
  return op;
}

FloatOp identity_op_f(const QuotientModule& mod, std::complex<double> scale) {
  FloatOp op(&mod, Parity::Even, HalfInt(), "1");
  for (size_t b = 0; b < mod.blocks().size(); ++b) {
    if (mod.blocks()[b].rank == 0) continue;
    auto& blk = op.block(int(b), int(b));
    for (int i = 0; i < blk.rows(); ++i) blk.at(i, i) = scale;
  }
  op.prune();
  return op;
}

RelationResidual relation_residual(const QuotientModule& mod, const Mode& a, const Mode& b) {
  RelationResidual res;
  const HalfInt total_depth = a.index.abs() + b.index.abs();
  res.max_input_level = mod.spec().cutoff - total_depth;
  if (res.max_input_level < HalfInt()) {
    res.window_empty = true;
    return res;
  }

  const ExactOp ma = build_operator(mod, a);
  const ExactOp mb = build_operator(mod, b).restricted(res.max_input_level);
  const ExactOp mba = build_operator(mod, b);
  const ExactOp maw = ma.restricted(res.max_input_level);
  const bool both_odd = a.odd() && b.odd();
  ExactOp lhs = both_odd ? ma.mul(mb) + mba.mul(maw) : ma.mul(mb) - mba.mul(maw);

  ExactOp rhs(&mod, std::nullopt, HalfInt(), "rhs");
  const FormalCombination br = bracket(a, b, mod.spec().sector);
  bool first = true;
  for (const auto& [w, poly] : br.terms()) {
    const CRat coeff(poly.eval(mod.spec().c, mod.spec().h));
    ExactOp piece = w.empty() ? identity_op(mod, coeff)
                              : build_operator(mod, w.front()).scaled(coeff);
    rhs = first ? piece : rhs + piece;
    first = false;
  }
  if (first) rhs = identity_op(mod, CRat(Rational(0)));

  const ExactOp diff = lhs - rhs.restricted(res.max_input_level);
  res.exact_zero = diff.is_zero();
  res.max_abs = diff.max_abs();
  return res;
}

ExactOp supercharge(const QuotientModule& mod) {
  if (mod.spec().sector != Sector::Ramond)
    throw std::invalid_argument(
        "no global supercharge in NS: the Neveu-Schwarz algebra has no odd square "
        "root of its Hamiltonian");
  ExactOp q = build_operator(mod, Mode::G(HalfInt::whole(0)));
  q.set_label("Q");
  return q;
}

double supercharge_square_residual(const QuotientModule& mod, bool* exact_zero) {
  const ExactOp q = supercharge(mod);
  const ExactOp q2 = q.mul(q);
  const ExactOp h = build_operator(mod, Mode::L(0)) -
                    identity_op(mod, CRat(mod.spec().c / 24));
  const ExactOp diff = q2 - h;
  if (exact_zero) *exact_zero = diff.is_zero();
  return diff.max_abs();
}

HeatTraceResult heat_trace(const QuotientModule& mod, double beta) {
  if (beta <= 0) throw std::invalid_argument("heat_trace: beta must be > 0");
  HeatTraceResult r;
  const double h = to_double(mod.spec().h);
  const double shift =
      mod.spec().sector == Sector::Ramond ? to_double(mod.spec().c) / 24.0 : 0.0;
  r.multiplicities = mod.quotient_dims();
  int max_mult = 0;
  HalfInt top;
  for (const auto& [lvl, dim] : r.multiplicities) {
    const double e = h + lvl.to_double();
    r.partial_sum += dim * std::exp(-beta * (e - shift));
    r.partial_sum_unshifted += dim * std::exp(-beta * e);
    max_mult = std::max(max_mult, dim);
    top = std::max(top, lvl);
  }
  // Heuristic bracket only: multiplicities grow, a geometric majorant with the
  // observed top multiplicity is reported, never certified.
  const double step = mod.spec().sector == Sector::Ramond ? 1.0 : 0.5;
  const double e_next = h + top.to_double() + step - shift;
  r.tail_estimate = max_mult * std::exp(-beta * e_next) / (1.0 - std::exp(-beta * step));
  return r;
}

GradedIndexResult graded_index(const QuotientModule& mod, double beta, bool parity_flip) {
  if (mod.spec().sector != Sector::Ramond)
    throw std::invalid_argument("graded_index: Ramond sector required");
  if (mod.spec().h != mod.spec().c / 24)
    throw std::invalid_argument(
        "representation not graded: irreducible Ramond modules with lowest weight "
        "h != c/24 are not graded");
  GradedIndexResult r;
  r.even_odd = mod.even_odd_dims();
  r.exact = true;
  for (const auto& [lvl, eo] : r.even_odd) {
    int diff = eo.first - eo.second;
    if (parity_flip) diff = -diff;
    const double energy = lvl.to_double();  // h - c/24 + level
    r.value += diff * std::exp(-beta * energy);
    if (diff != 0) {
      if (lvl == HalfInt())
        r.exact_value += diff;
      else
        r.exact = false;  // a beta-dependent term survives
    }
  }
  if (parity_flip) {
    std::map<HalfInt, std::pair<int, int>> swapped;
    for (const auto& [lvl, eo] : r.even_odd) swapped[lvl] = {eo.second, eo.first};
    r.even_odd = std::move(swapped);
  }
  return r;
}

GradedIndexResult graded_index_sum(const std::vector<DirectSumComponent>& components,
                                   double beta, HalfInt cutoff) {
  GradedIndexResult total;
  total.exact = true;
  for (const auto& comp : components) {
    ModuleSpec spec = comp.spec;
    spec.cutoff = cutoff;
    QuotientModule mod(spec);
    GradedIndexResult r = graded_index(mod, beta, comp.parity_flip);
    total.value += r.value;
    total.exact_value += r.exact_value;
    total.exact = total.exact && r.exact;
    for (const auto& [lvl, eo] : r.even_odd) {
      total.even_odd[lvl].first += eo.first;
      total.even_odd[lvl].second += eo.second;
    }
  }
  return total;
}

std::vector<EnergyBoundEntry> energy_bound_report(const QuotientModule& mod,
                                                  HalfInt max_l_index, HalfInt max_g_index,
                                                  double float_tol) {
  std::vector<EnergyBoundEntry> out;
  const FlatIndex idx(mod);
  const double c = to_double(mod.spec().c);
  const auto energies = idx.energies(0.0);  // h + level

  auto windowed_norm = [&](const Mode& m, int inv_power_halves) {
    // || mat(m) . (1 + L_0)^{-k/2} || on columns of level <= cutoff - |index|
    const HalfInt win = mod.spec().cutoff - m.index.abs();
    const FloatOp op = to_float(build_operator(mod, m)).restricted(win);
    const FloatOp adj = op.adjoint();
    auto apply = [&](const std::vector<std::complex<double>>& v) {
      std::vector<std::complex<double>> scaled = v;
      for (size_t j = 0; j < scaled.size(); ++j)
        scaled[j] *= std::pow(1.0 + energies[j], -0.5 * inv_power_halves);
      auto w = apply_op(adj, idx, apply_op(op, idx, scaled));
      for (size_t j = 0; j < w.size(); ++j)
        w[j] *= std::pow(1.0 + energies[j], -0.5 * inv_power_halves);
      return w;
    };
    const double lambda = power_iteration_psd(apply, idx.dim());
    return std::sqrt(std::max(0.0, lambda));
  };

  std::vector<Mode> modes;
  for (std::int64_t n = -max_l_index.as_integer(); n <= max_l_index.as_integer(); ++n)
    if (n != 0) modes.push_back(Mode::L(n));
  const std::int64_t gstart = mod.spec().sector == Sector::Ramond ? 0 : 1;
  for (std::int64_t t = gstart; t <= max_g_index.twice(); t += 2) {
    modes.push_back(Mode::G(HalfInt::half(t)));
    if (t != 0) modes.push_back(Mode::G(HalfInt::half(-t)));
  }

  for (const Mode& m : modes) {
    EnergyBoundEntry e;
    e.mode = m;
    if (mod.spec().cutoff - m.index.abs() < HalfInt()) {
      e.window_empty = true;
      out.push_back(e);
      continue;
    }
    if (m.kind == ModeKind::G) {
      const double r = m.index.to_double();
      e.computed_norm = windowed_norm(m, 1);
      e.paper_bound = std::sqrt(2.0 + c * r * r / 3.0);
      e.within_bound = e.computed_norm <= *e.paper_bound + float_tol;
    } else {
      const double n = std::abs(m.index.to_double());
      e.computed_norm = windowed_norm(m, 2);
      e.minimal_m = e.computed_norm / (1.0 + std::pow(n, 1.5));
      e.within_bound = std::isfinite(*e.minimal_m);
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace svlab
