// Temporary bring-up harness; replaced by the doctest suites.
#include <cassert>
#include <iostream>

#include "svlab/algebra.hpp"
#include "svlab/repmat.hpp"
#include "svlab/verma.hpp"

using namespace svlab;

int main() {
  // [L_2, L_{-2}] = 4 L_0 + c/2
  auto br = bracket(Mode::L(2), Mode::L(-2), Sector::Ramond);
  FormalCombination expect;
  expect.add({Mode::L(0)}, PolyCH(rat(4)));
  expect.add({}, PolyCH::c_times(rat(1, 2)));
  assert(br == expect);

  // normal_order(L_1 L_{-1}) = L_{-1} L_1 + 2 L_0
  auto no = normal_order({Mode::L(1), Mode::L(-1)}, Sector::NeveuSchwarz);
  FormalCombination expect2;
  expect2.add({Mode::L(-1), Mode::L(1)}, PolyCH(rat(1)));
  expect2.add({Mode::L(0)}, PolyCH(rat(2)));
  assert(no == expect2);

  // G_0 G_0 (Ramond) = L_0 - c/24
  auto g00 = normal_order({Mode::G(HalfInt::whole(0)), Mode::G(HalfInt::whole(0))},
                          Sector::Ramond);
  FormalCombination expect3;
  expect3.add({Mode::L(0)}, PolyCH(rat(1)));
  expect3.add({}, PolyCH::c_times(rat(-1, 24)));
  assert(g00 == expect3);

  // NS basis dims at cutoff 2: {0:1, 1/2:1, 1:1, 3/2:2, 2:3}
  LevelBasis ns(Sector::NeveuSchwarz, HalfInt::whole(2));
  auto dims = ns.level_dims();
  assert(dims[HalfInt::whole(0)] == 1);
  assert(dims[HalfInt::half(1)] == 1);
  assert(dims[HalfInt::whole(1)] == 1);
  assert(dims[HalfInt::half(3)] == 2);
  assert(dims[HalfInt::whole(2)] == 3);

  // Ramond cutoff 1: {0:2, 1:4}
  LevelBasis ram(Sector::Ramond, HalfInt::whole(1));
  auto rdims = ram.level_dims();
  assert(rdims[HalfInt::whole(0)] == 2);
  assert(rdims[HalfInt::whole(1)] == 4);

  // NS level 3/2 gram: [[2h+2c/3, 4h], [4h, 4h^2+2h]] at c=1, h=1/10.
  {
    ModuleSpec spec{Sector::NeveuSchwarz, rat(1), rat(1, 10), HalfInt::half(3)};
    VermaModule vm(spec);
    const RatMatrix& g = vm.gram_matrix(HalfInt::half(3));
    assert(g.rows() == 2);
    const Rational c = spec.c, h = spec.h;
    assert(g.at(0, 0) == 2 * h + 2 * c / 3);
    assert(g.at(0, 1) == 4 * h);
    assert(g.at(1, 0) == 4 * h);
    assert(g.at(1, 1) == 4 * h * h + 2 * h);
    assert(g.is_symmetric());
  }

  // Ramond level 0 gram diag(1, h - c/24).
  {
    ModuleSpec spec{Sector::Ramond, rat(7, 10), rat(7, 240) + 1, HalfInt::whole(2)};
    VermaModule vm(spec);
    const RatMatrix& g = vm.gram_matrix(HalfInt::whole(0));
    assert(g.rows() == 2);
    assert(g.at(0, 0) == 1);
    assert(g.at(0, 1) == 0 && g.at(1, 0) == 0);
    assert(g.at(1, 1) == spec.h - spec.c / 24);
  }

  // Quotient at the graded point h = c/24: level-0 dim 1, Q^2 = L_0 - c/24.
  {
    ModuleSpec spec{Sector::Ramond, rat(7, 10), rat(7, 240), HalfInt::whole(4)};
    QuotientModule qm(spec);
    auto dims0 = qm.quotient_dims();
    std::cout << "Ramond(7/10, 7/240) quotient dims:";
    for (auto& [lvl, d] : dims0) std::cout << " " << lvl.str() << ":" << d;
    std::cout << "\n";
    assert(dims0[HalfInt::whole(0)] == 1);

    bool exact = false;
    double resid = supercharge_square_residual(qm, &exact);
    std::cout << "Q^2 residual exact_zero=" << exact << " max=" << resid << "\n";
    assert(exact);

    auto idx = graded_index(qm, 1.0);
    std::cout << "graded index exact=" << idx.exact << " value=" << idx.exact_value
              << "\n";
    assert(idx.exact && idx.exact_value == 1);

    auto rr = relation_residual(qm, Mode::L(2), Mode::L(-2));
    assert(!rr.window_empty && rr.exact_zero);
    auto rr2 = relation_residual(qm, Mode::G(HalfInt::whole(1)), Mode::G(HalfInt::whole(-1)));
    assert(!rr2.window_empty && rr2.exact_zero);
  }

  // NS vacuum c=7/10: heat multiplicities {0:1, 1/2:0, 1:0, 3/2:1, 2:1}.
  {
    ModuleSpec spec{Sector::NeveuSchwarz, rat(7, 10), rat(0), HalfInt::whole(2)};
    QuotientModule qm(spec);
    auto ht = heat_trace(qm, 1.0);
    std::cout << "NS(7/10,0) mults:";
    for (auto& [lvl, d] : ht.multiplicities) std::cout << " " << lvl.str() << ":" << d;
    std::cout << "\n";
    assert(ht.multiplicities[HalfInt::whole(0)] == 1);
    assert(ht.multiplicities[HalfInt::half(1)] == 0);
    assert(ht.multiplicities[HalfInt::whole(1)] == 0);
    assert(ht.multiplicities[HalfInt::half(3)] == 1);
    assert(ht.multiplicities[HalfInt::whole(2)] == 1);
  }

  // Indefinite witness: NS c=7/10, h=-1 at level 1/2.
  {
    ModuleSpec spec{Sector::NeveuSchwarz, rat(7, 10), rat(-1), HalfInt::half(1)};
    VermaModule vm(spec);
    auto verdicts = unitarity_scan(vm);
    bool found = false;
    for (auto& v : verdicts) {
      if (v.level == HalfInt::half(1)) {
        assert(!v.psd);
        assert(*v.witness_norm2 == -2);
        std::cout << "witness: " << *v.witness_desc << " norm2 " << rat_str(*v.witness_norm2)
                  << "\n";
        found = true;
      }
    }
    assert(found);
  }

  std::cout << "smoke OK\n";
  return 0;
}
