// Falsification probe: points that the FQS classification says ARE unitary
// must come out PSD; if they do not, the library (not the spec values) is
// wrong.
#include <iostream>

#include "svlab/repmat.hpp"
#include "svlab/verma.hpp"

using namespace svlab;

static void scan(const char* name, Sector sec, Rational c, Rational h, int cutoff) {
  ModuleSpec spec{sec, c, h, HalfInt::whole(cutoff)};
  VermaModule vm(spec);
  std::cout << name << ": ";
  bool all_psd = true;
  for (auto& v : unitarity_scan(vm)) {
    if (!v.psd) {
      std::cout << "INDEFINITE at level " << v.level.str() << " ";
      all_psd = false;
    }
  }
  std::cout << (all_psd ? "PSD through cutoff " + std::to_string(cutoff) : "") << "\n";
  if (!all_psd) return;

  QuotientModule qm(spec);
  std::cout << "  quotient dims:";
  for (auto& [lvl, d] : qm.quotient_dims()) std::cout << " " << lvl.str() << ":" << d;
  std::cout << "\n";
  if (sec == Sector::Ramond && h == c / 24) {
    auto idx = graded_index(qm, 1.0);
    std::cout << "  graded index: exact=" << idx.exact << " value=" << idx.exact_value;
    bool eo_ok = true;
    for (auto& [lvl, eo] : idx.even_odd)
      if (lvl > HalfInt() && eo.first != eo.second) eo_ok = false;
    std::cout << " even=odd above 0: " << eo_ok << "\n";
    bool exact0 = false;
    supercharge_square_residual(qm, &exact0);
    std::cout << "  Q^2 = L_0 - c/24 exact: " << exact0 << "\n";
  }
}

int main() {
  scan("Ramond m=4 (c=1, h=1/24)", Sector::Ramond, rat(1), rat(1, 24), 6);
  scan("Ramond free point (c=3/2, h=1/16)", Sector::Ramond, rat(3, 2), rat(1, 16), 6);
  scan("Ramond continuum (c=2, h=1/12)", Sector::Ramond, rat(2), rat(1, 12), 6);
  scan("Ramond TIM sigma (c=7/10, h=3/80)", Sector::Ramond, rat(7, 10), rat(3, 80), 5);
  scan("Ramond TIM (c=7/10, h=7/16)", Sector::Ramond, rat(7, 10), rat(7, 16), 5);
  scan("NS TIM vacuum (c=7/10, h=0)", Sector::NeveuSchwarz, rat(7, 10), rat(0), 5);
  scan("NS m=4 vacuum (c=1, h=0)", Sector::NeveuSchwarz, rat(1), rat(0), 5);
  scan("Ramond spec anchor (c=7/10, h=7/240)", Sector::Ramond, rat(7, 10), rat(7, 240), 4);
  return 0;
}
