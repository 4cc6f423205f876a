// Scratch probe: compare the module Gram against the brute-force oracle and
// decide whether Ramond (7/10, 7/240) is genuinely indefinite.
#include <iostream>

#include "oracles.hpp"
#include "svlab/verma.hpp"

using namespace svlab;

int main() {
  const Rational c = rat(7, 10);
  const Rational h = rat(7, 240);

  ModuleSpec spec{Sector::Ramond, c, h, HalfInt::whole(3)};
  VermaModule vm(spec);

  for (int lvl = 0; lvl <= 3; ++lvl) {
    const auto& monos = vm.basis().at_level(HalfInt::whole(lvl));
    const RatMatrix& g = vm.gram_matrix(HalfInt::whole(lvl));
    bool match = true;
    for (size_t i = 0; i < monos.size(); ++i)
      for (size_t j = 0; j < monos.size(); ++j) {
        PolyCH e = oracle::gram_entry(monos[i], monos[j], Sector::Ramond);
        if (e.eval(c, h) != g.at(int(i), int(j))) {
          match = false;
          std::cout << "MISMATCH lvl " << lvl << " (" << monos[i].str() << ", "
                    << monos[j].str() << "): oracle " << rat_str(e.eval(c, h))
                    << " vs module " << rat_str(g.at(int(i), int(j))) << "\n";
        }
      }
    std::cout << "level " << lvl << " dim " << monos.size()
              << (match ? " MATCHES oracle" : " HAS MISMATCHES") << "\n";

    LdltResult r = ldlt_psd(g);
    std::cout << "  psd=" << r.psd << " rank=" << r.rank;
    if (!r.psd) {
      std::cout << " witness_norm2=" << rat_str(*r.witness_norm2) << "  witness: ";
      for (size_t k = 0; k < r.witness->size(); ++k)
        if ((*r.witness)[k] != 0)
          std::cout << "(" << rat_str((*r.witness)[k]) << ")" << monos[k].str() << " ";
      // verify via the oracle: w^T G_oracle w
      PolyCH q;
      for (size_t i = 0; i < monos.size(); ++i)
        for (size_t j = 0; j < monos.size(); ++j) {
          const Rational wi = (*r.witness)[i], wj = (*r.witness)[j];
          if (wi != 0 && wj != 0)
            q += oracle::gram_entry(monos[i], monos[j], Sector::Ramond) * (wi * wj);
        }
      std::cout << "\n  oracle norm2 of witness = " << rat_str(q.eval(c, h));
    }
    std::cout << "\n";
  }
  return 0;
}
