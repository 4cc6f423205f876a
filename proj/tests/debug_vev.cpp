#include <iostream>

#include "oracles.hpp"

using namespace svlab;

int main() {
  // <h| L_1 L_{-1} |h> = 2h
  std::cout << "L1 L-1: " << oracle::vev({Mode::L(1), Mode::L(-1)}, Sector::Ramond).str()
            << "\n";
  // <h| G_0 G_0 |h> = h - c/24
  std::cout << "G0 G0: "
            << oracle::vev({Mode::G(HalfInt::whole(0)), Mode::G(HalfInt::whole(0))},
                           Sector::Ramond)
                   .str()
            << "\n";
  // <h| G_1 G_{-1} |h> = 2h + c/4
  std::cout << "G1 G-1: "
            << oracle::vev({Mode::G(HalfInt::whole(1)), Mode::G(HalfInt::whole(-1))},
                           Sector::Ramond)
                   .str()
            << "\n";
  // <h| G_0 G_1 G_{-1} G_0 |h>
  std::cout << "G0 G1 G-1 G0: "
            << oracle::vev({Mode::G(HalfInt::whole(0)), Mode::G(HalfInt::whole(1)),
                            Mode::G(HalfInt::whole(-1)), Mode::G(HalfInt::whole(0))},
                           Sector::Ramond)
                   .str()
            << "\n";
  // NS level 3/2 entries
  std::cout << "G3/2 G-3/2 (NS): "
            << oracle::vev({Mode::G_half(3), Mode::G_half(-3)}, Sector::NeveuSchwarz).str()
            << "\n";
  std::cout << "done\n";
  return 0;
}
