#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "svlab/halfint.hpp"

namespace svlab {

enum class Sector { NeveuSchwarz, Ramond };

inline std::string sector_name(Sector s) {
  return s == Sector::NeveuSchwarz ? "ns" : "ramond";
}

enum class Parity { Even, Odd };

inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

enum class ModeKind { L, G, Central };

/// A single super-Virasoro generator label. The central element carries no
/// index; it is eliminated eagerly (k acts as c times the identity), so it
/// never appears inside generator words.
struct Mode {
  ModeKind kind;
  HalfInt index;  // meaningless for Central

  static Mode L(HalfInt n) { return {ModeKind::L, n}; }
  static Mode L(std::int64_t n) { return {ModeKind::L, HalfInt::whole(n)}; }
  static Mode G(HalfInt r) { return {ModeKind::G, r}; }
  static Mode G_half(std::int64_t twice_r) { return {ModeKind::G, HalfInt::half(twice_r)}; }
  static Mode central() { return {ModeKind::Central, HalfInt()}; }

  Parity parity() const { return kind == ModeKind::G ? Parity::Odd : Parity::Even; }
  bool odd() const { return parity() == Parity::Odd; }

  bool valid_for(Sector s) const {
    switch (kind) {
      case ModeKind::Central: return true;
      case ModeKind::L: return index.is_integer();
      case ModeKind::G:
        return s == Sector::Ramond ? index.is_integer() : !index.is_integer();
    }
    return false;
  }

  Mode adjoint() const { return {kind, -index}; }

  /// Max level increase any matrix element of this mode effects.
  HalfInt raising_depth() const {
    if (kind == ModeKind::Central) return HalfInt();
    return index < HalfInt() ? -index : HalfInt();
  }

  friend auto operator<=>(const Mode&, const Mode&) = default;

  std::string str() const {
    switch (kind) {
      case ModeKind::Central: return "k";
      case ModeKind::L: return "L_{" + index.str() + "}";
      case ModeKind::G: return "G_{" + index.str() + "}";
    }
    return "?";
  }
};

/// Generator word; the empty word is the identity.
using Word = std::vector<Mode>;

inline void require_valid(const Mode& m, Sector s) {
  if (!m.valid_for(s))
    throw std::invalid_argument("mode " + m.str() + " is invalid in the " +
                                sector_name(s) + " sector");
}

}  // namespace svlab
