#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "svlab/mode.hpp"

namespace svlab {

/// Creation-operator word spanning a lowest-weight module: G modes first
/// (indices strictly ascending, each < 0, or one trailing G_0 in Ramond),
/// then L modes (weakly ascending, each < 0). Stored in word order, i.e.
/// as the operators are written left to right.
struct PBWMonomial {
  std::vector<HalfInt> g_modes;  // strictly ascending
  std::vector<HalfInt> l_modes;  // weakly ascending

  HalfInt level() const {
    HalfInt acc;
    for (auto g : g_modes) acc = acc - g;
    for (auto l : l_modes) acc = acc - l;
    return acc;
  }

  Parity parity() const { return g_modes.size() % 2 == 0 ? Parity::Even : Parity::Odd; }

  bool empty() const { return g_modes.empty() && l_modes.empty(); }

  Word word() const {
    Word w;
    for (auto g : g_modes) w.push_back(Mode::G(g));
    for (auto l : l_modes) w.push_back(Mode::L(l));
    return w;
  }

  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;

  std::string str() const {
    if (empty()) return "|h>";
    std::string s;
    for (auto g : g_modes) s += "G_{" + g.str() + "}";
    for (auto l : l_modes) s += "L_{" + l.str() + "}";
    return s + "|h>";
  }
};

/// All PBW monomials of level <= cutoff, grouped by level, each level sorted
/// graded-lexicographically on (g_modes, l_modes).
class LevelBasis {
public:
  LevelBasis() = default;
  LevelBasis(Sector sector, HalfInt cutoff);

  Sector sector() const { return sector_; }
  HalfInt cutoff() const { return cutoff_; }

  const std::vector<HalfInt>& levels() const { return levels_; }
  const std::vector<PBWMonomial>& at_level(HalfInt level) const;
  bool has_level(HalfInt level) const { return by_level_.count(level) > 0; }

  /// Position of a monomial within its level, or -1 if absent (above cutoff).
  int index_of(const PBWMonomial& m) const;

  std::map<HalfInt, int> level_dims() const;

private:
  Sector sector_ = Sector::NeveuSchwarz;
  HalfInt cutoff_;
  std::vector<HalfInt> levels_;
  std::map<HalfInt, std::vector<PBWMonomial>> by_level_;
  std::map<PBWMonomial, int> index_;
};

}  // namespace svlab
