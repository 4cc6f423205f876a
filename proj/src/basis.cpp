#include "svlab/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace svlab {

namespace {

// Weakly ascending L words of total level `remaining`, parts >= minPart (>0).
void gen_l_words(std::int64_t remaining, std::int64_t min_part,
                 std::vector<HalfInt>& acc, std::vector<PBWMonomial>& out,
                 const std::vector<HalfInt>& g_prefix) {
  if (remaining == 0) {
    PBWMonomial m;
    m.g_modes = g_prefix;
    m.l_modes.assign(acc.rbegin(), acc.rend());  // built descending, stored ascending by index
    out.push_back(std::move(m));
    return;
  }
  for (std::int64_t part = min_part; part <= remaining; ++part) {
    acc.push_back(HalfInt::whole(-part));
    gen_l_words(remaining - part, part, acc, out, g_prefix);
    acc.pop_back();
  }
}

}  // namespace

LevelBasis::LevelBasis(Sector sector, HalfInt cutoff) : sector_(sector), cutoff_(cutoff) {
  if (cutoff < HalfInt()) throw std::invalid_argument("cutoff must be >= 0");
  if (sector == Sector::Ramond && !cutoff.is_integer())
    throw std::invalid_argument("Ramond cutoff must be an integer level");

  // Distinct G parts: NS r in {1/2, 3/2, ...}, Ramond r in {0, 1, 2, ...}
  // (G_0 at most once). Enumerate subsets by twice-level, then fill with L
  // partitions.
  const std::int64_t tc = cutoff.twice();
  std::vector<std::int64_t> g_parts;  // twice the (positive) part sizes; 0 means G_0
  if (sector == Sector::NeveuSchwarz) {
    for (std::int64_t t = 1; t <= tc; t += 2) g_parts.push_back(t);
  } else {
    g_parts.push_back(0);
    for (std::int64_t t = 2; t <= tc; t += 2) g_parts.push_back(t);
  }

  std::vector<std::vector<std::int64_t>> g_subsets{{}};
  {
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, size_t from, std::int64_t used) -> void {
      for (size_t i = from; i < g_parts.size(); ++i) {
        if (used + g_parts[i] > tc) break;
        cur.push_back(g_parts[i]);
        g_subsets.push_back(cur);
        self(self, i + 1, used + g_parts[i]);
        cur.pop_back();
      }
    };
    rec(rec, 0, 0);
  }

  for (const auto& gs : g_subsets) {
    std::int64_t g_twice_level = 0;
    for (auto t : gs) g_twice_level += t;
    // G indices ascending: most negative first, G_0 (if any) last.
    std::vector<HalfInt> g_prefix;
    for (auto it = gs.rbegin(); it != gs.rend(); ++it)
      g_prefix.push_back(HalfInt::half(-*it));
    const std::int64_t l_budget_twice = tc - g_twice_level;
    std::vector<HalfInt> acc;
    std::vector<PBWMonomial> tmp;
    for (std::int64_t l_level = 0; 2 * l_level <= l_budget_twice; ++l_level)
      gen_l_words(l_level, 1, acc, tmp, g_prefix);
    for (auto& m : tmp) by_level_[m.level()].push_back(std::move(m));
  }

  for (auto& [lvl, monos] : by_level_) {
    std::sort(monos.begin(), monos.end(), [](const PBWMonomial& a, const PBWMonomial& b) {
      if (a.g_modes != b.g_modes) return a.g_modes < b.g_modes;
      return a.l_modes < b.l_modes;
    });
    levels_.push_back(lvl);
    for (size_t i = 0; i < monos.size(); ++i) index_[monos[i]] = static_cast<int>(i);
  }
}

const std::vector<PBWMonomial>& LevelBasis::at_level(HalfInt level) const {
  auto it = by_level_.find(level);
  if (it == by_level_.end())
    throw std::out_of_range("no basis at level " + level.str());
  return it->second;
}

int LevelBasis::index_of(const PBWMonomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::map<HalfInt, int> LevelBasis::level_dims() const {
  std::map<HalfInt, int> dims;
  for (const auto& [lvl, monos] : by_level_) dims[lvl] = static_cast<int>(monos.size());
  return dims;
}

}  // namespace svlab
