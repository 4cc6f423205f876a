#pragma once

#include <cstdint>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace svlab {

/// A number in (1/2)Z, stored as twice its value. Mode indices and module
/// levels live here: integer for L modes, half-odd-integer for Neveu-Schwarz
/// G modes.
class HalfInt {
public:
  constexpr HalfInt() : twice_(0) {}
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}

  static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
  static constexpr HalfInt half(std::int64_t twice) { return HalfInt(twice); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr std::int64_t as_integer() const {
    if (!is_integer()) throw std::logic_error("HalfInt: not an integer");
    return twice_ / 2;
  }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  double to_double() const { return 0.5 * static_cast<double>(twice_); }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

private:
  std::int64_t twice_;
};

/// Parses "n" or "p/2" (also accepts "p/q" with q in {1,2}).
inline HalfInt parse_halfint(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return HalfInt::whole(std::stoll(s));
  std::int64_t p = std::stoll(s.substr(0, slash));
  std::int64_t q = std::stoll(s.substr(slash + 1));
  if (q == 1) return HalfInt::whole(p);
  if (q == 2) return HalfInt::half(p);
  throw std::invalid_argument("half-integer expected, got " + s);
}

}  // namespace svlab
