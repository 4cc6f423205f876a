#pragma once

#include <map>
#include <string>
#include <utility>

#include "svlab/rational.hpp"

namespace svlab {

/// Polynomial in the formal central charge c and lowest weight h, with exact
/// rational coefficients. Structure constants only ever produce terms linear
/// in c; h enters through vacuum expectation values in tests and oracles.
class PolyCH {
public:
  using Key = std::pair<int, int>;  // (degree in c, degree in h)

  PolyCH() = default;
  PolyCH(Rational constant) {
    if (constant != 0) terms_[{0, 0}] = std::move(constant);
  }

  static PolyCH c_times(const Rational& coeff) {
    PolyCH p;
    if (coeff != 0) p.terms_[{1, 0}] = coeff;
    return p;
  }
  static PolyCH h_times(const Rational& coeff) {
    PolyCH p;
    if (coeff != 0) p.terms_[{0, 1}] = coeff;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  PolyCH& operator+=(const PolyCH& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  PolyCH& operator-=(const PolyCH& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }
  PolyCH operator+(const PolyCH& o) const {
    PolyCH r = *this;
    r += o;
    return r;
  }
  PolyCH operator-(const PolyCH& o) const {
    PolyCH r = *this;
    r -= o;
    return r;
  }
  PolyCH operator-() const {
    PolyCH r;
    for (const auto& [k, v] : terms_) r.terms_[k] = -v;
    return r;
  }
  PolyCH operator*(const PolyCH& o) const {
    PolyCH r;
    for (const auto& [ka, va] : terms_)
      for (const auto& [kb, vb] : o.terms_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
  }
  PolyCH operator*(const Rational& s) const {
    PolyCH r;
    if (s == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * s;
    return r;
  }

  bool operator==(const PolyCH& o) const { return terms_ == o.terms_; }

  Rational eval(const Rational& c, const Rational& h) const {
    Rational acc = 0;
    for (const auto& [k, v] : terms_) {
      Rational t = v;
      for (int i = 0; i < k.first; ++i) t *= c;
      for (int j = 0; j < k.second; ++j) t *= h;
      acc += t;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms_) {
      if (!s.empty()) s += " + ";
      s += rat_str(v);
      if (k.first) s += "*c" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
      if (k.second) s += "*h" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return s;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }

private:
  void add_term(const Key& k, const Rational& v) {
    if (v == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Key, Rational> terms_;
};

}  // namespace svlab
