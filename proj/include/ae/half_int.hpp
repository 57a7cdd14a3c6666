// Half-integer quantum numbers, stored exactly as doubled integers.
#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ae/rational.hpp"

namespace ae {

class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t whole) : twice_(2 * whole) {}  // NOLINT: implicit by design

  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_zero() const { return twice_ == 0; }

  // True when this - other is an integer, i.e. both are valid projections
  // of the same manifold character.
  constexpr bool same_character(HalfInt other) const {
    return (twice_ - other.twice_) % 2 == 0;
  }

  Rat to_rational() const { return Rat(twice_, 2); }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  // Accepts "3", "-9/2" and the decimal forms "4.5", "-1.0".
  static std::optional<HalfInt> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    try {
      if (auto slash = s.find('/'); slash != std::string::npos) {
        std::int64_t num = std::stoll(s.substr(0, slash));
        std::int64_t den = std::stoll(s.substr(slash + 1));
        if (den == 1) return HalfInt(num);
        if (den == 2) return from_twice(num);
        if (den == -2) return from_twice(-num);
        return std::nullopt;
      }
      if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        std::int64_t whole = std::stoll(s.substr(0, dot).empty() ? "0" : s.substr(0, dot));
        bool neg = s.front() == '-';
        if (frac == "0" || frac == "00") return HalfInt(whole);
        if (frac == "5") return from_twice(2 * whole + (neg ? -1 : 1));
        return std::nullopt;
      }
      return HalfInt(std::stoll(s));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

 private:
  std::int64_t twice_ = 0;
};

inline HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

inline Rat pow_rational(HalfInt base, unsigned k) { return rat_pow(base.to_rational(), k); }

// One basis ket |ell, m> of an angular momentum manifold.
struct AngularState {
  HalfInt ell;
  HalfInt m;

  bool valid() const {
    return ell.twice() >= 0 && abs(m).twice() <= ell.twice() && ell.same_character(m);
  }
};

inline void require_valid_state(HalfInt ell, HalfInt m, const char* what) {
  if (!AngularState{ell, m}.valid())
    throw std::domain_error(std::string(what) + ": invalid quantum numbers (ell=" + ell.str() +
                            ", m=" + m.str() + ")");
}

}  // namespace ae
