// Exact integer and rational arithmetic substrate (arbitrary precision).
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ae {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_pow(const Rat& base, unsigned k) {
  Rat out = 1;
  Rat b = base;
  unsigned e = k;
  while (e) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1u;
  }
  return out;
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

// "p" or "p/q" with q > 0 after normalization.
inline std::string rat_str(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

inline std::optional<Rat> rat_parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(Int(std::string(text)));
    Int p{std::string(text.substr(0, slash))};
    Int q{std::string(text.substr(slash + 1))};
    if (q == 0) return std::nullopt;
    return Rat(p, q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Checked narrowing used by the JSON serializers.
inline std::int64_t to_i64(const Int& v) {
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
    throw std::overflow_error("integer too large for serialization: " + v.str());
  return v.convert_to<std::int64_t>();
}

}  // namespace ae
