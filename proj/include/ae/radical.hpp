// Exact scalars of the form sum_i c_i * sqrt(d_i) with rational c_i and
// square-free positive integer radicands d_i. Square roots of distinct
// square-free integers are linearly independent over Q, so the canonical
// term map makes value equality the same as map equality.
#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "ae/rational.hpp"
#include "ae/squarefree.hpp"

namespace ae {

class Radical {
 public:
  Radical() = default;
  Radical(std::int64_t v) : Radical(Rat(v)) {}  // NOLINT: implicit by design
  explicit Radical(const Rat& v) {
    if (v != 0) terms_[Int(1)] = v;
  }

  static Radical of_rational(const Rat& v) { return Radical(v); }

  // coeff * sqrt(radicand) with the radicand reduced to square-free form.
  static Radical term(const Rat& coeff, const Int& radicand) {
    if (radicand <= 0) throw std::domain_error("Radical::term: radicand must be positive");
    Radical r;
    if (coeff == 0) return r;
    auto parts = squarefree_decompose(radicand);
    r.terms_[parts.squarefree] = coeff * Rat(parts.root);
    return r;
  }

  // Principal square root of a nonnegative rational.
  static Radical sqrt_rational(const Rat& v) {
    if (v < 0) throw std::domain_error("Radical::sqrt_rational: negative argument");
    if (v == 0) return Radical();
    Int p = rat_num(v), q = rat_den(v);
    // sqrt(p/q) = sqrt(p*q) / q
    return term(Rat(1, q), p * q);
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }

  Rat as_rational() const {
    if (terms_.empty()) return Rat(0);
    if (!is_rational()) throw std::domain_error("Radical::as_rational: value is irrational");
    return terms_.begin()->second;
  }

  const std::map<Int, Rat>& terms() const { return terms_; }

  Radical operator-() const {
    Radical r;
    for (auto& [d, c] : terms_) r.terms_[d] = -c;
    return r;
  }

  Radical& operator+=(const Radical& o) {
    for (auto& [d, c] : o.terms_) {
      auto it = terms_.find(d);
      if (it == terms_.end()) {
        terms_.emplace(d, c);
      } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  Radical& operator-=(const Radical& o) { return *this += -o; }

  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }

  friend Radical operator*(const Radical& a, const Radical& b) {
    Radical out;
    for (auto& [da, ca] : a.terms_) {
      for (auto& [db, cb] : b.terms_) {
        // sqrt(da)*sqrt(db) = g * sqrt((da/g)*(db/g)) with g = gcd(da, db);
        // the cofactors are coprime and square-free, so no refactoring needed.
        Int g = boost::multiprecision::gcd(da, db);
        Int d = (da / g) * (db / g);
        Rat coeff = ca * cb * Rat(g);
        auto it = out.terms_.find(d);
        if (it == out.terms_.end()) {
          out.terms_.emplace(d, coeff);
        } else {
          it->second += coeff;
          if (it->second == 0) out.terms_.erase(it);
        }
      }
    }
    return out;
  }
  Radical& operator*=(const Radical& o) { return *this = *this * o; }

  Radical& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) c *= s;
    return *this;
  }
  friend Radical operator*(Radical a, const Rat& s) { return a *= s; }
  friend Radical operator*(const Rat& s, Radical a) { return a *= s; }

  // Single-term radicals only: (c*sqrt(d))^-1 = sqrt(d)/(c*d).
  Radical inverse() const {
    if (terms_.empty()) throw std::domain_error("Radical::inverse: zero");
    if (terms_.size() != 1)
      throw std::domain_error("Radical::inverse: only single-term radicals are invertible here");
    auto& [d, c] = *terms_.begin();
    Radical r;
    r.terms_[d] = Rat(1) / (c * Rat(d));
    return r;
  }

  friend bool operator==(const Radical& a, const Radical& b) { return a.terms_ == b.terms_; }

  double to_double() const {
    double out = 0.0;
    for (auto& [d, c] : terms_) out += rat_to_double(c) * std::sqrt(d.convert_to<double>());
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [d, c] : terms_) {
      Rat mag = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (d == 1) {
        out += rat_str(mag);
      } else {
        if (mag != 1) out += rat_str(mag) + "*";
        out += "sqrt(" + d.str() + ")";
      }
    }
    return out;
  }

 private:
  std::map<Int, Rat> terms_;
};

inline Radical radical_add(const Radical& a, const Radical& b) { return a + b; }
inline Radical radical_mul(const Radical& a, const Radical& b) { return a * b; }

}  // namespace ae
