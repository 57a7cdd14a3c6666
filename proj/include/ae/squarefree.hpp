// Integer factorization helpers: square-free decomposition for radical
// canonicalization. Trial division covers everything the code families
// produce; Miller-Rabin + Pollard rho keep large search-generated
// denominators honest.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "ae/rational.hpp"

namespace ae {

inline Int int_sqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = int_sqrt(n);
  if (root) *root = r;
  return r * r == n;
}

namespace detail {

inline bool miller_rabin(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // Deterministic below 3.3e24; overwhelmingly reliable beyond.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = boost::multiprecision::powm(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    do {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = boost::multiprecision::gcd(x > y ? x - y : y - x, n);
    } while (d == 1);
    if (d != n) return d;
  }
}

inline void strip_factor(Int& n, std::int64_t p, std::map<Int, unsigned>& out) {
  while (n % p == 0) {
    ++out[Int(p)];
    n /= p;
  }
}

inline void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n <= 1) return;
  strip_factor(n, 2, out);
  strip_factor(n, 3, out);
  for (std::int64_t p = 5; p <= 1000000 && Int(p) * p <= n; p += 6) {
    strip_factor(n, p, out);
    strip_factor(n, p + 2, out);
  }
  if (n == 1) return;
  if (Int r; is_perfect_square(n, &r)) {
    std::map<Int, unsigned> inner;
    factor_into(r, inner);
    for (auto& [p, e] : inner) out[p] += 2 * e;
    return;
  }
  if (miller_rabin(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

inline std::map<Int, unsigned> factorize(const Int& n) {
  if (n <= 0) throw std::domain_error("factorize: argument must be positive");
  std::map<Int, unsigned> out;
  detail::factor_into(n, out);
  return out;
}

// n = root^2 * squarefree with squarefree minimal; requires n > 0.
struct SquarefreeParts {
  Int root;
  Int squarefree;
};

inline SquarefreeParts squarefree_decompose(const Int& n) {
  if (n <= 0) throw std::domain_error("squarefree_decompose: argument must be positive");
  SquarefreeParts parts{1, 1};
  for (auto& [p, e] : factorize(n)) {
    for (unsigned i = 0; i < e / 2; ++i) parts.root *= p;
    if (e % 2) parts.squarefree *= p;
  }
  return parts;
}

}  // namespace ae
