// Clebsch-Gordan coefficients in the Condon-Shortley convention, computed
// exactly from the Racah single-sum closed form. The square-root prefactor
// is assembled from prime exponents of the factorials (Legendre's formula),
// so the result is a canonical one-term Radical without any big-integer
// factorization.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "ae/half_int.hpp"
#include "ae/radical.hpp"
#include "ae/rational.hpp"

namespace ae {
namespace detail {

inline const std::vector<std::int64_t>& primes_up_to(std::int64_t n) {
  thread_local std::vector<std::int64_t> primes;
  thread_local std::int64_t covered = 1;
  if (n > covered) {
    std::int64_t hi = std::max<std::int64_t>(n, 2 * covered);
    primes.clear();
    std::vector<bool> sieve(static_cast<std::size_t>(hi) + 1, true);
    for (std::int64_t p = 2; p <= hi; ++p) {
      if (!sieve[static_cast<std::size_t>(p)]) continue;
      primes.push_back(p);
      for (std::int64_t q = p * p; q <= hi; q += p) sieve[static_cast<std::size_t>(q)] = false;
    }
    covered = hi;
  }
  return primes;
}

inline const Int& factorial(std::int64_t n) {
  thread_local std::vector<Int> cache{Int(1)};
  while (static_cast<std::int64_t>(cache.size()) <= n)
    cache.push_back(cache.back() * Int(cache.size()));
  return cache[static_cast<std::size_t>(n)];
}

using ExpMap = std::map<std::int64_t, std::int64_t>;

// Adds sign * (exponent of p in n!) for every prime p <= n.
inline void add_factorial_exponents(std::int64_t n, int sign, ExpMap& exps) {
  for (std::int64_t p : primes_up_to(n)) {
    if (p > n) break;
    std::int64_t e = 0;
    for (std::int64_t q = p; q <= n; q *= p) {
      e += n / q;
      if (q > n / p) break;
    }
    exps[p] += sign * e;
  }
}

inline void add_integer_exponents(std::int64_t v, int sign, ExpMap& exps) {
  for (std::int64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
    while (v % p == 0) {
      exps[p] += sign;
      v /= p;
    }
  }
  if (v > 1) exps[v] += sign;
}

// sqrt(prod p^e) split into a rational even part and a square-free radicand.
inline Radical radical_from_exponents(const ExpMap& exps, const Rat& scale) {
  Rat even = 1;
  Int radicand = 1;
  for (auto& [p, e] : exps) {
    if (e == 0) continue;
    std::int64_t q = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
    if (q >= 0) {
      for (std::int64_t i = 0; i < q; ++i) even *= p;
    } else {
      for (std::int64_t i = 0; i < -q; ++i) even /= p;
    }
    if (e - 2 * q) radicand *= p;
  }
  return Radical::term(scale * even, radicand);
}

}  // namespace detail

// C^{J,M}_{j1,m1; j2,m2}. Zero when M != m1 + m2 or the triangle rule
// (including integer perimeter) fails; domain error for invalid (j, m).
inline Radical clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                              HalfInt M) {
  require_valid_state(j1, m1, "clebsch_gordan");
  require_valid_state(j2, m2, "clebsch_gordan");
  require_valid_state(J, M, "clebsch_gordan");
  if ((m1 + m2) != M) return {};
  HalfInt per = j1 + j2 - J;
  if (!per.is_integer()) return {};
  if (per.twice() < 0 || (j1 - j2 + J).twice() < 0 || (j2 - j1 + J).twice() < 0) return {};

  const std::int64_t A = (j1 + j2 - J).twice() / 2;
  const std::int64_t B = (j1 - j2 + J).twice() / 2;
  const std::int64_t C = (j2 - j1 + J).twice() / 2;
  const std::int64_t j1m1p = (j1 + m1).twice() / 2, j1m1m = (j1 - m1).twice() / 2;
  const std::int64_t j2m2p = (j2 + m2).twice() / 2, j2m2m = (j2 - m2).twice() / 2;
  const std::int64_t JMp = (J + M).twice() / 2, JMm = (J - M).twice() / 2;
  const std::int64_t t4 = (J - j2 + m1).twice() / 2;  // (J - j2 + m1) + z
  const std::int64_t t5 = (J - j1 - m2).twice() / 2;  // (J - j1 - m2) + z
  const std::int64_t zmin = std::max<std::int64_t>({0, -t4, -t5});
  const std::int64_t zmax = std::min<std::int64_t>({A, j1m1m, j2m2p});
  if (zmax < zmin) return {};

  Rat sum = 0;
  for (std::int64_t z = zmin; z <= zmax; ++z) {
    Int den = detail::factorial(z) * detail::factorial(A - z) * detail::factorial(j1m1m - z) *
              detail::factorial(j2m2p - z) * detail::factorial(t4 + z) * detail::factorial(t5 + z);
    Rat term(1, den);
    sum += (z % 2) ? -term : term;
  }
  if (sum == 0) return {};

  detail::ExpMap exps;
  detail::add_factorial_exponents(A, 1, exps);
  detail::add_factorial_exponents(B, 1, exps);
  detail::add_factorial_exponents(C, 1, exps);
  detail::add_factorial_exponents(JMp, 1, exps);
  detail::add_factorial_exponents(JMm, 1, exps);
  detail::add_factorial_exponents(j1m1p, 1, exps);
  detail::add_factorial_exponents(j1m1m, 1, exps);
  detail::add_factorial_exponents(j2m2p, 1, exps);
  detail::add_factorial_exponents(j2m2m, 1, exps);
  detail::add_factorial_exponents((j1 + j2 + J).twice() / 2 + 1, -1, exps);
  detail::add_integer_exponents(J.twice() + 1, 1, exps);  // 2J + 1
  return detail::radical_from_exponents(exps, sum);
}

// <ell_out, m_out | Y^r_dm | ell_in, m_in> in the unit-reduced-element
// convention: the bare coupling coefficient C^{ell_out, m_out}_{ell_in, m_in; r, dm}.
// All r- and ell-dependent prefactors are dropped; they rescale whole
// operators and never affect a Knill-Laflamme verdict.
inline Radical y_matrix_element(HalfInt ell_out, HalfInt m_out, int r, int dm, HalfInt ell_in,
                                HalfInt m_in) {
  if (r < 1) throw std::domain_error("y_matrix_element: rank r must be >= 1");
  if (std::abs(dm) > r) throw std::domain_error("y_matrix_element: |dm| must be <= r");
  require_valid_state(ell_in, m_in, "y_matrix_element");
  require_valid_state(ell_out, m_out, "y_matrix_element");
  if (m_out != m_in + HalfInt(dm)) return {};
  if (std::llabs((ell_out - ell_in).twice()) > 2 * r) return {};
  return clebsch_gordan(ell_in, m_in, HalfInt(r), HalfInt(dm), ell_out, m_out);
}

}  // namespace ae
