// Elementary number theory on BigInt / Rat: harmonic numbers, lcm(1..n),
// p-adic valuations and prime-power detection.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "iterlog/scalars.hpp"

namespace iterlog {

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// C(n, k); zero when k > n.
inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

struct PrimePower {
  std::uint64_t p;
  unsigned r;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (p, r) with n = p^r, by trial division up to sqrt(n).
inline std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("is_prime_power: n must be >= 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  unsigned r = 0;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, r};
}

/// H_n = sum_{k=1}^{n} 1/k; H_0 = 0.
inline Rat harmonic(unsigned long n) {
  mpq_class h = 0;
  for (unsigned long k = 1; k <= n; ++k) h += mpq_class(1, k);
  h.canonicalize();
  return Rat(h);
}

/// H_0, ..., H_n computed incrementally.
inline std::vector<Rat> harmonic_table(unsigned long n) {
  std::vector<Rat> out;
  out.reserve(n + 1);
  mpq_class h = 0;
  out.emplace_back(0);
  for (unsigned long k = 1; k <= n; ++k) {
    h += mpq_class(1, k);
    out.emplace_back(h);
  }
  return out;
}

struct HarmonicFraction {
  BigInt N;
  BigInt D;
};

inline HarmonicFraction harmonic_denominator(unsigned long n) {
  if (n < 1) throw std::invalid_argument("harmonic_denominator: n must be >= 1");
  const Rat h = harmonic(n);
  return {h.num(), h.den()};
}

inline BigInt lcm_upto(unsigned long n) {
  if (n < 1) throw std::invalid_argument("lcm_upto: n must be >= 1");
  BigInt l = 1;
  for (unsigned long k = 2; k <= n; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
  return l;
}

/// exp(Lambda(n)): p when n is a power of the prime p, otherwise 1.
inline BigInt von_mangoldt_exp(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("von_mangoldt_exp: n must be >= 2");
  const auto pp = is_prime_power(n);
  return pp ? BigInt(static_cast<unsigned long>(pp->p)) : BigInt(1);
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

/// nu_p of a nonzero integer.
inline long nu_p(const BigInt& n, unsigned long p) {
  require_prime(p);
  if (n == 0) throw std::domain_error("nu_p: valuation of zero is infinite");
  BigInt rest;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), BigInt(p).get_mpz_t()));
}

/// nu_p(num) - nu_p(den).
inline long nu_p(const Rat& q, unsigned long p) {
  if (q.is_zero()) throw std::domain_error("nu_p: valuation of zero is infinite");
  return nu_p(q.num(), p) - nu_p(q.den(), p);
}

/// Legendre: nu_p(n!) = sum_i floor(n / p^i).
inline unsigned long nu_p_factorial(unsigned long n, unsigned long p) {
  require_prime(p);
  unsigned long total = 0;
  for (unsigned long q = n / p; q > 0; q /= p) total += q;
  return total;
}

/// Kummer: nu_p(C(a, b)) is the number of borrows in a - b written in base p.
inline unsigned long nu_p_binomial(unsigned long a, unsigned long b, unsigned long p) {
  require_prime(p);
  if (b > a) throw std::invalid_argument("nu_p_binomial: need b <= a");
  unsigned long borrows = 0;
  unsigned long borrow = 0;
  while (a > 0 || b > 0) {
    const long da = static_cast<long>(a % p);
    const long db = static_cast<long>(b % p) + static_cast<long>(borrow);
    borrow = da < db ? 1 : 0;
    borrows += borrow;
    a /= p;
    b /= p;
  }
  return borrows;
}

inline unsigned floor_log(unsigned long n, unsigned long base) {
  if (n == 0) throw std::invalid_argument("floor_log: n must be >= 1");
  unsigned r = 0;
  while (n >= base) {
    n /= base;
    ++r;
  }
  return r;
}

}  // namespace iterlog
