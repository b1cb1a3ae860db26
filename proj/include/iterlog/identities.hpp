// Exact checkers for the standalone identities: the WZ pair behind the
// binomial-harmonic sum, the Phi_n integral identity and its 2F1 form, the
// cotangent multiple-angle structure, the Pochhammer form of the Taylor
// coefficients, the h_1/h_2 logarithmic forms and the divisibility and
// palindrome properties of B_{n,2}.
//
// Each checker takes the object under test as an argument (with the library
// implementation as default) so that mutated inputs can be fed through it.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "iterlog/closed_forms.hpp"
#include "iterlog/logexpr.hpp"
#include "iterlog/number_theory.hpp"
#include "iterlog/power_series.hpp"
#include "iterlog/verdict.hpp"

namespace iterlog {

// -------------------------------------------------------------------- WZ

struct WZPair {
  std::function<Rat(long m, long r, long a)> F;
  std::function<Rat(long m, long r, long a)> G;
};

/// F(r,a) = (-1)^(r-1) C(a,r) / (r C(m+r,r)),
/// G(r,a) = (-1)^r C(a,r-1) / ((m+a+1) C(m+r-1,r-1)).
inline WZPair standard_wz_pair() {
  const auto bin = [](long n, long k) { return k < 0 || n < 0 ? BigInt(0) : binomial(n, k); };
  return {[bin](long m, long r, long a) {
            return Rat(bin(a, r) * (r % 2 == 1 ? 1 : -1), BigInt(r) * bin(m + r, r));
          },
          [bin](long m, long r, long a) {
            return Rat(bin(a, r - 1) * (r % 2 == 0 ? 1 : -1), BigInt(m + a + 1) * bin(m + r - 1, r - 1));
          }};
}

/// F(r,a+1) - F(r,a) = G(r+1,a) - G(r,a) on the grid; then U(a) = sum_r F(r,a)
/// satisfies U(a+1) - U(a) = 1/(m+a+1) and U(a) = H_{m+a} - H_m.
inline Verdict wz_certificate_check(long mmax, long amax, long rmax,
                                    const WZPair& pair = standard_wz_pair()) {
  Verdict v = Verdict::ok("wz_certificate");
  const auto H = harmonic_table(static_cast<unsigned long>(mmax + amax + 1));
  for (long m = 1; m <= mmax; ++m) {
    for (long a = 1; a <= amax; ++a) {
      for (long r = 1; r <= rmax; ++r) {
        const Rat lhs = pair.F(m, r, a + 1) - pair.F(m, r, a);
        const Rat rhs = pair.G(m, r + 1, a) - pair.G(m, r, a);
        if (lhs != rhs)
          v.fail(m, json{{"m", m}, {"r", r}, {"a", a}, {"difference", (lhs - rhs).str()}},
                 "WZ equation fails");
      }
      Rat u;
      for (long r = 1; r <= a; ++r) u += pair.F(m, r, a);
      Rat u_next;
      for (long r = 1; r <= a + 1; ++r) u_next += pair.F(m, r, a + 1);
      if (a == 1 && u != Rat(1) / Rat(m + 1)) v.fail(m, json{{"m", m}, {"a", a}}, "U(1) != 1/(m+1)");
      if (u_next - u != Rat(1) / Rat(m + a + 1))
        v.fail(m, json{{"m", m}, {"a", a}}, "U(a+1) - U(a) != 1/(m+a+1)");
      if (u != H[m + a] - H[m]) v.fail(m, json{{"m", m}, {"a", a}}, "U(a) != H_{m+a} - H_m");
    }
  }
  return v;
}

/// sum_{r=1}^{a} C(n, a-r) (-1)^r / r = -C(n,a) [H_n - H_{n-a}], 1 <= a <= n.
inline Verdict binom_harmonic_identity(unsigned nmax,
                                       const std::function<Rat(unsigned long)>& H = harmonic) {
  Verdict v = Verdict::ok("binomial_harmonic_identity");
  for (unsigned n = 1; n <= nmax; ++n) {
    for (unsigned a = 1; a <= n; ++a) {
      Rat lhs;
      for (unsigned r = 1; r <= a; ++r)
        lhs += Rat(binomial(n, a - r)) * Rat(r % 2 == 0 ? 1 : -1, r);
      const Rat rhs = -Rat(binomial(n, a)) * (H(n) - H(n - a));
      if (lhs != rhs) v.fail(n, json{{"n", n}, {"a", a}, {"difference", (lhs - rhs).str()}});
    }
  }
  return v;
}

// ------------------------------------------------------------ Phi_n forms

using PhiFn = std::function<QPoly(const Rat& a, unsigned n)>;

inline PhiFn default_phi() {
  return [](const Rat& a, unsigned n) { return phi_n(a, n); };
}

/// Distinct nonzero rationals 1, -1/3, 2, -1/5, 3, ...
inline std::vector<Rat> sample_points(unsigned count) {
  std::vector<Rat> out;
  for (unsigned k = 1; k <= count; ++k)
    out.push_back(k % 2 == 1 ? Rat(static_cast<long>((k + 1) / 2)) : Rat(-1, k + 1));
  return out;
}

/// int_0^x Phi_n(t,a) dt = (x+a) Phi_n(x,a)/(n+1) + [x^(n+1) + a^(n+1) - (x+a)^(n+1)]/(n+1)^2.
/// Both sides have degree <= n+1 in a, so n+2 distinct samples decide the
/// identity; fewer samples is a precondition violation.
inline Verdict phi_integral_check(unsigned nmax, const std::vector<Rat>& a_samples,
                                 const PhiFn& phi = default_phi()) {
  if (a_samples.size() < static_cast<std::size_t>(nmax) + 2)
    throw std::invalid_argument("phi_integral_check: need at least nmax + 2 samples of a");
  Verdict v = Verdict::ok("phi_integral");
  for (unsigned n = 1; n <= nmax; ++n) {
    const Rat n1(static_cast<long>(n + 1));
    for (std::size_t s = 0; s < static_cast<std::size_t>(n) + 2; ++s) {
      const Rat& a = a_samples[s];
      if (a.is_zero()) throw std::invalid_argument("phi_integral_check: a must be nonzero");
      const QPoly p = phi(a, n);
      const QPoly lhs = p.antiderivative0();
      QPoly bracket = QPoly::monomial(Rat(1), n + 1) - binom_power(a, n + 1);
      bracket += QPoly::constant(binom_power(a, n + 1).coeff(0));  // a^(n+1)
      const QPoly rhs = (QPoly{a, Rat(1)} * p).scaled(Rat(1) / n1) + bracket.scaled(Rat(1) / (n1 * n1));
      if (lhs != rhs) {
        v.fail(n, to_json(lhs - rhs), "a = " + a.str());
        break;
      }
    }
  }
  return v;
}

/// Phi_n(x,a) = -x^(n+1)/((n+1)(x+a)) 2F1(1, n+1; n+2; x/(x+a)) - (x+a)^n ln(a/(x+a))
/// and the integral identity
///   int_0^x (t/(1-t))^(n+1) 2F1(..; t) dt/(1-t) = (x/(1-x))^(n+1) [2F1(..; x) - 1]/(n+1),
/// compared as exact power series to x^order.
inline Verdict phi_2f1_check(unsigned nmax, const std::vector<Rat>& a_samples, std::size_t order,
                             const PhiFn& phi = default_phi()) {
  if (order < nmax + 5) throw std::invalid_argument("phi_2f1_check: order must be >= nmax + 5");
  using Series = PowerSeries<Rat>;
  Verdict v = Verdict::ok("phi_2f1");
  for (unsigned n = 1; n <= nmax; ++n) {
    const Rat n1(static_cast<long>(n + 1));
    const Series f = hyp2f1<Rat>(Rat(1), n1, n1 + Rat(1), order);
    for (const Rat& a : a_samples) {
      if (a.is_zero()) throw std::invalid_argument("phi_2f1_check: a must be nonzero");
      const Series inv_x_plus_a = geometric(-Rat(1) / a, order).scaled(Rat(1) / a);
      const Series z = inv_x_plus_a.shifted_up(1);  // x/(x+a)
      const Series hyper_part =
          (compose(f, z) * inv_x_plus_a).shifted_up(n + 1).scaled(-Rat(1) / n1);
      // -ln(a/(x+a)) = ln(1 + x/a)
      const Series log_part =
          Series::from_poly(binom_power(a, n), order) * log1p_scaled(Rat(1) / a, order);
      const Series diff = Series::from_poly(phi(a, n), order) - (hyper_part + log_part);
      if (!diff.is_zero()) {
        v.fail(n, "a = " + a.str(), "Phi_n series mismatch");
        break;
      }
    }

    const Series g = geometric(Rat(1), order);  // 1/(1-x)
    Series g_pow = Series::from_poly(QPoly::constant(Rat(1)), order);
    for (unsigned k = 0; k < n + 1; ++k) g_pow = g_pow * g;
    const Series lhs = (g_pow * g * f).shifted_up(n + 1).integral0();
    Series f_minus_1 = f;
    f_minus_1[0] -= Rat(1);
    const Series rhs = (g_pow * f_minus_1).shifted_up(n + 1).scaled(Rat(1) / n1);
    if (lhs != rhs) v.fail(n, nullptr, "2F1 integral identity mismatch");
  }
  return v;
}

// ------------------------------------------------------- trigonometric forms

/// P_n = x P_{n-1} - Q_{n-1}, Q_n = P_{n-1} + x Q_{n-1}, P_0 = 2, Q_0 = 0:
/// the polynomial content of cot(n theta) = R_n(cot theta).
inline Verdict cot_multiple_angle_check(const std::vector<CotPair>& pairs) {
  Verdict v = Verdict::ok("cot_multiple_angle");
  const QPoly x = QPoly::x();
  QPoly p = QPoly::constant(Rat(2));
  QPoly q;
  for (std::size_t n = 1; n < pairs.size(); ++n) {
    QPoly pn = x * p - q;
    QPoly qn = p + x * q;
    if (pn != pairs[n].P) v.fail(static_cast<long>(n), to_json(pn - pairs[n].P), "P_n recurrence");
    if (qn != pairs[n].Q) v.fail(static_cast<long>(n), to_json(qn - pairs[n].Q), "Q_n recurrence");
    p = std::move(pn);
    q = std::move(qn);
  }
  return v;
}

inline std::vector<CotPair> cot_pairs(unsigned nmax) {
  std::vector<CotPair> out{{QPoly::constant(Rat(2)), QPoly{}}};
  for (unsigned n = 1; n <= nmax; ++n) out.push_back(cot_pair(n));
  return out;
}

inline Verdict cot_multiple_angle_check(unsigned nmax) {
  return cot_multiple_angle_check(cot_pairs(nmax));
}

/// (-n)_{2k+1} = -n!/(n-2k-1)! (zero past n), and the resulting Taylor
/// coefficients reproduce B_{n,2} (sine series) and C_{n,2} (cosine series).
inline Verdict pochhammer_taylor_check(const std::vector<QPoly>& B, const std::vector<QPoly>& C) {
  Verdict v = Verdict::ok("pochhammer_taylor");
  for (unsigned n = 1; n < B.size() && n < C.size(); ++n) {
    const Rat z(-static_cast<long>(n));
    const Rat inv = detail::inv_factorial(n);
    std::vector<Rat> b(n + 1);
    std::vector<Rat> c(n + 1);
    for (unsigned k = 0; 2 * k <= n + 1; ++k) {
      const Rat odd = pochhammer(z, 2 * k + 1);
      const Rat expected = 2 * k + 1 <= n ? -Rat(factorial(n)) / Rat(factorial(n - 2 * k - 1)) : Rat(0);
      if (odd != expected) v.fail(n, odd.str(), "(-n)_{2k+1} identity, k=" + std::to_string(k));
      if (2 * k + 1 <= n)
        b[n - 2 * k - 1] = Rat(-2) * inv * detail::sign(k) * odd / Rat(factorial(2 * k + 1));
      if (2 * k <= n)
        c[n - 2 * k] = inv * detail::sign(k) * pochhammer(z, 2 * k) / Rat(factorial(2 * k));
    }
    if (QPoly(std::move(b)) != B[n]) v.fail(n, to_json(B[n]), "sine series vs B_{n,2}");
    if (QPoly(std::move(c)) != C[n]) v.fail(n, to_json(C[n]), "cosine series vs C_{n,2}");
  }
  return v;
}

// -------------------------------------------------------------- h1 / h2

/// Power series of h_1 = 2F1(1/3, 1; 4/3; -x^3) and h_2 = 2F1(2/3, 1; 5/3; -x^3)
/// against their omega-logarithm forms, then the displayed f_1, f_2, f_3
/// against the given iterates (by default the root-basis iterates for 1 + x^3).
inline Verdict h1h2_log_form_check(std::size_t order, const std::vector<LogExpr<EisenRat>>& f) {
  if (order < 12) throw std::invalid_argument("h1h2_log_form_check: order must be >= 12");
  if (f.size() < 4) throw std::invalid_argument("h1h2_log_form_check: need f_0..f_3");
  using E = EisenRat;
  using Series = PowerSeries<E>;
  Verdict v = Verdict::ok("h1h2_log_forms");
  const E one(1);
  const E w = E::omega();
  const E wb = E::omega_bar();

  const Series h1 = hyp2f1<E>(Rat(1, 3), Rat(1), Rat(4, 3), order).substitute_power(E(-1), 3);
  const Series h2 = hyp2f1<E>(Rat(2, 3), Rat(1), Rat(5, 3), order).substitute_power(E(-1), 3);

  const std::size_t o1 = order + 1;
  const Series h1_log = (log1p_scaled(one, o1) + log1p_scaled(wb, o1).scaled(w) +
                         log1p_scaled(w, o1).scaled(wb))
                            .shifted_down(1)
                            .scaled(E(Rat(1, 3)));
  const std::size_t o2 = order + 2;
  const Series h2_log = (log1p_scaled(one, o2) + log1p_scaled(w, o2).scaled(w) +
                         log1p_scaled(wb, o2).scaled(wb))
                            .shifted_down(2)
                            .scaled(E(Rat(-2, 3)));
  if (h1 != h1_log) v.fail(1, nullptr, "h_1 log form");
  if (h2 != h2_log) v.fail(2, nullptr, "h_2 log form");

  const Series ln1x3 = log1p_scaled(one, order).substitute_power(one, 3);
  const auto mono = [&](const Rat& c, std::size_t k) {
    return Series::from_poly(EPoly::monomial(E(c), k), order);
  };
  const Series f1 = mono(Rat(-3), 1) + mono(Rat(1), 1) * ln1x3 + mono(Rat(3), 1) * h1;
  const Series f2 = mono(Rat(-9, 4), 2) + mono(Rat(1, 2), 2) * ln1x3 + mono(Rat(3), 2) * h1 -
                    mono(Rat(3, 4), 2) * h2;
  const Series f3 = mono(Rat(-11, 12), 3) + (mono(Rat(1, 6), 3) + mono(Rat(1, 6), 0)) * ln1x3 +
                    mono(Rat(3, 2), 3) * h1 - mono(Rat(3, 4), 3) * h2;
  const Series displayed[] = {f1, f2, f3};
  for (unsigned n = 1; n <= 3; ++n)
    if (series_expand(f[n], order) != displayed[n - 1])
      v.fail(static_cast<long>(n), nullptr, "displayed f_n in terms of h_1, h_2");
  return v;
}

inline Verdict h1h2_log_form_check(std::size_t order) {
  return h1h2_log_form_check(order, iterate_all(roots_case3(), 3));
}

// ---------------------------------------------------- B_{n,2} arithmetic

/// m | n implies B_{m,2} | B_{n,2}; B must hold B_{0,2}..B_{nmax,2}.
inline Verdict divisibility_check(const std::vector<QPoly>& B) {
  Verdict v = Verdict::ok("b_n2_divisibility");
  for (std::size_t n = 1; n < B.size(); ++n)
    for (std::size_t m = 1; m <= n; ++m)
      if (n % m == 0 && !divides(B[m], B[n]))
        v.fail(static_cast<long>(n), json{{"m", m}, {"n", n}}, "B_m does not divide B_n");
  return v;
}

/// For odd n: C(2n,n) B_{2n,2} = (-1)^((n-1)/2) x B_{n,2} B*_{n,2}, and the
/// coefficients of B_{2n,2} are palindromic. B must reach index 2 nmax.
inline Verdict palindrome_check(const std::vector<QPoly>& B, unsigned nmax) {
  if (B.size() < 2 * static_cast<std::size_t>(nmax) + 1)
    throw std::invalid_argument("palindrome_check: need B up to 2 nmax");
  Verdict v = Verdict::ok("b_n2_palindrome");
  for (unsigned n = 1; n <= nmax; n += 2) {
    const QPoly lhs = B[2 * n].scaled(Rat(binomial(2 * n, n)));
    const QPoly rhs = (QPoly::x() * B[n] * B[n].reverse()).scaled(detail::sign((n - 1) / 2));
    if (lhs != rhs) v.fail(n, to_json(lhs - rhs), "product identity");
    if (!B[2 * n].is_palindromic()) v.fail(n, to_json(B[2 * n]), "B_{2n,2} not palindromic");
  }
  return v;
}

}  // namespace iterlog
