// Explicit formulas for the iterated integrals of ln(1 + x^N), N = 1, 2, 3,
// and exact conversions between the root basis and the real bases
//   N = 2:  A + B arctan(x) + C ln(1 + x^2)
//   N = 3:  (A0 + sqrt(3) pi Api) + B u + C v + D w
// with u = sqrt(3) arctan((1 - 2x)/sqrt(3)), v = ln(x + 1), w = ln(x^2 - x + 1).
//
// Every constructor that has two independent formulas evaluates both and
// throws CheckFailure when they disagree.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iterlog/logexpr.hpp"
#include "iterlog/number_theory.hpp"
#include "iterlog/poly.hpp"
#include "iterlog/verdict.hpp"

namespace iterlog {

namespace detail {

inline Rat inv_factorial(unsigned long n) { return Rat(1) / Rat(factorial(n)); }

inline Rat sign(unsigned long k) { return k % 2 == 0 ? Rat(1) : Rat(-1); }

/// (x + a)^m for m = 0..n.
template <ExactField S>
std::vector<Poly<S>> binom_powers(const S& a, unsigned long n) {
  std::vector<Poly<S>> out;
  out.reserve(n + 1);
  out.push_back(Poly<S>::constant(S(1)));
  const Poly<S> lin{a, S(1)};
  for (unsigned long m = 1; m <= n; ++m) out.push_back(out.back() * lin);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------- N = 1

struct Family1 {
  QPoly A;
  QPoly B;
};

/// f_n = A + B ln(1 + x), both displayed forms of A evaluated and compared.
inline Family1 family_n1(unsigned n) {
  const Rat inv = detail::inv_factorial(n);
  const auto H = harmonic_table(n);

  std::vector<Rat> harmonic_form(n + 1);
  for (unsigned k = 1; k <= n; ++k)
    harmonic_form[k] = -inv * Rat(binomial(n, k)) * (H[n] - H[n - k]);
  QPoly a1(std::move(harmonic_form));

  QPoly a2;
  for (unsigned k = 1; k <= n; ++k)
    a2.add_scaled_shifted(binom_power(Rat(1), n - k), -inv / Rat(static_cast<long>(k)), k);
  require(a1 == a2, "family_n1: the two forms of A_{n,1} disagree at n=" + std::to_string(n));

  return {std::move(a1), binom_power(Rat(1), n).scaled(inv)};
}

// ------------------------------------------------------- general ln(x + a)

/// n-th iterated integral of ln(x + a): S + lnA * ln(a) + T * ln(x + a).
template <ExactField S>
struct GeneralLogIterate {
  Poly<S> pure;
  Poly<S> log_coeff;   // T = (x + a)^n / n!
  Poly<S> ln_a_coeff;  // -((x + a)^n - x^n) / n!
  S a;
  unsigned n = 0;

  /// The same function after subtracting the n-th iterate of the constant
  /// ln(a), written in the basis l_a(x) = ln(1 + x/a).
  LogExpr<S> normalized() const {
    const Poly<S> ln_a_total =
        log_coeff + ln_a_coeff - Poly<S>::monomial(S(detail::inv_factorial(n)), n);
    require(ln_a_total.is_zero(), "iter_log_linear: ln(a) bookkeeping does not cancel");
    typename LogExpr<S>::Terms t;
    t.emplace(a, log_coeff);
    return LogExpr<S>(pure, std::move(t));
  }
};

/// Phi_n(x, a) = sum_{k=1}^{n} x^k (x + a)^(n-k) / k.
template <ExactField S>
Poly<S> phi_n(const S& a, unsigned n) {
  const auto powers = detail::binom_powers(a, n);
  Poly<S> out;
  for (unsigned k = 1; k <= n; ++k)
    out.add_scaled_shifted(powers[n - k], S(Rat(1) / Rat(static_cast<long>(k))), k);
  return out;
}

template <ExactField S>
GeneralLogIterate<S> iter_log_linear(const S& a, unsigned n) {
  if (field_traits<S>::is_zero(a)) throw std::invalid_argument("iter_log_linear: a must be nonzero");
  const S inv(detail::inv_factorial(n));
  const Poly<S> power = binom_power(a, n);
  GeneralLogIterate<S> g;
  g.pure = phi_n(a, n).scaled(-inv);
  g.log_coeff = power.scaled(inv);
  g.ln_a_coeff = (power - Poly<S>::monomial(S(1), n)).scaled(-inv);
  g.a = a;
  g.n = n;
  return g;
}

/// Sum over roots of the normalized single-root iterates.
template <ExactField S>
LogExpr<S> iterate_by_roots(const std::vector<S>& roots, unsigned n) {
  LogExpr<S> out;
  for (const auto& z : roots) out += iter_log_linear(z, n).normalized();
  return out;
}

// ---------------------------------------------------------------- N = 2

inline GaussRat unit_i() { return GaussRat::i(); }

/// B_{n,2}(0): 2 (-1)^((n-1)/2) / n! for odd n, else 0.
inline Rat init_b2(unsigned n) {
  if (n % 2 == 0) return Rat(0);
  return Rat(2) * detail::sign((n - 1) / 2) * detail::inv_factorial(n);
}

/// C_{n,2}(0): (-1)^(n/2) / n! for even n, else 0.
inline Rat init_c2(unsigned n) {
  if (n % 2 == 1) return Rat(0);
  return detail::sign(n / 2) * detail::inv_factorial(n);
}

/// phi_m(x) = (x + i)^m - (x - i)^m.
inline GPoly varphi(unsigned m) { return binom_power(unit_i(), m) - binom_power(-unit_i(), m); }

inline QPoly b_n2(unsigned n) {
  const Rat inv = detail::inv_factorial(n);
  std::vector<Rat> v(n + 1);
  for (unsigned j = 0; 2 * j + 1 <= n; ++j)
    v[n - 2 * j - 1] = Rat(2) * inv * detail::sign(j) * Rat(binomial(n, 2 * j + 1));
  QPoly explicit_form(std::move(v));

  // (1/(i n!)) [(x+i)^n - (x-i)^n]
  const GPoly gauss = varphi(n).scaled(GaussRat(Rat(0), -inv));
  require(to_rational(gauss) == explicit_form,
          "b_n2: explicit and Gaussian forms disagree at n=" + std::to_string(n));
  require(explicit_form.coeff(0) == init_b2(n), "b_n2: initial value mismatch");
  return explicit_form;
}

inline QPoly c_n2(unsigned n) {
  const Rat inv = detail::inv_factorial(n);
  std::vector<Rat> v(n + 1);
  for (unsigned j = 0; 2 * j <= n; ++j)
    v[n - 2 * j] = inv * detail::sign(j) * Rat(binomial(n, 2 * j));
  QPoly explicit_form(std::move(v));

  const GPoly gauss =
      (binom_power(unit_i(), n) + binom_power(-unit_i(), n)).scaled(GaussRat(inv / Rat(2)));
  require(to_rational(gauss) == explicit_form,
          "c_n2: explicit and Gaussian forms disagree at n=" + std::to_string(n));
  require(explicit_form.coeff(0) == init_c2(n), "c_n2: initial value mismatch");
  return explicit_form;
}

/// h_{n,k} = sum_{l=1}^{n-1-2k} C(n-l, 2k+1) / (l (l+1)), 0 <= k <= floor(n/2) - 1.
inline Rat h_nk(unsigned n, unsigned k) {
  if (n < 2 || k + 1 > n / 2) throw std::out_of_range("h_nk: k out of range");
  mpq_class sum = 0;
  for (unsigned l = 1; l + 2 * k + 1 <= n; ++l) {
    mpq_class term(binomial(n - l, 2 * k + 1), BigInt(l) * BigInt(l + 1));
    term.canonicalize();
    sum += term;
  }
  return Rat(sum);
}

/// g_{n,k}(j) = C(j, 2k+1) / ((n-j)(n-j+1)), 2k+1 <= j <= n-1.
inline Rat g_nk(unsigned n, unsigned k, unsigned j) {
  if (n < 2 || k + 1 > n / 2 || j < 2 * k + 1 || j > n - 1)
    throw std::out_of_range("g_nk: index out of range");
  return Rat(binomial(j, 2 * k + 1), BigInt(n - j) * BigInt(n - j + 1));
}

/// G_n = -2i sum_k (-1)^k h_{n,k} x^(n-2k) over Q(i).
inline GPoly big_g(unsigned n) {
  if (n < 2) throw std::out_of_range("big_g: n must be >= 2");
  std::vector<GaussRat> v(n + 1);
  for (unsigned k = 0; k + 1 <= n / 2; ++k)
    v[n - 2 * k] = GaussRat(Rat(0), Rat(-2) * detail::sign(k) * h_nk(n, k));
  return GPoly(std::move(v));
}

/// A_{n,2} by the a_k form (a_1 = -1, a_k = k(k-1)), cross-checked against
/// the phi_m form, the G_n form and the B_{m,2} form.
inline QPoly a_n2(unsigned n) {
  if (n < 1) throw std::invalid_argument("a_n2: n must be >= 1");
  const Rat inv = detail::inv_factorial(n);
  std::vector<GPoly> phis(n + 1);
  for (unsigned m = 0; m <= n; ++m) phis[m] = varphi(m);
  auto a_k = [](unsigned k) { return k == 1 ? Rat(-1) : Rat(static_cast<long>(k) * (k - 1)); };

  // (1/(i n!)) sum_{k=1}^{n} x^k / a_k phi_{n-k+1}
  GPoly type1;
  for (unsigned k = 1; k <= n; ++k) type1.add_scaled_shifted(phis[n - k + 1], GaussRat(Rat(1) / a_k(k)), k);
  const QPoly result = to_rational(type1.scaled(GaussRat(Rat(0), -inv)));

  // (i/n!) [x phi_n - sum_{k=2}^{n} x^k phi_{n-k+1} / (k(k-1))]
  GPoly type2 = phis[n].shifted(1);
  for (unsigned k = 2; k <= n; ++k)
    type2.add_scaled_shifted(phis[n - k + 1], GaussRat(Rat(-1) / Rat(static_cast<long>(k) * (k - 1))), k);
  require(to_rational(type2.scaled(GaussRat(Rat(0), inv))) == result,
          "a_n2: phi_m form disagrees at n=" + std::to_string(n));

  if (n >= 2) {
    const GPoly via_g = (phis[n].shifted(1) + big_g(n)).scaled(GaussRat(Rat(0), inv));
    require(to_rational(via_g) == result, "a_n2: G_n form disagrees at n=" + std::to_string(n));
  }

  // (1/n!) sum_k (n-k+1)!/a_k x^k B_{n-k+1,2}
  QPoly via_b;
  for (unsigned k = 1; k <= n; ++k)
    via_b.add_scaled_shifted(b_n2(n - k + 1), inv * Rat(factorial(n - k + 1)) / a_k(k), k);
  require(via_b == result, "a_n2: B_{m,2} form disagrees at n=" + std::to_string(n));
  return result;
}

struct HumanForm2 {
  QPoly A;
  QPoly B;
  QPoly C;
  friend bool operator==(const HumanForm2&, const HumanForm2&) = default;
};

/// A + B arctan x + C ln(1+x^2) from the root basis over {i, -i}, using
/// l_{-i} = ln(1 + ix) = ln(1+x^2)/2 + i arctan x and its conjugate.
inline HumanForm2 to_human2(const LogExpr<GaussRat>& e) {
  const GaussRat i = unit_i();
  for (const auto& [z, t] : e.terms())
    if (!(z == i) && !(z == -i)) throw std::invalid_argument("to_human2: root outside {i, -i}");
  const GPoly tp = e.coeff(i);
  const GPoly tm = e.coeff(-i);
  HumanForm2 h;
  h.A = to_rational(e.poly());
  h.B = to_rational((tm - tp).scaled(i));
  h.C = to_rational((tp + tm).scaled(GaussRat(Rat(1, 2))));
  return h;
}

inline LogExpr<GaussRat> from_human2(const HumanForm2& h) {
  const GPoly c = h.C.cast<GaussRat>();
  const GPoly b_half = h.B.cast<GaussRat>().scaled(GaussRat(Rat(0), Rat(1, 2)));
  LogExpr<GaussRat>::Terms t;
  t.emplace(unit_i(), c + b_half);
  t.emplace(-unit_i(), c - b_half);
  return LogExpr<GaussRat>(h.A.cast<GaussRat>(), std::move(t));
}

/// P_n = 2 n! C_{n,2}, Q_n = n! B_{n,2}; P_n / Q_n = cot(n arccot x).
struct CotPair {
  QPoly P;
  QPoly Q;
};

inline CotPair cot_pair(unsigned n) {
  if (n < 1) throw std::invalid_argument("cot_pair: n must be >= 1");
  const Rat f(factorial(n));
  return {c_n2(n).scaled(Rat(2) * f), b_n2(n).scaled(f)};
}

// ---------------------------------------------------------------- N = 3

/// 0, 1, -1 for k = 0, 1, 2 mod 3; defined for every integer.
inline int chi3(long k) {
  const long r = ((k % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

inline int lambda3(long k) { return ((k % 3) + 3) % 3 == 0 ? 1 : 0; }

struct Family3 {
  QPoly B;
  QPoly C;
  QPoly D;
};

/// Coefficients of u, v, w, each checked against its omega-power form.
inline Family3 family_n3(unsigned n) {
  const Rat inv = detail::inv_factorial(n);
  std::vector<Rat> b(n + 1);
  std::vector<Rat> d(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    const Rat bin(binomial(n, k));
    b[k] = -inv * Rat(chi3(static_cast<long>(n) - k)) * bin;
    d[k] = inv / Rat(2) * Rat(3 * lambda3(static_cast<long>(n) - k) - 1) * bin;
  }
  Family3 f{QPoly(std::move(b)), binom_power(Rat(1), n).scaled(inv), QPoly(std::move(d))};

  const EisenRat w = EisenRat::omega();
  const EisenRat wb = EisenRat::omega_bar();
  const EPoly pw = binom_power(w, n);
  const EPoly pwb = binom_power(wb, n);
  // i / sqrt(3) = (omega - omega_bar) / 3
  const EPoly b_omega = (pw - pwb).scaled((w - wb) * EisenRat(inv / Rat(3)));
  const EPoly d_omega = (pw + pwb).scaled(EisenRat(inv / Rat(2)));
  const EPoly c_omega = binom_power(EisenRat(1), n).scaled(EisenRat(inv));
  require(to_rational(b_omega) == f.B, "family_n3: B disagrees at n=" + std::to_string(n));
  require(to_rational(c_omega) == f.C, "family_n3: C disagrees at n=" + std::to_string(n));
  require(to_rational(d_omega) == f.D, "family_n3: D disagrees at n=" + std::to_string(n));
  return f;
}

/// Pure polynomial part in the basis ln(x+1), ln(x+omega), ln(x+omega_bar).
inline QPoly a_tilde_n3(unsigned n) {
  const Rat inv = detail::inv_factorial(n);
  const auto p1 = detail::binom_powers(EisenRat(1), n);
  const auto pw = detail::binom_powers(EisenRat::omega(), n);
  const auto pwb = detail::binom_powers(EisenRat::omega_bar(), n);
  EPoly sum;
  for (unsigned k = 1; k <= n; ++k)
    sum.add_scaled_shifted(p1[n - k] + pw[n - k] + pwb[n - k],
                           EisenRat(-inv / Rat(static_cast<long>(k))), k);
  return to_rational(sum);
}

struct HumanForm3 {
  QPoly A0;
  QPoly Api;  // coefficient of sqrt(3) pi
  QPoly B;
  QPoly C;
  QPoly D;
  friend bool operator==(const HumanForm3&, const HumanForm3&) = default;
};

/// Conversion from the root basis over {1, omega, omega_bar}:
///   l_1 = v,  l_omega + l_omega_bar = w,
///   l_omega - l_omega_bar = (2i/sqrt(3)) (u - sqrt(3) pi / 6).
/// The constant u(0) = sqrt(3) pi / 6 lands in Api = -B/6.
inline HumanForm3 to_human3(const LogExpr<EisenRat>& e) {
  const EisenRat one(1);
  const EisenRat w = EisenRat::omega();
  const EisenRat wb = EisenRat::omega_bar();
  for (const auto& [z, t] : e.terms())
    if (!(z == one) && !(z == w) && !(z == wb))
      throw std::invalid_argument("to_human3: root outside {1, omega, omega_bar}");
  const EPoly tw = e.coeff(w);
  const EPoly twb = e.coeff(wb);
  HumanForm3 h;
  h.A0 = to_rational(e.poly());
  h.B = to_rational((tw - twb).scaled((w - wb) / EisenRat(3)));
  h.C = to_rational(e.coeff(one));
  h.D = to_rational((tw + twb).scaled(EisenRat(Rat(1, 2))));
  h.Api = h.B.scaled(Rat(-1, 6));
  return h;
}

inline LogExpr<EisenRat> from_human3(const HumanForm3& h) {
  if (h.Api != h.B.scaled(Rat(-1, 6)))
    throw std::invalid_argument("from_human3: Api must equal -B/6 for an iterate vanishing at 0");
  const EisenRat w = EisenRat::omega();
  const EisenRat wb = EisenRat::omega_bar();
  const EPoly d = h.D.cast<EisenRat>();
  // T_omega - T_omega_bar = 3B/(omega - omega_bar) = -(omega - omega_bar) B
  const EPoly half_diff = h.B.cast<EisenRat>().scaled((wb - w) / EisenRat(2));
  LogExpr<EisenRat>::Terms t;
  t.emplace(EisenRat(1), h.C.cast<EisenRat>());
  t.emplace(w, d + half_diff);
  t.emplace(wb, d - half_diff);
  return LogExpr<EisenRat>(h.A0.cast<EisenRat>(), std::move(t));
}

/// N = 1 analogue: (A, B) with f = A + B ln(1 + x).
inline Family1 to_human1(const LogExpr<Rat>& e) {
  for (const auto& [z, t] : e.terms())
    if (!(z == Rat(1))) throw std::invalid_argument("to_human1: root outside {1}");
  return {e.poly(), e.coeff(Rat(1))};
}

inline json to_json(const Family1& h) { return {{"A", to_json(h.A)}, {"B", to_json(h.B)}}; }
inline json to_json(const HumanForm2& h) {
  return {{"A", to_json(h.A)}, {"B", to_json(h.B)}, {"C", to_json(h.C)}};
}
/// "A" carries A0; the sqrt(3) pi coefficient is "Api".
inline json to_json(const HumanForm3& h) {
  return {{"A", to_json(h.A0)}, {"Api", to_json(h.Api)}, {"B", to_json(h.B)}, {"C", to_json(h.C)},
          {"D", to_json(h.D)}};
}

}  // namespace iterlog
