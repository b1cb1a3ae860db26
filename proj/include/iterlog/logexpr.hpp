// Expressions P(x) + sum_z T_z(x) * l_z(x) with l_z(x) = ln(1 + x/z).
//
// Every basis function vanishes at 0, so the class is closed under the
// antiderivative normalized by F(0) = 0. The map key z is the root of the
// linear factor x + z of the seed polynomial.

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "iterlog/poly.hpp"
#include "iterlog/power_series.hpp"

namespace iterlog {

template <ExactField S>
class LogExpr {
 public:
  using Terms = std::map<S, Poly<S>, canonical_less<S>>;

  LogExpr() = default;
  LogExpr(Poly<S> poly, Terms terms) : poly_(std::move(poly)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (field_traits<S>::is_zero(it->first))
        throw std::invalid_argument("LogExpr: zero root");
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
  }

  const Poly<S>& poly() const { return poly_; }
  const Terms& terms() const { return terms_; }

  /// Coefficient of l_z, zero when absent.
  Poly<S> coeff(const S& z) const {
    const auto it = terms_.find(z);
    return it == terms_.end() ? Poly<S>{} : it->second;
  }

  bool is_zero() const { return poly_.is_zero() && terms_.empty(); }

  friend bool operator==(const LogExpr& a, const LogExpr& b) {
    if (a.poly_ != b.poly_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [z, t] : a.terms_) {
      const auto it = b.terms_.find(z);
      if (it == b.terms_.end() || it->second != t) return false;
    }
    return true;
  }

  LogExpr& operator+=(const LogExpr& o) {
    poly_ += o.poly_;
    for (const auto& [z, t] : o.terms_) add_term(z, t);
    return *this;
  }
  LogExpr& operator-=(const LogExpr& o) { return *this += o.scaled(S(-1)); }
  friend LogExpr operator+(LogExpr a, const LogExpr& b) { return a += b; }
  friend LogExpr operator-(LogExpr a, const LogExpr& b) { return a -= b; }

  LogExpr scaled(const S& s) const { return multiply_by_poly(Poly<S>::constant(s)); }

  LogExpr multiply_by_poly(const Poly<S>& p) const {
    Terms t;
    for (const auto& [z, c] : terms_) t.emplace(z, c * p);
    return LogExpr(poly_ * p, std::move(t));
  }

  void add_term(const S& z, const Poly<S>& t) {
    if (field_traits<S>::is_zero(z)) throw std::invalid_argument("LogExpr: zero root");
    auto [it, inserted] = terms_.try_emplace(z, t);
    if (!inserted) it->second += t;
    if (it->second.is_zero()) terms_.erase(it);
  }

 private:
  Poly<S> poly_;
  Terms terms_;
};

/// sum_j l_{z_j}: ln(P(x)/P(0)) for P(x) = prod_j (x + z_j).
template <ExactField S>
LogExpr<S> seed_log(const std::vector<S>& roots) {
  LogExpr<S> e;
  for (const auto& z : roots) {
    if (field_traits<S>::is_zero(z)) throw std::invalid_argument("seed_log: zero root");
    e.add_term(z, Poly<S>::constant(S(1)));
  }
  return e;
}

/// The antiderivative F with F(0) = 0.
///
/// Per term: int_0^x T l_z = Theta l_z - int_0^x Theta(t)/(t+z) dt with
/// Theta = antiderivative0(T). Splitting Theta = q (x+z) + c gives the
/// remaining integral as antiderivative0(q) + c l_z.
template <ExactField S>
LogExpr<S> antiderivative(const LogExpr<S>& e) {
  Poly<S> poly = e.poly().antiderivative0();
  typename LogExpr<S>::Terms terms;
  for (const auto& [z, t] : e.terms()) {
    const Poly<S> theta = t.antiderivative0();
    auto [q, r] = divmod(theta, Poly<S>{z, S(1)});
    poly -= q.antiderivative0();
    terms.emplace(z, theta - r);
  }
  return LogExpr<S>(std::move(poly), std::move(terms));
}

/// e' within the class. The rational residue sum_z T_z/(x+z) must reduce to
/// a polynomial; otherwise std::logic_error.
template <ExactField S>
LogExpr<S> derivative_in_class(const LogExpr<S>& e) {
  Poly<S> denominator = Poly<S>::constant(S(1));
  for (const auto& [z, t] : e.terms()) denominator *= Poly<S>{z, S(1)};

  Poly<S> numerator;
  typename LogExpr<S>::Terms terms;
  for (const auto& [z, t] : e.terms()) {
    Poly<S> cofactor = Poly<S>::constant(S(1));
    for (const auto& [w, unused] : e.terms())
      if (!(w == z)) cofactor *= Poly<S>{w, S(1)};
    numerator += t * cofactor;
    terms.emplace(z, t.derivative());
  }
  auto [q, r] = divmod(numerator, denominator);
  if (!r.is_zero())
    throw std::logic_error("derivative_in_class: rational residue is not a polynomial");
  return LogExpr<S>(e.poly().derivative() + q, std::move(terms));
}

/// antiderivative applied n times to seed_log(roots).
template <ExactField S>
LogExpr<S> iterate(const std::vector<S>& roots, unsigned n) {
  LogExpr<S> e = seed_log(roots);
  for (unsigned k = 0; k < n; ++k) e = antiderivative(e);
  return e;
}

/// All iterates f_0..f_nmax.
template <ExactField S>
std::vector<LogExpr<S>> iterate_all(const std::vector<S>& roots, unsigned nmax) {
  std::vector<LogExpr<S>> out;
  out.reserve(nmax + 1);
  out.push_back(seed_log(roots));
  for (unsigned k = 1; k <= nmax; ++k) out.push_back(antiderivative(out.back()));
  return out;
}

/// f_n = sum_{j=0}^{n-1} (-1)^j x^(n-1-j) / (j! (n-1-j)!) M_j with moments
/// M_j = int_0^x t^j f_0(t) dt. Independent of the repeated antiderivative.
template <ExactField S>
LogExpr<S> moment_oracle(const std::vector<S>& roots, unsigned n) {
  if (n < 1) throw std::invalid_argument("moment_oracle: n must be >= 1");
  const LogExpr<S> seed = seed_log(roots);
  LogExpr<S> out;
  for (unsigned j = 0; j < n; ++j) {
    const LogExpr<S> moment =
        antiderivative(seed.multiply_by_poly(Poly<S>::monomial(S(1), j)));
    Rat w = Rat(1) / Rat(factorial(j) * factorial(n - 1 - j));
    if (j % 2 == 1) w = -w;
    out += moment.multiply_by_poly(Poly<S>::monomial(S(w), n - 1 - j));
  }
  return out;
}

/// Taylor expansion at 0 up to x^order.
template <ExactField S>
PowerSeries<S> series_expand(const LogExpr<S>& e, std::size_t order) {
  PowerSeries<S> out = PowerSeries<S>::from_poly(e.poly(), order);
  for (const auto& [z, t] : e.terms())
    out += PowerSeries<S>::from_poly(t, order) * log1p_scaled(S(1) / z, order);
  return out;
}

/// Roots z with 1 + x^N = prod (x + z), N = 1, 2, 3, in the natural field.
inline std::vector<Rat> roots_case1() { return {Rat(1)}; }
inline std::vector<GaussRat> roots_case2() { return {GaussRat::i(), -GaussRat::i()}; }
inline std::vector<EisenRat> roots_case3() {
  return {EisenRat(1), EisenRat::omega(), EisenRat::omega_bar()};
}

}  // namespace iterlog
