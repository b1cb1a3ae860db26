// Dense univariate polynomials over an exact field.

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "iterlog/number_theory.hpp"
#include "iterlog/scalars.hpp"

namespace iterlog {

/// Coefficient k multiplies x^k. The highest stored coefficient is nonzero;
/// the zero polynomial has no coefficients and no degree.
template <ExactField S>
class Poly {
 public:
  using scalar_type = S;

  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<S> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(const S& c) { return Poly(std::vector<S>{c}); }
  static Poly monomial(const S& c, std::size_t k) {
    std::vector<S> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(S(1), 1); }

  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  std::size_t degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
    return c_.size() - 1;
  }
  const std::vector<S>& coeffs() const { return c_; }
  /// Coefficient of x^k (zero beyond the stored range).
  S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(); }
  S leading() const { return c_.at(degree()); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (field_traits<S>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const S& s) const {
    if (field_traits<S>::is_zero(s)) return {};
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  /// Multiplication by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<S> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    Poly r;
    r.c_ = std::move(v);
    return r;
  }

  /// this += s * x^k * p, without building the intermediate product.
  void add_scaled_shifted(const Poly& p, const S& s, std::size_t k) {
    if (p.is_zero() || field_traits<S>::is_zero(s)) return;
    if (c_.size() < p.c_.size() + k) c_.resize(p.c_.size() + k);
    for (std::size_t j = 0; j < p.c_.size(); ++j) c_[j + k] += s * p.c_[j];
    normalize();
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  S operator()(const S& x0) const { return eval(x0); }
  /// Horner evaluation.
  S eval(const S& x0) const {
    S acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * S(static_cast<long>(k));
    return Poly(std::move(v));
  }

  /// The antiderivative vanishing at 0.
  Poly antiderivative0() const {
    if (is_zero()) return {};
    std::vector<S> v(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) v[k + 1] = c_[k] / S(static_cast<long>(k + 1));
    return Poly(std::move(v));
  }

  /// x^deg * p(1/x).
  Poly reverse() const {
    if (is_zero()) throw std::domain_error("reverse of the zero polynomial is undefined");
    std::vector<S> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
  }

  bool is_palindromic() const { return is_zero() || reverse().shifted(trailing_zeros()) == *this; }

  std::size_t trailing_zeros() const {
    std::size_t k = 0;
    while (k < c_.size() && field_traits<S>::is_zero(c_[k])) ++k;
    return k;
  }

  template <ExactField T>
  Poly<T> cast() const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.emplace_back(c);
    return Poly<T>(std::move(v));
  }

 private:
  void normalize() {
    while (!c_.empty() && field_traits<S>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

using QPoly = Poly<Rat>;
using GPoly = Poly<GaussRat>;
using EPoly = Poly<EisenRat>;

template <ExactField S>
struct DivMod {
  Poly<S> quotient;
  Poly<S> remainder;
};

/// Long division over the field.
template <ExactField S>
DivMod<S> divmod(const Poly<S>& num, const Poly<S>& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (num.is_zero() || num.degree() < den.degree()) return {{}, num};
  std::vector<S> rem = num.coeffs();
  const std::size_t dd = den.degree();
  const S lead_inv = S(1) / den.leading();
  std::vector<S> q(num.degree() - dd + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const S t = rem[k + dd] * lead_inv;
    q[k] = t;
    if (field_traits<S>::is_zero(t)) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= t * den.coeffs()[j];
  }
  rem.resize(dd);
  return {Poly<S>(std::move(q)), Poly<S>(std::move(rem))};
}

/// True iff p divides q exactly.
template <ExactField S>
bool divides(const Poly<S>& p, const Poly<S>& q) {
  if (p.is_zero()) throw std::domain_error("divides: divisor must be nonzero");
  return divmod(q, p).remainder.is_zero();
}

/// Quotient q / p, throwing if the division leaves a remainder.
template <ExactField S>
Poly<S> exact_quotient(const Poly<S>& q, const Poly<S>& p) {
  auto [quo, rem] = divmod(q, p);
  if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
  return quo;
}

/// (x + a)^n; coefficient of x^k is C(n, k) a^(n-k).
template <ExactField S>
Poly<S> binom_power(const S& a, unsigned long n) {
  std::vector<S> v(n + 1);
  S apow(1);
  for (unsigned long j = 0; j <= n; ++j) {
    // j = n - k
    v[n - j] = apow * S(Rat(binomial(n, j)));
    apow *= a;
  }
  return Poly<S>(std::move(v));
}

/// lcm of the reduced coefficient denominators; 1 for the zero polynomial.
inline BigInt denom_lcm(const QPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) {
    const BigInt d = c.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

/// Exact down-cast of every coefficient to Q.
template <ExactField S>
QPoly to_rational(const Poly<S>& p) {
  std::vector<Rat> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(to_rational(c));
  return QPoly(std::move(v));
}

template <ExactField S>
std::string to_string(const Poly<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const S& c = p.coeffs()[k];
    if (field_traits<S>::is_zero(c)) continue;
    std::string term;
    if constexpr (std::is_same_v<S, Rat>) {
      const bool neg = c.sign() < 0;
      const Rat mag = neg ? -c : c;
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      term = (k >= 1 && mag == Rat(1)) ? "" : mag.pretty();
      if (k >= 1 && !term.empty()) term += "*";
    } else {
      term = (k >= 1 && c == S(1)) ? "" : to_string(c);
      if (!out.empty()) {
        // an unparenthesized leading '-' belongs to the separator
        if (!term.empty() && term[0] == '-') {
          out += " - ";
          term.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (k >= 1 && !term.empty()) term += "*";
    }
    if (k >= 1) term += "x";
    if (k >= 2) term += "^" + std::to_string(k);
    out += term;
  }
  return out;
}

}  // namespace iterlog
