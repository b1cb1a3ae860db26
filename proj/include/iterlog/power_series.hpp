// Truncated formal power series: coefficients of x^0..x^M.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "iterlog/poly.hpp"

namespace iterlog {

template <ExactField S>
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1) {}
  PowerSeries(std::vector<S> coeffs, std::size_t order) : c_(std::move(coeffs)) {
    c_.resize(order + 1);
  }

  static PowerSeries from_poly(const Poly<S>& p, std::size_t order) {
    std::vector<S> v(p.coeffs().begin(),
                     p.coeffs().begin() + static_cast<std::ptrdiff_t>(std::min(p.size(), order + 1)));
    return PowerSeries(std::move(v), order);
  }

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<S>& coeffs() const { return c_; }
  const S& operator[](std::size_t k) const { return c_.at(k); }
  S& operator[](std::size_t k) { return c_.at(k); }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!field_traits<S>::is_zero(c)) return false;
    return true;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  PowerSeries operator-() const { return scaled(S(-1)); }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.check_order(b);
    PowerSeries r(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (field_traits<S>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  PowerSeries scaled(const S& s) const {
    PowerSeries r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  /// Multiplication by x^k, truncated.
  PowerSeries shifted_up(std::size_t k) const {
    PowerSeries r(order());
    for (std::size_t j = 0; j + k < c_.size(); ++j) r.c_[j + k] = c_[j];
    return r;
  }

  /// Division by x^k; the k lowest coefficients must vanish. The result has
  /// order M - k since the top k coefficients are unknown.
  PowerSeries shifted_down(std::size_t k) const {
    if (k > order()) throw std::invalid_argument("shifted_down: shift exceeds order");
    for (std::size_t j = 0; j < k; ++j)
      if (!field_traits<S>::is_zero(c_[j]))
        throw std::domain_error("shifted_down: series not divisible by x^k");
    return PowerSeries(std::vector<S>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()),
                       order() - k);
  }

  PowerSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("truncated: cannot extend order");
    return PowerSeries(std::vector<S>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)),
                       order);
  }

  /// Termwise integral vanishing at 0 (the x^(M+1) term is dropped).
  PowerSeries integral0() const {
    PowerSeries r(order());
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) r.c_[k + 1] = c_[k] / S(static_cast<long>(k + 1));
    return r;
  }

  /// Substitution x -> s * x^p (re-indexing, no general composition).
  PowerSeries substitute_power(const S& s, std::size_t p) const {
    if (p == 0) throw std::invalid_argument("substitute_power: p must be >= 1");
    PowerSeries r(order());
    S spow(1);
    for (std::size_t k = 0; k * p < c_.size(); ++k) {
      r.c_[k * p] = c_[k] * spow;
      spow *= s;
    }
    return r;
  }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  void check_order(const PowerSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("power series orders differ");
  }

  std::vector<S> c_;
};

/// sum_{k>=1} (-1)^(k-1) c^k x^k / k, i.e. ln(1 + c x).
template <ExactField S>
PowerSeries<S> log1p_scaled(const S& c, std::size_t order) {
  PowerSeries<S> r(order);
  S cpow = c;
  for (std::size_t k = 1; k <= order; ++k) {
    const S term = cpow / S(static_cast<long>(k));
    r[k] = (k % 2 == 1) ? term : -term;
    cpow *= c;
  }
  return r;
}

/// sum_k (c x)^k = 1 / (1 - c x).
template <ExactField S>
PowerSeries<S> geometric(const S& c, std::size_t order) {
  PowerSeries<S> r(order);
  S cpow(1);
  for (std::size_t k = 0; k <= order; ++k) {
    r[k] = cpow;
    cpow *= c;
  }
  return r;
}

/// 2F1(a, b; c; x) with coefficients from Pochhammer ratios.
template <ExactField S>
PowerSeries<S> hyp2f1(const Rat& a, const Rat& b, const Rat& c, std::size_t order) {
  if (c.is_integer() && c.sign() <= 0)
    throw std::domain_error("hyp2f1: lower parameter is a nonpositive integer");
  PowerSeries<S> r(order);
  Rat term(1);
  r[0] = S(term);
  for (std::size_t k = 0; k < order; ++k) {
    const Rat kk(static_cast<long>(k));
    const Rat den = (c + kk) * Rat(static_cast<long>(k + 1));
    if (den.is_zero()) throw std::domain_error("hyp2f1: pole in the lower parameter");
    term = term * (a + kk) * (b + kk) / den;
    r[k + 1] = S(term);
  }
  return r;
}

/// outer(inner(x)) for inner(0) = 0, by Horner in truncated arithmetic.
template <ExactField S>
PowerSeries<S> compose(const PowerSeries<S>& outer, const PowerSeries<S>& inner) {
  if (!field_traits<S>::is_zero(inner[0]))
    throw std::domain_error("compose: inner series must vanish at 0");
  if (outer.order() != inner.order()) throw std::invalid_argument("power series orders differ");
  PowerSeries<S> acc(outer.order());
  for (std::size_t k = outer.order() + 1; k-- > 0;) {
    acc = acc * inner;
    acc[0] += outer[k];
  }
  return acc;
}

/// (z)_k = z (z+1) ... (z+k-1).
inline Rat pochhammer(const Rat& z, unsigned long k) {
  Rat r(1);
  for (unsigned long j = 0; j < k; ++j) r *= z + Rat(static_cast<long>(j));
  return r;
}

}  // namespace iterlog
