// Exact scalar fields: Q, Q(i) and Q(omega) with omega = exp(2*pi*i/3).

#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace iterlog {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always reduced with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  template <class U>
  Rat(const __gmp_expr<mpz_t, U>& e) : v_(BigInt(e)) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p/q" or "p".
  static Rat parse(std::string_view s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
      return Rat(BigInt(std::string(s.substr(0, slash))),
                 BigInt(std::string(s.substr(slash + 1))));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rat: cannot parse '" + std::string(s) + "'");
    }
  }

  const mpq_class& raw() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Canonical "num/den" form; zero is "0/1".
  std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }
  /// "p/q", or "p" for integers.
  std::string pretty() const { return v_.get_str(); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }
  Rat operator-() const { Rat r; r.v_ = -v_; return r; }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat inverse() const { return Rat(1) / *this; }

 private:
  mpq_class v_;
};

/// a + b*i with i^2 = -1.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return {Rat(0), Rat(1)}; }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussRat conj() const { return {re_, -im_}; }
  Rat norm() const { return re_ * re_ + im_ * im_; }

  GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    Rat re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    const Rat n = o.norm();
    if (n.is_zero()) throw std::domain_error("GaussRat: division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }
  GaussRat operator-() const { return {-re_, -im_}; }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat&, const GaussRat&) = default;

 private:
  Rat re_;
  Rat im_;
};

/// a + b*omega with omega^2 = -omega - 1.
class EisenRat {
 public:
  EisenRat() = default;
  EisenRat(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  EisenRat(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  EisenRat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static EisenRat omega() { return {Rat(0), Rat(1)}; }
  static EisenRat omega_bar() { return {Rat(-1), Rat(-1)}; }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  // conj(omega) = -1 - omega
  EisenRat conj() const { return {a_ - b_, -b_}; }
  Rat norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  /// Real part a - b/2; the imaginary part is b*sqrt(3)/2.
  Rat real_part() const { return a_ - b_ / Rat(2); }

  EisenRat& operator+=(const EisenRat& o) { a_ += o.a_; b_ += o.b_; return *this; }
  EisenRat& operator-=(const EisenRat& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  EisenRat& operator*=(const EisenRat& o) {
    const Rat bd = b_ * o.b_;
    Rat a = a_ * o.a_ - bd;
    b_ = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(a);
    return *this;
  }
  EisenRat& operator/=(const EisenRat& o) {
    const Rat n = o.norm();
    if (n.is_zero()) throw std::domain_error("EisenRat: division by zero");
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    return *this;
  }
  EisenRat operator-() const { return {-a_, -b_}; }

  friend EisenRat operator+(EisenRat x, const EisenRat& y) { return x += y; }
  friend EisenRat operator-(EisenRat x, const EisenRat& y) { return x -= y; }
  friend EisenRat operator*(EisenRat x, const EisenRat& y) { return x *= y; }
  friend EisenRat operator/(EisenRat x, const EisenRat& y) { return x /= y; }
  friend bool operator==(const EisenRat&, const EisenRat&) = default;

 private:
  Rat a_;
  Rat b_;
};

/// Per-field facts used by the generic polynomial and expression code.
template <class S>
struct field_traits;

template <>
struct field_traits<Rat> {
  static constexpr std::string_view tag = "Q";
  static bool is_zero(const Rat& x) { return x.is_zero(); }
  static bool less(const Rat& x, const Rat& y) { return x < y; }
  static bool is_rational(const Rat&) { return true; }
  static Rat rational_part(const Rat& x) { return x; }
};

template <>
struct field_traits<GaussRat> {
  static constexpr std::string_view tag = "Qi";
  static bool is_zero(const GaussRat& x) { return x.is_zero(); }
  // real part, then imaginary part
  static bool less(const GaussRat& x, const GaussRat& y) {
    if (x.re() != y.re()) return x.re() < y.re();
    return x.im() < y.im();
  }
  static bool is_rational(const GaussRat& x) { return x.im().is_zero(); }
  static Rat rational_part(const GaussRat& x) { return x.re(); }
};

template <>
struct field_traits<EisenRat> {
  static constexpr std::string_view tag = "Qw";
  static bool is_zero(const EisenRat& x) { return x.is_zero(); }
  static bool less(const EisenRat& x, const EisenRat& y) {
    const Rat rx = x.real_part();
    const Rat ry = y.real_part();
    if (rx != ry) return rx < ry;
    return x.b() < y.b();
  }
  static bool is_rational(const EisenRat& x) { return x.b().is_zero(); }
  static Rat rational_part(const EisenRat& x) { return x.a(); }
};

template <class S>
concept ExactField = requires { field_traits<S>::tag; };

template <ExactField S>
struct canonical_less {
  bool operator()(const S& x, const S& y) const { return field_traits<S>::less(x, y); }
};

/// Exact down-cast to Q; throws if a non-rational component survives.
template <ExactField S>
Rat to_rational(const S& x) {
  if (!field_traits<S>::is_rational(x))
    throw std::logic_error("non-rational residue where a rational value was required");
  return field_traits<S>::rational_part(x);
}

inline std::string to_string(const Rat& x) { return x.pretty(); }

namespace detail {
/// "a", "b*u", "(a + b*u)" with unit symbol u.
inline std::string two_part(const Rat& a, const Rat& b, const char* unit) {
  if (b.is_zero()) return a.pretty();
  std::string im = b == Rat(1) ? "" : b == Rat(-1) ? "-" : b.pretty() + "*";
  im += unit;
  if (a.is_zero()) return im;
  const bool neg = b.sign() < 0;
  std::string mag = (neg ? -b : b) == Rat(1) ? "" : (neg ? -b : b).pretty() + "*";
  return "(" + a.pretty() + (neg ? " - " : " + ") + mag + unit + ")";
}
}  // namespace detail

inline std::string to_string(const GaussRat& x) { return detail::two_part(x.re(), x.im(), "i"); }
inline std::string to_string(const EisenRat& x) { return detail::two_part(x.a(), x.b(), "w"); }

}  // namespace iterlog
