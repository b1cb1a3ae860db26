// Differential recurrences generating the N = 2 family, and checkers for the
// holonomic recurrences satisfied by the coefficient sequences.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "iterlog/closed_forms.hpp"
#include "iterlog/poly.hpp"
#include "iterlog/verdict.hpp"

namespace iterlog {

/// (A_n, B_n, C_n) for n = 0..nmax from B' = B_{n-1}, C' = C_{n-1} with the
/// empirical constants at 0, and A' = A_{n-1} - (B + 2xC)/(1 + x^2), A(0) = 0.
/// The division by 1 + x^2 must be exact and equal [(x+i)^(n-1) + (x-i)^(n-1)]/n!.
inline std::vector<HumanForm2> generate_family2(unsigned nmax) {
  if (nmax < 1) throw std::invalid_argument("generate_family2: nmax must be >= 1");
  std::vector<HumanForm2> out;
  out.reserve(nmax + 1);
  out.push_back({QPoly{}, QPoly{}, QPoly::constant(Rat(1))});
  const QPoly one_plus_x2{Rat(1), Rat(0), Rat(1)};
  const QPoly two_x{Rat(0), Rat(2)};
  for (unsigned n = 1; n <= nmax; ++n) {
    const HumanForm2& prev = out.back();
    HumanForm2 cur;
    cur.B = prev.B.antiderivative0() + QPoly::constant(init_b2(n));
    cur.C = prev.C.antiderivative0() + QPoly::constant(init_c2(n));

    const QPoly correction = exact_quotient(cur.B + two_x * cur.C, one_plus_x2);
    const GPoly reduced = (binom_power(unit_i(), n - 1) + binom_power(-unit_i(), n - 1))
                              .scaled(GaussRat(detail::inv_factorial(n)));
    require(correction == to_rational(reduced),
            "generate_family2: (B + 2xC)/(1+x^2) reduction fails at n=" + std::to_string(n));
    cur.A = (prev.A - correction).antiderivative0();
    out.push_back(std::move(cur));
  }
  return out;
}

/// Polynomial coefficient of F_{n-j} at index n; the recurrence reads
/// sum_j coeff(j, n) F_{n-j} = 0.
template <ExactField S>
struct HolonomicRec {
  unsigned order;
  std::function<Poly<S>(unsigned j, long n)> coeff;
  std::string name;
};

/// n^2(n-1) F_n = x(3n-2)(n-1) F_{n-1} - (3n x^2 - 4x^2 + n) F_{n-2} + x(x^2+1) F_{n-3}.
template <ExactField S>
HolonomicRec<S> rec2() {
  return {3,
          [](unsigned j, long n) -> Poly<S> {
            const auto r = [](long v) { return S(Rat(v)); };
            switch (j) {
              case 0: return Poly<S>::constant(r(n * n * (n - 1)));
              case 1: return Poly<S>{S(), r(-(3 * n - 2) * (n - 1))};
              case 2: return Poly<S>{r(n), S(), r(3 * n - 4)};
              default: return Poly<S>{S(), r(-1), S(), r(-1)};
            }
          },
          "rec2"};
}

/// (n-2)(n-1)n^2 F_n = (n-2)(n-1)(4n-3) x F_{n-1} - 3(n-2)(2n-3) x^2 F_{n-2}
///                     + [(4n-9) x^3 + n] F_{n-3} - x(x^3+1) F_{n-4}.
template <ExactField S>
HolonomicRec<S> rec3() {
  return {4,
          [](unsigned j, long n) -> Poly<S> {
            const auto r = [](long v) { return S(Rat(v)); };
            switch (j) {
              case 0: return Poly<S>::constant(r((n - 2) * (n - 1) * n * n));
              case 1: return Poly<S>{S(), r(-(n - 2) * (n - 1) * (4 * n - 3))};
              case 2: return Poly<S>{S(), S(), r(3 * (n - 2) * (2 * n - 3))};
              case 3: return Poly<S>{r(-n), S(), S(), r(-(4 * n - 9))};
              default: return Poly<S>{S(), r(1), S(), S(), r(1)};
            }
          },
          "rec3"};
}

/// Checks the recurrence for order <= n <= nmax; rows below the order are
/// initial data. Reports the lowest failing n and its residual.
template <ExactField S>
Verdict verify_recurrence(const HolonomicRec<S>& rec, const std::vector<Poly<S>>& F, unsigned nmax,
                          std::string name = {}) {
  if (F.size() < static_cast<std::size_t>(nmax) + 1)
    throw std::invalid_argument("verify_recurrence: sequence shorter than nmax + 1");
  Verdict v = Verdict::ok(name.empty() ? rec.name : std::move(name));
  for (unsigned n = rec.order; n <= nmax; ++n) {
    Poly<S> residual;
    for (unsigned j = 0; j <= rec.order; ++j) residual += rec.coeff(j, n) * F[n - j];
    if (!residual.is_zero()) {
      v.fail(n, to_json(residual), "recurrence residual nonzero");
      break;
    }
  }
  return v;
}

template <ExactField S>
Verdict verify_rec2(const std::vector<Poly<S>>& F, unsigned nmax, std::string name = "rec2") {
  return verify_recurrence(rec2<S>(), F, nmax, std::move(name));
}

template <ExactField S>
Verdict verify_rec3(const std::vector<Poly<S>>& F, unsigned nmax, std::string name = "rec3") {
  return verify_recurrence(rec3<S>(), F, nmax, std::move(name));
}

}  // namespace iterlog
