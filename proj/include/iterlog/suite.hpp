// Per-case verification suites: oracle agreement, recurrences, identities
// and theorem-grade arithmetic. Used by the CLI `verify` command.

#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "iterlog/closed_forms.hpp"
#include "iterlog/denominators.hpp"
#include "iterlog/identities.hpp"
#include "iterlog/logexpr.hpp"
#include "iterlog/recurrences.hpp"
#include "iterlog/verdict.hpp"

namespace iterlog {

struct SuiteOptions {
  unsigned nmax = 40;
  unsigned moment_max = 15;
  std::size_t series_order = 30;
  /// Perturbs one coefficient of one input sequence; the suite must then fail.
  bool inject_fault = false;
};

/// Runs fn, turning a thrown cross-check failure into a failed verdict.
inline Verdict guarded(const std::string& name, const std::function<Verdict()>& fn) {
  try {
    Verdict v = fn();
    if (v.name.empty()) v.name = name;
    return v;
  } catch (const std::logic_error& e) {
    Verdict v = Verdict::ok(name);
    v.fail(-1, nullptr, e.what());
    return v;
  }
}

/// iterate vs derivative, vs the per-root closed form and vs the moment
/// expansion (n <= moment_max).
template <ExactField S>
Verdict root_basis_checks(const std::vector<S>& roots, const std::vector<LogExpr<S>>& f,
                          unsigned moment_max, const std::string& name) {
  Verdict v = Verdict::ok(name);
  for (unsigned n = 1; n < f.size(); ++n) {
    if (!f[n].poly().coeff(0).is_zero()) v.fail(n, nullptr, "f_n(0) != 0");
    if (derivative_in_class(f[n]) != f[n - 1]) v.fail(n, nullptr, "f_n' != f_{n-1}");
    if (iterate_by_roots(roots, n) != f[n]) v.fail(n, nullptr, "per-root closed form disagrees");
    if (n <= moment_max && moment_oracle(roots, n) != f[n])
      v.fail(n, nullptr, "moment expansion disagrees");
  }
  return v;
}

inline Verdict closed_form_checks_case1(const std::vector<LogExpr<Rat>>& f) {
  Verdict v = Verdict::ok("closed_forms_n1");
  for (unsigned n = 0; n < f.size(); ++n) {
    const Family1 fam = family_n1(n);
    const Family1 got = to_human1(f[n]);
    if (got.A != fam.A) v.fail(n, to_json(got.A - fam.A), "A_{n,1}");
    if (got.B != fam.B) v.fail(n, to_json(got.B - fam.B), "B_{n,1}");
  }
  return v;
}

inline Verdict closed_form_checks_case2(const std::vector<LogExpr<GaussRat>>& f) {
  Verdict v = Verdict::ok("closed_forms_n2");
  for (unsigned n = 0; n < f.size(); ++n) {
    const HumanForm2 h = to_human2(f[n]);
    const HumanForm2 expected{n == 0 ? QPoly{} : a_n2(n), b_n2(n), c_n2(n)};
    if (h != expected) v.fail(n, to_json(h.A - expected.A), "human form (A, B, C)");
    if (from_human2(h) != f[n]) v.fail(n, nullptr, "basis round trip");
    if (n >= 1 && (h.B.degree() != n - 1 || h.C.degree() != n || h.A.degree() != n))
      v.fail(n, nullptr, "degree pattern");
  }
  const auto generated = generate_family2(static_cast<unsigned>(std::max<std::size_t>(f.size(), 2) - 1));
  for (unsigned n = 1; n < f.size(); ++n)
    if (generated[n] != to_human2(f[n])) v.fail(n, nullptr, "differential recurrences disagree");
  return v;
}

inline Verdict closed_form_checks_case3(const std::vector<LogExpr<EisenRat>>& f) {
  Verdict v = Verdict::ok("closed_forms_n3");
  for (unsigned n = 0; n < f.size(); ++n) {
    const HumanForm3 h = to_human3(f[n]);
    const Family3 fam = family_n3(n);
    const HumanForm3 expected{a_tilde_n3(n), fam.B.scaled(Rat(-1, 6)), fam.B, fam.C, fam.D};
    if (h != expected) v.fail(n, to_json(h.A0 - expected.A0), "human form (A0, Api, B, C, D)");
    if (from_human3(h) != f[n]) v.fail(n, nullptr, "basis round trip");
  }
  return v;
}

inline void perturb(std::vector<QPoly>& seq, std::size_t n) {
  if (n >= seq.size()) return;
  seq[n] += QPoly::constant(Rat(1, 7));
}

inline std::vector<Verdict> verify_case1(const SuiteOptions& o) {
  std::vector<Verdict> out;
  const auto f = iterate_all(roots_case1(), o.nmax);
  out.push_back(guarded("oracles_n1", [&] { return root_basis_checks(roots_case1(), f, o.moment_max, "oracles_n1"); }));
  out.push_back(guarded("closed_forms_n1", [&] { return closed_form_checks_case1(f); }));
  out.push_back(guarded("alpha_beta_n1", [&] {
    const Report1 r = alpha_beta_n1(o.nmax);
    Verdict v = r.alpha_formula;
    v.absorb(r.beta_von_mangoldt);
    return v;
  }));
  std::function<Rat(unsigned long)> H = harmonic;
  if (o.inject_fault) H = [](unsigned long n) { return n == 3 ? harmonic(n) + Rat(1, 7) : harmonic(n); };
  out.push_back(guarded("binomial_harmonic_identity", [&] { return binom_harmonic_identity(o.nmax, H); }));
  const long grid = std::min<long>(o.nmax, 25);
  out.push_back(guarded("wz_certificate", [&] { return wz_certificate_check(grid, grid, grid); }));
  const unsigned phi_n_max = std::min<unsigned>(o.nmax, 30);
  out.push_back(guarded("phi_integral", [&] {
    return phi_integral_check(phi_n_max, sample_points(phi_n_max + 2));
  }));
  out.push_back(guarded("phi_2f1", [&] {
    return phi_2f1_check(phi_n_max, sample_points(3), std::max<std::size_t>(o.series_order, phi_n_max + 5));
  }));
  return out;
}

inline std::vector<Verdict> verify_case2(const SuiteOptions& o) {
  std::vector<Verdict> out;
  const unsigned nmax = o.nmax;
  const auto f = iterate_all(roots_case2(), nmax);
  out.push_back(guarded("oracles_n2", [&] { return root_basis_checks(roots_case2(), f, o.moment_max, "oracles_n2"); }));
  out.push_back(guarded("closed_forms_n2", [&] { return closed_form_checks_case2(f); }));

  std::vector<QPoly> A{QPoly{}}, B, C;
  for (unsigned n = 0; n <= 2 * nmax; ++n) {
    B.push_back(b_n2(n));
    C.push_back(c_n2(n));
  }
  for (unsigned n = 1; n <= nmax; ++n) A.push_back(a_n2(n));
  if (o.inject_fault) perturb(B, nmax / 2 + 1);
  std::vector<GPoly> plus, minus;
  for (unsigned n = 0; n <= nmax; ++n) {
    plus.push_back(binom_power(unit_i(), n).scaled(GaussRat(detail::inv_factorial(n))));
    minus.push_back(binom_power(-unit_i(), n).scaled(GaussRat(detail::inv_factorial(n))));
  }
  out.push_back(guarded("rec2_A", [&] { return verify_rec2(A, nmax, "rec2_A"); }));
  out.push_back(guarded("rec2_B", [&] { return verify_rec2(B, nmax, "rec2_B"); }));
  out.push_back(guarded("rec2_C", [&] { return verify_rec2(C, nmax, "rec2_C"); }));
  out.push_back(guarded("rec2_x_plus_i", [&] { return verify_rec2(plus, nmax, "rec2_x_plus_i"); }));
  out.push_back(guarded("rec2_x_minus_i", [&] { return verify_rec2(minus, nmax, "rec2_x_minus_i"); }));

  std::vector<QPoly> Bn(B.begin(), B.begin() + nmax + 1);
  std::vector<QPoly> Cn(C.begin(), C.begin() + nmax + 1);
  out.push_back(guarded("cot_multiple_angle", [&] {
    std::vector<CotPair> pairs{{QPoly::constant(Rat(2)), QPoly{}}};
    for (unsigned n = 1; n <= nmax; ++n) {
      const Rat fac(factorial(n));
      pairs.push_back({Cn[n].scaled(Rat(2) * fac), Bn[n].scaled(fac)});
    }
    return cot_multiple_angle_check(pairs);
  }));
  out.push_back(guarded("pochhammer_taylor", [&] { return pochhammer_taylor_check(Bn, Cn); }));
  out.push_back(guarded("b_n2_divisibility", [&] { return divisibility_check(Bn); }));
  out.push_back(guarded("b_n2_palindrome", [&] { return palindrome_check(B, nmax); }));

  if (nmax >= 2) {
    const auto rows = alpha_beta_gamma_n2(nmax);
    out.push_back(guarded("alpha_n2_equals_nfact_gamma", [&] { return alpha_equals_nfact_gamma(rows); }));
    out.push_back(guarded("alpha_n2_divides_nfact_lcm", [&] { return alpha2_divides_bound(rows); }));
    out.push_back(guarded("theorem_nu3_gamma", [&] { return theorem_nu3_gamma(rows); }));
    out.push_back(guarded("nu2_gamma", [&] { return nu2_gamma_check(rows); }));
  }
  return out;
}

inline std::vector<Verdict> verify_case3(const SuiteOptions& o) {
  std::vector<Verdict> out;
  const unsigned nmax = o.nmax;
  const auto f = iterate_all(roots_case3(), std::max(nmax, 3u));
  out.push_back(guarded("oracles_n3", [&] { return root_basis_checks(roots_case3(), f, o.moment_max, "oracles_n3"); }));
  out.push_back(guarded("closed_forms_n3", [&] { return closed_form_checks_case3(f); }));

  std::vector<QPoly> At, B, C, D;
  for (unsigned n = 0; n <= nmax; ++n) {
    At.push_back(a_tilde_n3(n));
    const Family3 fam = family_n3(n);
    B.push_back(fam.B);
    C.push_back(fam.C);
    D.push_back(fam.D);
  }
  if (o.inject_fault) perturb(C, nmax / 2 + 1);
  out.push_back(guarded("rec3_A_tilde", [&] { return verify_rec3(At, nmax, "rec3_A_tilde"); }));
  out.push_back(guarded("rec3_B", [&] { return verify_rec3(B, nmax, "rec3_B"); }));
  out.push_back(guarded("rec3_C", [&] { return verify_rec3(C, nmax, "rec3_C"); }));
  out.push_back(guarded("rec3_D", [&] { return verify_rec3(D, nmax, "rec3_D"); }));
  out.push_back(guarded("h1h2_log_forms", [&] { return h1h2_log_form_check(std::max<std::size_t>(o.series_order, 12), f); }));
  return out;
}

inline std::vector<Verdict> verify_case(int which, const SuiteOptions& o) {
  switch (which) {
    case 1: return verify_case1(o);
    case 2: return verify_case2(o);
    case 3: return verify_case3(o);
    default: throw std::invalid_argument("case must be 1, 2 or 3");
  }
}

}  // namespace iterlog
