// iterlog: generate iterated integrals of ln(1+x^N), verify them, and sweep
// the denominator conjectures.
//
// Exit codes: 0 success, 1 mathematical check failure, 2 usage/config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "iterlog/iterlog.hpp"

namespace {

using namespace iterlog;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int which = 2;
  unsigned n = 1;
  unsigned nmax = 40;
  std::size_t series_order = 30;
  std::string format;
  std::string out;
  bool inject_fault = false;
};

/// stdout, or the --out file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot open output file: " + path);
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

template <ExactField S>
void print_root_basis(std::ostream& os, const LogExpr<S>& e) {
  os << "root basis: f = P + sum_z T_z ln(1 + x/z)\n";
  os << "  P = " << to_string(e.poly()) << "\n";
  for (const auto& [z, t] : e.terms()) os << "  T[" << to_string(z) << "] = " << to_string(t) << "\n";
}

void csv_poly(std::ostream& os, const std::string& name, const QPoly& p) {
  for (std::size_t k = 0; k < p.size(); ++k) os << name << "," << k << "," << p.coeff(k).str() << "\n";
}

int cmd_gen(const RunConfig& c) {
  const std::string fmt = c.format.empty() ? "json" : c.format;
  Sink sink(c.out);
  std::ostream& os = sink.os();
  const auto emit = [&](const json& human, const json& basis, const auto& text, const auto& csv) {
    if (fmt == "json") {
      os << json{{"case", c.which}, {"n", c.n}, {"human", human}, {"root_basis", basis}}.dump() << "\n";
    } else if (fmt == "text") {
      text();
    } else {
      os << "component,k,coeff\n";
      csv();
    }
  };
  if (c.which == 1) {
    const auto f = iterate(roots_case1(), c.n);
    const Family1 h = to_human1(f);
    emit(to_json(h), to_json(f),
         [&] {
           os << "A = " << to_string(h.A) << "\nB = " << to_string(h.B) << "\n";
           print_root_basis(os, f);
         },
         [&] { csv_poly(os, "A", h.A); csv_poly(os, "B", h.B); });
  } else if (c.which == 2) {
    const auto f = iterate(roots_case2(), c.n);
    const HumanForm2 h = to_human2(f);
    emit(to_json(h), to_json(f),
         [&] {
           os << "A = " << to_string(h.A) << "\nB = " << to_string(h.B) << "\nC = " << to_string(h.C) << "\n";
           print_root_basis(os, f);
         },
         [&] { csv_poly(os, "A", h.A); csv_poly(os, "B", h.B); csv_poly(os, "C", h.C); });
  } else {
    const auto f = iterate(roots_case3(), c.n);
    const HumanForm3 h = to_human3(f);
    emit(to_json(h), to_json(f),
         [&] {
           os << "A0 = " << to_string(h.A0) << "\nApi = " << to_string(h.Api) << "\nB = " << to_string(h.B)
              << "\nC = " << to_string(h.C) << "\nD = " << to_string(h.D) << "\n";
           print_root_basis(os, f);
         },
         [&] {
           csv_poly(os, "A0", h.A0);
           csv_poly(os, "Api", h.Api);
           csv_poly(os, "B", h.B);
           csv_poly(os, "C", h.C);
           csv_poly(os, "D", h.D);
         });
  }
  return kOk;
}

int cmd_verify(const RunConfig& c) {
  const std::string fmt = c.format.empty() ? "json" : c.format;
  SuiteOptions o;
  o.nmax = c.nmax;
  o.series_order = c.series_order;
  o.inject_fault = c.inject_fault;
  const auto verdicts = verify_case(c.which, o);
  Sink sink(c.out);
  std::ostream& os = sink.os();
  if (fmt == "csv") os << "check,pass,first_failure_n,detail\n";
  bool all = true;
  for (const auto& v : verdicts) {
    all = all && v.pass;
    if (fmt == "json") {
      json j = v.to_json();
      j["case"] = c.which;
      j["nmax"] = c.nmax;
      os << j.dump() << "\n";
    } else if (fmt == "text") {
      os << (v.pass ? "PASS " : "FAIL ") << v.name;
      if (!v.pass) os << " (n=" << v.first_failure_n.value_or(-1) << ") " << v.detail;
      os << "\n";
    } else {
      os << v.name << "," << (v.pass ? 1 : 0) << ","
         << (v.first_failure_n ? std::to_string(*v.first_failure_n) : "") << ",\"" << v.detail << "\"\n";
    }
  }
  return all ? kOk : kMathFailure;
}

int conjectures_n2(const RunConfig& c, std::ostream& os, const std::string& fmt) {
  if (c.nmax < 2) throw UsageError("conjectures --case 2 needs --nmax >= 2");
  const auto rows = alpha_beta_gamma_n2(c.nmax);
  const ConjectureSummary s = conjecture_checks_n2(rows);
  json annotations = json::array();
  for (const auto& r : rows)
    if (!r.annotation.empty()) annotations.push_back({{"n", r.n}, {"note", r.annotation}});
  const json summary = {{"case", 2},
                        {"nmax", c.nmax},
                        {"conj1_counterexamples", s.conj1_counterexamples},
                        {"conj2_counterexamples", s.conj2_counterexamples},
                        {"conj3_counterexamples", s.conj3_counterexamples},
                        {"annotated_n", s.annotated},
                        {"annotations", annotations}};
  if (fmt == "csv") {
    os << "n,alpha,beta_num,beta_den,gamma,nu3_gamma,nu2_gamma,conj1_ok,conj2_ok,conj3_ok\n";
    for (const auto& r : rows)
      os << r.n << "," << r.alpha.get_str() << "," << r.beta.num().get_str() << "," << r.beta.den().get_str()
         << "," << r.gamma.get_str() << "," << r.nu3_gamma << "," << r.nu2_gamma << "," << r.conj1_ok << ","
         << r.conj2_ok << "," << r.conj3_ok << "\n";
    std::cerr << summary.dump() << "\n";
  } else if (fmt == "json") {
    for (const auto& r : rows)
      os << json{{"n", r.n},           {"alpha", r.alpha.get_str()}, {"beta", r.beta.str()},
                 {"gamma", r.gamma.get_str()}, {"nu3_gamma", r.nu3_gamma}, {"nu2_gamma", r.nu2_gamma},
                 {"conj1_ok", r.conj1_ok}, {"conj2_ok", r.conj2_ok},   {"conj3_ok", r.conj3_ok},
                 {"annotation", r.annotation}}
                .dump()
         << "\n";
    os << json{{"summary", summary}}.dump() << "\n";
  } else {
    os << "N = 2, 2 <= n <= " << c.nmax << "\n"
       << "beta_{n,2} conjecture (n >= 3) counterexamples: " << s.conj1_counterexamples << "\n"
       << "alpha_{n,2} conjecture counterexamples: " << s.conj2_counterexamples << "\n"
       << "gamma_n conjecture counterexamples: " << s.conj3_counterexamples << "\n";
    for (const auto& r : rows)
      if (!r.annotation.empty()) os << "  n=" << r.n << ": " << r.annotation << "\n";
    for (const auto& r : rows)
      if (!r.conj1_ok || !r.conj2_ok || !r.conj3_ok)
        os << "  COUNTEREXAMPLE n=" << r.n << " beta=" << r.beta.str() << "\n";
  }
  return kOk;
}

int conjectures_n3(const RunConfig& c, std::ostream& os, const std::string& fmt) {
  if (c.nmax < 2) throw UsageError("conjectures --case 3 needs --nmax >= 2");
  const Report3 r = beta_n3_check(c.nmax);
  json annotations = json::array();
  for (const auto& row : r.rows)
    if (!row.annotation.empty()) annotations.push_back({{"n", row.n}, {"note", row.annotation}});
  const json summary = {{"case", 3},
                        {"nmax", c.nmax},
                        {"beta3_counterexamples", r.counterexamples},
                        {"lemma_3_11m_plus_1", r.lemma.pass},
                        {"annotations", annotations}};
  if (fmt == "csv") {
    os << "n,alpha,beta_num,beta_den,conj_ok\n";
    for (const auto& row : r.rows)
      os << row.n << "," << row.alpha.get_str() << "," << row.beta.num().get_str() << ","
         << row.beta.den().get_str() << "," << row.conj_ok << "\n";
    std::cerr << summary.dump() << "\n";
  } else if (fmt == "json") {
    for (const auto& row : r.rows)
      os << json{{"n", row.n}, {"alpha", row.alpha.get_str()}, {"beta", row.beta.str()},
                 {"conj_ok", row.conj_ok}, {"annotation", row.annotation}}
                .dump()
         << "\n";
    os << json{{"summary", summary}}.dump() << "\n";
  } else {
    os << "N = 3, 2 <= n <= " << c.nmax << "\n"
       << "beta_{n,3} conjecture counterexamples: " << r.counterexamples << "\n"
       << "3*11^m + 1 never a prime power: " << (r.lemma.pass ? "holds" : "FAILS") << "\n";
    for (const auto& row : r.rows)
      if (!row.annotation.empty()) os << "  n=" << row.n << ": " << row.annotation << "\n";
    for (const auto& row : r.rows)
      if (!row.conj_ok) os << "  COUNTEREXAMPLE n=" << row.n << " beta=" << row.beta.str() << "\n";
  }
  return kOk;
}

/// Conjectures are findings: counterexamples are reported, never an error.
int cmd_conjectures(const RunConfig& c) {
  const std::string fmt = c.format.empty() ? "json" : c.format;
  Sink sink(c.out);
  if (c.which == 1) throw UsageError("conjectures: --case must be 2 or 3");
  return c.which == 2 ? conjectures_n2(c, sink.os(), fmt) : conjectures_n3(c, sink.os(), fmt);
}

int cmd_figure1(const RunConfig& c) {
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  const Figure1Data d = figure1_data(c.nmax);
  Sink sink(c.out);
  std::ostream& os = sink.os();
  if (fmt == "csv") {
    os << "n,L,D,ratio\n";
    for (const auto& r : d.rows)
      os << r.n << "," << r.L.get_str() << "," << r.D.get_str() << "," << r.ratio.get_str() << "\n";
  } else if (fmt == "json") {
    for (const auto& r : d.rows)
      os << json{{"n", r.n}, {"L", r.L.get_str()}, {"D", r.D.get_str()}, {"ratio", r.ratio.get_str()}}.dump()
         << "\n";
    os << json{{"summary", {{"nmax", c.nmax}, {"count_L_equals_D", d.count_L_equals_D},
                            {"divisibility", d.divisibility.to_json()}}}}
              .dump()
       << "\n";
  } else {
    for (const auto& r : d.rows) os << "n=" << r.n << " L/D=" << r.ratio.get_str() << "\n";
    os << "L_n = D_n for " << d.count_L_equals_D << " of " << c.nmax << " values\n";
  }
  if (!d.divisibility.pass) {
    std::cerr << d.divisibility.to_json().dump() << "\n";
    return kMathFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated integrals of ln(1+x^N): generation, verification, denominator sweeps"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out, "write to PATH instead of stdout");
  };

  CLI::App* gen = app.add_subcommand("gen", "print f_n in the human and root bases");
  gen->add_option("--case", cfg.which, "N in {1,2,3}")->required()->check(CLI::Range(1, 3));
  gen->add_option("--n", cfg.n, "index n >= 0")->required()->check(CLI::Range(0u, 100000u));
  add_format(gen);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite for one case");
  verify->add_option("--case", cfg.which, "N in {1,2,3}")->required()->check(CLI::Range(1, 3));
  verify->add_option("--nmax", cfg.nmax, "largest index")->check(CLI::Range(1u, 100000u));
  verify->add_option("--series-order", cfg.series_order, "truncation order for series identities")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  verify->add_flag("--inject-fault", cfg.inject_fault, "perturb one input coefficient (soundness self-test)");
  add_format(verify);

  CLI::App* conj = app.add_subcommand("conjectures", "sweep the denominator conjectures");
  conj->add_option("--case", cfg.which, "2 (default) or 3")->check(CLI::Range(1, 3));
  conj->add_option("--nmax", cfg.nmax, "largest index")->check(CLI::Range(1u, 100000u));
  add_format(conj);

  CLI::App* fig = app.add_subcommand("figure1", "L_n / D_n data for harmonic numbers");
  fig->add_option("--nmax", cfg.nmax, "largest index")->check(CLI::Range(1u, 10000000u));
  add_format(fig);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*conj) return cmd_conjectures(cfg);
    return cmd_figure1(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return kMathFailure;
  }
}
