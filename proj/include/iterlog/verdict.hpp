// Outcome of a verification sweep.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "iterlog/io.hpp"

namespace iterlog {

/// Thrown when a theorem-grade internal cross-check disagrees.
class CheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

struct Verdict {
  std::string name;
  bool pass = true;
  std::optional<long> first_failure_n;
  json residual;  // null, or a Poly / free-form description of the first failure
  std::string detail;

  static Verdict ok(std::string name) { return {std::move(name), true, std::nullopt, nullptr, {}}; }

  /// Records a failure at n, keeping the lowest failing n.
  void fail(long n, json r, std::string why = {}) {
    if (!pass && first_failure_n && *first_failure_n <= n) return;
    pass = false;
    first_failure_n = n;
    residual = std::move(r);
    detail = std::move(why);
  }

  /// Folds another verdict into this one.
  void absorb(const Verdict& v) {
    if (!v.pass) fail(v.first_failure_n.value_or(-1), v.residual, v.name + ": " + v.detail);
  }

  json to_json() const {
    json j = {{"pass", pass},
              {"first_failure_n", first_failure_n ? json(*first_failure_n) : json(nullptr)},
              {"residual", residual}};
    if (!name.empty()) j["check"] = name;
    if (!detail.empty()) j["detail"] = detail;
    return j;
  }
};

}  // namespace iterlog
