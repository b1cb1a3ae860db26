// JSON encodings for scalars, polynomials and log expressions.

#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "iterlog/logexpr.hpp"
#include "iterlog/poly.hpp"
#include "iterlog/scalars.hpp"

namespace iterlog {

using json = nlohmann::json;

inline json to_json_value(const Rat& x) { return x.str(); }
inline json to_json_value(const GaussRat& x) { return {{"re", x.re().str()}, {"im", x.im().str()}}; }
inline json to_json_value(const EisenRat& x) { return {{"a", x.a().str()}, {"b", x.b().str()}}; }

template <ExactField S>
S scalar_from_json(const json& j);

template <>
inline Rat scalar_from_json<Rat>(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a \"p/q\" string for a Q scalar");
  return Rat::parse(j.get<std::string>());
}
template <>
inline GaussRat scalar_from_json<GaussRat>(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("expected {\"re\", \"im\"} for a Qi scalar");
  return {scalar_from_json<Rat>(j.at("re")), scalar_from_json<Rat>(j.at("im"))};
}
template <>
inline EisenRat scalar_from_json<EisenRat>(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw std::invalid_argument("expected {\"a\", \"b\"} for a Qw scalar");
  return {scalar_from_json<Rat>(j.at("a")), scalar_from_json<Rat>(j.at("b"))};
}

/// {"field": tag, "coeffs": [...]}, index = degree.
template <ExactField S>
json to_json(const Poly<S>& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json_value(c));
  return {{"field", std::string(field_traits<S>::tag)}, {"coeffs", coeffs}};
}

template <ExactField S>
Poly<S> poly_from_json(const json& j) {
  const std::string tag = j.at("field").get<std::string>();
  if (tag != field_traits<S>::tag)
    throw std::invalid_argument("field tag mismatch: expected " +
                                std::string(field_traits<S>::tag) + ", got " + tag);
  std::vector<S> v;
  for (const auto& c : j.at("coeffs")) v.push_back(scalar_from_json<S>(c));
  return Poly<S>(std::move(v));
}

/// Terms are emitted in canonical root order.
template <ExactField S>
json to_json(const LogExpr<S>& e) {
  json terms = json::array();
  for (const auto& [z, t] : e.terms())
    terms.push_back({{"root", to_json_value(z)}, {"coeff", to_json(t)}});
  return {{"field", std::string(field_traits<S>::tag)}, {"poly", to_json(e.poly())}, {"terms", terms}};
}

template <ExactField S>
LogExpr<S> logexpr_from_json(const json& j) {
  const std::string tag = j.at("field").get<std::string>();
  if (tag != field_traits<S>::tag) throw std::invalid_argument("field tag mismatch");
  typename LogExpr<S>::Terms terms;
  for (const auto& t : j.at("terms")) {
    const S z = scalar_from_json<S>(t.at("root"));
    if (!terms.emplace(z, poly_from_json<S>(t.at("coeff"))).second)
      throw std::invalid_argument("duplicate root in LogExpr");
  }
  return LogExpr<S>(poly_from_json<S>(j.at("poly")), std::move(terms));
}

}  // namespace iterlog
