#pragma once

#include <json.hpp>
#include <limits>
#include <string>

#include "sosinv/poly.hpp"

namespace sosinv::detail {

inline Polynomial poly_from_terms(const nlohmann::json& terms, int dim) {
  Polynomial p(dim);
  for (const auto& term : terms) {
    const auto& exps = term.at("exps");
    if (static_cast<int>(exps.size()) != dim)
      throw std::invalid_argument("json: term exponent length does not match dim");
    Monomial mono = Monomial::unit(dim);
    for (int i = 0; i < dim; ++i) mono.exps[i] = exps[i].get<int>();
    p.add_term(mono, term.at("c").get<double>());
  }
  return p;
}

inline double alpha_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::invalid_argument("json: bad alpha value '" + s + "'");
  }
  return v.get<double>();
}

}  // namespace sosinv::detail
