#include <stdexcept>

#include "json_parse.hpp"
#include "sosinv/cert.hpp"

namespace sosinv {

Certificate certificate_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Certificate cert;
  cert.dim = j.at("dim").get<int>();
  cert.m = j.at("m").get<int>();
  cert.w = j.at("w").get<double>();
  cert.p = detail::poly_from_terms(j.at("p"), cert.dim);
  for (const auto& [name, g] : j.at("grams").items()) {
    const int half = g.at("basis_degree").get<int>();
    MonomialBasis basis(cert.dim, half);
    const auto& upper = g.at("upper_triangle");
    const int n = basis.size();
    if (static_cast<int>(upper.size()) != n * (n + 1) / 2)
      throw std::invalid_argument("certificate: gram '" + name + "' has wrong entry count");
    Eigen::MatrixXd Q(n, n);
    int pos = 0;
    for (int i = 0; i < n; ++i)
      for (int jj = i; jj < n; ++jj) {
        Q(i, jj) = upper[pos].get<double>();
        Q(jj, i) = Q(i, jj);
        ++pos;
      }
    cert.grams.emplace_back(name, GramTerm(std::move(basis), std::move(Q)));
  }
  cert.property.kappa = detail::poly_from_terms(j.at("property").at("kappa"), cert.dim);
  cert.property.alpha = detail::alpha_from_json(j.at("property").at("alpha"));
  cert.pps_hash = j.at("pps_hash").get<std::string>();
  return cert;
}

}  // namespace sosinv
