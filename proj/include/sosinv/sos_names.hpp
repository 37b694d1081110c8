#pragma once

#include <string>

namespace sosinv {

// Multiplier naming shared between the program builder and the certificate
// verifier, so certificates are self-describing.
inline std::string sigma0_name() { return "sigma0"; }
inline std::string sigma_in_name(int j) { return "sigma_in" + std::to_string(j); }
inline std::string cell_sigma_name(int i) { return "cell" + std::to_string(i) + "_sigma"; }
inline std::string cell_mu_name(int i, int j) {
  return "cell" + std::to_string(i) + "_mu" + std::to_string(j);
}
inline std::string cell_gamma_name(int i, int j) {
  return "cell" + std::to_string(i) + "_gamma" + std::to_string(j);
}
inline std::string psi_name() { return "psi"; }

}  // namespace sosinv
