#pragma once

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "riphawk/constants.hpp"
#include "riphawk/dispersion.hpp"
#include "riphawk/horizon.hpp"
#include "riphawk/spectra.hpp"

namespace riphawk {

// Scientific notation with 9 significant digits, the CSV number format.
inline std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

inline nlohmann::json to_json(const HorizonReport& rep) {
  nlohmann::json j;
  j["x_plus_m"] = rep.x_plus;
  j["x_minus_m"] = rep.x_minus;
  j["u_plus_m"] = rep.u_plus;
  j["u_minus_m"] = rep.u_minus;
  j["kappa_plus_m_per_s2"] = rep.kappa_plus;
  j["T_pulse_K"] = rep.T_pulse;
  j["k_level"] = rep.k_level;
  if (!rep.inner_roots.empty()) j["inner_roots_m"] = rep.inner_roots;
  return j;
}

inline nlohmann::json to_json(const SpectralWindow& w) {
  nlohmann::json j;
  j["kind"] = (w.kind == WindowKind::phase) ? "phase" : "group";
  j["empty"] = w.empty;
  if (!w.empty) {
    j["omega_min_rad_s"] = w.omega_min;
    j["omega_max_rad_s"] = w.omega_max;
    j["lambda_min_m"] = w.lambda_min;
    j["lambda_max_m"] = w.lambda_max;
  }
  return j;
}

inline nlohmann::json to_json(const SpectrumRow& r) {
  nlohmann::json j;
  j["omega_l"] = r.omega_l;
  j["theta"] = r.theta;
  j["T_lab"] = r.T_lab;
  j["greybody"] = r.greybody;
  j["occupation"] = r.occupation;
  j["in_phase_window"] = r.in_phase_window;
  j["in_group_window"] = r.in_group_window;
  j["rho"] = r.rho;
  return j;
}

// Material config schema:
//   {"name": ..., "kind": "constant|cauchy|single_resonance|multi_sellmeier",
//    coefficients..., "validity_nm": [min, max]}
inline MaterialModel material_from_json(const nlohmann::json& j) {
  if (!j.contains("kind")) throw config_error("material config: missing 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  const std::string name = j.value("name", kind);

  std::pair<double, double> validity{0.0,
                                     std::numeric_limits<double>::infinity()};
  if (j.contains("validity_nm")) {
    const auto& v = j.at("validity_nm");
    if (!v.is_array() || v.size() != 2)
      throw config_error("material config: validity_nm must be [min, max]");
    const double lam_min = v[0].get<double>() * 1e-9;
    const double lam_max = v[1].get<double>() * 1e-9;
    if (!(lam_max > lam_min && lam_min > 0.0))
      throw config_error("material config: bad validity_nm interval");
    validity = {2.0 * pi * c_light / lam_max, 2.0 * pi * c_light / lam_min};
  }

  try {
    if (kind == "constant")
      return MaterialModel::constant(j.at("n0").get<double>(), name);
    if (kind == "cauchy")
      return MaterialModel::cauchy(j.at("n0").get<double>(),
                                   j.at("B0_s2").get<double>(), validity, name);
    if (kind == "single_resonance")
      return MaterialModel::single_resonance(
          j.at("omega0_rad_s").get<double>(), j.at("omegac_rad_s").get<double>(),
          j.contains("validity_nm") ? std::optional(validity) : std::nullopt,
          name);
    if (kind == "multi_sellmeier") {
      std::vector<MaterialModel::SellmeierTerm> terms;
      for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
          throw config_error("material config: each term must be [B, lambda_m]");
        terms.push_back({t[0].get<double>(), t[1].get<double>()});
      }
      if (!j.contains("validity_nm"))
        throw config_error("material config: multi_sellmeier needs validity_nm");
      return MaterialModel::multi_sellmeier(std::move(terms), validity, name);
    }
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("material config: ") + e.what());
  }
  throw config_error("material config: unknown kind '" + kind + "'");
}

inline MaterialModel load_material_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open material file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw config_error("bad JSON in material file " + path + ": " + e.what());
  }
  return material_from_json(j);
}

}  // namespace riphawk
