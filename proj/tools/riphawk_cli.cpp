// Command-line surface for the analogue-horizon library: every subcommand
// maps onto one computational module and emits deterministic CSV or JSON.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "riphawk/riphawk.hpp"

namespace {

using nlohmann::json;
using namespace riphawk;

struct RunConfig {
  // profile
  std::string profile_kind = "gaussian";
  double n0 = 1.45;
  double eta = 1e-3;
  double sigma_m = 1e-5;
  double delta_wh_m = 1e-6;
  double delta_bh_m = 1e-6;
  std::string profile_csv;
  // kinematics (exactly one)
  std::optional<double> v_mps;
  std::optional<double> c_over_v;
  // material
  std::string material = "paper_cauchy";
  std::string materials_dir = "materials";
  std::optional<double> cauchy_n0;
  std::optional<double> cauchy_b0_s2;
  // output
  std::string format = "csv";
  std::string output;
  std::string config_file;
  // per-command knobs
  double theta_rad = 0.0;
  double omega_l_rad_s = 2.35e15;
  std::optional<double> omega_min_rad_s, omega_max_rad_s;
  std::optional<double> lambda_min_nm, lambda_max_nm;
  int omega_steps = 64;
  bool log_grid = false;
  bool gate_group = false;
  std::vector<double> sigma_b_values;
  double k_u_prime = 3.0;
  int theta_steps = 9;
  bool numerov = true;
  // sweep
  std::string sweep_target = "horizons";
  std::string sweep_param;
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_steps = 10;
};

RipProfile make_profile(const RunConfig& cfg) {
  auto warn_and_return = [](RipProfile p) {
    for (const auto& w : p.validate()) std::cerr << "warning: " << w << "\n";
    return p;
  };
  if (cfg.profile_kind == "gaussian")
    return warn_and_return(RipProfile::gaussian(cfg.n0, cfg.eta, cfg.sigma_m));
  if (cfg.profile_kind == "shockwave")
    return warn_and_return(RipProfile::shockwave(
        cfg.n0, cfg.eta, cfg.sigma_m, cfg.delta_wh_m, cfg.delta_bh_m));
  if (cfg.profile_kind == "tabulated") {
    if (cfg.profile_csv.empty())
      throw config_error("tabulated profile needs --profile-csv");
    return warn_and_return(
        RipProfile::tabulated_csv(cfg.n0, cfg.eta, cfg.profile_csv));
  }
  throw config_error("unknown profile kind: " + cfg.profile_kind);
}

FrameKinematics make_kinematics(const RunConfig& cfg) {
  if (cfg.v_mps && cfg.c_over_v)
    throw config_error("give exactly one of --v-mps / --c-over-v");
  if (cfg.v_mps) return FrameKinematics::from_speed(*cfg.v_mps);
  if (cfg.c_over_v) return FrameKinematics::from_c_over_v(*cfg.c_over_v);
  throw config_error("give exactly one of --v-mps / --c-over-v");
}

MaterialModel make_material(const RunConfig& cfg) {
  if (cfg.cauchy_n0 || cfg.cauchy_b0_s2) {
    if (!(cfg.cauchy_n0 && cfg.cauchy_b0_s2))
      throw config_error("inline Cauchy material needs both --cauchy-n0 and --cauchy-b0-s2");
    return MaterialModel::cauchy(*cfg.cauchy_n0, *cfg.cauchy_b0_s2,
                                 {0.0, std::numeric_limits<double>::infinity()},
                                 "inline_cauchy");
  }
  // A name resolves inside the materials directory; a path is used as-is.
  std::string path = cfg.material;
  if (path.find('/') == std::string::npos && path.find(".json") == std::string::npos)
    path = cfg.materials_dir + "/" + cfg.material + ".json";
  return load_material_file(path);
}

// Tabular emitter: CSV with 9-significant-digit scientific notation, or a
// JSON array of row objects keyed by the header names.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;

  void emit(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json obj;
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
        arr.push_back(obj);
      }
      os << arr.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < header.size(); ++i)
      os << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        const auto& v = r[i];
        if (v.is_number_float())
          os << fmt_sci(v.get<double>());
        else if (v.is_boolean())
          os << (v.get<bool>() ? 1 : 0);
        else
          os << v.dump();
        os << (i + 1 < r.size() ? "," : "\n");
      }
    }
  }
};

void write_out(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw config_error("cannot open output file: " + cfg.output);
  out << text;
}

void emit_table(const RunConfig& cfg, const Table& t) {
  std::ostringstream ss;
  t.emit(ss, cfg.format);
  write_out(cfg, ss.str());
}

void emit_json_object(const RunConfig& cfg, const json& j) {
  write_out(cfg, j.dump(2) + "\n");
}

// ---- subcommand bodies ----------------------------------------------------

Table horizons_table(const RunConfig& cfg) {
  const auto profile = make_profile(cfg);
  const auto kin = make_kinematics(cfg);
  const auto rep = find_horizons(profile, kin);
  Table t;
  t.header = {"x_plus_m",  "x_minus_m", "u_plus_m", "u_minus_m",
              "kappa_plus_m_per_s2", "T_pulse_K", "k_level"};
  t.rows.push_back({rep.x_plus, rep.x_minus, rep.u_plus, rep.u_minus,
                    rep.kappa_plus, rep.T_pulse, rep.k_level});
  return t;
}

void run_horizons(const RunConfig& cfg) {
  if (cfg.format == "json") {
    const auto profile = make_profile(cfg);
    const auto kin = make_kinematics(cfg);
    emit_json_object(cfg, to_json(find_horizons(profile, kin)));
    return;
  }
  emit_table(cfg, horizons_table(cfg));
}

Table temperature_table(const RunConfig& cfg) {
  const auto profile = make_profile(cfg);
  const auto kin = make_kinematics(cfg);
  const auto rep = find_horizons(profile, kin);
  const double T_lab = temperature_lab(rep.T_pulse, cfg.theta_rad, kin, cfg.n0);
  Table t;
  t.header = {"theta_rad", "kappa_plus_m_per_s2", "T_pulse_K", "T_lab_K",
              "omega_wien_rad_s"};
  t.rows.push_back(
      {cfg.theta_rad, rep.kappa_plus, rep.T_pulse, T_lab, wien_peak(T_lab)});
  return t;
}

std::vector<double> spectrum_grid(const RunConfig& cfg) {
  double w_lo, w_hi;
  if (cfg.lambda_min_nm && cfg.lambda_max_nm) {
    // Wavelength convenience bounds convert (and flip) at the boundary.
    w_hi = 2.0 * pi * c_light / (*cfg.lambda_min_nm * 1e-9);
    w_lo = 2.0 * pi * c_light / (*cfg.lambda_max_nm * 1e-9);
  } else if (cfg.omega_min_rad_s && cfg.omega_max_rad_s) {
    w_lo = *cfg.omega_min_rad_s;
    w_hi = *cfg.omega_max_rad_s;
  } else {
    throw config_error(
        "spectrum needs --omega-min-rad-s/--omega-max-rad-s or --lambda-min-nm/--lambda-max-nm");
  }
  if (!(w_hi > w_lo && w_lo > 0.0))
    throw config_error("bad spectral grid bounds");
  if (cfg.omega_steps < 2) throw config_error("need --omega-steps >= 2");
  std::vector<double> grid(cfg.omega_steps);
  for (int i = 0; i < cfg.omega_steps; ++i) {
    const double f = double(i) / (cfg.omega_steps - 1);
    grid[i] = cfg.log_grid ? w_lo * std::pow(w_hi / w_lo, f)
                           : w_lo + (w_hi - w_lo) * f;
  }
  return grid;
}

Table spectrum_table(const RunConfig& cfg) {
  const auto profile = make_profile(cfg);
  const auto kin = make_kinematics(cfg);
  const auto material = make_material(cfg);
  const auto rows =
      emission_spectrum(profile, kin, material, cfg.theta_rad, spectrum_grid(cfg));
  Table t;
  t.header = {"omega_l",        "theta",           "T_lab",
              "greybody",       "occupation",      "in_phase_window",
              "in_group_window", "rho",            "emitted"};
  for (const auto& r : rows) {
    const bool emitted = cfg.gate_group ? r.in_group_window : r.in_phase_window;
    t.rows.push_back({r.omega_l, r.theta, r.T_lab, r.greybody, r.occupation,
                      r.in_phase_window, r.in_group_window, r.rho, emitted});
  }
  return t;
}

Table window_table(const RunConfig& cfg) {
  const auto kin = make_kinematics(cfg);
  const auto material = make_material(cfg);
  const auto ph = phase_window_lab(material, cfg.eta, kin);
  const auto gr = group_window_lab(material, cfg.eta, kin);
  Table t;
  t.header = {"kind",        "empty",        "omega_min_rad_s",
              "omega_max_rad_s", "lambda_min_m", "lambda_max_m",
              "coexist"};
  const bool coexist = horizons_coexist(material, cfg.eta, kin);
  for (const auto* w : {&ph, &gr}) {
    t.rows.push_back({w->kind == WindowKind::phase ? "phase" : "group",
                      w->empty, w->omega_min, w->omega_max, w->lambda_min,
                      w->lambda_max, coexist});
  }
  return t;
}

void run_dispersion_window(const RunConfig& cfg) {
  if (cfg.format == "json") {
    const auto kin = make_kinematics(cfg);
    const auto material = make_material(cfg);
    json j;
    j["phase"] = to_json(phase_window_lab(material, cfg.eta, kin));
    j["group"] = to_json(group_window_lab(material, cfg.eta, kin));
    j["coexist"] = horizons_coexist(material, cfg.eta, kin);
    emit_json_object(cfg, j);
    return;
  }
  emit_table(cfg, window_table(cfg));
}

Table bogoliubov_table(const RunConfig& cfg) {
  std::vector<double> sigmas = cfg.sigma_b_values;
  if (sigmas.empty()) sigmas = {0.1, 0.5, 1.0, 2.0, 5.0};
  Table t;
  t.header = {"sigma_b", "ratio_quadrature", "ratio_closed_form", "rel_err"};
  for (double s : sigmas) {
    const auto q =
        quadrature_magnitudes(s, cfg.k_u_prime, XiPrefactor::leading());
    const auto c = closed_form_magnitudes(s, cfg.k_u_prime);
    const double rel = std::abs(q.ratio - c.ratio) / c.ratio;
    t.rows.push_back({s, q.ratio, c.ratio, rel});
  }
  return t;
}

Table greybody_table(const RunConfig& cfg) {
  const auto profile = make_profile(cfg);
  const auto kin = make_kinematics(cfg);
  Table t;
  t.header = {"theta_rad", "omega_l", "gamma_step_physical", "gamma_step_paper",
              "gamma_numerov"};
  for (int i = 1; i <= cfg.theta_steps; ++i) {
    const double theta = (pi / 2) * i / cfg.theta_steps;
    const double k_perp = cfg.n0 * cfg.omega_l_rad_s * std::sin(theta) / c_light;
    const double g_phys = greybody_lab(cfg.omega_l_rad_s, theta, k_perp, kin,
                                       cfg.n0, StepVariant::physical);
    const double g_paper = greybody_lab(cfg.omega_l_rad_s, theta, k_perp, kin,
                                        cfg.n0, StepVariant::paper_literal);
    double g_num = std::numeric_limits<double>::quiet_NaN();
    if (!cfg.numerov) {
      // column stays nan when skipped
    } else if (k_perp == 0.0) {
      g_num = 1.0;  // no barrier at all
    } else {
      const auto prob = make_scattering_problem(profile, kin, k_perp);
      const double k_xl = cfg.n0 * cfg.omega_l_rad_s * std::cos(theta) / c_light;
      const double omega = kin.gamma * (cfg.omega_l_rad_s - kin.v * k_xl);
      g_num = numerov_transmission(prob, omega).transmission;
    }
    t.rows.push_back({theta, cfg.omega_l_rad_s, g_phys, g_paper, g_num});
  }
  return t;
}

Table modes_table(const RunConfig& cfg) {
  const auto profile = make_profile(cfg);
  const auto kin = make_kinematics(cfg);
  const auto mode =
      ModeSpec::from_lab(cfg.omega_l_rad_s, cfg.theta_rad, cfg.n0, kin);
  const auto roots = wkb_ku_roots(mode.k_w, mode.k_perp, cfg.n0, kin);
  const double sb = sigma_b_exponent(mode, profile, kin);
  Table t;
  t.header = {"omega_l",   "theta_rad",  "k_w",        "k_perp",
              "k_u_plus",  "k_u_minus",  "propagating", "sigma_b",
              "alpha2_re", "alpha2_im"};
  t.rows.push_back({mode.omega_l, mode.theta, mode.k_w, mode.k_perp,
                    roots.k_u_plus, roots.k_u_minus, roots.propagating, sb, 1.0,
                    sb});
  return t;
}

// One named parameter varied over a range; rows of the target subcommand are
// concatenated with a leading column, ordered by sweep index.
Table sweep_table(RunConfig cfg) {
  if (cfg.sweep_param.empty()) throw config_error("sweep needs --param");
  auto set_param = [&](RunConfig& c, double value) {
    if (cfg.sweep_param == "eta")
      c.eta = value;
    else if (cfg.sweep_param == "n0")
      c.n0 = value;
    else if (cfg.sweep_param == "sigma-m")
      c.sigma_m = value;
    else if (cfg.sweep_param == "c-over-v")
      c.c_over_v = value;
    else if (cfg.sweep_param == "v-mps")
      c.v_mps = value;
    else if (cfg.sweep_param == "theta-rad")
      c.theta_rad = value;
    else if (cfg.sweep_param == "omega-l-rad-s")
      c.omega_l_rad_s = value;
    else
      throw config_error("unknown sweep parameter: " + cfg.sweep_param);
  };
  Table (*target)(const RunConfig&) = nullptr;
  if (cfg.sweep_target == "horizons")
    target = horizons_table;
  else if (cfg.sweep_target == "temperature")
    target = temperature_table;
  else if (cfg.sweep_target == "greybody")
    target = greybody_table;
  else if (cfg.sweep_target == "dispersion-window")
    target = window_table;
  else if (cfg.sweep_target == "modes")
    target = modes_table;
  else
    throw config_error("unknown sweep target: " + cfg.sweep_target);
  if (cfg.sweep_steps < 1) throw config_error("need --steps >= 1");

  std::string column = cfg.sweep_param;
  for (char& ch : column)
    if (ch == '-') ch = '_';

  Table out;
  for (int i = 0; i < cfg.sweep_steps; ++i) {
    const double f =
        (cfg.sweep_steps == 1) ? 0.0 : double(i) / (cfg.sweep_steps - 1);
    const double value = cfg.sweep_from + (cfg.sweep_to - cfg.sweep_from) * f;
    RunConfig point = cfg;
    set_param(point, value);
    const Table t = target(point);
    if (out.header.empty()) {
      out.header = {column};
      out.header.insert(out.header.end(), t.header.begin(), t.header.end());
    }
    for (const auto& r : t.rows) {
      std::vector<json> row = {value};
      row.insert(row.end(), r.begin(), r.end());
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

// ---- config file and option wiring ----------------------------------------

// JSON config supplies defaults for long options; explicit command-line flags
// win.  Implemented by injecting "--key value" tokens ahead of the user's,
// for keys the user did not type.
std::vector<std::string> apply_config_defaults(std::vector<std::string> args) {
  std::string config_path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config") config_path = args[i + 1];
  if (config_path.empty()) return args;

  std::ifstream in(config_path);
  if (!in) throw config_error("cannot open config file: " + config_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw config_error(std::string("bad JSON config: ") + e.what());
  }
  if (!j.is_object()) throw config_error("config must be a JSON object");

  std::vector<std::string> inject;
  for (const auto& [key, value] : j.items()) {
    const std::string flag = "--" + key;
    bool user_supplied = false;
    for (const auto& a : args)
      if (a == flag) user_supplied = true;
    if (user_supplied) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) inject.push_back(flag);
    } else {
      inject.push_back(flag);
      inject.push_back(value.is_string() ? value.get<std::string>()
                                         : value.dump());
    }
  }
  // Tokens go right after the subcommand name (the first token that is not
  // itself a flag or a flag value).
  std::size_t sub = 0;
  while (sub < args.size() && !args[sub].empty() && args[sub][0] == '-')
    sub += 2;  // skip "--flag value" pairs ahead of the subcommand
  if (sub >= args.size()) return args;
  std::vector<std::string> out(args.begin(), args.begin() + sub + 1);
  out.insert(out.end(), inject.begin(), inject.end());
  out.insert(out.end(), args.begin() + sub + 1, args.end());
  return out;
}

void add_profile_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--profile", cfg.profile_kind,
                  "Profile shape: gaussian|shockwave|tabulated");
  cmd->add_option("--n0", cfg.n0, "Background refractive index");
  cmd->add_option("--eta", cfg.eta, "Perturbation height (dimensionless)");
  cmd->add_option("--sigma-m", cfg.sigma_m, "Profile length scale [m]");
  cmd->add_option("--delta-wh-m", cfg.delta_wh_m,
                  "Shockwave trailing-edge thickness [m]");
  cmd->add_option("--delta-bh-m", cfg.delta_bh_m,
                  "Shockwave leading-edge thickness [m]");
  cmd->add_option("--profile-csv", cfg.profile_csv,
                  "Two-column CSV (x_meters, intensity) for tabulated profiles");
}

void add_kinematics_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--v-mps", cfg.v_mps, "Pulse speed [m/s]");
  cmd->add_option("--c-over-v", cfg.c_over_v, "c divided by the pulse speed");
}

void add_material_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--material", cfg.material,
                  "Material preset name or JSON path");
  cmd->add_option("--materials-dir", cfg.materials_dir,
                  "Directory with material presets");
  cmd->add_option("--cauchy-n0", cfg.cauchy_n0, "Inline Cauchy material n0");
  cmd->add_option("--cauchy-b0-s2", cfg.cauchy_b0_s2,
                  "Inline Cauchy material B0 [s^2]");
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", cfg.output, "Output path (default stdout)");
  // Consumed before parsing; registered so CLI11 accepts the flag.
  cmd->add_option("--config", cfg.config_file,
                  "JSON config file with option defaults");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Horizon thermodynamics and emission predictions for a moving "
      "refractive-index perturbation"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* horizons = app.add_subcommand(
      "horizons", "Locate the horizon pair and its surface gravity");
  auto* temperature = app.add_subcommand(
      "temperature", "Pulse- and lab-frame Hawking temperatures");
  auto* spectrum = app.add_subcommand(
      "spectrum", "Windowed, greybody-weighted emission spectrum");
  auto* window = app.add_subcommand(
      "dispersion-window", "Phase/group horizon spectral windows");
  auto* bogo = app.add_subcommand(
      "bogoliubov-check",
      "Quadrature vs closed-form Bogoliubov thermality ratio");
  auto* grey = app.add_subcommand(
      "greybody", "Step and Numerov transmission over the emission angles");
  auto* modes = app.add_subcommand(
      "modes", "WKB roots and thermality exponent of one out mode");
  auto* sweep = app.add_subcommand(
      "sweep", "Vary one parameter and concatenate the target's rows");

  for (auto* cmd : {horizons, temperature, spectrum, grey, modes, sweep})
    add_profile_options(cmd, cfg);
  for (auto* cmd : {horizons, temperature, spectrum, window, grey, modes, sweep})
    add_kinematics_options(cmd, cfg);
  for (auto* cmd : {spectrum, window, sweep}) add_material_options(cmd, cfg);
  for (auto* cmd :
       {horizons, temperature, spectrum, window, bogo, grey, modes, sweep})
    add_output_options(cmd, cfg);

  for (auto* cmd : {temperature, spectrum, modes})
    cmd->add_option("--theta-rad", cfg.theta_rad, "Emission angle [rad]");
  for (auto* cmd : {grey, modes, sweep})
    cmd->add_option("--omega-l-rad-s", cfg.omega_l_rad_s,
                    "Lab angular frequency [rad/s]");
  // The window subcommand carries no profile; --eta alone sets the height.
  window->add_option("--eta", cfg.eta, "Perturbation height (dimensionless)");

  spectrum->add_option("--omega-min-rad-s", cfg.omega_min_rad_s,
                       "Grid lower bound [rad/s]");
  spectrum->add_option("--omega-max-rad-s", cfg.omega_max_rad_s,
                       "Grid upper bound [rad/s]");
  spectrum->add_option("--lambda-min-nm", cfg.lambda_min_nm,
                       "Grid bound as wavelength [nm]");
  spectrum->add_option("--lambda-max-nm", cfg.lambda_max_nm,
                       "Grid bound as wavelength [nm]");
  spectrum->add_option("--omega-steps", cfg.omega_steps, "Grid point count");
  spectrum->add_flag("--log-grid", cfg.log_grid, "Log-spaced grid");
  spectrum->add_flag("--gate-group", cfg.gate_group,
                     "Gate emission on the group window instead of phase");

  bogo->add_option("--sigma-b", cfg.sigma_b_values,
                   "Thermality exponent(s); default 0.1 0.5 1 2 5");
  bogo->add_option("--k-u-prime", cfg.k_u_prime, "Conjugate wavenumber");

  grey->add_option("--theta-steps", cfg.theta_steps,
                   "Angular grid points over (0, pi/2]");
  grey->add_flag("--numerov,!--no-numerov", cfg.numerov,
                 "Compute (or skip) the Numerov column");

  sweep->add_option("--target", cfg.sweep_target,
                    "horizons|temperature|greybody|dispersion-window|modes");
  sweep->add_option("--param", cfg.sweep_param, "Parameter to vary");
  sweep->add_option("--from", cfg.sweep_from, "Range start");
  sweep->add_option("--to", cfg.sweep_to, "Range end");
  sweep->add_option("--steps", cfg.sweep_steps, "Number of sweep points");
  sweep->add_option("--theta-rad", cfg.theta_rad, "Emission angle [rad]");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = apply_config_defaults(args);
  } catch (const config_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    std::vector<const char*> cargs = {argv[0]};
    for (const auto& a : args) cargs.push_back(a.c_str());
    app.parse(int(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (horizons->parsed()) run_horizons(cfg);
    if (temperature->parsed()) emit_table(cfg, temperature_table(cfg));
    if (spectrum->parsed()) emit_table(cfg, spectrum_table(cfg));
    if (window->parsed()) run_dispersion_window(cfg);
    if (bogo->parsed()) emit_table(cfg, bogoliubov_table(cfg));
    if (grey->parsed()) emit_table(cfg, greybody_table(cfg));
    if (modes->parsed()) emit_table(cfg, modes_table(cfg));
    if (sweep->parsed()) emit_table(cfg, sweep_table(cfg));
  } catch (const config_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
