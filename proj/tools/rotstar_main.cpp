// rotstar: slowly rotating polytropic star equilibria from the command line.
//
// Subcommands: lane-emden, kovetz, solve, surface, chandrasekhar, validate.
// Exit codes: 0 ok, 1 usage/IO, 2 invalid parameter, 3 no finite zero,
// 4 not contracting, 5 max iterations exceeded.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotstar/errors.hpp"
#include "rotstar/perturbation.hpp"
#include "rotstar/snapshot.hpp"
#include "rotstar/surface.hpp"
#include "rotstar/validate.hpp"

using namespace rotstar;

namespace {

struct ConfigFlags {
  std::optional<double> nu, eps, fp_tol, r0_factor, ode_tol;
  std::optional<int> jmax, panels, panels_exterior, nodes, angular_order, max_iter;
  std::string config_path;

  void add_grid_options(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (same field names as flags)");
    cmd->add_option("--jmax", jmax, "even Legendre-mode cutoff");
    cmd->add_option("--panels", panels, "radial panels on [0, xi1]");
    cmd->add_option("--panels-exterior", panels_exterior, "radial panels on [xi1, R0]");
    cmd->add_option("--nodes", nodes, "Gauss nodes per radial panel");
    cmd->add_option("--angular-order", angular_order, "Gauss-Legendre order in zeta");
    cmd->add_option("--fp-tol", fp_tol, "fixed-point stopping tolerance");
    cmd->add_option("--max-iter", max_iter, "iteration budget");
    cmd->add_option("--r0-factor", r0_factor, "R0 = r0_factor * xi1 (>= 2)");
    cmd->add_option("--ode-tol", ode_tol, "radial ODE tolerance");
  }

  SolverConfig build() const {
    SolverConfig c;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw Error("cannot open config file '" + config_path + "'");
      nlohmann::json j = nlohmann::json::parse(in);
      if (j.contains("nu")) c.nu = j["nu"].get<double>();
      if (j.contains("jmax")) c.jmax = j["jmax"].get<int>();
      if (j.contains("panels")) c.panels_interior = j["panels"].get<int>();
      if (j.contains("panels_exterior")) c.panels_exterior = j["panels_exterior"].get<int>();
      if (j.contains("nodes")) c.nodes_per_panel = j["nodes"].get<int>();
      if (j.contains("angular_order")) c.angular_order = j["angular_order"].get<int>();
      if (j.contains("fp_tol")) c.fp_tol = j["fp_tol"].get<double>();
      if (j.contains("max_iter")) c.max_iter = j["max_iter"].get<int>();
      if (j.contains("r0_factor")) c.r0_factor = j["r0_factor"].get<double>();
      if (j.contains("ode_tol")) c.ode_tol = j["ode_tol"].get<double>();
    }
    if (nu) c.nu = *nu;
    if (jmax) c.jmax = *jmax;
    if (panels) {
      c.panels_interior = *panels;
      c.panels_exterior = panels_exterior ? *panels_exterior : std::max(1, *panels / 2);
    } else if (panels_exterior) {
      c.panels_exterior = *panels_exterior;
    }
    if (nodes) c.nodes_per_panel = *nodes;
    if (angular_order) c.angular_order = *angular_order;
    if (fp_tol) c.fp_tol = *fp_tol;
    if (max_iter) c.max_iter = *max_iter;
    if (r0_factor) c.r0_factor = *r0_factor;
    if (ode_tol) c.ode_tol = *ode_tol;
    return c;
  }
};

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  return file;
}

int cmd_lane_emden(double nu, int samples, double r0_factor, double tol,
                   const std::string& output) {
  const auto p = solve_lane_emden(nu, tol);
  const double R0 = r0_factor * p.xi1;
  const auto [mbar, rstar] = kovetz_sup(p);

  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << "r,theta,dtheta\n";
  for (int i = 0; i <= samples; ++i) {
    const double r = R0 * i / samples;
    out << g17(r) << ',' << g17(eval_theta(p, r)) << ',' << g17(eval_dtheta(p, r))
        << '\n';
  }
  out << "# xi1=" << g17(p.xi1) << " mu1=" << g17(p.mu1) << " mbar=" << g17(mbar)
      << "\n";
  if (!output.empty())
    std::cout << "xi1=" << g17(p.xi1) << " mu1=" << g17(p.mu1) << " mbar=" << g17(mbar)
              << "\n";
  return 0;
}

int cmd_kovetz(const std::vector<double>& nu_list, const std::string& output) {
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << "nu,mbar,r_star,below_six,status\n";
  for (double nu : nu_list) {
    try {
      const auto p = solve_lane_emden(nu, 1e-10, 600.0);
      const auto [mbar, rstar] = kovetz_sup(p);
      out << g17(nu) << ',' << g17(mbar) << ',' << g17(rstar) << ','
          << (mbar < 6.0 ? "true" : "false") << ",ok\n";
    } catch (const NoFiniteZero&) {
      if (nu == 5.0) {
        // closed form theta = (1 + r^2/3)^(-1/2): sup of 5 theta^4 r^2 is 15/4
        // at r = sqrt(3); Kovetz (1968) Table 1 lists 2.8 for this entry.
        out << g17(nu) << ',' << g17(3.75) << ',' << g17(std::sqrt(3.0)) << ','
            << "true,closed-form (no finite zero; table value 2.8 differs)\n";
      } else {
        out << g17(nu) << ",,,,no-finite-zero\n";
      }
    }
  }
  return 0;
}

int cmd_solve(const SolverConfig& config, double eps, const std::string& output) {
  const auto sol = solve_distorted(config, eps);
  const auto th = theta_grid(sol.profile, sol.w.rgrid, sol.w.agrid);
  const double dev = sup_norm(Theta_grid(sol) - th);
  std::cout << "nu=" << g17(config.nu) << " eps=" << g17(eps)
            << " iterations=" << sol.report.iterations
            << " converged=" << (sol.report.converged ? "true" : "false")
            << " residual=" << g17(sol.report.residual)
            << " sup|Theta-theta|=" << g17(dev) << "\n";
  if (!output.empty()) {
    save_snapshot(make_snapshot(sol, config), output);
    std::cout << "snapshot written to " << output << "\n";
  }
  return 0;
}

int cmd_surface(const std::string& snapshot_path, int samples,
                const std::string& output) {
  const auto sol = restore_solution(load_snapshot(snapshot_path));
  const auto sp = surface_profile(sol, samples);
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << "zeta,xi1,dxi1_dzeta,normal_deriv\n";
  for (int i = 0; i < sp.zeta_samples.size(); ++i) {
    out << g17(sp.zeta_samples[i]) << ',' << g17(sp.xi1_values[i]) << ','
        << g17(sp.dxi1_dzeta[i]) << ',' << g17(sp.normal_derivs[i]) << '\n';
  }
  out << "# sigma=" << g17(sp.sigma) << "\n";
  if (!output.empty()) std::cout << "sigma=" << g17(sp.sigma) << "\n";
  return 0;
}

int cmd_chandrasekhar(double nu, int samples, double tol, const std::string& output) {
  const auto p = solve_lane_emden(nu, tol);
  const auto h0 = solve_h0(p, tol);
  const auto psi2 = solve_Ej(p, 2, tol);
  const auto a2 = coeff_A2(p, tol);

  nlohmann::json j;
  j["nu"] = nu;
  j["xi1"] = p.xi1;
  j["mu1"] = p.mu1;
  j["A2"] = a2.A2;
  j["C2"] = a2.C2;
  j["sigma1"] = sigma_first_order(p, tol);
  nlohmann::json r = nlohmann::json::array(), h = nlohmann::json::array(),
                 ps = nlohmann::json::array();
  for (int i = 0; i < samples; ++i) {
    const double x = p.xi1 * i / (samples - 1);
    r.push_back(x);
    h.push_back(h0.value(x));
    ps.push_back(psi2.value(x));
  }
  j["r"] = std::move(r);
  j["h0"] = std::move(h);
  j["psi2"] = std::move(ps);

  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_validate(const SolverConfig& config, bool quick) {
  const auto results = run_validation(config, quick);
  size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
              << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << results.size() - failures << "/" << results.size() << " properties passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slowly rotating polytropic star equilibria"};
  app.require_subcommand(1);

  ConfigFlags flags;

  // lane-emden
  auto* le = app.add_subcommand("lane-emden", "solve the radial profile, write r,theta,dtheta");
  double le_nu = 0.0;
  int le_samples = 200;
  double le_r0 = 2.0, le_tol = 1e-12;
  std::string le_out;
  le->add_option("--nu", le_nu, "polytropic index")->required();
  le->add_option("--samples", le_samples, "number of output samples");
  le->add_option("--r0-factor", le_r0, "sample out to r0_factor * xi1");
  le->add_option("--ode-tol", le_tol, "integration tolerance");
  le->add_option("-o,--output", le_out, "CSV output path (default stdout)");

  // kovetz
  auto* kv = app.add_subcommand("kovetz", "table of sup nu theta^(nu-1) r^2 per index");
  std::vector<double> kv_nus;
  std::string kv_out;
  kv->add_option("--nu-list", kv_nus, "indices to tabulate")->required()->delimiter(',');
  kv->add_option("-o,--output", kv_out, "CSV output path (default stdout)");

  // solve
  auto* sv = app.add_subcommand("solve", "run the rotating-equilibrium iteration");
  double sv_eps = 0.0;
  std::string sv_out;
  sv->add_option("--nu", flags.nu, "polytropic index")->required();
  sv->add_option("--eps", sv_eps, "squared-angular-velocity parameter")->required();
  flags.add_grid_options(sv);
  sv->add_option("-o,--output", sv_out, "snapshot JSON path");

  // surface
  auto* sf = app.add_subcommand("surface", "free boundary of a solved snapshot");
  std::string sf_snapshot, sf_out;
  int sf_samples = 33;
  sf->add_option("snapshot", sf_snapshot, "snapshot JSON from 'solve'")->required();
  sf->add_option("--samples", sf_samples, "zeta samples on [0,1]");
  sf->add_option("-o,--output", sf_out, "CSV output path (default stdout)");

  // chandrasekhar
  auto* ch = app.add_subcommand("chandrasekhar", "first-order response h0, psi2, A2, sigma1");
  double ch_nu = 0.0, ch_tol = 1e-12;
  int ch_samples = 101;
  std::string ch_out;
  ch->add_option("--nu", ch_nu, "polytropic index")->required();
  ch->add_option("--samples", ch_samples, "radial samples on [0, xi1]");
  ch->add_option("--ode-tol", ch_tol, "integration tolerance");
  ch->add_option("-o,--output", ch_out, "JSON output path (default stdout)");

  // validate
  auto* va = app.add_subcommand("validate", "run the property suite");
  bool va_quick = false;
  va->add_option("--nu", flags.nu, "polytropic index (default 3)");
  flags.add_grid_options(va);
  va->add_flag("--quick", va_quick, "skip the direct-kernel cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (le->parsed()) return cmd_lane_emden(le_nu, le_samples, le_r0, le_tol, le_out);
    if (kv->parsed()) return cmd_kovetz(kv_nus, kv_out);
    if (sv->parsed()) return cmd_solve(flags.build(), sv_eps, sv_out);
    if (sf->parsed()) return cmd_surface(sf_snapshot, sf_samples, sf_out);
    if (ch->parsed()) return cmd_chandrasekhar(ch_nu, ch_samples, ch_tol, ch_out);
    if (va->parsed()) return cmd_validate(flags.build(), va_quick);
  } catch (const InvalidIndex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidMode& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OutOfDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NoFiniteZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotContracting& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const MaxIterExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
