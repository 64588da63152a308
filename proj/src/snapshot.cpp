#include "rotstar/snapshot.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rotstar/errors.hpp"

namespace rotstar {

using nlohmann::json;

namespace {

json to_json(const Eigen::ArrayXd& a) {
  json out = json::array();
  for (int i = 0; i < a.size(); ++i) out.push_back(a[i]);
  return out;
}

json to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    out.push_back(row);
  }
  return out;
}

Eigen::ArrayXd array_from(const json& j) {
  Eigen::ArrayXd a(j.size());
  for (size_t i = 0; i < j.size(); ++i) a[i] = j[i].get<double>();
  return a;
}

Eigen::MatrixXd matrix_from(const json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows ? static_cast<int>(j[0].size()) : 0;
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
  return m;
}

json config_to_json(const SolverConfig& c) {
  return json{{"nu", c.nu},
              {"jmax", c.jmax},
              {"panels", c.panels_interior},
              {"panels_exterior", c.panels_exterior},
              {"nodes", c.nodes_per_panel},
              {"angular_order", c.angular_order},
              {"fp_tol", c.fp_tol},
              {"max_iter", c.max_iter},
              {"r0_factor", c.r0_factor},
              {"ode_tol", c.ode_tol}};
}

SolverConfig config_from_json(const json& j) {
  SolverConfig c;
  c.nu = j.at("nu").get<double>();
  c.jmax = j.at("jmax").get<int>();
  c.panels_interior = j.at("panels").get<int>();
  c.panels_exterior = j.at("panels_exterior").get<int>();
  c.nodes_per_panel = j.at("nodes").get<int>();
  c.angular_order = j.at("angular_order").get<int>();
  c.fp_tol = j.at("fp_tol").get<double>();
  c.max_iter = j.at("max_iter").get<int>();
  c.r0_factor = j.at("r0_factor").get<double>();
  c.ode_tol = j.at("ode_tol").get<double>();
  return c;
}

}  // namespace

SolutionSnapshot make_snapshot(const DistortedSolution& sol, const SolverConfig& config) {
  SolutionSnapshot s;
  s.config = config;
  s.eps = sol.eps;
  s.xi1 = sol.profile.xi1;
  s.mu1 = sol.profile.mu1;
  s.radial_nodes = sol.w.rgrid.nodes;
  s.radial_weights = sol.w.rgrid.weights;
  s.panel_breaks = sol.w.rgrid.panel_breaks;
  s.zeta_nodes = sol.w.agrid.zeta_nodes;
  s.zeta_weights = sol.w.agrid.zeta_weights;
  s.w_values = sol.w.values;
  s.theta_sharp_nu = sol.theta_modes.modes;
  s.report = sol.report;
  return s;
}

std::string serialize_snapshot(const SolutionSnapshot& snap) {
  json j;
  j["schema_version"] = snap.schema_version;
  j["config"] = config_to_json(snap.config);
  j["eps"] = snap.eps;
  j["profile"] = json{{"nu", snap.config.nu}, {"xi1", snap.xi1}, {"mu1", snap.mu1}};
  j["grid"] = json{{"radial_nodes", to_json(snap.radial_nodes)},
                   {"radial_weights", to_json(snap.radial_weights)},
                   {"panel_breaks", snap.panel_breaks},
                   {"zeta_nodes", to_json(snap.zeta_nodes)},
                   {"zeta_weights", to_json(snap.zeta_weights)}};
  j["w"] = to_json(snap.w_values);
  j["theta_sharp_nu_modes"] = to_json(snap.theta_sharp_nu);
  j["report"] = json{{"iterations", snap.report.iterations},
                     {"converged", snap.report.converged},
                     {"residual", snap.report.residual},
                     {"diffs", snap.report.diffs},
                     {"ratios", snap.report.ratios}};
  if (snap.surface) {
    j["surface"] = json{{"zeta", to_json(snap.surface->zeta_samples)},
                        {"xi1", to_json(snap.surface->xi1_values)},
                        {"dxi1_dzeta", to_json(snap.surface->dxi1_dzeta)},
                        {"normal_deriv", to_json(snap.surface->normal_derivs)},
                        {"sigma", snap.surface->sigma}};
  }
  return j.dump(2) + "\n";
}

SolutionSnapshot parse_snapshot(const std::string& text) {
  json j = json::parse(text);
  SolutionSnapshot s;
  s.schema_version = j.at("schema_version").get<int>();
  if (s.schema_version != kSnapshotSchemaVersion)
    throw Error("snapshot schema_version " + std::to_string(s.schema_version) +
                " is not supported (expected " +
                std::to_string(kSnapshotSchemaVersion) + ")");
  s.config = config_from_json(j.at("config"));
  s.eps = j.at("eps").get<double>();
  s.xi1 = j.at("profile").at("xi1").get<double>();
  s.mu1 = j.at("profile").at("mu1").get<double>();
  const json& g = j.at("grid");
  s.radial_nodes = array_from(g.at("radial_nodes"));
  s.radial_weights = array_from(g.at("radial_weights"));
  s.panel_breaks = g.at("panel_breaks").get<std::vector<double>>();
  s.zeta_nodes = array_from(g.at("zeta_nodes"));
  s.zeta_weights = array_from(g.at("zeta_weights"));
  s.w_values = matrix_from(j.at("w"));
  s.theta_sharp_nu = matrix_from(j.at("theta_sharp_nu_modes"));
  const json& r = j.at("report");
  s.report.iterations = r.at("iterations").get<int>();
  s.report.converged = r.at("converged").get<bool>();
  s.report.residual = r.at("residual").get<double>();
  s.report.diffs = r.at("diffs").get<std::vector<double>>();
  s.report.ratios = r.at("ratios").get<std::vector<double>>();
  if (j.contains("surface")) {
    SurfaceProfile sp;
    const json& su = j.at("surface");
    sp.zeta_samples = array_from(su.at("zeta"));
    sp.xi1_values = array_from(su.at("xi1"));
    sp.dxi1_dzeta = array_from(su.at("dxi1_dzeta"));
    sp.normal_derivs = array_from(su.at("normal_deriv"));
    sp.sigma = su.at("sigma").get<double>();
    s.surface = std::move(sp);
  }
  return s;
}

void save_snapshot(const SolutionSnapshot& snap, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << serialize_snapshot(snap);
  if (!out) throw Error("failed writing '" + path + "'");
}

SolutionSnapshot load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_snapshot(buf.str());
}

DistortedSolution restore_solution(const SolutionSnapshot& snap) {
  DistortedSolution sol;
  sol.nu = snap.config.nu;
  sol.eps = snap.eps;
  sol.profile = solve_lane_emden(snap.config.nu, snap.config.ode_tol);
  const auto [rg, ag] = make_grids(snap.config, sol.profile);
  if (rg.nodes.size() != snap.radial_nodes.size() ||
      ag.zeta_nodes.size() != snap.zeta_nodes.size())
    throw Error("snapshot grid does not match its config echo");
  sol.w = GridFunction{rg, ag, snap.w_values};
  sol.theta_modes = ModeSet{rg, snap.theta_sharp_nu, ag.jmax};
  sol.origin_potential = potential_origin_value(sol.theta_modes);
  sol.report = snap.report;
  return sol;
}

std::string g17(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace rotstar
