#pragma once

#include <optional>
#include <string>

#include "rotstar/fixed_point.hpp"
#include "rotstar/surface.hpp"

namespace rotstar {

inline constexpr int kSnapshotSchemaVersion = 1;

/// Serializable state of a solve: config echo, profile scalars, grids, the
/// perturbation w, the source modes, and the iteration report. Surface data
/// rides along once computed. Serialization is deterministic, so
/// save(load(s)) is byte-identical to s.
struct SolutionSnapshot {
  int schema_version = kSnapshotSchemaVersion;
  SolverConfig config;
  double eps = 0.0;
  double xi1 = 0.0;
  double mu1 = 0.0;
  Eigen::ArrayXd radial_nodes;
  Eigen::ArrayXd radial_weights;
  std::vector<double> panel_breaks;
  Eigen::ArrayXd zeta_nodes;
  Eigen::ArrayXd zeta_weights;
  Eigen::MatrixXd w_values;            // n_r x n_zeta
  Eigen::MatrixXd theta_sharp_nu;      // n_r x n_modes
  IterationReport report;
  std::optional<SurfaceProfile> surface;
};

SolutionSnapshot make_snapshot(const DistortedSolution& sol, const SolverConfig& config);

std::string serialize_snapshot(const SolutionSnapshot& snap);
SolutionSnapshot parse_snapshot(const std::string& text);

void save_snapshot(const SolutionSnapshot& snap, const std::string& path);
SolutionSnapshot load_snapshot(const std::string& path);  // checks schema_version

/// Rebuild a full solution from a snapshot: the profile and grids are
/// recomputed deterministically from the config echo, w and the source modes
/// come from the file.
DistortedSolution restore_solution(const SolutionSnapshot& snap);

/// Shortest-or-17-significant-digit decimal form, '.'-decimal, no locale.
std::string g17(double x);

}  // namespace rotstar
