#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhf/potential.hpp"
#include "bhf/stability.hpp"

namespace bhf {

// How V is obtained from the terms. Both constructions set V = 2U_+ - U_-, which satisfies the
// stability assumption with certificate U: `convolution` takes U = u * u(-.) from terms u,
// `certificate` takes the terms as U itself (the caller vouches for U^ >= 0; it is re-checked).
enum class Construction { None, Convolution, Certificate };

struct PotentialConfig {
  PotentialSpec spec;
  Construction construct = Construction::None;
};

struct GridConfig {
  Dim dim = Dim::One;
  int n = 512;
  double length = 2.4;
};

struct PairConfig {
  double eps_bind = 1e-10;
  double decay_tol = 1e-6;
};

struct TrialConfig {
  double h = 1.0 / 16;
  double slack_exponent = 0.5;
  double tol_psd = 1e-9;
  double min_points = 8;
};

struct GPConfig {
  std::optional<double> g;  // default: the coupling constant of the pair state
  double step = 1.0;
  int max_iter = 50000;
  double tol = 1e-8;
  double boundary_tol = 1e-6;
};

struct BHFConfig {
  double h = 1.0 / 8;
  int n = 256;
  double length = 2.4;
  double tol = 1e-6;
  int max_iter = 40;
  double tol_psd = 1e-9;
};

struct ScalingConfig {
  std::vector<double> h{1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64};
  bool minimize = false;  // also run the BHF minimiser per row (on the bhf.n lattice)
};

struct Config {
  PotentialConfig potential;
  PotentialSpec trap;
  GridConfig grid;
  PairConfig pair;
  TrialConfig trial;
  GPConfig gp;
  BHFConfig bhf;
  ScalingConfig scaling;
  StabilityTolerances stability;
};

Config parse_config(const std::string& yaml_text);
Config load_config(const std::string& path);
// Potential and trap sections only; used by subcommands that take separate files.
PotentialConfig load_potential(const std::string& path);
PotentialSpec load_trap(const std::string& path);

// V samples on the grid (constructed when requested).
Vec sample_potential(const PotentialConfig& pc, const Grid& grid);
// U samples when V is constructed, otherwise nullopt.
std::optional<Vec> sample_certificate(const PotentialConfig& pc, const Grid& grid);

}  // namespace bhf
