#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhf/config.hpp"
#include "bhf/coupling.hpp"
#include "bhf/gp.hpp"
#include "bhf/lattice.hpp"
#include "bhf/minimize.hpp"
#include "bhf/trialstate.hpp"

namespace bhf {

// Everything the lattice comparison needs at one value of h.
struct ScalePoint {
  double h = 0;
  Grid macro, micro;
  Vec V_micro, W;
  BoundState bs;
  CouplingConstants cc;
  double g = 0;  // coupling used in the GP problem
  CondensateState gp;
  TrialState trial;  // already normalised to tr gamma = h^{2-d}
  double lambda = 1;
  LatticeModel model;
};

ScalePoint prepare_point(const Config& cfg, double h, int n, double length);

struct ScalingRow {
  double h = 0;
  double E_trial = 0;
  std::optional<double> E_minimized;
  double E_predicted = 0;
  double remainder = 0;
  double gp_energy = 0;
  double lambda = 1;
  double E_b = 0;
  double g = 0;
  double leading_ratio = 0;        // (2/h)(E_trial + E_b/(2h)) / E^GP
  double quartic_coefficient = 0;  // [(2/h)(E_trial + E_b/(2h)) - kinetic - trap] / ||psi||_4^4
  std::string error;               // non-empty when the row failed
};

struct ScalingReport {
  std::vector<ScalingRow> rows;  // decreasing h
  std::optional<double> fitted_exponent, fit_r2;
  std::optional<double> quartic_fit;  // intercept of the quartic coefficient against sqrt(h)
};

// Worker threads for independent rows: BHF_WORKERS if set, else the hardware count.
int worker_count();

ScalingReport scaling_study(const Config& cfg);

struct LineFit {
  double slope = 0, intercept = 0, r2 = 0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace bhf
