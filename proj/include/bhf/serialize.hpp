#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>

#include "bhf/coupling.hpp"
#include "bhf/gp.hpp"
#include "bhf/minimize.hpp"
#include "bhf/pairstate.hpp"
#include "bhf/scaling.hpp"
#include "bhf/stability.hpp"
#include "bhf/trialstate.hpp"

namespace bhf {

using json = nlohmann::ordered_json;

json grid_to_json(const Grid& g);
Grid grid_from_json(const json& j);

// {dimension, grid, E_b, spectral_gap, alpha0[], alpha0_hat[]}; alpha0_hat entries are [re, im].
json bound_state_to_json(const BoundState& bs);
BoundState bound_state_from_json(const json& j);

json coupling_to_json(const CouplingConstants& cc);
json stability_to_json(const StabilityReport& r);
json condensate_to_json(const CondensateState& s, double g);
json energy_to_json(const EnergyBreakdown& e);
json scaling_to_json(const ScalingReport& r);

// Header line plus one row per record; numbers printed with 17 significant digits.
void write_gp_csv(std::ostream& out, const CondensateState& s);
void write_bhf_csv(std::ostream& out, const MinimizeResult& r);
void write_scaling_csv(std::ostream& out, const ScalingReport& r);

// Flat binary: u32 n, f64 spacing, then n*n row-major f64 (little endian, host order).
void write_matrix(const std::string& path, const Mat& m, double spacing);
Mat read_matrix(const std::string& path, double* spacing = nullptr);

void write_json(const std::string& path, const json& j);
json read_json(const std::string& path);

}  // namespace bhf
