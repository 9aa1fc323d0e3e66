#include "bhf/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace bhf {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json grid_to_json(const Grid& g) { return {{"dimension", dim_name(g.dim)}, {"n", g.n}, {"length", g.length}}; }

Grid grid_from_json(const json& j) {
  return Grid(dim_from_name(j.at("dimension").get<std::string>()), j.at("n").get<int>(), j.at("length").get<double>());
}

json bound_state_to_json(const BoundState& bs) {
  json hat = json::array();
  for (Eigen::Index k = 0; k < bs.alpha0_hat.size(); ++k) hat.push_back({bs.alpha0_hat[k].real(), bs.alpha0_hat[k].imag()});
  return {{"dimension", dim_name(bs.grid.dim)},
          {"grid", grid_to_json(bs.grid)},
          {"E_b", bs.E_b},
          {"spectral_gap", bs.spectral_gap},
          {"eigenvalue", bs.eigenvalue},
          {"residual", bs.residual},
          {"norm", bs.norm},
          {"alpha0", to_std(bs.alpha0)},
          {"alpha0_hat", hat}};
}

BoundState bound_state_from_json(const json& j) {
  try {
    BoundState bs;
    bs.grid = grid_from_json(j.at("grid"));
    bs.E_b = j.at("E_b").get<double>();
    bs.spectral_gap = j.at("spectral_gap").get<double>();
    bs.eigenvalue = j.value("eigenvalue", -bs.E_b);
    bs.residual = j.value("residual", 0.0);
    bs.norm = j.value("norm", 1.0);
    const auto a = j.at("alpha0").get<std::vector<double>>();
    bs.alpha0 = Eigen::Map<const Vec>(a.data(), static_cast<Eigen::Index>(a.size()));
    const auto& hat = j.at("alpha0_hat");
    bs.alpha0_hat.resize(static_cast<Eigen::Index>(hat.size()));
    for (size_t k = 0; k < hat.size(); ++k) bs.alpha0_hat[k] = {hat[k].at(0).get<double>(), hat[k].at(1).get<double>()};
    if (bs.alpha0.size() != bs.grid.n) throw ConfigError("alpha0 length does not match the grid");
    return bs;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed bound state: ") + e.what());
  }
}

json coupling_to_json(const CouplingConstants& cc) {
  return {{"g_bcs", cc.g_bcs},
          {"g_dir", cc.g_dir},
          {"g_ex", cc.g_ex},
          {"g", cc.g},
          {"assumption2_passed", cc.assumption2_passed ? json(*cc.assumption2_passed) : json(nullptr)},
          {"quadrature_error_estimate", cc.quadrature_error_estimate}};
}

json stability_to_json(const StabilityReport& r) {
  return {{"passed", r.passed},
          {"pointwise_margin", r.pointwise_margin},
          {"fourier_min", r.fourier_min},
          {"witness_x", r.witness_x},
          {"witness_p", r.witness_p}};
}

json condensate_to_json(const CondensateState& s, double g) {
  return {{"grid", grid_to_json(s.grid)}, {"g", g},
          {"energy", s.energy},           {"mu", s.mu},
          {"residual", s.residual},       {"converged", s.converged},
          {"iterations", s.iterations},   {"psi", to_std(s.psi)}};
}

json energy_to_json(const EnergyBreakdown& e) {
  return {{"total", e.total},       {"kinetic", e.kinetic},   {"external", e.external},
          {"pairing", e.pairing},   {"exchange", e.exchange}, {"direct", e.direct}};
}

json scaling_to_json(const ScalingReport& r) {
  json rows = json::array();
  for (const auto& w : r.rows) {
    json row = {{"h", w.h},
                {"E_trial", w.E_trial},
                {"E_minimized", opt(w.E_minimized)},
                {"E_predicted", w.E_predicted},
                {"remainder", w.remainder},
                {"gp_energy", w.gp_energy},
                {"lambda", w.lambda},
                {"E_b", w.E_b},
                {"g", w.g},
                {"leading_ratio", w.leading_ratio},
                {"quartic_coefficient", w.quartic_coefficient}};
    if (!w.error.empty()) row["error"] = w.error;
    rows.push_back(row);
  }
  return {{"rows", rows},
          {"fitted_exponent", opt(r.fitted_exponent)},
          {"fit_r2", opt(r.fit_r2)},
          {"quartic_fit", opt(r.quartic_fit)}};
}

void write_gp_csv(std::ostream& out, const CondensateState& s) {
  out << "iteration,energy,residual\n";
  for (size_t k = 0; k < s.energy_history.size(); ++k) {
    const double res = k < s.residual_history.size() ? s.residual_history[k] : s.residual;
    out << k << ',' << num(s.energy_history[k]) << ',' << num(res) << '\n';
  }
}

void write_bhf_csv(std::ostream& out, const MinimizeResult& r) {
  out << "iter,total,kinetic,external,pairing,exchange,direct,constraint_residual\n";
  for (const auto& it : r.history) {
    const auto& e = it.energy;
    out << it.iter << ',' << num(e.total) << ',' << num(e.kinetic) << ',' << num(e.external) << ','
        << num(e.pairing) << ',' << num(e.exchange) << ',' << num(e.direct) << ',' << num(it.constraint_residual)
        << '\n';
  }
}

void write_scaling_csv(std::ostream& out, const ScalingReport& r) {
  out << "h,E_trial,E_minimized,E_predicted,remainder,gp_energy,lambda\n";
  for (const auto& w : r.rows) {
    if (!w.error.empty()) continue;
    out << num(w.h) << ',' << num(w.E_trial) << ',' << (w.E_minimized ? num(*w.E_minimized) : "") << ','
        << num(w.E_predicted) << ',' << num(w.remainder) << ',' << num(w.gp_energy) << ',' << num(w.lambda) << '\n';
  }
}

void write_matrix(const std::string& path, const Mat& m, double spacing) {
  if (m.rows() != m.cols()) throw ConfigError("write_matrix: matrix is not square");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  const auto n = static_cast<std::uint32_t>(m.rows());
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(&spacing), sizeof spacing);
  const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m;
  out.write(reinterpret_cast<const char*>(rm.data()), static_cast<std::streamsize>(sizeof(double) * rm.size()));
}

Mat read_matrix(const std::string& path, double* spacing) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::uint32_t n = 0;
  double dx = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  in.read(reinterpret_cast<char*>(&dx), sizeof dx);
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm(n, n);
  in.read(reinterpret_cast<char*>(rm.data()), static_cast<std::streamsize>(sizeof(double) * rm.size()));
  if (!in) throw ConfigError(path + ": truncated matrix file");
  if (spacing) *spacing = dx;
  return rm;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << j.dump(2) << '\n';
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace bhf
