#include "bhf/scaling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace bhf {

ScalePoint prepare_point(const Config& cfg, double h, int n, double length) {
  ScalePoint p;
  p.h = h;
  p.macro = Grid::periodic(n, length);
  p.micro = micro_grid(p.macro, h);
  p.V_micro = sample_potential(cfg.potential, p.micro);
  p.bs = solve_ground_state(p.V_micro, p.micro, PairOptions{cfg.pair.eps_bind, cfg.pair.decay_tol});
  const auto U = sample_certificate(cfg.potential, p.micro);
  p.cc = coupling_total(p.V_micro, p.bs, U ? &*U : nullptr, cfg.stability);
  p.g = cfg.gp.g.value_or(p.cc.g);
  p.W = eval_trap(cfg.trap, p.macro);
  p.gp = gp_minimize(p.W, p.g, p.macro, GPOptions{cfg.gp.step, cfg.gp.max_iter, cfg.gp.tol, cfg.gp.boundary_tol});
  if (!p.gp.converged)
    throw Error("GP minimiser stopped at residual " + std::to_string(p.gp.residual) + " after " +
                std::to_string(p.gp.iterations) + " iterations");
  const TrialState raw =
      build_trial(h, p.gp, p.bs, TrialOptions{cfg.trial.slack_exponent, cfg.trial.min_points});
  p.lambda = normalize_for_trace(raw);
  p.trial = rescale_trial(raw, p.lambda);
  p.model = assemble(h, p.macro, p.V_micro, p.W, p.bs);
  return p;
}

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BHF_WORKERS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = n > 0 ? std::min(n, cap) : cap;
  }
  return std::max(1, n);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 1.0;
  return f;
}

namespace {

ScalingRow run_row(const Config& cfg, double h) {
  ScalingRow row;
  row.h = h;
  try {
    const ScalePoint p = prepare_point(cfg, h, cfg.grid.n, cfg.grid.length);
    row.E_b = p.bs.E_b;
    row.g = p.g;
    row.lambda = p.lambda;
    row.E_trial = bhf_energy({p.trial.gamma, p.trial.alpha}, p.model).total;
    const auto gpe = gp_energy(p.gp.psi, p.W, p.g, p.macro);
    row.gp_energy = gpe.total;
    row.E_predicted = -p.bs.E_b / (2 * h) + 0.5 * h * gpe.total;
    row.remainder = row.E_trial - row.E_predicted;
    const double lead = (2 / h) * (row.E_trial + p.bs.E_b / (2 * h));
    row.leading_ratio = lead / gpe.total;
    row.quartic_coefficient = (lead - gpe.kinetic - gpe.trap) / l4_norm4(p.gp.psi, p.macro);
    if (cfg.scaling.minimize) {
      MinimizeOptions mo;
      mo.max_iter = cfg.bhf.max_iter;
      mo.tol = cfg.bhf.tol;
      const auto m = minimize_bhf(p.model, {p.trial.gamma, p.trial.alpha}, p.model.particles, mo);
      row.E_minimized = m.energy.total;
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

ScalingReport scaling_study(const Config& cfg) {
  if (cfg.scaling.h.empty()) throw ConfigError("scaling study needs at least one h");
  std::vector<double> hs = cfg.scaling.h;
  for (double h : hs)
    if (!(h > 0 && h <= 0.5)) throw ConfigError("scaling h values must lie in (0, 1/2]");
  std::sort(hs.begin(), hs.end(), std::greater<>());

  ScalingReport rep;
  rep.rows.resize(hs.size());
  const int workers = std::min<int>(worker_count(), static_cast<int>(hs.size()));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < hs.size();) rep.rows[i] = run_row(cfg, hs[i]);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<double> lx, ly, sx, gy;
  for (const auto& r : rep.rows) {
    if (!r.error.empty()) continue;
    sx.push_back(std::sqrt(r.h));
    gy.push_back(r.quartic_coefficient);
    if (std::abs(r.remainder) > 1e-13) {
      lx.push_back(std::log(r.h));
      ly.push_back(std::log(std::abs(r.remainder)));
    }
  }
  if (lx.size() >= 4) {
    const LineFit f = fit_line(lx, ly);
    rep.fitted_exponent = f.slope;
    rep.fit_r2 = f.r2;
  }
  if (sx.size() >= 2) rep.quartic_fit = fit_line(sx, gy).intercept;
  return rep;
}

}  // namespace bhf
