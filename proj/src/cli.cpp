#include "bhf/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "bhf/config.hpp"
#include "bhf/decompose.hpp"
#include "bhf/serialize.hpp"

namespace bhf {

namespace {

namespace fs = std::filesystem;

// Flags shared by most subcommands; unset values leave the config file untouched.
struct Inputs {
  std::string config, potential, trap, dimension;
  std::optional<int> n;
  std::optional<double> length;
  std::string out_dir = ".";
};

void add_inputs(CLI::App* app, Inputs& in, bool trap) {
  app->add_option("--config", in.config, "YAML configuration file")->check(CLI::ExistingFile);
  app->add_option("--potential", in.potential, "YAML file with the pair potential")->check(CLI::ExistingFile);
  if (trap) app->add_option("--trap", in.trap, "YAML file with the trap")->check(CLI::ExistingFile);
  app->add_option("--n", in.n, "grid points");
  app->add_option("--length", in.length, "box length");
}

Config load(const Inputs& in) {
  Config c = in.config.empty() ? Config{} : load_config(in.config);
  if (!in.potential.empty()) c.potential = load_potential(in.potential);
  if (!in.trap.empty()) c.trap = load_trap(in.trap);
  if (!in.dimension.empty()) c.grid.dim = dim_from_name(in.dimension);
  if (in.n) c.grid.n = *in.n;
  if (in.length) c.grid.length = *in.length;
  return c;
}

void need_potential(const Config& c) {
  if (c.potential.spec.terms.empty()) throw ConfigError("no potential given (use --potential or --config)");
}
void need_trap(const Config& c) {
  if (c.trap.terms.empty()) throw ConfigError("no trap given (use --trap or --config)");
}

fs::path out_path(const Inputs& in, const std::string& name) {
  fs::create_directories(in.out_dir);
  return fs::path(in.out_dir) / name;
}

// Pair grid: the grid section as given, or the micro lattice of the grid section at h.
Grid pair_grid(const Config& c, std::optional<double> h) {
  const Grid g(c.grid.dim, c.grid.n, c.grid.length);
  if (!h) return g;
  if (c.grid.dim != Dim::One) throw ConfigError("--h needs a 1d grid");
  return micro_grid(g, *h);
}

PairOptions pair_options(const Config& c) { return {c.pair.eps_bind, c.pair.decay_tol}; }

GPOptions gp_options(const Config& c) { return {c.gp.step, c.gp.max_iter, c.gp.tol, c.gp.boundary_tol}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bogolubov-Hartree-Fock functional, its GP limit and the lattice scaling harness", "bhfcli"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1, 1);

  Inputs in;
  std::optional<double> h;
  std::string pair_state, certificate;
  std::optional<double> g, tol;
  std::optional<int> max_iter;
  bool dump = false, minimize = false;

  auto* pair = app.add_subcommand("pair", "solve the two-body bound state");
  add_inputs(pair, in, false);
  pair->add_option("--dimension", in.dimension, "1d | radial | 3d");
  pair->add_option("--h", h, "use the micro lattice of the grid at this h");
  pair->add_option("--out-dir", in.out_dir, "directory for pair.state.json");

  auto* coupling = app.add_subcommand("coupling", "coupling constants g_bcs, g_dir, g_ex, g");
  add_inputs(coupling, in, false);
  coupling->add_option("--dimension", in.dimension, "1d | radial | 3d");
  coupling->add_option("--h", h, "use the micro lattice of the grid at this h");
  coupling->add_option("--pair-state", pair_state, "reuse a bound state written by `pair`")->check(CLI::ExistingFile);

  auto* gp = app.add_subcommand("gp", "minimise the GP functional");
  add_inputs(gp, in, true);
  gp->add_option("--g", g, "coupling (default: from the pair state at trial.h)");
  gp->add_option("--tol", tol, "residual target");
  gp->add_option("--max-iter", max_iter, "iteration cap");
  gp->add_option("--out-dir", in.out_dir, "directory for gp.csv and gp.state.json");

  auto* trial = app.add_subcommand("trial", "build and check the trial state");
  add_inputs(trial, in, true);
  trial->add_option("--h", h, "semiclassical parameter (default trial.h)");

  auto* bhf = app.add_subcommand("bhf", "minimise the lattice BHF functional from the trial state");
  add_inputs(bhf, in, true);
  bhf->add_option("--h", h, "semiclassical parameter (default bhf.h)");
  bhf->add_option("--tol", tol, "stationarity target");
  bhf->add_option("--max-iter", max_iter, "iteration cap");
  bhf->add_flag("--dump-matrices", dump, "write gamma.bin and alpha.bin");
  bhf->add_option("--out-dir", in.out_dir, "directory for bhf.csv, bhf.state.json and matrices");

  auto* scaling = app.add_subcommand("scaling", "h sweep of the trial-state energy against the expansion");
  scaling->add_option("--config", in.config, "YAML configuration file")->check(CLI::ExistingFile)->required();
  scaling->add_flag("--minimize", minimize, "also minimise the BHF functional per row");
  scaling->add_option("--out-dir", in.out_dir, "directory for report.json and scaling.csv");

  auto* stab = app.add_subcommand("check-stability", "check the stability assumption for V with certificate U");
  add_inputs(stab, in, false);
  stab->add_option("--dimension", in.dimension, "1d | radial | 3d");
  stab->add_option("--certificate", certificate, "YAML file with U (default: the constructed certificate)")
      ->check(CLI::ExistingFile);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (pair->parsed()) {
      const Config c = load(in);
      need_potential(c);
      const Grid grid = pair_grid(c, h);
      const BoundState bs = solve_ground_state(sample_potential(c.potential, grid), grid, pair_options(c));
      const auto path = out_path(in, "pair.state.json");
      write_json(path.string(), bound_state_to_json(bs));
      out << json{{"E_b", bs.E_b},
                  {"spectral_gap", bs.spectral_gap},
                  {"residual", bs.residual},
                  {"state", path.filename().string()}}
                 .dump(2)
          << '\n';
    } else if (coupling->parsed()) {
      const Config c = load(in);
      need_potential(c);
      BoundState bs;
      if (!pair_state.empty())
        bs = bound_state_from_json(read_json(pair_state));
      else {
        const Grid grid = pair_grid(c, h);
        bs = solve_ground_state(sample_potential(c.potential, grid), grid, pair_options(c));
      }
      const Vec V = sample_potential(c.potential, bs.grid);
      const auto U = sample_certificate(c.potential, bs.grid);
      out << coupling_to_json(coupling_total(V, bs, U ? &*U : nullptr, c.stability)).dump(2) << '\n';
    } else if (gp->parsed()) {
      Config c = load(in);
      need_trap(c);
      if (tol) c.gp.tol = *tol;
      if (max_iter) c.gp.max_iter = *max_iter;
      if (g) c.gp.g = *g;
      if (!c.gp.g) {
        need_potential(c);
        const Grid micro = micro_grid(Grid::periodic(c.grid.n, c.grid.length), c.trial.h);
        const Vec V = sample_potential(c.potential, micro);
        c.gp.g = coupling_total(V, solve_ground_state(V, micro, pair_options(c))).g;
      }
      const Grid grid(c.grid.dim, c.grid.n, c.grid.length);
      const CondensateState s = gp_minimize(eval_trap(c.trap, grid), *c.gp.g, grid, gp_options(c));
      std::ofstream csv(out_path(in, "gp.csv"));
      write_gp_csv(csv, s);
      write_json(out_path(in, "gp.state.json").string(), condensate_to_json(s, *c.gp.g));
      out << json{{"g", *c.gp.g},
                  {"energy", s.energy},
                  {"mu", s.mu},
                  {"residual", s.residual},
                  {"converged", s.converged},
                  {"iterations", s.iterations}}
                 .dump(2)
          << '\n';
      if (!s.converged) return 2;
    } else if (trial->parsed()) {
      const Config c = load(in);
      need_potential(c);
      need_trap(c);
      const double hh = h.value_or(c.trial.h);
      const ScalePoint p = prepare_point(c, hh, c.grid.n, c.grid.length);
      const AdmissibilityReport adm = check_admissibility(p.trial, c.trial.tol_psd);
      const double dx = p.macro.spacing();
      const double predicted = predict_expansion(hh, p.gp.psi, p.W, p.macro, p.cc, p.bs.E_b);
      out << json{{"h", hh},
                  {"trace", p.trial.gamma.trace() * dx},
                  {"guara_min", adm.guara_min},
                  {"alpha_opnorm", adm.alpha_opnorm},
                  {"predicted_energy", predicted},
                  {"energy", bhf_energy({p.trial.gamma, p.trial.alpha}, p.model).total},
                  {"lambda", p.lambda},
                  {"admissible", adm.passed}}
                 .dump(2)
          << '\n';
    } else if (bhf->parsed()) {
      Config c = load(in);
      need_potential(c);
      need_trap(c);
      if (in.n) c.bhf.n = *in.n;
      if (in.length) c.bhf.length = *in.length;
      if (tol) c.bhf.tol = *tol;
      if (max_iter) c.bhf.max_iter = *max_iter;
      const double hh = h.value_or(c.bhf.h);
      const ScalePoint p = prepare_point(c, hh, c.bhf.n, c.bhf.length);
      const EnergyBreakdown Etrial = bhf_energy({p.trial.gamma, p.trial.alpha}, p.model);
      MinimizeOptions mo;
      mo.max_iter = c.bhf.max_iter;
      mo.tol = c.bhf.tol;
      const MinimizeResult r = minimize_bhf(p.model, {p.trial.gamma, p.trial.alpha}, p.model.particles, mo);
      std::ofstream csv(out_path(in, "bhf.csv"));
      write_bhf_csv(csv, r);
      const DecompositionResult dec = decompose_alpha(r.state.alpha, p.bs, hh, p.macro);
      const json summary = {{"h", hh},
                            {"grid", grid_to_json(p.macro)},
                            {"E_trial", Etrial.total},
                            {"energy", energy_to_json(r.energy)},
                            {"iterations", r.iterations},
                            {"converged", r.converged},
                            {"stationarity", r.stationarity},
                            {"constraint_residual", r.trace_error},
                            {"spectrum_min", r.spectrum_min},
                            {"spectrum_max", r.spectrum_max},
                            {"xi_norm", dec.xi_norm},
                            {"orthogonality_residual", dec.orthogonality_residual}};
      write_json(out_path(in, "bhf.state.json").string(), summary);
      if (dump) {
        write_matrix(out_path(in, "gamma.bin").string(), r.state.gamma, p.macro.spacing());
        write_matrix(out_path(in, "alpha.bin").string(), r.state.alpha, p.macro.spacing());
      }
      out << summary.dump(2) << '\n';
    } else if (scaling->parsed()) {
      Config c = load(in);
      need_potential(c);
      need_trap(c);
      if (minimize) c.scaling.minimize = true;
      const ScalingReport rep = scaling_study(c);
      const json j = scaling_to_json(rep);
      write_json(out_path(in, "report.json").string(), j);
      std::ofstream csv(out_path(in, "scaling.csv"));
      write_scaling_csv(csv, rep);
      out << json{{"rows", rep.rows.size()},
                  {"fitted_exponent", j["fitted_exponent"]},
                  {"fit_r2", j["fit_r2"]},
                  {"quartic_fit", j["quartic_fit"]}}
                 .dump(2)
          << '\n';
    } else if (stab->parsed()) {
      const Config c = load(in);
      need_potential(c);
      const Grid grid(c.grid.dim, c.grid.n, c.grid.length);
      const Vec V = sample_potential(c.potential, grid);
      std::optional<Vec> U;
      if (!certificate.empty()) {
        PotentialConfig pc;
        pc.spec = load_trap(certificate);  // a plain spec, no construction
        U = eval_potential(pc.spec, grid);
      } else {
        U = sample_certificate(c.potential, grid);
      }
      if (!U) throw ConfigError("no certificate: give --certificate or a constructed potential");
      const StabilityReport r = check_assumption2(V, *U, grid, c.stability);
      out << stability_to_json(r).dump(2) << '\n';
      return r.passed ? 0 : 3;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace bhf
