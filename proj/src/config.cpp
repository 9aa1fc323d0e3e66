#include "bhf/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace bhf {

namespace {

void only_keys(const YAML::Node& node, const std::string& where, const std::set<std::string>& allowed) {
  if (!node.IsMap()) throw ConfigError(where + ": expected a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <class T>
void read(const YAML::Node& node, const char* key, T& out) {
  if (node[key]) {
    try {
      out = node[key].as<T>();
    } catch (const YAML::Exception& e) {
      throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
  }
}

double need(const YAML::Node& node, const char* key, const std::string& kind) {
  if (!node[key]) throw ConfigError(kind + " term needs '" + key + "'");
  return node[key].as<double>();
}

Term parse_term(const YAML::Node& t) {
  if (!t["kind"]) throw ConfigError("potential term without 'kind'");
  const auto kind = t["kind"].as<std::string>();
  if (kind == "square_well") {
    only_keys(t, kind, {"kind", "depth", "radius"});
    return SquareWell{need(t, "depth", kind), need(t, "radius", kind)};
  }
  if (kind == "gaussian") {
    only_keys(t, kind, {"kind", "amplitude", "width"});
    return Gaussian{need(t, "amplitude", kind), need(t, "width", kind)};
  }
  if (kind == "diff_gaussians") {
    only_keys(t, kind, {"kind", "a1", "w1", "a2", "w2"});
    return DiffGaussians{need(t, "a1", kind), need(t, "w1", kind), need(t, "a2", kind), need(t, "w2", kind)};
  }
  if (kind == "tabulated") {
    only_keys(t, kind, {"kind", "r", "v"});
    Tabulated tab{t["r"].as<std::vector<double>>(), t["v"].as<std::vector<double>>()};
    if (tab.r.size() != tab.v.size() || tab.r.empty()) throw ConfigError("tabulated term: r and v differ in length");
    return tab;
  }
  if (kind == "polynomial") {
    only_keys(t, kind, {"kind", "coeffs", "cutoff"});
    PolynomialWell p;
    p.coeffs = t["coeffs"].as<std::vector<double>>();
    read(t, "cutoff", p.cutoff);
    return p;
  }
  throw ConfigError("unknown potential kind '" + kind + "'");
}

Construction parse_construction(const YAML::Node& n) {
  const auto v = n.as<std::string>();
  if (v == "false" || v == "none") return Construction::None;
  if (v == "true" || v == "convolution") return Construction::Convolution;
  if (v == "certificate") return Construction::Certificate;
  throw ConfigError("potential.construct must be none, convolution or certificate");
}

PotentialSpec parse_spec(const YAML::Node& node, const std::string& where, bool allow_construct,
                         Construction* construct) {
  std::set<std::string> keys{"terms", "lambda", "dimension"};
  if (allow_construct) keys.insert("construct");
  only_keys(node, where, keys);
  PotentialSpec s;
  if (!node["terms"] || !node["terms"].IsSequence()) throw ConfigError(where + ".terms must be a list");
  for (const auto& t : node["terms"]) s.terms.push_back(parse_term(t));
  read(node, "lambda", s.lambda);
  if (node["dimension"]) s.dimension = dim_from_name(node["dimension"].as<std::string>());
  if (construct && node["construct"]) *construct = parse_construction(node["construct"]);
  return s;
}

YAML::Node parse_yaml(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config is not valid YAML: ") + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Config parse_config(const std::string& text) {
  const YAML::Node root = parse_yaml(text);
  Config c;
  if (!root || root.IsNull()) return c;
  only_keys(root, "config", {"potential", "trap", "grid", "pair", "trial", "gp", "bhf", "scaling", "stability"});
  if (root["potential"]) c.potential.spec = parse_spec(root["potential"], "potential", true, &c.potential.construct);
  if (root["trap"]) c.trap = parse_spec(root["trap"], "trap", false, nullptr);
  if (const auto g = root["grid"]) {
    only_keys(g, "grid", {"dimension", "n", "length"});
    if (g["dimension"]) c.grid.dim = dim_from_name(g["dimension"].as<std::string>());
    read(g, "n", c.grid.n);
    read(g, "length", c.grid.length);
  }
  if (const auto p = root["pair"]) {
    only_keys(p, "pair", {"eps_bind", "decay_tol"});
    read(p, "eps_bind", c.pair.eps_bind);
    read(p, "decay_tol", c.pair.decay_tol);
  }
  if (const auto t = root["trial"]) {
    only_keys(t, "trial", {"h", "slack_exponent", "tol_psd", "min_points"});
    read(t, "h", c.trial.h);
    read(t, "slack_exponent", c.trial.slack_exponent);
    read(t, "tol_psd", c.trial.tol_psd);
    read(t, "min_points", c.trial.min_points);
  }
  if (const auto g = root["gp"]) {
    only_keys(g, "gp", {"g", "step", "max_iter", "tol", "boundary_tol"});
    if (g["g"]) c.gp.g = g["g"].as<double>();
    read(g, "step", c.gp.step);
    read(g, "max_iter", c.gp.max_iter);
    read(g, "tol", c.gp.tol);
    read(g, "boundary_tol", c.gp.boundary_tol);
  }
  if (const auto b = root["bhf"]) {
    only_keys(b, "bhf", {"h", "n", "length", "tol", "max_iter", "tol_psd"});
    read(b, "h", c.bhf.h);
    read(b, "n", c.bhf.n);
    read(b, "length", c.bhf.length);
    read(b, "tol", c.bhf.tol);
    read(b, "max_iter", c.bhf.max_iter);
    read(b, "tol_psd", c.bhf.tol_psd);
  }
  if (const auto s = root["scaling"]) {
    only_keys(s, "scaling", {"h", "minimize"});
    read(s, "h", c.scaling.h);
    read(s, "minimize", c.scaling.minimize);
  }
  if (const auto s = root["stability"]) {
    only_keys(s, "stability", {"tol_pointwise", "tol_fourier"});
    read(s, "tol_pointwise", c.stability.pointwise);
    read(s, "tol_fourier", c.stability.fourier);
  }
  return c;
}

Config load_config(const std::string& path) { return parse_config(slurp(path)); }

PotentialConfig load_potential(const std::string& path) {
  const YAML::Node root = parse_yaml(slurp(path));
  PotentialConfig pc;
  const YAML::Node node = root["potential"] ? root["potential"] : root;
  pc.spec = parse_spec(node, "potential", true, &pc.construct);
  return pc;
}

PotentialSpec load_trap(const std::string& path) {
  const YAML::Node root = parse_yaml(slurp(path));
  return parse_spec(root["trap"] ? root["trap"] : root, "trap", false, nullptr);
}

namespace {

// lambda multiplies V (and U), not u
StablePair constructed(const PotentialConfig& pc, const Grid& grid) {
  if (pc.construct == Construction::Certificate) return stable_from_certificate(eval_potential(pc.spec, grid));
  PotentialSpec u = pc.spec;
  u.lambda = 1;
  StablePair sp = construct_stable_potential(u, grid);
  sp.V *= pc.spec.lambda;
  sp.U *= pc.spec.lambda;
  return sp;
}

}  // namespace

Vec sample_potential(const PotentialConfig& pc, const Grid& grid) {
  if (pc.construct == Construction::None) return eval_potential(pc.spec, grid);
  return constructed(pc, grid).V;
}

std::optional<Vec> sample_certificate(const PotentialConfig& pc, const Grid& grid) {
  if (pc.construct == Construction::None) return std::nullopt;
  return constructed(pc, grid).U;
}

}  // namespace bhf
