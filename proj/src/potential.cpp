#include "bhf/potential.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace bhf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double gauss(double r, double w) { return std::exp(-r * r / (2 * w * w)); }

double eval_term(const Term& t, double r) {
  return std::visit(
      overloaded{
          [&](const SquareWell& s) {
            if (r < s.radius) return -s.depth;
            if (r == s.radius) return -0.5 * s.depth;
            return 0.0;
          },
          [&](const Gaussian& g) { return g.amplitude * gauss(r, g.width); },
          [&](const DiffGaussians& d) { return d.a1 * gauss(r, d.w1) - d.a2 * gauss(r, d.w2); },
          [&](const Tabulated& tab) {
            const auto& x = tab.r;
            if (x.empty() || r > x.back()) return 0.0;
            if (r <= x.front()) return tab.v.front();
            auto it = std::upper_bound(x.begin(), x.end(), r);
            const size_t i = it - x.begin();
            const double t = (r - x[i - 1]) / (x[i] - x[i - 1]);
            return (1 - t) * tab.v[i - 1] + t * tab.v[i];
          },
          [&](const PolynomialWell& p) {
            const double rr = p.cutoff > 0 ? std::min(r, p.cutoff) : r;
            double s = 0;
            for (size_t k = p.coeffs.size(); k-- > 0;) s = s * rr + p.coeffs[k];
            return s;
          },
      },
      t);
}

}  // namespace

double PotentialSpec::operator()(double r) const {
  r = std::abs(r);
  double s = 0;
  for (const auto& t : terms) s += eval_term(t, r);
  return lambda * s;
}

bool PotentialSpec::bounded() const {
  for (const auto& t : terms)
    if (auto p = std::get_if<PolynomialWell>(&t); p && p->cutoff <= 0 && p->coeffs.size() > 1) return false;
  return true;
}

PotentialSpec PotentialSpec::scaled(double s) const {
  PotentialSpec c = *this;
  c.lambda *= s;
  return c;
}

Vec eval_potential(const PotentialSpec& spec, const Grid& grid) {
  if (spec.dimension && *spec.dimension != grid.dim)
    throw ConfigError(std::string("potential defined for dimension ") + dim_name(*spec.dimension) +
                      " evaluated on a " + dim_name(grid.dim) + " grid");
  for (const auto& t : spec.terms)
    if (auto tab = std::get_if<Tabulated>(&t)) {
      if (tab->r.size() != tab->v.size() || tab->r.empty())
        throw ConfigError("tabulated term needs matching non-empty r and v");
      if (!std::is_sorted(tab->r.begin(), tab->r.end())) throw ConfigError("tabulated abscissae must be sorted");
    }

  if (grid.dim == Dim::Three) {
    const int n = grid.n;
    Vec out(static_cast<Eigen::Index>(n) * n * n);
    const Vec x = grid.nodes();
    Eigen::Index idx = 0;
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out[idx++] = spec(std::sqrt(x[i] * x[i] + x[j] * x[j] + x[k] * x[k]));
    return out;
  }
  Vec out(grid.n);
  for (int k = 0; k < grid.n; ++k) out[k] = spec(grid.node(k));
  return out;
}

Vec eval_trap(const TrapSpec& spec, const Grid& grid) {
  if (!spec.bounded()) std::clog << "warning: unbounded trap (polynomial well without cutoff)\n";
  return eval_potential(spec, grid);
}

}  // namespace bhf
