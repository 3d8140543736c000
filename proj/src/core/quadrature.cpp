#include "holosem/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace holosem {

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  static std::map<int, GaussRule> cache;
  const auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (double(i) + 0.75) / (double(n) + 0.5));
    double p0 = 1.0, p1 = x, dp = 1.0;
    for (int iter = 0; iter < 64; ++iter) {
      p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
        p0 = p1;
        p1 = p2;
      }
      dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    p0 = 1.0;
    p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
      p0 = p1;
      p1 = p2;
    }
    dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
    rule.node[i] = x;
    rule.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

// Angular sample set with weights in radians; the stride-2 (or half-panel)
// subset provides the embedded coarse rule for the refinement delta.
struct AngularRule {
  std::vector<double> theta;
  std::vector<double> weight;
  double width = 0.0;    // total measure in radians
  std::size_t stride = 2;  // full rule vs subset rule spacing (trapezoid only)
  bool nested = true;      // whether the subset rule is usable
};

AngularRule trapezoid_rule(std::size_t n) {
  AngularRule rule;
  rule.theta.resize(n);
  rule.weight.assign(n, 2.0 * pi / double(n));
  for (std::size_t j = 0; j < n; ++j) rule.theta[j] = 2.0 * pi * double(j) / double(n);
  rule.width = 2.0 * pi;
  rule.nested = (n % 2 == 0);
  return rule;
}

AngularRule arc_gl_rule(const ArcInterval& arc, std::size_t panels, int nodes) {
  AngularRule rule;
  const double width = 2.0 * pi * arc.length;
  const double lo = arc.center - 0.5 * width;
  const auto& gl = gauss_legendre(nodes);
  rule.theta.reserve(panels * nodes);
  rule.weight.reserve(panels * nodes);
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = lo + width * double(p) / double(panels);
    const double h = width / double(panels);
    for (int i = 0; i < nodes; ++i) {
      rule.theta.push_back(a + 0.5 * h * (gl.node[i] + 1.0));
      rule.weight.push_back(0.5 * h * gl.weight[i]);
    }
  }
  rule.width = width;
  rule.nested = false;
  return rule;
}

struct RadialPass {
  double full = 0.0;
  double half = 0.0;
  double tail = 0.0;       // analytic boundary sliver estimate, added to full/half
  double tail_bound = 0.0;
  double t_reached = 0.0;  // lower edge of the last processed cell
  std::size_t evals = 0;
};

// Integrates g(z) t^s over { t in (0, t_hi], theta in rule } after the
// substitution t = 1 - r^2 (so dA = dt dtheta / 2), cells [t/2, t] refined
// geometrically until the projected remainder is negligible at the target.
RadialPass radial_sweep(const Integrand& g, double s, double t_hi, const AngularRule& rule,
                        const QuadratureOptions& opt, double target_abs) {
  RadialPass pass;
  const auto& gl = gauss_legendre(opt.gl_nodes);
  const std::size_t nt = rule.theta.size();
  std::vector<cplx> unit(nt);
  for (std::size_t j = 0; j < nt; ++j)
    unit[j] = cplx(std::cos(rule.theta[j]), std::sin(rule.theta[j]));

  std::vector<double> ring(nt), contrib_full, contrib_half;
  const double t_floor = t_hi * opt.t_floor_rel;
  const int min_cells = 10;
  double t_top = t_hi;
  double last_avg = 0.0, last_max = 0.0;
  int cells = 0;
  while (cells < opt.max_radial_cells) {
    const double t_bot = 0.5 * t_top;
    for (int i = 0; i < opt.gl_nodes; ++i) {
      const double t = t_bot + 0.5 * (t_top - t_bot) * (gl.node[i] + 1.0);
      const double wt = 0.5 * (t_top - t_bot) * gl.weight[i];
      const double r = std::sqrt(1.0 - t);
      double ring_max = 0.0;
      for (std::size_t j = 0; j < nt; ++j) {
        const double v = g(r * unit[j]);
        ring[j] = v * rule.weight[j];
        ring_max = std::max(ring_max, std::abs(v));
      }
      pass.evals += nt;
      const double ring_sum = pairwise_sum(ring);
      const double scale = 0.5 * wt * std::pow(t, s);
      contrib_full.push_back(scale * ring_sum);
      if (rule.nested) {
        double half_sum = 0.0;
        for (std::size_t j = 0; j < nt; j += rule.stride) half_sum += ring[j];
        contrib_half.push_back(scale * half_sum * double(rule.stride));
      }
      last_avg = ring_sum / rule.width;
      last_max = ring_max;
    }
    ++cells;
    pass.t_reached = t_bot;
    // Projected remainder of the untouched sliver (0, t_bot].
    const double remainder = last_max * rule.width * std::pow(t_bot, s + 1.0) / (2.0 * (s + 1.0));
    if (cells >= min_cells && (remainder <= target_abs || t_bot <= t_floor)) break;
    t_top = t_bot;
  }
  pass.full = pairwise_sum(contrib_full);
  pass.half = rule.nested ? pairwise_sum(contrib_half) : pass.full;
  pass.tail = last_avg * rule.width * std::pow(pass.t_reached, s + 1.0) / (2.0 * (s + 1.0));
  pass.tail_bound =
      last_max * rule.width * std::pow(pass.t_reached, s + 1.0) / (2.0 * (s + 1.0));
  pass.full += pass.tail;
  pass.half += pass.tail;
  return pass;
}

QuadratureResult run_full_circle(const Integrand& g, double s, double t_hi,
                                 const QuadratureOptions& opt) {
  QuadratureResult res;
  std::size_t n = opt.theta_fixed ? opt.theta_fixed : opt.theta_min;
  while (true) {
    const AngularRule rule = trapezoid_rule(n);
    const double coarse_target = 0.02 * opt.tol;
    const RadialPass pass =
        radial_sweep(g, s, t_hi, rule, opt, coarse_target * std::max(std::abs(res.value), 1e-12));
    res.value = pass.full;
    res.cells_used = pass.evals;
    res.max_radius_reached = std::sqrt(1.0 - pass.t_reached);
    const double delta = std::abs(pass.full - pass.half);
    res.error_bound = delta + pass.tail_bound;
    if (opt.theta_fixed) {
      res.converged = true;
      return res;
    }
    if (delta <= opt.tol * std::max(std::abs(pass.full), 1e-300)) {
      res.converged = true;
      return res;
    }
    if (n >= opt.theta_max) {
      res.converged = false;
      return res;
    }
    n *= 2;
  }
}

QuadratureResult run_arc(const Integrand& g, const ArcInterval& arc, double s, double t_hi,
                         const QuadratureOptions& opt) {
  QuadratureResult res;
  double previous = 0.0;
  bool have_previous = false;
  std::size_t panels = opt.theta_fixed ? std::max<std::size_t>(1, opt.theta_fixed / 8) : 2;
  const std::size_t panels_max = std::max<std::size_t>(panels, opt.theta_max / 8);
  while (true) {
    const AngularRule rule = arc_gl_rule(arc, panels, 8);
    const RadialPass pass =
        radial_sweep(g, s, t_hi, rule, opt, 0.02 * opt.tol * std::max(std::abs(res.value), 1e-12));
    res.value = pass.full;
    res.cells_used = pass.evals;
    res.max_radius_reached = std::sqrt(1.0 - pass.t_reached);
    if (opt.theta_fixed) {
      res.error_bound = pass.tail_bound;
      res.converged = true;
      return res;
    }
    if (have_previous) {
      const double delta = std::abs(pass.full - previous);
      res.error_bound = delta + pass.tail_bound;
      if (delta <= opt.tol * std::max(std::abs(pass.full), 1e-300)) {
        res.converged = true;
        return res;
      }
      if (panels >= panels_max) {
        res.converged = false;
        return res;
      }
    }
    previous = pass.full;
    have_previous = true;
    panels *= 2;
  }
}

}  // namespace

QuadratureResult integrate_disk(const Integrand& g, double s_weight,
                                const QuadratureOptions& opt) {
  if (s_weight <= -1.0) throw std::invalid_argument("integrate_disk: weight must have s > -1");
  return run_full_circle(g, s_weight, 1.0, opt);
}

QuadratureResult integrate_disk(const Integrand& g, double s_weight, double tol) {
  QuadratureOptions opt;
  opt.tol = tol;
  return integrate_disk(g, s_weight, opt);
}

QuadratureResult integrate_sector(const Integrand& g, const ArcInterval& arc, double depth,
                                  double s_weight, const QuadratureOptions& opt) {
  if (s_weight <= -1.0) throw std::invalid_argument("integrate_sector: weight must have s > -1");
  if (depth <= 0.0) throw std::invalid_argument("integrate_sector: depth must be positive");
  depth = std::min(depth, 1.0);
  const double t_hi = depth * (2.0 - depth);  // t = 1-r^2 at r = 1-depth
  if (arc.length >= 1.0) return run_full_circle(g, s_weight, t_hi, opt);
  return run_arc(g, arc, s_weight, t_hi, opt);
}

QuadratureResult integrate_box(const Integrand& g, const CarlesonBox& box, double s_weight,
                               const QuadratureOptions& opt) {
  return integrate_sector(g, box.arc, box.depth, s_weight, opt);
}

QuadratureResult integrate_box(const Integrand& g, const CarlesonBox& box, double s_weight,
                               double tol) {
  QuadratureOptions opt;
  opt.tol = tol;
  return integrate_box(g, box, s_weight, opt);
}

LineIntegral integrate_unit_interval(const std::function<cplx(double)>& f, double tol) {
  const GaussRule& rule = gauss_legendre(16);
  LineIntegral out;
  cplx prev{0.0, 0.0};
  for (int panels = 1; panels <= 256; panels *= 2) {
    cplx acc{0.0, 0.0};
    const double w = 1.0 / panels;
    for (int j = 0; j < panels; ++j) {
      const double mid = (j + 0.5) * w;
      for (std::size_t k = 0; k < rule.node.size(); ++k) {
        acc += rule.weight[k] * f(mid + 0.5 * w * rule.node[k]);
      }
    }
    acc *= 0.5 * w;
    if (panels > 1) {
      out.err_est = std::abs(acc - prev);
      if (out.err_est <= tol * std::max(1.0, std::abs(acc))) {
        out.value = acc;
        return out;
      }
    }
    prev = acc;
  }
  out.value = prev;
  out.converged = false;
  return out;
}

std::vector<double> default_radius_ladder() {
  return {0.0, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99, 0.995, 0.999};
}

SupProfile sup_profile(const std::function<double(cplx)>& objective,
                       const std::vector<double>& radii, std::size_t angles_per_radius,
                       bool refine) {
  SupProfile prof;
  prof.radii = radii;
  prof.values.assign(radii.size(), 0.0);
  prof.global_sup = -std::numeric_limits<double>::infinity();
  std::size_t best_i = 0, best_j = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    const std::size_t m = (r == 0.0) ? 1 : angles_per_radius;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      const cplx z = std::polar(r, 2.0 * pi * double(j) / double(m));
      const double v = objective(z);
      if (v > best) {
        best = v;
        if (v > prof.global_sup) {
          prof.global_sup = v;
          prof.attained_at = z;
          best_i = i;
          best_j = j;
        }
      }
    }
    prof.values[i] = best;
  }
  if (refine && radii[best_i] > 0.0) {
    // One local pass: bracket the argmax between its ladder neighbours and
    // subsample the angle at 1/8 of the base spacing.
    std::vector<double> cand_r = {radii[best_i]};
    if (best_i > 0 && radii[best_i - 1] > 0.0)
      cand_r.push_back(0.5 * (radii[best_i] + radii[best_i - 1]));
    if (best_i + 1 < radii.size()) cand_r.push_back(0.5 * (radii[best_i] + radii[best_i + 1]));
    const double spacing = 2.0 * pi / double(angles_per_radius);
    const double theta0 = 2.0 * pi * double(best_j) / double(angles_per_radius);
    for (const double r : cand_r) {
      for (int k = -7; k <= 7; ++k) {
        if (r == radii[best_i] && k == 0) continue;
        const cplx z = std::polar(r, theta0 + spacing * double(k) / 8.0);
        const double v = objective(z);
        if (v > prof.global_sup) {
          prof.global_sup = v;
          prof.attained_at = z;
        }
      }
    }
  }
  return prof;
}

DiskGrid make_disk_grid(std::size_t n_theta, int gl_nodes, int cells, double t_floor) {
  DiskGrid grid;
  grid.n_theta = n_theta;
  const auto& gl = gauss_legendre(gl_nodes);
  std::vector<cplx> unit(n_theta);
  for (std::size_t j = 0; j < n_theta; ++j) {
    const double th = 2.0 * pi * double(j) / double(n_theta);
    unit[j] = cplx(std::cos(th), std::sin(th));
  }
  double t_top = 1.0;
  for (int k = 0; k < cells && t_top > t_floor; ++k) {
    const double t_bot = 0.5 * t_top;
    for (int i = 0; i < gl_nodes; ++i) {
      const double t = t_bot + 0.5 * (t_top - t_bot) * (gl.node[i] + 1.0);
      const double wt = 0.5 * (t_top - t_bot) * gl.weight[i];
      const double r = std::sqrt(1.0 - t);
      const double w_node = 0.5 * wt * 2.0 * pi / double(n_theta);
      for (std::size_t j = 0; j < n_theta; ++j) {
        grid.z.push_back(r * unit[j]);
        grid.area_w.push_back(w_node);
        grid.om_abs2.push_back(t);
      }
      ++grid.n_rings;
    }
    t_top = t_bot;
  }
  return grid;
}

}  // namespace holosem
