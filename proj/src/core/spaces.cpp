#include "holosem/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace holosem {

const char* space_class_name(SpaceClass c) {
  switch (c) {
    case SpaceClass::proper_Malpha: return "proper_Malpha";
    case SpaceClass::collapsed_to_Dps: return "collapsed_to_Dps";
    case SpaceClass::invalid: return "invalid";
  }
  return "invalid";
}

const char* norm_form_name(NormForm f) {
  switch (f) {
    case NormForm::invariant: return "invariant";
    case NormForm::box: return "box";
    case NormForm::kernel: return "kernel";
  }
  return "invariant";
}

double collapse_threshold(const SpaceParams& params) {
  return (params.s - (params.p - 2.0)) / params.p;
}

AdmissibleReport admissible_check(const SpaceParams& params) {
  AdmissibleReport rep;
  rep.threshold = collapse_threshold(params);
  const bool window = (params.p >= 2.0 && params.s > params.p - 2.0) ||
                      (params.p < 2.0 && params.s >= 0.0);
  rep.admissible = window && params.alpha < rep.threshold;
  if (rep.admissible) {
    rep.classification = SpaceClass::proper_Malpha;
  } else if (params.s >= params.p - 2.0 && params.alpha >= rep.threshold) {
    rep.classification = SpaceClass::collapsed_to_Dps;
  } else {
    rep.classification = SpaceClass::invalid;
  }
  return rep;
}

SpaceParams make_space_params(double p, double s, double alpha) {
  if (!(p > 1.0)) throw std::invalid_argument("space params: p must exceed 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("space params: alpha must be nonnegative");
  SpaceParams params{p, s, alpha, false};
  params.admissible = admissible_check(params).admissible;
  return params;
}

double default_kernel_beta(const SpaceParams& params) { return params.s - (params.p - 2.0); }

double exact_kernel_beta(const SpaceParams& params) {
  return params.s - (params.p - 2.0) + params.p * params.alpha;
}

namespace {

// Beyond this |a| the fixed product grid under-resolves the kernel peak, so
// per-point evaluation switches to the conformally substituted integral.
constexpr double deep_radius = 0.92;

double abs_pow(cplx v, double p) { return std::pow(std::abs(v), p); }

struct WeightedGrid {
  DiskGrid grid;
  std::vector<double> node_mass;  // |f'(z)|^p (1-|z|^2)^w area weight
};

WeightedGrid build_weighted_grid(const AnalyticFn& f, double p, double weight_exp, int level) {
  WeightedGrid out;
  const std::size_t n_theta = level > 0 ? 1024 : 512;
  const int gl = level > 0 ? 12 : 8;
  const int cells = level > 0 ? 34 : 30;
  out.grid = make_disk_grid(n_theta, gl, cells, 0.0);
  out.node_mass.resize(out.grid.z.size());
  for (std::size_t i = 0; i < out.grid.z.size(); ++i) {
    out.node_mass[i] = abs_pow(f.derivative(out.grid.z[i]), p) *
                       std::pow(out.grid.om_abs2[i], weight_exp) * out.grid.area_w[i];
  }
  return out;
}

QuadratureOptions inner_options(const NormOptions& opt) {
  QuadratureOptions q;
  q.tol = opt.refine_level > 0 ? opt.tol / 4.0 : opt.tol;
  q.theta_max = 4096;
  q.gl_nodes = opt.refine_level > 0 ? 12 : 10;
  return q;
}

// Conformally substituted integrands concentrate in a boundary zone of width
// 1-|a|^2 at angle arg(a). Splitting off a narrow sector there lets the arc
// panels resolve the peak that a uniform angular grid would alias.
QuadratureResult integrate_peak_aware(const Integrand& g, double s, cplx a,
                                      const QuadratureOptions& opt) {
  if (std::abs(a) <= deep_radius) return integrate_disk(g, s, opt);
  const double theta = std::arg(a);
  const double near_len = 0.1;
  const QuadratureResult near_part = integrate_sector(g, ArcInterval{theta, near_len}, 1.0, s, opt);
  const QuadratureResult far_part =
      integrate_sector(g, ArcInterval{theta + pi, 1.0 - near_len}, 1.0, s, opt);
  QuadratureResult sum;
  sum.value = near_part.value + far_part.value;
  sum.error_bound = near_part.error_bound + far_part.error_bound;
  sum.cells_used = near_part.cells_used + far_part.cells_used;
  sum.max_radius_reached = std::max(near_part.max_radius_reached, far_part.max_radius_reached);
  sum.converged = near_part.converged && far_part.converged;
  return sum;
}

void scale_result(QuadratureResult& r, double c) {
  r.value *= c;
  r.error_bound *= c;
}

struct MadsEngine {
  const AnalyticFn* f = nullptr;
  SpaceParams params;
  NormForm form = NormForm::invariant;
  double beta = 0.0;
  QuadratureOptions inner;
  const WeightedGrid* fast = nullptr;
  mutable std::vector<double> buf;

  double eval(cplx a, QuadratureResult* meta) const {
    const double p = params.p, s = params.s, alpha = params.alpha;
    const double om_a = 1.0 - std::norm(a);  // 1-|a|^2
    switch (form) {
      case NormForm::invariant: {
        auto g = [&](cplx u) {
          const MobiusJet m = mobius_jet(a, u);
          return abs_pow(f->derivative(m.value) * m.derivative, p);
        };
        QuadratureResult res = integrate_peak_aware(g, s, a, inner);
        scale_result(res, std::pow(om_a, p * alpha));
        if (meta) *meta = res;
        return res.value;
      }
      case NormForm::box: {
        auto g = [&](cplx z) { return abs_pow(f->derivative(z), p); };
        const CarlesonBox bx = carleson_box_of_point(a);
        QuadratureResult res = integrate_box(g, bx, s, inner);
        const double e_box = s - (p * (alpha + 1.0) - 2.0);
        scale_result(res, std::pow(om_a, -e_box));
        if (meta) *meta = res;
        return res.value;
      }
      case NormForm::kernel: {
        if (fast != nullptr && std::abs(a) <= deep_radius && meta == nullptr) {
          const double d_exp = s + 2.0 - p - p * alpha + beta;
          const cplx ac = std::conj(a);
          const auto& z = fast->grid.z;
          buf.resize(z.size());
          for (std::size_t i = 0; i < z.size(); ++i) {
            const double q2 = std::norm(1.0 - ac * z[i]);
            buf[i] = fast->node_mass[i] * std::pow(q2, -0.5 * d_exp);
          }
          return std::pow(om_a, beta) * pairwise_sum(buf);
        }
        // Conformal substitution: the kernel integral equals
        // (1-|a|^2)^{p alpha} * integral of |(f by phi_a)'|^p |1-conj(a)u|^{beta-beta*}
        // against the (1-|u|^2)^s weight, with beta* the exact-match exponent.
        const double mild = 0.5 * (beta - exact_kernel_beta(params));
        const cplx ac = std::conj(a);
        auto g = [&](cplx u) {
          const MobiusJet m = mobius_jet(a, u);
          double v = abs_pow(f->derivative(m.value) * m.derivative, p);
          if (mild != 0.0) v *= std::pow(std::norm(1.0 - ac * u), mild);
          return v;
        };
        QuadratureResult res = integrate_peak_aware(g, s, a, inner);
        scale_result(res, std::pow(om_a, p * alpha));
        if (meta) *meta = res;
        return res.value;
      }
    }
    return 0.0;
  }

  double operator()(cplx a) const { return eval(a, nullptr); }
};

std::vector<double> grid_radii(const SupGridSpec& spec) {
  return spec.radii.empty() ? default_radius_ladder() : spec.radii;
}

NormEstimate finish_estimate(const MadsEngine& engine, const NormOptions& opt, NormForm form,
                             double root_p) {
  NormEstimate est;
  est.form = form;
  const auto radii = grid_radii(opt.grid);
  est.profile = sup_profile([&](cplx a) { return engine(a); }, radii, opt.grid.angles,
                            opt.grid.refine);
  engine.eval(est.profile.attained_at, &est.quadrature_meta);
  est.value = std::pow(est.profile.global_sup, 1.0 / root_p);
  return est;
}

}  // namespace

NormEstimate dps_norm(const AnalyticFn& f, double p, double s, double tol) {
  if (!(p > 0.0)) throw std::invalid_argument("dps_norm: p must be positive");
  QuadratureOptions inner;
  inner.tol = tol;
  auto g = [&](cplx z) { return abs_pow(f.derivative(z), p); };
  NormEstimate est;
  est.form = NormForm::invariant;
  est.quadrature_meta = integrate_disk(g, s, inner);
  est.profile.radii = {0.0};
  est.profile.values = {est.quadrature_meta.value};
  est.profile.global_sup = est.quadrature_meta.value;
  est.profile.attained_at = cplx(0.0, 0.0);
  est.value = std::abs(f.value(cplx(0.0, 0.0))) +
              std::pow(est.quadrature_meta.value, 1.0 / p);
  return est;
}

NormEstimate mads_seminorm(const AnalyticFn& f, const SpaceParams& params, NormForm form,
                           double beta, const NormOptions& opt) {
  const AdmissibleReport rep = admissible_check(params);
  if (rep.classification == SpaceClass::invalid)
    throw std::invalid_argument("mads_seminorm: parameter triple is outside the classified range");
  MadsEngine engine;
  engine.f = &f;
  engine.params = params;
  engine.form = form;
  engine.beta = beta;
  engine.inner = inner_options(opt);
  WeightedGrid fast;
  if (form == NormForm::kernel) {
    fast = build_weighted_grid(f, params.p, params.s, opt.refine_level);
    engine.fast = &fast;
  }
  return finish_estimate(engine, opt, form, params.p);
}

NormEstimate mads_seminorm(const AnalyticFn& f, const SpaceParams& params, NormForm form,
                           const NormOptions& opt) {
  return mads_seminorm(f, params, form, default_kernel_beta(params), opt);
}

NormEstimate f_family_norm(const AnalyticFn& f, double p, double q, double s, bool log_weighted,
                           const NormOptions& opt) {
  if (!(q > -2.0) || !(s > 0.0) || !(q + s > -1.0))
    throw std::invalid_argument("f_family_norm: requires q > -2, s > 0, q + s > -1");
  const WeightedGrid fast = build_weighted_grid(f, p, q + s, opt.refine_level);
  const QuadratureOptions inner = inner_options(opt);
  std::vector<double> buf;
  auto objective = [&](cplx a) {
    const double om_a = 1.0 - std::norm(a);
    const double log_factor = log_weighted ? std::pow(std::log(1.0 / om_a), p) : 1.0;
    if (log_factor == 0.0) return 0.0;
    const cplx ac = std::conj(a);
    if (std::abs(a) <= deep_radius) {
      const auto& z = fast.grid.z;
      buf.resize(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) {
        const double q2 = std::norm(1.0 - ac * z[i]);
        buf[i] = fast.node_mass[i] * std::pow(q2, -s);
      }
      return log_factor * std::pow(om_a, s) * pairwise_sum(buf);
    }
    auto g = [&](cplx u) {
      const MobiusJet m = mobius_jet(a, u);
      double v = abs_pow(f.derivative(m.value) * m.derivative, p);
      const double mild = p - q - 2.0;
      if (mild != 0.0) v *= std::pow(std::norm(1.0 - ac * u), 0.5 * mild);
      return v;
    };
    const QuadratureResult res = integrate_peak_aware(g, q + s, a, inner);
    return log_factor * std::pow(om_a, q + 2.0 - p) * res.value;
  };
  NormEstimate est;
  est.form = NormForm::kernel;
  const auto radii = grid_radii(opt.grid);
  est.profile = sup_profile(objective, radii, opt.grid.angles, opt.grid.refine);
  est.value = est.profile.global_sup;
  // adaptive re-check of the reported supremum point
  {
    const cplx a = est.profile.attained_at;
    const double om_a = 1.0 - std::norm(a);
    const double log_factor = log_weighted ? std::pow(std::log(1.0 / om_a), p) : 1.0;
    const cplx ac = std::conj(a);
    auto g = [&](cplx u) {
      const MobiusJet m = mobius_jet(a, u);
      double v = abs_pow(f.derivative(m.value) * m.derivative, p);
      const double mild = p - q - 2.0;
      if (mild != 0.0) v *= std::pow(std::norm(1.0 - ac * u), 0.5 * mild);
      return v;
    };
    est.quadrature_meta = integrate_peak_aware(g, q + s, a, inner);
    scale_result(est.quadrature_meta, log_factor * std::pow(om_a, q + 2.0 - p));
  }
  return est;
}

NormEstimate weighted_bloch_norm(const AnalyticFn& f, const BlochWeight& w, double) {
  auto objective = [&](cplx z) {
    const double om = 1.0 - std::norm(z);
    double v = std::pow(om, w.alpha) * std::abs(f.derivative(z));
    if (w.log_factor) v *= 1.0 + std::log(1.0 / om);
    return v;
  };
  NormEstimate est;
  est.form = NormForm::invariant;
  est.profile = sup_profile(objective, default_radius_ladder(), 64, true);
  est.value = est.profile.global_sup;
  est.quadrature_meta.value = est.profile.global_sup;
  est.quadrature_meta.error_bound = 0.0;
  est.quadrature_meta.cells_used = est.profile.radii.size() * 64;
  est.quadrature_meta.max_radius_reached = est.profile.radii.back();
  est.quadrature_meta.converged = true;
  return est;
}

SupProfile littleo_profile(const AnalyticFn& f, const LittleOSelector& sel,
                           const std::vector<double>& radii, double tol, std::size_t angles) {
  NormOptions opt;
  opt.tol = tol;
  MadsEngine engine;
  engine.f = &f;
  engine.params = sel.params;
  engine.form = sel.form;
  engine.beta = sel.beta > 0.0 ? sel.beta : default_kernel_beta(sel.params);
  engine.inner = inner_options(opt);
  WeightedGrid fast;
  if (sel.form == NormForm::kernel) {
    fast = build_weighted_grid(f, sel.params.p, sel.params.s, 0);
    engine.fast = &fast;
  }
  SupProfile prof = sup_profile([&](cplx a) { return engine(a); }, radii, angles, false);
  const double inv_p = 1.0 / sel.params.p;
  for (double& v : prof.values) v = std::pow(v, inv_p);
  prof.global_sup = std::pow(prof.global_sup, inv_p);
  return prof;
}

double decay_slope(const SupProfile& prof, double min_radius) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < prof.radii.size(); ++i) {
    const double r = prof.radii[i];
    const double v = prof.values[i];
    if (r < min_radius || !(v > 0.0)) continue;
    const double x = std::log(1.0 / (1.0 - r));
    const double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return 0.0;
  const double denom = double(n) * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (double(n) * sxy - sx * sy) / denom;
}

WeightFn log_weight(double K) {
  if (!(K > 1.0)) throw std::invalid_argument("log_weight: K must exceed 1");
  WeightFn w;
  w.value = [K](cplx z) { return std::log(K / (1.0 - std::norm(z))); };
  w.gradient = [](cplx z) { return 2.0 * z / (1.0 - std::norm(z)); };
  return w;
}

double weight_regularity_constant(const WeightFn& omega, const std::vector<double>& radii,
                                  std::size_t angles) {
  double best = 0.0;
  for (const double r : radii) {
    const std::size_t m = (r == 0.0) ? 1 : angles;
    for (std::size_t j = 0; j < m; ++j) {
      const cplx z = std::polar(r, 2.0 * pi * double(j) / double(m));
      const double w = omega.value(z);
      if (!(w > 0.0))
        throw std::domain_error("weight_regularity_constant: nonpositive weight sample");
      const double v = (1.0 - std::norm(z)) * std::abs(omega.gradient(z)) / w;
      best = std::max(best, v);
    }
  }
  return best;
}

}  // namespace holosem
