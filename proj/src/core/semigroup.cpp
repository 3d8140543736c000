#include "holosem/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace holosem {

namespace {

// Polar sample net avoiding the origin; used by consistency and validation
// sweeps.  Deterministic ordering: ring-major, angle-minor.
std::vector<cplx> polar_net(std::size_t rings, std::size_t angles, double r_lo, double r_hi) {
  std::vector<cplx> out;
  out.reserve(rings * angles);
  for (std::size_t i = 0; i < rings; ++i) {
    const double r =
        rings == 1 ? r_hi : r_lo + (r_hi - r_lo) * static_cast<double>(i) / (rings - 1);
    for (std::size_t j = 0; j < angles; ++j) {
      const double th = 2.0 * pi * static_cast<double>(j) / angles;
      out.push_back(r * boundary_point(th));
    }
  }
  return out;
}

cplx bp_field_value(cplx tau, const AnalyticFn& p, cplx z) {
  return (std::conj(tau) * z - 1.0) * (z - tau) * p.value(z);
}

cplx bp_field_derivative(cplx tau, const AnalyticFn& p, cplx z) {
  const cplx front = (std::conj(tau) * z - 1.0) * (z - tau);
  const cplx front_d = std::conj(tau) * (z - tau) + (std::conj(tau) * z - 1.0);
  return front_d * p.value(z) + front * p.derivative(z);
}

bool is_boundary(cplx tau) { return std::abs(tau) >= 0.999; }

cplx unit_interval_integral(const std::function<cplx(double)>& f, double tol) {
  return integrate_unit_interval(f, tol).value;
}

// Damped Newton iteration for a zero of the field; interior zeros only.
std::optional<cplx> newton_interior_zero(const AnalyticFn& field, cplx start) {
  cplx z = start;
  for (int it = 0; it < 80; ++it) {
    const cplx g = field.value(z);
    if (std::abs(g) < 1e-13 && std::abs(z) <= 0.999) return z;
    const cplx gp = field.derivative(z);
    if (!(std::abs(gp) > 1e-300) || !std::isfinite(std::abs(gp))) return std::nullopt;
    const cplx d = g / gp;
    double damp = 1.0;
    cplx zn = z - d;
    int halvings = 0;
    while (std::abs(zn) >= 0.9995 && halvings < 30) {
      damp *= 0.5;
      zn = z - damp * d;
      ++halvings;
    }
    if (std::abs(zn) >= 0.9995) return std::nullopt;
    if (std::abs(zn - z) < 1e-15) {
      z = zn;
      break;
    }
    z = zn;
  }
  if (std::abs(field.value(z)) < 1e-11 && std::abs(z) <= 0.995) return z;
  return std::nullopt;
}

std::vector<cplx> interior_zeros(const AnalyticFn& field) {
  std::vector<cplx> zeros;
  std::vector<cplx> starts{cplx{0.0, 0.0}};
  for (double r : {0.25, 0.5, 0.75, 0.85}) {
    for (int j = 0; j < 12; ++j) {
      starts.push_back(r * boundary_point(2.0 * pi * j / 12.0));
    }
  }
  for (cplx s : starts) {
    const auto z = newton_interior_zero(field, s);
    if (!z) continue;
    bool fresh = true;
    for (cplx known : zeros) {
      if (pseudo_distance(*z, known) < 1e-6) {
        fresh = false;
        break;
      }
    }
    if (fresh) zeros.push_back(*z);
  }
  return zeros;
}

bool field_vanishes_on_net(const AnalyticFn& field) {
  double peak = 0.0;
  for (cplx z : polar_net(6, 16, 0.0, 0.9)) peak = std::max(peak, std::abs(field.value(z)));
  peak = std::max(peak, std::abs(field.value(cplx{0.0, 0.0})));
  return peak < 1e-13;
}

}  // namespace

GeneratorSpec generator_from_field(AnalyticFn field, std::string name) {
  GeneratorSpec spec;
  spec.field = std::move(field);
  spec.name = std::move(name);
  return spec;
}

GeneratorSpec generator_berkson_porta(cplx tau, AnalyticFn herglotz_p, std::string name) {
  GeneratorSpec spec;
  spec.tau_hint = tau;
  spec.herglotz_p = herglotz_p;
  spec.name = std::move(name);
  spec.field = AnalyticFn::closed_form(
      [tau, herglotz_p](cplx z) { return bp_field_value(tau, herglotz_p, z); },
      [tau, herglotz_p](cplx z) { return bp_field_derivative(tau, herglotz_p, z); },
      "bp_field(" + spec.name + ")");
  return spec;
}

double bp_consistency_gap(const GeneratorSpec& spec, std::size_t grid_density) {
  if (!spec.tau_hint || !spec.herglotz_p.valid() || !spec.field.valid()) return 0.0;
  double gap = 0.0;
  for (cplx z : polar_net(grid_density, 2 * grid_density + 1, 0.05, 0.95)) {
    gap = std::max(gap,
                   std::abs(spec.field.value(z) - bp_field_value(*spec.tau_hint, spec.herglotz_p, z)));
  }
  return gap;
}

GeneratorValidation validate_generator(const GeneratorSpec& spec, cplx tau,
                                       std::size_t grid_density) {
  GeneratorValidation out;
  out.min_re_p = std::numeric_limits<double>::quiet_NaN();
  const bool boundary = is_boundary(tau);
  bool any = false;
  for (cplx z : polar_net(grid_density, 2 * grid_density + 1, 0.08, 0.95)) {
    if (boundary) {
      if (std::abs(z - tau) < 0.1) continue;
    } else if (hyperbolic_distance(z, tau) < 0.15) {
      continue;
    }
    const cplx denom = (std::conj(tau) * z - 1.0) * (z - tau);
    const double re_p = (spec.field.value(z) / denom).real();
    out.min_re_p = any ? std::min(out.min_re_p, re_p) : re_p;
    any = true;
  }
  out.valid = any && out.min_re_p >= -1e-9;
  return out;
}

// --- flow -------------------------------------------------------------------

FlowResult flow(const GeneratorSpec& spec, cplx z, double t, double tol) {
  if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument("flow: time must be finite and nonnegative");
  if (!(std::abs(z) < 1.0)) throw std::invalid_argument("flow: start point outside the open disk");

  FlowResult out;
  out.value = z;
  if (t == 0.0) return out;

  // Dormand-Prince 5(4) coefficients; k7 is the next step's k1.
  static constexpr double a21 = 1.0 / 5.0;
  static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                          a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                          a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
  static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                          b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
  static constexpr double d1 = 5179.0 / 57600.0, d3 = 7571.0 / 16695.0, d4 = 393.0 / 640.0,
                          d5 = -92097.0 / 339200.0, d6 = 187.0 / 2100.0, d7 = 1.0 / 40.0;

  const auto& field = spec.field;
  const double atol = std::max(tol, 1e-14);
  cplx x = z;
  double tc = 0.0;
  cplx k1 = field.value(x);
  double h = std::min(t, 1e-2 / (1.0 + std::abs(k1)));

  while (tc < t) {
    if (out.steps >= 1000000) throw FlowStepUnderflow("flow: accepted step cap exceeded", tc, x);
    const double h_used = std::min(h, t - tc);
    if (h_used < 1e-15 * std::max(1.0, t)) {
      throw FlowStepUnderflow("flow: step size underflow", tc, x);
    }
    const cplx k2 = field.value(x + h_used * (a21 * k1));
    const cplx k3 = field.value(x + h_used * (a31 * k1 + a32 * k2));
    const cplx k4 = field.value(x + h_used * (a41 * k1 + a42 * k2 + a43 * k3));
    const cplx k5 = field.value(x + h_used * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const cplx k6 =
        field.value(x + h_used * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const cplx x5 = x + h_used * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const cplx k7 = field.value(x5);
    const cplx x4 = x + h_used * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
    const double err = std::abs(x5 - x4);
    const double scale = atol * std::max({1.0, std::abs(x), std::abs(x5)});
    const double en = err / scale;
    const bool usable = std::isfinite(en) && std::abs(x5) < 1.0;

    if (usable && en <= 1.0) {
      tc += h_used;
      x = x5;
      k1 = k7;
      ++out.steps;
      out.local_error += err;
      h = h_used * std::clamp(0.9 * std::pow(std::max(en, 1e-10), -0.2), 0.2, 5.0);
    } else if (usable) {
      h = h_used * std::clamp(0.9 * std::pow(en, -0.2), 0.1, 0.7);
    } else {
      h = 0.5 * h_used;
    }
  }
  out.value = x;
  out.t = t;
  return out;
}

// --- classification ---------------------------------------------------------

std::string semigroup_kind_name(SemigroupKind kind) {
  switch (kind) {
    case SemigroupKind::elliptic: return "elliptic";
    case SemigroupKind::non_elliptic: return "non_elliptic";
    case SemigroupKind::trivial: return "trivial";
  }
  return "unknown";
}

SemigroupClass classify(const GeneratorSpec& spec) {
  SemigroupClass out;
  if (field_vanishes_on_net(spec.field)) {
    out.kind = SemigroupKind::trivial;
    return out;
  }

  const auto zeros = interior_zeros(spec.field);
  if (!zeros.empty()) {
    out.kind = SemigroupKind::elliptic;
    out.dw_point = zeros.front();
    out.lambda = -spec.field.derivative(out.dw_point);
    out.no_attraction = std::abs(out.lambda.real()) <= 1e-9;
    return out;
  }

  // Boundary attractor: follow the flow over a geometric checkpoint ladder
  // and require the outward direction to settle.
  cplx x{0.0, 0.0};
  if (std::abs(spec.field.value(x)) < 1e-13) x = cplx{0.3, 0.2};
  std::vector<cplx> tail;
  double t_prev = 0.0;
  for (double t_check : {3.125, 6.25, 12.5, 25.0, 50.0}) {
    x = flow(spec, x, t_check - t_prev, 1e-9).value;
    t_prev = t_check;
    tail.push_back(x);
  }
  const cplx last = tail[tail.size() - 1];
  const cplx prev = tail[tail.size() - 2];
  const double gap_last = 1.0 - std::abs(last);
  const double gap_prev = 1.0 - std::abs(prev);
  const bool settled = gap_last < 0.1 && gap_last < gap_prev &&
                       std::abs(last / std::abs(last) - prev / std::abs(prev)) < 2e-2;
  if (!settled) {
    throw ClassifyAmbiguous("classify: flow has not settled by the time horizon", tail);
  }
  out.kind = SemigroupKind::non_elliptic;
  out.dw_point = last / std::abs(last);
  out.lambda = cplx{0.0, 0.0};
  return out;
}

// --- conjugation maps -------------------------------------------------------

namespace {

// -lambda/G(zeta) - 1/(zeta - tau); the pole at tau is removable and the
// evaluation point is pushed to radius 1e-6 when closer than that.
cplx koenigs_log_density(const AnalyticFn& field, cplx tau, cplx lambda, cplx zeta) {
  cplx w = zeta - tau;
  double r = std::abs(w);
  if (r < 1e-6) {
    const cplx dir = r == 0.0 ? cplx{1.0, 0.0} : w / r;
    w = 1e-6 * dir;
    zeta = tau + w;
  }
  return -lambda / field.value(zeta) - 1.0 / w;
}

AnalyticFn elliptic_koenigs(const GeneratorSpec& spec, cplx tau, cplx lambda, double tol,
                            const std::string& name) {
  const AnalyticFn field = spec.field;
  auto log_part = [field, tau, lambda, tol](cplx z) {
    const cplx w = z - tau;
    if (std::abs(w) == 0.0) return cplx{0.0, 0.0};
    return unit_interval_integral(
        [&](double u) { return koenigs_log_density(field, tau, lambda, tau + u * w) * w; }, tol);
  };
  auto value = [log_part, tau](cplx z) { return (z - tau) * std::exp(log_part(z)); };
  auto deriv = [value, log_part, field, tau, lambda](cplx z) {
    if (std::abs(z - tau) < 1e-6) return std::exp(log_part(z));
    return -lambda * value(z) / field.value(z);
  };
  return AnalyticFn::closed_form(value, deriv, "koenigs(" + name + ")");
}

AnalyticFn nonelliptic_koenigs(const GeneratorSpec& spec, double tol, const std::string& name) {
  const AnalyticFn field = spec.field;
  auto value = [field, tol](cplx z) {
    if (std::abs(z) == 0.0) return cplx{0.0, 0.0};
    return z * unit_interval_integral(
                   [&](double u) {
                     const cplx g = field.value(u * z);
                     if (std::abs(g) < 1e-14) {
                       throw std::runtime_error("koenigs_map: field vanishes on the path");
                     }
                     return cplx{0.0, 1.0} / g;
                   },
                   tol);
  };
  auto deriv = [field](cplx z) { return cplx{0.0, 1.0} / field.value(z); };
  return AnalyticFn::closed_form(value, deriv, "koenigs(" + name + ")");
}

}  // namespace

AnalyticFn koenigs_map(const GeneratorSpec& spec, const SemigroupClass& cls, double tol) {
  if (cls.kind == SemigroupKind::trivial) {
    throw std::invalid_argument("koenigs_map: trivial semigroup has no Koenigs map");
  }
  if (cls.kind == SemigroupKind::elliptic) {
    return elliptic_koenigs(spec, cls.dw_point, cls.lambda, tol, spec.name);
  }
  return nonelliptic_koenigs(spec, tol, spec.name);
}

AnalyticFn gamma_symbol(const GeneratorSpec& spec, const SemigroupClass& cls, double tol) {
  if (cls.kind == SemigroupKind::trivial) {
    throw std::invalid_argument("gamma_symbol: trivial semigroup has no symbol");
  }
  if (cls.kind == SemigroupKind::non_elliptic) {
    const AnalyticFn h = koenigs_map(spec, cls, tol);
    return AnalyticFn::closed_form([h](cplx z) { return h.value(z); },
                                   [h](cplx z) { return h.derivative(z); },
                                   "gamma(" + spec.name + ")");
  }
  const AnalyticFn field = spec.field;
  const cplx tau = cls.dw_point;
  // (zeta - tau)/G(zeta) extended by continuity; same push-off as the
  // Koenigs density.
  auto density = [field, tau](cplx zeta) {
    cplx w = zeta - tau;
    const double r = std::abs(w);
    if (r < 1e-6) {
      const cplx dir = r == 0.0 ? cplx{1.0, 0.0} : w / r;
      w = 1e-6 * dir;
      zeta = tau + w;
    }
    return w / field.value(zeta);
  };
  auto value = [density, field, tau, tol](cplx z) {
    const cplx w = z - tau;
    if (std::abs(w) == 0.0) return cplx{0.0, 0.0};
    return w * unit_interval_integral([&](double u) { return density(tau + u * w); }, tol);
  };
  auto deriv = [density](cplx z) { return density(z); };
  return AnalyticFn::closed_form(value, deriv, "gamma(" + spec.name + ")");
}

AnalyticFn log_koenigs_symbol(const AnalyticFn& koenigs, std::string name) {
  if (!koenigs.valid()) throw std::invalid_argument("log_koenigs_symbol: empty map");
  const AnalyticFn h = koenigs;
  double min_im = 0.0;
  for (double r : default_radius_ladder()) {
    const std::size_t angles = r == 0.0 ? 1 : 128;
    for (std::size_t j = 0; j < angles; ++j) {
      const cplx z = r * boundary_point(2.0 * pi * j / angles);
      min_im = std::min(min_im, h.value(z).imag());
    }
  }
  const cplx w0{0.0, min_im - 0.5};
  auto value = [h, w0](cplx z) { return std::log(h.value(z) - w0); };
  auto deriv = [h, w0](cplx z) { return h.derivative(z) / (h.value(z) - w0); };
  return AnalyticFn::closed_form(value, deriv, "log_koenigs(" + std::move(name) + ")");
}

AnalyticFn log_koenigs_symbol(const GeneratorSpec& spec, const SemigroupClass& cls, double tol) {
  return log_koenigs_symbol(koenigs_map(spec, cls, tol), spec.name);
}

// --- boundary regularity of 1/G ---------------------------------------------

BlochConditionReport bloch_condition_profile(const GeneratorSpec& spec, bool log_weighted,
                                             const std::vector<double>& radii,
                                             std::size_t angles_per_radius) {
  if (field_vanishes_on_net(spec.field)) {
    throw std::domain_error("bloch_condition_profile: field vanishes identically");
  }
  BlochConditionReport out;
  out.excluded_zeros = interior_zeros(spec.field);
  const double mask_rho = std::tanh(out.exclusion_delta);

  out.profile.radii = radii;
  std::sort(out.profile.radii.begin(), out.profile.radii.end());
  out.profile.values.assign(out.profile.radii.size(), 0.0);

  for (std::size_t i = 0; i < out.profile.radii.size(); ++i) {
    const double r = out.profile.radii[i];
    const std::size_t angles = r == 0.0 ? 1 : angles_per_radius;
    double best = 0.0;
    for (std::size_t j = 0; j < angles; ++j) {
      const cplx z = r * boundary_point(2.0 * pi * j / angles);
      bool masked = false;
      for (cplx zero : out.excluded_zeros) {
        if (pseudo_distance(z, zero) < mask_rho) {
          masked = true;
          break;
        }
      }
      if (masked) continue;
      const double om = 1.0 - r * r;
      double v = om / std::abs(spec.field.value(z));
      if (log_weighted) v *= std::log(1.0 / om);
      if (v > best) {
        best = v;
        if (v > out.profile.global_sup) {
          out.profile.global_sup = v;
          out.profile.attained_at = z;
        }
      }
    }
    out.profile.values[i] = best;
  }
  return out;
}

// --- catalogue --------------------------------------------------------------

namespace {

AnalyticFn field_linear(cplx c, const std::string& label) {
  return AnalyticFn::closed_form([c](cplx z) { return c * z; }, [c](cplx) { return c; }, label);
}

std::vector<CatalogueEntry> build_catalogue() {
  std::vector<CatalogueEntry> list;

  {
    CatalogueEntry e;
    e.name = "linear_contraction";
    e.spec = generator_from_field(field_linear(cplx{-1.0, 0.0}, "-z"), e.name);
    e.flow_closed = [](cplx z, double t) { return std::exp(-t) * z; };
    e.koenigs_closed = AnalyticFn::closed_form([](cplx z) { return z; }, [](cplx) { return cplx{1.0, 0.0}; },
                                               "identity");
    e.gamma_closed = AnalyticFn::closed_form([](cplx z) { return -z; }, [](cplx) { return cplx{-1.0, 0.0}; },
                                             "-z");
    list.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    e.name = "linear_contraction_2x";
    e.spec = generator_from_field(field_linear(cplx{-2.0, 0.0}, "-2z"), e.name);
    e.flow_closed = [](cplx z, double t) { return std::exp(-2.0 * t) * z; };
    e.koenigs_closed = AnalyticFn::closed_form([](cplx z) { return z; }, [](cplx) { return cplx{1.0, 0.0}; },
                                               "identity");
    e.gamma_closed = AnalyticFn::closed_form([](cplx z) { return -0.5 * z; },
                                             [](cplx) { return cplx{-0.5, 0.0}; }, "-z/2");
    list.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    e.name = "rotation";
    e.spec = generator_from_field(field_linear(cplx{0.0, 1.0}, "iz"), e.name);
    e.flow_closed = [](cplx z, double t) { return std::exp(cplx{0.0, t}) * z; };
    e.koenigs_closed = AnalyticFn::closed_form([](cplx z) { return z; }, [](cplx) { return cplx{1.0, 0.0}; },
                                               "identity");
    e.gamma_closed = AnalyticFn::closed_form([](cplx z) { return cplx{0.0, -1.0} * z; },
                                             [](cplx) { return cplx{0.0, -1.0}; }, "-iz");
    list.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    e.name = "spiral";
    const cplx c{-0.5, -1.0};
    e.spec = generator_from_field(field_linear(c, "-(0.5+i)z"), e.name);
    e.flow_closed = [c](cplx z, double t) { return std::exp(c * t) * z; };
    e.koenigs_closed = AnalyticFn::closed_form([](cplx z) { return z; }, [](cplx) { return cplx{1.0, 0.0}; },
                                               "identity");
    e.gamma_closed = AnalyticFn::closed_form([c](cplx z) { return z / c; }, [c](cplx) { return 1.0 / c; },
                                             "z/c");
    list.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    e.name = "logistic";
    e.spec = generator_from_field(
        AnalyticFn::closed_form([](cplx z) { return -z * (1.0 - z); },
                                [](cplx z) { return -1.0 + 2.0 * z; }, "-z(1-z)"),
        e.name);
    e.flow_closed = [](cplx z, double t) {
      const double et = std::exp(-t);
      return et * z / (1.0 - (1.0 - et) * z);
    };
    e.koenigs_closed = AnalyticFn::closed_form(
        [](cplx z) { return z / (1.0 - z); },
        [](cplx z) { return 1.0 / ((1.0 - z) * (1.0 - z)); }, "z/(1-z)");
    e.gamma_closed = AnalyticFn::closed_form([](cplx z) { return std::log(1.0 - z); },
                                             [](cplx z) { return -1.0 / (1.0 - z); }, "log(1-z)");
    list.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    e.name = "parabolic_boundary";
    e.spec = generator_from_field(
        AnalyticFn::closed_form([](cplx z) { return (1.0 - z) * (1.0 - z); },
                                [](cplx z) { return -2.0 * (1.0 - z); }, "(1-z)^2"),
        e.name);
    e.flow_closed = [](cplx z, double t) {
      const cplx d = t * (1.0 - z);
      return (z + d) / (1.0 + d);
    };
    e.koenigs_closed = AnalyticFn::closed_form(
        [](cplx z) { return cplx{0.0, 1.0} * z / (1.0 - z); },
        [](cplx z) { return cplx{0.0, 1.0} / ((1.0 - z) * (1.0 - z)); }, "iz/(1-z)");
    e.gamma_closed = e.koenigs_closed;
    list.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    e.name = "bp_halfplane";
    const AnalyticFn cayley = AnalyticFn::closed_form(
        [](cplx z) { return (1.0 + z) / (1.0 - z); },
        [](cplx z) { return 2.0 / ((1.0 - z) * (1.0 - z)); }, "(1+z)/(1-z)");
    e.spec = generator_berkson_porta(cplx{0.0, 0.0}, cayley, e.name);
    e.koenigs_closed = AnalyticFn::closed_form(
        [](cplx z) { return z / ((1.0 + z) * (1.0 + z)); },
        [](cplx z) {
          const cplx u = 1.0 + z;
          return (1.0 - z) / (u * u * u);
        },
        "z/(1+z)^2");
    e.gamma_closed = AnalyticFn::closed_form(
        [](cplx z) { return z - 2.0 * std::log(1.0 + z); },
        [](cplx z) { return -(1.0 - z) / (1.0 + z); }, "z-2log(1+z)");
    list.push_back(std::move(e));
  }
  return list;
}

}  // namespace

const std::vector<CatalogueEntry>& generator_catalogue() {
  static const std::vector<CatalogueEntry> catalogue = build_catalogue();
  return catalogue;
}

const CatalogueEntry* find_generator(const std::string& name) {
  for (const auto& e : generator_catalogue()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

cplx flow_point(const CatalogueEntry& entry, cplx z, double t, double tol) {
  if (entry.flow_closed) return entry.flow_closed(z, t);
  return flow(entry.spec, z, t, tol).value;
}

}  // namespace holosem
