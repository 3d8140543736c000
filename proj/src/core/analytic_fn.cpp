#include "holosem/analytic_fn.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace holosem {

cplx TaylorForm::eval(cplx z) const {
  cplx acc = 0.0;
  for (std::size_t k = coeff.size(); k-- > 0;) acc = acc * z + coeff[k];
  return acc;
}

cplx TaylorForm::eval_derivative(cplx z) const {
  cplx acc = 0.0;
  for (std::size_t k = coeff.size(); k-- > 1;) acc = acc * z + double(k) * coeff[k];
  return acc;
}

TaylorForm TaylorForm::derivative() const {
  TaylorForm d;
  d.r_max = r_max;
  d.tail_bound = tail_bound;  // not meaningful after differentiation; kept as a marker
  if (coeff.size() > 1) {
    d.coeff.resize(coeff.size() - 1);
    for (std::size_t k = 1; k < coeff.size(); ++k) d.coeff[k - 1] = double(k) * coeff[k];
  }
  return d;
}

double TaylorForm::coeff_sup(double r) const {
  double acc = 0.0, rk = 1.0;
  for (const cplx& c : coeff) {
    acc += std::abs(c) * rk;
    rk *= r;
  }
  return acc + tail_bound;
}

TaylorForm taylor_monomial(unsigned n, std::size_t order) {
  TaylorForm f;
  f.coeff.assign(std::max<std::size_t>(order, n) + 1, 0.0);
  f.coeff[n] = 1.0;
  return f;
}

TaylorForm taylor_multiply(const TaylorForm& a, const TaylorForm& b) {
  TaylorForm out;
  out.r_max = std::min(a.r_max, b.r_max);
  const std::size_t n = std::max(a.coeff.size(), b.coeff.size());
  out.coeff.assign(n, 0.0);
  for (std::size_t i = 0; i < a.coeff.size(); ++i) {
    if (a.coeff[i] == 0.0) continue;
    const std::size_t jmax = std::min(b.coeff.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) out.coeff[i + j] += a.coeff[i] * b.coeff[j];
  }
  // Dropped cross terms of degree >= n plus the inputs' own tails.
  out.tail_bound = a.tail_bound * b.coeff_sup(out.r_max) +
                   b.tail_bound * a.coeff_sup(out.r_max) +
                   a.coeff_sup(out.r_max) * b.coeff_sup(out.r_max) * std::pow(out.r_max, double(n));
  return out;
}

AnalyticFn AnalyticFn::closed_form(Evaluator value, Evaluator deriv, std::string label) {
  AnalyticFn f;
  f.value_ = std::move(value);
  f.deriv_ = std::move(deriv);
  f.label_ = std::move(label);
  return f;
}

AnalyticFn AnalyticFn::taylor(TaylorForm form, std::string label) {
  AnalyticFn f;
  f.taylor_ = std::move(form);
  f.label_ = std::move(label);
  return f;
}

cplx AnalyticFn::value(cplx z) const {
  if (taylor_) return taylor_->eval(z);
  return value_(z);
}

cplx AnalyticFn::derivative(cplx z) const {
  if (taylor_) return taylor_->eval_derivative(z);
  return deriv_(z);
}

AnalyticFn monomial(unsigned n) {
  if (n == 0) return constant_fn(1.0);
  return AnalyticFn::closed_form(
      [n](cplx z) { return std::pow(z, int(n)); },
      [n](cplx z) { return double(n) * std::pow(z, int(n) - 1); },
      "e_" + std::to_string(n));
}

AnalyticFn log_test(cplx w) {
  if (std::abs(w) > 1.0 + 1e-12) throw std::invalid_argument("log_test: |w| > 1");
  const cplx wc = std::conj(w);
  return AnalyticFn::closed_form(
      [wc](cplx z) { return 1.0 - std::log(1.0 - wc * z); },
      [wc](cplx z) { return wc / (1.0 - wc * z); },
      "l_w");
}

AnalyticFn power_test(cplx w, double alpha, double lambda) {
  if (lambda <= 0.0) throw std::invalid_argument("power_test: lambda must be positive");
  if (alpha < 0.0) throw std::invalid_argument("power_test: alpha must be nonnegative");
  if (std::abs(w) > 1.0 + 1e-12) throw std::invalid_argument("power_test: |w| > 1");
  const cplx wc = std::conj(w);
  const double front = std::pow(1.0 - std::norm(w), lambda);
  const double q = alpha + lambda;
  return AnalyticFn::closed_form(
      [wc, front, q](cplx z) { return front * std::exp(-q * std::log(1.0 - wc * z)); },
      [wc, front, q](cplx z) {
        return front * q * wc * std::exp(-(q + 1.0) * std::log(1.0 - wc * z));
      },
      "f_{w,a,l}");
}

AnalyticFn beta_test(cplx w, double p, double s, double alpha) {
  const double lambda = (s - (p - 2.0)) / p - alpha;
  if (lambda <= 0.0) throw std::invalid_argument("beta_test: (s-(p-2))/p - alpha must be positive");
  return power_test(w, alpha, lambda);
}

AnalyticFn log_midpoint_test(cplx w) {
  const cplx ws = hyperbolic_midpoint(w);
  const cplx wc = std::conj(w);
  return AnalyticFn::closed_form(
      [ws, wc](cplx z) { return 1.0 - std::log(1.0 - mobius(ws, z) * wc); },
      [ws, wc](cplx z) {
        const auto j = mobius_jet(ws, z);
        return wc * j.derivative / (1.0 - j.value * wc);
      },
      "beta_w(midpoint)");
}

AnalyticFn log_singular() {
  return AnalyticFn::closed_form(
      [](cplx z) { return -std::log(1.0 - z); },
      [](cplx z) { return 1.0 / (1.0 - z); },
      "log(1/(1-z))");
}

AnalyticFn koebe() {
  return AnalyticFn::closed_form(
      [](cplx z) {
        const cplx d = 1.0 - z;
        return z / (d * d);
      },
      [](cplx z) {
        const cplx d = 1.0 - z;
        return (1.0 + z) / (d * d * d);
      },
      "koebe");
}

AnalyticFn constant_fn(cplx c) {
  return AnalyticFn::closed_form([c](cplx) { return c; }, [](cplx) { return cplx(0.0); },
                                 "const");
}

AnalyticFn fn_add_scaled(const AnalyticFn& f, cplx c, const AnalyticFn& g, std::string label) {
  return AnalyticFn::closed_form(
      [f, c, g](cplx z) { return f.value(z) + c * g.value(z); },
      [f, c, g](cplx z) { return f.derivative(z) + c * g.derivative(z); },
      std::move(label));
}

TaylorForm taylor_compose(const TaylorForm& f, const TaylorForm& g) {
  const std::size_t n = std::max(f.coeff.size(), g.coeff.size());
  // Work radius: shrink until the coefficient estimate of sup|g| fits inside
  // the radius where f's coefficients are trusted.
  double r = g.r_max;
  while (r > 1e-3 && g.coeff_sup(r) > f.r_max) r *= 0.5;
  if (g.coeff_sup(r) > f.r_max)
    throw std::domain_error("taylor_compose: inner function exceeds composition radius");

  TaylorForm acc;
  acc.coeff.assign(n, 0.0);
  TaylorForm gn = g;
  gn.coeff.resize(n, 0.0);
  // Horner on the truncated series: acc <- acc*g + f_k.
  for (std::size_t k = f.coeff.size(); k-- > 0;) {
    acc = taylor_multiply(acc, gn);
    acc.coeff.resize(n, 0.0);
    if (!acc.coeff.empty()) acc.coeff[0] += f.coeff[k];
  }
  acc.r_max = r;
  // Lipschitz-style propagation of the inner tail through f' plus f's own tail.
  double fp_sum = 0.0, rk = 1.0;
  const double m = std::min(1.0, g.coeff_sup(r));
  for (std::size_t k = 1; k < f.coeff.size(); ++k) {
    fp_sum += double(k) * std::abs(f.coeff[k]) * rk;
    rk *= m;
  }
  acc.tail_bound += f.tail_bound + fp_sum * g.tail_bound;
  return acc;
}

UnivalenceReport univalence_probe(const AnalyticFn& f, unsigned mesh_density, double r_cap) {
  UnivalenceReport report;
  std::vector<cplx> mesh;
  mesh.push_back(0.0);
  const double rho_cap = std::atanh(r_cap);
  const double step = 0.5 / std::max(1u, mesh_density);
  for (double rho = step; rho <= rho_cap; rho += step) {
    const double r = std::tanh(rho);
    // Even angle counts keep antipodal pairs exactly on the mesh.
    std::size_t m = std::size_t(std::ceil(2.0 * pi * std::sinh(2.0 * rho) / (2.0 * step)));
    m = std::clamp<std::size_t>(m + (m % 2), 8, 512);
    for (std::size_t j = 0; j < m; ++j) mesh.push_back(std::polar(r, 2.0 * pi * double(j) / double(m)));
  }
  report.mesh_points = mesh.size();

  std::vector<cplx> img(mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i) img[i] = f.value(mesh[i]);
  // Collision tolerance is local: a genuine coincidence sits at rounding
  // level of the nearby values, far below the spacing of distinct images.
  const double distinct_tol = 1e-6;
  double min_sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    for (std::size_t j = i + 1; j < mesh.size(); ++j) {
      if (std::abs(mesh[i] - mesh[j]) < distinct_tol) continue;
      const double d = std::abs(img[i] - img[j]);
      min_sep = std::min(min_sep, d);
      const double local = std::max({1.0, std::abs(img[i]), std::abs(img[j])});
      if (d <= 1e-10 * local && !report.first_collision) {
        report.first_collision = std::make_pair(mesh[i], mesh[j]);
      }
    }
  }
  report.min_image_separation = std::isfinite(min_sep) ? min_sep : 0.0;
  report.injective_on_mesh = !report.first_collision.has_value();
  return report;
}

void write_taylor(std::ostream& os, const TaylorForm& form) {
  os.precision(17);
  os << "# taylor r_max " << form.r_max << " tail " << form.tail_bound << "\n";
  for (std::size_t k = 0; k < form.coeff.size(); ++k) {
    os << k << " " << form.coeff[k].real() << " " << form.coeff[k].imag() << "\n";
  }
}

TaylorForm read_taylor(std::istream& is) {
  TaylorForm form;
  form.coeff.clear();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string tag, key;
      hs >> tag;
      while (hs >> key) {
        if (key == "r_max") hs >> form.r_max;
        else if (key == "tail") hs >> form.tail_bound;
      }
      continue;
    }
    std::istringstream ls(line);
    std::size_t idx;
    double re, im;
    if (!(ls >> idx >> re >> im))
      throw std::runtime_error("taylor parse error at line " + std::to_string(lineno));
    if (idx >= form.coeff.size()) form.coeff.resize(idx + 1, 0.0);
    form.coeff[idx] = cplx(re, im);
  }
  return form;
}

}  // namespace holosem
