#pragma once

#include <functional>
#include <vector>

#include "holosem/analytic_fn.hpp"
#include "holosem/quadrature.hpp"

// Norms and seminorms of the conformally invariant family built over the
// weighted Dirichlet spaces, the admissibility gate for the parameter triple
// (p, s, alpha), and the boundary decay profiles used by little-o probes.
//
// Conventions fixed here and relied on by every oracle:
//   dps integral uses plain Lebesgue area (disk area = pi),
//   seminorm estimates report sup(objective)^{1/p} without the |f(0)| term,
//   profiles store the raw p-powered objective, roots are applied to values.

namespace holosem {

enum class SpaceClass { proper_Malpha, collapsed_to_Dps, invalid };

const char* space_class_name(SpaceClass c);

struct SpaceParams {
  double p = 2.0;
  double s = 1.0;
  double alpha = 0.0;
  bool admissible = false;
};

// Validates p > 1 and alpha >= 0, stores the admissibility flag.
SpaceParams make_space_params(double p, double s, double alpha);

// (s - (p-2)) / p; at or above this alpha the seminorm collapses to dps scale.
double collapse_threshold(const SpaceParams& params);

struct AdmissibleReport {
  bool admissible = false;
  SpaceClass classification = SpaceClass::invalid;
  double threshold = 0.0;
};

AdmissibleReport admissible_check(const SpaceParams& params);

enum class NormForm { invariant, box, kernel };

const char* norm_form_name(NormForm f);

// Exponent choices for the kernel form. default_kernel_beta follows the
// change-of-variables convention; exact_kernel_beta adds p*alpha, which makes
// the kernel objective coincide with the invariant objective identically for
// every alpha (they already coincide at alpha = 0 for the default).
double default_kernel_beta(const SpaceParams& params);
double exact_kernel_beta(const SpaceParams& params);

// a-grid policy for the supremum search. Empty radii selects the standard
// ladder {0, .25, .5, .75, .9, .95, .99, .995, .999}.
struct SupGridSpec {
  std::vector<double> radii;
  std::size_t angles = 64;
  bool refine = true;
};

struct NormOptions {
  double tol = 1e-6;
  SupGridSpec grid;
  // 0 = base fixed grids; 1 = one refinement notch (denser product grid and
  // tighter per-point tolerance), used by equivalence-stability checks.
  int refine_level = 0;
};

struct NormEstimate {
  double value = 0.0;
  NormForm form = NormForm::invariant;
  SupProfile profile;
  QuadratureResult quadrature_meta;  // adaptive re-evaluation at the argmax
};

// |f(0)| + (integral of |f'|^p (1-|z|^2)^s dA)^{1/p}
NormEstimate dps_norm(const AnalyticFn& f, double p, double s, double tol = 1e-6);

// sup-over-a seminorm of the conformally invariant family in one of its three
// equivalent presentations. Rejects parameter triples classified invalid;
// collapsed triples are allowed so the collapse inequality can be probed.
NormEstimate mads_seminorm(const AnalyticFn& f, const SpaceParams& params, NormForm form,
                           double beta, const NormOptions& opt = {});
NormEstimate mads_seminorm(const AnalyticFn& f, const SpaceParams& params, NormForm form,
                           const NormOptions& opt = {});

// F(p,q,s) supremum (raw, no p-th root), optionally with the log(1/(1-|a|^2))^p
// prefactor. Requires q > -2, s > 0, q + s > -1.
NormEstimate f_family_norm(const AnalyticFn& f, double p, double q, double s, bool log_weighted,
                           const NormOptions& opt = {});

struct BlochWeight {
  double alpha = 1.0;
  bool log_factor = false;  // multiplies by log(e/(1-|z|^2))
};

// sup over the z-ladder of (1-|z|^2)^alpha |f'(z)| (times the log factor).
NormEstimate weighted_bloch_norm(const AnalyticFn& f, const BlochWeight& w, double tol = 1e-6);

struct LittleOSelector {
  SpaceParams params;
  NormForm form = NormForm::kernel;
  double beta = -1.0;  // <= 0 selects the default kernel beta
};

// Per-radius sup of the defining seminorm objective, in norm scale (p-th root
// applied), evaluated on the given radii. Feeds decay trend analysis.
SupProfile littleo_profile(const AnalyticFn& f, const LittleOSelector& sel,
                           const std::vector<double>& radii, double tol = 1e-4,
                           std::size_t angles = 32);

// Least-squares slope of log(value) against log(1/(1-r)) over radii >=
// min_radius. Negative means decay toward the boundary.
double decay_slope(const SupProfile& prof, double min_radius = 0.85);

struct WeightFn {
  std::function<double(cplx)> value;
  std::function<cplx(cplx)> gradient;  // (d/dx, d/dy) packed as a complex number
};

// omega(z) = log(K / (1-|z|^2)) with its exact gradient.
WeightFn log_weight(double K);

// Empirical sup of (1-|z|^2) |grad omega| / omega over the sample grid.
// Throws on a nonpositive omega sample.
double weight_regularity_constant(const WeightFn& omega, const std::vector<double>& radii,
                                  std::size_t angles = 32);

}  // namespace holosem
