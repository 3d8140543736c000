#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "holosem/disk.hpp"

namespace holosem {

// Deterministic pairwise tree reduction; fixed association independent of
// any threading, so repeated runs produce bit-identical sums.
[[nodiscard]] double pairwise_sum(const double* x, std::size_t n);
[[nodiscard]] inline double pairwise_sum(const std::vector<double>& x) {
  return pairwise_sum(x.data(), x.size());
}

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
struct GaussRule {
  std::vector<double> node;
  std::vector<double> weight;
};
const GaussRule& gauss_legendre(int n);

using Integrand = std::function<double(cplx)>;

struct QuadratureOptions {
  double tol = 1e-6;
  int gl_nodes = 10;            // radial nodes per geometric cell
  std::size_t theta_min = 64;   // angular resolution ladder (full-circle rules)
  std::size_t theta_max = 8192;
  std::size_t theta_fixed = 0;  // nonzero: pin the angular count, no adaptivity
  int max_radial_cells = 60;    // geometric cells of ratio 1/2 toward the boundary
  double t_floor_rel = 1e-14;   // deepest cell edge in t = 1-r^2, relative to the range
};

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;      // refinement delta + boundary tail estimate
  std::size_t cells_used = 0;    // sample points at the accepted resolution
  double max_radius_reached = 0.0;
  bool converged = true;
};

// integral over D of integrand(z) * (1-|z|^2)^s dA(z).
// Polar product rule: Gauss-Legendre in the radial variable t = 1-r^2 on
// geometrically shrinking cells toward the boundary, uniform trapezoid in
// the angle.  The remaining boundary sliver is added as an analytic tail
// estimate using the t^s decay of the weight.
QuadratureResult integrate_disk(const Integrand& g, double s_weight,
                                const QuadratureOptions& opt = {});
QuadratureResult integrate_disk(const Integrand& g, double s_weight, double tol);

// Same weighted integral over an annular sector { 1-|z| < depth, z/|z| in arc }.
// The Carleson box S(I) is the sector with depth = |I|.
QuadratureResult integrate_sector(const Integrand& g, const ArcInterval& arc, double depth,
                                  double s_weight, const QuadratureOptions& opt = {});
QuadratureResult integrate_box(const Integrand& g, const CarlesonBox& box, double s_weight,
                               const QuadratureOptions& opt = {});
QuadratureResult integrate_box(const Integrand& g, const CarlesonBox& box, double s_weight,
                               double tol);

// --- line integrals ---------------------------------------------------------

struct LineIntegral {
  cplx value{0.0, 0.0};
  double err_est = 0.0;  // change across the last panel doubling
  bool converged = true;
};

// Composite Gauss-Legendre on [0, 1] with panel doubling until the value
// stabilizes to tol (relative, floored at scale 1).  Fixed accumulation
// order.
LineIntegral integrate_unit_interval(const std::function<cplx(double)>& f, double tol);

// --- supremum search over the disk -----------------------------------------

struct SupProfile {
  std::vector<double> radii;    // ascending
  std::vector<double> values;   // sup over sampled angles at each radius
  double global_sup = 0.0;
  cplx attained_at = 0.0;
};

std::vector<double> default_radius_ladder();

// Evaluates objective on the polar ladder grid (one point at r = 0), takes
// per-radius sups, then one local refinement pass in radius and angle around
// the incumbent argmax.  Deterministic.
SupProfile sup_profile(const std::function<double(cplx)>& objective,
                       const std::vector<double>& radii, std::size_t angles_per_radius = 64,
                       bool refine = true);
inline SupProfile sup_profile(const std::function<double(cplx)>& objective) {
  return sup_profile(objective, default_radius_ladder());
}

// --- fixed product grid ----------------------------------------------------
// Shared sample grid for kernel-form norms: the a-independent part of the
// integrand is evaluated once, then reweighted per kernel parameter.

struct DiskGrid {
  std::vector<cplx> z;          // ring-major order
  std::vector<double> area_w;   // plain dA weights (no s factor)
  std::vector<double> om_abs2;  // 1 - |z|^2 per node
  std::size_t n_theta = 0;
  std::size_t n_rings = 0;
};

DiskGrid make_disk_grid(std::size_t n_theta, int gl_nodes, int cells, double t_floor);

}  // namespace holosem
