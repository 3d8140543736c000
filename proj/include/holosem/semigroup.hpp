#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "holosem/analytic_fn.hpp"
#include "holosem/disk.hpp"
#include "holosem/quadrature.hpp"

namespace holosem {

// Infinitesimal generator of a one-parameter semigroup of holomorphic
// self-maps of the disk: dx/dt = G(x), x(0) = z.  A spec carries the vector
// field directly, or the boundary/interior point tau together with a
// Herglotz factor p (Re p >= 0 on D), in which case
//   G(z) = (conj(tau) z - 1)(z - tau) p(z).
// When both are present they must agree to 1e-10 on a sample grid.
struct GeneratorSpec {
  AnalyticFn field;                 // G with value and derivative
  std::optional<cplx> tau_hint;     // factorization point, when supplied
  AnalyticFn herglotz_p;            // invalid handle when not supplied
  std::string name;
};

GeneratorSpec generator_from_field(AnalyticFn field, std::string name);

// Builds the vector field from the factorization; the returned spec carries
// both forms.  tau may lie in the closed disk.
GeneratorSpec generator_berkson_porta(cplx tau, AnalyticFn herglotz_p, std::string name);

// Max |G - (conj(tau) z - 1)(z - tau) p| over a polar sample grid; zero when
// only one form is present.
double bp_consistency_gap(const GeneratorSpec& spec, std::size_t grid_density = 12);

struct GeneratorValidation {
  bool valid = false;
  double min_re_p = 0.0;
};

// Recovers p = G / ((conj(tau) z - 1)(z - tau)) on a polar grid and reports
// the minimal real part.  Points within hyperbolic distance 0.15 of an
// interior tau (Euclidean distance 0.1 of a boundary tau) are excluded; the
// quotient is 0/0 there.  valid iff min Re p >= -1e-9.
GeneratorValidation validate_generator(const GeneratorSpec& spec, cplx tau,
                                       std::size_t grid_density = 16);

// --- flow -------------------------------------------------------------------

struct FlowResult {
  cplx value;                // x(t)
  double t = 0.0;            // time reached (equals the request on success)
  std::size_t steps = 0;     // accepted steps
  double local_error = 0.0;  // sum of per-step embedded error estimates
};

// Raised when adaptive stepping cannot continue; carries the last good state.
struct FlowStepUnderflow : std::runtime_error {
  FlowStepUnderflow(const std::string& what, double t, cplx x)
      : std::runtime_error(what), t_reached(t), x_reached(x) {}
  double t_reached;
  cplx x_reached;
};

// Integrates dx/dt = G(x) from z over [0, t] with an embedded 5(4) pair.
// Every accepted step must stay strictly inside the disk; a step leaving it
// is rejected and retried smaller.  Hard cap of 1e6 accepted steps.
FlowResult flow(const GeneratorSpec& spec, cplx z, double t, double tol = 1e-10);

// --- classification ---------------------------------------------------------

enum class SemigroupKind { elliptic, non_elliptic, trivial };

std::string semigroup_kind_name(SemigroupKind kind);

struct SemigroupClass {
  SemigroupKind kind = SemigroupKind::trivial;
  cplx dw_point;          // interior fixed point, or |.| = 1 attractor
  cplx lambda;            // -G'(tau) for elliptic; 0 otherwise
  bool no_attraction = false;  // elliptic with Re lambda = 0 (rotation group)
};

// Raised when the long-time flow has not settled by the horizon; carries the
// trajectory tail at the geometric checkpoints.
struct ClassifyAmbiguous : std::runtime_error {
  ClassifyAmbiguous(const std::string& what, std::vector<cplx> tail)
      : std::runtime_error(what), trajectory_tail(std::move(tail)) {}
  std::vector<cplx> trajectory_tail;
};

// Interior zero search by damped Newton from a coarse polar net; on failure,
// long-time flow up to T = 50 over a geometric checkpoint ladder locates a
// boundary cluster point.  A field vanishing identically on the net is
// reported trivial.
SemigroupClass classify(const GeneratorSpec& spec);

// --- conjugation maps -------------------------------------------------------

// Koenigs map of the semigroup.
//   elliptic:      h(tau) = 0, h'(tau) = 1, h(phi_t) = exp(-lambda t) h;
//                  computed as (z - tau) exp(I(z)) with
//                  I(z) = integral_0^1 q(tau + u (z-tau)) (z-tau) du,
//                  q(zeta) = -lambda/G(zeta) - 1/(zeta - tau) extended by
//                  continuity at tau.
//   non-elliptic:  h(0) = 0, h(phi_t) = h + i t; h(z) = integral_0^z i/G.
// Radial segments only; a zero of G on the path is an error.
AnalyticFn koenigs_map(const GeneratorSpec& spec, const SemigroupClass& cls,
                       double tol = 1e-10);

// gamma(z) = integral_tau^z (zeta - tau)/G dzeta for elliptic specs, the
// integrand extended by continuity at tau; equal to the Koenigs map in the
// non-elliptic case.
AnalyticFn gamma_symbol(const GeneratorSpec& spec, const SemigroupClass& cls,
                        double tol = 1e-10);

// log(h - w0) where h is the Koenigs map and w0 = i (inf Im h - 1/2), the
// offset sampled over a polar grid so that h - w0 avoids 0.  Derivative
// h'/(h - w0).
AnalyticFn log_koenigs_symbol(const GeneratorSpec& spec, const SemigroupClass& cls,
                              double tol = 1e-10);

// Same shifted logarithm over an already built Koenigs map.  Pass a closed
// form (catalogue entries carry one) when the symbol feeds heavy quadrature;
// the numeric map integrates per evaluation.
AnalyticFn log_koenigs_symbol(const AnalyticFn& koenigs, std::string name);

// --- boundary regularity of 1/G ---------------------------------------------

struct BlochConditionReport {
  SupProfile profile;               // per-radius sup of the objective
  std::vector<cplx> excluded_zeros; // interior zeros of G masked out
  double exclusion_delta = 0.1;     // hyperbolic radius of the masked balls
};

// Per-radius sup of (1-|z|^2)/|G(z)|, optionally times log(1/(1-|z|^2)).
// Zeros of G are masked inside small hyperbolic balls and reported; the
// objective is treated as 0 there.
BlochConditionReport bloch_condition_profile(const GeneratorSpec& spec, bool log_weighted,
                                             const std::vector<double>& radii,
                                             std::size_t angles_per_radius = 128);

// --- catalogue --------------------------------------------------------------

// Reference generator with optional closed-form companions used as oracles
// and fast paths.  flow_closed(z, t) when present matches flow() exactly.
struct CatalogueEntry {
  std::string name;
  GeneratorSpec spec;
  std::function<cplx(cplx, double)> flow_closed;  // may be empty
  AnalyticFn koenigs_closed;                      // invalid handle when absent
  AnalyticFn gamma_closed;                        // invalid handle when absent
};

const std::vector<CatalogueEntry>& generator_catalogue();
const CatalogueEntry* find_generator(const std::string& name);

// Closed-form flow when the catalogue carries one; falls back to the adaptive
// integrator otherwise.
cplx flow_point(const CatalogueEntry& entry, cplx z, double t, double tol = 1e-10);

}  // namespace holosem
