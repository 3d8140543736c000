#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "holosem/analytic_fn.hpp"
#include "holosem/disk.hpp"
#include "holosem/quadrature.hpp"
#include "holosem/semigroup.hpp"
#include "holosem/spaces.hpp"

namespace holosem {

// --- composition ------------------------------------------------------------

// f composed with a holomorphic self-map phi.  Closed forms chain the
// evaluators; a Taylor pair goes through polynomial composition and requires
// the coefficient-sum estimate of sup|phi| to stay within 0.999 of f's
// working radius.  Self-mapping is probed on a polar mesh before composing.
AnalyticFn compose_operator(const AnalyticFn& phi, const AnalyticFn& f);

struct CompositionProbe {
  double max_ratio = 0.0;   // worst ||f o phi|| / ||f|| over the probe family
  double bound_rhs = 0.0;   // log(e/(1-|phi(0)|)) at alpha = 0, else (1/(1-|phi(0)|))^alpha
  double ratio_constant = 0.0;  // max_ratio / bound_rhs
  std::vector<double> ratios;   // per family member, norms with the |f(0)| term
};

// Norm-ratio sweep of the composition operator over a family of functions.
// Full norms (seminorm value plus modulus at 0) enter the ratios.
CompositionProbe composition_norm_probe(const AnalyticFn& phi, const SpaceParams& params,
                                        const std::vector<AnalyticFn>& family,
                                        const NormOptions& opt = {});

// Default probe family: low monomials, a log test function and two power
// tests anchored near the boundary.
std::vector<AnalyticFn> default_probe_family(const SpaceParams& params);

// --- generalized Volterra operator ------------------------------------------

// (T_g f)(z) = integral_0^z f g' dzeta.  A Taylor pair is antidifferentiated
// coefficientwise (exact); otherwise the radial path integral is evaluated
// per call.  The derivative evaluator returns f(z) g'(z) in both routes.
AnalyticFn volterra_apply(const AnalyticFn& g, const AnalyticFn& f, double tol = 1e-8);

// --- symbol classification --------------------------------------------------

enum class TrendVerdict { consistent, inconsistent, inconclusive };

const char* trend_verdict_name(TrendVerdict v);

struct SymbolClassReport {
  TrendVerdict bounded_flag = TrendVerdict::inconclusive;
  TrendVerdict compact_flag = TrendVerdict::inconclusive;
  std::string basis;          // which criterion family produced the evidence
  double norm_value = 0.0;    // membership norm behind bounded_flag
  double norm_value_log = 0.0;  // log-weighted companion at alpha = 0
  SupProfile membership_profile;  // per-|a| values behind the norm
  SupProfile littleo;             // decay profile behind compact_flag
  double littleo_slope = 0.0;
};

// Boundedness/compactness evidence for T_g on the (p, s, alpha) scale.
//   alpha = 0:              log-weighted F-family membership of g
//   alpha > 0, univalent:   M_0 membership plus the alpha = 0 little-o trend
//   alpha > 0, general:     evidence only, verdicts stay inconclusive
// Verdicts are trends read off profiles, never proofs.
SymbolClassReport volterra_symbol_class(const AnalyticFn& g, const SpaceParams& params,
                                        bool univalent_hint, const NormOptions& opt = {});

// --- witness construction ---------------------------------------------------

struct WitnessGrids {
  std::vector<double> arc_lengths;   // dyadic ladder, descending
  std::size_t arc_centers = 128;
  std::size_t ring_angles = 256;
  double box_tol = 3e-4;             // per-box quadrature tolerance
  double ring_floor = 1.0 / (1 << 16);  // deepest 1-|w| tried
  // Exponent driving the selection argmax: false scores arcs by the
  // alpha = 0 box functional (exponent s-(p-2)), which rewards deep test
  // centers; true scores by the space's own exponent s-(p(alpha+1)-2),
  // under which a symbol lying in the alpha = 0 space yields bounded scores
  // and the search exhausts after a few rounds.
  bool alpha_consistent_selection = false;
};

WitnessGrids default_witness_grids();

struct WitnessRound {
  double delta = 0.0;        // small-arc threshold from the F_{n-1} sweep
  double delta_prime = 0.0;  // ring depth 1-|w_n|
  cplx w;
  double coefficient = 0.0;  // a_n = 1/M_n
  ArcInterval arc;           // argmax arc I_n
  double m_value = 0.0;      // M_n, p-th root of the selection sup
  double margin_small_arcs = 0.0;  // 2^{-p} minus the F_{n-1} sup below delta
  double margin_long_arcs = 0.0;   // 1 minus the beta_w sup at length >= delta
  double margin_selection = 0.0;   // M_n^p / 2^{pn} - 1
  double box_value = 0.0;          // property check value at I_n (p-th root)
  bool property3_ok = false;       // box_value >= 1/2
  double partial_norm = 0.0;       // after this round
  bool property4_ok = false;       // cap against the previous round
};

struct WitnessState {
  int n = 0;
  std::vector<double> coefficients;    // a_0..a_n
  std::vector<cplx> centers;           // w_0..w_n
  std::vector<ArcInterval> arcs;       // I_0..I_n
  std::vector<double> thresholds;      // delta_0..delta_n
  double partial_norm = 0.0;           // box-form sup of F_n g'
  std::vector<WitnessRound> rounds;    // recursive rounds 1..n
  AnalyticFn witness;                  // F_n
  // Advisory hypothesis evidence: seminorm finiteness on a beta ladder and
  // the trend of the alpha = 0 membership profile of g.
  std::vector<double> beta_ladder_norms;
  bool m0_profile_diverging = false;
};

struct SearchExhausted : std::runtime_error {
  SearchExhausted(const std::string& what, int round, double margin)
      : std::runtime_error(what), round(round), tightest_margin(margin) {}
  int round;
  double tightest_margin;
};

// Runs n_max rounds of the arc/center recursion for the symbol g.  Selection
// inequalities are certified on the grids or SearchExhausted is thrown; the
// per-round property checks are recorded with their margins.
WitnessState witness_construct(const AnalyticFn& g, const SpaceParams& params, int n_max,
                               const WitnessGrids& grids = default_witness_grids());

// --- strong continuity ------------------------------------------------------

struct ContinuityPoint {
  double t = 0.0;
  double norm = 0.0;
};

struct ContinuityCurve {
  std::vector<ContinuityPoint> points;  // ascending in t
  double slope = 0.0;                   // d log(norm) / d log(t) least squares
};

// ||f o phi_t - f|| over the time grid in the full norm (kernel-form
// seminorm at the exact-match exponent plus the value gap at 0).  Closed-form
// flows are used when the generator name resolves in the catalogue.
ContinuityCurve strong_continuity_curve(const GeneratorSpec& spec, const AnalyticFn& f,
                                        const SpaceParams& params,
                                        const std::vector<double>& t_grid,
                                        const NormOptions& opt = {});

}  // namespace holosem
