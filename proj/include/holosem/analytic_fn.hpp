#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holosem/disk.hpp"

namespace holosem {

// Truncated power series about the origin.  coeff[k] multiplies z^k.
// tail_bound is a crude estimate of the truncation error on |z| <= r_max;
// it is bookkeeping, not a certified bound.
struct TaylorForm {
  std::vector<cplx> coeff;
  double r_max = 0.999;
  double tail_bound = 0.0;

  [[nodiscard]] cplx eval(cplx z) const;
  [[nodiscard]] cplx eval_derivative(cplx z) const;
  [[nodiscard]] TaylorForm derivative() const;
  [[nodiscard]] std::size_t order() const { return coeff.empty() ? 0 : coeff.size() - 1; }

  // Upper estimate of sup |series| on |z| = r through absolute coefficient sums.
  [[nodiscard]] double coeff_sup(double r) const;
};

inline constexpr std::size_t taylor_default_order = 256;

TaylorForm taylor_monomial(unsigned n, std::size_t order = taylor_default_order);
TaylorForm taylor_multiply(const TaylorForm& a, const TaylorForm& b);

// Analytic function handle.  Closed forms carry exact value/derivative
// evaluators; Taylor forms evaluate by Horner on the stored coefficients.
class AnalyticFn {
 public:
  using Evaluator = std::function<cplx(cplx)>;

  AnalyticFn() = default;

  static AnalyticFn closed_form(Evaluator value, Evaluator deriv, std::string label);
  static AnalyticFn taylor(TaylorForm form, std::string label);

  [[nodiscard]] cplx value(cplx z) const;
  [[nodiscard]] cplx derivative(cplx z) const;
  [[nodiscard]] cplx operator()(cplx z) const { return value(z); }

  [[nodiscard]] bool is_taylor() const { return taylor_.has_value(); }
  [[nodiscard]] const TaylorForm* taylor_form() const { return taylor_ ? &*taylor_ : nullptr; }
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] bool valid() const { return taylor_.has_value() || static_cast<bool>(value_); }

 private:
  Evaluator value_;
  Evaluator deriv_;
  std::optional<TaylorForm> taylor_;
  std::string label_;
};

// --- test function family ---------------------------------------------------

// e_n(z) = z^n
AnalyticFn monomial(unsigned n);

// l_w(z) = log(e/(1 - conj(w) z)), principal branch.  Valid on the closed
// family |w| <= 1 since Re(1 - conj(w) z) > 0 for z in D.
AnalyticFn log_test(cplx w);

// f_{w,alpha,lambda}(z) = (1-|w|^2)^lambda / (1 - conj(w) z)^(alpha+lambda).
// Requires lambda > 0 and alpha >= 0.
AnalyticFn power_test(cplx w, double alpha, double lambda);

// beta^alpha_w for the space (p, s, alpha): power_test with
// lambda = (s-(p-2))/p - alpha, which must be positive.
AnalyticFn beta_test(cplx w, double p, double s, double alpha);

// alpha = 0 variant built on the hyperbolic midpoint w* of [0, w]:
// log(e/(1 - phi_{w*}(z) conj(w))).
AnalyticFn log_midpoint_test(cplx w);

// log(1/(1-z)); the classical non-vanishing-oscillation symbol.
AnalyticFn log_singular();

// Koebe function z/(1-z)^2.
AnalyticFn koebe();

AnalyticFn constant_fn(cplx c);

// Sum f + c*g as a closed-form evaluator (used by the witness recursion).
AnalyticFn fn_add_scaled(const AnalyticFn& f, cplx c, const AnalyticFn& g, std::string label);

// --- composition ------------------------------------------------------------

// f(g(z)) for Taylor forms, truncated at the larger of the two orders.
// Treats f as a polynomial; requires the coefficient-sum estimate of sup|g|
// to stay within f's working radius.
TaylorForm taylor_compose(const TaylorForm& f, const TaylorForm& g);

// --- univalence probe -------------------------------------------------------

struct UnivalenceReport {
  bool injective_on_mesh = false;
  std::size_t mesh_points = 0;
  std::optional<std::pair<cplx, cplx>> first_collision;
  double min_image_separation = 0.0;  // over pairs counted as distinct
};

// Pairwise-distinct values on a quasi-uniform hyperbolic mesh out to r_cap.
// Heuristic certificate only.
UnivalenceReport univalence_probe(const AnalyticFn& f, unsigned mesh_density,
                                  double r_cap = 0.995);

// --- serialization ----------------------------------------------------------

// Plain text, one coefficient per line: "index re im".  Comment lines start
// with '#' and carry r_max / tail_bound metadata.
void write_taylor(std::ostream& os, const TaylorForm& form);
TaylorForm read_taylor(std::istream& is);

}  // namespace holosem
