#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "holosem/analytic_fn.hpp"
#include "holosem/semigroup.hpp"
#include "holosem/spaces.hpp"

using namespace holosem;

namespace {

// Closed-form flows restated independently of the catalogue.
cplx oracle_flow_scalar(cplx c, cplx z, double t) { return std::exp(c * t) * z; }

cplx oracle_flow_parabolic(cplx z, double t) {
  const cplx d = t * (1.0 - z);
  return (z + d) / (1.0 + d);
}

cplx oracle_flow_logistic(cplx z, double t) {
  const double et = std::exp(-t);
  return et * z / (1.0 - (1.0 - et) * z);
}

std::vector<cplx> law_samples() {
  std::vector<cplx> out;
  for (int i = 0; i < 10; ++i) {
    const double r = 0.1 + 0.8 * i / 9.0;
    for (int j = 0; j < 5; ++j) {
      out.push_back(r * boundary_point(2.0 * pi * j / 5.0 + 0.1));
    }
  }
  return out;
}

std::vector<cplx> map_samples() {
  std::vector<cplx> out{cplx{0.0, 0.0}};
  for (double r : {0.3, 0.6, 0.9}) {
    for (int j = 0; j < 8; ++j) out.push_back(r * boundary_point(2.0 * pi * j / 8.0));
  }
  return out;
}

}  // namespace

TEST_CASE("berkson porta factorization agrees with a directly supplied field") {
  GeneratorSpec both = generator_berkson_porta(cplx{0.0, 0.0}, constant_fn(1.0), "paired");
  both.field = AnalyticFn::closed_form([](cplx z) { return -z; },
                                       [](cplx) { return cplx{-1.0, 0.0}; }, "-z");
  CHECK(bp_consistency_gap(both) <= 1e-12);

  GeneratorSpec off = generator_berkson_porta(cplx{0.0, 0.0}, constant_fn(2.0), "mismatch");
  off.field = both.field;
  CHECK(bp_consistency_gap(off) > 0.9);

  CHECK(bp_consistency_gap(generator_from_field(both.field, "single")) == 0.0);
}

TEST_CASE("generator validation recovers the herglotz factor sign") {
  const auto contraction = find_generator("linear_contraction");
  REQUIRE(contraction != nullptr);
  const auto v1 = validate_generator(contraction->spec, cplx{0.0, 0.0});
  CHECK(v1.valid);
  CHECK(v1.min_re_p == doctest::Approx(1.0).epsilon(1e-9));

  const GeneratorSpec expansion = generator_from_field(
      AnalyticFn::closed_form([](cplx z) { return z; }, [](cplx) { return cplx{1.0, 0.0}; }, "z"),
      "expansion");
  const auto v2 = validate_generator(expansion, cplx{0.0, 0.0});
  CHECK_FALSE(v2.valid);
  CHECK(v2.min_re_p == doctest::Approx(-1.0).epsilon(1e-9));

  const auto parabolic = find_generator("parabolic_boundary");
  REQUIRE(parabolic != nullptr);
  const auto v3 = validate_generator(parabolic->spec, cplx{1.0, 0.0});
  CHECK(v3.valid);
  CHECK(v3.min_re_p == doctest::Approx(1.0).epsilon(1e-9));

  const auto rotation = find_generator("rotation");
  REQUIRE(rotation != nullptr);
  const auto v4 = validate_generator(rotation->spec, cplx{0.0, 0.0});
  CHECK(v4.valid);
  CHECK(std::abs(v4.min_re_p) <= 1e-12);
}

TEST_CASE("flow at time zero returns the start point unchanged") {
  const auto& entry = *find_generator("logistic");
  const cplx z{0.3, -0.4};
  const auto res = flow(entry.spec, z, 0.0);
  CHECK(res.value == z);
  CHECK(res.steps == 0);
  CHECK(res.local_error == 0.0);
}

TEST_CASE("adaptive flow matches closed forms") {
  struct Probe {
    const char* name;
    cplx z;
    double t;
    cplx expected;
  };
  const std::vector<Probe> probes{
      {"linear_contraction", {0.3, 0.4}, 1.0, oracle_flow_scalar({-1.0, 0.0}, {0.3, 0.4}, 1.0)},
      {"linear_contraction_2x", {0.5, -0.2}, 0.5, oracle_flow_scalar({-2.0, 0.0}, {0.5, -0.2}, 0.5)},
      {"rotation", {0.6, 0.1}, 2.0, oracle_flow_scalar({0.0, 1.0}, {0.6, 0.1}, 2.0)},
      {"spiral", {0.4, 0.4}, 1.3, oracle_flow_scalar({-0.5, -1.0}, {0.4, 0.4}, 1.3)},
      {"logistic", {0.0, 0.5}, 0.7, oracle_flow_logistic({0.0, 0.5}, 0.7)},
      {"logistic", {-0.6, 0.0}, 2.0, oracle_flow_logistic({-0.6, 0.0}, 2.0)},
      {"parabolic_boundary", {0.0, 0.5}, 1.0, oracle_flow_parabolic({0.0, 0.5}, 1.0)},
      {"parabolic_boundary", {0.0, 0.0}, 3.0, oracle_flow_parabolic({0.0, 0.0}, 3.0)},
  };
  for (const auto& probe : probes) {
    CAPTURE(probe.name);
    const auto& entry = *find_generator(probe.name);
    const auto res = flow(entry.spec, probe.z, probe.t);
    CHECK(std::abs(res.value - probe.expected) < 1e-8);
    CHECK(std::abs(res.value) < 1.0);
    CHECK(res.steps > 0);
    CHECK(res.t == probe.t);
    CHECK(res.local_error < 1e-6);
  }
  // Rotation flow preserves the modulus.
  const auto& rot = *find_generator("rotation");
  const cplx z{0.6, 0.1};
  CHECK(std::abs(std::abs(flow(rot.spec, z, 2.0).value) - std::abs(z)) < 1e-10);
}

TEST_CASE("semigroup law holds across the catalogue") {
  const auto samples = law_samples();
  for (const auto& entry : generator_catalogue()) {
    CAPTURE(entry.name);
    double worst = 0.0;
    for (double t : {0.1, 0.5, 1.0}) {
      for (double s : {0.1, 0.5, 1.0}) {
        for (cplx z : samples) {
          const cplx direct = flow(entry.spec, z, t + s).value;
          const cplx mid = flow(entry.spec, z, s).value;
          const cplx chained = flow(entry.spec, mid, t).value;
          worst = std::max(worst, std::abs(direct - chained));
        }
      }
    }
    CHECK(worst < 1e-7);
  }
}

TEST_CASE("flow reproduces the generator as t goes to zero at first order") {
  const cplx z{0.4, 0.2};
  for (const char* name : {"linear_contraction", "logistic", "parabolic_boundary"}) {
    CAPTURE(name);
    const auto& entry = *find_generator(name);
    const cplx g = entry.spec.field.value(z);
    const double e3 = std::abs((flow(entry.spec, z, 1e-3).value - z) / 1e-3 - g);
    const double e4 = std::abs((flow(entry.spec, z, 1e-4).value - z) / 1e-4 - g);
    CHECK(e3 < 1e-2);
    const double order = std::log10(e3 / e4);
    CHECK(order >= 0.9);
  }
}

TEST_CASE("classification identifies the catalogue") {
  const auto c1 = classify(find_generator("linear_contraction")->spec);
  CHECK(c1.kind == SemigroupKind::elliptic);
  CHECK(std::abs(c1.dw_point) < 1e-10);
  CHECK(std::abs(c1.lambda - cplx{1.0, 0.0}) < 1e-10);
  CHECK_FALSE(c1.no_attraction);

  const auto c2 = classify(find_generator("linear_contraction_2x")->spec);
  CHECK(std::abs(c2.lambda - cplx{2.0, 0.0}) < 1e-10);

  const auto c3 = classify(find_generator("rotation")->spec);
  CHECK(c3.kind == SemigroupKind::elliptic);
  CHECK(std::abs(c3.lambda - cplx{0.0, -1.0}) < 1e-10);
  CHECK(c3.no_attraction);

  const auto c4 = classify(find_generator("spiral")->spec);
  CHECK(std::abs(c4.lambda - cplx{0.5, 1.0}) < 1e-10);
  CHECK_FALSE(c4.no_attraction);

  const auto c5 = classify(find_generator("logistic")->spec);
  CHECK(c5.kind == SemigroupKind::elliptic);
  CHECK(std::abs(c5.dw_point) < 1e-10);
  CHECK(std::abs(c5.lambda - cplx{1.0, 0.0}) < 1e-10);

  const auto c6 = classify(find_generator("parabolic_boundary")->spec);
  CHECK(c6.kind == SemigroupKind::non_elliptic);
  CHECK(std::abs(c6.dw_point - cplx{1.0, 0.0}) < 1e-9);
  CHECK(c6.lambda == cplx{0.0, 0.0});

  const auto c7 = classify(find_generator("bp_halfplane")->spec);
  CHECK(c7.kind == SemigroupKind::elliptic);
  CHECK(std::abs(c7.dw_point) < 1e-10);
  CHECK(std::abs(c7.lambda - cplx{1.0, 0.0}) < 1e-10);

  const auto c8 = classify(generator_from_field(constant_fn(0.0), "zero"));
  CHECK(c8.kind == SemigroupKind::trivial);
}

TEST_CASE("classification reports a flow that has not settled") {
  const GeneratorSpec slow = generator_from_field(
      AnalyticFn::closed_form([](cplx z) { return 0.01 * (1.0 - z) * (1.0 - z); },
                              [](cplx z) { return -0.02 * (1.0 - z); }, "slow parabolic"),
      "slow");
  CHECK_THROWS_AS(classify(slow), ClassifyAmbiguous);
  try {
    classify(slow);
  } catch (const ClassifyAmbiguous& e) {
    CHECK(e.trajectory_tail.size() == 5);
    const cplx last = e.trajectory_tail.back();
    CHECK(std::abs(last) < 1.0);
    CHECK(last.real() > 0.2);
  }
}

TEST_CASE("classification finds an off origin fixed point") {
  const cplx a{0.3, 0.2};
  const double om = 1.0 - std::norm(a);
  const GeneratorSpec shifted = generator_from_field(
      AnalyticFn::closed_form(
          [a, om](cplx z) { return (a - z) * (1.0 - std::conj(a) * z) / om; },
          [a, om](cplx z) {
            return (-(1.0 - std::conj(a) * z) - std::conj(a) * (a - z)) / om;
          },
          "shifted contraction"),
      "shifted");
  const auto cls = classify(shifted);
  CHECK(cls.kind == SemigroupKind::elliptic);
  CHECK(std::abs(cls.dw_point - a) < 1e-9);
  CHECK(std::abs(cls.lambda - cplx{1.0, 0.0}) < 1e-9);

  // Conjugated flow phi_a(exp(-t) phi_a(z)) and Koenigs map -(1-|a|^2) phi_a.
  const cplx z{-0.2, 0.5};
  const cplx expected = mobius(a, std::exp(-1.0) * mobius(a, z));
  CHECK(std::abs(flow(shifted, z, 1.0).value - expected) < 1e-8);
  const auto h = koenigs_map(shifted, cls);
  for (cplx w : map_samples()) {
    CHECK(std::abs(h.value(w) - (-om * mobius(a, w))) < 1e-7);
  }
}

TEST_CASE("koenigs maps match closed forms on the catalogue") {
  const auto samples = map_samples();
  for (const auto& entry : generator_catalogue()) {
    CAPTURE(entry.name);
    REQUIRE(entry.koenigs_closed.valid());
    const auto cls = classify(entry.spec);
    const auto h = koenigs_map(entry.spec, cls);
    double worst = 0.0;
    for (cplx z : samples) {
      const cplx ref = entry.koenigs_closed.value(z);
      worst = std::max(worst, std::abs(h.value(z) - ref) / std::max(1.0, std::abs(ref)));
    }
    CHECK(worst < 1e-8);
    if (cls.kind == SemigroupKind::elliptic) {
      CHECK(std::abs(h.value(cls.dw_point)) < 1e-12);
      CHECK(std::abs(h.derivative(cls.dw_point) - cplx{1.0, 0.0}) < 1e-10);
    } else {
      CHECK(std::abs(h.value(cplx{0.0, 0.0})) < 1e-12);
    }
  }
}

TEST_CASE("koenigs conjugation identities hold along the flow") {
  const auto samples = map_samples();
  for (const auto& entry : generator_catalogue()) {
    CAPTURE(entry.name);
    const auto cls = classify(entry.spec);
    const auto h = koenigs_map(entry.spec, cls);
    for (double t : {0.1, 1.0}) {
      double worst = 0.0;
      for (cplx z : samples) {
        const cplx moved = flow_point(entry, z, t);
        const cplx lhs = h.value(moved);
        const cplx rhs = cls.kind == SemigroupKind::elliptic
                             ? std::exp(-cls.lambda * t) * h.value(z)
                             : h.value(z) + cplx{0.0, t};
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      CHECK(worst < 1e-6);
      if (entry.name == std::string("linear_contraction_2x")) CHECK(worst < 1e-7);
    }
  }
}

TEST_CASE("gamma symbols match their antiderivatives") {
  const auto samples = map_samples();
  struct Probe {
    const char* name;
    std::function<cplx(cplx)> reference;
  };
  const std::vector<Probe> probes{
      {"linear_contraction", [](cplx z) { return -z; }},
      {"linear_contraction_2x", [](cplx z) { return -0.5 * z; }},
      {"rotation", [](cplx z) { return cplx{0.0, -1.0} * z; }},
      {"logistic", [](cplx z) { return std::log(1.0 - z); }},
      {"bp_halfplane", [](cplx z) { return z - 2.0 * std::log(1.0 + z); }},
  };
  for (const auto& probe : probes) {
    CAPTURE(probe.name);
    const auto& entry = *find_generator(probe.name);
    const auto cls = classify(entry.spec);
    const auto gamma = gamma_symbol(entry.spec, cls);
    double worst = 0.0;
    for (cplx z : samples) {
      worst = std::max(worst, std::abs(gamma.value(z) - probe.reference(z)));
    }
    CHECK(worst < 1e-8);
    CHECK(std::abs(gamma.value(cls.dw_point)) < 1e-12);
    // gamma'(tau) = -1/lambda by the continuity extension; the extension
    // evaluates at push-off radius 1e-6, which bounds its accuracy.
    CHECK(std::abs(gamma.derivative(cls.dw_point) + 1.0 / cls.lambda) < 5e-6);
  }

  // Non-elliptic symbols coincide with the Koenigs map.
  const auto& parabolic = *find_generator("parabolic_boundary");
  const auto cls = classify(parabolic.spec);
  const auto gamma = gamma_symbol(parabolic.spec, cls);
  const auto h = koenigs_map(parabolic.spec, cls);
  for (cplx z : samples) {
    CHECK(std::abs(gamma.value(z) - h.value(z)) < 1e-12);
  }
}

TEST_CASE("log koenigs offset keeps the shifted image in a half plane") {
  const auto& parabolic = *find_generator("parabolic_boundary");
  const auto cls = classify(parabolic.spec);
  const auto H = log_koenigs_symbol(parabolic.spec, cls);

  // Recover the offset from H(0) = log(-w0).
  const cplx w0 = -std::exp(H.value(cplx{0.0, 0.0}));
  CHECK(std::abs(w0 - cplx{0.0, -1.0}) < 0.01);

  const auto& h_closed = parabolic.koenigs_closed;
  for (int j = 0; j < 16; ++j) {
    const cplx z = 0.999 * boundary_point(2.0 * pi * j / 16.0);
    CHECK((h_closed.value(z) - w0).imag() > 0.4);
    const cplx expected = h_closed.derivative(z) / (h_closed.value(z) - w0);
    CHECK(std::abs(H.derivative(z) - expected) < 1e-6 * std::abs(expected));
  }

  // Elliptic case: the offset is read off the sampled minimum of Im z.
  const auto& contraction = *find_generator("linear_contraction");
  const auto ccls = classify(contraction.spec);
  const auto Hc = log_koenigs_symbol(contraction.spec, ccls);
  const cplx wc = -std::exp(Hc.value(cplx{0.0, 0.0}));
  CHECK(std::abs(wc - cplx{0.0, -1.499}) < 1e-9);
  CHECK(std::abs(Hc.value(cplx{0.3, 0.0}) - std::log(cplx{0.3, 0.0} - wc)) < 1e-9);
}

TEST_CASE("bloch condition profiles match closed forms") {
  const std::vector<double> radii{0.25, 0.5, 0.75, 0.9, 0.99, 0.999};

  const auto plain = bloch_condition_profile(find_generator("linear_contraction")->spec, false, radii);
  REQUIRE(plain.profile.values.size() == radii.size());
  CHECK(plain.excluded_zeros.size() == 1);
  CHECK(std::abs(plain.excluded_zeros.front()) < 1e-10);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    CHECK(plain.profile.values[i] == doctest::Approx((1.0 - r * r) / r).epsilon(1e-12));
  }
  CHECK(decay_slope(plain.profile) < -0.5);

  const auto logrot = bloch_condition_profile(find_generator("rotation")->spec, true, radii);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    const double om = 1.0 - r * r;
    CHECK(logrot.profile.values[i] == doctest::Approx(om * std::log(1.0 / om) / r).epsilon(1e-12));
  }
  CHECK(decay_slope(logrot.profile) < -0.5);

  const auto grow = bloch_condition_profile(find_generator("parabolic_boundary")->spec, false,
                                            {0.5, 0.9, 0.99});
  CHECK(grow.excluded_zeros.empty());
  CHECK(grow.profile.values[0] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(grow.profile.values[1] == doctest::Approx(19.0).epsilon(1e-9));
  CHECK(grow.profile.values[2] == doctest::Approx(199.0).epsilon(1e-9));
  CHECK(decay_slope(grow.profile, 0.4) > 0.5);

  // A radius inside the exclusion ball of the origin reports 0.
  const auto masked = bloch_condition_profile(find_generator("linear_contraction")->spec, false, {0.05});
  CHECK(masked.profile.values[0] == 0.0);

  CHECK_THROWS_AS(bloch_condition_profile(generator_from_field(constant_fn(0.0), "zero"), false, radii),
                  std::domain_error);
}

TEST_CASE("catalogue flows stay univalent at fixed times") {
  for (const auto& entry : generator_catalogue()) {
    CAPTURE(entry.name);
    for (double t : {0.5, 1.0}) {
      const auto phi = AnalyticFn::closed_form(
          [&entry, t](cplx z) { return flow_point(entry, z, t); },
          [&entry, t](cplx z) {
            const cplx g = entry.spec.field.value(z);
            if (std::abs(g) < 1e-14) return cplx{1.0, 0.0};
            return entry.spec.field.value(flow_point(entry, z, t)) / g;
          },
          entry.name);
      CHECK(univalence_probe(phi, 4, 0.95).injective_on_mesh);
    }
  }
}

TEST_CASE("denjoy wolff attraction is monotone along the flow") {
  const cplx z0{0.3, 0.2};
  for (const auto& entry : generator_catalogue()) {
    if (entry.name == "rotation") continue;
    CAPTURE(entry.name);
    const auto cls = classify(entry.spec);
    double prev = std::abs(z0 - cls.dw_point);
    for (double t : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
      const double d = std::abs(flow_point(entry, z0, t, 1e-9) - cls.dw_point);
      CHECK(d < prev);
      prev = d;
    }
  }
}

TEST_CASE("flow rejects bad arguments and reports stalled steps") {
  const auto& entry = *find_generator("linear_contraction");
  CHECK_THROWS_AS(flow(entry.spec, cplx{0.2, 0.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(flow(entry.spec, cplx{1.0, 0.0}, 1.0), std::invalid_argument);

  // Constant outward field hits the boundary at t = 0.1 and cannot continue.
  const GeneratorSpec outward = generator_from_field(constant_fn(1.0), "outward");
  CHECK_THROWS_AS(flow(outward, cplx{0.9, 0.0}, 1.0), FlowStepUnderflow);
  try {
    flow(outward, cplx{0.9, 0.0}, 1.0);
  } catch (const FlowStepUnderflow& e) {
    CHECK(e.t_reached > 0.05);
    CHECK(e.t_reached < 0.11);
    CHECK(std::abs(e.x_reached) < 1.0);
    CHECK(e.x_reached.real() > 0.98);
  }
}

TEST_CASE("catalogue lookup and closed flow dispatch") {
  CHECK(generator_catalogue().size() == 7);
  CHECK(find_generator("nonexistent") == nullptr);
  const auto* logistic = find_generator("logistic");
  REQUIRE(logistic != nullptr);
  CHECK(logistic->spec.name == "logistic");
  const cplx z{0.2, 0.3};
  CHECK(std::abs(flow_point(*logistic, z, 0.7) - oracle_flow_logistic(z, 0.7)) < 1e-12);
  const auto* bp = find_generator("bp_halfplane");
  REQUIRE(bp != nullptr);
  CHECK_FALSE(static_cast<bool>(bp->flow_closed));
  CHECK(std::abs(flow_point(*bp, z, 0.5) - flow(bp->spec, z, 0.5).value) < 1e-15);
}
