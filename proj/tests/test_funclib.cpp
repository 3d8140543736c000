#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "holosem/analytic_fn.hpp"

using namespace holosem;

namespace {

std::mt19937_64 rng_for(const char* tag) {
  std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
  return std::mt19937_64(seq);
}

cplx random_disk_point(std::mt19937_64& rng, double r_max = 0.95) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return std::polar(r_max * std::sqrt(unit(rng)), 2.0 * pi * unit(rng));
}

// Observed order of the centered difference against the declared derivative.
double fd_order(const AnalyticFn& f, cplx z) {
  auto err = [&](double h) {
    const cplx fd = (f.value(z + h) - f.value(z - h)) / (2.0 * h);
    return std::abs(fd - f.derivative(z));
  };
  const double e3 = err(1e-3), e4 = err(1e-4);
  if (e4 == 0.0) return 2.0;
  return std::log10(e3 / e4);
}

}  // namespace

TEST_CASE("log test function at the origin") {
  const auto l = log_test(cplx(0.3, 0.4));
  CHECK(std::abs(l.value(0.0) - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("power test function at the origin") {
  const cplx w(0.6, 0.0);
  const auto f = power_test(w, 0.25, 0.5);
  CHECK(std::abs(f.value(0.0) - std::pow(1.0 - std::norm(w), 0.5)) < 1e-15);
}

TEST_CASE("beta test for (2,1,0.25) uses lambda = 0.25") {
  // beta^alpha_w = f_{w,alpha,lambda} with lambda = (s-(p-2))/p - alpha.
  const cplx w(0.5, 0.2);
  const auto beta = beta_test(w, 2.0, 1.0, 0.25);
  const auto direct = power_test(w, 0.25, 0.25);
  auto rng = rng_for("beta-lambda");
  for (int i = 0; i < 32; ++i) {
    const cplx z = random_disk_point(rng);
    CHECK(std::abs(beta.value(z) - direct.value(z)) < 1e-14);
  }
}

TEST_CASE("invalid test function parameters are rejected") {
  CHECK_THROWS(power_test(0.5, 0.25, 0.0));
  CHECK_THROWS(power_test(0.5, -0.1, 0.5));
  CHECK_THROWS(beta_test(0.5, 2.0, 1.0, 0.5));  // lambda = 0
}

TEST_CASE("derivatives match centered differences at order >= 1.9") {
  auto rng = rng_for("fd-order");
  const AnalyticFn fns[] = {log_test(cplx(0.7, -0.2)), power_test(cplx(0.4, 0.5), 0.25, 0.25),
                            log_midpoint_test(cplx(0.6, 0.3)), log_singular(), koebe()};
  for (const auto& f : fns) {
    for (int i = 0; i < 8; ++i) {
      const cplx z = random_disk_point(rng, 0.6);
      CHECK(fd_order(f, z) >= 1.9);
    }
  }
}

TEST_CASE("Re l_w stays above 1 - log 2 on the disk") {
  auto rng = rng_for("lw-lower");
  const double floor = 1.0 - std::log(2.0);
  for (const double wr : {0.3, 0.9, 0.999}) {
    const auto l = log_test(std::polar(wr, 1.1));
    for (int i = 0; i < 200; ++i) {
      const cplx z = random_disk_point(rng, 0.999);
      CHECK(l.value(z).real() >= floor - 1e-12);
    }
  }
}

TEST_CASE("beta test dominates (1-|w|^2)^{-alpha} on the box S(w)") {
  // Lower bound |beta^a_w| >= 2^{-(alpha+lambda)} (1-|w|^2)^{-alpha} on S(w).
  const double p = 2.0, s = 1.0, alpha = 0.25;
  const double lambda = (s - (p - 2.0)) / p - alpha;
  const double c = std::pow(2.0, -(alpha + lambda));
  auto rng = rng_for("beta-box-lower");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const double wr : {0.9, 0.99, 0.999}) {
    const cplx w = std::polar(wr, 0.4);
    const auto beta = beta_test(w, p, s, alpha);
    const auto box = carleson_box_of_point(w);
    const double bound = c * std::pow(1.0 - std::norm(w), -alpha);
    for (int i = 0; i < 200; ++i) {
      const double r = 1.0 - box.depth * unit(rng);
      const double t = box.arc.center + pi * box.arc.length * (2.0 * unit(rng) - 1.0);
      const cplx z = std::polar(r, t);
      REQUIRE(box.contains(z));
      CHECK(std::abs(beta.value(z)) >= bound * (1.0 - 1e-12));
    }
  }
}

TEST_CASE("taylor compose with identity on either side") {
  auto rng = rng_for("compose-identity");
  TaylorForm g;
  g.coeff = {cplx(0.1, 0.05), cplx(0.5, 0.0), cplx(0.0, 0.25), cplx(-0.125, 0.0)};
  const TaylorForm id = taylor_monomial(1, 8);

  const TaylorForm left = taylor_compose(id, g);   // e_1(g) = g
  const TaylorForm right = taylor_compose(g, id);  // g(e_1) = g
  for (std::size_t k = 0; k < g.coeff.size(); ++k) {
    CHECK(std::abs(left.coeff[k] - g.coeff[k]) < 1e-14);
    CHECK(std::abs(right.coeff[k] - g.coeff[k]) < 1e-14);
  }
}

TEST_CASE("taylor compose of e_2 with z/2") {
  TaylorForm half;
  half.coeff = {0.0, 0.5};
  const TaylorForm out = taylor_compose(taylor_monomial(2, 4), half);
  REQUIRE(out.coeff.size() >= 3);
  CHECK(std::abs(out.coeff[0]) < 1e-15);
  CHECK(std::abs(out.coeff[1]) < 1e-15);
  CHECK(std::abs(out.coeff[2] - cplx(0.25, 0.0)) < 1e-15);
}

TEST_CASE("taylor evaluation agrees with the closed form it truncates") {
  // log(1/(1-z)) = sum z^k/k.
  TaylorForm series;
  series.coeff.assign(taylor_default_order + 1, 0.0);
  for (std::size_t k = 1; k <= taylor_default_order; ++k) series.coeff[k] = 1.0 / double(k);
  const auto exact = log_singular();
  auto rng = rng_for("taylor-vs-closed");
  for (int i = 0; i < 64; ++i) {
    const cplx z = random_disk_point(rng, 0.8);
    CHECK(std::abs(series.eval(z) - exact.value(z)) < 1e-12);
    CHECK(std::abs(series.eval_derivative(z) - exact.derivative(z)) < 1e-10);
  }
}

TEST_CASE("univalence probe verdicts") {
  CHECK(univalence_probe(monomial(1), 6).injective_on_mesh);
  const auto quad = univalence_probe(monomial(2), 6);
  CHECK_FALSE(quad.injective_on_mesh);
  REQUIRE(quad.first_collision.has_value());
  const auto [z1, z2] = *quad.first_collision;
  CHECK(std::abs(z1 + z2) < 1e-12);  // antipodal pair
  CHECK(univalence_probe(koebe(), 6).injective_on_mesh);
}

TEST_CASE("taylor serialization round trip") {
  TaylorForm f;
  f.coeff = {cplx(1.0, -2.0), cplx(0.0, 0.5), cplx(1.0 / 3.0, 0.0)};
  f.r_max = 0.75;
  f.tail_bound = 1e-9;
  std::stringstream buf;
  write_taylor(buf, f);
  const TaylorForm g = read_taylor(buf);
  REQUIRE(g.coeff.size() == f.coeff.size());
  for (std::size_t k = 0; k < f.coeff.size(); ++k) CHECK(std::abs(f.coeff[k] - g.coeff[k]) < 1e-15);
  CHECK(g.r_max == doctest::Approx(f.r_max));
  CHECK(g.tail_bound == doctest::Approx(f.tail_bound));
}

TEST_CASE("taylor parse errors carry the line number") {
  std::stringstream bad("0 1.0 0.0\nnot-a-row\n");
  CHECK_THROWS_WITH_AS(read_taylor(bad), doctest::Contains("line 2"), std::runtime_error);
}
