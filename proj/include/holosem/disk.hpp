#pragma once

#include <cmath>
#include <complex>

// Geometry of the unit disk: Moebius involutions, boundary arcs, Carleson
// boxes and the hyperbolic metric.  Conventions used throughout the library:
//   - the circle has normalized length |T| = 1, so an arc length lives in (0,1]
//   - area measure dA is the plain Lebesgue measure, integral over D equals pi
//   - S(a) is the box over the arc centered at a/|a| with length 1-|a|;
//     S(0) is the whole disk.

namespace holosem {

using cplx = std::complex<double>;

constexpr double pi = 3.14159265358979323846;

struct MobiusJet {
  cplx value;
  cplx derivative;
};

// phi_a(z) = (a - z)/(1 - conj(a) z).  Self-inverse automorphism of D
// swapping 0 and a.  The derivative is (|a|^2 - 1)/(1 - conj(a) z)^2.
[[nodiscard]] inline MobiusJet mobius_jet(cplx a, cplx z) {
  const cplx d = 1.0 - std::conj(a) * z;
  return {(a - z) / d, (std::norm(a) - 1.0) / (d * d)};
}

[[nodiscard]] inline cplx mobius(cplx a, cplx z) {
  return (a - z) / (1.0 - std::conj(a) * z);
}

[[nodiscard]] inline cplx boundary_point(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

inline double wrap_angle(double t) {
  t = std::fmod(t, 2.0 * pi);
  if (t > pi) t -= 2.0 * pi;
  if (t <= -pi) t += 2.0 * pi;
  return t;
}

// Arc on the unit circle, normalized length.  A full arc (length 1) is the
// whole circle regardless of center.
struct ArcInterval {
  double center = 0.0;  // radians
  double length = 1.0;  // in (0, 1]

  [[nodiscard]] bool contains_angle(double angle) const {
    if (length >= 1.0) return true;
    return std::abs(wrap_angle(angle - center)) <= pi * length;
  }
  [[nodiscard]] bool contains(cplx boundary_pt) const {
    return contains_angle(std::arg(boundary_pt));
  }
};

// Carleson box over an arc: { z : 1 - |z| < depth, z/|z| in arc }.
// depth >= 1 degenerates to the whole disk (including the origin).
struct CarlesonBox {
  ArcInterval arc;
  double depth = 1.0;

  [[nodiscard]] bool contains(cplx z) const {
    if (depth >= 1.0) return std::abs(z) < 1.0;
    const double r = std::abs(z);
    if (r == 0.0 || 1.0 - r >= depth) return false;
    return arc.contains_angle(std::arg(z));
  }
};

[[nodiscard]] inline ArcInterval arc_of_point(cplx a) {
  const double r = std::abs(a);
  if (r == 0.0) return {0.0, 1.0};
  return {std::arg(a), 1.0 - r};
}

[[nodiscard]] inline CarlesonBox carleson_box_of_point(cplx a) {
  const ArcInterval arc = arc_of_point(a);
  return {arc, arc.length};
}

// |phi_z(w)|, the pseudo-hyperbolic distance.
[[nodiscard]] inline double pseudo_distance(cplx z, cplx w) {
  return std::abs((z - w) / (1.0 - std::conj(z) * w));
}

// delta(z,w) = (1/2) log((1+rho)/(1-rho)) = atanh(rho).
[[nodiscard]] inline double hyperbolic_distance(cplx z, cplx w) {
  return std::atanh(pseudo_distance(z, w));
}

// Hyperbolic midpoint between 0 and w; lies on the segment [0, w].
[[nodiscard]] inline cplx hyperbolic_midpoint(cplx w) {
  const double r = std::abs(w);
  if (r == 0.0) return {0.0, 0.0};
  const double m = std::tanh(0.5 * std::atanh(r));
  return w * (m / r);
}

// 1 - |phi_a(z)|^2 = (1-|a|^2)(1-|z|^2)/|1 - conj(a) z|^2, computed without
// cancellation near the boundary.
[[nodiscard]] inline double one_minus_abs2_mobius(cplx a, cplx z) {
  const double d = std::norm(1.0 - std::conj(a) * z);
  return (1.0 - std::norm(a)) * (1.0 - std::norm(z)) / d;
}

}  // namespace holosem
