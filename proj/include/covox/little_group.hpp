#pragma once

#include <cmath>
#include <string>

#include "covox/errors.hpp"

namespace covox {

//! Real 2x2 matrix [[a, b], [c, d]] with determinant 1 (within 1e-12 on all
//! construction paths provided here).
struct Unimodular2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;

  double trace() const noexcept { return a + d; }
  double det() const noexcept { return a * d - b * c; }
  Unimodular2 inverse() const noexcept { return {d, -b, -c, a}; }
};

inline Unimodular2 operator*(const Unimodular2 &x, const Unimodular2 &y) noexcept {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline constexpr double unimodular_tol = 1e-12;

//! Largest absolute entrywise difference.
inline double max_entry_distance(const Unimodular2 &x, const Unimodular2 &y) noexcept {
  double m = std::abs(x.a - y.a);
  m = std::max(m, std::abs(x.b - y.b));
  m = std::max(m, std::abs(x.c - y.c));
  m = std::max(m, std::abs(x.d - y.d));
  return m;
}

namespace detail {

inline void require_unimodular(const Unimodular2 &m, const char *op,
                               double tol = 1e-9) {
  if (!(std::abs(m.det() - 1.0) <= tol))
    throw domain_error(std::string(op) + ": matrix determinant " +
                       std::to_string(m.det()) + " is not 1");
}

inline void require_boost_range(double eta, const char *op) {
  if (!(std::abs(eta) <= 50.0))
    throw domain_error(std::string(op) + ": |eta| = " +
                       std::to_string(std::abs(eta)) +
                       " exceeds overflow guard 50");
}

} // namespace detail

//! Unimodular rotation [[cos t, -sin t], [sin t, cos t]].
inline Unimodular2 rotation(double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  return {c, -s, s, c};
}

//! Squeeze diag(e^(-eta/2), e^(eta/2)). Guarded to |eta| <= 50.
inline Unimodular2 boost(double eta) {
  detail::require_boost_range(eta, "boost");
  return {std::exp(-0.5 * eta), 0.0, 0.0, std::exp(0.5 * eta)};
}

//! Lower triangular [[1, 0], [gamma, 1]].
inline Unimodular2 triangular(double gamma) { return {1.0, 0.0, gamma, 1.0}; }

//! boost(eta) * rotation(theta) * boost(-eta); closed form
//! [[cos t, -e^(-eta) sin t], [e^(eta) sin t, cos t]].
inline Unimodular2 boosted_rotation(double theta, double eta) {
  detail::require_boost_range(eta, "boosted_rotation");
  return boost(eta) * rotation(theta) * boost(-eta);
}

//! boost(eta) * [[cosh l, sinh l], [sinh l, cosh l]] * boost(-eta); closed
//! form [[cosh l, e^(-eta) sinh l], [e^(eta) sinh l, cosh l]].
inline Unimodular2 boosted_hyperbolic(double lambda, double eta) {
  detail::require_boost_range(eta, "boosted_hyperbolic");
  Unimodular2 hyp{std::cosh(lambda), std::sinh(lambda),
                  std::sinh(lambda), std::cosh(lambda)};
  return boost(eta) * hyp * boost(-eta);
}

//! Trace classification of a unimodular matrix. The bands are |tr| < 2
//! (rotation-like), |tr| = 2 within tol (shear-like), |tr| > 2
//! (hyperbolic-like).
enum class LittleGroupKind {
  massive_like,        // |trace| < 2 - tol
  massless_like,       // |trace| within tol of 2
  imaginary_mass_like, // |trace| > 2 + tol
};

inline const char *to_string(LittleGroupKind k) noexcept {
  switch (k) {
  case LittleGroupKind::massive_like:
    return "MassiveLike";
  case LittleGroupKind::massless_like:
    return "MasslessLike";
  default:
    return "ImaginaryMassLike";
  }
}

inline LittleGroupKind classify(const Unimodular2 &m, double tol = 1e-9) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw domain_error("classify: tol must be positive and finite");
  detail::require_unimodular(m, "classify");
  double t = std::abs(m.trace());
  if (t < 2.0 - tol)
    return LittleGroupKind::massive_like;
  if (t > 2.0 + tol)
    return LittleGroupKind::imaginary_mass_like;
  return LittleGroupKind::massless_like;
}

//! Result of conjugating by rotation(alpha) so the diagonal becomes equal.
struct EquiDiagonalForm {
  double alpha;
  Unimodular2 matrix;
};

//! Finds alpha in (-pi/4, pi/4] with rotation(alpha) * m * rotation(-alpha)
//! equi-diagonal. The diagonal difference of the conjugate is
//! cos(2a)(m.a - m.d) - sin(2a)(m.b + m.c), a sinusoid in 2a, so
//! 2 alpha = atan2(m.a - m.d, m.b + m.c) reduced into (-pi/2, pi/2].
//! Tie-break at the boundary: +pi/4.
inline EquiDiagonalForm equi_diagonalize(const Unimodular2 &m) {
  detail::require_unimodular(m, "equi_diagonalize");
  double num = m.a - m.d;
  double den = m.b + m.c;
  double two_alpha = (num == 0.0 && den == 0.0) ? 0.0 : std::atan2(num, den);
  if (two_alpha > 0.5 * M_PI)
    two_alpha -= M_PI;
  else if (two_alpha <= -0.5 * M_PI)
    two_alpha += M_PI;
  double alpha = 0.5 * two_alpha;
  Unimodular2 r = rotation(alpha);
  return {alpha, r * m * rotation(-alpha)};
}

//! Boosted rotation with theta(eta) = arcsin(gamma e^(-eta)); its lower-left
//! entry e^eta sin(theta) equals gamma algebraically and the matrix tends to
//! triangular(gamma) as eta grows. Requires |gamma| e^(-eta) <= 1.
inline Unimodular2 contraction_sequence(double gamma, double eta) {
  detail::require_boost_range(eta, "contraction_sequence");
  double x = std::abs(gamma) * std::exp(-eta);
  if (!(x <= 1.0))
    throw domain_error("contraction_sequence: |gamma| e^(-eta) = " +
                       std::to_string(x) + " exceeds 1");
  double theta = std::asin(gamma * std::exp(-eta));
  return boosted_rotation(theta, eta);
}

} // namespace covox
