#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "covox/covariant_oscillator.hpp"
#include "covox/errors.hpp"
#include "covox/special_functions.hpp"

namespace covox {

//! Excitation probabilities p_k with the mass not yet captured in `tail`;
//! sum(p) + tail = 1.
struct ProbabilityDistribution {
  std::vector<double> p;
  double tail = 0.0;
};

//! p_k = C_k^2 with the truncation K chosen so tail <= tol. For n = 0 this
//! is geometric: p_k = (1 - T) T^k with T = tanh^2(eta).
inline ProbabilityDistribution excitation_probabilities(int n, Rapidity eta,
                                                        double tol) {
  ExpansionSpectrum s = expansion_for_tolerance(n, eta, tol);
  ProbabilityDistribution d;
  d.p.reserve(s.coefficients.size());
  for (double c : s.coefficients)
    d.p.push_back(c * c);
  d.tail = s.tail_bound;
  return d;
}

//! Shannon entropy S = -sum p_k ln p_k (nats) of the truncated distribution.
inline double entropy(int n, Rapidity eta, double tol) {
  ProbabilityDistribution d = excitation_probabilities(n, eta, tol);
  detail::KahanSum acc;
  for (double p : d.p)
    if (p > 0.0)
      acc.add(-p * std::log(p));
  return acc.value();
}

//! Closed form of the ground-state entropy,
//! S = cosh^2(eta) ln cosh^2(eta) - sinh^2(eta) ln sinh^2(eta).
inline double entropy_ground_closed_form(double eta) {
  if (eta == 0.0)
    return 0.0;
  double ch2 = std::cosh(eta) * std::cosh(eta);
  double sh2 = std::sinh(eta) * std::sinh(eta);
  return ch2 * std::log(ch2) - sh2 * std::log(sh2);
}

struct BoostedWidths {
  double var_z = 0.5;
  double var_t = 0.5;
};

//! Variances of z and t in the boosted ground-state density |psi_eta^0|^2:
//! var_z = var_t = cosh(2 eta)/2.
inline BoostedWidths boosted_widths(Rapidity eta) {
  double v = 0.5 * std::cosh(2.0 * eta.value());
  return {v, v};
}

struct LightconeWidths {
  double var_u = 0.5;
  double var_v = 0.5;
};

//! Light-cone variances of the boosted ground state: var_u = e^(2 eta)/2,
//! var_v = e^(-2 eta)/2; the uncertainty product stays 1/2.
inline LightconeWidths lightcone_widths(Rapidity eta) {
  return {0.5 * std::exp(2.0 * eta.value()),
          0.5 * std::exp(-2.0 * eta.value())};
}

struct FormFactorPoint {
  double q_squared = 0.0;
  double F = 1.0;
};

//! Breit-frame overlap of ground states boosted to -eta and +eta,
//! F(eta) = integral of psi_{-eta}^0 psi_{+eta}^0 over (z, t), by 2D
//! trapezoid quadrature with the extent scaled to the overlap width
//! 1/sqrt(2 cosh 2 eta). Reported against q^2 = 4 sinh^2(eta) (unit hadron
//! mass); the closed form is 1/cosh(2 eta) = 1/(1 + q^2/2).
inline FormFactorPoint coherent_form_factor(Rapidity eta) {
  Rapidity fwd(eta.value()), bwd(-eta.value());
  double sigma = 1.0 / std::sqrt(2.0 * std::cosh(2.0 * eta.value()));
  Quadrature q = trapezoid(12.0 * sigma, 385);
  double overlap = integrate_2d(
      [&](double z, double t) {
        SpacetimePoint p{z, t};
        return psi_boosted(0, bwd, p) * psi_boosted(0, fwd, p);
      },
      q, q);
  double sh = std::sinh(eta.value());
  return {4.0 * sh * sh, overlap};
}

//! |integral of (1/sqrt(pi)) e^(-z^2) e^(iqz) dz| = e^(-q^2/4), computed by
//! quadrature of the cosine part (the sine part vanishes by symmetry).
//! Gauss-Hermite resolves oscillations only up to q ~ sqrt(2 * nodes), so
//! larger q falls back to the uniform trapezoid oracle.
inline double static_form_factor(double q) {
  if (!std::isfinite(q))
    throw domain_error("static_form_factor: q must be finite");
  constexpr double inv_sqrt_pi = 0.5641895835477563;
  double result;
  if (std::abs(q) <= 16.0) {
    result = integrate_1d([&](double z) { return inv_sqrt_pi * std::cos(q * z); },
                          default_gauss_hermite());
  } else {
    result = integrate_1d(
        [&](double z) {
          return inv_sqrt_pi * std::exp(-z * z) * std::cos(q * z);
        },
        default_trapezoid());
  }
  return std::abs(result);
}

struct MassSpectrumEntry {
  int lambda = 0;
  double mass_squared = 1.0;
  long long degeneracy = 1;
};

//! Mass-squared tower m0^2 + lambda + 1 for lambda = 0..lambda_max, with the
//! degeneracy counted by explicit enumeration of index triples (a, b, n)
//! with a + b + n = lambda. The enumeration is the ground truth; the closed
//! form (lambda+1)(lambda+2)/2 is an invariant checked against it in tests.
inline std::vector<MassSpectrumEntry> mass_spectrum(int lambda_max,
                                                    double m0_squared) {
  if (lambda_max < 0 || lambda_max > 10000)
    throw domain_error("mass_spectrum: lambda_max " +
                       std::to_string(lambda_max) + " outside [0, 10^4]");
  if (!std::isfinite(m0_squared))
    throw domain_error("mass_spectrum: m0_squared must be finite");
  std::vector<MassSpectrumEntry> entries;
  entries.reserve(static_cast<size_t>(lambda_max) + 1);
  for (int lam = 0; lam <= lambda_max; ++lam) {
    long long count = 0;
    for (int a = 0; a <= lam; ++a)
      for (int b = 0; a + b <= lam; ++b)
        ++count; // n = lam - a - b is determined
    entries.push_back({lam, m0_squared + lam + 1.0, count});
  }
  return entries;
}

} // namespace covox
