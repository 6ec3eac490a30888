#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "covox/errors.hpp"
#include "covox/special_functions.hpp"

namespace covox {

//! Boost parameter eta. Certified range |eta| <= 10: expansion truncation
//! bounds are established only there.
class Rapidity {
public:
  explicit Rapidity(double eta) : m_eta(eta) {
    if (!std::isfinite(eta) || std::abs(eta) > 10.0)
      throw domain_error("Rapidity: eta = " + std::to_string(eta) +
                         " outside certified range |eta| <= 10");
  }
  double value() const noexcept { return m_eta; }

private:
  double m_eta;
};

//! eta = (1/2) ln((1+beta)/(1-beta)); odd in beta. Requires |beta| < 1.
inline Rapidity rapidity_from_beta(double beta) {
  if (!(std::abs(beta) < 1.0))
    throw domain_error("rapidity_from_beta: |beta| = " +
                       std::to_string(std::abs(beta)) + " must be < 1");
  return Rapidity(std::atanh(beta));
}

//! Longitudinal separation z and time separation t, oscillator units.
struct SpacetimePoint {
  double z = 0.0;
  double t = 0.0;
};

//! z' = cosh(eta) z - sinh(eta) t, t' = cosh(eta) t - sinh(eta) z.
//! Preserves z^2 - t^2. This is the lab-to-rest substitution map: the state
//! boosted by +eta evaluated at p equals the rest state at boost_point(p, eta).
inline SpacetimePoint boost_point(SpacetimePoint p, Rapidity eta) {
  double ch = std::cosh(eta.value()), sh = std::sinh(eta.value());
  return {ch * p.z - sh * p.t, ch * p.t - sh * p.z};
}

struct LightconeCoords {
  double u = 0.0;
  double v = 0.0;
};

//! u = (z+t)/sqrt(2), v = (z-t)/sqrt(2); u^2 + v^2 = z^2 + t^2.
//! Under boost_point(., eta) these scale as u -> e^(-eta) u, v -> e^(eta) v;
//! equivalently the boosted state's support stretches along u by e^(+eta).
inline LightconeCoords lightcone(SpacetimePoint p) {
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  return {(p.z + p.t) * inv_sqrt2, (p.z - p.t) * inv_sqrt2};
}

//! Space-time coordinates of the two constituents.
struct QuarkPairCoords {
  std::array<double, 4> xa{};
  std::array<double, 4> xb{};
};

struct CoordinateSplit {
  std::array<double, 4> hadron{};     // X = (xa + xb)/2
  std::array<double, 4> separation{}; // x = (xa - xb)/(2 sqrt(2))
};

inline CoordinateSplit split_coordinates(const QuarkPairCoords &q) {
  CoordinateSplit s;
  constexpr double inv_2sqrt2 = 0.3535533905932737622; // 1/(2 sqrt(2))
  for (int i = 0; i < 4; ++i) {
    s.hadron[i] = 0.5 * (q.xa[i] + q.xb[i]);
    s.separation[i] = (q.xa[i] - q.xb[i]) * inv_2sqrt2;
  }
  return s;
}

//! Rest-frame wave function with the time oscillator in its ground state:
//! [1/(pi 2^n n!)]^(1/2) H_n(z) e^(-(z^2+t^2)/2) = chi_n(z) chi_0(t).
inline double psi_rest(int n, SpacetimePoint p) {
  return chi(n, p.z) * chi(0, p.t);
}

//! Wave function of the hadron boosted to rapidity eta:
//! [1/(pi 2^n n!)]^(1/2) H_n((e^(-eta) u + e^(eta) v)/sqrt(2))
//!   * exp(-(e^(-2 eta) u^2 + e^(2 eta) v^2)/2), with (u,v) = lightcone(p).
//! Equals psi_rest(n, boost_point(p, eta)); at eta = 0 equals psi_rest(n, p).
inline double psi_boosted(int n, Rapidity eta, SpacetimePoint p) {
  LightconeCoords lc = lightcone(p);
  double em = std::exp(-eta.value()), ep = std::exp(eta.value());
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  // Rest-frame coordinates; zr^2 + tr^2 reproduces the quadratic form above.
  double zr = (em * lc.u + ep * lc.v) * inv_sqrt2;
  double tr = (em * lc.u - ep * lc.v) * inv_sqrt2;
  return chi(n, zr) * chi(0, tr);
}

//! Separable 4D solution chi_a(x) chi_b(y) chi_n(z) chi_0(t); the time
//! oscillator stays in its ground state.
inline double psi_cartesian_4d(int a, int b, int n, double x, double y,
                               double z, double t) {
  return chi(a, x) * chi(b, y) * chi(n, z) * chi(0, t);
}

//! Rest-frame decomposition of a boosted excited state: coefficients C_k of
//! sum_k C_k chi_{n+k}(z) chi_k(t).
struct ExpansionSpectrum {
  int n = 0;
  double eta = 0.0;
  std::vector<double> coefficients; // C_0..C_K
  double tail_bound = 0.0;          // 1 - sum C_k^2, clamped at 0
};

namespace detail {

// C_k = sech(eta)^(n+1) sqrt((n+k)!/(n! k!)) tanh(eta)^k, log-space to keep
// the factorial ratio finite for n+k beyond ~20.
inline double expansion_coefficient(int n, double eta, int k) {
  double th = std::tanh(eta);
  if (th == 0.0)
    return k == 0 ? 1.0 : 0.0;
  double lg = -(n + 1) * std::log(std::cosh(eta)) +
              0.5 * (std::lgamma(double(n + k + 1)) -
                     std::lgamma(double(n + 1)) - std::lgamma(double(k + 1))) +
              k * std::log(std::abs(th));
  double sign = (th < 0.0 && (k % 2 != 0)) ? -1.0 : 1.0;
  return sign * std::exp(lg);
}

} // namespace detail

//! Coefficients C_0..C_K and the probability not captured by them.
inline ExpansionSpectrum expansion_coefficients(int n, Rapidity eta, int K) {
  detail::require_index(n, chi_max_index, "expansion_coefficients");
  if (K < 0)
    throw domain_error("expansion_coefficients: K must be >= 0");
  ExpansionSpectrum s;
  s.n = n;
  s.eta = eta.value();
  s.coefficients.resize(static_cast<size_t>(K) + 1);
  detail::KahanSum sq;
  for (int k = 0; k <= K; ++k) {
    double c = detail::expansion_coefficient(n, eta.value(), k);
    s.coefficients[static_cast<size_t>(k)] = c;
    sq.add(c * c);
  }
  s.tail_bound = std::max(0.0, 1.0 - sq.value());
  return s;
}

inline constexpr int expansion_max_terms = 1000000;

//! Smallest-K spectrum with tail_bound <= tol. Throws tolerance_error when
//! more than expansion_max_terms coefficients would be needed (strong boosts
//! with tight tolerances).
inline ExpansionSpectrum expansion_for_tolerance(int n, Rapidity eta,
                                                 double tol) {
  detail::require_index(n, chi_max_index, "expansion_for_tolerance");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw domain_error("expansion_for_tolerance: tol must be positive");
  ExpansionSpectrum s;
  s.n = n;
  s.eta = eta.value();
  detail::KahanSum sq;
  double tail = 1.0;
  for (int k = 0; k < expansion_max_terms; ++k) {
    double c = detail::expansion_coefficient(n, eta.value(), k);
    s.coefficients.push_back(c);
    sq.add(c * c);
    tail = std::max(0.0, 1.0 - sq.value());
    if (tail <= tol) {
      s.tail_bound = tail;
      return s;
    }
  }
  throw tolerance_error("expansion_for_tolerance: tail still " +
                            std::to_string(tail) + " after " +
                            std::to_string(expansion_max_terms) +
                            " terms; requested tol " + std::to_string(tol),
                        tail);
}

//! Truncated rest-frame series sum_{k<=K} C_k chi_{n+k}(z) chi_k(t).
//! Converges to psi_boosted pointwise and in L2 as K grows; each term is an
//! eigenstate of the invariant Hamiltonian with eigenvalue (n+k) - k = n.
inline double series_reconstruct(int n, Rapidity eta, int K, SpacetimePoint p) {
  detail::require_index(n + K, chi_max_index, "series_reconstruct");
  if (K < 0)
    throw domain_error("series_reconstruct: K must be >= 0");
  std::vector<double> cz = chi_values(n + K, p.z);
  std::vector<double> ct = chi_values(K, p.t);
  detail::KahanSum acc;
  for (int k = 0; k <= K; ++k) {
    double c = detail::expansion_coefficient(n, eta.value(), k);
    acc.add(c * cz[static_cast<size_t>(n + k)] * ct[static_cast<size_t>(k)]);
  }
  return acc.value();
}

//! Normal coordinates y1 = (x1+x2)/sqrt(2), y2 = (x1-x2)/sqrt(2); applying
//! the map twice returns (x1, x2).
inline std::pair<double, double> normal_coordinates(double x1, double x2) {
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  return {(x1 + x2) * inv_sqrt2, (x1 - x2) * inv_sqrt2};
}

} // namespace covox
