#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "covox/errors.hpp"

namespace covox {

// Index caps. Raw Hermite values overflow double range near n ~ 170, and the
// plain recurrence is certified here only up to 32. The normalized
// eigenfunctions are bounded and evaluated by a stable recurrence, certified
// up to 512 (series reconstructions of strongly boosted states reach ~200).
inline constexpr int hermite_max_index = 32;
inline constexpr int chi_max_index = 512;

inline constexpr double pi_quarter_inv = 0.7511255444649425; // pi^(-1/4)

namespace detail {

//! Compensated (Kahan) accumulator; fixed-order, schedule-independent sums.
class KahanSum {
public:
  void add(double x) noexcept {
    double y = x - m_c;
    double t = m_sum + y;
    m_c = (t - m_sum) - y;
    m_sum = t;
  }
  double value() const noexcept { return m_sum; }

private:
  double m_sum = 0.0;
  double m_c = 0.0;
};

inline void require_index(int n, int max, const char *op) {
  if (n < 0 || n > max)
    throw domain_error(std::string(op) + ": index " + std::to_string(n) +
                       " outside tested range [0, " + std::to_string(max) + "]");
}

} // namespace detail

//! Physicists' Hermite polynomial H_n(x) by the three-term recurrence
//! H_{n+1} = 2x H_n - 2n H_{n-1}. Certified for 0 <= n <= 32.
inline double hermite(int n, double x) {
  detail::require_index(n, hermite_max_index, "hermite");
  if (n == 0)
    return 1.0;
  double hm = 1.0;       // H_0
  double h = 2.0 * x;    // H_1
  for (int k = 1; k < n; ++k) {
    double hn = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hn;
  }
  return h;
}

//! Fills out[0..n_max] with the normalized oscillator eigenfunctions
//! chi_k(x) = [1/(sqrt(pi) 2^k k!)]^(1/2) H_k(x) e^(-x^2/2), via the stable
//! recurrence chi_{k+1} = x sqrt(2/(k+1)) chi_k - sqrt(k/(k+1)) chi_{k-1}.
//! All values are bounded, so no overflow for any certified index.
inline void chi_fill(int n_max, double x, double *out) {
  detail::require_index(n_max, chi_max_index, "chi");
  out[0] = pi_quarter_inv * std::exp(-0.5 * x * x);
  if (n_max == 0)
    return;
  out[1] = std::sqrt(2.0) * x * out[0];
  for (int k = 1; k < n_max; ++k)
    out[k + 1] = x * std::sqrt(2.0 / (k + 1)) * out[k] -
                 std::sqrt(double(k) / (k + 1)) * out[k - 1];
}

//! chi_0(x)..chi_{n_max}(x) as a vector.
inline std::vector<double> chi_values(int n_max, double x) {
  std::vector<double> out(static_cast<size_t>(n_max) + 1);
  chi_fill(n_max, x, out.data());
  return out;
}

//! Normalized oscillator eigenfunction chi_n(x). Certified for 0 <= n <= 512.
//! chi_n(-x) = (-1)^n chi_n(x) holds bit-for-bit (the recurrence is written
//! sign-symmetrically).
inline double chi(int n, double x) {
  detail::require_index(n, chi_max_index, "chi");
  double cm = pi_quarter_inv * std::exp(-0.5 * x * x);
  if (n == 0)
    return cm;
  double c = std::sqrt(2.0) * x * cm;
  for (int k = 1; k < n; ++k) {
    double cn = x * std::sqrt(2.0 / (k + 1)) * c -
                std::sqrt(double(k) / (k + 1)) * cm;
    cm = c;
    c = cn;
  }
  return c;
}

enum class QuadratureKind {
  hermite_weighted,  // weight e^(-x^2) folded into the weights
  uniform_trapezoid, // plain trapezoid on [-extent, extent]
};

//! One-dimensional quadrature rule; nodes strictly increasing. Weights are
//! nonnegative; the extreme Gauss-Hermite ones underflow to zero once the
//! true value drops below the smallest double (node counts above ~270).
struct Quadrature {
  QuadratureKind kind;
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

//! Orthonormal Hermite polynomial p_n (weight e^(-x^2)) and p_{n-1} at x,
//! both carrying the same power-of-1e100 rescale count so that signs and
//! the Newton ratio p_n / p_n' are usable for any n up to 1024.
struct ScaledHermitePair {
  double pn = 0.0;
  double pn1 = 0.0;
  int rescales = 0;
};

inline ScaledHermitePair scaled_hermite_pair(int n, double x) {
  ScaledHermitePair r;
  double p1 = pi_quarter_inv;
  double p2 = 0.0;
  for (int j = 0; j < n; ++j) {
    double p3 = p2;
    p2 = p1;
    p1 = x * std::sqrt(2.0 / (j + 1)) * p2 -
         std::sqrt(double(j) / (j + 1)) * p3;
    if (std::abs(p1) > 1e100) {
      p1 *= 1e-100;
      p2 *= 1e-100;
      ++r.rescales;
    }
  }
  r.pn = p1;
  r.pn1 = p2;
  return r;
}

//! Weight at a converged root: w = 2 / (2n p_{n-1}(x)^2), assembled in logs
//! so that edge weights underflow gracefully instead of dividing inf.
inline double gauss_hermite_weight(int n, const ScaledHermitePair& e) {
  double lp = std::log(std::abs(e.pn1)) + e.rescales * std::log(1e100);
  return std::exp(std::log(2.0) - std::log(2.0 * n) - 2.0 * lp);
}

} // namespace detail

//! Gauss-Hermite rule with the given node count: sum_i w_i f(x_i)
//! approximates the integral of e^(-x^2) f(x) over the real line. The
//! integrand must be supplied with the Gaussian divided out. Roots of H_n
//! are bracketed by a sign scan at a quarter of the minimal root spacing,
//! then polished by bisection-safeguarded Newton steps.
inline Quadrature gauss_hermite(int node_count) {
  if (node_count < 1 || node_count > 1024)
    throw domain_error("gauss_hermite: node count " +
                       std::to_string(node_count) + " outside [1, 1024]");
  const int n = node_count;

  auto refine = [n](double a, double b, double sign_a) {
    double x = 0.5 * (a + b);
    for (int iter = 0; iter < 200; ++iter) {
      detail::ScaledHermitePair e = detail::scaled_hermite_pair(n, x);
      if (e.pn == 0.0)
        break;
      double sign_x = (e.pn > 0.0) ? 1.0 : -1.0;
      if (sign_x == sign_a)
        a = x;
      else
        b = x;
      double next = x - e.pn / (std::sqrt(2.0 * n) * e.pn1);
      if (!(next > a && next < b))
        next = 0.5 * (a + b);
      if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(x))) {
        x = next;
        break;
      }
      x = next;
    }
    return x;
  };

  // All roots lie inside |x| < sqrt(2n+1); consecutive positive roots are
  // at least a half-wavelength pi/sqrt(2n+1) apart, so a scan at a quarter
  // of that spacing brackets every sign change.
  const double upper = std::sqrt(2.0 * n + 1.0);
  const double step = M_PI / (4.0 * upper);
  const int wanted = n / 2; // strictly positive roots
  std::vector<double> rpos, wpos;
  rpos.reserve(wanted);
  wpos.reserve(wanted);
  double a = (n % 2 == 0) ? 0.0 : 0.5 * step; // skip the exact root at 0
  double sign_a = (detail::scaled_hermite_pair(n, a).pn > 0.0) ? 1.0 : -1.0;
  while (static_cast<int>(rpos.size()) < wanted && a < upper + step) {
    double b = a + step;
    detail::ScaledHermitePair eb = detail::scaled_hermite_pair(n, b);
    double sign_b = (eb.pn > 0.0) ? 1.0 : (eb.pn < 0.0 ? -1.0 : 0.0);
    if (sign_b == 0.0) { // landed on a root; nudge the sample
      b += 0.25 * step;
      eb = detail::scaled_hermite_pair(n, b);
      sign_b = (eb.pn > 0.0) ? 1.0 : -1.0;
    }
    if (sign_b != sign_a) {
      double x = refine(a, b, sign_a);
      rpos.push_back(x);
      wpos.push_back(
          detail::gauss_hermite_weight(n, detail::scaled_hermite_pair(n, x)));
    }
    a = b;
    sign_a = sign_b;
  }
  if (static_cast<int>(rpos.size()) != wanted)
    throw tolerance_error("gauss_hermite: root scan found " +
                              std::to_string(rpos.size()) + " of " +
                              std::to_string(wanted) + " brackets",
                          double(rpos.size()));

  Quadrature q;
  q.kind = QuadratureKind::hermite_weighted;
  q.nodes.resize(n);
  q.weights.resize(n);
  const int start = (n + 1) / 2; // first strictly positive slot
  if (n % 2 == 1) {
    q.nodes[start - 1] = 0.0;
    q.weights[start - 1] =
        detail::gauss_hermite_weight(n, detail::scaled_hermite_pair(n, 0.0));
  }
  for (int k = 0; k < wanted; ++k) {
    q.nodes[start + k] = rpos[k];
    q.weights[start + k] = wpos[k];
    q.nodes[n - 1 - (start + k)] = -rpos[k];
    q.weights[n - 1 - (start + k)] = wpos[k];
  }
  return q;
}

//! Composite trapezoid rule on [-extent, extent] with node_count points.
inline Quadrature trapezoid(double extent, int node_count) {
  if (!(extent > 0.0) || !std::isfinite(extent))
    throw domain_error("trapezoid: extent must be positive and finite");
  if (node_count < 2)
    throw domain_error("trapezoid: need at least 2 nodes");
  Quadrature q;
  q.kind = QuadratureKind::uniform_trapezoid;
  const int n = node_count;
  const double h = 2.0 * extent / (n - 1);
  const double mid = (n - 1) / 2.0;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    q.nodes[i] = (i - mid) * h;
    q.weights[i] = h;
  }
  q.weights.front() = 0.5 * h;
  q.weights.back() = 0.5 * h;
  return q;
}

//! Default rules: 128-node Gauss-Hermite, and the trapezoid cross-check
//! oracle with |x| <= 8 and step 1e-3.
inline Quadrature default_gauss_hermite() { return gauss_hermite(128); }
inline Quadrature default_trapezoid() { return trapezoid(8.0, 16001); }

//! sum_i w_i f(x_i). For hermite_weighted rules the Gaussian factor is part
//! of the weights and f must be supplied with the Gaussian divided out.
//! Throws if f is non-finite at any node, identifying the node.
template <typename F>
double integrate_1d(F &&f, const Quadrature &q) {
  detail::KahanSum acc;
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    double fx = f(q.nodes[i]);
    if (!std::isfinite(fx))
      throw domain_error("integrate_1d: non-finite integrand at node " +
                         std::to_string(i) + " (x = " +
                         std::to_string(q.nodes[i]) + ")");
    acc.add(q.weights[i] * fx);
  }
  return acc.value();
}

//! Tensor-product 2D integral, fixed row-major order.
template <typename F>
double integrate_2d(F &&f, const Quadrature &qa, const Quadrature &qb) {
  detail::KahanSum acc;
  for (size_t i = 0; i < qa.nodes.size(); ++i)
    for (size_t j = 0; j < qb.nodes.size(); ++j) {
      double fx = f(qa.nodes[i], qb.nodes[j]);
      if (!std::isfinite(fx))
        throw domain_error("integrate_2d: non-finite integrand at node (" +
                           std::to_string(i) + ", " + std::to_string(j) + ")");
      acc.add(qa.weights[i] * qb.weights[j] * fx);
    }
  return acc.value();
}

} // namespace covox
