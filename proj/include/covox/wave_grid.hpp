#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "covox/covariant_oscillator.hpp"
#include "covox/errors.hpp"
#include "covox/format.hpp"
#include "covox/special_functions.hpp"

namespace covox {

//! Square sample grid over (z, t) in [-extent, extent]^2, row-major with the
//! z index outermost. Spacing is 2 extent/(count-1); an odd count puts the
//! origin on the grid.
struct WaveGrid {
  double extent = 8.0;
  int count = 0;
  std::vector<double> samples;

  double spacing() const noexcept { return 2.0 * extent / (count - 1); }
  double coord(int i) const noexcept {
    return (i - (count - 1) / 2.0) * spacing();
  }
  double at(int i, int j) const {
    return samples[static_cast<size_t>(i) * count + j];
  }
  double &at(int i, int j) {
    return samples[static_cast<size_t>(i) * count + j];
  }
};

//! Default axis extent for a state of rapidity eta: max(8, 6 e^|eta|), wide
//! enough that Gaussian tails are below 1e-15 at the boundary.
inline double default_extent(double eta) {
  return std::max(8.0, 6.0 * std::exp(std::abs(eta)));
}

inline constexpr int default_grid_count = 801;

namespace detail {

inline void require_grid_shape(double extent, int count, const char *op) {
  if (!(extent > 0.0) || !std::isfinite(extent))
    throw domain_error(std::string(op) + ": extent must be positive");
  if (count < 2)
    throw domain_error(std::string(op) + ": count must be >= 2");
}

} // namespace detail

//! Samples f(z, t) over the grid; rejects non-finite samples.
template <typename F>
WaveGrid sample_grid(double extent, int count, F &&f) {
  detail::require_grid_shape(extent, count, "sample_grid");
  WaveGrid g;
  g.extent = extent;
  g.count = count;
  g.samples.resize(static_cast<size_t>(count) * count);
  for (int i = 0; i < count; ++i) {
    double z = g.coord(i);
    for (int j = 0; j < count; ++j) {
      double val = f(z, g.coord(j));
      if (!std::isfinite(val))
        throw domain_error("sample_grid: non-finite sample at (" +
                           std::to_string(z) + ", " +
                           std::to_string(g.coord(j)) + ")");
      g.at(i, j) = val;
    }
  }
  return g;
}

//! psi_boosted(n, eta, .) sampled on the default grid for eta.
inline WaveGrid sample_boosted(int n, Rapidity eta) {
  return sample_grid(default_extent(eta.value()), default_grid_count,
                     [&](double z, double t) {
                       return psi_boosted(n, eta, SpacetimePoint{z, t});
                     });
}

inline WaveGrid sample_boosted(int n, Rapidity eta, double extent, int count) {
  return sample_grid(extent, count, [&](double z, double t) {
    return psi_boosted(n, eta, SpacetimePoint{z, t});
  });
}

//! Truncated series sum_{k<=K} C_k chi_{n+k}(z) chi_k(t) sampled over the
//! grid. Per-axis eigenfunction tables make this O(count^2 K) instead of
//! O(count^2 K^2); the k-sum runs in fixed ascending order.
inline WaveGrid sample_series(int n, Rapidity eta, int K, double extent,
                              int count) {
  detail::require_grid_shape(extent, count, "sample_series");
  detail::require_index(n + K, chi_max_index, "sample_series");
  WaveGrid g;
  g.extent = extent;
  g.count = count;
  g.samples.resize(static_cast<size_t>(count) * count);

  const size_t width = static_cast<size_t>(n + K) + 1;
  std::vector<double> table(static_cast<size_t>(count) * width);
  for (int i = 0; i < count; ++i)
    chi_fill(n + K, g.coord(i), table.data() + i * width);

  std::vector<double> coef(static_cast<size_t>(K) + 1);
  for (int k = 0; k <= K; ++k)
    coef[static_cast<size_t>(k)] =
        detail::expansion_coefficient(n, eta.value(), k);

  for (int i = 0; i < count; ++i) {
    const double *cz = table.data() + static_cast<size_t>(i) * width;
    for (int j = 0; j < count; ++j) {
      const double *ct = table.data() + static_cast<size_t>(j) * width;
      detail::KahanSum acc;
      for (int k = 0; k <= K; ++k)
        acc.add(coef[static_cast<size_t>(k)] * cz[n + k] * ct[k]);
      g.at(i, j) = acc.value();
    }
  }
  return g;
}

namespace detail {

// Central-difference oscillator Hamiltonian, 0.5 [(-d2/dz2 + z^2)
// + sign * (-d2/dt2 + t^2)]. Boundary ring is not computable with the
// three-point stencil and is set to zero; callers must use interior norms.
inline WaveGrid apply_oscillator_stencil(const WaveGrid &g, double sign,
                                         const char *op) {
  if (g.count < 5)
    throw tolerance_error(std::string(op) + ": grid count " +
                              std::to_string(g.count) +
                              " too coarse for a second-order stencil",
                          g.count);
  double h = g.spacing();
  if (h > 0.25)
    throw tolerance_error(std::string(op) + ": spacing " + std::to_string(h) +
                              " too coarse (need h <= 0.25)",
                          h);
  WaveGrid out;
  out.extent = g.extent;
  out.count = g.count;
  out.samples.assign(g.samples.size(), 0.0);
  double inv_h2 = 1.0 / (h * h);
  for (int i = 1; i < g.count - 1; ++i) {
    double z = g.coord(i);
    for (int j = 1; j < g.count - 1; ++j) {
      double t = g.coord(j);
      double d2z = (g.at(i + 1, j) - 2.0 * g.at(i, j) + g.at(i - 1, j)) * inv_h2;
      double d2t = (g.at(i, j + 1) - 2.0 * g.at(i, j) + g.at(i, j - 1)) * inv_h2;
      double first = -d2z + z * z * g.at(i, j);
      double second = -d2t + t * t * g.at(i, j);
      out.at(i, j) = 0.5 * (first + sign * second);
    }
  }
  return out;
}

} // namespace detail

//! 0.5 [(-d2/dz2 + z^2) - (-d2/dt2 + t^2)] by second-order central
//! differences. chi_n(z) chi_m(t) is an eigenstate with eigenvalue n - m;
//! boosted states keep their rest-frame eigenvalue n. The boundary ring of
//! the result is invalid (zeroed) and excluded from interior norms.
inline WaveGrid apply_h_minus(const WaveGrid &g) {
  return detail::apply_oscillator_stencil(g, -1.0, "apply_h_minus");
}

//! 0.5 [(-d2/dx1^2 + x1^2) + (-d2/dx2^2 + x2^2)]; chi_a(x1) chi_b(x2) is an
//! eigenstate with eigenvalue a + b + 1.
inline WaveGrid apply_h_plus(const WaveGrid &g) {
  return detail::apply_oscillator_stencil(g, +1.0, "apply_h_plus");
}

//! Discrete L2 norm sqrt(h^2 sum psi^2), fixed-order compensated sum.
inline double l2_norm(const WaveGrid &g) {
  detail::KahanSum acc;
  for (double v : g.samples)
    acc.add(v * v);
  return g.spacing() * std::sqrt(acc.value());
}

//! Discrete L2 distance between two grids of identical shape.
inline double l2_distance(const WaveGrid &x, const WaveGrid &y) {
  if (x.count != y.count || x.extent != y.extent)
    throw domain_error("l2_distance: grid shapes differ");
  detail::KahanSum acc;
  for (size_t i = 0; i < x.samples.size(); ++i) {
    double d = x.samples[i] - y.samples[i];
    acc.add(d * d);
  }
  return x.spacing() * std::sqrt(acc.value());
}

//! Max of |lhs - scale * rhs| over the interior (boundary ring excluded).
inline double interior_max_residual(const WaveGrid &lhs, double scale,
                                    const WaveGrid &rhs) {
  if (lhs.count != rhs.count || lhs.extent != rhs.extent)
    throw domain_error("interior_max_residual: grid shapes differ");
  double m = 0.0;
  for (int i = 1; i < lhs.count - 1; ++i)
    for (int j = 1; j < lhs.count - 1; ++j)
      m = std::max(m, std::abs(lhs.at(i, j) - scale * rhs.at(i, j)));
  return m;
}

//! CSV serialization: header "z,t,value", row-major, shortest round-trip
//! float formatting, \n line endings.
inline void write_csv(const WaveGrid &g, std::ostream &os) {
  os << "z,t,value\n";
  for (int i = 0; i < g.count; ++i) {
    double z = g.coord(i);
    for (int j = 0; j < g.count; ++j)
      os << format_double(z) << ',' << format_double(g.coord(j)) << ','
         << format_double(g.at(i, j)) << '\n';
  }
}

} // namespace covox
