#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "covox/covariant_oscillator.hpp"
#include "covox/special_functions.hpp"
#include "covox/wave_grid.hpp"

using namespace covox;

TEST_CASE("rapidity construction and velocity conversion") {
  REQUIRE(Rapidity(0.0).value() == 0.0);
  REQUIRE_THROWS_AS(Rapidity(10.5), domain_error);
  REQUIRE_THROWS_AS(Rapidity(-11.0), domain_error);
  REQUIRE_THROWS_AS(Rapidity(std::numeric_limits<double>::infinity()),
                    domain_error);
  REQUIRE(rapidity_from_beta(0.0).value() == 0.0);
  REQUIRE(std::abs(rapidity_from_beta(0.6).value() - 0.6931471805599453) <=
          1e-15);
  REQUIRE(rapidity_from_beta(-0.6).value() ==
          -rapidity_from_beta(0.6).value());
  REQUIRE_THROWS_AS(rapidity_from_beta(1.0), domain_error);
  REQUIRE_THROWS_AS(rapidity_from_beta(-1.2), domain_error);
}

TEST_CASE("boost_point matches the hyperbolic closed form") {
  SpacetimePoint p = boost_point({1.0, 0.0}, Rapidity(0.0));
  REQUIRE(p.z == 1.0);
  REQUIRE(p.t == 0.0);
  SpacetimePoint q = boost_point({1.0, 0.0}, rapidity_from_beta(0.6));
  REQUIRE(std::abs(q.z - 1.25) <= 1e-15);
  REQUIRE(std::abs(q.t - -0.75) <= 1e-15);
}

TEST_CASE("boost_point preserves the interval") {
  SpacetimePoint p{0.3, 0.9};
  SpacetimePoint q = boost_point(p, Rapidity(1.7));
  REQUIRE(std::abs((q.z * q.z - q.t * q.t) - (p.z * p.z - p.t * p.t)) <=
          1e-12);
}

TEST_CASE("lightcone coordinates rotate the axes") {
  LightconeCoords onc = lightcone({1.0, 1.0});
  REQUIRE(std::abs(onc.u - std::sqrt(2.0)) <= 1e-15);
  REQUIRE(onc.v == 0.0);
  LightconeCoords half = lightcone({1.0, 0.0});
  REQUIRE(std::abs(half.u - 1.0 / std::sqrt(2.0)) <= 1e-15);
  REQUIRE(half.u == half.v);
  SpacetimePoint p{-0.7, 0.4};
  LightconeCoords lc = lightcone(p);
  REQUIRE(std::abs(lc.u * lc.u + lc.v * lc.v - (p.z * p.z + p.t * p.t)) <=
          1e-15);
}

TEST_CASE("a boost acts on lightcone coordinates as a reciprocal scaling") {
  SpacetimePoint p{0.4, -0.2};
  double eta = 0.9;
  LightconeCoords base = lightcone(p);
  // Forward boost contracts u and stretches v,
  LightconeCoords fwd = lightcone(boost_point(p, Rapidity(eta)));
  REQUIRE(std::abs(fwd.u - std::exp(-eta) * base.u) <= 1e-12);
  REQUIRE(std::abs(fwd.v - std::exp(eta) * base.v) <= 1e-12);
  // so the scaling (e^eta u, e^-eta v) is reached at rapidity -eta.
  LightconeCoords bwd = lightcone(boost_point(p, Rapidity(-eta)));
  REQUIRE(std::abs(bwd.u - std::exp(eta) * base.u) <= 1e-12);
  REQUIRE(std::abs(bwd.v - std::exp(-eta) * base.v) <= 1e-12);
}

TEST_CASE("coordinate split between hadron and separation") {
  QuarkPairCoords same{{1, 2, 3, 4}, {1, 2, 3, 4}};
  CoordinateSplit s = split_coordinates(same);
  for (int i = 0; i < 4; ++i) {
    REQUIRE(s.hadron[i] == same.xa[i]);
    REQUIRE(s.separation[i] == 0.0);
  }
  QuarkPairCoords apart{{1, 0, 0, 0}, {-1, 0, 0, 0}};
  CoordinateSplit a = split_coordinates(apart);
  REQUIRE(a.hadron[0] == 0.0);
  REQUIRE(std::abs(a.separation[0] - 1.0 / std::sqrt(2.0)) <= 1e-15);
  QuarkPairCoords q{{0.3, -1.2, 0.5, 2.0}, {1.1, 0.4, -0.6, 0.9}};
  QuarkPairCoords dq{{0.6, -2.4, 1.0, 4.0}, {2.2, 0.8, -1.2, 1.8}};
  CoordinateSplit s1 = split_coordinates(q);
  CoordinateSplit s2 = split_coordinates(dq);
  for (int i = 0; i < 4; ++i) {
    REQUIRE(std::abs(s2.hadron[i] - 2 * s1.hadron[i]) <= 1e-15);
    REQUIRE(std::abs(s2.separation[i] - 2 * s1.separation[i]) <= 1e-15);
  }
}

TEST_CASE("rest-frame wave function values") {
  REQUIRE(std::abs(psi_rest(0, {0.0, 0.0}) - 0.5641895835477563) <= 1e-16);
  REQUIRE(psi_rest(1, {0.0, 0.5}) == 0.0);
  for (double z : {-1.1, 0.2, 0.8}) {
    for (double t : {-0.4, 0.0, 1.3}) {
      REQUIRE(psi_rest(3, {z, t}) == chi(3, z) * chi(0, t));
    }
  }
}

TEST_CASE("rest-frame wave function is normalized") {
  Quadrature q = default_trapezoid();
  double norm = integrate_2d(
      [](double z, double t) {
        double w = psi_rest(2, {z, t});
        return w * w;
      },
      q, q);
  REQUIRE(std::abs(norm - 1.0) <= 1e-10);
}

TEST_CASE("boosted wave function reduces to rest at eta = 0") {
  SpacetimePoint p{0.3, -0.1};
  REQUIRE(std::abs(psi_boosted(0, Rapidity(0.0), p) - psi_rest(0, p)) <=
          1e-15);
  for (int n = 0; n <= 4; ++n) {
    SpacetimePoint r{-0.9, 0.6};
    REQUIRE(std::abs(psi_boosted(n, Rapidity(0.0), r) - psi_rest(n, r)) <=
            1e-15);
  }
}

TEST_CASE("boosted wave function fixed values") {
  for (double eta : {0.0, 0.5, 1.5, 3.0}) {
    REQUIRE(std::abs(psi_boosted(0, Rapidity(eta), {0.0, 0.0}) -
                     0.5641895835477563) <= 1e-15);
  }
  REQUIRE(std::abs(psi_boosted(0, Rapidity(0.5), {0.7, -0.3}) -
                   0.28177382251198213) <= 5e-16);
}

TEST_CASE("boosted wave function equals the rest function of the boosted point") {
  for (double eta : {-1.2, 0.4, 2.0}) {
    for (int n = 0; n <= 3; ++n) {
      SpacetimePoint p{0.45, -0.85};
      double direct = psi_boosted(n, Rapidity(eta), p);
      double via_point = psi_rest(n, boost_point(p, Rapidity(eta)));
      REQUIRE(std::abs(direct - via_point) <=
              1e-13 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("boosted wave function stays normalized") {
  double eta = 1.0;
  Quadrature q = trapezoid(default_extent(eta), 4001);
  double norm = integrate_2d(
      [&](double z, double t) {
        double w = psi_boosted(0, Rapidity(eta), {z, t});
        return w * w;
      },
      q, q);
  REQUIRE(std::abs(norm - 1.0) <= 1e-8);
}

TEST_CASE("4D Cartesian solution is a product of eigenfunctions") {
  REQUIRE(std::abs(psi_cartesian_4d(0, 0, 0, 0, 0, 0, 0) -
                   0.3183098861837907) <= 1e-15);
  REQUIRE(psi_cartesian_4d(1, 0, 0, 0.0, 0.4, 0.2, -0.1) == 0.0);
  REQUIRE(psi_cartesian_4d(0, 3, 0, 0.4, 0.0, 0.2, -0.1) == 0.0);
  double v = psi_cartesian_4d(1, 0, 2, 0.3, -0.5, 0.8, 0.25);
  REQUIRE(v == chi(1, 0.3) * chi(0, -0.5) * chi(2, 0.8) * chi(0, 0.25));
}

TEST_CASE("4D norm factorizes over 1D oracles") {
  Quadrature q = default_gauss_hermite();
  auto one_d = [&](int n) {
    // chi_n^2 with the Gaussian weight divided out stays bounded.
    return integrate_1d(
        [&](double x) {
          double h = chi(n, x) * std::exp(x * x / 2);
          return h * h;
        },
        q);
  };
  double product = one_d(1) * one_d(0) * one_d(2) * one_d(0);
  REQUIRE(std::abs(product - 1.0) <= 1e-10);
}

TEST_CASE("expansion coefficients match the geometric closed form") {
  ExpansionSpectrum flat = expansion_coefficients(3, Rapidity(0.0), 5);
  REQUIRE(flat.coefficients.size() == 6);
  REQUIRE(flat.coefficients[0] == 1.0);
  for (size_t k = 1; k < flat.coefficients.size(); ++k)
    REQUIRE(flat.coefficients[k] == 0.0);
  REQUIRE(flat.tail_bound <= 1e-15);

  ExpansionSpectrum s =
      expansion_coefficients(0, rapidity_from_beta(0.6), 3);
  double expected[] = {0.8, 0.48, 0.288, 0.1728};
  for (int k = 0; k <= 3; ++k)
    REQUIRE(std::abs(s.coefficients[k] - expected[k]) <= 1e-15);
}

TEST_CASE("expansion coefficients are a normalized distribution") {
  ExpansionSpectrum s = expansion_for_tolerance(2, Rapidity(1.0), 1e-10);
  double sum = 0.0;
  for (double c : s.coefficients) {
    REQUIRE(c >= 0.0);
    sum += c * c;
  }
  REQUIRE(sum <= 1.0 + 1e-12);
  REQUIRE(sum + s.tail_bound >= 1.0 - 1e-12);
  REQUIRE(s.tail_bound <= 1e-10);
}

TEST_CASE("tolerance-driven truncation stops at the expected depth") {
  ExpansionSpectrum a = expansion_for_tolerance(0, Rapidity(0.8), 1e-8);
  REQUIRE(a.coefficients.size() == 23);
  REQUIRE(a.tail_bound <= 1e-8);
  REQUIRE(a.tail_bound >= 6.4e-9);
  ExpansionSpectrum b = expansion_for_tolerance(4, Rapidity(1.5), 1e-10);
  REQUIRE(b.coefficients.size() == 170);
  REQUIRE(b.tail_bound <= 1e-10);
  REQUIRE(b.tail_bound >= 5e-11);
}

TEST_CASE("truncation guard trips when the tail cannot be met") {
  REQUIRE_THROWS_AS(expansion_for_tolerance(0, Rapidity(9.9), 1e-12),
                    tolerance_error);
  try {
    expansion_for_tolerance(0, Rapidity(9.9), 1e-12);
  } catch (const tolerance_error& e) {
    REQUIRE(e.offending_value() > 1e-12);
    REQUIRE(std::isfinite(e.offending_value()));
  }
}

TEST_CASE("series reconstruction converges pointwise to the boosted state") {
  SpacetimePoint p{0.5, 0.2};
  double direct = psi_boosted(0, Rapidity(0.8), p);
  ExpansionSpectrum s = expansion_for_tolerance(0, Rapidity(0.8), 1e-8);
  int K = static_cast<int>(s.coefficients.size()) - 1;
  double series = series_reconstruct(0, Rapidity(0.8), K, p);
  REQUIRE(std::abs(series - direct) <= 1e-5);
  double deep = series_reconstruct(0, Rapidity(0.8), 200, p);
  REQUIRE(std::abs(deep - direct) <= 1e-12);
}

TEST_CASE("series reconstruction at zero rapidity is the rest state") {
  SpacetimePoint p{-0.7, 0.35};
  REQUIRE(series_reconstruct(0, Rapidity(0.0), 0, p) == psi_rest(0, p));
  REQUIRE(std::abs(series_reconstruct(2, Rapidity(0.0), 4, p) -
                   psi_rest(2, p)) <= 1e-15);
}

TEST_CASE("series truncation error is bounded by the tail in L2") {
  int n = 0, K = 20;
  double eta = 1.0;
  ExpansionSpectrum s = expansion_coefficients(n, Rapidity(eta), K);
  double extent = default_extent(eta);
  WaveGrid direct = sample_boosted(n, Rapidity(eta), extent, 1001);
  WaveGrid series = sample_series(n, Rapidity(eta), K, extent, 1001);
  // The squared comparison carries the round-off floor of the two Kahan
  // sums; 1e-13 sits far below the 1e-5 tail being certified.
  double dist = l2_distance(direct, series);
  REQUIRE(dist * dist <= s.tail_bound + 1e-13);
}

TEST_CASE("series reconstruction guards its index budget") {
  REQUIRE_THROWS_AS(series_reconstruct(4, Rapidity(1.0), -1, {0, 0}),
                    domain_error);
  REQUIRE_THROWS_AS(series_reconstruct(500, Rapidity(1.0), 100, {0, 0}),
                    domain_error);
}

TEST_CASE("normal coordinates are the symmetric rotation") {
  auto [y1, y2] = normal_coordinates(0.9, -0.3);
  REQUIRE(std::abs(y1 - (0.9 - 0.3) / std::sqrt(2.0)) <= 1e-15);
  REQUIRE(std::abs(y2 - (0.9 + 0.3) / std::sqrt(2.0)) <= 1e-15);
}
