// Walks one boosted bound state through the main library surfaces:
// sampling, series expansion, entropy, widths, form factor, contraction.
#include <covox/covox.hpp>

#include <cmath>
#include <cstdio>

int main() {
  covox::Rapidity eta(0.8);
  int n = 1;

  covox::WaveGrid grid = covox::sample_boosted(n, eta);
  std::printf("boosted state n=%d, eta=%g on a %dx%d grid (extent %g)\n", n,
              eta.value(), grid.count, grid.count, grid.extent);
  std::printf("  grid norm            %.12f\n", covox::l2_norm(grid));

  covox::ExpansionSpectrum s = covox::expansion_for_tolerance(n, eta, 1e-8);
  std::printf("  series terms         %zu (tail %.3g)\n",
              s.coefficients.size(), s.tail_bound);

  covox::WaveGrid rebuilt = covox::sample_series(
      n, eta, static_cast<int>(s.coefficients.size()) - 1, grid.extent,
      grid.count);
  std::printf("  L2 reconstruction    %.3g vs sqrt(tail) %.3g\n",
              covox::l2_distance(grid, rebuilt), std::sqrt(s.tail_bound));

  std::printf("  entropy              %.9f nats (closed form %.9f)\n",
              covox::entropy(0, eta, 1e-12),
              covox::entropy_ground_closed_form(eta.value()));

  covox::BoostedWidths w = covox::boosted_widths(eta);
  covox::LightconeWidths lw = covox::lightcone_widths(eta);
  std::printf("  widths               var_z=%.6f var_u=%.6f var_v=%.6f\n",
              w.var_z, lw.var_u, lw.var_v);

  covox::FormFactorPoint f = covox::coherent_form_factor(eta);
  std::printf("  form factor          F(q^2=%.4f) = %.9f (1/cosh 2eta = %.9f)\n",
              f.q_squared, f.F, 1.0 / std::cosh(2.0 * eta.value()));

  covox::Unimodular2 m = covox::contraction_sequence(1.0, 8.0);
  std::printf("  contraction at eta=8 max entry distance to shear: %.3g\n",
              covox::max_entry_distance(m, covox::triangular(1.0)));
  return 0;
}
