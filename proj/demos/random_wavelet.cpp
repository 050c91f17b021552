// Builds a symmetric random wavelet with three vanishing moments, prints its
// moment report and writes plot-ready samples next to the binary.

#include <cstdio>

#include "seedwave/seedwave.hpp"

int main() {
  using namespace seedwave;

  const auto build = build_symmetric_wavelet(15, 3, 1.0, 7);
  const SeedWavelet w(build.seed);

  std::printf("seed (n=%zu, delta=%g):\n ", build.seed.size(), build.seed.delta());
  for (double v : build.seed.values()) std::printf(" %+.4f", v);
  std::printf("\n");

  const MomentReport report = vanishing_order(build.seed);
  std::printf("vanishing order: %d\n", report.vanishing_order);
  for (std::size_t m = 0; m < report.moments.size(); ++m) {
    std::printf("  moment %zu = %.3e\n", m, report.moments[m]);
  }
  std::printf("energy = %.6f, admissibility constant = %.6f\n", w.energy(),
              admissibility_constant(w));

  const auto grid = w.evaluate_grid(-1.5, 1.5, 601);
  write_file_atomic("random_wavelet_psi.csv", wavelet_grid_csv(grid));
  std::printf("wrote random_wavelet_psi.csv (%zu samples)\n", grid.size());
  return 0;
}
