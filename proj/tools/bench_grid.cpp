// Serial vs OpenMP grid execution on the default three-scenario sweep.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "uavsim/sweep.hpp"

int main(int argc, char** argv) {
  using namespace uavsim;
  namespace chrono = std::chrono;

  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  GridSpec grid;
  grid.scenarios = {scenario_spec(ScenarioId::Terrestrial),
                    scenario_spec(ScenarioId::LeoOutage),
                    scenario_spec(ScenarioId::LeoOutageFallback)};

  auto t0 = chrono::steady_clock::now();
  const auto serial = run_grid_serial(grid);
  auto t1 = chrono::steady_clock::now();
  const auto parallel = run_grid(grid, threads);
  auto t2 = chrono::steady_clock::now();

  const double ms_serial = chrono::duration<double, std::milli>(t1 - t0).count();
  const double ms_parallel = chrono::duration<double, std::milli>(t2 - t1).count();
  std::printf("runs      %zu\n", serial.size());
  std::printf("serial    %.1f ms\n", ms_serial);
  std::printf("openmp    %.1f ms (%d threads)\n", ms_parallel, threads);
  std::printf("speedup   %.2fx\n", ms_serial / ms_parallel);
  std::printf("identical %s\n", serial == parallel ? "yes" : "NO");
  return serial == parallel ? 0 : 1;
}
