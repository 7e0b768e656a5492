// Times the OpenMP oracle kernels against their serial reference
// implementations: enumeration, Hamiltonian-path-graph construction, and
// all-source BFS diameter.
#include <chrono>
#include <cstdio>
#include <functional>

#include "gridpath/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gridpath;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn, int reps = 3) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
  printf("OpenMP: not available (both columns run serial code)\n");
#endif
  printf("%-28s %12s %12s %8s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

  for (auto [m, n] : {std::pair{5, 6}, {5, 7}, {4, 9}}) {
    const GridDims d{m, n};
    EnumOptions ser;
    ser.parallel = false;
    EnumOptions par;
    par.parallel = true;

    const double ts = time_of([&] { enumerate_st_hamiltonian_serial(d); });
    const double tp = time_of([&] { enumerate_st_hamiltonian(d, par); });
    printf("%-28s %12.5f %12.5f %7.2fx\n",
           ("enumerate " + std::to_string(m) + "x" + std::to_string(n)).c_str(), ts, tp,
           ts / tp);

    const double gs = time_of([&] { build_hp_graph_serial(d, ser); });
    const double gp = time_of([&] { build_hp_graph(d, par); });
    printf("%-28s %12.5f %12.5f %7.2fx\n",
           ("hp-graph " + std::to_string(m) + "x" + std::to_string(n)).c_str(), gs, gp,
           gs / gp);

    const HPGraph g = build_hp_graph(d, par);
    const double ss = time_of([&] { graph_stats(g, true, false); });
    const double sp = time_of([&] { graph_stats(g, true, true); });
    printf("%-28s %12.5f %12.5f %7.2fx\n",
           ("stats+pairs " + std::to_string(m) + "x" + std::to_string(n)).c_str(), ss, sp,
           ss / sp);
  }
  return 0;
}
