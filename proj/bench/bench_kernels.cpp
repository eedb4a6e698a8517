// Times the per-entry reference build, the planned OpenMP build and the
// Murnaghan-Nakayama oracle on full tables of S_n.
//
//   bench_kernels [max_n] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "symchar/mn.hpp"
#include "symchar/recursion.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return dt.count();
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 16;
  const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();

  std::printf("%4s %6s %12s %12s %12s %8s %s\n", "n", "p(n)", "reference_s",
              "parallel_s", "mn_s", "speedup", "agree");
  for (int n = 2; n <= max_n; n += 2) {
    symchar::BuildOptions ref_opts;
    ref_opts.serial_reference = true;
    symchar::BuildOptions par_opts;
    par_opts.threads = threads;

    symchar::CharTable ref(0), par(0), mn(0);
    const double t_ref =
        seconds([&] { ref = symchar::build_top_table(n, ref_opts); });
    const double t_par =
        seconds([&] { par = symchar::build_top_table(n, par_opts); });
    // The oracle is slow at large n; it is only timed while it stays cheap.
    const bool run_mn = n <= 14;
    const double t_mn = run_mn ? seconds([&] { mn = symchar::mn_table(n); }) : 0;

    const bool agree = ref == par && (!run_mn || par == mn);
    std::printf("%4d %6zu %12.4f %12.4f %12s %8.2f %s\n", n,
                symchar::partition_count(n), t_ref, t_par,
                run_mn ? std::to_string(t_mn).c_str() : "-",
                t_par > 0 ? t_ref / t_par : 0.0, agree ? "yes" : "NO");
    if (!agree) return 1;
  }
  return 0;
}
