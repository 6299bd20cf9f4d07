// Benchmark comparing the serial reference kernels against the OpenMP ones.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "engel/io.hpp"
#include "engel/lie.hpp"
#include "engel/quotient.hpp"
#include "engel/rational.hpp"

using namespace engel;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-38s %10.4f s %10.4f s %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
  bool smoke = false;
  std::string spec_path = "fixtures/engel5.json";
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--smoke") == 0) smoke = true;
    else spec_path = argv[i];
  }

  int jobs = 1;
#ifdef _OPENMP
  jobs = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("ENGEL_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) jobs = j;
  }

  RatRing Q;
  PresentationSpec spec;
  try {
    spec = io::load_presentation_file(spec_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cannot load %s: %s\n", spec_path.c_str(), e.what());
    return 2;
  }
  auto alg = QuotientAlgebra<RatRing>::build(Q, spec);
  std::printf("algebra dim %d, %d worker(s)\n", alg.dim(), jobs);
  std::printf("%-38s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");

  // element products with generic (polynomial) coefficients
  {
    PolyRing<RatRing> pr = generic_ring(alg);
    auto U = generic_element(alg, pr, "u").elem;
    auto V = generic_element(alg, pr, "v").elem;
    QuotOps<RatRing, PolyRing<RatRing>> ops{alg, pr, ExecPolicy{1}};
    auto W = lie_bracket(ops, U, V); // richer coefficients than U, V alone
    int reps = smoke ? 2 : 20;
    double s = seconds([&] { alg.mul_serial(pr, W, V); }, reps);
    double p = seconds([&] { alg.mul_parallel(pr, W, V, jobs); }, reps);
    row("generic element product", s, p);
  }

  // symmetrized Engel enumeration
  {
    int n = smoke ? 3 : 5;
    int reps = smoke ? 1 : 3;
    double s = seconds([&] { lie_engel_symmetrized(alg, n, ExecPolicy{1}); }, reps);
    double p = seconds([&] { lie_engel_symmetrized(alg, n, ExecPolicy{jobs}); }, reps);
    char name[64];
    std::snprintf(name, sizeof name, "symmetrized engel walk (n = %d)", n);
    row(name, s, p);

    // the naive per-permutation reference, small order only
    double naive = seconds([&] { lie_engel_symmetrized_naive(alg, 3); }, 1);
    std::printf("%-38s %10.4f s %12s\n", "naive symmetrized reference (n = 3)", naive, "-");
  }

  // symbolic Engel bracket of generic elements
  {
    int reps = smoke ? 1 : 3;
    double s = seconds([&] { lie_engel_symbolic(alg, 5, ExecPolicy{1}); }, reps);
    double p = seconds([&] { lie_engel_symbolic(alg, 5, ExecPolicy{jobs}); }, reps);
    row("symbolic engel check (n = 5)", s, p);
  }

  return 0;
}
