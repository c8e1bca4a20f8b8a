// Compares the serial reference kernels against the OpenMP ones on the two
// hot paths: homomorphism candidate scans and pairwise order matrices.
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "adt/parallel.hpp"
#include "adt/signature.hpp"
#include "adt/term.hpp"
#include "adt/term_order.hpp"

#ifdef ADT_HAVE_OPENMP
#include <omp.h>
#endif

using namespace adt;

namespace {

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <class F>
double time_of(F&& f) {
  double t0 = now_s();
  f();
  return now_s() - t0;
}

void bench_scan(long long n) {
  auto pred = [](long long i) {
    // a mildly expensive pure predicate
    unsigned long long x = static_cast<unsigned long long>(i) * 0x9E3779B97F4A7C15ull;
    for (int r = 0; r < 32; ++r) x = x * 6364136223846793005ull + 1442695040888963407ull;
    return (x & 1023) == 0;
  };
  std::vector<long long> a, b;
  double ts = time_of([&] { a = par::scan_accept_serial(n, pred); });
  double tp = time_of([&] { b = par::scan_accept_omp(n, pred); });
  std::printf("scan n=%lld  serial %.3fs  omp %.3fs  speedup %.2fx  equal=%s\n", n, ts, tp,
              ts / tp, a == b ? "yes" : "NO");
}

void bench_leq_matrix() {
  auto sig = signature::parse("nat ::= Zero | Succ nat\nlist ::= Nil | Cons nat list");
  auto h = head_type::make(sig, head_type::builtin::strict);
  auto nfs = normal_forms(sig, "list", h, 4);
  int n = static_cast<int>(nfs.size());
  // all inputs are normal forms; keep one normalisation check up front
  for (const auto& t : nfs)
    if (!(normalize(t, h) == t)) return;
  auto rel = [&](int i, int j) { return term_leq(nfs[i], nfs[j], h); };
  std::vector<std::vector<bool>> a, b;
  double ts = time_of([&] { par::pair_matrix_serial(n, rel, a); });
  double tp = time_of([&] { par::pair_matrix_omp(n, rel, b); });
  std::printf("leq matrix n=%d  serial %.3fs  omp %.3fs  speedup %.2fx  equal=%s\n", n, ts, tp,
              ts / tp, a == b ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef ADT_HAVE_OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not available (serial fallback)\n");
#endif
  bench_scan(2'000'000);
  bench_scan(8'000'000);
  bench_leq_matrix();
  return 0;
}
