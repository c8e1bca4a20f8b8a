#include "adt/parallel.hpp"

#include <algorithm>

#ifdef ADT_HAVE_OPENMP
#include <omp.h>
#endif

namespace adt::par {

namespace {
constexpr long long kSerialCutoff = 4096;
}

std::vector<long long> scan_accept_serial(long long n,
                                          const std::function<bool(long long)>& pred) {
  std::vector<long long> out;
  for (long long i = 0; i < n; ++i)
    if (pred(i)) out.push_back(i);
  return out;
}

std::vector<long long> scan_accept_omp(long long n, const std::function<bool(long long)>& pred) {
#ifdef ADT_HAVE_OPENMP
  std::vector<std::vector<long long>> parts;
#pragma omp parallel
  {
#pragma omp single
    parts.resize(static_cast<size_t>(omp_get_num_threads()));
    auto& mine = parts[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 256)
    for (long long i = 0; i < n; ++i)
      if (pred(i)) mine.push_back(i);
  }
  std::vector<long long> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
#else
  return scan_accept_serial(n, pred);
#endif
}

std::vector<long long> scan_accept(long long n, const std::function<bool(long long)>& pred) {
  if (n < kSerialCutoff) return scan_accept_serial(n, pred);
  return scan_accept_omp(n, pred);
}

void pair_matrix_serial(int n, const std::function<bool(int, int)>& rel,
                        std::vector<std::vector<bool>>& m) {
  m.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = rel(i, j);
}

void pair_matrix_omp(int n, const std::function<bool(int, int)>& rel,
                     std::vector<std::vector<bool>>& m) {
  m.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
#ifdef ADT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = rel(i, j);  // thread owns row i
}

void pair_matrix(int n, const std::function<bool(int, int)>& rel,
                 std::vector<std::vector<bool>>& m) {
  if (n < 64) return pair_matrix_serial(n, rel, m);
  pair_matrix_omp(n, rel, m);
}

}  // namespace adt::par
