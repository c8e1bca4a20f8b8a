#ifndef ADT_PARALLEL_HPP
#define ADT_PARALLEL_HPP

#include <functional>
#include <vector>

namespace adt::par {

// Candidate scan over [0, n): collects indices the predicate accepts, in
// ascending order. The predicate must be pure; the OpenMP kernel calls it
// from several threads at once.
std::vector<long long> scan_accept_serial(long long n,
                                          const std::function<bool(long long)>& pred);
std::vector<long long> scan_accept_omp(long long n, const std::function<bool(long long)>& pred);
std::vector<long long> scan_accept(long long n, const std::function<bool(long long)>& pred);

// Fills m (n x n) with rel(i, j). Rows are independent.
void pair_matrix_serial(int n, const std::function<bool(int, int)>& rel,
                        std::vector<std::vector<bool>>& m);
void pair_matrix_omp(int n, const std::function<bool(int, int)>& rel,
                     std::vector<std::vector<bool>>& m);
void pair_matrix(int n, const std::function<bool(int, int)>& rel,
                 std::vector<std::vector<bool>>& m);

}  // namespace adt::par

#endif
