#ifndef ADT_BUDGET_HPP
#define ADT_BUDGET_HPP

#include <cstdlib>
#include <string>

namespace adt {

// Brute-force limits. ADT_BUDGET overrides the candidate budget shared by
// homomorphism search and subset scans.
struct budget {
  long long candidates = 10'000'000;  // total candidate maps / subsets
  int completion_elems = 20;          // max poset size for ideal completion

  static budget from_env() {
    budget b;
    if (const char* s = std::getenv("ADT_BUDGET")) {
      char* end = nullptr;
      long long v = std::strtoll(s, &end, 10);
      if (end != s && v > 0) b.candidates = v;
    }
    return b;
  }
};

}  // namespace adt

#endif
