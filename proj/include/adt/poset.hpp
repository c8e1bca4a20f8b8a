#ifndef ADT_POSET_HPP
#define ADT_POSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "adt/budget.hpp"

namespace adt {

// Finite bottomed poset; leq is the full reflexive-transitive relation.
struct finite_poset {
  std::vector<std::string> elems;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: elems[i] ⊑ elems[j]
  int bottom = -1;

  static finite_poset load(const std::string& text);
  static finite_poset from_relation(std::vector<std::string> elems,
                                    const std::vector<std::pair<int, int>>& pairs);
  std::string print() const;

  int index_of(const std::string& e) const;
  size_t size() const { return elems.size(); }
  bool le(int i, int j) const { return leq[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

bool is_directed(const finite_poset& p, const std::vector<int>& subset);
std::optional<int> lub(const finite_poset& p, const std::vector<int>& subset);

struct mono_map {
  std::vector<int> to;  // image index in the codomain, per domain element
};

struct check_result {
  bool ok = true;
  std::string witness;
};

check_result is_monotone(const finite_poset& p, const finite_poset& q, const mono_map& f);
// Continuity over all directed subsets (finite enumeration).
check_result is_continuous(const finite_poset& p, const finite_poset& q, const mono_map& f,
                           const budget& b = budget::from_env());

finite_poset product_poset(const std::vector<finite_poset>& ps);

bool is_cofinal(const finite_poset& p, const std::vector<int>& d1, const std::vector<int>& d2);

struct completion_result {
  finite_poset poset;
  std::vector<std::string> source_elems;
  std::vector<int> embed;  // original element index -> completion index
  std::string print() const;
};

// All directed ideals ordered by inclusion; embed maps y to its principal
// ideal. Down-sets are generated from their maximal elements and filtered by
// directedness; ideal_completion_naive scans all 2^n subsets instead and is
// kept as an independent route.
completion_result ideal_completion(const finite_poset& y, const budget& b = budget::from_env());
completion_result ideal_completion_naive(const finite_poset& y,
                                         const budget& b = budget::from_env());

std::vector<int> compact_elements(const finite_poset& x, const budget& b = budget::from_env());
bool is_algebraic(const finite_poset& x, const budget& b = budget::from_env());

bool are_isomorphic(const finite_poset& p, const finite_poset& q,
                    const budget& b = budget::from_env());

}  // namespace adt

#endif
