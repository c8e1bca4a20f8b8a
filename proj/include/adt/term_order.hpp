#ifndef ADT_TERM_ORDER_HPP
#define ADT_TERM_ORDER_HPP

#include <map>
#include <string>
#include <vector>

#include "adt/finite_algebra.hpp"
#include "adt/head_type.hpp"
#include "adt/poset.hpp"
#include "adt/term.hpp"

namespace adt {

// type -> bottomed partial order over that type's carrier, elements indexed
// in carrier order.
struct order_family {
  std::map<std::string, std::vector<std::vector<bool>>> rel;

  bool le(const finite_algebra& alg, const std::string& type, const std::string& a,
          const std::string& b) const;
  bool operator==(const order_family&) const = default;
};

// Less-defined-than on normalized terms: bottom least, nodes compare childwise
// under the same constructor, variables by equality.
bool term_leq(const term& a, const term& b, const head_type& h);

struct refine_result {
  order_family order;
  bool all_monotone = true;
  std::vector<std::string> violations;  // "k non-monotone at (x,y)"
  bool approximate = false;
  int rounds = 0;
};

// First-refinement iteration from the flat family (base orders on parameter
// carriers) to its fixpoint, then a monotonicity report over all tables.
refine_result refine_ordering(const finite_algebra& alg, const order_family& base = {});

// { s : s ⊑ t }, computed recursively; finite by local finiteness.
std::vector<term> principal_ideal(const term& t, const head_type& h);

bool is_maximal(const term& t, const head_type& h);

// Poset of all normal forms of the type with depth <= depth, ordered by
// term_leq; element names are the compact renderings.
finite_poset truncated_poset(const signature& sig, const std::string& type, const head_type& h,
                             int depth, const budget& b = budget::from_env());

std::vector<term> normal_forms(const signature& sig, const std::string& type, const head_type& h,
                               int depth, const enum_options& opts = enum_options{true, {}});

// Carrier element id: variables keep their bare name, everything else the
// compact rendering.
std::string elem_str(const term& t);

// Finite algebra over the depth-bounded normal forms; applications that fall
// off the truncation are omitted (partial tables).
finite_algebra truncation_algebra(const signature& sig, const head_type& h, int depth,
                                  const enum_options& opts = enum_options{true, {}});

}  // namespace adt

#endif
