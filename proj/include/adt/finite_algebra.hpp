#ifndef ADT_FINITE_ALGEBRA_HPP
#define ADT_FINITE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adt/budget.hpp"
#include "adt/signature.hpp"

namespace adt {

// type -> subset of the carrier
struct family {
  std::map<std::string, std::set<std::string>> sets;

  bool contains(const std::string& type, const std::string& elem) const {
    auto it = sets.find(type);
    return it != sets.end() && it->second.count(elem) > 0;
  }
  bool operator==(const family&) const = default;
};

struct grading {
  std::map<std::string, std::map<std::string, int>> rank;
  bool operator==(const grading&) const = default;
};

struct hom_candidate {
  std::map<std::string, std::map<std::string, std::string>> map;  // type -> elem -> elem
  bool operator==(const hom_candidate&) const = default;
  bool operator<(const hom_candidate& o) const { return map < o.map; }
};

// Explicit finite algebra: ordered carrier per type, operation tables per
// constructor. Tables may be partial (truncations of infinite algebras);
// every verdict computed over a partial algebra is flagged approximate.
struct finite_algebra {
  signature sig;
  std::map<std::string, std::vector<std::string>> carriers;
  std::map<std::string, std::map<std::vector<std::string>, std::string>> tables;
  std::map<std::string, std::string> bottoms;
  bool partial = false;

  static finite_algebra load(const signature& sig, const std::string& text);
  std::string print() const;
  void validate() const;

  bool bottomed() const { return !bottoms.empty(); }
  bool is_bottom(const std::string& type, const std::string& e) const {
    auto it = bottoms.find(type);
    return it != bottoms.end() && it->second == e;
  }
  family full_family() const;
  long long carrier_total() const;
};

struct closure_result {
  family fam;
  bool approximate = false;
};

// Least family containing U and closed under all tables.
closure_result invariant_closure(const finite_algebra& alg, const family& U);

struct classification {
  bool approximate = false;

  bool minimal = false;    // closure(∅) covers the carriers
  bool u_minimal = false;  // closure(U) covers the carriers
  bool v_minimal = false;  // closure(parameter carriers) covers the carriers

  bool unambiguous = false;
  std::string unambiguous_witness;
  bool regular = false;
  std::string regular_witness;
  bool u_regular = false;
  std::string u_regular_witness;

  bool initial = false;  // minimal && regular
  bool u_free = false;   // u_minimal && u_regular
  bool v_initial = false;

  // bottomed verdicts (meaningful only when has_bottoms)
  bool has_bottoms = false;
  bool v_minimal_bottomed = false;
  bool regular_bottomed = false;
  std::string regular_bottomed_witness;
  bool strictly_regular = false;
  bool strictly_unambiguous = false;
  std::string strict_witness;
  bool natural_invariant = false;
  std::string natural_invariant_witness;
  bool v_initial_bottomed = false;
};

classification classify(const finite_algebra& alg, const family& U = {});

// Unique depth family: nullary images, bottoms and parameter elements at 0,
// otherwise 1 + max over arguments, iterated to the fixpoint.
grading compute_depths(const finite_algebra& alg);

bool verify_grading(const finite_algebra& alg, const grading& g, bool bottomed);

struct hom_check {
  bool ok = true;
  std::string witness;
};

hom_check check_homomorphism(const finite_algebra& src, const finite_algebra& dst,
                             const hom_candidate& pi, bool bottomed);

std::vector<hom_candidate> find_homomorphisms(const finite_algebra& src, const finite_algebra& dst,
                                              bool bottomed, const budget& b = budget::from_env());

finite_algebra sum_algebras(const std::vector<finite_algebra>& parts);

}  // namespace adt

#endif
