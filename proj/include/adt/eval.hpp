#ifndef ADT_EVAL_HPP
#define ADT_EVAL_HPP

#include <string>

#include "adt/finite_algebra.hpp"
#include "adt/term.hpp"

namespace adt {

// Table-backed evaluation target; variables read from env, bottoms from the
// algebra's designated bottoms.
inline cata_target<std::string> algebra_target(const finite_algebra& alg,
                                               std::map<std::string, std::string> env = {}) {
  cata_target<std::string> t;
  t.apply = [&alg](const std::string& k, const std::vector<std::string>& args) {
    auto it = alg.tables.find(k);
    if (it == alg.tables.end()) fail("MissingOperation", "'" + k + "'");
    auto e = it->second.find(args);
    if (e == it->second.end()) fail("MissingOperation", k + " undefined on given tuple");
    return e->second;
  };
  t.variable = [env, &alg](const std::string& name, const std::string& type) {
    auto it = env.find(name);
    if (it == env.end()) fail("UnboundVariable", "?" + name);
    (void)type;
    return it->second;
  };
  if (alg.bottomed())
    t.bottom = [&alg](const std::string& type) {
      auto it = alg.bottoms.find(type);
      if (it == alg.bottoms.end()) fail("BottomUnsupported", "no bottom for " + type);
      return it->second;
    };
  return t;
}

// Counts Zero/Succ towers; numerals evaluate to themselves.
inline cata_target<long long> peano_target() {
  cata_target<long long> t;
  t.apply = [](const std::string& k, const std::vector<long long>& args) -> long long {
    if (k == "Zero") return 0;
    if (k == "Succ") return args.at(0) + 1;
    char* end = nullptr;
    long long v = std::strtoll(k.c_str(), &end, 10);
    if (end && *end == '\0' && end != k.c_str()) return v;
    fail("MissingOperation", "'" + k + "' has no arithmetic meaning");
  };
  return t;
}

inline cata_target<long long> size_target() {
  cata_target<long long> t;
  t.apply = [](const std::string&, const std::vector<long long>& args) {
    long long n = 1;
    for (long long a : args) n += a;
    return n;
  };
  t.variable = [](const std::string&, const std::string&) -> long long { return 1; };
  t.bottom = [](const std::string&) -> long long { return 1; };
  return t;
}

inline cata_target<long long> depth_target() {
  cata_target<long long> t;
  t.apply = [](const std::string&, const std::vector<long long>& args) {
    long long m = 0;
    for (long long a : args) m = std::max(m, a + 1);
    return m;
  };
  t.variable = [](const std::string&, const std::string&) -> long long { return 0; };
  t.bottom = [](const std::string&) -> long long { return 0; };
  return t;
}

// Evaluating into the term algebra itself: constructors as callbacks.
inline cata_target<term> identity_target(const signature& sig) {
  cata_target<term> t;
  t.apply = [&sig](const std::string& k, const std::vector<term>& args) {
    return build(sig, k, args);
  };
  t.variable = [](const std::string& name, const std::string& type) {
    return term::variable(name, type);
  };
  t.bottom = [](const std::string& type) { return term::bottom(type); };
  return t;
}

}  // namespace adt

#endif
