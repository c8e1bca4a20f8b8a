#ifndef ADT_TERM_HPP
#define ADT_TERM_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adt/error.hpp"
#include "adt/signature.hpp"

namespace adt {

// Immutable typed tree: bottom leaf, variable leaf, or constructor node with
// children in slot order. Shared immutably, cheap to copy.
class term {
 public:
  enum class kind { bottom, variable, node };

  static term bottom(std::string type);
  static term variable(std::string name, std::string type);
  static term node(std::string ctor, std::string type, std::vector<term> children);

  kind k() const { return p_->k; }
  const std::string& type() const { return p_->type; }
  const std::string& name() const { return p_->name; }  // ctor or variable name
  const std::vector<term>& children() const { return p_->children; }
  int depth() const { return p_->depth; }
  bool contains_bottom() const { return p_->has_bottom; }

  bool operator==(const term& o) const;
  bool operator<(const term& o) const;

 private:
  struct impl {
    kind k;
    std::string name;
    std::string type;
    std::vector<term> children;
    int depth = 0;
    bool has_bottom = false;
  };
  std::shared_ptr<const impl> p_;
  explicit term(std::shared_ptr<const impl> p) : p_(std::move(p)) {}
};

// Term algebra specifier: constructor -> token. Identity unless remapped;
// non-identity specifiers are validated to be locally injective.
class specifier {
 public:
  specifier() = default;
  static specifier identity() { return specifier(); }
  static specifier from_map(const signature& sig, std::map<std::string, std::string> remap);

  const std::string& token(const std::string& ctor) const;
  std::optional<std::string> ctor_for(const signature& sig, const std::string& type,
                                      const std::string& token) const;
  bool is_identity() const { return remap_.empty(); }

 private:
  std::map<std::string, std::string> remap_;
};

term build(const signature& sig, const std::string& k, std::vector<term> children);

std::vector<std::string> flatten(const term& t, const specifier& spec = {});
std::string flatten_str(const term& t, const specifier& spec = {});
// Whitespace-free rendering, e.g. Succ(Succ(_)); used as element ids.
std::string compact_str(const term& t);

std::vector<std::string> tokenize_term(const std::string& text);
term parse_term(const std::vector<std::string>& tokens, const std::string& expected,
                const signature& sig, const specifier& spec = {});
term parse_term(const std::string& text, const std::string& expected, const signature& sig,
                const specifier& spec = {});
// Root type inference from the leading token; needs a globally injective
// token map (always true for the identity specifier on well-formed input).
std::optional<std::string> infer_root_type(const std::vector<std::string>& tokens,
                                           const signature& sig, const specifier& spec = {});

struct enum_options {
  bool bottoms = false;
  // variable family: type -> variable names usable at that type
  std::map<std::string, std::vector<std::string>> vars;
};

// All terms of the type with depth <= max_depth, depth-major then declaration
// order, no duplicates.
std::vector<term> enumerate_terms(const signature& sig, const std::string& type, int max_depth,
                                  const enum_options& opts = {});

term substitute(const term& t, const std::map<std::string, term>& env);

// Evaluation target for the unique homomorphism out of the term algebra.
template <class V>
struct cata_target {
  std::function<V(const std::string& ctor, const std::vector<V>&)> apply;
  std::function<V(const std::string& name, const std::string& type)> variable;  // may be null
  std::function<V(const std::string& type)> bottom;                             // may be null
};

template <class V>
V catamorphism(const term& t, const cata_target<V>& tgt) {
  switch (t.k()) {
    case term::kind::bottom:
      if (!tgt.bottom) fail("BottomUnsupported", "target has no bottom for " + t.type());
      return tgt.bottom(t.type());
    case term::kind::variable:
      if (!tgt.variable) fail("UnboundVariable", "no value for ?" + t.name());
      return tgt.variable(t.name(), t.type());
    case term::kind::node: {
      std::vector<V> vals;
      vals.reserve(t.children().size());
      for (const auto& c : t.children()) vals.push_back(catamorphism(c, tgt));
      return tgt.apply(t.name(), vals);
    }
  }
  fail("Internal", "unreachable");
}

// Same value computed depth stratum by depth stratum: all subterms of depth 0
// first, then depth 1, and so on, each stratum reading only earlier ones.
template <class V>
V catamorphism_stratified(const term& t, const cata_target<V>& tgt) {
  std::vector<term> subs;
  std::function<void(const term&)> collect = [&](const term& u) {
    for (const auto& c : u.children()) collect(c);
    subs.push_back(u);
  };
  collect(t);
  std::stable_sort(subs.begin(), subs.end(),
                   [](const term& a, const term& b) { return a.depth() < b.depth(); });
  std::map<term, V, std::less<term>> memo;
  for (const auto& u : subs) {
    if (memo.count(u)) continue;
    switch (u.k()) {
      case term::kind::bottom:
        if (!tgt.bottom) fail("BottomUnsupported", "target has no bottom for " + u.type());
        memo.emplace(u, tgt.bottom(u.type()));
        break;
      case term::kind::variable:
        if (!tgt.variable) fail("UnboundVariable", "no value for ?" + u.name());
        memo.emplace(u, tgt.variable(u.name(), u.type()));
        break;
      case term::kind::node: {
        std::vector<V> vals;
        for (const auto& c : u.children()) vals.push_back(memo.at(c));
        memo.emplace(u, tgt.apply(u.name(), vals));
        break;
      }
    }
  }
  return memo.at(t);
}

}  // namespace adt

#endif
