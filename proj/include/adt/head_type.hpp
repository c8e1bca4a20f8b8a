#ifndef ADT_HEAD_TYPE_HPP
#define ADT_HEAD_TYPE_HPP

#include <map>
#include <string>
#include <vector>

#include "adt/finite_algebra.hpp"
#include "adt/signature.hpp"
#include "adt/term.hpp"

namespace adt {

enum class head_value : unsigned char { bot = 0, nat = 1 };

// Per-constructor function from {⊥,♮}-patterns over the argument slots to
// {⊥,♮}, kept as a full truth table (index: bit i set when slot i is ♮).
class head_type {
 public:
  enum class builtin { flat, strict, smash, degenerate };

  static head_type make(const signature& sig, builtin b);
  static head_type make(const signature& sig, const std::string& name);  // by builtin name
  static head_type from_tables(const signature& sig,
                               std::map<std::string, std::vector<head_value>> tables);
  static head_type load(const signature& sig, const std::string& text);

  head_value apply(const std::string& ctor, const std::vector<head_value>& args) const;
  const signature& sig() const { return sig_; }
  const std::string& name() const { return name_; }
  const std::map<std::string, std::vector<head_value>>& tables() const { return tables_; }

 private:
  signature sig_;
  std::string name_ = "custom";
  std::map<std::string, std::vector<head_value>> tables_;
  head_value numeral_value_ = head_value::nat;  // lazily expanded nullary families
};

bool is_product_type(const signature& sig, const std::string& type);

struct head_report {
  bool stable = true;             // tables monotone in the definedness pattern
  bool natural_invariant = true;  // all-♮ pattern maps to ♮
  std::vector<std::string> witnesses;
};

head_report head_properties(const head_type& h);

head_value eval_head(const term& t, const head_type& h);

// Bottom-up rewrite replacing every node whose head value is ⊥ by the bottom
// of its type; idempotent.
term normalize(const term& t, const head_type& h);

// Adjoin a fresh bottom per type and make every operation strict.
finite_algebra flat_extension(const finite_algebra& alg);

}  // namespace adt

#endif
