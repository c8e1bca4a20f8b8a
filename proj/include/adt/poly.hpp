#ifndef ADT_POLY_HPP
#define ADT_POLY_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "adt/finite_algebra.hpp"
#include "adt/signature.hpp"
#include "adt/term.hpp"

namespace adt {

// type -> the parameters it depends on, in parameter declaration order
struct support {
  std::map<std::string, std::vector<std::string>> of;

  const std::vector<std::string>& at(const std::string& type) const;
};

// Least fixpoint of the slot-inclusion law; validates any declared support
// entries carried by the signature.
support minimal_support(const signature& sig);

// Polymorphic type: a type variable, or a non-parameter base type applied to
// one argument per parameter in its support.
class poly_type {
 public:
  static poly_type var(std::string name);
  static poly_type app(const signature& sig, const support& sup, const std::string& base,
                       const std::map<std::string, poly_type>& args);
  static poly_type parse(const std::string& text, const signature& sig, const support& sup);

  bool is_var() const { return p_->is_var; }
  const std::string& head() const { return p_->head; }  // variable name or base type
  const std::vector<std::pair<std::string, poly_type>>& args() const { return p_->args; }

  std::string str() const;
  bool operator==(const poly_type& o) const;
  bool operator<(const poly_type& o) const;

 private:
  struct impl {
    bool is_var;
    std::string head;
    std::vector<std::pair<std::string, poly_type>> args;  // (parameter, argument)
  };
  std::shared_ptr<const impl> p_;
  explicit poly_type(std::shared_ptr<const impl> p) : p_(std::move(p)) {}
};

// decompose: App -> (base, args); Var -> nullopt (the variable marker)
std::optional<std::pair<std::string, std::map<std::string, poly_type>>> decompose(
    const poly_type& pt);

struct poly_op {
  std::string base;
  std::vector<std::pair<std::string, poly_type>> args;  // keyed by the support of ⟨base⟩
  std::string str() const;
  bool operator==(const poly_op&) const = default;
};

poly_op instantiate(const signature& sig, const support& sup, const std::string& k,
                    const std::map<std::string, poly_type>& u);
const std::string& omega(const poly_op& op);

struct op_sig {
  std::vector<std::pair<std::string, poly_type>> dom;  // slot name, slot type instance
  poly_type cod;
};

op_sig op_signature(const signature& sig, const support& sup, const poly_op& op);

std::vector<poly_op> constructors_of(const signature& sig, const support& sup,
                                     const poly_type& pt);

struct poly_component {
  std::vector<std::string> types;
  bool simple = false;
};

struct poly_report {
  bool simple = false;
  bool semi_simple = false;
  std::vector<poly_component> components;
};

poly_report classify_poly(const signature& sig);

// Type-directed parsing of a polymorphic term; constructor tokens resolve via
// the base type of the expected polymorphic type.
term poly_parse(const std::vector<std::string>& tokens, const poly_type& expected,
                const signature& sig, const support& sup, const specifier& spec = {});
term poly_parse(const std::string& text, const poly_type& expected, const signature& sig,
                const support& sup, const specifier& spec = {});

// parameter assignment: carrier (and optional bottom) per parameter type
struct param_assignment {
  std::map<std::string, std::vector<std::string>> carriers;
  std::map<std::string, std::string> bottoms;
};

using family_oracle = std::function<finite_algebra(const param_assignment&)>;

struct compat_result {
  bool ok = true;
  bool sampled = true;
  std::string witness;
};

compat_result check_compatibility(const family_oracle& fam, const signature& sig,
                                  const support& sup, const std::vector<param_assignment>& probes);

// Memoized structural recursion through a support-compatible family, with
// the type-variable carriers fixed at construction.
class instantiation_engine {
 public:
  instantiation_engine(family_oracle fam, signature sig, support sup,
                       param_assignment type_vars = {});

  struct result {
    std::vector<std::string> carrier;
    std::optional<std::string> bottom;
    std::map<std::string, std::map<std::vector<std::string>, std::string>> ops;
    bool partial = false;
  };

  result at(const poly_type& pt);
  size_t memo_size() const { return memo_.size(); }

 private:
  family_oracle fam_;
  signature sig_;
  support sup_;
  param_assignment type_vars_;
  std::mutex mu_;
  std::map<std::string, result> memo_;

  result compute(const poly_type& pt);
};

}  // namespace adt

#endif
