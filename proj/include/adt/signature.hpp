#ifndef ADT_SIGNATURE_HPP
#define ADT_SIGNATURE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adt {

struct slot {
  std::string name;  // defaults to positional "1", "2", ...
  std::string type;
  bool operator==(const slot&) const = default;
  auto operator<=>(const slot&) const = default;
};

struct ctor {
  std::string name;
  std::string result;
  std::vector<slot> slots;
  bool operator==(const ctor&) const = default;
};

// A signature: ordered type names, ordered constructors with typed slots.
// Parameter types are exactly the types with no constructor. A type may be
// declared as a builtin integer family (`b ::= @integers`), whose numeral
// constructors are expanded lazily; operations needing a finite constructor
// set must go through with_integer_window() first.
class signature {
 public:
  static signature parse(const std::string& text);
  static signature make(std::vector<std::string> types, std::vector<ctor> ctors,
                        std::map<std::string, std::vector<std::string>> declared_supports = {},
                        std::vector<std::string> integer_types = {});

  std::string pretty() const;

  const std::vector<std::string>& types() const { return types_; }
  const std::vector<ctor>& ctors() const { return ctors_; }

  bool has_type(const std::string& b) const;
  bool has_ctor(const std::string& k) const;
  // Looks k up among declared constructors; numerals of integer types are
  // resolved on the fly (synthesised nullary ctor).
  const ctor* find_ctor(const std::string& k) const;
  std::optional<ctor> resolve_ctor(const std::string& k) const;
  std::vector<const ctor*> ctors_of_type(const std::string& b) const;

  std::vector<std::string> parameter_set() const;
  bool is_parameter(const std::string& b) const;
  std::vector<std::string> primitive_types() const;
  std::vector<signature> disjoint_components() const;
  bool is_extension_of(const signature& small) const;
  static signature sum(const std::vector<signature>& parts);

  bool is_integer_type(const std::string& b) const;
  bool has_integer_types() const { return !integer_types_.empty(); }
  signature with_integer_window(long lo, long hi) const;

  const std::map<std::string, std::vector<std::string>>& declared_supports() const {
    return declared_supports_;
  }

  bool operator==(const signature& o) const;
  // Order-insensitive comparison (same type set, same constructors).
  bool equivalent(const signature& o) const;

 private:
  std::vector<std::string> types_;  // non-parameters first, then parameters
  std::vector<ctor> ctors_;
  std::map<std::string, std::vector<std::string>> declared_supports_;
  std::vector<std::string> integer_types_;

  void validate() const;
};

bool is_extension(const signature& big, const signature& small);
bool valid_name(const std::string& s);

}  // namespace adt

#endif
