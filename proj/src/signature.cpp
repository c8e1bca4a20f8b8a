#include "adt/signature.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "adt/error.hpp"

namespace adt {

namespace {

const char* kReserved[] = {"::=", "|", "_", "(", ")"};

bool is_reserved(const std::string& s) {
  for (const char* r : kReserved)
    if (s == r) return true;
  return false;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool is_numeral(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

bool valid_name(const std::string& s) {
  if (s.empty() || is_reserved(s)) return false;
  if (s[0] == '?' || s[0] == '@') return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

signature signature::make(std::vector<std::string> types, std::vector<ctor> ctors,
                          std::map<std::string, std::vector<std::string>> declared_supports,
                          std::vector<std::string> integer_types) {
  signature s;
  s.types_ = std::move(types);
  s.ctors_ = std::move(ctors);
  s.declared_supports_ = std::move(declared_supports);
  s.integer_types_ = std::move(integer_types);
  s.validate();
  return s;
}

void signature::validate() const {
  if (types_.empty() || (ctors_.empty() && integer_types_.empty()))
    fail("EmptySignature", "a signature needs at least one type and one constructor");
  std::set<std::string> tset;
  for (const auto& t : types_) {
    if (!valid_name(t)) fail("ReservedToken", "bad type name '" + t + "'");
    if (!tset.insert(t).second) fail("DuplicateType", "type '" + t + "' declared twice");
  }
  std::set<std::string> kset;
  for (const auto& k : ctors_) {
    if (!valid_name(k.name)) fail("ReservedToken", "bad constructor name '" + k.name + "'");
    if (!kset.insert(k.name).second)
      fail("DuplicateConstructor", "constructor '" + k.name + "' declared twice");
    if (tset.count(k.name))
      fail("NameClash", "'" + k.name + "' is both a type and a constructor");
    if (!tset.count(k.result)) fail("UnknownType", "result type '" + k.result + "' undeclared");
    std::set<std::string> snames;
    for (const auto& sl : k.slots) {
      if (!tset.count(sl.type))
        fail("UnknownType", "slot type '" + sl.type + "' of '" + k.name + "' undeclared");
      if (!snames.insert(sl.name).second)
        fail("DuplicateSlot", "slot '" + sl.name + "' of '" + k.name + "' repeated");
    }
  }
  for (const auto& b : integer_types_)
    if (!tset.count(b)) fail("UnknownType", "integer type '" + b + "' undeclared");
}

signature signature::parse(const std::string& text) {
  std::vector<std::string> lhs_types;           // rule order
  std::vector<std::string> param_order;         // param line order, then first slot use
  std::set<std::string> declared_params;
  std::vector<ctor> ctors;
  std::map<std::string, std::vector<std::string>> supports;
  std::vector<std::string> integer_types;
  std::set<std::string> lhs_seen;

  auto note_param_use = [&](const std::string& t) {
    if (std::find(param_order.begin(), param_order.end(), t) == param_order.end())
      param_order.push_back(t);
  };

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    // parentheses in the augmented LHS are token separators
    std::string spaced;
    for (char c : raw) {
      if (c == '(' || c == ')') {
        spaced += ' ';
        spaced += c;
        spaced += ' ';
      } else {
        spaced += c;
      }
    }
    auto toks = split_ws(spaced);
    if (toks.empty()) continue;

    if (toks[0] == "param") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!valid_name(toks[i]))
          fail("ReservedToken", "line " + std::to_string(lineno) + ": bad parameter name '" +
                                    toks[i] + "'");
        declared_params.insert(toks[i]);
        note_param_use(toks[i]);
      }
      continue;
    }

    // LHS: either `b ::=` or `( b a1 ... an ) ::=`
    size_t pos = 0;
    std::string lhs;
    std::vector<std::string> lhs_params;
    bool augmented = false;
    if (toks[0] == "(") {
      augmented = true;
      pos = 1;
      if (pos >= toks.size()) fail("ParseError", "line " + std::to_string(lineno) + ": bad LHS");
      lhs = toks[pos++];
      while (pos < toks.size() && toks[pos] != ")") lhs_params.push_back(toks[pos++]);
      if (pos >= toks.size()) fail("ParseError", "line " + std::to_string(lineno) + ": unclosed (");
      ++pos;
    } else {
      lhs = toks[pos++];
    }
    if (pos >= toks.size() || toks[pos] != "::=")
      fail("ParseError", "line " + std::to_string(lineno) + ": expected '::='");
    ++pos;
    if (!valid_name(lhs))
      fail("ReservedToken", "line " + std::to_string(lineno) + ": bad type name '" + lhs + "'");
    if (!lhs_seen.insert(lhs).second)
      fail("DuplicateType", "type '" + lhs + "' declared twice");
    lhs_types.push_back(lhs);
    if (augmented) supports[lhs] = lhs_params;

    // RHS alternatives
    std::vector<std::vector<std::string>> alts(1);
    for (; pos < toks.size(); ++pos) {
      if (toks[pos] == "|") {
        alts.emplace_back();
      } else if (toks[pos] == "(" || toks[pos] == ")") {
        continue;  // grouping sugar on the RHS
      } else {
        alts.back().push_back(toks[pos]);
      }
    }
    for (const auto& alt : alts) {
      if (alt.empty()) fail("ParseError", "line " + std::to_string(lineno) + ": empty alternative");
      if (alt[0] == "@integers") {
        if (alt.size() != 1)
          fail("ParseError", "line " + std::to_string(lineno) + ": @integers stands alone");
        integer_types.push_back(lhs);
        continue;
      }
      ctor k;
      k.name = alt[0];
      k.result = lhs;
      if (!valid_name(k.name))
        fail("ReservedToken", "line " + std::to_string(lineno) + ": bad constructor name '" +
                                  alt[0] + "'");
      for (size_t i = 1; i < alt.size(); ++i) {
        slot sl;
        if (auto at = alt[i].find('@'); at != std::string::npos) {
          sl.name = alt[i].substr(0, at);
          sl.type = alt[i].substr(at + 1);
        } else {
          sl.name = std::to_string(i);
          sl.type = alt[i];
        }
        if (sl.name.empty() || !valid_name(sl.type))
          fail("ReservedToken",
               "line " + std::to_string(lineno) + ": bad slot '" + alt[i] + "'");
        k.slots.push_back(std::move(sl));
      }
      for (const auto& kk : ctors)
        if (kk.name == k.name)
          fail("DuplicateConstructor", "constructor '" + k.name + "' declared twice");
      ctors.push_back(std::move(k));
    }
  }

  if (lhs_types.empty()) fail("EmptySignature", "no rules");

  // Types mentioned only on right-hand sides (or in augmented LHS / param
  // lines) become parameters, in first-use order.
  std::set<std::string> lhs_set(lhs_types.begin(), lhs_types.end());
  for (const auto& k : ctors)
    for (const auto& sl : k.slots)
      if (!lhs_set.count(sl.type)) note_param_use(sl.type);
  for (const auto& [b, ps] : supports)
    for (const auto& a : ps)
      if (!lhs_set.count(a)) note_param_use(a);

  std::vector<std::string> types = lhs_types;
  for (const auto& p : param_order)
    if (!lhs_set.count(p)) types.push_back(p);

  for (const auto& p : declared_params)
    if (lhs_set.count(p))
      fail("ParseError", "declared parameter '" + p + "' has constructors");

  return make(std::move(types), std::move(ctors), std::move(supports), std::move(integer_types));
}

std::string signature::pretty() const {
  std::ostringstream out;
  auto params = parameter_set();
  if (!params.empty()) {
    out << "param";
    for (const auto& a : params) out << ' ' << a;
    out << '\n';
  }
  for (const auto& b : types_) {
    if (is_parameter(b)) continue;
    auto it = declared_supports_.find(b);
    if (it != declared_supports_.end()) {
      out << "( " << b;
      for (const auto& a : it->second) out << ' ' << a;
      out << " ) ::=";
    } else {
      out << b << " ::=";
    }
    bool first = true;
    if (is_integer_type(b)) {
      out << " @integers";
      first = false;
    }
    for (const auto& k : ctors_) {
      if (k.result != b) continue;
      out << (first ? " " : " | ") << k.name;
      first = false;
      int pos = 1;
      for (const auto& sl : k.slots) {
        out << ' ';
        if (sl.name == std::to_string(pos))
          out << sl.type;
        else
          out << sl.name << '@' << sl.type;
        ++pos;
      }
    }
    out << '\n';
  }
  return out.str();
}

bool signature::has_type(const std::string& b) const {
  return std::find(types_.begin(), types_.end(), b) != types_.end();
}

bool signature::has_ctor(const std::string& k) const { return find_ctor(k) != nullptr; }

const ctor* signature::find_ctor(const std::string& k) const {
  for (const auto& c : ctors_)
    if (c.name == k) return &c;
  return nullptr;
}

std::optional<ctor> signature::resolve_ctor(const std::string& k) const {
  if (const ctor* c = find_ctor(k)) return *c;
  if (is_numeral(k)) {
    const std::string* found = nullptr;
    for (const auto& b : integer_types_) {
      if (found) fail("AmbiguousNumeral", "numeral '" + k + "' fits several integer types");
      found = &b;
    }
    if (found) return ctor{k, *found, {}};
  }
  return std::nullopt;
}

std::vector<const ctor*> signature::ctors_of_type(const std::string& b) const {
  std::vector<const ctor*> out;
  for (const auto& c : ctors_)
    if (c.result == b) out.push_back(&c);
  return out;
}

std::vector<std::string> signature::parameter_set() const {
  std::set<std::string> with_rule;
  for (const auto& c : ctors_) with_rule.insert(c.result);
  for (const auto& b : integer_types_) with_rule.insert(b);
  std::vector<std::string> out;
  for (const auto& t : types_)
    if (!with_rule.count(t)) out.push_back(t);
  return out;
}

bool signature::is_parameter(const std::string& b) const {
  if (is_integer_type(b)) return false;
  for (const auto& c : ctors_)
    if (c.result == b) return false;
  return has_type(b);
}

std::vector<std::string> signature::primitive_types() const {
  std::vector<std::string> out;
  for (const auto& b : types_) {
    if (is_parameter(b)) continue;
    bool prim = true;
    for (const auto& c : ctors_)
      if (c.result == b && !c.slots.empty()) prim = false;
    if (prim) out.push_back(b);
  }
  return out;
}

bool signature::is_integer_type(const std::string& b) const {
  return std::find(integer_types_.begin(), integer_types_.end(), b) != integer_types_.end();
}

signature signature::with_integer_window(long lo, long hi) const {
  if (lo > hi) fail("BadWindow", "empty integer window");
  signature s = *this;
  s.integer_types_.clear();
  for (const auto& b : integer_types_)
    for (long n = lo; n <= hi; ++n)
      s.ctors_.push_back(ctor{std::to_string(n), b, {}});
  s.validate();
  return s;
}

std::vector<signature> signature::disjoint_components() const {
  // union-find over types linked by constructor result/argument edges
  std::map<std::string, std::string> parent;
  for (const auto& t : types_) parent[t] = t;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](const std::string& a, const std::string& b) { parent[find(a)] = find(b); };
  for (const auto& c : ctors_)
    for (const auto& sl : c.slots) unite(c.result, sl.type);

  std::vector<signature> out;
  std::set<std::string> done;
  for (const auto& t : types_) {
    if (is_parameter(t)) continue;
    std::string root = find(t);
    if (!done.insert(root).second) continue;
    std::vector<std::string> ctypes;
    for (const auto& u : types_)
      if (find(u) == root) ctypes.push_back(u);
    std::vector<ctor> cctors;
    std::set<std::string> inset(ctypes.begin(), ctypes.end());
    for (const auto& c : ctors_)
      if (inset.count(c.result)) cctors.push_back(c);
    std::map<std::string, std::vector<std::string>> csupp;
    for (const auto& [b, ps] : declared_supports_)
      if (inset.count(b)) csupp[b] = ps;
    std::vector<std::string> cint;
    for (const auto& b : integer_types_)
      if (inset.count(b)) cint.push_back(b);
    out.push_back(make(std::move(ctypes), std::move(cctors), std::move(csupp), std::move(cint)));
  }
  return out;
}

bool is_extension(const signature& big, const signature& small) {
  for (const auto& t : small.types())
    if (!big.has_type(t)) return false;
  for (const auto& k : small.ctors()) {
    const ctor* c = big.find_ctor(k.name);
    if (!c || !(*c == k)) return false;
  }
  return true;
}

bool signature::is_extension_of(const signature& small) const { return is_extension(*this, small); }

signature signature::sum(const std::vector<signature>& parts) {
  std::vector<std::string> types;
  std::vector<ctor> ctors;
  std::map<std::string, std::vector<std::string>> supports;
  std::vector<std::string> ints;
  std::set<std::string> tseen, kseen;
  for (const auto& p : parts) {
    for (const auto& t : p.types()) {
      if (!tseen.insert(t).second)
        fail("OverlappingSignatures", "type '" + t + "' appears in two summands");
      types.push_back(t);
    }
    for (const auto& k : p.ctors()) {
      if (!kseen.insert(k.name).second)
        fail("OverlappingSignatures", "constructor '" + k.name + "' appears in two summands");
      ctors.push_back(k);
    }
    for (const auto& [b, ps] : p.declared_supports()) supports[b] = ps;
    for (const auto& b : p.integer_types_) ints.push_back(b);
  }
  return make(std::move(types), std::move(ctors), std::move(supports), std::move(ints));
}

bool signature::operator==(const signature& o) const {
  return types_ == o.types_ && ctors_ == o.ctors_ && declared_supports_ == o.declared_supports_ &&
         integer_types_ == o.integer_types_;
}

bool signature::equivalent(const signature& o) const {
  std::set<std::string> a(types_.begin(), types_.end()), b(o.types_.begin(), o.types_.end());
  if (a != b) return false;
  auto key = [](const ctor& c) { return std::make_pair(c.name, std::make_pair(c.result, c.slots)); };
  std::set<decltype(key(ctors_[0]))> ka, kb;
  for (const auto& c : ctors_) ka.insert(key(c));
  for (const auto& c : o.ctors_) kb.insert(key(c));
  std::set<std::string> ia(integer_types_.begin(), integer_types_.end()),
      ib(o.integer_types_.begin(), o.integer_types_.end());
  return ka == kb && ia == ib;
}

}  // namespace adt
