#include "adt/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "adt/error.hpp"

namespace adt {

const std::vector<std::string>& support::at(const std::string& type) const {
  auto it = of.find(type);
  if (it == of.end()) fail("UnknownType", "no support entry for '" + type + "'");
  return it->second;
}

support minimal_support(const signature& sig) {
  const auto params = sig.parameter_set();
  std::set<std::string> param_set(params.begin(), params.end());
  std::map<std::string, std::set<std::string>> cur;
  for (const auto& t : sig.types()) cur[t] = {};
  for (const auto& a : params) cur[a] = {a};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& k : sig.ctors())
      for (const auto& sl : k.slots)
        for (const auto& a : cur[sl.type])
          grew |= cur[k.result].insert(a).second;
  }
  support s;
  for (const auto& t : sig.types()) {
    std::vector<std::string> v;
    for (const auto& a : params)  // parameter declaration order
      if (cur[t].count(a)) v.push_back(a);
    s.of[t] = std::move(v);
  }
  // declared supports (augmented DSL) must themselves satisfy the slot law
  if (!sig.declared_supports().empty()) {
    auto declared = [&](const std::string& t) -> std::set<std::string> {
      if (auto it = sig.declared_supports().find(t); it != sig.declared_supports().end())
        return {it->second.begin(), it->second.end()};
      return cur[t];
    };
    for (const auto& [t, ps] : sig.declared_supports())
      for (const auto& a : ps)
        if (!param_set.count(a))
          fail("DeclaredSupportInvalid", t + ": '" + a + "' is not a parameter");
    for (const auto& k : sig.ctors()) {
      auto res = declared(k.result);
      for (const auto& sl : k.slots)
        for (const auto& a : declared(sl.type))
          if (!res.count(a))
            fail("DeclaredSupportInvalid", "slot " + sl.name + " of " + k.name + " forces " + a +
                                               " into the support of " + k.result);
    }
  }
  return s;
}

poly_type poly_type::var(std::string name) {
  auto p = std::make_shared<impl>();
  p->is_var = true;
  p->head = std::move(name);
  return poly_type(std::move(p));
}

poly_type poly_type::app(const signature& sig, const support& sup, const std::string& base,
                         const std::map<std::string, poly_type>& args) {
  if (!sig.has_type(base) || sig.is_parameter(base))
    fail("UnknownType", "'" + base + "' is not a non-parameter type");
  const auto& keys = sup.at(base);
  if (args.size() != keys.size()) fail("WrongArgKeys", base + " takes " +
                                           std::to_string(keys.size()) + " arguments");
  auto p = std::make_shared<impl>();
  p->is_var = false;
  p->head = base;
  for (const auto& a : keys) {
    auto it = args.find(a);
    if (it == args.end()) fail("WrongArgKeys", base + ": missing argument for " + a);
    p->args.emplace_back(a, it->second);
  }
  return poly_type(std::move(p));
}

std::string poly_type::str() const {
  if (is_var()) return head();
  if (args().empty()) return head();
  std::string s = head();
  for (const auto& [a, t] : args()) {
    s += ' ';
    bool atom = t.is_var() || t.args().empty();
    s += atom ? t.str() : "(" + t.str() + ")";
  }
  return s;
}

bool poly_type::operator==(const poly_type& o) const {
  if (p_ == o.p_) return true;
  if (p_->is_var != o.p_->is_var || p_->head != o.p_->head) return false;
  if (p_->args.size() != o.p_->args.size()) return false;
  for (size_t i = 0; i < p_->args.size(); ++i)
    if (p_->args[i].first != o.p_->args[i].first || !(p_->args[i].second == o.p_->args[i].second))
      return false;
  return true;
}

bool poly_type::operator<(const poly_type& o) const {
  if (p_->is_var != o.p_->is_var) return p_->is_var;
  if (p_->head != o.p_->head) return p_->head < o.p_->head;
  size_t n = std::min(p_->args.size(), o.p_->args.size());
  for (size_t i = 0; i < n; ++i) {
    if (p_->args[i].second < o.p_->args[i].second) return true;
    if (o.p_->args[i].second < p_->args[i].second) return false;
  }
  return p_->args.size() < o.p_->args.size();
}

namespace {

struct pt_parser {
  std::vector<std::string> toks;
  size_t pos = 0;
  const signature& sig;
  const support& sup;

  poly_type atom() {
    if (pos >= toks.size()) fail("ParseError", "polymorphic type ends unexpectedly");
    std::string t = toks[pos++];
    if (t == "(") {
      poly_type inner = type();
      if (pos >= toks.size() || toks[pos] != ")") fail("ParseError", "missing ')'");
      ++pos;
      return inner;
    }
    if (t == ")") fail("ParseError", "unexpected ')'");
    if (sig.has_type(t)) {
      if (sig.is_parameter(t))
        fail("ParseError", "'" + t + "' is a parameter; use a type variable instead");
      if (!sup.at(t).empty()) fail("WrongArgKeys", t + " needs arguments");
      return poly_type::app(sig, sup, t, {});
    }
    return poly_type::var(t);
  }

  poly_type type() {
    if (pos >= toks.size()) fail("ParseError", "polymorphic type ends unexpectedly");
    std::string t = toks[pos];
    if (t != "(" && sig.has_type(t) && !sig.is_parameter(t) && !sup.at(t).empty()) {
      ++pos;
      const auto& keys = sup.at(t);
      std::map<std::string, poly_type> args;
      for (const auto& a : keys) args.emplace(a, atom());
      return poly_type::app(sig, sup, t, args);
    }
    return atom();
  }
};

}  // namespace

poly_type poly_type::parse(const std::string& text, const signature& sig, const support& sup) {
  std::string spaced;
  for (char c : text) {
    if (c == '(' || c == ')') {
      spaced += ' ';
      spaced += c;
      spaced += ' ';
    } else {
      spaced += c;
    }
  }
  std::istringstream is(spaced);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  pt_parser p{std::move(toks), 0, sig, sup};
  poly_type out = p.type();
  if (p.pos != p.toks.size()) fail("TrailingTokens", "polymorphic type continues");
  return out;
}

std::optional<std::pair<std::string, std::map<std::string, poly_type>>> decompose(
    const poly_type& pt) {
  if (pt.is_var()) return std::nullopt;
  std::map<std::string, poly_type> args;
  for (const auto& [a, t] : pt.args()) args.emplace(a, t);
  return std::make_pair(pt.head(), std::move(args));
}

std::string poly_op::str() const {
  std::string s = base;
  for (const auto& [a, t] : args) {
    s += ' ';
    bool atom = t.is_var() || t.args().empty();
    s += atom ? t.str() : "(" + t.str() + ")";
  }
  return s;
}

poly_op instantiate(const signature& sig, const support& sup, const std::string& k,
                    const std::map<std::string, poly_type>& u) {
  auto c = sig.resolve_ctor(k);
  if (!c) fail("UnknownConstructor", "'" + k + "'");
  const auto& keys = sup.at(c->result);
  if (u.size() != keys.size())
    fail("WrongArgKeys", k + " instantiates over " + std::to_string(keys.size()) + " parameters");
  poly_op op;
  op.base = k;
  for (const auto& a : keys) {
    auto it = u.find(a);
    if (it == u.end()) fail("WrongArgKeys", k + ": missing argument for " + a);
    op.args.emplace_back(a, it->second);
  }
  return op;
}

const std::string& omega(const poly_op& op) { return op.base; }

namespace {

// I_u: parameters through u, non-parameters through app with the restriction
poly_type apply_assignment(const signature& sig, const support& sup, const std::string& type,
                           const std::map<std::string, poly_type>& u) {
  if (sig.is_parameter(type)) {
    auto it = u.find(type);
    if (it == u.end()) fail("WrongArgKeys", "assignment misses parameter " + type);
    return it->second;
  }
  std::map<std::string, poly_type> restricted;
  for (const auto& a : sup.at(type)) {
    auto it = u.find(a);
    if (it == u.end()) fail("WrongArgKeys", "assignment misses parameter " + a);
    restricted.emplace(a, it->second);
  }
  return poly_type::app(sig, sup, type, restricted);
}

}  // namespace

op_sig op_signature(const signature& sig, const support& sup, const poly_op& op) {
  auto c = sig.resolve_ctor(op.base);
  if (!c) fail("UnknownConstructor", "'" + op.base + "'");
  std::map<std::string, poly_type> u;
  for (const auto& [a, t] : op.args) u.emplace(a, t);
  op_sig out{.dom = {}, .cod = apply_assignment(sig, sup, c->result, u)};
  for (const auto& sl : c->slots)
    out.dom.emplace_back(sl.name, apply_assignment(sig, sup, sl.type, u));
  return out;
}

std::vector<poly_op> constructors_of(const signature& sig, const support& sup,
                                     const poly_type& pt) {
  std::vector<poly_op> out;
  if (pt.is_var()) return out;
  if (sig.is_integer_type(pt.head()))
    fail("InfiniteConstructorFamily", pt.head() + " has a lazily expanded family");
  std::map<std::string, poly_type> u;
  for (const auto& [a, t] : pt.args()) u.emplace(a, t);
  for (const ctor* k : sig.ctors_of_type(pt.head())) out.push_back(instantiate(sig, sup, k->name, u));
  return out;
}

poly_report classify_poly(const signature& sig) {
  poly_report out;
  auto sup = minimal_support(sig);
  const auto params = sig.parameter_set();
  out.simple = true;
  for (const auto& b : sig.types()) {
    if (sig.is_parameter(b)) continue;
    if (sup.at(b).size() != params.size()) out.simple = false;
  }
  out.semi_simple = true;
  for (const auto& comp : sig.disjoint_components()) {
    poly_component pc;
    pc.types = comp.types();
    auto csup = minimal_support(comp);
    auto cparams = comp.parameter_set();
    pc.simple = true;
    for (const auto& b : comp.types()) {
      if (comp.is_parameter(b)) continue;
      if (csup.at(b).size() != cparams.size()) pc.simple = false;
    }
    out.semi_simple &= pc.simple;
    out.components.push_back(std::move(pc));
  }
  return out;
}

namespace {

term poly_parse_at(const std::vector<std::string>& toks, size_t& pos, const poly_type& expected,
                   const signature& sig, const support& sup, const specifier& spec) {
  if (pos >= toks.size()) fail("TruncatedInput", "expected a term of type " + expected.str());
  const std::string& tok = toks[pos];
  ++pos;
  if (tok == "_") return term::bottom(expected.str());
  if (tok.size() > 1 && tok[0] == '?') return term::variable(tok.substr(1), expected.str());
  if (expected.is_var())
    fail("PolyTypeMismatch", "constructor '" + tok + "' cannot inhabit type variable " +
                                 expected.str());
  const std::string& b = expected.head();
  auto kname = spec.ctor_for(sig, b, tok);
  if (!kname) {
    // a known token of the wrong type is a type error, not an unknown token
    for (const auto& t2 : sig.types())
      if (spec.ctor_for(sig, t2, tok))
        fail("PolyTypeMismatch", "token '" + tok + "' does not build " + expected.str());
    fail("UnknownToken", "type " + expected.str() + ": token '" + tok + "'");
  }
  std::map<std::string, poly_type> u;
  for (const auto& [a, t] : expected.args()) u.emplace(a, t);
  auto op = instantiate(sig, sup, *kname,
                        [&] {
                          std::map<std::string, poly_type> r;
                          auto c = sig.resolve_ctor(*kname);
                          for (const auto& a : sup.at(c->result)) r.emplace(a, u.at(a));
                          return r;
                        }());
  auto osig = op_signature(sig, sup, op);
  std::vector<term> kids;
  kids.reserve(osig.dom.size());
  for (const auto& [slot_name, slot_type] : osig.dom)
    kids.push_back(poly_parse_at(toks, pos, slot_type, sig, sup, spec));
  return term::node(*kname, expected.str(), std::move(kids));
}

}  // namespace

term poly_parse(const std::vector<std::string>& tokens, const poly_type& expected,
                const signature& sig, const support& sup, const specifier& spec) {
  size_t pos = 0;
  term t = poly_parse_at(tokens, pos, expected, sig, sup, spec);
  if (pos != tokens.size())
    fail("TrailingTokens", "input continues after one full term (at token " +
                               std::to_string(pos + 1) + ")");
  return t;
}

term poly_parse(const std::string& text, const poly_type& expected, const signature& sig,
                const support& sup, const specifier& spec) {
  return poly_parse(tokenize_term(text), expected, sig, sup, spec);
}

compat_result check_compatibility(const family_oracle& fam, const signature& sig,
                                  const support& sup,
                                  const std::vector<param_assignment>& probes) {
  compat_result out;
  std::vector<finite_algebra> algs;
  algs.reserve(probes.size());
  for (const auto& p : probes) algs.push_back(fam(p));
  auto agree_on = [&](const param_assignment& v, const param_assignment& w,
                      const std::vector<std::string>& params) {
    for (const auto& a : params) {
      auto cv = v.carriers.find(a), cw = w.carriers.find(a);
      if ((cv == v.carriers.end()) != (cw == w.carriers.end())) return false;
      if (cv != v.carriers.end() && cv->second != cw->second) return false;
      auto bv = v.bottoms.find(a), bw = w.bottoms.find(a);
      if ((bv == v.bottoms.end()) != (bw == w.bottoms.end())) return false;
      if (bv != v.bottoms.end() && bv->second != bw->second) return false;
    }
    return true;
  };
  for (size_t i = 0; i < probes.size(); ++i)
    for (size_t j = i + 1; j < probes.size(); ++j) {
      for (const auto& b : sig.types()) {
        if (sig.is_parameter(b)) continue;
        if (!agree_on(probes[i], probes[j], sup.at(b))) continue;
        if (algs[i].carriers.at(b) != algs[j].carriers.at(b))
          return {false, true, "carrier at " + b + " differs between probes " +
                                   std::to_string(i) + " and " + std::to_string(j)};
      }
      for (const auto& k : sig.ctors()) {
        if (!agree_on(probes[i], probes[j], sup.at(k.result))) continue;
        auto ti = algs[i].tables.find(k.name);
        auto tj = algs[j].tables.find(k.name);
        bool hi = ti != algs[i].tables.end(), hj = tj != algs[j].tables.end();
        if (hi != hj || (hi && ti->second != tj->second))
          return {false, true, "operation " + k.name + " differs between probes " +
                                   std::to_string(i) + " and " + std::to_string(j)};
      }
    }
  return out;
}

instantiation_engine::instantiation_engine(family_oracle fam, signature sig, support sup,
                                           param_assignment type_vars)
    : fam_(std::move(fam)),
      sig_(std::move(sig)),
      sup_(std::move(sup)),
      type_vars_(std::move(type_vars)) {}

instantiation_engine::result instantiation_engine::at(const poly_type& pt) {
  std::string key = pt.str();
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  result r = compute(pt);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.emplace(std::move(key), std::move(r)).first;
  return it->second;
}

instantiation_engine::result instantiation_engine::compute(const poly_type& pt) {
  result r;
  if (pt.is_var()) {
    auto it = type_vars_.carriers.find(pt.head());
    if (it == type_vars_.carriers.end())
      fail("UnboundVariable", "no carrier for type variable " + pt.head());
    r.carrier = it->second;
    if (auto bt = type_vars_.bottoms.find(pt.head()); bt != type_vars_.bottoms.end())
      r.bottom = bt->second;
    return r;
  }
  // carrier of each argument first, then one oracle call
  param_assignment v;
  for (const auto& [a, arg] : pt.args()) {
    result sub = at(arg);
    v.carriers[a] = sub.carrier;
    if (sub.bottom) v.bottoms[a] = *sub.bottom;
  }
  // unconstrained parameters get empty carriers; compatibility makes the
  // oracle blind to them at this type
  for (const auto& a : sig_.parameter_set())
    if (!v.carriers.count(a)) v.carriers[a] = {};
  finite_algebra alg;
  try {
    alg = fam_(v);
  } catch (const error& e) {
    throw error("PropagatedOracleError", e.what());
  }
  auto it = alg.carriers.find(pt.head());
  if (it == alg.carriers.end()) fail("PropagatedOracleError", "no carrier at " + pt.head());
  r.carrier = it->second;
  if (auto bt = alg.bottoms.find(pt.head()); bt != alg.bottoms.end()) r.bottom = bt->second;
  for (const ctor* k : sig_.ctors_of_type(pt.head())) {
    if (auto tb = alg.tables.find(k->name); tb != alg.tables.end()) r.ops[k->name] = tb->second;
  }
  r.partial = alg.partial;
  return r;
}

}  // namespace adt
