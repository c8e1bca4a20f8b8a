#include "adt/term.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace adt {

term term::bottom(std::string type) {
  auto p = std::make_shared<impl>();
  p->k = kind::bottom;
  p->type = std::move(type);
  p->has_bottom = true;
  return term(std::move(p));
}

term term::variable(std::string name, std::string type) {
  auto p = std::make_shared<impl>();
  p->k = kind::variable;
  p->name = std::move(name);
  p->type = std::move(type);
  return term(std::move(p));
}

term term::node(std::string ctor, std::string type, std::vector<term> children) {
  auto p = std::make_shared<impl>();
  p->k = kind::node;
  p->name = std::move(ctor);
  p->type = std::move(type);
  p->children = std::move(children);
  for (const auto& c : p->children) {
    p->depth = std::max(p->depth, c.depth() + 1);
    p->has_bottom = p->has_bottom || c.contains_bottom();
  }
  return term(std::move(p));
}

bool term::operator==(const term& o) const {
  if (p_ == o.p_) return true;
  if (p_->k != o.p_->k || p_->name != o.p_->name || p_->type != o.p_->type) return false;
  if (p_->children.size() != o.p_->children.size()) return false;
  for (size_t i = 0; i < p_->children.size(); ++i)
    if (!(p_->children[i] == o.p_->children[i])) return false;
  return true;
}

bool term::operator<(const term& o) const {
  if (p_ == o.p_) return false;
  if (p_->k != o.p_->k) return p_->k < o.p_->k;
  if (p_->name != o.p_->name) return p_->name < o.p_->name;
  if (p_->type != o.p_->type) return p_->type < o.p_->type;
  return std::lexicographical_compare(p_->children.begin(), p_->children.end(),
                                      o.p_->children.begin(), o.p_->children.end());
}

specifier specifier::from_map(const signature& sig, std::map<std::string, std::string> remap) {
  specifier s;
  s.remap_ = std::move(remap);
  for (const auto& [k, tok] : s.remap_)
    if (!sig.has_ctor(k)) fail("UnknownConstructor", "specifier maps unknown '" + k + "'");
  // local injectivity: within each K_b tokens must stay distinct
  for (const auto& b : sig.types()) {
    std::map<std::string, std::string> seen;
    for (const ctor* c : sig.ctors_of_type(b)) {
      const std::string& tok = s.token(c->name);
      auto [it, fresh] = seen.emplace(tok, c->name);
      if (!fresh)
        fail("NotLocallyInjective", "type " + b + ": constructors " + it->second + " and " +
                                        c->name + " share token '" + tok + "'");
    }
  }
  return s;
}

const std::string& specifier::token(const std::string& ctor) const {
  auto it = remap_.find(ctor);
  return it == remap_.end() ? ctor : it->second;
}

std::optional<std::string> specifier::ctor_for(const signature& sig, const std::string& type,
                                               const std::string& token) const {
  for (const ctor* c : sig.ctors_of_type(type))
    if (this->token(c->name) == token) return c->name;
  if (sig.is_integer_type(type)) {
    // numerals carry their own token
    if (auto c = sig.resolve_ctor(token); c && c->result == type) return token;
  }
  return std::nullopt;
}

term build(const signature& sig, const std::string& k, std::vector<term> children) {
  auto c = sig.resolve_ctor(k);
  if (!c) fail("UnknownConstructor", "'" + k + "'");
  if (children.size() != c->slots.size())
    fail("ArityMismatch", k + " takes " + std::to_string(c->slots.size()) + " arguments, got " +
                              std::to_string(children.size()));
  for (size_t i = 0; i < children.size(); ++i)
    if (children[i].type() != c->slots[i].type)
      fail("TypeMismatch", k + " slot " + std::to_string(i + 1) + " expects " + c->slots[i].type +
                               ", got " + children[i].type());
  return term::node(k, c->result, std::move(children));
}

static void flatten_into(const term& t, const specifier& spec, std::vector<std::string>& out) {
  switch (t.k()) {
    case term::kind::bottom:
      out.push_back("_");
      return;
    case term::kind::variable:
      out.push_back("?" + t.name());
      return;
    case term::kind::node:
      out.push_back(spec.token(t.name()));
      for (const auto& c : t.children()) flatten_into(c, spec, out);
      return;
  }
}

std::vector<std::string> flatten(const term& t, const specifier& spec) {
  std::vector<std::string> out;
  flatten_into(t, spec, out);
  return out;
}

std::string flatten_str(const term& t, const specifier& spec) {
  auto toks = flatten(t, spec);
  std::string s;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (i) s += ' ';
    s += toks[i];
  }
  return s;
}

std::string compact_str(const term& t) {
  switch (t.k()) {
    case term::kind::bottom:
      return "_";
    case term::kind::variable:
      return "?" + t.name();
    case term::kind::node: {
      if (t.children().empty()) return t.name();
      std::string s = t.name() + "(";
      for (size_t i = 0; i < t.children().size(); ++i) {
        if (i) s += ',';
        s += compact_str(t.children()[i]);
      }
      return s + ")";
    }
  }
  return {};
}

std::vector<std::string> tokenize_term(const std::string& text) {
  std::string spaced;
  for (char c : text) {
    if (c == '(' || c == ')') continue;  // grouping sugar
    spaced += c;
  }
  std::vector<std::string> out;
  std::istringstream is(spaced);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

namespace {

term parse_at(const std::vector<std::string>& toks, size_t& pos, const std::string& expected,
              const signature& sig, const specifier& spec) {
  if (pos >= toks.size()) fail("TruncatedInput", "expected a term of type " + expected);
  const std::string& tok = toks[pos];
  ++pos;
  if (tok == "_") return term::bottom(expected);
  if (tok.size() > 1 && tok[0] == '?') return term::variable(tok.substr(1), expected);
  auto kname = spec.ctor_for(sig, expected, tok);
  if (!kname) fail("UnknownToken", "type " + expected + ": token '" + tok + "'");
  auto c = sig.resolve_ctor(*kname);
  std::vector<term> children;
  children.reserve(c->slots.size());
  for (const auto& sl : c->slots) children.push_back(parse_at(toks, pos, sl.type, sig, spec));
  return term::node(*kname, c->result, std::move(children));
}

}  // namespace

term parse_term(const std::vector<std::string>& tokens, const std::string& expected,
                const signature& sig, const specifier& spec) {
  if (!sig.has_type(expected)) fail("UnknownType", "'" + expected + "'");
  size_t pos = 0;
  term t = parse_at(tokens, pos, expected, sig, spec);
  if (pos != tokens.size())
    fail("TrailingTokens", "input continues after one full term (at token " +
                               std::to_string(pos + 1) + ")");
  return t;
}

term parse_term(const std::string& text, const std::string& expected, const signature& sig,
                const specifier& spec) {
  return parse_term(tokenize_term(text), expected, sig, spec);
}

std::optional<std::string> infer_root_type(const std::vector<std::string>& tokens,
                                           const signature& sig, const specifier& spec) {
  if (tokens.empty()) return std::nullopt;
  std::optional<std::string> found;
  for (const auto& b : sig.types()) {
    if (spec.ctor_for(sig, b, tokens[0])) {
      if (found) return std::nullopt;  // ambiguous across types
      found = b;
    }
  }
  return found;
}

std::vector<term> enumerate_terms(const signature& sig, const std::string& type, int max_depth,
                                  const enum_options& opts) {
  if (!sig.has_type(type)) fail("UnknownType", "'" + type + "'");
  if (sig.has_integer_types())
    fail("InfiniteConstructorFamily",
         "enumeration needs a finite constructor set; apply an integer window first");
  // exact[t][d] = terms of type t with depth exactly d
  std::map<std::string, std::vector<std::vector<term>>> exact;
  for (const auto& t : sig.types()) {
    exact[t] = {{}};
    auto& d0 = exact[t][0];
    if (opts.bottoms) d0.push_back(term::bottom(t));
    if (auto it = opts.vars.find(t); it != opts.vars.end())
      for (const auto& v : it->second) d0.push_back(term::variable(v, t));
    for (const ctor* c : sig.ctors_of_type(t))
      if (c->slots.empty()) d0.push_back(term::node(c->name, t, {}));
  }
  for (int d = 1; d <= max_depth; ++d) {
    // up_to[t] = all terms of depth < d, in emission order
    std::map<std::string, std::vector<term>> up_to;
    for (const auto& t : sig.types()) {
      auto& v = up_to[t];
      for (int dd = 0; dd < d; ++dd)
        v.insert(v.end(), exact[t][dd].begin(), exact[t][dd].end());
    }
    for (const auto& t : sig.types()) {
      exact[t].emplace_back();
      auto& out = exact[t][d];
      for (const ctor* c : sig.ctors_of_type(t)) {
        if (c->slots.empty()) continue;
        std::vector<size_t> idx(c->slots.size(), 0);
        bool feasible = true;
        for (const auto& sl : c->slots)
          if (up_to[sl.type].empty()) feasible = false;
        if (!feasible) continue;
        while (true) {
          std::vector<term> kids;
          int kid_depth = -1;
          for (size_t i = 0; i < idx.size(); ++i) {
            const term& child = up_to[c->slots[i].type][idx[i]];
            kid_depth = std::max(kid_depth, child.depth());
            kids.push_back(child);
          }
          if (kid_depth == d - 1) out.push_back(term::node(c->name, t, std::move(kids)));
          size_t i = idx.size();
          while (i > 0) {
            --i;
            if (++idx[i] < up_to[c->slots[i].type].size()) break;
            idx[i] = 0;
            if (i == 0) goto done_ctor;
          }
        }
      done_ctor:;
      }
    }
  }
  std::vector<term> result;
  for (int d = 0; d <= max_depth; ++d)
    result.insert(result.end(), exact[type][d].begin(), exact[type][d].end());
  return result;
}

term substitute(const term& t, const std::map<std::string, term>& env) {
  switch (t.k()) {
    case term::kind::bottom:
      return t;
    case term::kind::variable: {
      auto it = env.find(t.name());
      if (it == env.end()) fail("UnboundVariable", "?" + t.name());
      if (it->second.type() != t.type())
        fail("TypeMismatch", "?" + t.name() + " has type " + t.type() + ", substituted term has " +
                                 it->second.type());
      return it->second;
    }
    case term::kind::node: {
      std::vector<term> kids;
      kids.reserve(t.children().size());
      for (const auto& c : t.children()) kids.push_back(substitute(c, env));
      return term::node(t.name(), t.type(), std::move(kids));
    }
  }
  fail("Internal", "unreachable");
}

}  // namespace adt
