#include "adt/head_type.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "adt/error.hpp"

namespace adt {

namespace {

std::string pattern_str(unsigned mask, size_t n) {
  std::string s;
  for (size_t i = 0; i < n; ++i) s += (mask >> i) & 1u ? '#' : '_';
  return s;
}

}  // namespace

bool is_product_type(const signature& sig, const std::string& type) {
  auto ks = sig.ctors_of_type(type);
  if (sig.is_integer_type(type)) return false;
  if (ks.size() != 1) return false;
  const ctor* k = ks[0];
  if (k->slots.size() < 2) return false;
  for (const auto& sl : k->slots)
    if (sl.type == type) return false;
  return true;
}

head_type head_type::make(const signature& sig, builtin b) {
  head_type h;
  h.sig_ = sig;
  switch (b) {
    case builtin::flat: h.name_ = "flat"; break;
    case builtin::strict: h.name_ = "strict"; break;
    case builtin::smash: h.name_ = "smash"; break;
    case builtin::degenerate: h.name_ = "degenerate"; break;
  }
  h.numeral_value_ = (b == builtin::degenerate) ? head_value::bot : head_value::nat;
  for (const auto& k : sig.ctors()) {
    size_t n = k.slots.size();
    if (n > 20) fail("ArityTooLarge", k.name);
    std::vector<head_value> table(static_cast<size_t>(1) << n);
    bool smash_here = b == builtin::smash && is_product_type(sig, k.result);
    for (unsigned mask = 0; mask < table.size(); ++mask) {
      bool all = mask + 1 == (1u << n);
      bool any = mask != 0;
      head_value v = head_value::nat;
      switch (b) {
        case builtin::flat: v = all ? head_value::nat : head_value::bot; break;
        case builtin::strict: v = head_value::nat; break;
        case builtin::degenerate: v = head_value::bot; break;
        case builtin::smash:
          v = smash_here ? (any ? head_value::nat : head_value::bot) : head_value::nat;
          break;
      }
      table[mask] = v;
    }
    h.tables_[k.name] = std::move(table);
  }
  return h;
}

head_type head_type::make(const signature& sig, const std::string& name) {
  if (name == "flat") return make(sig, builtin::flat);
  if (name == "strict") return make(sig, builtin::strict);
  if (name == "smash") return make(sig, builtin::smash);
  if (name == "degenerate") return make(sig, builtin::degenerate);
  fail("UnknownHeadType", "'" + name + "'");
}

head_type head_type::from_tables(const signature& sig,
                                 std::map<std::string, std::vector<head_value>> tables) {
  head_type h;
  h.sig_ = sig;
  for (const auto& k : sig.ctors()) {
    auto it = tables.find(k.name);
    if (it == tables.end()) fail("IncompleteHeadType", "no table for " + k.name);
    if (it->second.size() != (static_cast<size_t>(1) << k.slots.size()))
      fail("IncompleteHeadType", "table for " + k.name + " is not total");
  }
  for (const auto& [k, _] : tables)
    if (!sig.has_ctor(k)) fail("UnknownConstructor", "head table for '" + k + "'");
  h.tables_ = std::move(tables);
  return h;
}

head_type head_type::load(const signature& sig, const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::map<std::string, std::vector<head_value>> tables;
  bool any_line = false;
  std::string single;
  while (std::getline(in, raw)) {
    if (auto hsh = raw.find('#'); hsh != std::string::npos && raw.find("->") == std::string::npos)
      raw.resize(hsh);  // '#' begins a comment only outside pattern lines
    std::istringstream is(raw);
    std::string first;
    if (!(is >> first)) continue;
    if (first != "head") {
      if (!any_line && single.empty()) {
        single = first;
        continue;
      }
      fail("ParseError", "head-type file: unexpected '" + first + "'");
    }
    any_line = true;
    std::string k, pat, arrow, val;
    if (!(is >> k)) fail("ParseError", "head line: missing constructor");
    if (!k.empty() && k.back() == ':') k.pop_back();
    std::string rest;
    std::getline(is, rest);
    std::istringstream rs(rest);
    std::vector<std::string> toks;
    std::string tk;
    while (rs >> tk) toks.push_back(tk);
    if (toks.size() == 2 && toks[0] == "->") {  // nullary: empty pattern
      pat = "";
      val = toks[1];
    } else if (toks.size() == 3 && toks[1] == "->") {
      pat = toks[0];
      val = toks[2];
    } else {
      fail("ParseError", "head line for " + k + ": expected 'pattern -> value'");
    }
    const ctor* c = sig.find_ctor(k);
    if (!c) fail("UnknownConstructor", "head table for '" + k + "'");
    if (pat.size() != c->slots.size())
      fail("ParseError", "head " + k + ": pattern arity mismatch");
    unsigned mask = 0;
    for (size_t i = 0; i < pat.size(); ++i) {
      if (pat[i] == '#')
        mask |= 1u << i;
      else if (pat[i] != '_')
        fail("ParseError", "head " + k + ": pattern uses '#' and '_' only");
    }
    head_value v;
    if (val == "#")
      v = head_value::nat;
    else if (val == "_")
      v = head_value::bot;
    else
      fail("ParseError", "head " + k + ": value is '#' or '_'");
    auto& table = tables[k];
    table.resize(static_cast<size_t>(1) << c->slots.size(), head_value::nat);
    table[mask] = v;
  }
  if (!any_line) {
    if (single.empty()) fail("ParseError", "empty head-type file");
    return make(sig, single);
  }
  // unlisted constructors default to strict
  for (const auto& k : sig.ctors())
    if (!tables.count(k.name))
      tables[k.name] =
          std::vector<head_value>(static_cast<size_t>(1) << k.slots.size(), head_value::nat);
  return from_tables(sig, std::move(tables));
}

head_value head_type::apply(const std::string& ctor_name,
                            const std::vector<head_value>& args) const {
  auto it = tables_.find(ctor_name);
  if (it == tables_.end()) {
    // lazily expanded numeral: nullary constant
    auto c = sig_.resolve_ctor(ctor_name);
    if (c && c->slots.empty()) return numeral_value_;
    fail("UnknownConstructor", "head value of '" + ctor_name + "'");
  }
  unsigned mask = 0;
  for (size_t i = 0; i < args.size(); ++i)
    if (args[i] == head_value::nat) mask |= 1u << i;
  return it->second.at(mask);
}

head_report head_properties(const head_type& h) {
  head_report r;
  for (const auto& [k, table] : h.tables()) {
    size_t n = 0;
    while ((static_cast<size_t>(1) << n) < table.size()) ++n;
    unsigned full = static_cast<unsigned>(table.size() - 1);
    if (table[full] != head_value::nat) {
      r.natural_invariant = false;
      r.witnesses.push_back(k + ": " + pattern_str(full, n) + " -> _");
    }
    // monotone w.r.t. bitwise implication of patterns
    for (unsigned m1 = 0; m1 < table.size(); ++m1)
      for (unsigned m2 = m1; m2 < table.size(); ++m2) {
        if ((m1 & m2) != m1) continue;  // need m1 ⊑ m2
        if (table[m1] == head_value::nat && table[m2] == head_value::bot) {
          r.stable = false;
          r.witnesses.push_back(k + ": " + pattern_str(m1, n) + " -> # but " +
                                pattern_str(m2, n) + " -> _");
        }
      }
  }
  return r;
}

head_value eval_head(const term& t, const head_type& h) {
  switch (t.k()) {
    case term::kind::bottom:
      return head_value::bot;
    case term::kind::variable:
      return head_value::nat;  // variables stand for defined parameter elements
    case term::kind::node: {
      std::vector<head_value> args;
      args.reserve(t.children().size());
      for (const auto& c : t.children()) args.push_back(eval_head(c, h));
      return h.apply(t.name(), args);
    }
  }
  fail("Internal", "unreachable");
}

term normalize(const term& t, const head_type& h) {
  switch (t.k()) {
    case term::kind::bottom:
    case term::kind::variable:
      return t;
    case term::kind::node: {
      std::vector<term> kids;
      std::vector<head_value> vals;
      kids.reserve(t.children().size());
      for (const auto& c : t.children()) {
        term nc = normalize(c, h);
        // on normal forms the head value is ♮ unless the term is a bottom
        vals.push_back(nc.k() == term::kind::bottom ? head_value::bot : head_value::nat);
        kids.push_back(std::move(nc));
      }
      if (h.apply(t.name(), vals) == head_value::bot) return term::bottom(t.type());
      return term::node(t.name(), t.type(), std::move(kids));
    }
  }
  fail("Internal", "unreachable");
}

finite_algebra flat_extension(const finite_algebra& alg) {
  if (alg.bottomed()) fail("AlreadyBottomed", "flat extension of a bottomed algebra");
  finite_algebra out;
  out.sig = alg.sig;
  out.partial = alg.partial;
  std::map<std::string, std::string> bot_of;
  for (const auto& [t, es] : alg.carriers) {
    std::set<std::string> used(es.begin(), es.end());
    std::string b = "_";
    while (used.count(b)) b += "b";
    bot_of[t] = b;
    auto v = es;
    v.insert(v.begin(), b);
    out.carriers[t] = std::move(v);
    out.bottoms[t] = b;
  }
  for (const auto& k : alg.sig.ctors()) {
    auto it = alg.tables.find(k.name);
    std::vector<std::vector<std::string>> pools;
    for (const auto& sl : k.slots) pools.push_back(out.carriers.at(sl.type));
    std::vector<size_t> idx(pools.size(), 0);
    auto& table = out.tables[k.name];
    while (true) {
      std::vector<std::string> args;
      bool any_bot = false;
      for (size_t i = 0; i < idx.size(); ++i) {
        args.push_back(pools[i][idx[i]]);
        if (args.back() == bot_of.at(k.slots[i].type)) any_bot = true;
      }
      if (any_bot) {
        table[args] = bot_of.at(k.result);
      } else {
        const std::string* res = nullptr;
        if (it != alg.tables.end())
          if (auto e = it->second.find(args); e != it->second.end()) res = &e->second;
        if (res)
          table[args] = *res;
        else if (alg.partial)
          ;  // keep the truncation partial
        else
          fail("PartialTableEncountered", k.name);
      }
      size_t i = idx.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++idx[i] < pools[i].size()) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (done) break;
    }
  }
  out.validate();
  return out;
}

}  // namespace adt
