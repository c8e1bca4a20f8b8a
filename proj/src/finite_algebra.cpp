#include "adt/finite_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "adt/error.hpp"
#include "adt/parallel.hpp"

namespace adt {

namespace {

std::string tuple_str(const std::vector<std::string>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i];
  }
  return s + ")";
}

// iterate all argument tuples of k over the given per-type element lists
bool next_tuple(std::vector<size_t>& idx, const std::vector<size_t>& sizes) {
  size_t i = idx.size();
  while (i > 0) {
    --i;
    if (++idx[i] < sizes[i]) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace

family finite_algebra::full_family() const {
  family f;
  for (const auto& [t, es] : carriers) f.sets[t] = {es.begin(), es.end()};
  return f;
}

long long finite_algebra::carrier_total() const {
  long long n = 0;
  for (const auto& [t, es] : carriers) n += static_cast<long long>(es.size());
  return n;
}

void finite_algebra::validate() const {
  for (const auto& b : sig.types())
    if (!carriers.count(b)) fail("MissingCarrier", "no carrier for type " + b);
  for (const auto& [t, es] : carriers) {
    if (!sig.has_type(t)) fail("UnknownType", "carrier for undeclared type " + t);
    std::set<std::string> seen;
    for (const auto& e : es)
      if (!seen.insert(e).second) fail("DuplicateElement", t + ": element " + e + " repeated");
  }
  auto in_carrier = [&](const std::string& t, const std::string& e) {
    const auto& es = carriers.at(t);
    return std::find(es.begin(), es.end(), e) != es.end();
  };
  for (const auto& [k, table] : tables) {
    auto c = sig.resolve_ctor(k);
    if (!c) fail("UnknownConstructor", "table for '" + k + "'");
    for (const auto& [args, res] : table) {
      if (args.size() != c->slots.size()) fail("ArityMismatch", k + tuple_str(args));
      for (size_t i = 0; i < args.size(); ++i)
        if (!in_carrier(c->slots[i].type, args[i]))
          fail("UnknownElement", k + tuple_str(args) + ": " + args[i]);
      if (!in_carrier(c->result, res))
        fail("UnknownElement", k + tuple_str(args) + " = " + res);
    }
  }
  for (const auto& [t, e] : bottoms) {
    if (!carriers.count(t)) fail("UnknownType", "bottom for " + t);
    if (!in_carrier(t, e)) fail("UnknownElement", "bottom " + e + " not in carrier of " + t);
  }
  if (!partial) {
    for (const auto& k : sig.ctors()) {
      const auto table = tables.find(k.name);
      size_t expect = 1;
      for (const auto& sl : k.slots) expect *= carriers.at(sl.type).size();
      size_t have = table == tables.end() ? 0 : table->second.size();
      if (have != expect)
        fail("PartialTable", k.name + ": " + std::to_string(have) + " of " +
                                 std::to_string(expect) + " entries (mark partial?)");
    }
  }
}

finite_algebra finite_algebra::load(const signature& sig, const std::string& text) {
  finite_algebra a;
  a.sig = sig;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    // normalize punctuation to spaces: op k(a,b) = c
    std::string sp;
    for (char c : raw) sp += (c == '(' || c == ')' || c == ',' || c == ':' || c == '=') ? ' ' : c;
    std::istringstream is(sp);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "carrier") {
      if (toks.size() < 2) fail("ParseError", "line " + std::to_string(lineno) + ": carrier");
      auto& v = a.carriers[toks[1]];
      for (size_t i = 2; i < toks.size(); ++i) v.push_back(toks[i]);
    } else if (toks[0] == "bottom") {
      if (toks.size() != 3) fail("ParseError", "line " + std::to_string(lineno) + ": bottom");
      a.bottoms[toks[1]] = toks[2];
    } else if (toks[0] == "op") {
      if (toks.size() < 3) fail("ParseError", "line " + std::to_string(lineno) + ": op");
      std::string k = toks[1];
      std::vector<std::string> args(toks.begin() + 2, toks.end() - 1);
      a.tables[k][args] = toks.back();
    } else if (toks[0] == "partial") {
      a.partial = true;
    } else {
      fail("ParseError", "line " + std::to_string(lineno) + ": unknown directive " + toks[0]);
    }
  }
  for (const auto& b : sig.types())
    if (!a.carriers.count(b)) a.carriers[b] = {};
  // infer partiality from incomplete tables
  if (!a.partial) {
    for (const auto& k : sig.ctors()) {
      size_t expect = 1;
      for (const auto& sl : k.slots) expect *= a.carriers[sl.type].size();
      auto it = a.tables.find(k.name);
      size_t have = it == a.tables.end() ? 0 : it->second.size();
      if (have < expect) a.partial = true;
    }
  }
  a.validate();
  return a;
}

std::string finite_algebra::print() const {
  std::ostringstream out;
  for (const auto& b : sig.types()) {
    out << "carrier " << b << ":";
    for (const auto& e : carriers.at(b)) out << ' ' << e;
    out << '\n';
  }
  for (const auto& [t, e] : bottoms) out << "bottom " << t << ": " << e << '\n';
  if (partial) out << "partial\n";
  for (const auto& [k, table] : tables)
    for (const auto& [args, res] : table) {
      out << "op " << k << "(";
      for (size_t i = 0; i < args.size(); ++i) out << (i ? "," : "") << args[i];
      out << ") = " << res << '\n';
    }
  return out.str();
}

closure_result invariant_closure(const finite_algebra& alg, const family& U) {
  closure_result r;
  for (const auto& [t, es] : alg.carriers) {
    auto& s = r.fam.sets[t];
    if (auto it = U.sets.find(t); it != U.sets.end()) s = it->second;
  }
  long long rounds = alg.carrier_total() + 1;
  for (long long round = 0; round < rounds; ++round) {
    bool grew = false;
    for (const auto& k : alg.sig.ctors()) {
      auto tb = alg.tables.find(k.name);
      // all argument tuples drawn from the current family
      std::vector<std::vector<std::string>> pools;
      bool empty_pool = false;
      for (const auto& sl : k.slots) {
        const auto& s = r.fam.sets.at(sl.type);
        if (s.empty()) empty_pool = true;
        pools.emplace_back(s.begin(), s.end());
      }
      if (empty_pool) continue;
      std::vector<size_t> idx(pools.size(), 0);
      std::vector<size_t> sizes;
      for (const auto& p : pools) sizes.push_back(p.size());
      do {
        std::vector<std::string> args;
        for (size_t i = 0; i < idx.size(); ++i) args.push_back(pools[i][idx[i]]);
        const std::string* res = nullptr;
        if (tb != alg.tables.end())
          if (auto entry = tb->second.find(args); entry != tb->second.end()) res = &entry->second;
        if (!res) {
          if (alg.partial) {
            r.approximate = true;  // missing application contributes nothing
            continue;
          }
          fail("PartialTableEncountered", k.name + tuple_str(args));
        }
        grew |= r.fam.sets[k.result].insert(*res).second;
      } while (next_tuple(idx, sizes));
    }
    if (!grew) return r;
  }
  return r;
}

namespace {

// unique decomposition map: elem -> list of (ctor, args) with table value elem
std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, std::vector<std::string>>>>
preimages(const finite_algebra& alg) {
  std::map<std::pair<std::string, std::string>,
           std::vector<std::pair<std::string, std::vector<std::string>>>>
      pre;
  for (const auto& [k, table] : alg.tables) {
    auto c = alg.sig.resolve_ctor(k);
    for (const auto& [args, res] : table) pre[{c->result, res}].push_back({k, args});
  }
  return pre;
}

}  // namespace

classification classify(const finite_algebra& alg, const family& U) {
  classification out;
  out.approximate = alg.partial;
  out.has_bottoms = alg.bottomed();
  const auto params = alg.sig.parameter_set();
  std::set<std::string> param_set(params.begin(), params.end());

  auto covers = [&](const closure_result& c) {
    out.approximate |= c.approximate;
    for (const auto& [t, es] : alg.carriers)
      if (c.fam.sets.at(t).size() != es.size()) return false;
    return true;
  };
  out.minimal = covers(invariant_closure(alg, {}));
  out.u_minimal = covers(invariant_closure(alg, U));
  family vfam;
  for (const auto& a : params)
    vfam.sets[a] = {alg.carriers.at(a).begin(), alg.carriers.at(a).end()};
  out.v_minimal = covers(invariant_closure(alg, vfam));

  // injectivity of each table and image overlaps
  bool injective = true;
  std::string inj_witness;
  std::map<std::pair<std::string, std::string>, std::string> image_owner;  // (type, elem) -> ctor
  bool disjoint = true;
  std::string overlap_witness;
  for (const auto& [k, table] : alg.tables) {
    auto c = alg.sig.resolve_ctor(k);
    std::map<std::string, std::vector<std::string>> seen;
    for (const auto& [args, res] : table) {
      auto [it, fresh] = seen.emplace(res, args);
      if (!fresh && injective) {
        injective = false;
        inj_witness = k + tuple_str(it->second) + " = " + k + tuple_str(args) + " = " + res;
      }
      auto [own, owned] = image_owner.emplace(std::make_pair(c->result, res), k);
      if (!owned && own->second != k && disjoint) {
        disjoint = false;
        overlap_witness = c->result + ": " + res + " in Im(" + own->second + ") and Im(" + k + ")";
      }
    }
  }
  out.unambiguous = injective && disjoint;
  out.unambiguous_witness = !injective ? inj_witness : overlap_witness;

  auto pre = preimages(alg);

  // regular: every element of a non-parameter type decomposes uniquely
  out.regular = injective && disjoint;
  for (const auto& [t, es] : alg.carriers) {
    if (param_set.count(t)) continue;
    for (const auto& e : es) {
      auto it = pre.find({t, e});
      size_t n = it == pre.end() ? 0 : it->second.size();
      if (n != 1 && out.regular_witness.empty())
        out.regular_witness = t + ": " + e + " has " + std::to_string(n) + " decompositions";
      if (n != 1) out.regular = false;
    }
  }
  if (!out.regular && out.regular_witness.empty()) out.regular_witness = out.unambiguous_witness;

  // U-regular: images avoid U and partition carrier minus U
  out.u_regular = injective && disjoint;
  for (const auto& [t, es] : alg.carriers) {
    if (param_set.count(t)) continue;
    for (const auto& e : es) {
      bool in_u = U.contains(t, e);
      auto it = pre.find({t, e});
      size_t n = it == pre.end() ? 0 : it->second.size();
      bool bad = in_u ? (n != 0) : (n != 1);
      if (bad) {
        out.u_regular = false;
        if (out.u_regular_witness.empty())
          out.u_regular_witness = t + ": " + e + (in_u ? " lies in U yet in some image"
                                                       : " has " + std::to_string(n) +
                                                             " decompositions outside U");
      }
    }
  }

  out.initial = out.minimal && out.regular;
  out.u_free = out.u_minimal && out.u_regular;
  out.v_initial = out.v_minimal && out.regular;

  if (out.has_bottoms) {
    family bfam = vfam;
    for (const auto& [t, e] : alg.bottoms) bfam.sets[t].insert(e);
    out.v_minimal_bottomed = covers(invariant_closure(alg, bfam));

    out.regular_bottomed = injective && disjoint;
    for (const auto& [t, es] : alg.carriers) {
      if (param_set.count(t)) continue;
      for (const auto& e : es) {
        if (alg.is_bottom(t, e)) continue;
        auto it = pre.find({t, e});
        size_t n = it == pre.end() ? 0 : it->second.size();
        if (n != 1) {
          out.regular_bottomed = false;
          if (out.regular_bottomed_witness.empty())
            out.regular_bottomed_witness =
                t + ": " + e + " has " + std::to_string(n) + " decompositions";
        }
      }
    }
    // strictly regular additionally keeps every image away from the bottoms
    bool bottoms_clear = true;
    for (const auto& [k, table] : alg.tables) {
      auto c = alg.sig.resolve_ctor(k);
      for (const auto& [args, res] : table)
        if (alg.is_bottom(c->result, res)) {
          bottoms_clear = false;
          if (out.strict_witness.empty())
            out.strict_witness = k + tuple_str(args) + " = " + res + " (a bottom)";
        }
    }
    out.strictly_unambiguous = out.unambiguous && bottoms_clear;
    out.strictly_regular = out.regular_bottomed && bottoms_clear;
    // ♮-invariant: non-bottom arguments never map to a bottom
    out.natural_invariant = true;
    for (const auto& [k, table] : alg.tables) {
      auto c = alg.sig.resolve_ctor(k);
      for (const auto& [args, res] : table) {
        bool all_defined = true;
        for (size_t i = 0; i < args.size(); ++i)
          if (alg.is_bottom(c->slots[i].type, args[i])) all_defined = false;
        if (all_defined && alg.is_bottom(c->result, res)) {
          out.natural_invariant = false;
          if (out.natural_invariant_witness.empty())
            out.natural_invariant_witness = k + tuple_str(args) + " = " + res;
        }
      }
    }
    out.v_initial_bottomed = out.v_minimal_bottomed && out.strictly_regular;
  }
  return out;
}

grading compute_depths(const finite_algebra& alg) {
  const auto params = alg.sig.parameter_set();
  std::set<std::string> param_set(params.begin(), params.end());
  grading g;
  for (const auto& [t, es] : alg.carriers)
    for (const auto& e : es) g.rank[t][e] = 0;
  long long bound = alg.carrier_total() + 1;
  for (long long round = 0; round <= bound; ++round) {
    grading next = g;
    for (const auto& [t, es] : alg.carriers)
      for (const auto& e : es) next.rank[t][e] = 0;
    for (const auto& [k, table] : alg.tables) {
      auto c = alg.sig.resolve_ctor(k);
      for (const auto& [args, res] : table) {
        if (alg.is_bottom(c->result, res)) continue;
        int m = 0;
        for (size_t i = 0; i < args.size(); ++i)
          m = std::max(m, g.rank.at(c->slots[i].type).at(args[i]) + 1);
        auto& slot = next.rank[c->result][res];
        slot = std::max(slot, m);
      }
    }
    // bottoms and parameter elements stay at zero
    for (const auto& [t, e] : alg.bottoms) next.rank[t][e] = 0;
    for (const auto& a : params)
      for (const auto& e : alg.carriers.at(a)) next.rank[a][e] = 0;
    if (next == g) return g;
    g = std::move(next);
  }
  fail("Diverged", "no depth fixpoint within " + std::to_string(bound) + " rounds");
}

bool verify_grading(const finite_algebra& alg, const grading& g, bool bottomed) {
  if (bottomed)
    for (const auto& [t, e] : alg.bottoms)
      if (g.rank.at(t).at(e) != 0) return false;
  for (const auto& [k, table] : alg.tables) {
    auto c = alg.sig.resolve_ctor(k);
    for (const auto& [args, res] : table) {
      if (bottomed && alg.is_bottom(c->result, res)) continue;
      int r = g.rank.at(c->result).at(res);
      for (size_t i = 0; i < args.size(); ++i)
        if (g.rank.at(c->slots[i].type).at(args[i]) >= r) return false;
    }
  }
  return true;
}

hom_check check_homomorphism(const finite_algebra& src, const finite_algebra& dst,
                             const hom_candidate& pi, bool bottomed) {
  hom_check out;
  auto img = [&](const std::string& t, const std::string& e) -> const std::string& {
    return pi.map.at(t).at(e);
  };
  if (bottomed) {
    for (const auto& [t, e] : src.bottoms) {
      auto it = dst.bottoms.find(t);
      if (it == dst.bottoms.end() || img(t, e) != it->second)
        return {false, "bottom of " + t + " not preserved"};
    }
  }
  for (const auto& [k, table] : src.tables) {
    auto c = src.sig.resolve_ctor(k);
    auto dt = dst.tables.find(k);
    for (const auto& [args, res] : table) {
      std::vector<std::string> mapped;
      for (size_t i = 0; i < args.size(); ++i) mapped.push_back(img(c->slots[i].type, args[i]));
      if (dt == dst.tables.end())
        return {false, k + tuple_str(args) + ": no table in codomain"};
      auto entry = dt->second.find(mapped);
      if (entry == dt->second.end())
        return {false, k + tuple_str(mapped) + ": missing in codomain"};
      if (entry->second != img(c->result, res))
        return {false, k + tuple_str(args) + ": " + entry->second + " != image of " + res};
    }
  }
  return out;
}

std::vector<hom_candidate> find_homomorphisms(const finite_algebra& src, const finite_algebra& dst,
                                              bool bottomed, const budget& b) {
  if (!src.sig.equivalent(dst.sig)) fail("SignatureMismatch", "algebras over different signatures");
  // positions: all (type, elem) of the source, minus fixed bottoms
  struct position {
    std::string type;
    std::string elem;
  };
  std::vector<position> free_pos;
  std::map<std::string, std::map<std::string, std::string>> base;
  for (const auto& b2 : src.sig.types()) {
    for (const auto& e : src.carriers.at(b2)) {
      if (bottomed && src.is_bottom(b2, e)) {
        auto it = dst.bottoms.find(b2);
        if (it == dst.bottoms.end())
          fail("MissingBottom", "codomain has no bottom for " + b2);
        base[b2][e] = it->second;
      } else {
        free_pos.push_back({b2, e});
      }
    }
  }
  long long total = 1;
  for (const auto& p : free_pos) {
    long long n = static_cast<long long>(dst.carriers.at(p.type).size());
    if (n == 0) {
      total = 0;
      break;
    }
    if (total > b.candidates / n) fail("BudgetExceeded", "homomorphism candidate space");
    total *= n;
  }

  auto decode = [&](long long code) {
    hom_candidate h;
    h.map = base;
    for (const auto& p : free_pos) {
      const auto& targets = dst.carriers.at(p.type);
      h.map[p.type][p.elem] = targets[code % targets.size()];
      code /= static_cast<long long>(targets.size());
    }
    return h;
  };
  auto accepted = par::scan_accept(total, [&](long long code) {
    return check_homomorphism(src, dst, decode(code), bottomed).ok;
  });
  std::vector<hom_candidate> out;
  out.reserve(accepted.size());
  for (long long code : accepted) out.push_back(decode(code));
  std::sort(out.begin(), out.end());
  return out;
}

finite_algebra sum_algebras(const std::vector<finite_algebra>& parts) {
  std::vector<signature> sigs;
  for (const auto& p : parts) sigs.push_back(p.sig);
  finite_algebra out;
  out.sig = signature::sum(sigs);
  for (const auto& p : parts) {
    for (const auto& [t, es] : p.carriers) out.carriers[t] = es;
    for (const auto& [k, tb] : p.tables) out.tables[k] = tb;
    for (const auto& [t, e] : p.bottoms) out.bottoms[t] = e;
    out.partial |= p.partial;
  }
  out.validate();
  return out;
}

}  // namespace adt
