#include "adt/term_order.hpp"

#include <algorithm>
#include <set>

#include "adt/error.hpp"
#include "adt/parallel.hpp"

namespace adt {

bool order_family::le(const finite_algebra& alg, const std::string& type, const std::string& a,
                      const std::string& b) const {
  const auto& es = alg.carriers.at(type);
  auto ia = std::find(es.begin(), es.end(), a) - es.begin();
  auto ib = std::find(es.begin(), es.end(), b) - es.begin();
  return rel.at(type)[static_cast<size_t>(ia)][static_cast<size_t>(ib)];
}

namespace {

bool leq_rec(const term& x, const term& y) {
  if (x.k() == term::kind::bottom) return true;
  if (x.k() == term::kind::variable) return y.k() == term::kind::variable && x == y;
  if (y.k() != term::kind::node || y.name() != x.name()) return false;
  for (size_t i = 0; i < x.children().size(); ++i)
    if (!leq_rec(x.children()[i], y.children()[i])) return false;
  return true;
}

}  // namespace

bool term_leq(const term& a, const term& b, const head_type& h) {
  if (!(normalize(a, h) == a) || !(normalize(b, h) == b))
    fail("NotNormalized", "term_leq expects normal forms");
  if (a.type() != b.type()) fail("TypeMismatch", a.type() + " vs " + b.type());
  return leq_rec(a, b);
}

refine_result refine_ordering(const finite_algebra& alg, const order_family& base) {
  refine_result out;
  out.approximate = alg.partial;
  if (!alg.bottomed()) fail("NotRegular", "refinement needs designated bottoms");
  const auto params = alg.sig.parameter_set();
  std::set<std::string> param_set(params.begin(), params.end());

  // unique decomposition of every non-bottom element of a non-parameter type
  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::vector<std::string>>>
      decomp;
  for (const auto& [k, table] : alg.tables) {
    auto c = alg.sig.resolve_ctor(k);
    for (const auto& [args, res] : table) {
      if (alg.is_bottom(c->result, res)) continue;
      auto key = std::make_pair(c->result, res);
      if (decomp.count(key))
        fail("NotRegular", c->result + ": " + res + " decomposes twice");
      decomp[key] = {k, args};
    }
  }
  for (const auto& [t, es] : alg.carriers) {
    if (param_set.count(t)) continue;
    for (const auto& e : es) {
      if (alg.is_bottom(t, e)) continue;
      if (!decomp.count({t, e})) {
        if (!alg.partial) fail("NotRegular", t + ": " + e + " has no decomposition");
        out.approximate = true;  // truncation element with no recorded origin
      }
    }
  }

  auto index_of = [&](const std::string& t, const std::string& e) {
    const auto& es = alg.carriers.at(t);
    return static_cast<size_t>(std::find(es.begin(), es.end(), e) - es.begin());
  };

  // start flat on non-parameters, base (or flat) on parameters
  order_family cur;
  for (const auto& [t, es] : alg.carriers) {
    size_t n = es.size();
    auto& m = cur.rel[t];
    if (!param_set.count(t) || !base.rel.count(t)) {
      m.assign(n, std::vector<bool>(n, false));
      for (size_t i = 0; i < n; ++i) m[i][i] = true;
      if (auto it = alg.bottoms.find(t); it != alg.bottoms.end()) {
        size_t bi = index_of(t, it->second);
        for (size_t j = 0; j < n; ++j) m[bi][j] = true;
      }
    } else {
      m = base.rel.at(t);
      if (m.size() != n) fail("ArityMismatch", "base order for " + t + " has wrong size");
      // validate bottomed partial order
      auto bit = alg.bottoms.find(t);
      for (size_t i = 0; i < n; ++i) {
        if (!m[i][i]) fail("NotAPartialOrder", "base order for " + t + " not reflexive");
        for (size_t j = 0; j < n; ++j) {
          if (i != j && m[i][j] && m[j][i])
            fail("NotAPartialOrder", "base order for " + t + " not antisymmetric");
          for (size_t l = 0; l < n; ++l)
            if (m[i][j] && m[j][l] && !m[i][l])
              fail("NotAPartialOrder", "base order for " + t + " not transitive");
        }
        if (bit != alg.bottoms.end() && !m[index_of(t, bit->second)][i])
          fail("NotAPartialOrder", "base order for " + t + ": bottom not least");
      }
    }
  }

  long long bound = 0;
  for (const auto& [t, es] : alg.carriers)
    bound += static_cast<long long>(es.size()) * static_cast<long long>(es.size());
  ++bound;

  for (long long round = 0; round <= bound; ++round) {
    order_family next = cur;
    bool changed = false;
    for (const auto& [t, es] : alg.carriers) {
      if (param_set.count(t)) continue;  // parameter orders stay fixed
      size_t n = es.size();
      auto& m = next.rel[t];
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          bool v;
          if (alg.is_bottom(t, es[i]))
            v = true;
          else if (alg.is_bottom(t, es[j]))
            v = false;
          else {
            auto di = decomp.find({t, es[i]});
            auto dj = decomp.find({t, es[j]});
            if (di == decomp.end() || dj == decomp.end())
              v = false;  // truncation: unrelated unless equal
            else if (di->second.first != dj->second.first)
              v = false;
            else {
              v = true;
              auto c = alg.sig.resolve_ctor(di->second.first);
              for (size_t s = 0; s < c->slots.size() && v; ++s) {
                const auto& ty = c->slots[s].type;
                if (!cur.rel.at(ty)[index_of(ty, di->second.second[s])]
                                   [index_of(ty, dj->second.second[s])])
                  v = false;
              }
            }
          }
          if (m[i][j] != v) changed = true;
          m[i][j] = v;
        }
    }
    if (!changed) {
      out.order = std::move(next);
      out.rounds = static_cast<int>(round);
      break;
    }
    cur = std::move(next);
    if (round == bound) fail("Diverged", "refinement did not stabilise");
  }

  // monotonicity of every table entry pair under the fixpoint order
  for (const auto& [k, table] : alg.tables) {
    auto c = alg.sig.resolve_ctor(k);
    for (const auto& [args1, res1] : table)
      for (const auto& [args2, res2] : table) {
        bool le_args = true;
        for (size_t s = 0; s < args1.size() && le_args; ++s) {
          const auto& ty = c->slots[s].type;
          if (!out.order.rel.at(ty)[index_of(ty, args1[s])][index_of(ty, args2[s])])
            le_args = false;
        }
        if (!le_args) continue;
        if (!out.order.rel.at(c->result)[index_of(c->result, res1)][index_of(c->result, res2)]) {
          out.all_monotone = false;
          std::string w = k + " non-monotone at (";
          for (size_t s = 0; s < args1.size(); ++s) w += (s ? "," : "") + args1[s];
          w += ")->(";
          for (size_t s = 0; s < args2.size(); ++s) w += (s ? "," : "") + args2[s];
          w += ")";
          out.violations.push_back(w);
        }
      }
  }
  std::sort(out.violations.begin(), out.violations.end());
  out.violations.erase(std::unique(out.violations.begin(), out.violations.end()),
                       out.violations.end());
  return out;
}

std::vector<term> principal_ideal(const term& t, const head_type& h) {
  if (!(normalize(t, h) == t)) fail("NotNormalized", "principal_ideal expects a normal form");
  switch (t.k()) {
    case term::kind::bottom:
      return {t};
    case term::kind::variable:
      return {term::bottom(t.type()), t};
    case term::kind::node: {
      std::vector<std::vector<term>> kid_ideals;
      for (const auto& c : t.children()) kid_ideals.push_back(principal_ideal(c, h));
      std::vector<term> out = {term::bottom(t.type())};
      std::vector<size_t> idx(kid_ideals.size(), 0);
      while (true) {
        std::vector<term> kids;
        std::vector<head_value> vals;
        for (size_t i = 0; i < idx.size(); ++i) {
          const term& kid = kid_ideals[i][idx[i]];
          vals.push_back(kid.k() == term::kind::bottom ? head_value::bot : head_value::nat);
          kids.push_back(kid);
        }
        if (h.apply(t.name(), vals) == head_value::nat)
          out.push_back(term::node(t.name(), t.type(), std::move(kids)));
        size_t i = idx.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++idx[i] < kid_ideals[i].size()) {
            done = false;
            break;
          }
          idx[i] = 0;
        }
        if (done) break;
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  fail("Internal", "unreachable");
}

bool is_maximal(const term& t, const head_type& h) {
  if (!(normalize(t, h) == t)) fail("NotNormalized", "is_maximal expects a normal form");
  return !t.contains_bottom();
}

std::vector<term> normal_forms(const signature& sig, const std::string& type, const head_type& h,
                               int depth, const enum_options& opts) {
  std::vector<term> out;
  for (const auto& t : enumerate_terms(sig, type, depth, opts))
    if (normalize(t, h) == t) out.push_back(t);
  return out;
}

std::string elem_str(const term& t) {
  return t.k() == term::kind::variable ? t.name() : compact_str(t);
}

finite_algebra truncation_algebra(const signature& sig, const head_type& h, int depth,
                                  const enum_options& opts) {
  finite_algebra alg;
  alg.sig = sig;
  alg.partial = true;
  std::map<std::string, std::vector<term>> nf;
  for (const auto& ty : sig.types()) {
    nf[ty] = normal_forms(sig, ty, h, sig.is_parameter(ty) ? 0 : depth, opts);
    for (const auto& t : nf[ty]) alg.carriers[ty].push_back(elem_str(t));
    if (opts.bottoms) alg.bottoms[ty] = "_";
  }
  for (const auto& k : sig.ctors()) {
    std::vector<std::vector<term>> pools;
    bool feasible = true;
    for (const auto& sl : k.slots) {
      pools.push_back(nf[sl.type]);
      if (pools.back().empty()) feasible = false;
    }
    if (!feasible) continue;
    std::vector<size_t> idx(pools.size(), 0);
    while (true) {
      std::vector<term> kids;
      std::vector<std::string> args;
      for (size_t i = 0; i < idx.size(); ++i) {
        kids.push_back(pools[i][idx[i]]);
        args.push_back(elem_str(kids.back()));
      }
      term res = normalize(term::node(k.name, k.result, kids), h);
      if (res.depth() <= depth) alg.tables[k.name][args] = elem_str(res);
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
  alg.validate();
  return alg;
}

finite_poset truncated_poset(const signature& sig, const std::string& type, const head_type& h,
                             int depth, const budget& b) {
  auto nfs = normal_forms(sig, type, h, depth);
  int n = static_cast<int>(nfs.size());
  if (static_cast<long long>(n) * n > b.candidates)
    fail("BudgetExceeded", std::to_string(n) + " normal forms");
  std::vector<std::vector<bool>> m;
  // inputs are normal forms by construction: run the bare recursion
  par::pair_matrix(n, [&](int i, int j) { return leq_rec(nfs[i], nfs[j]); }, m);
  finite_poset p;
  for (const auto& t : nfs) p.elems.push_back(compact_str(t));
  p.leq = std::move(m);
  for (int i = 0; i < n; ++i) {
    bool least = true;
    for (int j = 0; j < n; ++j)
      if (!p.le(i, j)) least = false;
    if (least) {
      p.bottom = i;
      break;
    }
  }
  if (p.bottom < 0) fail("NoBottom", "truncation has no least normal form");
  return p;
}

}  // namespace adt
