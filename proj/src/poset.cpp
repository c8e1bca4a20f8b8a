#include "adt/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "adt/error.hpp"

namespace adt {

int finite_poset::index_of(const std::string& e) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == e) return static_cast<int>(i);
  fail("UnknownElement", "'" + e + "'");
}

finite_poset finite_poset::from_relation(std::vector<std::string> elems,
                                         const std::vector<std::pair<int, int>>& pairs) {
  finite_poset p;
  p.elems = std::move(elems);
  size_t n = p.elems.size();
  if (n == 0) fail("NoBottom", "empty poset");
  {
    std::set<std::string> seen;
    for (const auto& e : p.elems)
      if (!seen.insert(e).second) fail("DuplicateElement", "'" + e + "'");
  }
  p.leq.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) p.leq[i][i] = true;
  for (auto [a, b] : pairs) p.leq[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  // Warshall closure
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (p.leq[i][k])
        for (size_t j = 0; j < n; ++j)
          if (p.leq[k][j]) p.leq[i][j] = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (p.leq[i][j] && p.leq[j][i])
        fail("NotAPartialOrder", "cycle through " + p.elems[i] + " and " + p.elems[j]);
  for (size_t i = 0; i < n; ++i) {
    bool least = true;
    for (size_t j = 0; j < n; ++j)
      if (!p.leq[i][j]) least = false;
    if (least) {
      p.bottom = static_cast<int>(i);
      break;
    }
  }
  if (p.bottom < 0) fail("NoBottom", "no least element");
  return p;
}

finite_poset finite_poset::load(const std::string& text) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> raw_pairs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream is(line);
    std::string head;
    if (!(is >> head)) continue;
    if (head == "elem") {
      std::string e;
      while (is >> e) elems.push_back(e);
    } else if (head == "le") {
      std::string a, b;
      if (!(is >> a >> b)) fail("ParseError", "line " + std::to_string(lineno) + ": le a b");
      raw_pairs.emplace_back(a, b);
    } else if (head == "embed") {
      std::string rest;
      std::getline(is, rest);  // embed lines are informational output
    } else {
      fail("ParseError", "line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
    }
  }
  std::map<std::string, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : raw_pairs) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) fail("UnknownElement", "'" + a + "'");
    if (ib == index.end()) fail("UnknownElement", "'" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_relation(std::move(elems), pairs);
}

std::string finite_poset::print() const {
  std::ostringstream out;
  out << "elem";
  for (const auto& e : elems) out << ' ' << e;
  out << '\n';
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j)
      if (i != j && leq[i][j]) out << "le " << elems[i] << ' ' << elems[j] << '\n';
  return out.str();
}

bool is_directed(const finite_poset& p, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  for (int a : subset)
    for (int b : subset) {
      bool has_ub = false;
      for (int c : subset)
        if (p.le(a, c) && p.le(b, c)) has_ub = true;
      if (!has_ub) return false;
    }
  return true;
}

std::optional<int> lub(const finite_poset& p, const std::vector<int>& subset) {
  std::vector<int> ubs;
  for (int c = 0; c < static_cast<int>(p.size()); ++c) {
    bool ub = true;
    for (int a : subset)
      if (!p.le(a, c)) ub = false;
    if (ub) ubs.push_back(c);
  }
  for (int c : ubs) {
    bool least = true;
    for (int d : ubs)
      if (!p.le(c, d)) least = false;
    if (least) return c;
  }
  return std::nullopt;
}

check_result is_monotone(const finite_poset& p, const finite_poset& q, const mono_map& f) {
  if (f.to.size() != p.size()) fail("ArityMismatch", "map is not total on the domain");
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      if (p.leq[i][j] && !q.le(f.to[i], f.to[j]))
        return {false, p.elems[i] + " ⊑ " + p.elems[j] + " but images are unrelated"};
  return {};
}

check_result is_continuous(const finite_poset& p, const finite_poset& q, const mono_map& f,
                           const budget& b) {
  auto mono = is_monotone(p, q, f);
  if (!mono.ok) return mono;
  size_t n = p.size();
  if (n >= 63 || (1LL << n) > b.candidates) fail("BudgetExceeded", "2^" + std::to_string(n));
  for (long long mask = 1; mask < (1LL << n); ++mask) {
    std::vector<int> d;
    for (size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) d.push_back(static_cast<int>(i));
    if (!is_directed(p, d)) continue;
    auto sup = lub(p, d);
    if (!sup) continue;  // finite directed sets contain their maximum
    std::vector<int> img;
    for (int i : d) img.push_back(f.to[static_cast<size_t>(i)]);
    auto isup = lub(q, img);
    if (!isup || f.to[static_cast<size_t>(*sup)] != *isup)
      return {false, "h(⊔D) ≠ ⊔h(D) for D of size " + std::to_string(d.size())};
  }
  return {};
}

finite_poset product_poset(const std::vector<finite_poset>& ps) {
  if (ps.empty()) {
    finite_poset unit;
    unit.elems = {"()"};
    unit.leq = {{true}};
    unit.bottom = 0;
    return unit;
  }
  std::vector<size_t> idx(ps.size(), 0);
  std::vector<std::vector<size_t>> tuples;
  while (true) {
    tuples.push_back(idx);
    size_t i = idx.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++idx[i] < ps[i].size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) break;
  }
  finite_poset out;
  for (const auto& t : tuples) {
    std::string name = "(";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) name += ',';
      name += ps[i].elems[t[i]];
    }
    out.elems.push_back(name + ")");
  }
  size_t n = tuples.size();
  out.leq.assign(n, std::vector<bool>(n, false));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      bool le = true;
      for (size_t i = 0; i < ps.size(); ++i)
        if (!ps[i].leq[tuples[a][i]][tuples[b][i]]) le = false;
      out.leq[a][b] = le;
    }
  for (size_t a = 0; a < n; ++a) {
    bool bot = true;
    for (size_t i = 0; i < ps.size(); ++i)
      if (static_cast<int>(tuples[a][i]) != ps[i].bottom) bot = false;
    if (bot) out.bottom = static_cast<int>(a);
  }
  return out;
}

bool is_cofinal(const finite_poset& p, const std::vector<int>& d1, const std::vector<int>& d2) {
  for (int a : d1) {
    bool covered = false;
    for (int b : d2)
      if (p.le(a, b)) covered = true;
    if (!covered) return false;
  }
  return true;
}

namespace {

std::string ideal_name(const finite_poset& y, const std::vector<bool>& in) {
  std::string s = "{";
  bool first = true;
  for (size_t i = 0; i < in.size(); ++i)
    if (in[i]) {
      if (!first) s += ',';
      s += y.elems[i];
      first = false;
    }
  return s + "}";
}

completion_result completion_from_ideals(const finite_poset& y,
                                         std::vector<std::vector<bool>> ideals) {
  // inclusion order; deterministic element order: by size then set contents
  std::sort(ideals.begin(), ideals.end(), [](const auto& a, const auto& b) {
    size_t ca = std::count(a.begin(), a.end(), true);
    size_t cb = std::count(b.begin(), b.end(), true);
    if (ca != cb) return ca < cb;
    return a < b;
  });
  ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
  completion_result r;
  for (const auto& id : ideals) r.poset.elems.push_back(ideal_name(y, id));
  size_t n = ideals.size();
  r.poset.leq.assign(n, std::vector<bool>(n, false));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      bool sub = true;
      for (size_t i = 0; i < y.size(); ++i)
        if (ideals[a][i] && !ideals[b][i]) sub = false;
      r.poset.leq[a][b] = sub;
    }
  for (size_t a = 0; a < n; ++a) {
    bool least = true;
    for (size_t b = 0; b < n; ++b)
      if (!r.poset.leq[a][b]) least = false;
    if (least) r.poset.bottom = static_cast<int>(a);
  }
  if (r.poset.bottom < 0) fail("NoBottom", "completion lost its bottom");
  // embed: y -> principal ideal
  r.source_elems = y.elems;
  r.embed.resize(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    std::vector<bool> down(y.size(), false);
    for (size_t j = 0; j < y.size(); ++j) down[j] = y.leq[j][i];
    auto it = std::find(ideals.begin(), ideals.end(), down);
    if (it == ideals.end()) fail("Internal", "principal ideal missing");
    r.embed[i] = static_cast<int>(it - ideals.begin());
  }
  return r;
}

bool subset_directed(const finite_poset& y, const std::vector<bool>& in) {
  std::vector<int> d;
  for (size_t i = 0; i < y.size(); ++i)
    if (in[i]) d.push_back(static_cast<int>(i));
  return is_directed(y, d);
}

}  // namespace

completion_result ideal_completion(const finite_poset& y, const budget& b) {
  if (static_cast<int>(y.size()) > b.completion_elems)
    fail("BudgetExceeded", "poset of " + std::to_string(y.size()) + " elements");
  // Down-sets from antichain generators: each down-set is determined by its
  // maximal elements, so close every subset downwards and deduplicate.
  std::set<std::vector<bool>> downsets;
  std::vector<std::vector<bool>> stack;
  // seed with principal ideals, then close under unions of generators
  size_t n = y.size();
  for (size_t i = 0; i < n; ++i) {
    std::vector<bool> d(n, false);
    for (size_t j = 0; j < n; ++j) d[j] = y.leq[j][i];
    if (downsets.insert(d).second) stack.push_back(d);
  }
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    for (size_t i = 0; i < n; ++i) {
      if (cur[i]) continue;
      auto ext = cur;
      for (size_t j = 0; j < n; ++j) ext[j] = ext[j] || y.leq[j][i];
      if (downsets.insert(ext).second) stack.push_back(ext);
    }
  }
  std::vector<std::vector<bool>> ideals;
  for (const auto& d : downsets)
    if (subset_directed(y, d)) ideals.push_back(d);
  return completion_from_ideals(y, std::move(ideals));
}

completion_result ideal_completion_naive(const finite_poset& y, const budget& b) {
  size_t n = y.size();
  if (n >= 63 || (1LL << n) > b.candidates) fail("BudgetExceeded", "2^" + std::to_string(n));
  std::vector<std::vector<bool>> ideals;
  for (long long mask = 1; mask < (1LL << n); ++mask) {
    std::vector<bool> in(n, false);
    for (size_t i = 0; i < n; ++i) in[i] = (mask >> i) & 1;
    bool down = true;
    for (size_t i = 0; i < n && down; ++i)
      if (in[i])
        for (size_t j = 0; j < n; ++j)
          if (y.leq[j][i] && !in[j]) down = false;
    if (down && subset_directed(y, in)) ideals.push_back(in);
  }
  return completion_from_ideals(y, std::move(ideals));
}

std::vector<int> compact_elements(const finite_poset& x, const budget& b) {
  size_t n = x.size();
  if (n >= 63 || (1LL << n) > b.candidates) fail("BudgetExceeded", "2^" + std::to_string(n));
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(n); ++e) {
    bool compact = true;
    for (long long mask = 1; mask < (1LL << n) && compact; ++mask) {
      std::vector<int> d;
      for (size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) d.push_back(static_cast<int>(i));
      if (!is_directed(x, d)) continue;
      auto sup = lub(x, d);
      if (!sup || !x.le(e, *sup)) continue;
      bool below_some = false;
      for (int m : d)
        if (x.le(e, m)) below_some = true;
      if (!below_some) compact = false;
    }
    if (compact) out.push_back(e);
  }
  return out;
}

bool is_algebraic(const finite_poset& x, const budget& b) {
  size_t n = x.size();
  if (n >= 63 || (1LL << n) > b.candidates) fail("BudgetExceeded", "2^" + std::to_string(n));
  // completeness: every directed subset has a least upper bound
  for (long long mask = 1; mask < (1LL << n); ++mask) {
    std::vector<int> d;
    for (size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) d.push_back(static_cast<int>(i));
    if (is_directed(x, d) && !lub(x, d)) return false;
  }
  auto compacts = compact_elements(x, b);
  for (int e = 0; e < static_cast<int>(n); ++e) {
    std::vector<int> cx;
    for (int c : compacts)
      if (x.le(c, e)) cx.push_back(c);
    if (!is_directed(x, cx)) return false;
    auto sup = lub(x, cx);
    if (!sup || *sup != e) return false;
  }
  return true;
}

namespace {

// order-invariant fingerprint: (|down-set|, |up-set|) multiset refinement
std::vector<int> iso_profile(const finite_poset& p) {
  std::vector<int> prof(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    int down = 0, up = 0;
    for (size_t j = 0; j < p.size(); ++j) {
      if (p.leq[j][i]) ++down;
      if (p.leq[i][j]) ++up;
    }
    prof[i] = down * 1000 + up;
  }
  return prof;
}

bool iso_backtrack(const finite_poset& p, const finite_poset& q, std::vector<int>& map,
                   std::vector<bool>& used, size_t i, const std::vector<int>& pp,
                   const std::vector<int>& qp, long long& steps, long long limit) {
  if (i == p.size()) return true;
  for (size_t j = 0; j < q.size(); ++j) {
    if (used[j] || pp[i] != qp[j]) continue;
    if (++steps > limit) fail("BudgetExceeded", "isomorphism search");
    bool ok = true;
    for (size_t k = 0; k < i && ok; ++k) {
      if (p.leq[k][i] != q.leq[static_cast<size_t>(map[k])][j]) ok = false;
      if (p.leq[i][k] != q.leq[j][static_cast<size_t>(map[k])]) ok = false;
    }
    if (!ok) continue;
    map[i] = static_cast<int>(j);
    used[j] = true;
    if (iso_backtrack(p, q, map, used, i + 1, pp, qp, steps, limit)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const finite_poset& p, const finite_poset& q, const budget& b) {
  if (p.size() != q.size()) return false;
  auto pp = iso_profile(p), qp = iso_profile(q);
  auto sp = pp, sq = qp;
  std::sort(sp.begin(), sp.end());
  std::sort(sq.begin(), sq.end());
  if (sp != sq) return false;
  std::vector<int> map(p.size(), -1);
  std::vector<bool> used(q.size(), false);
  long long steps = 0;
  return iso_backtrack(p, q, map, used, 0, pp, qp, steps, b.candidates);
}

std::string completion_result::print() const {
  std::string s = poset.print();
  for (size_t i = 0; i < embed.size(); ++i)
    s += "embed " + source_elems[i] + " -> " + poset.elems[static_cast<size_t>(embed[i])] + "\n";
  return s;
}

}  // namespace adt
