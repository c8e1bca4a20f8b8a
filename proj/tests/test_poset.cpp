#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "adt/error.hpp"
#include "adt/poset.hpp"
#include "doctest.h"

using namespace adt;

static std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static std::string fx(const std::string& name) {
  return std::string(ADT_FIXTURES_DIR) + "/" + name;
}

// random bottomed poset with <= n elements
static finite_poset random_poset(int n, std::mt19937_64& rng) {
  std::vector<std::string> elems = {"r0"};
  for (int i = 1; i < n; ++i) elems.push_back("r" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(0, i);  // r0 is the bottom
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 3 == 0) pairs.emplace_back(i, j);  // edges respect the index order: acyclic
  return finite_poset::from_relation(std::move(elems), pairs);
}

static std::vector<int> all_of(const finite_poset& p) {
  std::vector<int> v;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) v.push_back(i);
  return v;
}

TEST_CASE("loading validates order axioms") {
  auto vee = finite_poset::load(slurp(fx("vee.poset")));
  CHECK(vee.size() == 3);
  CHECK(vee.elems[static_cast<size_t>(vee.bottom)] == "bot");
  CHECK_THROWS_WITH_AS(finite_poset::load("elem a b\nle a b\nle b a\n"),
                       doctest::Contains("NotAPartialOrder"), error);
  CHECK_THROWS_WITH_AS(finite_poset::load("elem a b\n"), doctest::Contains("NoBottom"), error);
  CHECK_THROWS_WITH_AS(finite_poset::load("elem a\nle a z\n"),
                       doctest::Contains("UnknownElement"), error);
  // print/load round trip
  auto again = finite_poset::load(vee.print());
  CHECK(again.elems == vee.elems);
  CHECK(again.leq == vee.leq);
}

TEST_CASE("directedness") {
  auto chain = finite_poset::load(slurp(fx("chain3.poset")));
  CHECK(is_directed(chain, all_of(chain)));
  auto vee = finite_poset::load(slurp(fx("vee.poset")));
  int a = vee.index_of("a"), b = vee.index_of("b");
  CHECK_FALSE(is_directed(vee, {a, b}));
  CHECK(is_directed(vee, {vee.bottom, a}));
  CHECK_FALSE(is_directed(vee, {}));
}

TEST_CASE("least upper bounds") {
  auto chain = finite_poset::load(slurp(fx("chain3.poset")));
  auto l = lub(chain, {0, 1});
  REQUIRE(l.has_value());
  CHECK(chain.elems[static_cast<size_t>(*l)] == "x1");

  auto diamond = finite_poset::load("elem bot a b top\nle bot a\nle bot b\nle a top\nle b top\n");
  auto l2 = lub(diamond, {diamond.index_of("a"), diamond.index_of("b")});
  REQUIRE(l2.has_value());
  CHECK(*l2 == diamond.index_of("top"));

  auto two_tops = finite_poset::load(
      "elem bot a b t1 t2\nle bot a\nle bot b\nle a t1\nle b t1\nle a t2\nle b t2\n");
  CHECK_FALSE(lub(two_tops, {two_tops.index_of("a"), two_tops.index_of("b")}).has_value());
}

TEST_CASE("monotone and continuous maps") {
  auto chain = finite_poset::load(slurp(fx("chain3.poset")));
  mono_map id{{0, 1, 2}};
  CHECK(is_monotone(chain, chain, id).ok);
  CHECK(is_continuous(chain, chain, id).ok);
  mono_map constant{{1, 1, 1}};
  CHECK(is_monotone(chain, chain, constant).ok);
  CHECK(is_continuous(chain, chain, constant).ok);
  mono_map reversing{{2, 1, 0}};
  CHECK_FALSE(is_monotone(chain, chain, reversing).ok);
  budget tiny;
  tiny.candidates = 2;
  CHECK_THROWS_WITH_AS(is_continuous(chain, chain, id, tiny),
                       doctest::Contains("BudgetExceeded"), error);
}

TEST_CASE("products") {
  auto flat2 = finite_poset::load("elem bot t f\nle bot t\nle bot f\n");
  auto prod = product_poset({flat2, flat2});
  CHECK(prod.size() == 9);
  CHECK(prod.elems[static_cast<size_t>(prod.bottom)] == "(bot,bot)");
  int tt = prod.index_of("(t,t)");
  int tb = prod.index_of("(t,bot)");
  CHECK(prod.le(tb, tt));
  CHECK_FALSE(prod.le(tt, tb));

  auto unit = product_poset({});
  CHECK(unit.size() == 1);

  auto c2 = finite_poset::load("elem a b\nle a b\n");
  auto c3 = finite_poset::load(slurp(fx("chain3.poset")));
  CHECK(product_poset({c2, c3}).size() == 6);
}

TEST_CASE("cofinality") {
  auto chain = finite_poset::load(slurp(fx("chain3.poset")));
  CHECK(is_cofinal(chain, {0}, {0, 1, 2}));
  auto vee = finite_poset::load(slurp(fx("vee.poset")));
  CHECK_FALSE(is_cofinal(vee, {vee.index_of("a")}, {vee.index_of("b")}));
  CHECK(is_cofinal(chain, {0, 1, 2}, {2}));
  CHECK(is_cofinal(chain, {2}, {0, 1, 2}));
}

TEST_CASE("ideal completion of the stock posets") {
  auto flat2 = finite_poset::load("elem bot a\nle bot a\n");
  auto c = ideal_completion(flat2);
  CHECK(are_isomorphic(c.poset, flat2));

  auto vee = finite_poset::load(slurp(fx("vee.poset")));
  auto cv = ideal_completion(vee);
  REQUIRE(cv.poset.size() == 3);
  std::set<std::string> names(cv.poset.elems.begin(), cv.poset.elems.end());
  CHECK(names == std::set<std::string>{"{bot}", "{bot,a}", "{bot,b}"});

  auto chain = finite_poset::load(slurp(fx("chain3.poset")));
  CHECK(are_isomorphic(ideal_completion(chain).poset, chain));

  budget tiny;
  tiny.completion_elems = 2;
  CHECK_THROWS_WITH_AS(ideal_completion(vee, tiny), doctest::Contains("BudgetExceeded"), error);
}

TEST_CASE("compact elements and algebraicity on finite posets") {
  auto vee = finite_poset::load(slurp(fx("vee.poset")));
  CHECK(compact_elements(vee).size() == vee.size());
  CHECK(is_algebraic(vee));
  auto chain = finite_poset::load(slurp(fx("chain3.poset")));
  CHECK(compact_elements(chain).size() == chain.size());
  CHECK(is_algebraic(chain));
}

TEST_CASE("randomised corpus: completions behave as the theory demands") {
  std::mt19937_64 rng(271828);
  budget b;
  int runs = 0;
  while (runs < 200) {
    auto y = random_poset(2 + static_cast<int>(rng() % 4), rng);  // 2..5 elements
    ++runs;
    auto smart = ideal_completion(y, b);
    auto naive = ideal_completion_naive(y, b);
    CHECK(smart.poset.elems == naive.poset.elems);  // the two routes agree
    CHECK(smart.poset.leq == naive.poset.leq);

    // the completion is a valid bottomed poset (reload through the validator)
    auto reloaded = finite_poset::load(smart.poset.print());
    CHECK(reloaded.size() == smart.poset.size());

    // the embedding preserves and reflects order
    for (size_t i = 0; i < y.size(); ++i)
      for (size_t j = 0; j < y.size(); ++j)
        CHECK(y.leq[i][j] ==
              smart.poset.le(smart.embed[i], smart.embed[j]));

    // compacts of the completion are exactly the embedded originals
    auto compacts = compact_elements(smart.poset, b);
    std::set<int> embedded(smart.embed.begin(), smart.embed.end());
    CHECK(std::set<int>(compacts.begin(), compacts.end()) == embedded);

    // least upper bounds of directed sets detect principal generators:
    // y ⊑ ⊔D implies y below some member (statement (4))
    size_t n = smart.poset.size();
    for (long long mask = 1; mask < (1LL << n); ++mask) {
      std::vector<int> d;
      for (size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) d.push_back(static_cast<int>(i));
      if (!is_directed(smart.poset, d)) continue;
      auto sup = lub(smart.poset, d);
      REQUIRE(sup.has_value());  // completions are complete
      for (size_t yi = 0; yi < y.size(); ++yi) {
        if (!smart.poset.le(smart.embed[yi], *sup)) continue;
        bool below_some = false;
        for (int m : d)
          if (smart.poset.le(smart.embed[yi], m)) below_some = true;
        CHECK(below_some);
      }
    }

    // completing a finite poset changes nothing, up to isomorphism
    CHECK(are_isomorphic(smart.poset, y, b));
    CHECK(is_algebraic(smart.poset, b));

    // monotone maps on finite posets are automatically continuous
    mono_map identity;
    for (size_t i = 0; i < y.size(); ++i) identity.to.push_back(static_cast<int>(i));
    CHECK(is_continuous(y, y, identity, b).ok);
  }
}

TEST_CASE("the two ideal-enumeration routes agree up to ten elements") {
  std::mt19937_64 rng(161803);
  for (int n = 6; n <= 10; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      auto y = random_poset(n, rng);
      auto smart = ideal_completion(y);
      auto naive = ideal_completion_naive(y);
      CHECK(smart.poset.elems == naive.poset.elems);
      CHECK(smart.poset.leq == naive.poset.leq);
      CHECK(smart.embed == naive.embed);
    }
  }
}

TEST_CASE("completion commutes with finite products") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 25; ++trial) {
    auto y1 = random_poset(2 + static_cast<int>(rng() % 3), rng);  // 2..4
    auto y2 = random_poset(2 + static_cast<int>(rng() % 3), rng);
    auto lhs = ideal_completion(product_poset({y1, y2}));
    auto rhs = product_poset({ideal_completion(y1).poset, ideal_completion(y2).poset});
    CHECK(are_isomorphic(lhs.poset, rhs));
  }
}

TEST_CASE("isomorphism checking distinguishes shapes") {
  auto vee = finite_poset::load(slurp(fx("vee.poset")));
  auto chain = finite_poset::load(slurp(fx("chain3.poset")));
  CHECK_FALSE(are_isomorphic(vee, chain));
  auto vee2 = finite_poset::load("elem z p q\nle z p\nle z q\n");
  CHECK(are_isomorphic(vee, vee2));
}
