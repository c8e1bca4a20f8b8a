#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <set>
#include <sstream>

#include "adt/error.hpp"
#include "adt/head_type.hpp"
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

static signature intlist_sig() { return signature::parse(slurp(fx("intlist.sig"))); }
static signature pairbool_sig() { return signature::parse(slurp(fx("pairbool.sig"))); }

TEST_CASE("product types") {
  auto lists = signature::parse(slurp(fx("lists.sig")));
  CHECK(is_product_type(lists, "pair"));
  CHECK_FALSE(is_product_type(lists, "list"));  // Cons refers to list itself
  CHECK_FALSE(is_product_type(lists, "bool"));  // two constructors
  CHECK(is_product_type(pairbool_sig(), "pb"));
}

TEST_CASE("builtin head tables") {
  auto il = intlist_sig();
  auto flat = head_type::make(il, head_type::builtin::flat);
  using hv = head_value;
  CHECK(flat.apply("Cons", {hv::nat, hv::nat}) == hv::nat);
  CHECK(flat.apply("Cons", {hv::bot, hv::nat}) == hv::bot);
  CHECK(flat.apply("Cons", {hv::nat, hv::bot}) == hv::bot);

  auto strict = head_type::make(il, head_type::builtin::strict);
  CHECK(strict.apply("Cons", {hv::bot, hv::bot}) == hv::nat);
  CHECK(strict.apply("Nil", {}) == hv::nat);

  auto pb = pairbool_sig();
  auto smash = head_type::make(pb, head_type::builtin::smash);
  CHECK(smash.apply("MkPair", {hv::bot, hv::bot}) == hv::bot);
  CHECK(smash.apply("MkPair", {hv::nat, hv::bot}) == hv::nat);
  CHECK(smash.apply("MkPair", {hv::bot, hv::nat}) == hv::nat);
  // smash falls back to strict off product types
  auto smash_il = head_type::make(il, head_type::builtin::smash);
  CHECK(smash_il.apply("Cons", {hv::bot, hv::bot}) == hv::nat);
  // the declared pair type of ints IS a product type
  CHECK(smash_il.apply("Pair", {hv::bot, hv::bot}) == hv::bot);

  auto degen = head_type::make(il, head_type::builtin::degenerate);
  CHECK(degen.apply("Nil", {}) == hv::bot);
  CHECK(degen.apply("Cons", {hv::nat, hv::nat}) == hv::bot);
}

TEST_CASE("head properties of the builtins") {
  auto il = intlist_sig();
  for (auto b : {head_type::builtin::flat, head_type::builtin::strict,
                 head_type::builtin::smash, head_type::builtin::degenerate}) {
    auto rep = head_properties(head_type::make(il, b));
    CHECK(rep.stable);
  }
  auto degen = head_properties(head_type::make(il, head_type::builtin::degenerate));
  CHECK_FALSE(degen.natural_invariant);
  for (auto b :
       {head_type::builtin::flat, head_type::builtin::strict, head_type::builtin::smash}) {
    CHECK(head_properties(head_type::make(il, b)).natural_invariant);
  }
}

TEST_CASE("an anti-monotone table is unstable") {
  auto nat = signature::parse(slurp(fx("nat.sig")));
  std::map<std::string, std::vector<head_value>> tables;
  tables["Zero"] = {head_value::nat};
  tables["Succ"] = {head_value::nat, head_value::bot};  // ⊥ pattern -> ♮, ♮ pattern -> ⊥
  auto h = head_type::from_tables(nat, tables);
  auto rep = head_properties(h);
  CHECK_FALSE(rep.stable);
  REQUIRE(!rep.witnesses.empty());
  CHECK(rep.witnesses[0].find("Succ") != std::string::npos);
}

TEST_CASE("head-type files") {
  auto nat = signature::parse(slurp(fx("nat.sig")));
  auto h1 = head_type::load(nat, "strict\n");
  CHECK(h1.name() == "strict");
  auto h2 = head_type::load(nat, "head Zero: -> #\nhead Succ: _ -> #\nhead Succ: # -> #\n");
  CHECK(h2.apply("Succ", {head_value::bot}) == head_value::nat);
  CHECK_THROWS_WITH_AS(head_type::load(nat, "mystery\n"), doctest::Contains("UnknownHeadType"),
                       error);
}

TEST_CASE("flat extension of a finite algebra") {
  auto bl = signature::parse(slurp(fx("bool.sig")));
  auto boolalg = finite_algebra::load(bl, slurp(fx("bool.alg")));
  auto flat = flat_extension(boolalg);
  CHECK(flat.carriers.at("bool").size() == 3);
  CHECK(flat.bottoms.count("bool") == 1);
  CHECK(flat.tables.at("True").at({}) == "T");
  auto c = classify(flat);
  CHECK(c.natural_invariant);
  CHECK(c.v_minimal_bottomed);
  CHECK_THROWS_WITH_AS(flat_extension(flat), doctest::Contains("AlreadyBottomed"), error);

  // any operation fed a bottom returns bottom
  auto nl = signature::parse(slurp(fx("natlist.sig")));
  finite_algebra small;
  small.sig = nl;
  small.carriers["nat"] = {"0"};
  small.carriers["pair"] = {"p"};
  small.carriers["list"] = {"n"};
  small.tables["Zero"][{}] = "0";
  small.tables["Succ"][{"0"}] = "0";
  small.tables["Pair"][{"0", "0"}] = "p";
  small.tables["Nil"][{}] = "n";
  small.tables["Cons"][{"0", "n"}] = "n";
  small.validate();
  auto fs = flat_extension(small);
  const auto& bot_nat = fs.bottoms.at("nat");
  const auto& bot_list = fs.bottoms.at("list");
  CHECK(fs.tables.at("Cons").at({bot_nat, "n"}) == bot_list);
  CHECK(fs.tables.at("Cons").at({"0", bot_list}) == bot_list);
}

TEST_CASE("head evaluation of partial terms") {
  auto il = intlist_sig();
  auto strict = head_type::make(il, head_type::builtin::strict);
  auto flat = head_type::make(il, head_type::builtin::flat);

  auto t1 = parse_term("Cons _ Nil", "list", il);
  CHECK(eval_head(t1, strict) == head_value::nat);
  CHECK(eval_head(t1, flat) == head_value::bot);
  CHECK(eval_head(term::bottom("list"), strict) == head_value::bot);
  auto t2 = parse_term("Cons 42 Nil", "list", il);
  CHECK(eval_head(t2, flat) == head_value::nat);
  // variables count as defined
  auto lists = signature::parse(slurp(fx("lists.sig")));
  auto fl = head_type::make(lists, head_type::builtin::flat);
  auto t3 = parse_term("Cons ?v Nil", "list", lists);
  CHECK(eval_head(t3, fl) == head_value::nat);
}

TEST_CASE("normalisation rewrites undefined heads to bottoms") {
  auto il = intlist_sig();
  auto flat = head_type::make(il, head_type::builtin::flat);
  auto strict = head_type::make(il, head_type::builtin::strict);

  auto t = parse_term("Cons 42 (Cons _ Nil)", "list", il);
  auto n = normalize(t, flat);
  CHECK(n.k() == term::kind::bottom);  // the whole term collapses

  auto s = parse_term("Cons _ Nil", "list", il);
  CHECK(normalize(s, strict) == s);

  auto pb = pairbool_sig();
  auto smash = head_type::make(pb, head_type::builtin::smash);
  auto both = parse_term("MkPair _ _", "pb", pb);
  CHECK(normalize(both, smash).k() == term::kind::bottom);
  auto one = parse_term("MkPair True _", "pb", pb);
  CHECK(normalize(one, smash) == one);
}

TEST_CASE("normalisation is idempotent to depth 4 under every builtin") {
  auto nl = signature::parse(slurp(fx("natlist.sig")));
  auto pb = pairbool_sig();
  for (auto* sigp : {&nl, &pb}) {
    for (auto b : {head_type::builtin::flat, head_type::builtin::strict,
                   head_type::builtin::smash, head_type::builtin::degenerate}) {
      auto h = head_type::make(*sigp, b);
      for (const auto& ty : sigp->types()) {
        if (sigp->is_parameter(ty)) continue;
        for (const auto& t : enumerate_terms(*sigp, ty, 4, enum_options{true, {}})) {
          auto n = normalize(t, h);
          CHECK(normalize(n, h) == n);
          // a surviving node keeps head value ♮; a bottom keeps ⊥
          CHECK(eval_head(n, h) ==
                (n.k() == term::kind::bottom ? head_value::bot : head_value::nat));
        }
      }
    }
  }
}

TEST_CASE("flat normal forms contain a bottom only at the root") {
  auto nl = signature::parse(slurp(fx("natlist.sig")));
  auto flat = head_type::make(nl, head_type::builtin::flat);
  for (const auto& ty : nl.types()) {
    for (const auto& t : enumerate_terms(nl, ty, 3, enum_options{true, {}})) {
      auto n = normalize(t, flat);
      if (n.k() != term::kind::bottom) CHECK_FALSE(n.contains_bottom());
    }
    // closure under the strictified constructor action on normal forms
    for (const auto& t : enumerate_terms(nl, ty, 3, enum_options{true, {}})) {
      auto n = normalize(t, flat);
      CHECK(normalize(n, flat) == n);
    }
  }
}

TEST_CASE("strict normalisation never produces a bottom from a node") {
  auto nl = signature::parse(slurp(fx("natlist.sig")));
  auto strict = head_type::make(nl, head_type::builtin::strict);
  for (const auto& ty : nl.types()) {
    for (const auto& t : enumerate_terms(nl, ty, 4, enum_options{true, {}})) {
      auto n = normalize(t, strict);
      CHECK(n == t);  // strict keeps every term
      if (t.k() == term::kind::node) CHECK(n.k() == term::kind::node);
    }
  }
}

TEST_CASE("stability transfers to normal-form application") {
  // for stable heads, making arguments more defined never less-defines the head
  auto pb = pairbool_sig();
  for (auto b : {head_type::builtin::flat, head_type::builtin::strict,
                 head_type::builtin::smash, head_type::builtin::degenerate}) {
    auto h = head_type::make(pb, b);
    auto tt = parse_term("True", "bool", pb);
    std::vector<term> bools = {term::bottom("bool"), tt};
    for (const auto& a1 : bools)
      for (const auto& a2 : bools)
        for (const auto& b1 : bools)
          for (const auto& b2 : bools) {
            auto le = [](const term& x, const term& y) {
              return x.k() == term::kind::bottom || x == y;
            };
            if (!le(a1, a2) || !le(b1, b2)) continue;
            auto r1 = normalize(term::node("MkPair", "pb", {a1, b1}), h);
            auto r2 = normalize(term::node("MkPair", "pb", {a2, b2}), h);
            // defined stays defined
            if (r1.k() == term::kind::node) CHECK(r2.k() == term::kind::node);
          }
  }
}
