#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "adt/error.hpp"
#include "adt/eval.hpp"
#include "adt/term.hpp"
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

static signature nat_sig() { return signature::parse(slurp(fx("nat.sig"))); }
static signature natlist_sig() { return signature::parse(slurp(fx("natlist.sig"))); }
static signature intlist_sig() { return signature::parse(slurp(fx("intlist.sig"))); }

// deterministic random term of roughly the requested depth
static term random_term(const signature& sig, const std::string& type, int fuel,
                        std::mt19937_64& rng) {
  auto ks = sig.ctors_of_type(type);
  std::vector<const ctor*> usable;
  for (const ctor* k : ks)
    if (fuel > 0 || k->slots.empty()) usable.push_back(k);
  if (usable.empty()) usable = ks;
  REQUIRE(!usable.empty());
  const ctor* k = usable[rng() % usable.size()];
  std::vector<term> kids;
  for (const auto& sl : k->slots) kids.push_back(random_term(sig, sl.type, fuel - 1, rng));
  return term::node(k->name, k->result, std::move(kids));
}

TEST_CASE("build checks arity and slot types") {
  auto sig = nat_sig();
  auto zero = build(sig, "Zero", {});
  auto one = build(sig, "Succ", {zero});
  CHECK(flatten_str(one) == "Succ Zero");
  CHECK_THROWS_WITH_AS(build(sig, "Succ", {}), doctest::Contains("ArityMismatch"), error);
  auto bl = signature::parse("bool ::= True | False\nnat ::= Zero | Succ nat");
  CHECK_THROWS_WITH_AS(build(bl, "Succ", {build(bl, "True", {})}),
                       doctest::Contains("TypeMismatch"), error);
}

TEST_CASE("flattening is the prefix token list") {
  auto sig = nat_sig();
  auto t = parse_term("Succ (Succ (Succ Zero))", "nat", sig);
  CHECK(flatten_str(t) == "Succ Succ Succ Zero");

  auto il = intlist_sig();
  auto l = parse_term("Cons 42 Cons -128 Cons 0 Cons -21 Nil", "list", il);
  CHECK(flatten_str(l) == "Cons 42 Cons -128 Cons 0 Cons -21 Nil");
  CHECK(flatten_str(term::bottom("nat")) == "_");
}

TEST_CASE("parsing resolves constructors by expected type and leading token") {
  auto nl = natlist_sig();
  auto p = parse_term("Pair Succ Zero Zero", "pair", nl);
  REQUIRE(p.children().size() == 2);
  CHECK(flatten_str(p.children()[0]) == "Succ Zero");
  CHECK(flatten_str(p.children()[1]) == "Zero");
  CHECK_THROWS_WITH_AS(parse_term("Succ Zero Zero", "nat", nl),
                       doctest::Contains("TrailingTokens"), error);
  CHECK_THROWS_WITH_AS(parse_term("Succ Succ", "nat", nl), doctest::Contains("TruncatedInput"),
                       error);
  CHECK_THROWS_WITH_AS(parse_term("Flip", "nat", nl), doctest::Contains("UnknownToken"), error);
}

TEST_CASE("parentheses are grouping sugar") {
  auto sig = nat_sig();
  CHECK(parse_term("Succ (Succ Zero)", "nat", sig) == parse_term("Succ Succ Zero", "nat", sig));
}

TEST_CASE("enumeration is depth-major and duplicate-free") {
  auto sig = nat_sig();
  auto nats = enumerate_terms(sig, "nat", 2);
  REQUIRE(nats.size() == 3);
  CHECK(flatten_str(nats[0]) == "Zero");
  CHECK(flatten_str(nats[1]) == "Succ Zero");
  CHECK(flatten_str(nats[2]) == "Succ Succ Zero");

  auto bl = signature::parse(slurp(fx("bool.sig")));
  auto bools = enumerate_terms(bl, "bool", 5);
  REQUIRE(bools.size() == 2);
  CHECK(flatten_str(bools[0]) == "True");
  CHECK(flatten_str(bools[1]) == "False");

  auto nl = natlist_sig();
  auto lists0 = enumerate_terms(nl, "list", 0);
  REQUIRE(lists0.size() == 1);
  CHECK(flatten_str(lists0[0]) == "Nil");

  CHECK_THROWS_WITH_AS(enumerate_terms(intlist_sig(), "list", 1),
                       doctest::Contains("InfiniteConstructorFamily"), error);
}

TEST_CASE("enumerate: no duplicates, depth bound tight") {
  auto nl = natlist_sig();
  for (const char* ty : {"nat", "pair", "list"}) {
    auto ts = enumerate_terms(nl, ty, 4, enum_options{true, {}});
    std::set<term> seen(ts.begin(), ts.end());
    CHECK(seen.size() == ts.size());
    int maxd = 0;
    for (const auto& t : ts) {
      CHECK(t.depth() <= 4);
      maxd = std::max(maxd, t.depth());
    }
    CHECK(maxd == 4);
  }
}

TEST_CASE("substitution is the homomorphic extension") {
  auto il = intlist_sig();
  auto t = parse_term("Cons ?v Nil", "list", il);
  auto forty_two = parse_term("42", "int", il);
  CHECK(flatten_str(substitute(t, {{"v", forty_two}})) == "Cons 42 Nil");

  auto closed = parse_term("Succ Zero", "nat", il);
  CHECK(substitute(closed, {}) == closed);

  CHECK_THROWS_WITH_AS(substitute(t, {}), doctest::Contains("UnboundVariable"), error);
  auto wrong = parse_term("Nil", "list", il);
  CHECK_THROWS_WITH_AS(substitute(t, {{"v", wrong}}), doctest::Contains("TypeMismatch"), error);
}

TEST_CASE("catamorphism computes the unique homomorphism") {
  auto sig = nat_sig();
  auto three = parse_term("Succ Succ Succ Zero", "nat", sig);
  CHECK(catamorphism(three, peano_target()) == 3);

  auto bl = signature::parse(slurp(fx("bool.sig")));
  auto alg = finite_algebra::load(bl, slurp(fx("bool.alg")));
  auto tgt = algebra_target(alg);
  CHECK(catamorphism(parse_term("True", "bool", bl), tgt) == "T");

  cata_target<long long> env_only;
  env_only.apply = [](const std::string&, const std::vector<long long>&) -> long long {
    fail("MissingOperation", "no constructors expected");
  };
  env_only.variable = [](const std::string& n, const std::string&) -> long long {
    REQUIRE(n == "v");
    return 7;
  };
  CHECK(catamorphism(term::variable("v", "nat"), env_only) == 7);
}

TEST_CASE("missing pieces of the target are reported") {
  auto sig = nat_sig();
  auto t = parse_term("Succ Zero", "nat", sig);
  cata_target<long long> empty;
  empty.apply = [](const std::string& k, const std::vector<long long>&) -> long long {
    fail("MissingOperation", k);
  };
  CHECK_THROWS_WITH_AS(catamorphism(t, empty), doctest::Contains("MissingOperation"), error);
  CHECK_THROWS_WITH_AS(catamorphism(term::bottom("nat"), empty),
                       doctest::Contains("BottomUnsupported"), error);
  CHECK_THROWS_WITH_AS(catamorphism(term::variable("v", "nat"), empty),
                       doctest::Contains("UnboundVariable"), error);
}

TEST_CASE("depth of leaves and nodes") {
  auto nl = natlist_sig();
  CHECK(parse_term("Zero", "nat", nl).depth() == 0);
  CHECK(parse_term("Pair Succ Zero Zero", "pair", nl).depth() == 2);
  CHECK(term::bottom("list").depth() == 0);
  CHECK(term::variable("v", "nat").depth() == 0);
}

TEST_CASE("round trip and prefix-freeness to depth 4") {
  for (const char* f : {"bool.sig", "nat.sig", "w.sig", "natlist.sig"}) {
    auto sig = signature::parse(slurp(fx(f)));
    for (const auto& ty : sig.types()) {
      if (sig.is_parameter(ty)) continue;
      auto ts = enumerate_terms(sig, ty, 4);
      std::vector<std::vector<std::string>> flats;
      for (const auto& t : ts) {
        auto toks = flatten(t);
        CHECK(parse_term(toks, ty, sig) == t);
        flats.push_back(std::move(toks));
      }
      std::sort(flats.begin(), flats.end());
      for (size_t i = 0; i + 1 < flats.size(); ++i) {
        const auto& a = flats[i];
        const auto& b = flats[i + 1];
        bool prefix = a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
        CHECK_FALSE(prefix);
      }
    }
  }
}

TEST_CASE("stratified and structural evaluation agree; identity returns the input") {
  std::mt19937_64 rng(20240817);
  auto nl = natlist_sig();
  auto ident = identity_target(nl);
  auto size = size_target();
  for (int i = 0; i < 1000; ++i) {
    auto t = random_term(nl, "list", 5, rng);
    CHECK(catamorphism(t, size) == catamorphism_stratified(t, size));
    CHECK(catamorphism(t, ident) == t);
  }
}

TEST_CASE("root type inference with the identity specifier") {
  auto nl = natlist_sig();
  auto toks = tokenize_term("Cons Zero Nil");
  auto ty = infer_root_type(toks, nl);
  REQUIRE(ty.has_value());
  CHECK(*ty == "list");
}

TEST_CASE("non-injective specifiers are rejected with the clash") {
  auto bl = signature::parse(slurp(fx("bool.sig")));
  CHECK_THROWS_WITH_AS(
      specifier::from_map(bl, {{"True", "t"}, {"False", "t"}}),
      doctest::Contains("NotLocallyInjective"), error);
  // renaming across types stays locally injective
  auto nl = natlist_sig();
  auto sp = specifier::from_map(nl, {{"Zero", "Z"}, {"Nil", "Z"}});
  auto t = parse_term("Z", "nat", nl, sp);
  CHECK(t.name() == "Zero");
  CHECK(parse_term(flatten(t, sp), "nat", nl, sp) == t);
}
