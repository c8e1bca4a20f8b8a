#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
};

run_result run(const std::string& args) {
  std::string cmd = std::string(ADT_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  run_result r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) {
  return std::string(ADT_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("stock invocations succeed") {
  CHECK(run("check " + fx("lists.sig")).exit_code == 0);
  auto ev = run("eval --sig " + fx("nat.sig") + " --type nat --target peano 'Succ Succ Succ Zero'");
  CHECK(ev.exit_code == 0);
  CHECK(ev.out == "3\n");
  auto sup = run("support " + fx("lists.sig"));
  CHECK(sup.exit_code == 0);
  CHECK(sup.out == "pair: x y\nlist: z\nlp: x y z\n");
  auto chk = run("check " + fx("lists.sig") + " --json");
  CHECK(chk.exit_code == 0);
  CHECK(chk.out.find("\"parameter_set\":[\"x\",\"y\",\"z\"]") != std::string::npos);
}

TEST_CASE("every command is byte-identical across two runs") {
  std::vector<std::string> cmds;
  for (const char* f : {"bool.sig", "nat.sig", "natlist.sig", "intlist.sig", "lists.sig",
                        "lists_split.sig", "pairbool.sig", "w.sig"}) {
    cmds.push_back("check " + fx(f));
    cmds.push_back("check " + fx(f) + " --json");
    cmds.push_back("support " + fx(f));
    cmds.push_back("poly " + fx(f) + " --classify --json");
  }
  cmds.push_back("parse --sig " + fx("natlist.sig") + " 'Cons Zero Nil'");
  cmds.push_back("eval --sig " + fx("nat.sig") + " --target peano 'Succ Zero'");
  cmds.push_back("normalize --sig " + fx("intlist.sig") + " --type list --head flat"
                 " 'Cons 42 (Cons _ Nil)'");
  cmds.push_back("leq --sig " + fx("nat.sig") + " --type nat --head strict 'Succ _' 'Succ Zero'");
  cmds.push_back("enumerate --sig " + fx("nat.sig") + " --type nat --depth 3 --bottoms");
  cmds.push_back("poset --sig " + fx("nat.sig") + " --type nat --head strict --depth 3");
  cmds.push_back("complete " + fx("vee.poset"));
  cmds.push_back("classify --sig " + fx("bool.sig") + " " + fx("bool.alg") + " --depths --json");
  cmds.push_back("classify --sig " + fx("nat.sig") + " " + fx("succ_cycle.alg"));
  cmds.push_back("hom --sig " + fx("bool.sig") + " " + fx("bool.alg") + " " + fx("bool.alg"));
  cmds.push_back("poly " + fx("lists.sig") + " --type 'lp atom (list v) (pair v int)' --json");
  cmds.push_back("poly " + fx("lists_split.sig") +
                 " --type 'list bool' --instantiate --family terms:2");
  for (const auto& c : cmds) {
    auto a = run(c);
    auto b = run(c);
    CHECK(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("module errors surface with their name and exit code 1") {
  struct expectation {
    std::string cmd;
    std::string code;
  };
  std::vector<expectation> cases = {
      {"check " + fx("missing.sig"), "FileNotFound"},
      {"parse --sig " + fx("nat.sig") + " --type nat 'Succ Zero Zero'", "TrailingTokens"},
      {"parse --sig " + fx("nat.sig") + " --type nat 'Succ'", "TruncatedInput"},
      {"parse --sig " + fx("nat.sig") + " --type nat 'Flip'", "UnknownToken"},
      {"enumerate --sig " + fx("nat.sig") + " --type mystery --depth 1", "UnknownType"},
      {"classify --sig " + fx("nat.sig") + " " + fx("nat_collapse.alg") + " --depths", "Diverged"},
      {"complete " + fx("bool.alg"), "ParseError"},
      {"normalize --sig " + fx("nat.sig") + " --head mystery --type nat 'Zero'",
       "UnknownHeadType"},
      {"leq --sig " + fx("intlist.sig") + " --type list --head flat 'Cons _ Nil' 'Cons 0 Nil'",
       "NotNormalized"},
      {"poly " + fx("lists.sig") + " --type 'pair atom'", "ParseError"},
      {"poly " + fx("lists.sig") + " --type 'list int' --parse 'Cons True Nil'",
       "PolyTypeMismatch"},
  };
  for (const auto& e : cases) {
    auto r = run(e.cmd);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error: " + e.code) != std::string::npos);
  }
}

TEST_CASE("candidate files and algebra-backed evaluation") {
  auto swap = run("hom --sig " + fx("bool.sig") + " " + fx("bool.alg") + " " +
                  fx("bool_swap.alg") + " --check " + fx("bool_swap.map"));
  CHECK(swap.exit_code == 0);
  CHECK(swap.out == "homomorphism\n");
  auto not_hom = run("hom --sig " + fx("bool.sig") + " " + fx("bool.alg") + " " + fx("bool.alg") +
                     " --check " + fx("bool_swap.map"));
  CHECK(not_hom.exit_code == 0);
  CHECK(not_hom.out.find("not a homomorphism") == 0);
  auto ev = run("eval --sig " + fx("bool.sig") + " --target @" + fx("bool.alg") + " 'True'");
  CHECK(ev.exit_code == 0);
  CHECK(ev.out == "T\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("parse --sig").exit_code == 2);
}

TEST_CASE("the poset output feeds the completion verb") {
  auto p = run("poset --sig " + fx("nat.sig") + " --type nat --head strict --depth 2");
  REQUIRE(p.exit_code == 0);
  std::string tmp = "/tmp/adt_cli_pipe.poset";
  {
    std::ofstream o(tmp);
    o << p.out;
  }
  auto c = run("complete " + tmp);
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("embed") != std::string::npos);
  auto cj = run("complete " + tmp + " --json");
  CHECK(cj.out.find("\"isomorphic_to_input\":true") != std::string::npos);
  std::remove(tmp.c_str());
}

TEST_CASE("the budget honours ADT_BUDGET") {
  std::string cmd = std::string("ADT_BUDGET=1 ") + ADT_CLI_PATH + " hom --sig " + fx("bool.sig") +
                    " " + fx("bool.alg") + " " + fx("bool.alg") + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  CHECK(WEXITSTATUS(status) == 1);
  CHECK(out.find("BudgetExceeded") != std::string::npos);
}
