#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "adt/budget.hpp"
#include "adt/error.hpp"
#include "adt/eval.hpp"
#include "adt/finite_algebra.hpp"
#include "adt/head_type.hpp"
#include "adt/poly.hpp"
#include "adt/poset.hpp"
#include "adt/term.hpp"
#include "adt/term_order.hpp"
#include "json.hpp"

using njson = nlohmann::json;  // std::map-backed: keys come out sorted

namespace {

using namespace adt;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in.good()) fail("FileNotFound", "'" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct options {
  bool json = false;
  long window_lo = -128;
  long window_hi = 127;
};

signature load_sig(const std::string& path) { return signature::parse(slurp(path)); }

signature windowed(const signature& sig, const options& opt) {
  return sig.has_integer_types() ? sig.with_integer_window(opt.window_lo, opt.window_hi) : sig;
}

head_type load_head(const signature& sig, const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return head_type::load(sig, slurp(spec.substr(1)));
  return head_type::make(sig, spec);
}

std::string resolve_type(const signature& sig, const std::string& given,
                         const std::vector<std::string>& tokens) {
  if (!given.empty()) return given;
  auto t = infer_root_type(tokens, sig);
  if (!t) fail("InferenceFailed", "give --type; the leading token does not fix one");
  return *t;
}

family parse_family_arg(const std::string& s) {
  // "t:e1,e2;u:e3"
  family f;
  std::istringstream groups(s);
  std::string group;
  while (std::getline(groups, group, ';')) {
    if (group.empty()) continue;
    auto colon = group.find(':');
    if (colon == std::string::npos) fail("ParseError", "universe entry '" + group + "'");
    std::string type = group.substr(0, colon);
    std::istringstream es(group.substr(colon + 1));
    std::string e;
    auto& set = f.sets[type];
    while (std::getline(es, e, ','))
      if (!e.empty()) set.insert(e);
  }
  return f;
}

void emit(const options& opt, const njson& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump() << '\n';
  else
    std::cout << text;
}

njson classification_json(const classification& c) {
  njson j;
  j["approximate"] = c.approximate;
  j["minimal"] = c.minimal;
  j["u_minimal"] = c.u_minimal;
  j["v_minimal"] = c.v_minimal;
  j["unambiguous"] = c.unambiguous;
  j["regular"] = c.regular;
  j["u_regular"] = c.u_regular;
  j["initial"] = c.initial;
  j["u_free"] = c.u_free;
  j["v_initial"] = c.v_initial;
  njson w = njson::array();
  if (!c.unambiguous) w.push_back(c.unambiguous_witness);
  if (!c.regular) w.push_back(c.regular_witness);
  if (c.has_bottoms) {
    j["v_minimal_bottomed"] = c.v_minimal_bottomed;
    j["regular_bottomed"] = c.regular_bottomed;
    j["strictly_regular"] = c.strictly_regular;
    j["strictly_unambiguous"] = c.strictly_unambiguous;
    j["natural_invariant"] = c.natural_invariant;
    j["v_initial_bottomed"] = c.v_initial_bottomed;
    if (!c.regular_bottomed) w.push_back(c.regular_bottomed_witness);
    if (!c.strictly_regular || !c.strictly_unambiguous) w.push_back(c.strict_witness);
    if (!c.natural_invariant) w.push_back(c.natural_invariant_witness);
  }
  j["witnesses"] = w;
  return j;
}

std::string classification_text(const classification& c) {
  std::ostringstream o;
  auto line = [&](const char* k, bool v) { o << k << ": " << (v ? "yes" : "no") << '\n'; };
  line("minimal", c.minimal);
  line("u_minimal", c.u_minimal);
  line("v_minimal", c.v_minimal);
  line("unambiguous", c.unambiguous);
  line("regular", c.regular);
  line("u_regular", c.u_regular);
  line("initial", c.initial);
  line("u_free", c.u_free);
  line("v_initial", c.v_initial);
  if (c.has_bottoms) {
    line("v_minimal_bottomed", c.v_minimal_bottomed);
    line("regular_bottomed", c.regular_bottomed);
    line("strictly_regular", c.strictly_regular);
    line("strictly_unambiguous", c.strictly_unambiguous);
    line("natural_invariant", c.natural_invariant);
    line("v_initial_bottomed", c.v_initial_bottomed);
  }
  if (c.approximate) o << "approximate: yes\n";
  if (!c.unambiguous) o << "witness: " << c.unambiguous_witness << '\n';
  if (!c.regular) o << "witness: " << c.regular_witness << '\n';
  if (c.has_bottoms && !c.natural_invariant)
    o << "witness: " << c.natural_invariant_witness << '\n';
  return o.str();
}

int cmd_check(const options& opt, const std::string& sig_path) {
  auto sig = load_sig(sig_path);
  auto params = sig.parameter_set();
  auto prims = sig.primitive_types();
  auto comps = sig.disjoint_components();
  njson j;
  j["types"] = sig.types();
  njson ks = njson::array();
  for (const auto& k : sig.ctors()) ks.push_back(k.name);
  j["constructors"] = ks;
  j["parameter_set"] = params;
  j["primitive_types"] = prims;
  njson cs = njson::array();
  for (const auto& c : comps) cs.push_back(c.types());
  j["components"] = cs;
  j["round_trip"] = signature::parse(sig.pretty()) == sig;

  std::ostringstream o;
  o << "types:";
  for (const auto& t : sig.types()) o << ' ' << t;
  o << "\nconstructors:";
  for (const auto& k : sig.ctors()) o << ' ' << k.name;
  o << "\nparameter set:";
  for (const auto& a : params) o << ' ' << a;
  o << "\nprimitive types:";
  for (const auto& p : prims) o << ' ' << p;
  o << "\ncomponents: " << comps.size() << '\n';
  emit(opt, j, o.str());
  return 0;
}

int cmd_parse(const options& opt, const std::string& sig_path, std::string type,
              const std::string& term_text) {
  auto sig = load_sig(sig_path);
  auto toks = tokenize_term(term_text);
  type = resolve_type(sig, type, toks);
  auto t = parse_term(toks, type, sig);
  njson j;
  j["type"] = type;
  j["term"] = flatten_str(t);
  j["depth"] = t.depth();
  emit(opt, j, flatten_str(t) + "\n");
  return 0;
}

int cmd_eval(const options& opt, const std::string& sig_path, std::string type,
             const std::string& target, const std::string& env_arg,
             const std::string& term_text) {
  auto sig = load_sig(sig_path);
  auto toks = tokenize_term(term_text);
  type = resolve_type(sig, type, toks);
  auto t = parse_term(toks, type, sig);
  std::map<std::string, std::string> env;
  {
    std::istringstream es(env_arg);
    std::string kv;
    while (std::getline(es, kv, ','))
      if (auto eq = kv.find('='); eq != std::string::npos)
        env[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  std::string out;
  if (target == "peano")
    out = std::to_string(catamorphism(t, peano_target()));
  else if (target == "size")
    out = std::to_string(catamorphism(t, size_target()));
  else if (target == "depth")
    out = std::to_string(catamorphism(t, depth_target()));
  else if (target == "term")
    out = flatten_str(catamorphism(t, identity_target(sig)));
  else if (!target.empty() && target[0] == '@') {
    auto alg = finite_algebra::load(windowed(sig, opt), slurp(target.substr(1)));
    out = catamorphism(t, algebra_target(alg, env));
  } else {
    fail("UnknownTarget", "'" + target + "'");
  }
  njson j;
  j["value"] = out;
  emit(opt, j, out + "\n");
  return 0;
}

int cmd_normalize(const options& opt, const std::string& sig_path, std::string type,
                  const std::string& head, const std::string& term_text) {
  auto sig = load_sig(sig_path);
  auto h = load_head(sig, head);
  auto toks = tokenize_term(term_text);
  type = resolve_type(sig, type, toks);
  auto t = parse_term(toks, type, sig);
  auto n = normalize(t, h);
  auto rep = head_properties(h);
  njson j;
  j["term"] = flatten_str(n);
  j["stable_head"] = rep.stable;
  std::string text = flatten_str(n) + "\n";
  if (!rep.stable) text += "warning: head type is not stable; ordering may refuse the result\n";
  emit(opt, j, text);
  return 0;
}

int cmd_leq(const options& opt, const std::string& sig_path, std::string type,
            const std::string& head, const std::string& t1, const std::string& t2) {
  auto sig = load_sig(sig_path);
  auto h = load_head(sig, head);
  auto toks1 = tokenize_term(t1), toks2 = tokenize_term(t2);
  type = resolve_type(sig, type, toks1.empty() ? toks2 : toks1);
  bool le = term_leq(parse_term(toks1, type, sig), parse_term(toks2, type, sig), h);
  njson j;
  j["leq"] = le;
  emit(opt, j, std::string(le ? "true" : "false") + "\n");
  return 0;
}

int cmd_enumerate(const options& opt, const std::string& sig_path, const std::string& type,
                  int depth, bool bottoms, const std::string& vars_arg) {
  auto sig = windowed(load_sig(sig_path), opt);
  enum_options eo;
  eo.bottoms = bottoms;
  {
    std::istringstream vs(vars_arg);
    std::string kv;
    while (std::getline(vs, kv, ','))
      if (auto colon = kv.find(':'); colon != std::string::npos)
        eo.vars[kv.substr(colon + 1)].push_back(kv.substr(0, colon));
  }
  auto ts = enumerate_terms(sig, type, depth, eo);
  njson arr = njson::array();
  std::ostringstream o;
  for (const auto& t : ts) {
    arr.push_back(flatten_str(t));
    o << flatten_str(t) << '\n';
  }
  njson j;
  j["terms"] = arr;
  emit(opt, j, o.str());
  return 0;
}

int cmd_poset(const options& opt, const std::string& sig_path, const std::string& type,
              const std::string& head, int depth) {
  auto sig = windowed(load_sig(sig_path), opt);
  auto h = load_head(sig, head);
  auto p = truncated_poset(sig, type, h, depth);
  njson j;
  j["elements"] = p.elems;
  j["poset"] = p.print();
  emit(opt, j, p.print());
  return 0;
}

int cmd_complete(const options& opt, const std::string& path) {
  auto y = finite_poset::load(slurp(path));
  auto c = ideal_completion(y);
  njson j;
  j["elements"] = c.poset.elems;
  j["completion"] = c.print();
  j["isomorphic_to_input"] = are_isomorphic(c.poset, y);
  emit(opt, j, c.print());
  return 0;
}

int cmd_support(const options& opt, const std::string& sig_path) {
  auto sig = load_sig(sig_path);
  auto sup = minimal_support(sig);
  njson j;
  std::ostringstream o;
  for (const auto& b : sig.types()) {
    if (sig.is_parameter(b)) continue;
    const auto& ps = sup.at(b);
    if (ps.empty()) continue;
    j[b] = ps;
    o << b << ":";
    for (const auto& a : ps) o << ' ' << a;
    o << '\n';
  }
  emit(opt, j, o.str());
  return 0;
}

int cmd_poly(const options& opt, const std::string& sig_path, bool do_classify,
             const std::string& type_arg, const std::string& parse_arg, bool instantiate_flag,
             const std::string& family_arg, const std::string& head_arg,
             const std::string& var_args) {
  auto sig = load_sig(sig_path);
  auto sup = minimal_support(sig);
  if (do_classify) {
    auto rep = classify_poly(sig);
    njson j;
    j["simple"] = rep.simple;
    j["semi_simple"] = rep.semi_simple;
    njson cs = njson::array();
    std::ostringstream o;
    o << "simple: " << (rep.simple ? "yes" : "no") << '\n';
    o << "semi_simple: " << (rep.semi_simple ? "yes" : "no") << '\n';
    for (const auto& c : rep.components) {
      njson cj;
      cj["types"] = c.types;
      cj["simple"] = c.simple;
      cs.push_back(cj);
      o << "component:";
      for (const auto& t : c.types) o << ' ' << t;
      o << (c.simple ? " (simple)" : " (not simple)") << '\n';
    }
    j["components"] = cs;
    emit(opt, j, o.str());
    return 0;
  }
  if (type_arg.empty()) fail("UsageError", "poly needs --classify or --type");
  auto pt = poly_type::parse(type_arg, sig, sup);
  if (!parse_arg.empty()) {
    auto t = poly_parse(parse_arg, pt, sig, sup);
    njson j;
    j["term"] = flatten_str(t);
    j["type"] = pt.str();
    emit(opt, j, flatten_str(t) + " : " + pt.str() + "\n");
    return 0;
  }
  if (instantiate_flag) {
    auto wsig = windowed(sig, opt);
    int fdepth = 2;
    if (!family_arg.empty()) {
      auto colon = family_arg.find(':');
      if (family_arg.substr(0, colon) != "terms")
        fail("UnknownFamily", "'" + family_arg + "'");
      if (colon != std::string::npos) fdepth = std::stoi(family_arg.substr(colon + 1));
    }
    auto h = load_head(wsig, head_arg.empty() ? "strict" : head_arg);
    family_oracle fam = [&wsig, &h, fdepth](const param_assignment& v) {
      enum_options eo;
      eo.bottoms = true;
      // the parameter's own bottom is represented by the bottom leaf
      for (const auto& [p, es] : v.carriers) {
        auto bt = v.bottoms.find(p);
        for (const auto& e : es)
          if (bt == v.bottoms.end() || e != bt->second) eo.vars[p].push_back(e);
      }
      return truncation_algebra(wsig, h, fdepth, eo);
    };
    param_assignment u;
    {
      std::istringstream vs(var_args);
      std::string kv;
      while (std::getline(vs, kv, ';')) {
        if (auto eq = kv.find('='); eq != std::string::npos) {
          std::istringstream es(kv.substr(eq + 1));
          std::string e;
          while (std::getline(es, e, ','))
            if (!e.empty()) u.carriers[kv.substr(0, eq)].push_back(e);
        }
      }
    }
    instantiation_engine eng(fam, wsig, sup, u);
    auto r = eng.at(pt);
    njson j;
    j["type"] = pt.str();
    j["carrier"] = r.carrier;
    if (r.bottom) j["bottom"] = *r.bottom;
    j["partial"] = r.partial;
    std::ostringstream o;
    o << "carrier " << pt.str() << ":";
    for (const auto& e : r.carrier) o << ' ' << e;
    o << '\n';
    if (r.bottom) o << "bottom: " << *r.bottom << '\n';
    for (const auto& [k, table] : r.ops)
      o << "op " << k << ": " << table.size() << " entries\n";
    emit(opt, j, o.str());
    return 0;
  }
  // default: describe the instance - its constructors and their signatures
  njson j;
  j["type"] = pt.str();
  njson ops = njson::array();
  std::ostringstream o;
  o << pt.str() << '\n';
  for (const auto& op : constructors_of(sig, sup, pt)) {
    auto os = op_signature(sig, sup, op);
    njson oj;
    oj["op"] = op.str();
    oj["base"] = omega(op);
    njson dom = njson::array();
    std::string doms;
    for (const auto& [slot, ty] : os.dom) {
      dom.push_back(ty.str());
      doms += (doms.empty() ? "" : " ") + ty.str();
      if (&std::get<1>(os.dom.back()) != &ty) doms += " ";
    }
    oj["dom"] = dom;
    oj["cod"] = os.cod.str();
    ops.push_back(oj);
    o << "  " << op.str() << " : ";
    if (os.dom.empty())
      o << "()";
    else
      for (size_t i = 0; i < os.dom.size(); ++i)
        o << (i ? ", " : "") << os.dom[i].second.str();
    o << " -> " << os.cod.str() << '\n';
  }
  j["constructors"] = ops;
  emit(opt, j, o.str());
  return 0;
}

int cmd_classify(const options& opt, const std::string& sig_path, const std::string& alg_path,
                 const std::string& universe_arg, bool with_depths) {
  auto sig = windowed(load_sig(sig_path), opt);
  auto alg = finite_algebra::load(sig, slurp(alg_path));
  family u = parse_family_arg(universe_arg);
  auto c = classify(alg, u);
  njson j = classification_json(c);
  std::string text = classification_text(c);
  if (with_depths) {
    auto g = compute_depths(alg);
    njson dj;
    std::ostringstream ds;
    for (const auto& [t, m] : g.rank)
      for (const auto& [e, r] : m) {
        dj[t + "." + e] = r;
        ds << "depth " << t << ' ' << e << ": " << r << '\n';
      }
    j["depths"] = dj;
    j["grading_valid"] = verify_grading(alg, g, alg.bottomed());
    text += ds.str();
  }
  emit(opt, j, text);
  return 0;
}

int cmd_hom(const options& opt, const std::string& sig_path, const std::string& src_path,
            const std::string& dst_path, bool bottomed, const std::string& check_path,
            bool count_only) {
  auto sig = windowed(load_sig(sig_path), opt);
  auto src = finite_algebra::load(sig, slurp(src_path));
  auto dst = finite_algebra::load(sig, slurp(dst_path));
  if (!check_path.empty()) {
    // candidate file: `map type: x -> y` lines
    hom_candidate pi;
    std::istringstream in(slurp(check_path));
    std::string line;
    while (std::getline(in, line)) {
      std::string sp;
      for (char ch : line) sp += (ch == ':' ) ? ' ' : ch;
      std::istringstream is(sp);
      std::string head, ty, x, arrow, y;
      if (!(is >> head)) continue;
      if (head != "map") fail("ParseError", "candidate line '" + line + "'");
      if (!(is >> ty >> x >> arrow >> y) || arrow != "->")
        fail("ParseError", "candidate line '" + line + "'");
      pi.map[ty][x] = y;
    }
    auto r = check_homomorphism(src, dst, pi, bottomed);
    njson j;
    j["ok"] = r.ok;
    j["witness"] = r.witness;
    emit(opt, j, std::string(r.ok ? "homomorphism" : "not a homomorphism") +
                     (r.ok ? "" : ": " + r.witness) + "\n");
    return 0;
  }
  auto homs = find_homomorphisms(src, dst, bottomed);
  njson j;
  j["count"] = homs.size();
  std::ostringstream o;
  o << "homomorphisms: " << homs.size() << '\n';
  if (!count_only) {
    njson arr = njson::array();
    for (const auto& h : homs) {
      njson hj;
      for (const auto& [t, m] : h.map)
        for (const auto& [x, y] : m) hj[t + "." + x] = y;
      arr.push_back(hj);
      for (const auto& [t, m] : h.map)
        for (const auto& [x, y] : m) o << "map " << t << ": " << x << " -> " << y << '\n';
      o << "--\n";
    }
    j["homomorphisms"] = arr;
  }
  emit(opt, j, o.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"term algebras, bottomed semantics and finite order theory"};
  app.require_subcommand(1);
  options opt;
  app.add_flag("--json", opt.json, "canonical JSON output");
  std::string window;
  app.add_option("--int-window", window, "numeral window lo:hi (default -128:127)");

  std::string sig_path, type, head = "strict", target = "peano", term_text, t2;
  std::string alg_path, dst_path, check_path, universe, vars, env, parse_arg, family_arg;
  int depth = 2;
  bool bottoms = false, bottomed = false, do_classify = false, with_depths = false;
  bool instantiate_flag = false, count_only = false;

  auto* check = app.add_subcommand("check", "parse and validate a signature");
  check->add_option("sig", sig_path)->required();

  auto* parse = app.add_subcommand("parse", "parse one term");
  parse->add_option("--sig", sig_path)->required();
  parse->add_option("--type", type);
  parse->add_option("term", term_text)->required();

  auto* eval = app.add_subcommand("eval", "evaluate a term through a target algebra");
  eval->add_option("--sig", sig_path)->required();
  eval->add_option("--type", type);
  eval->add_option("--target", target, "peano|size|depth|term|@algebra-file");
  eval->add_option("--env", env, "variable environment v=elem,...");
  eval->add_option("term", term_text)->required();

  auto* norm = app.add_subcommand("normalize", "normal form under a head type");
  norm->add_option("--sig", sig_path)->required();
  norm->add_option("--type", type);
  norm->add_option("--head", head, "flat|strict|smash|degenerate|@file");
  norm->add_option("term", term_text)->required();

  auto* leq = app.add_subcommand("leq", "less-defined-than on normal forms");
  leq->add_option("--sig", sig_path)->required();
  leq->add_option("--type", type);
  leq->add_option("--head", head);
  leq->add_option("t1", term_text)->required();
  leq->add_option("t2", t2)->required();

  auto* enumerate = app.add_subcommand("enumerate", "terms up to a depth");
  enumerate->add_option("--sig", sig_path)->required();
  enumerate->add_option("--type", type)->required();
  enumerate->add_option("--depth", depth)->required();
  enumerate->add_flag("--bottoms", bottoms);
  enumerate->add_option("--vars", vars, "variables name:type,...");

  auto* poset = app.add_subcommand("poset", "truncated poset of normal forms");
  poset->add_option("--sig", sig_path)->required();
  poset->add_option("--type", type)->required();
  poset->add_option("--head", head);
  poset->add_option("--depth", depth)->required();

  auto* complete = app.add_subcommand("complete", "ideal completion of a poset file");
  complete->add_option("poset", alg_path)->required();

  auto* support = app.add_subcommand("support", "minimal support of a signature");
  support->add_option("sig", sig_path)->required();

  auto* poly = app.add_subcommand("poly", "polymorphic types and instances");
  poly->add_option("sig", sig_path)->required();
  poly->add_flag("--classify", do_classify);
  poly->add_option("--type", type);
  poly->add_option("--parse", parse_arg);
  poly->add_flag("--instantiate", instantiate_flag);
  poly->add_option("--family", family_arg, "terms:<depth>");
  poly->add_option("--head", head);
  poly->add_option("--var", vars, "type-variable carriers t=e1,e2;u=e3");

  auto* classify_cmd = app.add_subcommand("classify", "classify a finite algebra");
  classify_cmd->add_option("--sig", sig_path)->required();
  classify_cmd->add_option("algebra", alg_path)->required();
  classify_cmd->add_option("--universe", universe, "family U as t:e1,e2;...");
  classify_cmd->add_flag("--depths", with_depths);

  auto* hom = app.add_subcommand("hom", "check or search homomorphisms");
  hom->add_option("--sig", sig_path)->required();
  hom->add_option("src", alg_path)->required();
  hom->add_option("dst", dst_path)->required();
  hom->add_flag("--bottomed", bottomed);
  hom->add_option("--check", check_path, "candidate file of `map type: x -> y` lines");
  hom->add_flag("--count", count_only);

  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (!window.empty()) {
      auto colon = window.find(':');
      if (colon == std::string::npos) fail("UsageError", "--int-window wants lo:hi");
      opt.window_lo = std::stol(window.substr(0, colon));
      opt.window_hi = std::stol(window.substr(colon + 1));
    }
    if (*check) return cmd_check(opt, sig_path);
    if (*parse) return cmd_parse(opt, sig_path, type, term_text);
    if (*eval) return cmd_eval(opt, sig_path, type, target, env, term_text);
    if (*norm) return cmd_normalize(opt, sig_path, type, head, term_text);
    if (*leq) return cmd_leq(opt, sig_path, type, head, term_text, t2);
    if (*enumerate) return cmd_enumerate(opt, sig_path, type, depth, bottoms, vars);
    if (*poset) return cmd_poset(opt, sig_path, type, head, depth);
    if (*complete) return cmd_complete(opt, alg_path);
    if (*support) return cmd_support(opt, sig_path);
    if (*poly)
      return cmd_poly(opt, sig_path, do_classify, type, parse_arg, instantiate_flag, family_arg,
                      head, vars);
    if (*classify_cmd) return cmd_classify(opt, sig_path, alg_path, universe, with_depths);
    if (*hom) return cmd_hom(opt, sig_path, alg_path, dst_path, bottomed, check_path, count_only);
  } catch (const adt::error& e) {
    std::cout << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cout << "error: Internal: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
