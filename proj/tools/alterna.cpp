// Command-line front end: coefficient tables, presentations, kernel
// rewriting, and the named check suites.  Exit codes: 0 success, 1 a check
// failed, 2 usage or input validation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "alterna/alpha.hpp"
#include "alterna/emitters.hpp"
#include "alterna/io.hpp"
#include "alterna/schreier.hpp"
#include "alterna/verify.hpp"

using namespace alterna;

namespace {

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

int emit_report(const SuiteReport& rep, bool json) {
  if (json)
    print_json(report_to_json(rep));
  else
    std::cout << report_to_text(rep);
  return rep.all_pass() ? 0 : 1;
}

int run_coeffs(int m, bool one_param, bool alpha, bool check_gen, int maxm,
               bool json) {
  if (check_gen) {
    SuiteReport rep{"coeffs-gen", {}};
    CheckReport c = gen_check_C(maxm);
    rep.checks.push_back(
        {"two-parameter recursion matches generating function", c.ok,
         c.detail});
    CheckReport d = gen_check_D(maxm);
    rep.checks.push_back(
        {"one-parameter closed form matches recursion", d.ok, d.detail});
    return emit_report(rep, json);
  }
  if (m < 2) throw std::invalid_argument("--m must be at least 2");
  if (alpha) {
    AlphaTable t = alpha_table(m);
    if (json)
      print_json(alpha_to_json(t, m));
    else
      std::cout << alpha_to_text(t);
    return 0;
  }
  AKVector v = one_param ? a_one_param(m) : a_vector(m);
  if (json)
    print_json(ak_to_json(v));
  else
    std::cout << ak_to_text(v);
  return 0;
}

int run_dihedral(int m, bool eval_mode, unsigned seed) {
  if (m < 2) throw std::invalid_argument("--m must be at least 2");
  if (!eval_mode) {
    SuiteReport rep = dihedral_suite(m);
    std::cout << report_to_text(rep);
    return rep.all_pass() ? 0 : 1;
  }
  SuiteReport rep = dihedral_eval_suite(m, seed);
  SuiteReport sym = dihedral_suite(std::min(m, 8));
  rep.checks.insert(rep.checks.end(), sym.checks.begin(), sym.checks.end());
  std::cout << report_to_text(rep);
  return rep.all_pass() ? 0 : 1;
}

int run_present(const std::string& input, const std::string& kind, bool json) {
  CoxeterMatrix mat = matrix_from_spec(input);

  if (kind == "typeA-braid" || kind == "typeA-edge-braid") {
    CoxeterMatrix a = named_matrix("A" + std::to_string(mat.n));
    if (mat.m != a.m)
      throw std::invalid_argument(kind + " requires the type A matrix of rank " +
                                  std::to_string(mat.n));
    auto [plain, edge] = typeA_presentations(mat.n);
    const GroupPresentation& p = kind == "typeA-braid" ? plain : edge;
    if (json)
      print_json(group_to_json(p));
    else
      std::cout << group_to_text(p);
    return 0;
  }

  if (kind == "bourbaki-hecke" || kind == "edge-hecke") {
    AlgebraPresentation p =
        kind == "bourbaki-hecke" ? bourbaki_hecke(mat) : edge_hecke(mat);
    if (json)
      print_json(algebra_to_json(p));
    else
      std::cout << algebra_to_text(p);
    return 0;
  }

  GroupPresentation p;
  if (kind == "bourbaki-group")
    p = bourbaki_group(mat);
  else if (kind == "edge-group")
    p = edge_group(mat);
  else if (kind == "bourbaki-braid")
    p = bourbaki_braid(mat);
  else
    p = edge_braid(mat);
  if (json)
    print_json(group_to_json(p));
  else
    std::cout << group_to_text(p);
  return 0;
}

int run_rs(const std::string& input, const std::string& character, bool simp,
           bool json) {
  GroupPresentation pres = group_from_json(read_json_file(input));
  SignCharacter chi;
  if (character == "all-minus") {
    chi = all_minus(pres);
  } else {
    Json j = read_json_file(character);
    for (const auto& [g, s] : j.items()) chi.sign[g] = s.get<int>();
  }
  GroupPresentation out = rs_rewrite({pres, chi});
  if (simp) out = simplify(out);
  if (json)
    print_json(group_to_json(out));
  else
    std::cout << group_to_text(out);
  return 0;
}

int run_verify(const std::string& suite, const std::string& corpus, int cap,
               bool json) {
  std::vector<std::string> names;
  if (corpus == "default") {
    names = default_corpus();
  } else {
    Json j = read_json_file(corpus);
    for (const auto& x : j) names.push_back(x.get<std::string>());
  }
  return emit_report(run_suite(suite, names, static_cast<size_t>(cap)), json);
}

int run_info(const std::string& input) {
  CoxeterMatrix mat = matrix_from_spec(input);
  ParamClass pc = parameter_classes(mat);
  CoxGraph g = connected_extension(mat);
  CycleBasis cb = cycle_basis(g);

  std::cout << "rank: " << mat.n << "\n";
  std::cout << "parameter classes:";
  for (const auto& cls : pc.classes) {
    std::cout << " [";
    for (size_t i = 0; i < cls.size(); ++i)
      std::cout << (i ? " " : "") << cls[i];
    std::cout << "]";
  }
  std::cout << "\n";
  std::cout << "extension edges:\n";
  for (const auto& [e, label] : g.edges) {
    std::cout << "  " << e.first << "-" << e.second << " label " << label;
    if (g.added.count(e)) std::cout << " (added)";
    std::cout << "\n";
  }
  std::cout << "cycle basis size: " << cb.cycles.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alternating subgroups of Coxeter and braid groups: "
               "coefficients, presentations, rewriting, verification"};
  app.require_subcommand(1);

  int m = 0;
  bool one_param = false, alpha = false, check_gen = false;
  int maxm = 0;
  bool c_json = false, c_text = false;
  auto* coeffs =
      app.add_subcommand("coeffs", "relation coefficients and their checks");
  coeffs->add_option("--m", m, "number of letters in the bracket");
  coeffs->add_flag("--one-param", one_param, "equal-parameter specialization");
  coeffs->add_flag("--alpha", alpha, "print the expansion coefficient table");
  auto* cg = coeffs->add_flag("--check-gen", check_gen,
                              "check recursions against generating functions");
  auto* mx = coeffs->add_option("--max", maxm, "largest m for --check-gen");
  cg->needs(mx);
  mx->needs(cg);
  auto* cj = coeffs->add_flag("--json", c_json, "machine-readable output");
  auto* ct = coeffs->add_flag("--text", c_text, "human-readable output");
  cj->excludes(ct);
  ct->excludes(cj);

  int dm = 0;
  bool d_check = false, d_eval = false;
  unsigned d_seed = 0;
  auto* dihedral =
      app.add_subcommand("dihedral", "identity checks in the rank-2 algebra");
  dihedral->add_option("--m", dm, "edge label")->required();
  dihedral->add_flag("--check", d_check, "run the identity checks");
  dihedral->add_flag("--eval-mode", d_eval,
                     "evaluate at random rational points instead of fully "
                     "symbolic computation");
  dihedral->add_option("--seed", d_seed, "random seed for --eval-mode");

  std::string p_input, p_kind;
  bool p_json = false, p_text = false;
  auto* present =
      app.add_subcommand("present", "emit a presentation for a matrix");
  present->add_option("--input", p_input, "matrix file or built-in name")
      ->required();
  present
      ->add_option("--kind", p_kind, "which presentation to emit")
      ->required()
      ->check(CLI::IsMember({"bourbaki-group", "bourbaki-hecke", "edge-group",
                             "edge-hecke", "bourbaki-braid", "edge-braid",
                             "typeA-braid", "typeA-edge-braid"}));
  auto* pj = present->add_flag("--json", p_json, "machine-readable output");
  auto* pt = present->add_flag("--text", p_text, "human-readable output");
  pj->excludes(pt);
  pt->excludes(pj);

  std::string r_input, r_char = "all-minus";
  bool r_json = false, r_simp = false;
  auto* rs = app.add_subcommand(
      "rs", "rewrite the index-two kernel of a sign character");
  rs->add_option("--input", r_input, "presentation file")->required();
  rs->add_option("--character", r_char,
                 "all-minus or a file of generator signs");
  rs->add_flag("--simplify", r_simp, "run the cleanup pass on the output");
  rs->add_flag("--json", r_json, "machine-readable output");

  std::string v_suite, v_corpus = "default";
  int v_cap = 50000;
  bool v_json = false;
  auto* verify = app.add_subcommand("verify", "run a named check suite");
  verify
      ->add_option("--suite", v_suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"coeffs", "dihedral", "group-presentations",
                             "braid-presentations", "rs", "remark-iv"}));
  verify->add_option("--corpus", v_corpus,
                     "default or a file with a list of matrix names");
  verify->add_option("--cap", v_cap, "coset and closure enumeration cap");
  verify->add_flag("--json", v_json, "machine-readable output");

  std::string i_input;
  auto* info = app.add_subcommand("info", "describe a matrix and its graph");
  info->add_option("--input", i_input, "matrix file or built-in name")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (coeffs->parsed())
      return run_coeffs(m, one_param, alpha, check_gen, maxm, c_json);
    if (dihedral->parsed()) {
      if (!d_check)
        throw std::invalid_argument("dihedral requires --check");
      return run_dihedral(dm, d_eval, d_seed);
    }
    if (present->parsed()) return run_present(p_input, p_kind, p_json);
    if (rs->parsed()) return run_rs(r_input, r_char, r_simp, r_json);
    if (verify->parsed()) return run_verify(v_suite, v_corpus, v_cap, v_json);
    if (info->parsed()) return run_info(i_input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
