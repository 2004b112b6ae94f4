// Concrete models, coset enumeration, and the named check suites.

#include <catch2/catch_amalgamated.hpp>

#include "alterna/models.hpp"
#include "alterna/toddcoxeter.hpp"
#include "alterna/verify.hpp"

using namespace alterna;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("permutation models have the right group orders", "[verify]") {
  REQUIRE(bfs_closure(coxeter_model("A2"), 100).value() == 6);
  REQUIRE(bfs_closure(coxeter_model("D4"), 1000).value() == 192);
  REQUIRE(bfs_closure(coxeter_model("H3"), 1000).value() == 120);
  REQUIRE(coxeter_order("D4") == 192);
  REQUIRE(coxeter_order("H3") == 120);
  REQUIRE(coxeter_order("I2(7)") == 14);

  auto b2 = coxeter_model("B2");
  REQUIRE(perm_order(b2[0] * b2[1]) == 4);
  auto i4 = coxeter_model("I2(4)");
  REQUIRE(perm_order(i4[0] * i4[1]) == 4);
  auto a1 = coxeter_model("A1");
  REQUIRE(perm_order(a1[0]) == 2);

  REQUIRE_THROWS_WITH(coxeter_model("Q5"),
                      ContainsSubstring("no permutation model"));
}

TEST_CASE("closure enumeration caps and degenerate inputs", "[verify]") {
  REQUIRE(!bfs_closure(coxeter_model("A3"), 10).has_value());
  REQUIRE(bfs_closure({}, 10).value() == 1);
  REQUIRE_THROWS_WITH(validated_permutation({0, 0, 1}),
                      ContainsSubstring("not a bijection"));
  std::map<std::string, Permutation> assign;
  assign["a"] = transposition(3, 0, 1);
  REQUIRE_THROWS_WITH(eval_word(gen("zz"), assign, 3),
                      ContainsSubstring("assignment missing generator"));
}

TEST_CASE("free automorphism model satisfies the braid relations",
          "[verify]") {
  for (int n = 2; n <= 6; ++n) {
    auto rep = artin_rep(n);
    for (int i = 0; i + 1 < n; ++i) {
      FreeGroupAuto a = rep["g" + std::to_string(i)];
      FreeGroupAuto b = rep["g" + std::to_string(i + 1)];
      REQUIRE(a * b * a == b * a * b);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        FreeGroupAuto a = rep["g" + std::to_string(i)];
        FreeGroupAuto b = rep["g" + std::to_string(j)];
        REQUIRE(a * b == b * a);
      }
  }
}

TEST_CASE("relation checking flags a corrupted relation", "[verify]") {
  GroupPresentation cox = coxeter_group(named_matrix("A2"));
  auto assign = coxeter_assignment("A2");
  REQUIRE(check_relations(cox, assign).empty());

  cox.relations.emplace_back(w_pow(gen("s0") * gen("s1"), 4), FreeWord{});
  auto failed = check_relations(cox, assign);
  REQUIRE(failed == std::vector<size_t>{3});
}

TEST_CASE("coset enumeration reproduces index-two image orders", "[verify]") {
  REQUIRE(todd_coxeter(edge_group(named_matrix("A2"))).value() == 3);
  REQUIRE(todd_coxeter(bourbaki_group(named_matrix("A1"))).value() == 1);
  REQUIRE(todd_coxeter(bourbaki_group(named_matrix("A3"))).value() == 12);
  REQUIRE(todd_coxeter(bourbaki_group(named_matrix("B2"))).value() == 4);
  REQUIRE(todd_coxeter(bourbaki_group(named_matrix("H3"))).value() == 60);
  for (int m = 2; m <= 12; ++m) {
    std::string name = "I2(" + std::to_string(m) + ")";
    REQUIRE(todd_coxeter(bourbaki_group(named_matrix(name))).value() ==
            static_cast<size_t>(m));
  }

  GroupPresentation collapse;
  collapse.generators = {"a"};
  collapse.relations.emplace_back(gen("a", 2), FreeWord{});
  collapse.relations.emplace_back(gen("a", 3), FreeWord{});
  REQUIRE(todd_coxeter(collapse).value() == 1);

  GroupPresentation free2;
  free2.generators = {"a", "b"};
  REQUIRE(!todd_coxeter(free2, 100).has_value());
}

TEST_CASE("golden-ratio integers and the reflection matrices", "[verify]") {
  GoldInt phi{0, 1};
  REQUIRE(phi * phi == GoldInt{1, 1});
  REQUIRE(GoldInt{1, 1} * phi == GoldInt{1, 2});
  REQUIRE(gold_half(GoldInt{2, 4}) == GoldInt{1, 2});
  REQUIRE_THROWS_WITH(gold_half(GoldInt{1, 0}),
                      ContainsSubstring("inexact halving"));

  auto mm = matrix_model(named_matrix("A3"));
  REQUIRE(mm.size() == 3);
  IntMatrix id = IntMatrix::identity(3);
  for (const auto& s : mm) REQUIRE(s * s == id);
  IntMatrix p = mm[0] * mm[1];
  REQUIRE(p * p * p == id);
  REQUIRE_THROWS_AS(matrix_model(named_matrix("B2")), std::invalid_argument);
}

TEST_CASE("two-coordinate wreath quotient facts", "[verify]") {
  auto assign = metabelian_assignment();
  MetaElt g0 = assign["g0"], g1 = assign["g1"];
  MetaElt id{};
  REQUIRE(g0 * g0 == id);
  REQUIRE(g0 * g1 * g0 * g1 == g1 * g0 * g1 * g0);
  REQUIRE(g0 * g1 * g0 != g1 * g0 * g1);

  MetaElt h = g0 * g1;
  REQUIRE(h * h == MetaElt{false, 1, 1});
  MetaElt target = g1 * meta_inverse(g0);
  REQUIRE(target == MetaElt{true, 1, 0});
  REQUIRE(meta_in_subgroup(h * h, {g0 * g0, g0 * g1}, 4));
  REQUIRE(!meta_in_subgroup(target, {g0 * g0, g0 * g1}, 16));
}

TEST_CASE("numeric dihedral checks are deterministic in the seed",
          "[verify]") {
  SuiteReport r1 = dihedral_eval_suite(5, 7);
  SuiteReport r2 = dihedral_eval_suite(5, 7);
  REQUIRE(r1.all_pass());
  REQUIRE(r1.checks.size() == r2.checks.size());
  for (size_t i = 0; i < r1.checks.size(); ++i) {
    REQUIRE(r1.checks[i].name == r2.checks[i].name);
    REQUIRE(r1.checks[i].pass == r2.checks[i].pass);
    REQUIRE(r1.checks[i].detail == r2.checks[i].detail);
  }
}

TEST_CASE("suite dispatch by name", "[verify]") {
  REQUIRE(run_suite("coeffs").all_pass());
  REQUIRE(run_suite("remark-iv").all_pass());
  REQUIRE(run_suite("rs", {"A2", "I2(3)"}).all_pass());
  REQUIRE(run_suite("group-presentations", {"A2", "B2"}).all_pass());
  REQUIRE(run_suite("braid-presentations").all_pass());
  REQUIRE_THROWS_WITH(run_suite("nope"), ContainsSubstring("unknown suite"));
}
