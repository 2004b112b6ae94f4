// Dihedral Hecke algebra: scalar layer, multiplication rules, the involution,
// the f generators, defining-relation residuals, braid difference expansion.

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "alterna/dihedral.hpp"

using namespace alterna;

namespace {

using Sym = DihedralAlgebra<SymbolicField>;
using Num = DihedralAlgebra<NumericField>;

QScalar qmono(const std::string& v, int e, int c = 1) {
  return QScalar(LaurentPoly::var(v, e) * LaurentPoly(c));
}

Rat random_q(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(2, 9), den(1, 9), sign(0, 1);
  Rat q;
  do {
    q = Rat(num(rng), den(rng));
    if (sign(rng)) q = -q;
  } while (q == 0 || q == 1 || q == -1);
  return q;
}

Num::Elem random_num_elem(const Num& alg, std::mt19937& rng) {
  std::uniform_int_distribution<int> word(-(alg.m - 1), alg.m);
  std::uniform_int_distribution<int> coeff(-4, 4);
  Num::Elem e;
  for (int t = 0; t < 3; ++t) e[word(rng)] += Rat(coeff(rng));
  Num::strip(e);
  return e;
}

}  // namespace

TEST_CASE("factored scalar arithmetic", "[heckedihedral]") {
  LaurentPoly q = LaurentPoly::var("q0");
  LaurentPoly qi = LaurentPoly::var("q0", -1);

  QScalar inv(LaurentPoly(1), {{"q0", 1}});
  REQUIRE(QScalar(q + qi) * inv == QScalar(1));
  REQUIRE(inv + inv == QScalar(LaurentPoly(2), {{"q0", 1}}));

  // (q^2 + 1) / (q + q^-1) collapses to q.
  REQUIRE(QScalar(pow(q, 2) + 1, {{"q0", 1}}) == QScalar(q));

  QScalar beta(q - qi, {{"q0", 1}});
  REQUIRE(beta - beta == QScalar());
  REQUIRE((beta * QScalar()).is_zero());
  REQUIRE(beta * QScalar(q + qi) == QScalar(q - qi));

  // Mixed-denominator sums find the common denominator exactly.
  QScalar a(LaurentPoly(1), {{"q0", 2}});
  QScalar b(LaurentPoly(1), {{"q0", 1}});
  QScalar s = a + b;
  REQUIRE(s == QScalar(LaurentPoly(1) + q + qi, {{"q0", 2}}));
}

TEST_CASE("generator multiplication rules", "[heckedihedral]") {
  Sym alg = make_symbolic_dihedral(4, false);

  REQUIRE(alg.left_mul_gen(0, alg.unit()) == alg.gen(0));
  REQUIRE(alg.left_mul_gen(1, alg.unit()) == alg.gen(1));

  // g_i^2 = (q_i - q_i^-1) g_i + 1
  Sym::Elem sq = alg.left_mul_gen(0, alg.gen(0));
  Sym::Elem expect{{1, alg.field.quad(0)}, {0, QScalar(1)}};
  REQUIRE(sq == expect);

  // Inverses: g (g - (q - q^-1)) = 1.
  Sym::Elem ginv{{1, QScalar(1)}, {0, -alg.field.quad(0)}};
  REQUIRE(alg.mul(alg.gen(0), ginv) == alg.unit());

  // At m = 2 the braid relation rewrites the top word before reducing.
  Sym alg2 = make_symbolic_dihedral(2, false);
  Sym::Elem top{{2, QScalar(1)}};
  Sym::Elem r = alg2.left_mul_gen(0, top);
  Sym::Elem expect2{{2, alg2.field.quad(0)}, {-1, QScalar(1)}};
  REQUIRE(r == expect2);

  // Same on the other side: g_j times the stored word.
  Sym::Elem rj = alg2.left_mul_gen(1, top);
  Sym::Elem expectj{{2, alg2.field.quad(1)}, {1, QScalar(1)}};
  REQUIRE(rj == expectj);
}

TEST_CASE("f generators square to one and specialize to g at q = 1",
          "[heckedihedral]") {
  for (int m = 2; m <= 6; ++m) {
    Sym alg = make_symbolic_dihedral(m, m % 2 == 1);
    for (int which : {0, 1})
      REQUIRE(alg.mul(alg.f_gen(which), alg.f_gen(which)) == alg.unit());
  }

  std::mt19937 rng(5);
  for (int m = 7; m <= 12; ++m) {
    Rat qi = random_q(rng);
    Num alg = make_numeric_dihedral(m, qi, m % 2 ? qi : random_q(rng));
    for (int which : {0, 1})
      REQUIRE(alg.mul(alg.f_gen(which), alg.f_gen(which)) == alg.unit());
  }

  // The coefficients of f degenerate to those of g as q -> 1.
  Sym alg = make_symbolic_dihedral(3, true);
  Sym::Elem f = alg.f_gen(0);
  std::map<std::string, Rat> at1{{"q0", Rat(1)}};
  for (const auto& [word, c] : f) {
    Rat v = eval(c.num, at1);
    for (const auto& [var, p] : c.den) {
      (void)var;
      for (int t = 0; t < p; ++t) v /= 2;  // q + q^-1 = 2 at q = 1
    }
    REQUIRE(v == (word == 1 ? Rat(1) : Rat(0)));
  }
}

TEST_CASE("the involution is a homomorphism of order two", "[heckedihedral]") {
  Sym alg = make_symbolic_dihedral(5, true);

  REQUIRE(alg.phi(alg.unit()) == alg.unit());

  Sym::Elem img = alg.phi(alg.gen(0));
  Sym::Elem expect{{0, alg.field.quad(0)}, {1, QScalar(-1)}};
  REQUIRE(img == expect);

  for (int which : {0, 1}) {
    Sym::Elem f = alg.f_gen(which);
    REQUIRE(alg.phi(f) == alg.scale(QScalar(-1), f));
  }

  // Homomorphism and involution properties on random elements.
  std::mt19937 rng(99);
  for (int m = 2; m <= 12; ++m) {
    Rat qi = random_q(rng);
    Num nalg = make_numeric_dihedral(m, qi, m % 2 ? qi : random_q(rng));
    for (int t = 0; t < 20; ++t) {
      Num::Elem x = random_num_elem(nalg, rng), y = random_num_elem(nalg, rng);
      REQUIRE(nalg.phi(nalg.mul(x, y)) == nalg.mul(nalg.phi(x), nalg.phi(y)));
      REQUIRE(nalg.phi(nalg.phi(x)) == x);
    }
  }

  // Symbolic spot check of the same properties at small m.
  Sym::Elem x{{1, qmono("q0", 1)}, {-2, QScalar(2)}};
  Sym::Elem y{{3, QScalar(1)}, {0, qmono("q0", -1, 3)}};
  Sym alg5 = make_symbolic_dihedral(5, true);
  REQUIRE(alg5.phi(alg5.mul(x, y)) == alg5.mul(alg5.phi(x), alg5.phi(y)));
  REQUIRE(alg5.phi(alg5.phi(y)) == y);
}

TEST_CASE("products close over the basis and associate", "[heckedihedral]") {
  std::mt19937 rng(314);
  for (int m = 2; m <= 12; ++m) {
    Rat qi = random_q(rng);
    Num alg = make_numeric_dihedral(m, qi, m % 2 ? qi : random_q(rng));

    for (int a = -(m - 1); a <= m; ++a)
      for (int b = -(m - 1); b <= m; ++b) {
        Num::Elem p = alg.mul(Num::Elem{{a, Rat(1)}}, Num::Elem{{b, Rat(1)}});
        for (const auto& [k, c] : p) {
          (void)c;
          REQUIRE(alg.in_basis(k));
        }
      }

    for (int t = 0; t < 100; ++t) {
      Num::Elem x = random_num_elem(alg, rng), y = random_num_elem(alg, rng),
                z = random_num_elem(alg, rng);
      REQUIRE(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)));
    }

    REQUIRE(alg.mul(alg.unit(), alg.gen(1)) == alg.gen(1));
    REQUIRE(alg.mul(alg.gen(1), alg.unit()) == alg.gen(1));
  }

  std::mt19937 rng2(2718);
  for (int m = 2; m <= 4; ++m) {
    Sym alg = make_symbolic_dihedral(m, m % 2 == 1);
    std::uniform_int_distribution<int> word(-(m - 1), m), coeff(-3, 3);
    for (int t = 0; t < 5; ++t) {
      auto rnd = [&] {
        Sym::Elem e;
        for (int u = 0; u < 2; ++u) e[word(rng2)] += QScalar(coeff(rng2));
        Sym::strip(e);
        return e;
      };
      Sym::Elem x = rnd(), y = rnd(), z = rnd();
      REQUIRE(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)));
    }
  }
}

TEST_CASE("defining-relation residual vanishes exactly", "[heckedihedral]") {
  for (int m = 2; m <= 9; ++m) {
    if (m % 2 == 0) {
      auto alg = make_symbolic_dihedral(m, false);
      REQUIRE(alg.is_zero(relation_residual(m, false)));
    }
    auto alg = make_symbolic_dihedral(m, true);
    REQUIRE(alg.is_zero(relation_residual(m, true)));
  }
}

TEST_CASE("braid difference expansion reproduces the relation coefficients",
          "[heckedihedral]") {
  FExpansion e2 = braid_f_expansion(2, false);
  REQUIRE(e2.pairs.size() == 1);
  REQUIRE(e2.pairs.at(2).first == LaurentPoly(1));
  REQUIRE(e2.pairs.at(2).second == LaurentPoly(-1));

  FExpansion e3 = braid_f_expansion(3, true);
  LaurentPoly b0 = LaurentPoly::var("b0");
  REQUIRE(e3.pairs.at(3).first == LaurentPoly(1));
  REQUIRE(e3.pairs.at(3).second == LaurentPoly(-1));
  REQUIRE(e3.pairs.at(1).first == pow(b0, 2));
  REQUIRE(e3.pairs.at(1).second == -pow(b0, 2));
  REQUIRE(e3.pairs.count(0) == 0);

  for (int m = 2; m <= 12; ++m) {
    bool eq = m % 2 == 1;
    FExpansion fx = braid_f_expansion(m, eq);
    AKVector ak = a_vector(m, eq);
    REQUIRE(fx.pairs.count(0) == 0);  // no constant term survives
    for (int k = 1; k <= m; ++k) {
      LaurentPoly pos, neg;
      if (fx.pairs.count(k)) {
        pos = fx.pairs.at(k).first;
        neg = fx.pairs.at(k).second;
      }
      REQUIRE(pos == ak.a[k]);   // antisymmetric part is exactly a_k
      REQUIRE(neg == -ak.a[k]);  // and the symmetric part vanishes
    }
  }
}

TEST_CASE("construction guards", "[heckedihedral]") {
  REQUIRE_THROWS_AS(make_symbolic_dihedral(3, false), std::invalid_argument);
  REQUIRE_THROWS_AS(make_symbolic_dihedral(1, true), std::invalid_argument);
  REQUIRE_THROWS_AS(make_numeric_dihedral(5, Rat(2), Rat(3)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_numeric_dihedral(4, Rat(1), Rat(2)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_numeric_dihedral(4, Rat(2), Rat(0)),
                    std::invalid_argument);
}
