#include <gtest/gtest.h>

#include <random>

#include "test_models.hpp"

using namespace loopcalc;
using testmodels::el;

namespace {

std::vector<LoopModel> bv_models() {
  return {builtin::toy_bv0(), testmodels::exterior_poly(), testmodels::torus_like()};
}

int parity_sign(std::int64_t e) { return is_odd(e) ? -1 : 1; }

std::int64_t deg(const Element& x) { return degree_of(x).value; }

}  // namespace

TEST(Bracket, Examples) {
  const LoopModel toy = builtin::toy_bv0();
  const Element x = el(toy, "x"), y = el(toy, "y");
  EXPECT_TRUE(bracket(toy, toy.algebra().one(), x).is_zero());
  EXPECT_TRUE(bracket(toy, x, y).is_zero());
  EXPECT_TRUE(bracket(toy, x * y, y).is_zero());
}

TEST(Bracket, RequiresData) {
  const LoopModel s4 = builtin::sphere(4);
  EXPECT_THROW(bracket(s4, el(s4, "a"), el(s4, "v")), MissingDataError);
  EXPECT_THROW(delta(s4, el(s4, "a")), MissingDataError);
}

TEST(Bracket, LeibnizValues) {
  const LoopModel m = testmodels::exterior_poly();
  // {e, t^k} = k t^k and {t, e} = -t
  EXPECT_EQ(bracket(m, el(m, "e"), el(m, "t^3")), el(m, "3*t^3"));
  EXPECT_EQ(bracket(m, el(m, "t"), el(m, "e")), el(m, "-t"));
  EXPECT_EQ(bracket(m, el(m, "e"), el(m, "e*t")), el(m, "e*t"));
  const LoopModel tor = testmodels::torus_like();
  EXPECT_EQ(bracket(tor, el(tor, "e1"), el(tor, "t1^2*t2")), el(tor, "2*t1^2*t2"));
  EXPECT_EQ(bracket(tor, el(tor, "e2"), el(tor, "t1^2*t2")), el(tor, "t1^2*t2"));
}

TEST(Bracket, GradedAntisymmetry) {
  for (const LoopModel& m : bv_models()) {
    const auto basis = m.algebra().basis_window(8);
    for (const auto& bx : basis)
      for (const auto& by : basis) {
        const Element x = m.algebra().monomial(bx.monomial);
        const Element y = m.algebra().monomial(by.monomial);
        const int s = -parity_sign((deg(x) + 1) * (deg(y) + 1));
        EXPECT_EQ(bracket(m, x, y), scale(s, bracket(m, y, x)));
      }
  }
}

TEST(Bracket, LeibnizInBothSlots) {
  for (const LoopModel& m : bv_models()) {
    const auto basis = m.algebra().basis_window(6);
    for (const auto& bx : basis)
      for (const auto& by : basis)
        for (const auto& bz : basis) {
          const Element x = m.algebra().monomial(bx.monomial);
          const Element y = m.algebra().monomial(by.monomial);
          const Element z = m.algebra().monomial(bz.monomial);
          const Element rhs = add(mul(bracket(m, x, y), z),
                                  scale(parity_sign((deg(x) + 1) * deg(y)),
                                        mul(y, bracket(m, x, z))));
          EXPECT_EQ(bracket(m, x, mul(y, z)), rhs);
        }
  }
}

TEST(Bracket, DegreeRaisedByOne) {
  for (const LoopModel& m : bv_models()) {
    const auto basis = m.algebra().basis_window(8);
    for (const auto& bx : basis)
      for (const auto& by : basis) {
        const Element x = m.algebra().monomial(bx.monomial);
        const Element y = m.algebra().monomial(by.monomial);
        const Element b = bracket(m, x, y);
        if (!b.is_zero()) {
          EXPECT_EQ(deg(b), deg(x) + deg(y) + 1);
        }
      }
  }
}

TEST(Delta, Examples) {
  const LoopModel toy = builtin::toy_bv0();
  EXPECT_TRUE(delta(toy, toy.algebra().one()).is_zero());
  EXPECT_TRUE(delta(toy, el(toy, "x*y")).is_zero());
  const LoopModel m = testmodels::exterior_poly();
  // Δ(e t^k) = -{e, t^k} = -k t^k
  EXPECT_EQ(delta(m, el(m, "e*t^2")), el(m, "-2*t^2"));
  EXPECT_TRUE(delta(m, el(m, "t^4")).is_zero());
}

TEST(Delta, SquaresToZeroAndRaisesDegree) {
  for (const LoopModel& m : bv_models())
    for (const auto& e : m.algebra().basis_window(12)) {
      const Element x = m.algebra().monomial(e.monomial);
      const Element dx = delta(m, x);
      EXPECT_TRUE(delta(m, dx).is_zero()) << format_element(x);
      if (!dx.is_zero()) {
        EXPECT_EQ(deg(dx), deg(x) + 1);
      }
    }
}

TEST(Delta, BvResidualVanishes) {
  std::mt19937_64 rng(19);
  for (const LoopModel& m : bv_models()) {
    const auto basis = m.algebra().basis_window(10);
    for (int trial = 0; trial < 200; ++trial) {
      const Element a = m.algebra().monomial(basis[rng() % basis.size()].monomial,
                                             Integer(static_cast<int>(rng() % 9) - 4));
      const Element b = add(m.algebra().monomial(basis[rng() % basis.size()].monomial),
                            m.algebra().monomial(basis[rng() % basis.size()].monomial, 2));
      if (a.is_zero()) continue;
      const int s = parity_sign(deg(a));
      Element r = delta(m, mul(a, b));
      r = subtract(r, mul(delta(m, a), b));
      r = subtract(r, scale(s, mul(a, delta(m, b))));
      r = subtract(r, scale(s, bracket(m, a, b)));
      EXPECT_TRUE(r.is_zero()) << format_element(a) << " ; " << format_element(b);
    }
  }
}

TEST(Delta, FactorwiseOnCoproductVanishes) {
  for (const LoopModel& m : bv_models())
    for (const auto& e : m.algebra().basis_window(12))
      EXPECT_TRUE(delta_factorwise(m, psi(m, m.algebra().monomial(e.monomial))).is_zero());
  const LoopModel toy = builtin::toy_bv0();
  EXPECT_FALSE(psi(toy, toy.algebra().one()).is_zero());
}

TEST(Bracket, TorsionWithConstantLoop) {
  for (const LoopModel& m : bv_models())
    for (const auto& e : m.algebra().basis_window(12)) {
      const Element x = m.algebra().monomial(e.monomial);
      if (deg(x) == -1 || (deg(x) == 0 && !m.simply_connected())) continue;
      EXPECT_TRUE(scale(m.euler(), bracket(m, m.c0(), x)).is_zero());
    }
}

TEST(Bracket, CoproductOfGeometricBracketVanishes) {
  for (const LoopModel& m : bv_models()) {
    const auto& alg = m.algebra();
    for (std::size_t g = 0; g < alg.size(); ++g) {
      if (!alg.generator_spec(g).geometric) continue;
      for (const auto& e : alg.basis_window(12))
        EXPECT_TRUE(psi(m, bracket(m, alg.generator(g), alg.monomial(e.monomial))).is_zero());
    }
  }
}

TEST(BvData, InconsistentDataRejected) {
  // {e, t} stored with the wrong degree
  EXPECT_THROW(parse_model(R"(dim = 1
euler = 0
generator e deg = -1
generator t deg = 2
c0 = e
bracket [e,t] = e
)"),
               ModelParseError);
  // delta without brackets
  EXPECT_THROW(parse_model(R"(dim = 1
euler = 0
generator e deg = -1
generator t deg = 2
c0 = e
delta t = 0
)"),
               ModelParseError);
}

TEST(BvData, CheckModeFlagsDeltaSquareFailure) {
  // Degrees are consistent, but Δ(Δ t) = Δ s = r != 0.
  const LoopModel m = parse_model(R"(dim = 1
euler = 0
generator e deg = -1
generator t deg = 2
generator s deg = 3
generator r deg = 4
c0 = e
delta e = 0
delta t = s
delta s = r
delta r = 0
bracket [e,e] = 0
bracket [e,t] = 0
bracket [e,s] = 0
bracket [e,r] = 0
bracket [t,t] = 0
bracket [t,s] = 0
bracket [t,r] = 0
bracket [s,s] = 0
bracket [s,r] = 0
bracket [r,r] = 0
)").model;
  const CheckReport report = run_checks(m, "inline", {6, 1, 20, 2000});
  const CheckResult* r = report.find(check_names::kDeltaSquare);
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->status, CheckStatus::Fail);
  EXPECT_EQ(r->witness.rfind("delta(delta(", 0), 0u) << r->witness;
  EXPECT_NE(r->witness.find("model is inconsistent"), std::string::npos) << r->witness;
  EXPECT_FALSE(report.passed());
}
