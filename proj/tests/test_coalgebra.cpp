#include <gtest/gtest.h>

#include <random>

#include "test_models.hpp"

using namespace loopcalc;
using testmodels::el;

namespace {

TensorElement t2(const Element& x, const Element& y) { return tensor({x, y}); }

std::vector<LoopModel> builtins_with_euler() {
  return {builtin::sphere(2), builtin::sphere(4), builtin::sphere(6), builtin::cpn(1),
          builtin::cpn(2),    builtin::cpn(3),    builtin::cpn(4),    builtin::toy_bv0()};
}

}  // namespace

// ---------------------------------------------------------------------------
// tensor / tensor_add / tensor_scale

TEST(Tensor, Examples) {
  const LoopModel s4 = builtin::sphere(4);
  const auto& alg = s4.algebra();
  const Element one = alg.one(), a = el(s4, "a");
  EXPECT_EQ(format_tensor(t2(one, one)), "(1 (x) 1)");
  EXPECT_TRUE(t2(a, alg.zero()).is_zero());
  EXPECT_EQ(tensor_add(t2(a, a), t2(a, a)), tensor_scale(2, t2(a, a)));
  EXPECT_EQ(format_tensor(tensor_add(t2(a, a), t2(a, a))), "2*(a (x) a)");
  EXPECT_THROW(tensor({}), std::invalid_argument);
  EXPECT_THROW(tensor({a, builtin::sphere(4).algebra().one()}), std::invalid_argument);
}

TEST(Tensor, Multilinear) {
  const LoopModel cp2 = builtin::cpn(2);
  const Element x = el(cp2, "c + 3*u"), y = el(cp2, "w - 2*c^2"), z = el(cp2, "u^2");
  EXPECT_EQ(t2(add(x, y), z), tensor_add(t2(x, z), t2(y, z)));
  EXPECT_EQ(t2(scale(5, x), z), tensor_scale(5, t2(x, z)));
}

TEST(Tensor, TorsionOfTensorFactors) {
  // Z/3 ⊗ Z/2 = 0 and Z/3 ⊗ Z = Z/3.
  const LoopModel cp2 = builtin::cpn(2);
  const LoopModel s4 = builtin::sphere(4);
  EXPECT_TRUE(tensor_scale(3, t2(el(cp2, "c^2*u"), el(cp2, "1"))).is_zero());
  EXPECT_FALSE(tensor_scale(2, t2(el(cp2, "c^2*u"), el(cp2, "1"))).is_zero());
  EXPECT_TRUE(t2(el(s4, "a*v"), el(s4, "a*v^2")).terms().size() == 1);
}

TEST(Tensor, ArityOneConvertsToElement) {
  const LoopModel s4 = builtin::sphere(4);
  const Element x = el(s4, "b*v - 4*v^2 + 2");
  EXPECT_EQ(to_element(to_tensor(x)), x);
  EXPECT_THROW(to_element(t2(x, x)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// twist

TEST(Twist, Examples) {
  const LoopModel s4 = builtin::sphere(4);
  const Element a = el(s4, "a");
  EXPECT_EQ(twist(t2(a, a)), t2(a, a));
  auto alg = testmodels::two_odd();
  const Element x = alg->generator("x"), y = alg->generator("y");
  EXPECT_EQ(twist(t2(x, y)), tensor_scale(-1, t2(y, x)));
  const TensorElement t = tensor_add(t2(x, y), tensor_scale(3, t2(alg->one(), x)));
  EXPECT_EQ(twist(twist(t)), t);
  EXPECT_THROW(twist(tensor({x})), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// contract

TEST(Contract, Examples) {
  for (int n : {2, 4}) {
    const LoopModel s = builtin::sphere(n);
    const Element a = el(s, "a");
    EXPECT_TRUE(contract(t2(a, a), 1).is_zero());
    const Element x = el(s, "b + v^2");
    EXPECT_EQ(to_element(contract(t2(s.algebra().one(), x), 1)), x);
  }
  for (int n : {1, 2, 3}) {
    const LoopModel cp = builtin::cpn(n);
    EXPECT_TRUE(contract(t2(cp.c0(), cp.c0()), 1).is_zero());
  }
  const LoopModel s4 = builtin::sphere(4);
  const Element a = el(s4, "a");
  EXPECT_THROW(contract(t2(a, a), 2), std::out_of_range);
  EXPECT_THROW(contract(t2(a, a), 0), std::out_of_range);
}

TEST(Contract, MatchesMul) {
  const LoopModel cp3 = builtin::cpn(3);
  const Element x = el(cp3, "c + w*u"), y = el(cp3, "2*u + c^2");
  EXPECT_EQ(to_element(contract(t2(x, y), 1)), mul(x, y));
}

// ---------------------------------------------------------------------------
// psi

TEST(Psi, UnitOnSpheres) {
  for (int n : {2, 4, 6}) {
    const LoopModel s = builtin::sphere(n);
    const Element a = el(s, "a");
    EXPECT_EQ(psi(s, s.algebra().one()), tensor_scale(2, t2(a, a)));
    EXPECT_TRUE(psi(s, el(s, "v")).is_zero());
    EXPECT_TRUE(psi(s, el(s, "b")).is_zero());
  }
}

TEST(Psi, UnitOnProjectiveSpaces) {
  for (int n = 1; n <= 4; ++n) {
    const LoopModel cp = builtin::cpn(n);
    const Element cn = power(el(cp, "c"), static_cast<std::uint64_t>(n));
    EXPECT_EQ(psi(cp, cp.algebra().one()), tensor_scale(n + 1, t2(cn, cn)));
  }
}

TEST(Psi, FormsAgreeAndSymmetric) {
  for (const LoopModel& m : builtins_with_euler())
    for (const auto& e : m.algebra().basis_window(12)) {
      const Element x = m.algebra().monomial(e.monomial);
      EXPECT_EQ(psi(m, x), psi_mirror(m, x));
      EXPECT_EQ(twist(psi(m, x)), psi(m, x));
    }
}

TEST(Psi, ConcentratedInDegreeZero) {
  for (const LoopModel& m : builtins_with_euler()) {
    const TensorElement base = t2(m.c0(), m.c0());
    for (const auto& e : m.algebra().basis_window(12)) {
      const Element x = m.algebra().monomial(e.monomial);
      const TensorElement t = psi(m, x);
      if (m.algebra().degree(e.monomial) != 0) {
        EXPECT_TRUE(t.is_zero());
        continue;
      }
      ASSERT_FALSE(base.is_zero());
      bool found = t.is_zero();
      for (int k = -20; k <= 20 && !found; ++k) found = tensor_scale(k, base) == t;
      EXPECT_TRUE(found) << format_tensor(t);
    }
  }
}

TEST(Psi, UnitPlusDecomposable) {
  const LoopModel cp2 = builtin::cpn(2);
  const Element c2 = el(cp2, "c^2");
  for (int k = -4; k <= 4; ++k) {
    const Element x = add(cp2.algebra().constant(k), el(cp2, "c^2*u"));
    EXPECT_EQ(psi(cp2, x), tensor_scale(k * 3, t2(c2, c2)));
  }
}

TEST(Psi, InhomogeneousIsLinear) {
  const LoopModel s4 = builtin::sphere(4);
  const Element x = el(s4, "3 + v"), y = el(s4, "b - 1");
  EXPECT_EQ(psi(s4, add(x, y)), tensor_add(psi(s4, x), psi(s4, y)));
  EXPECT_EQ(psi(s4, x), tensor_scale(6, t2(el(s4, "a"), el(s4, "a"))));
}

TEST(Psi, ZeroEulerVanishes) {
  for (const LoopModel& m : {builtin::sphere(3), builtin::sphere(5), testmodels::torus_like()})
    for (const auto& e : m.algebra().basis_window(12))
      EXPECT_TRUE(psi(m, m.algebra().monomial(e.monomial)).is_zero());
}

// ---------------------------------------------------------------------------
// psi_split

TEST(PsiSplit, Examples) {
  const LoopModel s4 = builtin::sphere(4);
  const Element a = el(s4, "a");
  EXPECT_EQ(psi_split(s4, {}, 0), tensor_scale(2, t2(a, a)));
  EXPECT_TRUE(psi_split(s4, {el(s4, "v")}, 0).is_zero());
  EXPECT_TRUE(psi_split(s4, {el(s4, "v")}, 1).is_zero());
  EXPECT_THROW(psi_split(s4, {el(s4, "v")}, 2), std::out_of_range);

  const LoopModel cp2 = builtin::cpn(2);
  const Element one = cp2.algebra().one(), c2 = el(cp2, "c^2");
  for (std::size_t ell = 0; ell <= 2; ++ell) {
    EXPECT_TRUE(psi_split(cp2, {one, el(cp2, "c^2*u")}, ell).is_zero());
    EXPECT_EQ(psi_split(cp2, {one, one}, ell), tensor_scale(3, t2(c2, c2)));
  }
}

TEST(PsiSplit, IndependentOfSplitPoint) {
  std::mt19937_64 rng(11);
  for (const LoopModel& m : builtins_with_euler()) {
    const auto basis = m.algebra().basis_window(12);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Element> factors;
      const std::size_t p = rng() % 5;
      for (std::size_t i = 0; i < p; ++i) {
        const auto& e = basis[rng() % basis.size()];
        factors.push_back(m.algebra().monomial(e.monomial, Integer(static_cast<int>(rng() % 7) - 3)));
      }
      const TensorElement ref = psi(m, product_of(m, factors, 0, p));
      for (std::size_t ell = 0; ell <= p; ++ell) EXPECT_EQ(psi_split(m, factors, ell), ref);
    }
  }
}

// ---------------------------------------------------------------------------
// Frobenius compatibility and coassociativity

TEST(Frobenius, ActionsAgree) {
  for (const LoopModel& m : builtins_with_euler()) {
    const auto basis = m.algebra().basis_window(10);
    for (const auto& x : basis)
      for (const auto& y : basis) {
        const Element a = m.algebra().monomial(x.monomial), b = m.algebra().monomial(y.monomial);
        const TensorElement whole = psi(m, mul(a, b));
        EXPECT_EQ(left_action(a, psi(m, b)), whole);
        EXPECT_EQ(right_action(psi(m, a), b), whole);
      }
  }
}

TEST(Coassociativity, BothSidesVanish) {
  for (const LoopModel& m : builtins_with_euler())
    for (const auto& e : m.algebra().basis_window(12)) {
      const TensorElement t = psi(m, m.algebra().monomial(e.monomial));
      const TensorElement left = psi_at(m, t, 1), right = psi_at(m, t, 2);
      EXPECT_EQ(left, right);
      EXPECT_TRUE(left.is_zero());
      EXPECT_EQ(left.arity(), 3u);
    }
}
