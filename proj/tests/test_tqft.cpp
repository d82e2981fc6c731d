#include <gtest/gtest.h>

#include <random>

#include "test_models.hpp"

using namespace loopcalc;
using testmodels::el;

namespace {

Surface S(std::int64_t g, std::int64_t p, std::int64_t q) { return Surface::make(g, p, q); }

std::vector<TensorElement> basis_inputs(const LoopModel& m, std::int64_t p,
                                        std::int64_t window, std::mt19937_64& rng,
                                        std::size_t samples = 60) {
  const auto basis = m.algebra().basis_window(window);
  std::vector<TensorElement> out;
  if (p == 1) {
    for (const auto& e : basis) out.push_back(to_tensor(m.algebra().monomial(e.monomial)));
    return out;
  }
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<Element> xs;
    for (std::int64_t i = 0; i < p; ++i)
      xs.push_back(m.algebra().monomial(basis[rng() % basis.size()].monomial));
    out.push_back(tensor(xs));
  }
  return out;
}

}  // namespace

TEST(Surface, EulerChar) {
  EXPECT_EQ(euler_char(S(0, 2, 1)), -1);
  EXPECT_EQ(euler_char(S(1, 1, 1)), -2);
  EXPECT_EQ(euler_char(S(0, 1, 3)), -2);
}

TEST(Surface, RejectsBadParameters) {
  EXPECT_THROW(S(0, 1, 0), std::invalid_argument);
  EXPECT_THROW(S(-1, 1, 1), std::invalid_argument);
  EXPECT_THROW(S(0, -1, 1), std::invalid_argument);
}

TEST(Sew, Examples) {
  EXPECT_EQ(sew(S(0, 2, 1), S(0, 1, 2)), S(0, 2, 2));
  EXPECT_EQ(sew(S(0, 1, 2), S(0, 2, 1)), S(1, 1, 1));
  EXPECT_EQ(sew(S(1, 1, 1), S(1, 1, 1)), S(2, 1, 1));
  EXPECT_THROW(sew(S(0, 1, 2), S(0, 3, 1)), std::invalid_argument);
}

TEST(Sew, EulerAdditivityAndGenus) {
  for (std::int64_t g1 = 0; g1 <= 3; ++g1)
    for (std::int64_t g2 = 0; g2 <= 3; ++g2)
      for (std::int64_t p = 0; p <= 3; ++p)
        for (std::int64_t m = 1; m <= 4; ++m)
          for (std::int64_t q = 1; q <= 3; ++q) {
            const Surface s = sew(S(g1, p, m), S(g2, m, q));
            EXPECT_EQ(euler_char(s), euler_char(S(g1, p, m)) + euler_char(S(g2, m, q)));
            EXPECT_EQ(s.genus, g1 + g2 + m - 1);
            if (g1 + g2 > 0) {
              EXPECT_EQ(vanishing_certificate(s), Vanishing::GenusAtLeastOne);
            }
          }
}

TEST(VanishingCertificate, Examples) {
  EXPECT_EQ(vanishing_certificate(S(2, 3, 1)), Vanishing::GenusAtLeastOne);
  EXPECT_EQ(vanishing_certificate(S(0, 1, 4)), Vanishing::ThreeOrMoreOutputs);
  EXPECT_EQ(vanishing_certificate(S(0, 3, 2)), Vanishing::NotAPriori);
  EXPECT_STREQ(to_string(Vanishing::NotAPriori), "NotAPriori");
}

TEST(StringOperation, Examples) {
  const LoopModel s4 = builtin::sphere(4);
  const Element a = el(s4, "a"), v = el(s4, "v");
  EXPECT_EQ(string_operation(s4, S(0, 2, 1), tensor({a, v})), to_tensor(el(s4, "a*v")));
  for (const auto& e : s4.algebra().basis_window(12)) {
    const TensorElement x = to_tensor(s4.algebra().monomial(e.monomial));
    EXPECT_TRUE(string_operation(s4, S(1, 1, 1), x).is_zero());
    EXPECT_TRUE(string_operation(s4, S(0, 1, 3), x).is_zero());
    EXPECT_EQ(string_operation(s4, S(0, 1, 1), x), x);
  }
  for (int n : {2, 4, 6}) {
    const LoopModel s = builtin::sphere(n);
    EXPECT_EQ(string_operation(s, S(0, 1, 2), to_tensor(s.algebra().one())),
              tensor_scale(2, tensor({el(s, "a"), el(s, "a")})));
  }
}

TEST(StringOperation, Errors) {
  const LoopModel s4 = builtin::sphere(4);
  const Element a = el(s4, "a");
  EXPECT_THROW(string_operation(s4, S(0, 2, 1), to_tensor(a)), std::invalid_argument);
  EXPECT_THROW(string_operation(s4, S(0, 0, 1), to_tensor(a)), std::invalid_argument);
  EXPECT_THROW(string_operation(builtin::sphere(4), S(0, 1, 1), to_tensor(a)),
               std::invalid_argument);
}

TEST(StringOperation, ClosedFormMatchesPants) {
  std::mt19937_64 rng(3);
  for (const LoopModel& m : {builtin::sphere(4), builtin::cpn(2), builtin::sphere(3),
                             builtin::toy_bv0()})
    for (std::int64_t g = 0; g <= 2; ++g)
      for (std::int64_t p = 1; p <= 3; ++p)
        for (std::int64_t q = 1; q <= 3; ++q)
          for (const auto& x : basis_inputs(m, p, 12, rng))
            EXPECT_EQ(string_operation(m, S(g, p, q), x),
                      string_operation_by_pants(m, S(g, p, q), x))
                << S(g, p, q) << " on " << format_tensor(x);
}

TEST(StringOperation, PantsPathVanishesWhenPredicted) {
  std::mt19937_64 rng(5);
  for (const LoopModel& m : {builtin::sphere(4), builtin::cpn(2)})
    for (std::int64_t g = 0; g <= 3; ++g)
      for (std::int64_t p = 1; p <= 3; ++p)
        for (std::int64_t q = 1; q <= 4; ++q) {
          if (g == 0 && q <= 2) continue;
          for (const auto& x : basis_inputs(m, p, 12, rng, 20))
            EXPECT_TRUE(string_operation_by_pants(m, S(g, p, q), x).is_zero());
        }
}

TEST(StringOperation, Functoriality) {
  std::mt19937_64 rng(13);
  for (const LoopModel& m : {builtin::sphere(4), builtin::cpn(2), builtin::cpn(3)}) {
    const auto basis = m.algebra().basis_window(12);
    for (int trial = 0; trial < 100; ++trial) {
      const Surface s1 = S(rng() % 3, 1 + rng() % 3, 1 + rng() % 3);
      const Surface s2 = S(rng() % 3, s1.outputs, 1 + rng() % 3);
      std::vector<Element> xs;
      for (std::int64_t i = 0; i < s1.inputs; ++i)
        xs.push_back(m.algebra().monomial(basis[rng() % basis.size()].monomial));
      const TensorElement x = tensor(xs);
      EXPECT_EQ(string_operation(m, s2, string_operation(m, s1, x)),
                string_operation(m, sew(s1, s2), x));
    }
  }
}

TEST(StringOperation, DegreeShift) {
  std::mt19937_64 rng(17);
  for (const LoopModel& m : {builtin::sphere(4), builtin::cpn(2), builtin::cpn(4)})
    for (std::int64_t p = 1; p <= 3; ++p)
      for (std::int64_t q = 1; q <= 2; ++q)
        for (const auto& x : basis_inputs(m, p, 12, rng)) {
          const Surface s = S(0, p, q);
          const TensorElement y = string_operation(m, s, x);
          if (y.is_zero()) continue;
          const auto in_h = degree_of(x).value + p * m.dim();
          const auto out_h = degree_of(y).value + q * m.dim();
          EXPECT_EQ(out_h, in_h + euler_char(s) * m.dim());
        }
}
