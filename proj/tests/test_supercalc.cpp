#include <gtest/gtest.h>

#include "grc/linalg.hpp"
#include "grc/supercalc.hpp"
#include "test_util.hpp"

namespace grc {
namespace {

using testing::random_parity;
using testing::random_poly;

constexpr int kTrials = 60;

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rat("6/4"), rat(3, 2));
  EXPECT_EQ(parse_rat("-2"), Rat(-2));
  EXPECT_EQ(parse_rat("+5/10"), rat(1, 2));
  EXPECT_EQ(to_string(parse_rat("-12/8")), "-3/2");
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "/3", "2/"}) EXPECT_THROW(parse_rat(bad), Error) << bad;
}

TEST(SuperPoly, Supercommutative) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < kTrials; ++k) {
    Parity pf = random_parity(rng), pg = random_parity(rng);
    SuperPoly f = random_poly(rng, 4, pf), g = random_poly(rng, 4, pg);
    EXPECT_EQ(f * g, Rat(koszul(pf, pg)) * (g * f));
  }
}

TEST(SuperPoly, OddVariableSquaresToZero) {
  EXPECT_TRUE((SuperPoly::odd_var() * SuperPoly::odd_var()).is_zero());
}

TEST(SuperPoly, Leibniz) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < kTrials; ++k) {
    Parity pf = random_parity(rng), pg = random_parity(rng);
    SuperPoly f = random_poly(rng, 4, pf), g = random_poly(rng, 4, pg);
    EXPECT_EQ(d_even(f * g), d_even(f) * g + f * d_even(g));
    EXPECT_EQ(d_odd(f * g), d_odd(f) * g + Rat(koszul(pf, Parity::odd)) * (f * d_odd(g)));
  }
}

TEST(SuperPoly, DescendingString) {
  SuperPoly p = SuperPoly::mono(2, 1) * Rat(3) - SuperPoly::one();
  EXPECT_EQ(p.str(Coords::contact), "3*t^2*th - 1");
  EXPECT_EQ(p.str(Coords::vect), "3*x^2*xi - 1");
}

TEST(Supercalc, DThetaSquaredIsMinusDt) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < kTrials; ++k) {
    SuperPoly f = random_poly(rng, 5, random_parity(rng));
    EXPECT_EQ(d_theta(d_theta(f)), -d_even(f));
  }
}

TEST(Supercalc, ContactBracketSkewAndJacobi) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < kTrials; ++k) {
    Parity pf = random_parity(rng), pg = random_parity(rng), ph = random_parity(rng);
    SuperPoly f = random_poly(rng, 3, pf), g = random_poly(rng, 3, pg), h = random_poly(rng, 3, ph);
    Rat s(koszul(pf, pg));
    EXPECT_EQ(contact_bracket(f, g), -s * contact_bracket(g, f));
    SuperPoly lhs = contact_bracket(f, contact_bracket(g, h));
    SuperPoly rhs = contact_bracket(contact_bracket(f, g), h) + s * contact_bracket(g, contact_bracket(f, h));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Supercalc, ContactFieldsRepresentTheBracket) {
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned i = 0; i <= 1; ++i)
      for (unsigned b = 0; b <= 3; ++b)
        for (unsigned j = 0; j <= 1; ++j) {
          if (a + b + i + j > 6) continue;
          SuperPoly f = SuperPoly::mono(a, i), g = SuperPoly::mono(b, j);
          EXPECT_EQ(vfield_bracket(contact_field(f), contact_field(g)), contact_field(contact_bracket(f, g)))
              << f.str(Coords::contact) << ", " << g.str(Coords::contact);
        }
}

TEST(Supercalc, ContactBracketOnGenerators) {
  SuperPoly t = SuperPoly::even_var(), th = SuperPoly::odd_var();
  SuperPoly one = SuperPoly::one();
  EXPECT_EQ(contact_bracket(th, th), one);
  EXPECT_EQ(contact_bracket(t * th, one), Rat(-2) * th);
  EXPECT_EQ(contact_bracket(t, one), Rat(-2) * one);
  EXPECT_TRUE(contact_bracket(t, t).is_zero());
}

TEST(Supercalc, SmallEvaluations) {
  SuperPoly t = SuperPoly::even_var(), th = SuperPoly::odd_var(), one = SuperPoly::one();
  EXPECT_EQ((t + th) * th, t * th);
  EXPECT_EQ((rat(2, 3) * t) * (rat(3, 2) * (t * th)), SuperPoly::mono(2, 1));
  EXPECT_EQ(apply_vfield(fields::d_even(), t * t), Rat(2) * t);
  // (xi delta)(x xi) = x xi: the odd derivation returns x, multiplied back by xi.
  EXPECT_EQ(apply_vfield(fields::monomial(0, 1, true), t * th), t * th);
  EXPECT_EQ(contact_field(th), (VField{th, one}));
  EXPECT_EQ(contact_field(t), (VField{Rat(2) * t, th}));
  EXPECT_EQ(contact_field(one), (VField{Rat(2) * one, {}}));
  EXPECT_EQ(apply_vfield(contact_field(th), th), one);
  EXPECT_EQ(d_theta(t), th);
  EXPECT_EQ(d_theta(d_theta(t)), -one);
  EXPECT_TRUE(d_theta(one).is_zero());
  Rat w = rat(-5, 3);
  EXPECT_EQ(lie_derivative(contact_field(t), Density{one, w}).coefficient, w * one);
  EXPECT_EQ(lie_derivative(fields::d_even(), Density{t, w}).coefficient, one);
  EXPECT_EQ(lie_derivative(fields::d_even(), w, one), SuperPoly());
  EXPECT_EQ(lie_derivative(fields::monomial(1, 0, false), Density{t, 0}).coefficient, t);
}

TEST(Supercalc, VectorFieldJacobi) {
  std::mt19937_64 rng(15);
  for (int k = 0; k < kTrials; ++k) {
    auto field = [&rng](Parity p) {
      return VField{random_poly(rng, 2, p), random_poly(rng, 2, p + Parity::odd)};
    };
    Parity px = random_parity(rng), py = random_parity(rng), pz = random_parity(rng);
    VField x = field(px), y = field(py), z = field(pz);
    VField lhs = vfield_bracket(x, vfield_bracket(y, z));
    VField rhs = vfield_bracket(vfield_bracket(x, y), z) + Rat(koszul(px, py)) * vfield_bracket(y, vfield_bracket(x, z));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Supercalc, LieDerivativeIsARepresentation) {
  std::mt19937_64 rng(16);
  for (int k = 0; k < kTrials; ++k) {
    Parity px = random_parity(rng), py = random_parity(rng);
    VField x{random_poly(rng, 2, px), random_poly(rng, 2, px + Parity::odd)};
    VField y{random_poly(rng, 2, py), random_poly(rng, 2, py + Parity::odd)};
    Rat w = rat(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    SuperPoly f = random_poly(rng, 3, random_parity(rng));
    SuperPoly lhs = lie_derivative(x, w, lie_derivative(y, w, f)) -
                    Rat(koszul(px, py)) * lie_derivative(y, w, lie_derivative(x, w, f));
    EXPECT_EQ(lhs, lie_derivative(vfield_bracket(x, y), w, f));
  }
}

TEST(Supercalc, DivergenceOfEulerFields) {
  EXPECT_EQ(divergence(fields::monomial(1, 0, false)), SuperPoly::one());
  EXPECT_EQ(divergence(fields::monomial(0, 1, true)), -SuperPoly::one());
}

TEST(Supercalc, MixedParityFieldIsRejected) {
  VField bad{SuperPoly::one(), SuperPoly::one()};
  EXPECT_FALSE(bad.parity().has_value());
  EXPECT_THROW(divergence(bad), Error);
}

TEST(Linalg, NullspaceIsExact) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 30; ++k) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = (rng() % 3 == 0) ? Rat(0) : rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 2));
    auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), cols);
    for (const auto& v : ns)
      for (const auto& y : m.apply(v)) EXPECT_EQ(y, 0);
    EXPECT_EQ(span_rank(ns), ns.size());
  }
}

TEST(Linalg, SpanPredicates) {
  std::vector<RatVec> a{{1, 0, 1}, {0, 1, 1}}, b{{1, 1, 2}, {1, -1, 0}};
  EXPECT_TRUE(same_span(a, b));
  EXPECT_TRUE(in_span({2, 3, 5}, a));
  EXPECT_FALSE(in_span({0, 0, 1}, a));
}

}  // namespace
}  // namespace grc
