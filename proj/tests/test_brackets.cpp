#include <gtest/gtest.h>

#include "grc/brackets.hpp"

namespace grc {
namespace {

const SuperPoly t = SuperPoly::even_var();
const SuperPoly th = SuperPoly::odd_var();

ModVec single(Algebra a, const Rat& mu1, const Rat& mu2, TensorMonomial m, const Rat& c = 1) {
  ModVec v{a, mu1, mu2, {}};
  v.add(m, c);
  return v;
}

TEST(Brackets, SourceWeights) {
  EXPECT_EQ(source_weight(Algebra::contact, 3), -3);
  EXPECT_EQ(source_weight(Algebra::vect, 3), rat(-3, 2));
}

TEST(Brackets, DthetaPencilFormulas) {
  EXPECT_EQ(dtheta_pencil(1, 0).formula(), "Dth(f)*g");
  EXPECT_EQ(dtheta_pencil(0, 1).formula(), "(-1)^p(f)*f*Dth(g)");
  EXPECT_EQ(dtheta_pencil(2, -3).formula(), "-3*(-1)^p(f)*f*Dth(g) + 2*Dth(f)*g");
  EXPECT_EQ(dtheta_pencil(1, 1).lambda, 1);
  EXPECT_THROW(dtheta_pencil(0, 0), Error);
}

TEST(Brackets, DthetaPencilEvaluation) {
  Density r = apply_bracket(dtheta_pencil(1, 1), {t, 0}, {th, 0});
  EXPECT_EQ(r.coefficient, -t);
  EXPECT_EQ(r.weight, 1);
  for (const SuperPoly& g : {t, th, t * th, SuperPoly::one()})
    EXPECT_TRUE(apply_bracket(dtheta_pencil(1, 0), {SuperPoly::one(), 0}, {g, 0}).coefficient.is_zero());
  EXPECT_THROW(apply_bracket(dtheta_pencil(1, 0), {t, 1}, {th, 0}), Error);
}

TEST(Brackets, OrderZeroIsTheProduct) {
  BilinOp c = bracket_from_singular(single(Algebra::contact, rat(1, 3), 2, {{0, 0}, {0, 0}}));
  EXPECT_EQ(apply_bracket(c, {t, rat(-1, 3)}, {th, -2}).coefficient, t * th);
  EXPECT_TRUE(equivariance_report(c, Subalgebra::k11_full, 4).pass());
  BilinOp v = bracket_from_singular(single(Algebra::vect, rat(1, 3), 2, {{0, 0}, {0, 0}}));
  EXPECT_TRUE(equivariance_report(v, Subalgebra::vect11_full, 4).pass());
}

TEST(Brackets, DthetaPencilIsFullyInvariant) {
  auto r = equivariance_report(dtheta_pencil(rat(5, 7), 1), Subalgebra::k11_full, 6);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.checks, 0u);
}

TEST(Brackets, NegativeControlFails) {
  BilinOp b = bracket_from_vector(single(Algebra::contact, 0, 0, {{1, 0}, {0, 0}}), frozen_convention(Algebra::contact));
  auto r = equivariance_report(b, Subalgebra::osp12, 5);
  EXPECT_FALSE(r.pass());
  bool nabla = false;
  for (const auto& f : r.failures) nabla = nabla || f.generator == "K(t*th)";
  EXPECT_TRUE(nabla);
  EXPECT_TRUE(std::is_sorted(r.failures.begin(), r.failures.end()));
}

TEST(Brackets, NonSingularInputIsRejected) {
  EXPECT_THROW(bracket_from_singular(single(Algebra::contact, 0, 0, {{1, 0}, {0, 0}})), Error);
  EXPECT_THROW(equivariance_report(dtheta_pencil(1, 0), Subalgebra::pgl21, 5), Error);
  EXPECT_THROW(equivariance_report(dtheta_pencil(1, 0), Subalgebra::osp12, 2), Error);
}

TEST(Brackets, EvenContactBracketOfOrderTwo) {
  SingularSpace s = singular_space(Algebra::contact, rat(1, 3), rat(2, 5), 2);
  ASSERT_EQ(s.dim_even(), 1u);
  BilinOp b = bracket_from_singular(s.even_basis[0]);
  EXPECT_EQ(b.lambda, rat(1, 3) * -1 - rat(2, 5) + 2);
  EXPECT_TRUE(equivariance_report(b, Subalgebra::osp12, 6).pass());
}

TEST(Brackets, WeightCalibration) {
  for (unsigned level = 2; level <= 4; ++level) {
    SingularSpace s = singular_space(Algebra::contact, rat(1, 3), rat(2, 5), level);
    const auto& v = level % 2 ? s.odd_basis : s.even_basis;
    ASSERT_FALSE(v.empty());
    auto cal = calibrate_weights(bracket_from_singular(v[0]), level + 3);
    ASSERT_TRUE(cal.unique);
    EXPECT_EQ(cal.values, (std::vector<Rat>{rat(-1, 3), rat(-2, 5), rat(-11, 15) + level}));
  }
  auto pencil = calibrate_weights(dtheta_pencil(1, 1), 4);
  EXPECT_TRUE(pencil.consistent);
  EXPECT_FALSE(pencil.unique);
  EXPECT_EQ(pencil.free_directions, 1u);
  auto pinned = calibrate_weights(dtheta_pencil(1, 1), 4, std::pair{Rat(0), Rat(0)});
  ASSERT_TRUE(pinned.unique);
  EXPECT_EQ(pinned.values[2], 1);
}

TEST(Brackets, VectWeightCalibration) {
  SingularSpace s = singular_space(Algebra::vect, rat(1, 3), rat(2, 5), 2);
  ASSERT_FALSE(s.odd_basis.empty());
  BilinOp b = bracket_from_singular(s.odd_basis[0]);
  auto cal = calibrate_weights(b, 5);
  ASSERT_TRUE(cal.unique);
  EXPECT_EQ(cal.values[0], rat(-1, 6));
  EXPECT_EQ(cal.values[1], rat(-1, 5));
  EXPECT_EQ(cal.values[2], b.lambda);
  EXPECT_EQ(cal.values[3], b.chi2);
}

TEST(Brackets, ContactDualizationIsUniqueUpToSigns) {
  auto found = calibrate_dualization(Algebra::contact);
  EXPECT_EQ(found.size(), 4u);
  EXPECT_NE(std::find(found.begin(), found.end(), frozen_convention(Algebra::contact)), found.end());
  for (const auto& c : found) {
    EXPECT_TRUE(c.koszul);
    EXPECT_EQ(abs(c.beta11), rat(1, 2));
  }
}

TEST(Brackets, VectDualizationFixesKoszulAndOddScales) {
  auto found = calibrate_dualization(Algebra::vect);
  EXPECT_EQ(found.size(), 16u);
  EXPECT_NE(std::find(found.begin(), found.end(), frozen_convention(Algebra::vect)), found.end());
  for (const auto& c : found) {
    EXPECT_TRUE(c.koszul);
    EXPECT_EQ(c.beta10, c.beta01);
  }
}

TEST(Brackets, BijectionOnSmallCells) {
  for (auto [a, mu1, mu2, n] : {std::tuple{Algebra::vect, Rat(0), Rat(0), 2u}, std::tuple{Algebra::vect, Rat(2), Rat(0), 3u},
                                std::tuple{Algebra::contact, Rat(0), Rat(1), 3u}, std::tuple{Algebra::contact, Rat(1), Rat(1), 4u}}) {
    auto r = oracle_kernel_bijection(a, mu1, mu2, n, n + 4);
    EXPECT_TRUE(r.ok()) << algebra_name(a) << " " << to_string(mu1) << "," << to_string(mu2) << "," << n;
    EXPECT_GT(r.kernel_vectors, 0u);
    EXPECT_GT(r.complement_vectors, 0u);
  }
  // At mu = (0, 0) the whole odd level-1 space is singular, so there is no complement.
  auto full = oracle_kernel_bijection(Algebra::contact, 0, 0, 1, 5);
  EXPECT_TRUE(full.ok());
  EXPECT_EQ(full.kernel_vectors, 2u);
  EXPECT_EQ(full.complement_vectors, 0u);
}

TEST(Brackets, SubalgebraNames) {
  for (auto s : {Subalgebra::osp12, Subalgebra::pgl21, Subalgebra::k11_full, Subalgebra::vect11_full})
    EXPECT_EQ(parse_subalgebra(subalgebra_name(s)), s);
  EXPECT_THROW(parse_subalgebra("sl2"), Error);
}

}  // namespace
}  // namespace grc
