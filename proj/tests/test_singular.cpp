#include <gtest/gtest.h>

#include "grc/singular.hpp"

namespace grc {
namespace {

Rat coeff(const CoefficientFamily& f, const std::string& name) {
  for (const auto& [k, c] : f.coefficients)
    if (k == name) return c;
  throw Error("no coefficient " + name);
}

struct DimCase {
  Algebra algebra;
  Rat mu1;
  Rat mu2;
  unsigned n;
  std::size_t even;
  std::size_t odd;
};

class SingularDims : public ::testing::TestWithParam<DimCase> {};

TEST_P(SingularDims, KernelDimensions) {
  const auto& c = GetParam();
  SingularSpace s = singular_space(c.algebra, c.mu1, c.mu2, c.n);
  EXPECT_EQ(s.dim_even(), c.even);
  EXPECT_EQ(s.dim_odd(), c.odd);
}

INSTANTIATE_TEST_SUITE_P(
    Frozen, SingularDims,
    ::testing::Values(DimCase{Algebra::vect, 0, 0, 2, 1, 1}, DimCase{Algebra::vect, 0, 0, 1, 0, 2},
                      DimCase{Algebra::vect, rat(1, 3), 5, 3, 0, 1}, DimCase{Algebra::vect, 2, 2, 3, 0, 2},
                      DimCase{Algebra::vect, rat(1, 2), 7, 4, 0, 1}, DimCase{Algebra::contact, 0, 0, 1, 0, 2},
                      DimCase{Algebra::contact, rat(5, 3), rat(-2, 7), 0, 1, 0},
                      DimCase{Algebra::contact, rat(5, 3), rat(-2, 7), 4, 1, 0},
                      // corrected exceptional locus: mu2 = n-1-i, mu1 = j+1 with i <= j
                      DimCase{Algebra::contact, 1, 1, 4, 2, 0}, DimCase{Algebra::contact, 2, 1, 6, 2, 0}));

TEST(Singular, BasisVectorsAreAnnihilatedAndHomogeneous) {
  for (Algebra a : {Algebra::vect, Algebra::contact})
    for (Rat mu1 : {Rat(0), Rat(1), rat(1, 2), Rat(2)})
      for (Rat mu2 : {Rat(0), Rat(2), rat(-3, 2)})
        for (unsigned n = 0; n <= 4; ++n) {
          SingularSpace s = singular_space(a, mu1, mu2, n);
          for (auto p : {Parity::even, Parity::odd})
            for (const auto& v : s.basis(p)) {
              EXPECT_TRUE(annihilated(v, classification_raisers(a)));
              EXPECT_EQ(v.homogeneity(), (std::pair<unsigned, Parity>{n, p}));
            }
        }
}

TEST(Singular, VectKernelIsAlsoKilledBySx) {
  for (Rat mu1 : {Rat(0), Rat(2), rat(1, 3)})
    for (Rat mu2 : {Rat(0), Rat(4), Rat(-1)})
      for (unsigned n = 1; n <= 5; ++n) {
        SingularSpace s = singular_space(Algebra::vect, mu1, mu2, n);
        for (auto p : {Parity::even, Parity::odd})
          for (const auto& v : s.basis(p)) EXPECT_TRUE(raise(RaiserId::s_x, v).is_zero());
      }
}

TEST(Singular, EmptyConstraintGivesIdentityKernel) {
  EXPECT_EQ(rational_kernel(RatMatrix(0, 3)).size(), 3u);
  RatMatrix z(2, 4);
  EXPECT_EQ(rational_kernel(z).size(), 4u);
}

TEST(Singular, BidiagonalKernel) {
  RatMatrix m(3, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, i) = Rat(static_cast<long>(i) + 1);
    m(i, i + 1) = Rat(-2);
  }
  EXPECT_EQ(rational_kernel(m).size(), 1u);
}

TEST(Singular, VectReducedSystem) {
  EXPECT_EQ(vect_bc_reduced_kernel(0, 0, 1).size(), 2u);
  EXPECT_EQ(vect_bc_reduced_kernel(5, 7, 2).size(), 1u);
  RatMatrix m = vect_bc_reduced_matrix(0, 0, 1);
  EXPECT_EQ(m(0, 0), 0);
  EXPECT_EQ(m(0, 1), 0);
}

TEST(Singular, VectClosedForms) {
  auto gen = closed_form_vect(5, 7, 1, Parity::odd);
  ASSERT_EQ(gen.size(), 1u);
  EXPECT_EQ(coeff(gen[0], "b0"), 5);
  EXPECT_EQ(coeff(gen[0], "b1"), -7);
  EXPECT_EQ(vect_a(7, 1, 0) * coeff(gen[0], "b0") + vect_b(5, 0) * coeff(gen[0], "b1"), 0);

  auto even = closed_form_vect(2, 0, 3, Parity::even);
  ASSERT_EQ(even.size(), 1u);
  EXPECT_EQ(even[0].parameter, "D1");
  for (const auto& [k, c] : even[0].coefficients) EXPECT_EQ(c, k == "D1" ? 1 : 0) << k;

  auto two = closed_form_vect(0, 2, 2, Parity::odd);
  EXPECT_EQ(two.size(), 2u);
}

TEST(Singular, VectClosedFormsMatchKernelOnSmallGrid) {
  for (Rat mu1 : {Rat(-1), Rat(0), rat(1, 2), Rat(2), Rat(4)})
    for (Rat mu2 : {Rat(0), Rat(1), Rat(2), Rat(6)})
      for (unsigned n = 1; n <= 4; ++n) {
        ComparisonReport r = compare_closed_vs_kernel(Algebra::vect, mu1, mu2, n);
        EXPECT_TRUE(r.all_match()) << to_string(mu1) << "," << to_string(mu2) << "," << n;
        EXPECT_EQ(r.closed_status(), ClosedStatus::pass);
      }
}

TEST(Singular, Predictions) {
  EXPECT_EQ(predict_dimension(Algebra::vect, 0, 0, 2), (Prediction{1, 1, "vect-i"}));
  EXPECT_EQ(predict_dimension(Algebra::vect, 2, 2, 3), (Prediction{0, 2, "vect-ii"}));
  EXPECT_EQ(predict_dimension(Algebra::vect, rat(1, 2), 7, 4), (Prediction{0, 1, "vect-iii"}));
  EXPECT_EQ(predict_dimension(Algebra::contact, 1, 6, 2), (Prediction{2, 0, "even-exceptional"}));
  EXPECT_EQ(predict_dimension(Algebra::contact, 2, 12, 4), (Prediction{2, 0, "even-exceptional"}));
  EXPECT_EQ(predict_dimension(Algebra::contact, 2, 9, 2), (Prediction{1, 0, "even-generic"}));
  EXPECT_EQ(predict_dimension(Algebra::contact, 1, 5, 5), (Prediction{0, 0, "odd-1"}));
  EXPECT_EQ(predict_dimension(Algebra::contact, 2, 5, 5), (Prediction{0, 1, "odd-1"}));
}

TEST(Singular, ContactLiteralFamilyScaling) {
  auto fs = closed_form_contact(2, 0, 1, Parity::even);
  ASSERT_EQ(fs.size(), 1u);
  // e1 = 6 gives e0 = 1, c0 = 1, c1 = 3.
  EXPECT_EQ(6 * coeff(fs[0], "e0"), 1);
  EXPECT_EQ(6 * coeff(fs[0], "c0"), 1);
  EXPECT_EQ(6 * coeff(fs[0], "c1"), 3);
}

TEST(Singular, ContactOddLiteralFamilies) {
  auto one = closed_form_contact(1, 0, 1, Parity::odd);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].label, "odd-1");
  EXPECT_EQ(one[0].parameter, "a1");
  auto three = closed_form_contact(0, 1, 2, Parity::odd);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0].label, "odd-3");
}

TEST(Singular, CorrectedContactFamiliesSpanKernel) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (unsigned level = 0; level <= 8; ++level) {
        Parity p = level % 2 ? Parity::odd : Parity::even;
        SingularSpace s = singular_space(Algebra::contact, a, b, level);
        auto fams = corrected_contact(a, b, level / 2, p);
        std::vector<ModVec> vs;
        for (const auto& f : fams) {
          EXPECT_TRUE(annihilated(f.vector, {RaiserId::nabla_plus}));
          vs.push_back(f.vector);
        }
        auto basis = level_basis(Algebra::contact, level, p);
        EXPECT_TRUE(same_span(coordinates(vs, basis), coordinates(s.basis(p), basis)))
            << a << "," << b << "," << level;
      }
}

TEST(Singular, DisplayChecks) {
  auto checks = nabla_display_checks(8, default_display_weights());
  std::map<std::string, bool> got;
  for (const auto& d : checks) got[d.id] = d.matches;
  EXPECT_TRUE(got.at("nabla-1"));
  EXPECT_FALSE(got.at("nabla-2-standalone"));
  EXPECT_FALSE(got.at("nabla-2-expanded"));
  EXPECT_TRUE(got.at("nabla-3"));
  EXPECT_TRUE(got.at("nabla-4"));
  EXPECT_TRUE(got.at("nabla-2-straightened"));
  for (const auto& d : checks) {
    if (!d.matches) {
      EXPECT_EQ(d.corrected, "-mu2+(n-i-1)");
    }
  }
}

TEST(Singular, ContactNablaOnLowLevels) {
  Rat mu1 = rat(3, 4), mu2 = rat(-5, 2);
  TensorModule t(Algebra::contact, mu1, mu2);
  ModVec mu1_u{Algebra::contact, mu1, mu2, {}};
  mu1_u.add({{0, 0}, {0, 0}}, mu1);
  EXPECT_EQ(t.raise(RaiserId::nabla_plus, t.basis_vector({{0, 1}, {0, 0}})), mu1_u);
  ModVec kth{Algebra::contact, mu1, mu2, {}};
  kth.add({{0, 1}, {0, 0}}, -2);
  EXPECT_EQ(t.raise(RaiserId::nabla_plus, t.basis_vector({{1, 0}, {0, 0}})), kth);
}

TEST(Singular, ComparisonReportsContactDisagreement) {
  ComparisonReport r = compare_closed_vs_kernel(Algebra::contact, 2, 0, 2);
  EXPECT_TRUE(r.even.dims_match());
  EXPECT_FALSE(r.all_match());
  EXPECT_EQ(r.closed_status(), ClosedStatus::fail);
}

TEST(Singular, ClosedStatusNames) {
  for (auto s : {ClosedStatus::pass, ClosedStatus::fail, ClosedStatus::not_applicable})
    EXPECT_EQ(parse_closed_status(closed_status_name(s)), s);
  EXPECT_THROW(parse_closed_status("maybe"), Error);
}

}  // namespace
}  // namespace grc
