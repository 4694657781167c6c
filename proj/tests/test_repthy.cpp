#include <gtest/gtest.h>

#include "deltatab/acceptance.hpp"
#include "deltatab/repthy.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace deltatab;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Matrix zero_like(const Matrix& a) { return Matrix(a.size(), std::vector<long long>(a.size(), 0)); }

std::vector<oracle::Q> rational_points(const std::vector<Rational>& z) { return {z.begin(), z.end()}; }

}  // namespace

TEST(Representation, DimensionsAndHighestWeight) {
  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k <= 4; ++k) {
      const auto s = build_rep(RepKind::sym, k, m);
      EXPECT_EQ(s.dim, binomial(m + k - 1, k));
      EXPECT_EQ(s.weight_of_basis.front(), sigma(k, m));
      EXPECT_EQ(s.highest_weight(), sigma(k, m));
      if (k <= m) {
        const auto a = build_rep(RepKind::alt, k, m);
        EXPECT_EQ(a.dim, binomial(m, k));
        EXPECT_EQ(a.weight_of_basis.front(), omega(k, m));
      }
    }
  EXPECT_THROW(build_rep(RepKind::alt, 4, 3), std::out_of_range);
  EXPECT_THROW(build_rep(RepKind::sym, 1, 0), std::invalid_argument);
}

TEST(Representation, ChevalleyRelations) {
  for (int m = 2; m <= 4; ++m)
    for (RepKind kind : {RepKind::sym, RepKind::alt})
      for (int k = 0; k <= (kind == RepKind::sym ? 3 : m); ++k) {
        const auto r = build_rep(kind, k, m);
        for (int i = 0; i + 1 < m; ++i) {
          EXPECT_EQ(commutator(r.e[i], r.f[i]), r.h[i]);
          for (int j = 0; j + 1 < m; ++j) {
            if (i != j) {
              EXPECT_EQ(commutator(r.e[i], r.f[j]), zero_like(r.h[i]));
            }
            // [h_i, e_j] = a_ij e_j with the Cartan matrix of sl_m
            const int a = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            Matrix scaled = r.e[j];
            for (auto& row : scaled)
              for (auto& x : row) x *= a;
            EXPECT_EQ(commutator(r.h[i], r.e[j]), scaled);
          }
        }
        // the top basis vector is killed by every raising operator
        for (int i = 0; i + 1 < m; ++i)
          for (int row = 0; row < r.dim; ++row) EXPECT_EQ(r.e[i][row][0], 0);
      }
}

TEST(Representation, RhoPairingOfTheExamples) {
  EXPECT_EQ(rho_pairing(sym_alt_weights(acceptance::example1_delta(), acceptance::example1_gamma(), 3), 3), 9);
  EXPECT_EQ(rho_pairing(sym_alt_weights(acceptance::example2_delta(), acceptance::example2_gamma(), 4), 4),
            acceptance::kExample2Shift);
  EXPECT_THROW(rho_pairing({omega(1, 2)}, 2), std::domain_error);
}

TEST(Representation, WeightMultiplicitiesSumToTheDimension) {
  auto rng = gen::engine();
  for (int t = 0; t < 50; ++t) {
    const auto in = gen::instance(rng, 4, 4, 10, 200);
    long long dim = 1, sum = 0;
    for (std::size_t j = 0; j < in.delta.size(); ++j) dim *= letter_rep(in.delta[j], in.gamma[j], in.m).dim;
    for (const auto& [w, c] : tensor_weight_multiplicities(sym_alt_weights(in.delta, in.gamma, in.m), in.m)) sum += c;
    EXPECT_EQ(sum, dim);
  }
}

TEST(InvariantDimension, ChainCountAgreesWithWeylFormula) {
  auto rng = gen::engine();
  for (int t = 0; t < 200; ++t) {
    const auto in = gen::instance(rng, 4, 6, 16, 200);
    EXPECT_EQ(invariant_dimension(in.delta, in.gamma, in.m), in.count);
    EXPECT_EQ(weyl_invariant_dimension(in.delta, in.gamma, in.m), in.count);
    const GlWeight mu(static_cast<std::size_t>(in.m), total(in.gamma) / in.m);
    EXPECT_EQ(pieri_tensor_chain(sym_alt_weights(in.delta, in.gamma, in.m), mu, in.m), in.count);
  }
  EXPECT_EQ(invariant_dimension(acceptance::example2_delta(), acceptance::example2_gamma(), 4), 24);
  EXPECT_EQ(weyl_invariant_dimension(OrientationString::parse("hv"), {1, 2}, 2), 0);
  EXPECT_THROW(invariant_dimension(OrientationString::parse("h"), {1}, 0), std::invalid_argument);
}

TEST(Fusion, ListedExamples) {
  const auto four = OrientationString::parse("hhhh");
  EXPECT_EQ(fusion_kostka(four, {1, 1, 1, 1}, 2), IntPoly::from_terms({{2, 1}, {4, 1}}));
  EXPECT_EQ(fusion_kostka(OrientationString::parse("vv"), {1, 1}, 2), IntPoly::monomial(1));
  EXPECT_EQ(fusion_kostka(acceptance::example1_delta(), acceptance::example1_gamma(), 3), acceptance::example1_kostka());
  // sym^2 ⊗ C^3 has no sl_3 invariant
  EXPECT_TRUE(fusion_kostka(OrientationString::parse("hh"), {2, 1}, 3).is_zero());
  EXPECT_THROW(fusion_kostka(four, {1, 1, 1, 0}, 2), std::invalid_argument);
}

TEST(Fusion, IntermediateInvariantDimensions) {
  const auto r = fusion_kostka_detailed(OrientationString::parse("hhhh"), {1, 1, 1, 1}, 2);
  EXPECT_EQ(r.invariant_dims, (std::vector<long long>{0, 0, 1, 1, 2}));
}

TEST(Fusion, ValueAtOneIsTheTableauCount) {
  auto rng = gen::engine();
  for (int t = 0; t < 40; ++t) {
    const auto in = gen::instance(rng, 3, 5, 10, 30);
    const IntPoly k = fusion_kostka(in.delta, in.gamma, in.m);
    EXPECT_EQ(k.at_one(), in.count);
    for (long long c : k.coeffs()) EXPECT_GE(c, 0);
  }
}

TEST(Fusion, ExactAndModularRanksAgree) {
  auto rng = gen::engine();
  for (int t = 0; t < 25; ++t) {
    const auto in = gen::instance(rng, 3, 4, 9, 20);
    FusionOptions exact;
    exact.exact = true;
    const auto a = fusion_kostka_detailed(in.delta, in.gamma, in.m);
    const auto b = fusion_kostka_detailed(in.delta, in.gamma, in.m, exact);
    EXPECT_EQ(a.kostka, b.kostka);
    EXPECT_EQ(a.invariant_dims, b.invariant_dims);
    EXPECT_EQ(a.filtration_dims, b.filtration_dims);
  }
}

TEST(Fusion, IndependentOfEvaluationPoints) {
  auto rng = gen::engine();
  for (int t = 0; t < 40; ++t) {
    const auto in = gen::instance(rng, 3, 5, 10, 30);
    FusionOptions alt;
    alt.points = acceptance::alternative_points(in.delta.size());
    EXPECT_EQ(fusion_kostka(in.delta, in.gamma, in.m), fusion_kostka(in.delta, in.gamma, in.m, alt));
  }
}

TEST(Fusion, RejectsRepeatedOrMissingPoints) {
  FusionOptions bad;
  bad.points = std::vector<Rational>{0, 1, 1, 2};
  EXPECT_THROW(fusion_kostka(OrientationString::parse("hhhh"), {1, 1, 1, 1}, 2, bad), std::invalid_argument);
  bad.points = std::vector<Rational>{0, 1};
  EXPECT_THROW(fusion_kostka(OrientationString::parse("hhhh"), {1, 1, 1, 1}, 2, bad), std::invalid_argument);
}

TEST(Fusion, CapOnWeightSpaceDimension) {
  FusionOptions tight;
  tight.max_weight_space_dim = 2;
  EXPECT_THROW(fusion_kostka(acceptance::example1_delta(), acceptance::example1_gamma(), 3, tight), FusionTooLarge);
}

// The oracle builds F^{<=k} from every current generator e, f, h times t^a
// with dense rational matrices; the library uses only lowering operators.
TEST(Fusion, AgreesWithFullCurrentAlgebraOracleForSl2) {
  auto rng = gen::engine();
  int checked = 0;
  for (int t = 0; t < 60 && checked < 25; ++t) {
    const auto in = gen::instance(rng, 2, 4, 8, 20);
    if (in.m != 2) continue;
    long long dim = 1;
    for (std::size_t j = 0; j < in.delta.size(); ++j) dim *= letter_rep(in.delta[j], in.gamma[j], 2).dim;
    if (dim > 100) continue;
    ++checked;
    for (const auto& pts : {default_points(in.delta.size()), acceptance::alternative_points(in.delta.size())}) {
      FusionOptions opts;
      opts.points = pts;
      const auto lib = fusion_kostka_detailed(in.delta, in.gamma, 2, opts);
      const auto ref = oracle::sl2_full_fusion(in.delta, in.gamma, rational_points(pts));
      EXPECT_EQ(lib.invariant_dims, ref) << acceptance::describe(2, in.delta, in.gamma);
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(Fusion, OracleReproducesTheFourLetterExample) {
  const auto ref = oracle::sl2_full_fusion(OrientationString::parse("hhhh"), {1, 1, 1, 1},
                                           rational_points(default_points(4)));
  EXPECT_EQ(ref, (std::vector<long long>{0, 0, 1, 1, 2}));
}
