#include <gtest/gtest.h>

#include <set>

#include "deltatab/acceptance.hpp"
#include "deltatab/tableau.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace deltatab;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

Tableau tab(Grid g, const char* d) { return Tableau(std::move(g), OrientationString::parse(d)); }

}  // namespace

TEST(Partition, RejectsIncreasingOrNegativeParts) {
  EXPECT_THROW((Partition{1, 2}), std::invalid_argument);
  EXPECT_THROW((Partition{2, -1}), std::invalid_argument);
  EXPECT_EQ((Partition{3, 1, 0, 0}), (Partition{3, 1}));
}

TEST(Partition, ConjugateIsAnInvolution) {
  auto rng = gen::engine();
  for (int k = 0; k < 200; ++k) {
    const Partition p = gen::partition(rng, 6, 7);
    EXPECT_EQ(p.conjugate().conjugate(), p);
    EXPECT_EQ(p.conjugate().size(), p.size());
  }
  EXPECT_EQ((Partition{3, 1}.conjugate()), (Partition{2, 1, 1}));
}

TEST(OrientationString, ParsesCaseInsensitively) {
  EXPECT_EQ(OrientationString::parse("HvhV").str(), "hvhv");
  EXPECT_THROW(OrientationString::parse("hx"), std::invalid_argument);
  EXPECT_THROW(OrientationString::parse("h,v"), std::invalid_argument);
  EXPECT_EQ(OrientationString::parse("hvv").rotated().str(), "vvh");
  EXPECT_EQ(OrientationString::parse("hvv").swapped(1).str(), "vhv");
  EXPECT_EQ(OrientationString::parse("hvv").flipped().str(), "vhh");
}

TEST(AddStrip, ListedExamples) {
  EXPECT_EQ(parts_of(add_strip(Partition{}, 2, Orient::H, 3)), (std::vector<std::vector<int>>{{2}}));
  EXPECT_EQ(parts_of(add_strip(Partition{2}, 2, Orient::V, 3)), (std::vector<std::vector<int>>{{2, 1, 1}, {3, 1}}));
  EXPECT_TRUE(add_strip(Partition{2}, 3, Orient::V, 2).empty());
}

TEST(AddStrip, ZeroSizeStripIsTheIdentityForBothOrientations) {
  EXPECT_EQ(add_strip(Partition{2, 1}, 0, Orient::H, 3), (std::vector<Partition>{Partition{2, 1}}));
  EXPECT_EQ(add_strip(Partition{2, 1}, 0, Orient::V, 3), (std::vector<Partition>{Partition{2, 1}}));
}

TEST(AddStrip, AgreesWithBruteForceCellCheck) {
  for (int m = 1; m <= 4; ++m)
    for (int base = 0; base <= 6; ++base)
      for (const auto& lam : oracle::partitions_of(base, m, base))
        for (int size = 0; size <= 5; ++size)
          for (Orient o : {Orient::H, Orient::V}) {
            const Partition lambda(lam);
            std::set<std::vector<int>> got;
            for (const auto& p : add_strip(lambda, size, o, m)) {
              got.insert(p.parts());
              EXPECT_TRUE(is_strip(lambda, p, o));
            }
            EXPECT_EQ(got, oracle::brute_force_strips(lambda, size, o, m))
                << "lambda size " << base << " strip " << size << " m " << m;
          }
}

TEST(AddStrip, OutputIsLexicographic) {
  const auto out = add_strip(Partition{3, 1}, 3, Orient::H, 4);
  EXPECT_TRUE(std::is_sorted(out.begin(), out.end()));
}

TEST(Validate, AcceptsPrintedTableaux) {
  for (const auto& t : acceptance::example1_tableaux()) EXPECT_TRUE(validate(t).ok());
  for (const auto& t : acceptance::bk_figure_chain()) EXPECT_TRUE(validate(t).ok());
}

TEST(Validate, ReportsStripViolationWithCell) {
  // two 1s in one column while delta_1 = h
  const auto rep = validate(tab({{1, 2}, {1, 2}}, "hv"));
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.status, ValidationReport::Status::not_semistandard);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].row, 0);
  EXPECT_EQ(rep.violations[0].col, 0);
  EXPECT_NE(rep.summary().find("(1,1)"), std::string::npos);
}

TEST(Validate, ReportsStructuralErrors) {
  EXPECT_EQ(validate(tab({{1}, {1, 2}}, "vh")).status, ValidationReport::Status::structural);
  EXPECT_EQ(validate(tab({{1, 3}}, "hh")).status, ValidationReport::Status::structural);
  EXPECT_EQ(validate(tab({{2, 1}}, "hh")).status, ValidationReport::Status::not_semistandard);
}

TEST(Validate, SameGridDifferentDeltaAreDistinct) {
  const Tableau a = tab({{1, 2}}, "hh"), b = tab({{1, 2}}, "vv");
  EXPECT_TRUE(validate(a).ok());
  EXPECT_TRUE(validate(b).ok());
  EXPECT_NE(a, b);
}

TEST(Transpose, ListedExamples) {
  EXPECT_EQ(transpose(tab({{1, 2, 3}}, "hhh")), tab({{1}, {2}, {3}}, "vvv"));
  EXPECT_EQ(transpose(tab({{1, 2}, {2}}, "hv")), tab({{1, 2}, {2}}, "vh"));
}

TEST(Transpose, InvolutionPreservingValidity) {
  auto rng = gen::engine();
  for (int k = 0; k < 200; ++k) {
    const Tableau t = gen::tableau(rng, 4, 6, 14);
    const Tableau tt = transpose(t);
    EXPECT_EQ(transpose(tt), t);
    EXPECT_TRUE(validate(tt).ok());
    EXPECT_EQ(tt.shape(), t.shape().conjugate());
  }
  // an invalid filling stays invalid
  EXPECT_FALSE(validate(transpose(tab({{1, 2}, {1, 2}}, "hv"))).ok());
}

TEST(Enumerate, ListedCounts) {
  EXPECT_EQ(enumerate_tableaux(3, acceptance::example1_delta(), acceptance::example1_gamma()).size(), 6u);
  EXPECT_EQ(enumerate_tableaux(4, acceptance::example2_delta(), acceptance::example2_gamma()).size(), 24u);
  EXPECT_TRUE(enumerate_tableaux(2, OrientationString::parse("h"), {3}).empty());
}

TEST(Enumerate, ContainsThePrintedRepresentatives) {
  const auto all = enumerate_tableaux(3, acceptance::example1_delta(), acceptance::example1_gamma());
  const std::set<Tableau> s(all.begin(), all.end());
  for (const auto& t : acceptance::example1_tableaux()) EXPECT_TRUE(s.count(t));
}

TEST(Enumerate, EveryTableauIsValidRectangularWithTheContent) {
  auto rng = gen::engine();
  for (int k = 0; k < 60; ++k) {
    const auto in = gen::instance(rng, 4, 6, 16, 200);
    const auto all = enumerate_tableaux(in.m, in.delta, in.gamma);
    EXPECT_EQ(static_cast<long long>(all.size()), in.count);
    EXPECT_EQ(std::set<Tableau>(all.begin(), all.end()).size(), all.size());
    for (const auto& t : all) {
      EXPECT_TRUE(validate(t).ok());
      EXPECT_EQ(t.content(), in.gamma);
      EXPECT_EQ(t.shape(), rectangle(in.m, total(in.gamma) / in.m));
      EXPECT_EQ(tableau_from_chain(t.chain(), t.delta()), t);
    }
  }
}

TEST(Enumerate, OrderIsDeterministicAndFollowsChains) {
  const auto a = enumerate_tableaux(3, acceptance::example1_delta(), acceptance::example1_gamma());
  const auto b = enumerate_tableaux(3, acceptance::example1_delta(), acceptance::example1_gamma());
  EXPECT_EQ(a, b);
  std::vector<std::vector<Partition>> chains;
  for (const auto& t : a) chains.push_back(t.chain());
  EXPECT_TRUE(std::is_sorted(chains.begin(), chains.end()));
}

TEST(Enumerate, CountMatchesBruteForceFillings) {
  // all fillings of a 2x3 rectangle with entries 1..3, checked one by one
  const OrientationString d = OrientationString::parse("hvh");
  std::map<ContentVector, long long> brute;
  for (int code = 0; code < 729; ++code) {
    Grid g(2, std::vector<int>(3));
    int x = code;
    for (auto& row : g)
      for (int& v : row) v = x % 3 + 1, x /= 3;
    Tableau t(g, d);
    if (validate(t).ok()) ++brute[t.content()];
  }
  for (const auto& [gamma, count] : brute) EXPECT_EQ(count_rectangular(2, d, gamma), count);
  EXPECT_EQ(count_rectangular(2, d, {1, 1, 4}), 0);
}

TEST(Enumerate, ZeroContentLettersAreAllowed) {
  const auto with_zero = enumerate_tableaux(2, OrientationString::parse("hvh"), {2, 0, 2});
  const auto without = enumerate_tableaux(2, OrientationString::parse("hh"), {2, 2});
  EXPECT_EQ(with_zero.size(), without.size());
}
