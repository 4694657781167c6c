#include <gtest/gtest.h>

#include "deltatab/acceptance.hpp"
#include "deltatab/io.hpp"
#include "support/generators.hpp"

using namespace deltatab;

TEST(Text, ContentAndGrid) {
  EXPECT_EQ(parse_content("2,3,0"), (ContentVector{2, 3, 0}));
  EXPECT_EQ(parse_content(""), ContentVector{});
  EXPECT_THROW(parse_content("2,x"), std::invalid_argument);
  EXPECT_THROW(parse_content("2,-1"), std::invalid_argument);
  EXPECT_THROW(parse_content("2,"), std::invalid_argument);
  EXPECT_THROW(parse_content("2 ,3"), std::invalid_argument);
  EXPECT_EQ(format_content({2, 3, 0}), "2,3,0");
  EXPECT_EQ(parse_grid("1,1,2/2,3"), (Grid{{1, 1, 2}, {2, 3}}));
  EXPECT_THROW(parse_grid("1,1//2"), std::invalid_argument);
}

TEST(Text, RenderShowsDots) {
  EXPECT_EQ(render(Grid{{kDot, 2}, {3}}), ". 2\n3\n");
  EXPECT_EQ(render(acceptance::example1_promoted()), "1 2 3 4\n1 3 4 5\n2 5 6 6\n");
}

TEST(Poly, TextForms) {
  const IntPoly f = IntPoly::from_terms({{12, 1}, {9, 2}, {0, 1}});
  EXPECT_EQ(to_string(f), "q^12 + 2q^9 + 1");
  EXPECT_EQ(to_string(IntPoly{}), "0");
  EXPECT_EQ(f.to_terms(), "0:1\n9:2\n12:1\n");
  EXPECT_EQ(IntPoly::parse_terms(f.to_terms()), f);
  EXPECT_EQ(IntPoly::parse_terms("# comment\n\n3:1\n3:2\n"), IntPoly::monomial(3, 3));
  EXPECT_THROW(IntPoly::parse_terms("3"), std::invalid_argument);
  EXPECT_THROW(IntPoly::parse_terms("3:x"), std::invalid_argument);
  EXPECT_THROW(IntPoly::parse_terms("-1:2"), std::invalid_argument);
  EXPECT_EQ(f.at_one(), 4);
}

TEST(Poly, Arithmetic) {
  const IntPoly a({1, 1}), b({-1, 1});
  EXPECT_EQ(a * b, IntPoly({-1, 0, 1}));
  auto [q, r] = IntPoly({-1, 0, 1}).divmod(a);
  EXPECT_EQ(q, b);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(a.shifted(2), IntPoly({0, 0, 1, 1}));
  EXPECT_EQ(a.substitute_power(3), IntPoly({1, 0, 0, 1}));
  EXPECT_EQ(IntPoly{}.degree(), -1);
}

TEST(Json, TableauRoundTrip) {
  auto rng = gen::engine();
  for (int t = 0; t < 100; ++t) {
    const Tableau x = gen::tableau(rng, 4, 6, 16);
    EXPECT_EQ(tableau_from_json(Json::parse(to_json(x).dump())), x);
  }
  const Json j = to_json(acceptance::example1_tableaux()[0]);
  EXPECT_EQ(j.at("delta"), "hvhvhv");
  EXPECT_EQ(j.at("shape"), (std::vector<int>{4, 4, 4}));
  EXPECT_EQ(j.at("gamma"), (std::vector<int>{2, 2, 2, 2, 2, 2}));
}

TEST(Json, TableauErrors) {
  EXPECT_THROW(tableau_from_json(Json::parse(R"({"rows": [[1]]})")), std::invalid_argument);
  EXPECT_THROW(tableau_from_json(Json::parse(R"({"rows": [[1, 2]], "delta": "hh", "gamma": [2, 0]})")),
               std::invalid_argument);
  EXPECT_THROW(tableau_from_json(Json::parse(R"({"rows": [[1, 2]], "delta": "hh", "shape": [1]})")),
               std::invalid_argument);
  EXPECT_THROW(tableau_from_json(Json::parse(R"({"rows": [[1]], "delta": "x"})")), std::invalid_argument);
}

TEST(Json, HiveRoundTripKeepsUnknownPoints) {
  const Hive full = tableau_to_hive(acceptance::example1_tableaux()[0], 3);
  EXPECT_EQ(hive_from_json(Json::parse(to_json(full).dump())), full);
  Hive partial(4, 2);
  partial.set({2, 0, 0, 0}, 0);
  partial.set({1, 1, 0, 0}, 3);
  const Hive back = hive_from_json(to_json(partial));
  EXPECT_EQ(back, partial);
  EXPECT_FALSE(back.complete());
}

TEST(Json, HiveErrors) {
  EXPECT_THROW(hive_from_json(Json::parse(R"({"n": 3, "m": 1})")), std::invalid_argument);
  EXPECT_THROW(hive_from_json(Json::parse(R"({"n": 3, "m": 1, "entries": [[1, 0, 0]]})")), std::invalid_argument);
  EXPECT_THROW(hive_from_json(Json::parse(R"({"n": 3, "m": 1, "entries": [[2, 0, 0, 5]]})")), std::invalid_argument);
}

TEST(Json, PolyRoundTrip) {
  const IntPoly f = acceptance::example1_kostka();
  const Json j = to_json(f);
  EXPECT_EQ(j.at("text"), to_string(f));
  EXPECT_EQ(poly_from_json(Json::parse(j.dump())), f);
}
