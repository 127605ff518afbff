#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

#include "support/test_support.hpp"
#include "swift/error.hpp"
#include "swift/search.hpp"

namespace swift {
namespace {

using testing::code_of;
using testing::fixture_catalog;
using testing::ids_of;
using testing::naive_filter;

class SearchTest : public ::testing::Test {
 protected:
  GlyphSearch search{fixture_catalog()};
};

TEST_F(SearchTest, NewQuery) {
  EXPECT_EQ(search.new_query("hands"), (FacetQuery{"hands", {}}));
  EXPECT_EQ(search.new_query("head"), (FacetQuery{"head", {}}));
  EXPECT_EQ(code_of([&] { search.new_query("x"); }), ErrorCode::kUnknownCategory);
}

TEST_F(SearchTest, SetFacetReplacesAndKeepsInput) {
  const FacetQuery empty = search.new_query("hands");
  const FacetQuery left = search.set_facet(empty, "handedness", "L");
  EXPECT_EQ(left.selections, (std::map<std::string, std::string>{{"handedness", "L"}}));
  EXPECT_TRUE(empty.selections.empty());
  const FacetQuery right = search.set_facet(left, "handedness", "R");
  EXPECT_EQ(right.selections, (std::map<std::string, std::string>{{"handedness", "R"}}));
  EXPECT_EQ(left.selections.at("handedness"), "L");
  EXPECT_EQ(code_of([&] { search.set_facet(empty, "fingers", "7"); }), ErrorCode::kFacetDomain);
  EXPECT_EQ(code_of([&] { search.set_facet(empty, "color", "red"); }), ErrorCode::kUnknownFacet);
}

TEST_F(SearchTest, ClearFacet) {
  const FacetQuery empty = search.new_query("hands");
  EXPECT_EQ(search.clear_facet(search.set_facet(empty, "handedness", "L"), "handedness"), empty);
  EXPECT_EQ(search.clear_facet(empty, "handedness"), empty);
  EXPECT_EQ(code_of([&] { search.clear_facet(empty, "color"); }), ErrorCode::kUnknownFacet);
}

TEST_F(SearchTest, ExecuteFixtureExamples) {
  auto q = search.set_facet(search.new_query("hands"), "handedness", "L");
  EXPECT_EQ(search.execute(q).size(), 24u);
  q = search.set_facet(q, "fingers", "1");
  q = search.set_facet(q, "rotation", "3");
  const auto exact = search.execute(q);
  ASSERT_EQ(exact.size(), 1u);
  EXPECT_EQ(exact[0]->id.str(), "hands:h-1-L-3");
  EXPECT_EQ(search.execute(search.new_query("hands")).size(), 48u);
}

TEST_F(SearchTest, RemainingCountsFixtureExamples) {
  auto counts = search.remaining_counts(search.new_query("hands"));
  EXPECT_EQ(counts["handedness"], (std::map<std::string, std::size_t>{{"L", 24}, {"R", 24}}));
  EXPECT_EQ(counts["fingers"]["5"], 16u);

  counts = search.remaining_counts(search.set_facet(search.new_query("hands"), "fingers", "1"));
  ASSERT_EQ(counts["rotation"].size(), 8u);
  for (const auto& [value, n] : counts["rotation"]) EXPECT_EQ(n, 2u) << value;
  // Counts for the selected facet itself ignore its own selection.
  EXPECT_EQ(counts["fingers"]["2"], 16u);

  counts = search.remaining_counts(search.new_query("head"));
  EXPECT_EQ(counts["region"], (std::map<std::string, std::size_t>{{"brow", 2}, {"mouth", 2}}));
}

TEST(SearchProperties, OracleEquivalenceMonotonicityAndCounts) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 60; ++round) {
    testing::RandomCatalogSpec spec{1 + static_cast<int>(rng() % 3), 5, 4,
                                    static_cast<int>(rng() % 400), 0.1};
    const Catalog cat = load_catalog(testing::random_catalog_text(rng, spec));
    GlyphSearch search(cat);
    for (int k = 0; k < 10; ++k) {
      const FacetQuery q = testing::random_query(rng, cat);
      const auto got = ids_of(search.execute(q));
      ASSERT_EQ(got, naive_filter(cat, q));

      for (const auto& f : cat.facet_schema(q.category).facets) {
        for (const auto& v : f.domain) {
          const auto narrowed = ids_of(search.execute(search.set_facet(q, f.name, v)));
          EXPECT_TRUE(std::includes(got.begin(), got.end(), narrowed.begin(), narrowed.end()) ||
                      q.selections.contains(f.name));
          EXPECT_EQ(search.remaining_counts(q)[f.name][v], narrowed.size());
        }
        if (!q.selections.contains(f.name)) {
          const auto& v = f.domain.front();
          EXPECT_EQ(search.clear_facet(search.set_facet(q, f.name, v), f.name), q);
        }
      }
    }
  }
}

TEST(SearchProperties, OrderIndependence) {
  GlyphSearch search(fixture_catalog());
  std::vector<std::pair<std::string, std::string>> picks{
      {"handedness", "R"}, {"fingers", "2"}, {"rotation", "6"}};
  std::sort(picks.begin(), picks.end());
  std::vector<GlyphId> first;
  do {
    auto q = search.new_query("hands");
    for (const auto& [f, v] : picks) q = search.set_facet(q, f, v);
    auto got = ids_of(search.execute(q));
    if (first.empty()) first = got;
    EXPECT_EQ(got, first);
  } while (std::next_permutation(picks.begin(), picks.end()));
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0].str(), "hands:h-2-R-6");
}

TEST(SearchPerformance, TenThousandGlyphsSixFacets) {
  std::mt19937 rng(5);
  testing::RandomCatalogSpec spec{1, 1, 8, 10000, 0.0};
  // Force six facets.
  std::string doc = "CATALOG big 1\nCATEGORY c0 LABEL \"C\" KIND anatomical\n";
  for (int f = 0; f < 6; ++f) doc += "FACET c0 f" + std::to_string(f) + " LABEL \"F\" VALUES a,b,c,d,e,f,g,h\n";
  for (int g = 0; g < spec.glyphs; ++g) {
    doc += "GLYPH c0:g" + std::to_string(g) + " FACETS ";
    for (int f = 0; f < 6; ++f) {
      doc += (f ? "," : "") + std::string("f") + std::to_string(f) + "=" +
             std::string(1, static_cast<char>('a' + rng() % 8));
    }
    doc += " PATH \"M0 0\"\n";
  }
  const Catalog cat = load_catalog(doc);
  GlyphSearch search(cat);
  auto q = search.set_facet(search.new_query("c0"), "f1", "c");
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 100; ++i) search.execute(q);
  const auto per_call = (std::chrono::steady_clock::now() - start) / 100;
  EXPECT_LT(per_call, std::chrono::milliseconds(10));
}

}  // namespace
}  // namespace swift
