#include <gtest/gtest.h>

#include "support/test_support.hpp"
#include "swift/error.hpp"
#include "swift/hints.hpp"

namespace swift {
namespace {

using testing::code_of;
using testing::fixture_catalog;

const GlyphId kA = GlyphId::parse("hands:h-1-L-0");
const GlyphId kB = GlyphId::parse("hands:h-2-R-0");
const GlyphId kX = GlyphId::parse("head:brow-a");
const GlyphId kY = GlyphId::parse("head:mouth-a");

std::vector<std::pair<std::string, std::uint64_t>> ranked(const HintResult& r) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const Hint& h : r.hints) out.emplace_back(h.glyph->id.str(), h.score);
  return out;
}

TEST(Cooccurrence, FixtureCorpusCounts) {
  const auto corpus = testing::fixture_corpus();
  ASSERT_EQ(corpus.size(), 4u);
  const CooccurrenceTable t = rebuild(corpus, fixture_catalog());
  EXPECT_EQ(t.sign_total(), 4u);
  EXPECT_EQ(t.pair_count(kA, kX), 2u);
  EXPECT_EQ(t.pair_count(kX, kA), 2u);
  EXPECT_EQ(t.pair_count(kA, kY), 1u);
  EXPECT_EQ(t.pair_count(kB, kY), 1u);
  EXPECT_EQ(t.pair_count(kA, kB), 0u);
  EXPECT_EQ(t.pair_count(kA, kA), 0u);
  EXPECT_EQ(t.unary_count(kA), 3u);
  EXPECT_EQ(t.unary_count(kX), 2u);
  EXPECT_EQ(t.unary_count(kY), 2u);
  EXPECT_EQ(t.unary_count(kB), 1u);
  EXPECT_EQ(t.pairs().size(), 3u);
}

TEST(Cooccurrence, SetSemanticsWithinOneSign) {
  Sign s;
  s.placements.push_back({GlyphId::parse("hands:h-1-L-3"), 1, 1, 0, false, 1000});
  s.placements.push_back({GlyphId::parse("hands:h-1-L-5"), 1, 1, 0, false, 1000});
  s.placements.push_back({kA, 1, 1, 0, false, 1000});
  EXPECT_EQ(base_set(s, fixture_catalog()), std::vector<GlyphId>{kA});
  const CooccurrenceTable t = record_sign({}, s, fixture_catalog());
  EXPECT_EQ(t.unary_count(kA), 1u);
  EXPECT_TRUE(t.pairs().empty());
}

TEST(Cooccurrence, RecordSignLeavesInputAndRejectsUnknown) {
  const auto corpus = testing::fixture_corpus();
  const CooccurrenceTable empty;
  const CooccurrenceTable one = record_sign(empty, corpus[0], fixture_catalog());
  EXPECT_EQ(empty, CooccurrenceTable{});
  EXPECT_EQ(one.sign_total(), 1u);
  Sign bad;
  bad.placements.push_back({GlyphId::parse("head:ghost"), 1, 1, 0, false, 1000});
  CooccurrenceTable copy = one;
  EXPECT_EQ(code_of([&] { copy.add(bad, fixture_catalog()); }), ErrorCode::kUnknownGlyph);
  EXPECT_EQ(copy, one);
}

TEST(Hints, FixtureScenario) {
  const CooccurrenceTable t = rebuild(testing::fixture_corpus(), fixture_catalog());
  const std::vector<GlyphId> placed{kA};
  EXPECT_EQ(ranked(hints(t, fixture_catalog(), "head", placed, 1, 50)),
            (std::vector<std::pair<std::string, std::uint64_t>>{{"head:brow-a", 2},
                                                                {"head:mouth-a", 1}}));
  EXPECT_EQ(ranked(hints(t, fixture_catalog(), "head", placed, 2, 50)),
            (std::vector<std::pair<std::string, std::uint64_t>>{{"head:brow-a", 2}}));
  // A placed variant resolves to the same base.
  const std::vector<GlyphId> variant{GlyphId::parse("hands:h-1-L-6")};
  EXPECT_EQ(ranked(hints(t, fixture_catalog(), "head", variant, 1, 50)),
            ranked(hints(t, fixture_catalog(), "head", placed, 1, 50)));
}

TEST(Hints, TruncationAndTotal) {
  const CooccurrenceTable t = rebuild(testing::fixture_corpus(), fixture_catalog());
  const std::vector<GlyphId> placed{kA};
  const HintResult r = hints(t, fixture_catalog(), "head", placed, 1, 1);
  EXPECT_EQ(r.total, 2u);
  ASSERT_EQ(r.hints.size(), 1u);
  EXPECT_EQ(r.hints[0].glyph->id, kX);
  EXPECT_EQ(hint_count(t, fixture_catalog(), "head", placed, 1), 2u);
}

TEST(Hints, EmptyDisplayAndEmptyTable) {
  const CooccurrenceTable t = rebuild(testing::fixture_corpus(), fixture_catalog());
  // Nothing placed: only bases A and B appear in the corpus, 8 variants each.
  const HintResult r = hints(t, fixture_catalog(), "hands", {}, 1, 100);
  EXPECT_EQ(r.total, 16u);
  EXPECT_EQ(r.hints.front().score, 3u);
  EXPECT_EQ(r.hints.back().score, 1u);
  EXPECT_EQ(hints(CooccurrenceTable{}, fixture_catalog(), "head", {}, 1, 50).total, 0u);
  const std::vector<GlyphId> placed{kA};
  EXPECT_EQ(hints(CooccurrenceTable{}, fixture_catalog(), "head", placed, 1, 50).total, 0u);
  EXPECT_EQ(hint_count(t, fixture_catalog(), "head", placed, t.sign_total() + 1), 0u);
  EXPECT_EQ(hint_count(t, fixture_catalog(), "head", {}, t.sign_total() + 1), 0u);
}

TEST(Hints, Errors) {
  const CooccurrenceTable t;
  EXPECT_EQ(code_of([&] { hints(t, fixture_catalog(), "torso", {}, 1, 5); }),
            ErrorCode::kUnknownCategory);
  const std::vector<GlyphId> ghost{GlyphId::parse("head:ghost")};
  EXPECT_EQ(code_of([&] { hints(t, fixture_catalog(), "head", ghost, 1, 5); }),
            ErrorCode::kUnknownGlyph);
  EXPECT_EQ(code_of([&] { hints(t, fixture_catalog(), "head", {}, 0, 5); }),
            ErrorCode::kOutOfRange);
}

TEST(TopPairs, OrderedByCount) {
  const CooccurrenceTable t = rebuild(testing::fixture_corpus(), fixture_catalog());
  const auto top = top_pairs(t, 2);
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top[0].first, (CooccurrenceTable::Pair{kA, kX}));
  EXPECT_EQ(top[0].second, 2u);
  EXPECT_EQ(top[1].second, 1u);
}

TEST(HintProperties, RandomCorporaAgainstBruteForce) {
  std::mt19937 rng(31);
  for (int round = 0; round < 40; ++round) {
    const Catalog cat = load_catalog(testing::corpus_catalog_text(20, 3));
    const auto corpus = testing::random_corpus(rng, cat, 60, 6);
    const testing::BruteCounts brute(cat, corpus);
    const CooccurrenceTable t = rebuild(corpus, cat);

    CooccurrenceTable incremental;
    for (const auto& s : corpus) incremental = record_sign(incremental, s, cat);
    ASSERT_EQ(incremental, t);
    ASSERT_EQ(t.sign_total(), corpus.size());

    for (const auto& [pair, n] : t.pairs()) EXPECT_EQ(n, brute.pair(pair.first, pair.second));
    for (const auto& [base, n] : t.unary()) EXPECT_EQ(n, brute.unary(base));

    for (int k = 0; k < 5; ++k) {
      std::vector<GlyphId> placed;
      const auto glyphs = cat.glyphs();
      for (std::size_t n = rng() % 3; n > 0; --n) placed.push_back(glyphs[rng() % glyphs.size()].id);
      const std::string area = rng() % 2 ? "head" : "hands";
      std::size_t previous = SIZE_MAX;
      for (std::uint64_t tau = 1; tau <= 6; ++tau) {
        const auto want = brute.hints(area, placed, tau);
        const HintResult got = hints(t, cat, area, placed, tau, 1000);
        ASSERT_EQ(got.total, want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
          EXPECT_EQ(got.hints[i].glyph->id, want[i].id);
          EXPECT_EQ(got.hints[i].score, want[i].score);
        }
        EXPECT_LE(got.total, previous);
        previous = got.total;
      }
    }
  }
}

}  // namespace
}  // namespace swift
