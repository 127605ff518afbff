#include <gtest/gtest.h>

#include <atomic>
#include <fstream>
#include <thread>

#include "support/test_support.hpp"
#include "swift/error.hpp"
#include "swift/store.hpp"
#include "swift/text_format.hpp"

namespace swift {
namespace {

using namespace std::chrono_literals;
using testing::code_of;
using testing::fixture_catalog;

const Timestamp kEpoch = std::chrono::sys_days{std::chrono::year{2026} / 10 / 16} + 9h;

SignStore::Clock fixed_clock() {
  return [] { return kEpoch; };
}

Sign one_hand(const std::string& glyph = "hands:h-1-L-0") {
  return add_glyph(Sign{}, fixture_catalog(), GlyphId::parse(glyph), 250, 250);
}

class FailingStore : public SignStore {
 public:
  using SignStore::SignStore;
  bool fail = false;

 protected:
  void append_durably(const std::string& line) override {
    if (fail) throw Error(ErrorCode::kStorage, "injected write failure");
    SignStore::append_durably(line);
  }
};

TEST(Utc, RoundTrip) {
  EXPECT_EQ(format_utc(kEpoch), "2026-10-16T09:00:00Z");
  EXPECT_EQ(parse_utc("2026-10-16T09:00:00Z"), kEpoch);
  EXPECT_FALSE(parse_utc("2026-02-30T00:00:00Z"));
  EXPECT_FALSE(parse_utc("2026-10-16 09:00:00"));
}

TEST(RecordLine, RoundTripWithLabel) {
  SignRecord rec{"00000003", one_hand(), kEpoch, {GlyphId::parse("hands:h-1-L-0")}};
  rec.sign.id = rec.id;
  rec.sign.label = "say \"hi\"\\";
  const std::string line = format_record_line(rec);
  EXPECT_EQ(line.rfind("00000003 2026-10-16T09:00:00Z SWIFT1;C500x500;G", 0), 0u) << line;
  EXPECT_EQ(parse_record_line(line, fixture_catalog()), rec);
  EXPECT_EQ(code_of([&] { parse_record_line("0003 x y", fixture_catalog()); }),
            ErrorCode::kCorruptRecord);
  EXPECT_EQ(code_of([&] { parse_record_line("00000003 2026-10-16T09:00:00Z SWIFT1;C0x0",
                                            fixture_catalog()); }),
            ErrorCode::kCorruptRecord);
}

TEST(SignStore, SequentialIdsAndLoad) {
  testing::TempDir dir;
  SignStore store(dir.file("signs.db"), fixture_catalog(), fixed_clock());
  const SignRecord r1 = store.save(one_hand());
  const SignRecord r2 = store.save(one_hand("hands:h-2-R-0"));
  EXPECT_EQ(r1.id, "00000001");
  EXPECT_EQ(r2.id, "00000002");
  EXPECT_EQ(r1.saved_at, kEpoch);
  EXPECT_EQ(r1.glyph_list, std::vector<GlyphId>{GlyphId::parse("hands:h-1-L-0")});
  EXPECT_EQ(store.load("00000001"), r1);
  EXPECT_EQ(store.load("00000002").sign.placements, one_hand("hands:h-2-R-0").placements);
  EXPECT_EQ(code_of([&] { store.load("00000003"); }), ErrorCode::kNotFound);
  EXPECT_EQ(store.size(), 2u);
  EXPECT_EQ(store.table()->sign_total(), 2u);
}

TEST(SignStore, RejectsInvalidSigns) {
  testing::TempDir dir;
  SignStore store(dir.file("signs.db"), fixture_catalog());
  Sign bad;
  bad.placements.push_back({GlyphId::parse("head:ghost"), 1, 1, 0, false, 1000});
  EXPECT_EQ(code_of([&] { store.save(bad); }), ErrorCode::kUnknownGlyph);
  EXPECT_EQ(store.size(), 0u);
  EXPECT_EQ(std::filesystem::file_size(store.path()), 0u);
}

TEST(SignStore, DurableAcrossReopen) {
  testing::TempDir dir;
  std::vector<SignRecord> saved;
  {
    SignStore store(dir.file("signs.db"), fixture_catalog(), fixed_clock());
    for (const Sign& s : testing::fixture_corpus()) saved.push_back(store.save(s));
  }
  SignStore reopened(dir.file("signs.db"), fixture_catalog());
  EXPECT_TRUE(reopened.problems().empty());
  for (const auto& r : saved) EXPECT_EQ(reopened.load(r.id), r);
  EXPECT_EQ(*reopened.table(), rebuild(testing::fixture_corpus(), fixture_catalog()));
  EXPECT_EQ(reopened.save(Sign{}).id, "00000005");
}

TEST(SignStore, ListPaginates) {
  testing::TempDir dir;
  SignStore store(dir.file("signs.db"), fixture_catalog(), fixed_clock());
  for (int i = 0; i < 5; ++i) {
    Sign s = one_hand();
    if (i == 2) s.label = "third";
    store.save(s);
  }
  const auto page = store.list(1, 2);
  ASSERT_EQ(page.size(), 2u);
  EXPECT_EQ(page[0].id, "00000002");
  EXPECT_EQ(page[1], (SignSummary{"00000003", "third", kEpoch, 1}));
  EXPECT_EQ(store.list(4, 10).size(), 1u);
  EXPECT_TRUE(store.list(5, 10).empty());
}

TEST(SignStore, CorruptLineIsReportedNotFatal) {
  testing::TempDir dir;
  {
    SignStore store(dir.file("signs.db"), fixture_catalog(), fixed_clock());
    store.save(one_hand());
  }
  {
    std::ofstream out(dir.file("signs.db"), std::ios::app);
    out << "00000002 2026-10-16T09:00:00Z SWIFT1;C500x500;Ghead:ghost@1,1r0m0s1000\n";
    out << "garbage\n";
  }
  SignStore store(dir.file("signs.db"), fixture_catalog());
  EXPECT_EQ(store.size(), 1u);
  EXPECT_EQ(store.problems().size(), 2u);
  EXPECT_EQ(code_of([&] { store.load("00000002"); }), ErrorCode::kCorruptRecord);
  EXPECT_EQ(store.table()->sign_total(), 1u);
  EXPECT_EQ(store.save(one_hand()).id, "00000003");
}

TEST(SignStore, TornTailIsTruncated) {
  testing::TempDir dir;
  {
    SignStore store(dir.file("signs.db"), fixture_catalog(), fixed_clock());
    store.save(one_hand());
  }
  const auto intact = std::filesystem::file_size(dir.file("signs.db"));
  {
    std::ofstream out(dir.file("signs.db"), std::ios::app);
    out << "00000002 2026-10-16T09:00:00Z SWIFT1;C5";
  }
  SignStore store(dir.file("signs.db"), fixture_catalog());
  EXPECT_EQ(store.size(), 1u);
  ASSERT_EQ(store.problems().size(), 1u);
  EXPECT_EQ(std::filesystem::file_size(dir.file("signs.db")), intact);
  EXPECT_EQ(store.save(one_hand()).id, "00000002");
  SignStore again(dir.file("signs.db"), fixture_catalog());
  EXPECT_TRUE(again.problems().empty());
  EXPECT_EQ(again.size(), 2u);
}

TEST(SignStore, FailedWriteChangesNothing) {
  testing::TempDir dir;
  FailingStore store(dir.file("signs.db"), fixture_catalog(), fixed_clock());
  store.save(one_hand());
  const auto table_before = store.table();
  const auto bytes_before = std::filesystem::file_size(store.path());
  store.fail = true;
  EXPECT_EQ(code_of([&] { store.save(one_hand("hands:h-2-R-0")); }), ErrorCode::kStorage);
  EXPECT_EQ(store.table(), table_before);
  EXPECT_EQ(store.size(), 1u);
  EXPECT_EQ(std::filesystem::file_size(store.path()), bytes_before);
  store.fail = false;
  EXPECT_EQ(store.save(one_hand()).id, "00000002");
}

TEST(SignStore, UnopenablePath) {
  EXPECT_EQ(code_of([] { SignStore("/nonexistent-dir/x/signs.db", fixture_catalog()); }),
            ErrorCode::kStorage);
}

TEST(SignStoreProperties, TableMatchesRebuildUnderConcurrentReads) {
  testing::TempDir dir;
  SignStore store(dir.file("signs.db"), fixture_catalog());
  std::atomic<bool> done{false};
  std::atomic<int> mismatches{0};
  std::thread reader([&] {
    while (!done) {
      // Corpus and table are read separately, so compare each table against
      // its own sign_total only; the snapshot itself must be consistent.
      const auto t = store.table();
      std::uint64_t unary_sum = 0;
      for (const auto& [base, n] : t->unary()) unary_sum += n;
      if (unary_sum > t->sign_total() * 8) ++mismatches;
    }
  });
  std::mt19937 rng(12);
  for (int i = 0; i < 50; ++i) {
    Sign s = testing::random_sign(rng, fixture_catalog(), 6);
    store.save(s);
  }
  done = true;
  reader.join();
  EXPECT_EQ(mismatches.load(), 0);
  EXPECT_EQ(*store.table(), rebuild(store.corpus(), fixture_catalog()));
}

}  // namespace
}  // namespace swift
