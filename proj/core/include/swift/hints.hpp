#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "swift/catalog.hpp"
#include "swift/sign.hpp"

namespace swift {

/// Co-occurrence statistics of base glyph forms across saved signs.
///
/// Each sign contributes its *set* of base ids: a base form placed twice in
/// one sign counts once and never pairs with itself. Zero counts are never
/// stored, so equality is exact count equality.
class CooccurrenceTable {
 public:
  using Pair = std::pair<GlyphId, GlyphId>;  // first < second

  std::uint64_t pair_count(const GlyphId& a, const GlyphId& b) const;
  std::uint64_t unary_count(const GlyphId& base) const;
  std::uint64_t sign_total() const { return sign_total_; }

  const std::map<Pair, std::uint64_t>& pairs() const { return pairs_; }
  const std::map<GlyphId, std::uint64_t>& unary() const { return unary_; }

  /// Adds one sign in place. Throws kUnknownGlyph; the table is unchanged then.
  void add(const Sign& sign, const Catalog& catalog);

  friend bool operator==(const CooccurrenceTable&, const CooccurrenceTable&) = default;

 private:
  std::map<Pair, std::uint64_t> pairs_;
  std::map<GlyphId, std::uint64_t> unary_;
  std::uint64_t sign_total_ = 0;
};

/// Distinct base ids of a sign's placements, sorted. Throws kUnknownGlyph.
std::vector<GlyphId> base_set(const Sign& sign, const Catalog& catalog);

CooccurrenceTable rebuild(std::span<const Sign> corpus, const Catalog& catalog);
CooccurrenceTable record_sign(const CooccurrenceTable& table, const Sign& sign,
                              const Catalog& catalog);

struct Hint {
  const Glyph* glyph = nullptr;
  std::uint64_t score = 0;
};

struct HintResult {
  std::vector<Hint> hints;
  std::size_t total = 0;  // candidates before truncation
};

inline constexpr std::uint64_t kDefaultTau = 1;
inline constexpr std::size_t kDefaultHintLimit = 50;

/// Glyphs of `area` compatible with every placed glyph.
///
/// With nothing placed, candidates are the area's glyphs whose base form
/// appears in at least `tau` saved signs, scored by that count. Otherwise a
/// candidate's base must co-occur at least `tau` times with each placed base
/// (and must not itself be placed); its score is the weakest such count.
/// Ordered by score, then base popularity, descending, then GlyphId.
/// Throws kUnknownCategory, kUnknownGlyph, or kOutOfRange for tau < 1.
HintResult hints(const CooccurrenceTable& table, const Catalog& catalog, std::string_view area,
                 std::span<const GlyphId> placed, std::uint64_t tau, std::size_t limit);

std::size_t hint_count(const CooccurrenceTable& table, const Catalog& catalog,
                       std::string_view area, std::span<const GlyphId> placed,
                       std::uint64_t tau);

/// The `n` most frequent pairs, count descending then by pair.
std::vector<std::pair<CooccurrenceTable::Pair, std::uint64_t>> top_pairs(
    const CooccurrenceTable& table, std::size_t n);

}  // namespace swift
