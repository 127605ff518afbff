#include "swift/hints.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "swift/error.hpp"

namespace swift {

namespace {

CooccurrenceTable::Pair ordered(const GlyphId& a, const GlyphId& b) {
  return a < b ? CooccurrenceTable::Pair{a, b} : CooccurrenceTable::Pair{b, a};
}

const Glyph& resolve(const Catalog& catalog, const GlyphId& id) {
  const Glyph* g = catalog.find_glyph(id);
  if (g == nullptr) throw Error(ErrorCode::kUnknownGlyph, "unknown glyph '" + id.str() + "'");
  return *g;
}

}  // namespace

std::uint64_t CooccurrenceTable::pair_count(const GlyphId& a, const GlyphId& b) const {
  auto it = pairs_.find(ordered(a, b));
  return it == pairs_.end() ? 0 : it->second;
}

std::uint64_t CooccurrenceTable::unary_count(const GlyphId& base) const {
  auto it = unary_.find(base);
  return it == unary_.end() ? 0 : it->second;
}

std::vector<GlyphId> base_set(const Sign& sign, const Catalog& catalog) {
  std::vector<GlyphId> bases;
  bases.reserve(sign.placements.size());
  for (const auto& p : sign.placements) bases.push_back(resolve(catalog, p.glyph_id).base_id);
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return bases;
}

void CooccurrenceTable::add(const Sign& sign, const Catalog& catalog) {
  const auto bases = base_set(sign, catalog);  // resolves everything before mutating
  for (std::size_t i = 0; i < bases.size(); ++i) {
    ++unary_[bases[i]];
    for (std::size_t j = i + 1; j < bases.size(); ++j) ++pairs_[{bases[i], bases[j]}];
  }
  ++sign_total_;
}

CooccurrenceTable rebuild(std::span<const Sign> corpus, const Catalog& catalog) {
  CooccurrenceTable table;
  for (const auto& s : corpus) table.add(s, catalog);
  return table;
}

CooccurrenceTable record_sign(const CooccurrenceTable& table, const Sign& sign,
                              const Catalog& catalog) {
  CooccurrenceTable out = table;
  out.add(sign, catalog);
  return out;
}

HintResult hints(const CooccurrenceTable& table, const Catalog& catalog, std::string_view area,
                 std::span<const GlyphId> placed, std::uint64_t tau, std::size_t limit) {
  if (tau < 1) throw Error(ErrorCode::kOutOfRange, "tau must be at least 1");
  auto area_glyphs = catalog.glyphs_in_category(area);

  std::vector<GlyphId> placed_bases;
  for (const auto& id : placed) placed_bases.push_back(resolve(catalog, id).base_id);
  std::sort(placed_bases.begin(), placed_bases.end());
  placed_bases.erase(std::unique(placed_bases.begin(), placed_bases.end()), placed_bases.end());

  struct Scored {
    const Glyph* glyph;
    std::uint64_t score;
    std::uint64_t popularity;
  };
  std::vector<Scored> candidates;

  // Scores depend only on the base, so evaluate each base once.
  std::map<GlyphId, std::optional<std::uint64_t>> base_score;
  for (const Glyph& g : area_glyphs) {
    auto [it, fresh] = base_score.try_emplace(g.base_id);
    if (fresh) {
      if (placed_bases.empty()) {
        std::uint64_t u = table.unary_count(g.base_id);
        if (u >= tau) it->second = u;
      } else if (!std::binary_search(placed_bases.begin(), placed_bases.end(), g.base_id)) {
        std::uint64_t weakest = std::numeric_limits<std::uint64_t>::max();
        for (const auto& p : placed_bases) {
          weakest = std::min(weakest, table.pair_count(g.base_id, p));
          if (weakest < tau) break;
        }
        if (weakest >= tau) it->second = weakest;
      }
    }
    if (it->second) candidates.push_back({&g, *it->second, table.unary_count(g.base_id)});
  }

  std::sort(candidates.begin(), candidates.end(), [](const Scored& x, const Scored& y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.popularity != y.popularity) return x.popularity > y.popularity;
    return x.glyph->id < y.glyph->id;
  });

  HintResult result;
  result.total = candidates.size();
  const std::size_t n = std::min(limit, candidates.size());
  result.hints.reserve(n);
  for (std::size_t i = 0; i < n; ++i) result.hints.push_back({candidates[i].glyph, candidates[i].score});
  return result;
}

std::size_t hint_count(const CooccurrenceTable& table, const Catalog& catalog,
                       std::string_view area, std::span<const GlyphId> placed,
                       std::uint64_t tau) {
  return hints(table, catalog, area, placed, tau, 0).total;
}

std::vector<std::pair<CooccurrenceTable::Pair, std::uint64_t>> top_pairs(
    const CooccurrenceTable& table, std::size_t n) {
  std::vector<std::pair<CooccurrenceTable::Pair, std::uint64_t>> all(table.pairs().begin(),
                                                                     table.pairs().end());
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  if (all.size() > n) all.resize(n);
  return all;
}

}  // namespace swift
