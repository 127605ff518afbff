#include "swift/search.hpp"

#include <algorithm>
#include <bit>

#include "swift/error.hpp"

namespace swift {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

GlyphSearch::GlyphSearch(const Catalog& catalog) : catalog_(&catalog) {
  for (const auto& info : catalog.categories()) {
    CategoryIndex idx;
    idx.glyphs = catalog.glyphs_in_category(info.token);
    const std::size_t words = words_for(idx.glyphs.size());
    for (const auto& facet : catalog.facet_schema(info.token).facets) {
      FacetBitmaps fb;
      fb.name = facet.name;
      fb.domain = facet.domain;
      fb.by_value.assign(facet.domain.size(), Bitmap(words, 0));
      for (std::size_t i = 0; i < idx.glyphs.size(); ++i) {
        const std::string* v = idx.glyphs[i].facet(facet.name);
        if (v == nullptr) continue;
        auto pos = std::find(fb.domain.begin(), fb.domain.end(), *v) - fb.domain.begin();
        fb.by_value[pos][i / 64] |= std::uint64_t{1} << (i % 64);
      }
      idx.facets.push_back(std::move(fb));
    }
    index_.emplace(info.token, std::move(idx));
  }
}

const GlyphSearch::CategoryIndex& GlyphSearch::category_index(std::string_view category) const {
  auto it = index_.find(category);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownCategory, "unknown category '" + std::string(category) + "'");
  }
  return it->second;
}

FacetQuery GlyphSearch::new_query(std::string_view category) const {
  category_index(category);
  return FacetQuery{std::string(category), {}};
}

FacetQuery GlyphSearch::set_facet(const FacetQuery& query, std::string_view facet,
                                  std::string_view value) const {
  const Facet* f = catalog_->facet_schema(query.category).find(facet);
  if (f == nullptr) {
    throw Error(ErrorCode::kUnknownFacet, "category '" + query.category + "' has no facet '" +
                                              std::string(facet) + "'");
  }
  if (!f->contains(value)) {
    throw Error(ErrorCode::kFacetDomain, "value '" + std::string(value) +
                                             "' is outside the domain of facet '" + f->name + "'");
  }
  FacetQuery out = query;
  out.selections[std::string(facet)] = std::string(value);
  return out;
}

FacetQuery GlyphSearch::clear_facet(const FacetQuery& query, std::string_view facet) const {
  if (catalog_->facet_schema(query.category).find(facet) == nullptr) {
    throw Error(ErrorCode::kUnknownFacet, "category '" + query.category + "' has no facet '" +
                                              std::string(facet) + "'");
  }
  FacetQuery out = query;
  out.selections.erase(std::string(facet));
  return out;
}

void GlyphSearch::validate(const FacetQuery& query) const {
  FacetQuery probe = new_query(query.category);
  for (const auto& [facet, value] : query.selections) probe = set_facet(probe, facet, value);
}

GlyphSearch::Bitmap GlyphSearch::matching(const CategoryIndex& idx, const FacetQuery& query,
                                          std::string_view skip) const {
  const std::size_t n = idx.glyphs.size();
  Bitmap acc(words_for(n), ~std::uint64_t{0});
  if (n % 64 != 0) acc.back() = (std::uint64_t{1} << (n % 64)) - 1;

  for (const auto& fb : idx.facets) {
    if (fb.name == skip) continue;
    auto sel = query.selections.find(fb.name);
    if (sel == query.selections.end()) continue;
    auto pos = std::find(fb.domain.begin(), fb.domain.end(), sel->second) - fb.domain.begin();
    if (static_cast<std::size_t>(pos) == fb.domain.size()) {
      throw Error(ErrorCode::kFacetDomain, "value '" + sel->second +
                                               "' is outside the domain of facet '" + fb.name + "'");
    }
    const Bitmap& bits = fb.by_value[pos];
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= bits[w];
  }
  return acc;
}

std::vector<const Glyph*> GlyphSearch::execute(const FacetQuery& query) const {
  const CategoryIndex& idx = category_index(query.category);
  for (const auto& [facet, value] : query.selections) {
    if (catalog_->facet_schema(query.category).find(facet) == nullptr) {
      throw Error(ErrorCode::kUnknownFacet, "category '" + query.category + "' has no facet '" +
                                                facet + "'");
    }
  }
  Bitmap bits = matching(idx, query, {});
  std::vector<const Glyph*> out;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word != 0) {
      int b = std::countr_zero(word);
      out.push_back(&idx.glyphs[w * 64 + b]);
      word &= word - 1;
    }
  }
  return out;
}

FacetCounts GlyphSearch::remaining_counts(const FacetQuery& query) const {
  validate(query);
  const CategoryIndex& idx = category_index(query.category);
  FacetCounts counts;
  for (const auto& fb : idx.facets) {
    Bitmap others = matching(idx, query, fb.name);
    auto& per_value = counts[fb.name];
    for (std::size_t v = 0; v < fb.domain.size(); ++v) {
      std::size_t total = 0;
      for (std::size_t w = 0; w < others.size(); ++w) {
        total += std::popcount(others[w] & fb.by_value[v][w]);
      }
      per_value[fb.domain[v]] = total;
    }
  }
  return counts;
}

}  // namespace swift
