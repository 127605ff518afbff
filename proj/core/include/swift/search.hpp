#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "swift/catalog.hpp"

namespace swift {

/// One Choose Box state per facet: absent means unconstrained.
struct FacetQuery {
  std::string category;
  std::map<std::string, std::string> selections;

  friend bool operator==(const FacetQuery&, const FacetQuery&) = default;
};

using FacetCounts = std::map<std::string, std::map<std::string, std::size_t>>;

/// Faceted glyph search over one catalog.
///
/// Builds a bitmap per (category, facet, value) at construction; execute()
/// intersects the bitmaps of the selected facets. The catalog must outlive
/// the search object.
class GlyphSearch {
 public:
  explicit GlyphSearch(const Catalog& catalog);

  const Catalog& catalog() const { return *catalog_; }

  /// Throws kUnknownCategory.
  FacetQuery new_query(std::string_view category) const;

  /// Sets or replaces the selection of `facet`. Throws kUnknownFacet or
  /// kFacetDomain; the input query is never modified.
  FacetQuery set_facet(const FacetQuery& query, std::string_view facet,
                       std::string_view value) const;

  /// Removes the selection of `facet` (no-op when absent). Throws kUnknownFacet.
  FacetQuery clear_facet(const FacetQuery& query, std::string_view facet) const;

  /// Glyphs of the query's category matching every selection, by GlyphId.
  std::vector<const Glyph*> execute(const FacetQuery& query) const;

  /// For each facet f and value v: |execute(set_facet(query, f, v))|.
  FacetCounts remaining_counts(const FacetQuery& query) const;

  /// Throws kUnknownCategory / kUnknownFacet / kFacetDomain when the query
  /// does not validate against the catalog.
  void validate(const FacetQuery& query) const;

 private:
  using Bitmap = std::vector<std::uint64_t>;

  struct FacetBitmaps {
    std::string name;
    std::vector<std::string> domain;
    std::vector<Bitmap> by_value;  // parallel to domain
  };

  struct CategoryIndex {
    std::span<const Glyph> glyphs;
    std::vector<FacetBitmaps> facets;  // schema order
  };

  const CategoryIndex& category_index(std::string_view category) const;
  // Matches of every selection except `skip` (empty = skip nothing).
  Bitmap matching(const CategoryIndex& idx, const FacetQuery& query,
                  std::string_view skip) const;

  const Catalog* catalog_;
  std::map<std::string, CategoryIndex, std::less<>> index_;
};

}  // namespace swift
