#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swift {

/// Glyph identifier rendered as `category:local`.
///
/// Ordering is plain lexicographic order of the rendered form, which keeps
/// every category's glyphs contiguous when sorted.
class GlyphId {
 public:
  GlyphId() = default;
  GlyphId(std::string_view category, std::string_view local);

  /// Parses `category:local`. Throws Error(kSyntax) on a malformed id.
  static GlyphId parse(std::string_view text);
  static std::optional<GlyphId> try_parse(std::string_view text);

  std::string_view category() const { return std::string_view(text_).substr(0, split_); }
  std::string_view local() const { return std::string_view(text_).substr(split_ + 1); }
  const std::string& str() const { return text_; }
  bool empty() const { return text_.empty(); }

  friend bool operator==(const GlyphId& a, const GlyphId& b) { return a.text_ == b.text_; }
  friend std::strong_ordering operator<=>(const GlyphId& a, const GlyphId& b) {
    return a.text_ <=> b.text_;
  }

 private:
  std::string text_;
  std::size_t split_ = 0;
};

/// `[a-z0-9-]+`: category tokens.
bool is_category_token(std::string_view s);
/// `[A-Za-z0-9-]+`: glyph locals, facet names and facet values.
bool is_token(std::string_view s);

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Side of the square local box glyph drawings are authored in.
inline constexpr double kArtBoxSize = 100.0;

struct Glyph {
  GlyphId id;
  GlyphId base_id;
  std::string category;
  std::map<std::string, std::string> facets;
  std::string path;
  Point anchor{50, 50};

  const std::string* facet(std::string_view name) const;
  friend bool operator==(const Glyph&, const Glyph&) = default;
};

struct Facet {
  std::string name;
  std::string label;
  std::vector<std::string> domain;

  bool contains(std::string_view value) const;
  friend bool operator==(const Facet&, const Facet&) = default;
};

struct FacetSchema {
  std::string category;
  std::vector<Facet> facets;

  const Facet* find(std::string_view name) const;
  friend bool operator==(const FacetSchema&, const FacetSchema&) = default;
};

enum class CategoryKind { kAnatomical, kSymbolic };

struct CategoryInfo {
  std::string token;
  std::string label;
  CategoryKind kind = CategoryKind::kAnatomical;
  friend bool operator==(const CategoryInfo&, const CategoryInfo&) = default;
};

std::string_view to_string(CategoryKind kind);

/// Immutable, validated glyph inventory. Build one with load_catalog().
class Catalog {
 public:
  const std::string& name() const { return name_; }
  const std::string& version() const { return version_; }
  const std::vector<CategoryInfo>& categories() const { return categories_; }
  bool has_category(std::string_view category) const;

  /// All glyphs, ordered by GlyphId.
  std::span<const Glyph> glyphs() const { return glyphs_; }

  /// Glyphs of one category ordered by GlyphId. Throws kUnknownCategory.
  std::span<const Glyph> glyphs_in_category(std::string_view category) const;

  /// Throws kUnknownCategory.
  const FacetSchema& facet_schema(std::string_view category) const;

  /// Throws kNotFound.
  const Glyph& get_glyph(const GlyphId& id) const;
  const Glyph* find_glyph(const GlyphId& id) const;

  /// Glyphs whose base_id equals `base`, ordered by GlyphId.
  std::vector<const Glyph*> variants_of(const GlyphId& base) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  friend Catalog load_catalog(std::string_view source);

  struct Range {
    std::size_t begin = 0;
    std::size_t end = 0;
    friend bool operator==(const Range&, const Range&) = default;
  };

  std::string name_;
  std::string version_;
  std::vector<CategoryInfo> categories_;
  std::map<std::string, FacetSchema, std::less<>> schemas_;
  std::vector<Glyph> glyphs_;
  std::map<std::string, Range, std::less<>> category_ranges_;
};

/// Parses and validates a catalog document. Throws kParse with the line
/// number, or kValidation naming the first offending glyph or facet.
Catalog load_catalog(std::string_view source);

/// Reads a file and loads it. Throws kStorage when the file cannot be read.
Catalog load_catalog_file(const std::string& path);

/// Editor areas the Glyph Menu expects (head, shoulders, hands, arms as
/// anatomical; punctuation, contact as symbolic) that the catalog lacks.
/// Small test catalogs legitimately miss some, so loading does not enforce it.
std::vector<std::string> missing_editor_areas(const Catalog& catalog);

}  // namespace swift
