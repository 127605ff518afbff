#include "swift/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "swift/error.hpp"

namespace swift {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kValidation: return "validation_error";
    case ErrorCode::kUnknownCategory: return "unknown_category";
    case ErrorCode::kUnknownFacet: return "unknown_facet";
    case ErrorCode::kFacetDomain: return "facet_domain";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kUnknownGlyph: return "unknown_glyph";
    case ErrorCode::kOutOfCanvas: return "out_of_canvas";
    case ErrorCode::kInvalidSelection: return "invalid_selection";
    case ErrorCode::kSyntax: return "syntax_error";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kStorage: return "storage_error";
    case ErrorCode::kCorruptRecord: return "corrupt_record";
    case ErrorCode::kBadRequest: return "bad_request";
  }
  return "unknown";
}

std::string_view to_string(CategoryKind kind) {
  return kind == CategoryKind::kAnatomical ? "anatomical" : "symbolic";
}

bool is_category_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
  });
}

bool is_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-';
  });
}

GlyphId::GlyphId(std::string_view category, std::string_view local)
    : text_(std::string(category) + ":" + std::string(local)), split_(category.size()) {}

std::optional<GlyphId> GlyphId::try_parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto category = text.substr(0, colon);
  auto local = text.substr(colon + 1);
  if (!is_category_token(category) || !is_token(local)) return std::nullopt;
  return GlyphId(category, local);
}

GlyphId GlyphId::parse(std::string_view text) {
  auto id = try_parse(text);
  if (!id) throw Error(ErrorCode::kSyntax, "malformed glyph id '" + std::string(text) + "'");
  return *id;
}

const std::string* Glyph::facet(std::string_view name) const {
  auto it = facets.find(std::string(name));
  return it == facets.end() ? nullptr : &it->second;
}

bool Facet::contains(std::string_view value) const {
  return std::find(domain.begin(), domain.end(), value) != domain.end();
}

const Facet* FacetSchema::find(std::string_view name) const {
  for (const auto& f : facets) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

bool Catalog::has_category(std::string_view category) const {
  return schemas_.find(category) != schemas_.end();
}

std::span<const Glyph> Catalog::glyphs_in_category(std::string_view category) const {
  auto it = category_ranges_.find(category);
  if (it == category_ranges_.end()) {
    throw Error(ErrorCode::kUnknownCategory, "unknown category '" + std::string(category) + "'");
  }
  return std::span<const Glyph>(glyphs_).subspan(it->second.begin,
                                                 it->second.end - it->second.begin);
}

const FacetSchema& Catalog::facet_schema(std::string_view category) const {
  auto it = schemas_.find(category);
  if (it == schemas_.end()) {
    throw Error(ErrorCode::kUnknownCategory, "unknown category '" + std::string(category) + "'");
  }
  return it->second;
}

const Glyph* Catalog::find_glyph(const GlyphId& id) const {
  auto it = std::lower_bound(glyphs_.begin(), glyphs_.end(), id,
                             [](const Glyph& g, const GlyphId& key) { return g.id < key; });
  if (it == glyphs_.end() || it->id != id) return nullptr;
  return &*it;
}

const Glyph& Catalog::get_glyph(const GlyphId& id) const {
  const Glyph* g = find_glyph(id);
  if (g == nullptr) throw Error(ErrorCode::kNotFound, "glyph '" + id.str() + "' not found");
  return *g;
}

std::vector<const Glyph*> Catalog::variants_of(const GlyphId& base) const {
  std::vector<const Glyph*> out;
  auto it = category_ranges_.find(base.category());
  if (it == category_ranges_.end()) return out;
  for (std::size_t i = it->second.begin; i < it->second.end; ++i) {
    if (glyphs_[i].base_id == base) out.push_back(&glyphs_[i]);
  }
  return out;
}

namespace {

// Cursor over one catalog line.
class LineReader {
 public:
  LineReader(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& reason) const {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no_) + ": " + reason);
  }

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }

  std::string_view word(const char* what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t') ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return line_.substr(start, pos_ - start);
  }

  void keyword(std::string_view kw) {
    auto w = word(std::string(kw).c_str());
    if (w != kw) fail("expected " + std::string(kw) + ", got '" + std::string(w) + "'");
  }

  std::string quoted(const char* what) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != '"') fail(std::string("expected quoted ") + what);
    ++pos_;
    std::string out;
    while (pos_ < line_.size() && line_[pos_] != '"') {
      char c = line_[pos_++];
      if (c == '\\' && pos_ < line_.size()) c = line_[pos_++];
      out.push_back(c);
    }
    if (pos_ >= line_.size()) fail(std::string("unterminated quoted ") + what);
    ++pos_;
    return out;
  }

  int line_no() const { return line_no_; }

 private:
  std::string_view line_;
  int line_no_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto next = s.find(sep, start);
    out.push_back(s.substr(start, next == std::string_view::npos ? s.npos : next - start));
    if (next == std::string_view::npos) break;
    start = next + 1;
  }
  return out;
}

double parse_number(LineReader& r, std::string_view text) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    r.fail("bad number '" + std::string(text) + "'");
  }
  return v;
}

GlyphId parse_id(LineReader& r, std::string_view text) {
  auto id = GlyphId::try_parse(text);
  if (!id) r.fail("malformed glyph id '" + std::string(text) + "'");
  return *id;
}

struct PendingGlyph {
  Glyph glyph;
  int line_no = 0;
};

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kValidation, message);
}

}  // namespace

Catalog load_catalog(std::string_view source) {
  Catalog cat;
  bool have_header = false;
  std::vector<PendingGlyph> pending;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    auto nl = source.find('\n', start);
    std::string_view line = source.substr(start, nl == source.npos ? source.npos : nl - start);
    start = nl == source.npos ? source.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineReader r(line, line_no);
    if (r.at_end()) continue;
    auto kw = r.word("keyword");
    if (kw.front() == '#') continue;

    if (kw == "CATALOG") {
      if (have_header) r.fail("duplicate CATALOG line");
      cat.name_ = std::string(r.word("catalog name"));
      cat.version_ = std::string(r.word("catalog version"));
      have_header = true;
    } else if (!have_header) {
      r.fail("document must start with a CATALOG line");
    } else if (kw == "CATEGORY") {
      CategoryInfo info;
      info.token = std::string(r.word("category token"));
      if (!is_category_token(info.token)) r.fail("bad category token '" + info.token + "'");
      if (cat.has_category(info.token)) invalid("duplicate category '" + info.token + "'");
      r.keyword("LABEL");
      info.label = r.quoted("label");
      r.keyword("KIND");
      auto kind = r.word("kind");
      if (kind == "anatomical") {
        info.kind = CategoryKind::kAnatomical;
      } else if (kind == "symbolic") {
        info.kind = CategoryKind::kSymbolic;
      } else {
        r.fail("kind must be anatomical or symbolic");
      }
      cat.schemas_.emplace(info.token, FacetSchema{info.token, {}});
      cat.categories_.push_back(std::move(info));
    } else if (kw == "FACET") {
      auto category = r.word("category");
      auto schema_it = cat.schemas_.find(category);
      if (schema_it == cat.schemas_.end()) {
        invalid("facet declared for unknown category '" + std::string(category) + "'");
      }
      Facet facet;
      facet.name = std::string(r.word("facet name"));
      if (!is_token(facet.name)) r.fail("bad facet name '" + facet.name + "'");
      if (schema_it->second.find(facet.name) != nullptr) {
        invalid("duplicate facet '" + facet.name + "' in category '" + std::string(category) + "'");
      }
      r.keyword("LABEL");
      facet.label = r.quoted("label");
      r.keyword("VALUES");
      for (auto v : split(r.word("values"), ',')) {
        if (!is_token(v)) r.fail("bad facet value '" + std::string(v) + "'");
        if (facet.contains(v)) {
          invalid("duplicate value '" + std::string(v) + "' in facet '" + facet.name + "'");
        }
        facet.domain.emplace_back(v);
      }
      schema_it->second.facets.push_back(std::move(facet));
    } else if (kw == "GLYPH") {
      PendingGlyph p;
      p.line_no = line_no;
      Glyph& g = p.glyph;
      g.id = parse_id(r, r.word("glyph id"));
      g.category = std::string(g.id.category());
      g.base_id = g.id;
      bool have_path = false;
      std::set<std::string> seen;
      while (!r.at_end()) {
        auto clause = std::string(r.word("clause"));
        if (!seen.insert(clause).second) r.fail("duplicate " + clause + " clause");
        if (clause == "BASE") {
          g.base_id = parse_id(r, r.word("base id"));
        } else if (clause == "FACETS") {
          for (auto kv : split(r.word("facet list"), ',')) {
            auto eq = kv.find('=');
            if (eq == kv.npos) r.fail("expected name=value, got '" + std::string(kv) + "'");
            auto name = std::string(kv.substr(0, eq));
            auto value = std::string(kv.substr(eq + 1));
            if (!is_token(name) || !is_token(value)) {
              r.fail("bad facet assignment '" + std::string(kv) + "'");
            }
            if (!g.facets.emplace(name, value).second) {
              invalid("glyph '" + g.id.str() + "' sets facet '" + name + "' twice");
            }
          }
        } else if (clause == "PATH") {
          g.path = r.quoted("path");
          have_path = true;
        } else if (clause == "ANCHOR") {
          auto xy = split(r.word("anchor"), ',');
          if (xy.size() != 2) r.fail("anchor must be <x>,<y>");
          g.anchor = {parse_number(r, xy[0]), parse_number(r, xy[1])};
        } else {
          r.fail("unknown GLYPH clause '" + clause + "'");
        }
      }
      if (!have_path) r.fail("GLYPH requires a PATH clause");
      pending.push_back(std::move(p));
    } else {
      r.fail("unknown keyword '" + std::string(kw) + "'");
    }
  }

  if (!have_header) throw Error(ErrorCode::kParse, "line 1: missing CATALOG line");
  if (cat.categories_.empty()) invalid("empty catalog");

  for (const auto& [category, schema] : cat.schemas_) {
    for (const auto& f : schema.facets) {
      if (f.domain.empty()) invalid("facet '" + f.name + "' of '" + category + "' has no values");
    }
  }

  std::set<GlyphId> ids;
  for (const auto& p : pending) {
    const Glyph& g = p.glyph;
    const std::string where = "glyph '" + g.id.str() + "' (line " + std::to_string(p.line_no) + ")";
    auto schema_it = cat.schemas_.find(g.category);
    if (schema_it == cat.schemas_.end()) invalid(where + ": unknown category '" + g.category + "'");
    if (!ids.insert(g.id).second) invalid(where + ": duplicate id");
    if (g.path.empty()) invalid(where + ": empty drawing");
    if (g.anchor.x < 0 || g.anchor.x > kArtBoxSize || g.anchor.y < 0 || g.anchor.y > kArtBoxSize) {
      invalid(where + ": anchor outside the 100x100 art box");
    }
    for (const auto& [name, value] : g.facets) {
      const Facet* f = schema_it->second.find(name);
      if (f == nullptr) invalid(where + ": facet '" + name + "' not in schema");
      if (!f->contains(value)) {
        invalid(where + ": value '" + value + "' outside domain of facet '" + name + "'");
      }
    }
  }
  for (const auto& p : pending) {
    const Glyph& g = p.glyph;
    if (!ids.contains(g.base_id)) {
      invalid("glyph '" + g.id.str() + "': base '" + g.base_id.str() + "' does not resolve");
    }
    if (g.base_id.category() != g.id.category()) {
      invalid("glyph '" + g.id.str() + "': base '" + g.base_id.str() + "' is in another category");
    }
  }

  cat.glyphs_.reserve(pending.size());
  for (auto& p : pending) cat.glyphs_.push_back(std::move(p.glyph));
  std::sort(cat.glyphs_.begin(), cat.glyphs_.end(),
            [](const Glyph& a, const Glyph& b) { return a.id < b.id; });

  for (const auto& info : cat.categories_) {
    std::string prefix = info.token + ":";
    auto first = std::lower_bound(cat.glyphs_.begin(), cat.glyphs_.end(), prefix,
                                  [](const Glyph& g, const std::string& key) {
                                    return g.id.str() < key;
                                  });
    auto last = first;
    while (last != cat.glyphs_.end() && last->id.str().starts_with(prefix)) ++last;
    cat.category_ranges_[info.token] = {
        static_cast<std::size_t>(first - cat.glyphs_.begin()),
        static_cast<std::size_t>(last - cat.glyphs_.begin())};
  }
  return cat;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kStorage, "cannot open catalog file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str());
}

std::vector<std::string> missing_editor_areas(const Catalog& catalog) {
  static const std::pair<const char*, CategoryKind> kRequired[] = {
      {"head", CategoryKind::kAnatomical},      {"shoulders", CategoryKind::kAnatomical},
      {"hands", CategoryKind::kAnatomical},     {"arms", CategoryKind::kAnatomical},
      {"punctuation", CategoryKind::kSymbolic}, {"contact", CategoryKind::kSymbolic},
  };
  std::vector<std::string> missing;
  for (const auto& [token, kind] : kRequired) {
    auto it = std::find_if(catalog.categories().begin(), catalog.categories().end(),
                           [&](const CategoryInfo& c) { return c.token == token; });
    if (it == catalog.categories().end() || it->kind != kind) missing.emplace_back(token);
  }
  return missing;
}

}  // namespace swift
