#include "swift/text_format.hpp"

#include "swift/error.hpp"

namespace swift {

namespace {

constexpr std::string_view kMagic = "SWIFT1";
// Anything longer cannot be a valid field and would overflow int.
constexpr std::size_t kMaxIntDigits = 9;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Sign parse() {
    Sign sign;
    sign.placements.clear();
    if (text_.substr(0, kMagic.size()) != kMagic) syntax("'SWIFT1'");
    pos_ = kMagic.size();
    expect(';');
    expect('C');
    std::size_t at = pos_;
    sign.canvas_w = integer();
    expect('x');
    sign.canvas_h = integer();
    if (sign.canvas_w < 1 || sign.canvas_h < 1 || sign.canvas_w > kMaxCanvas ||
        sign.canvas_h > kMaxCanvas) {
      range(at, "canvas size");
    }
    while (pos_ < text_.size()) {
      expect(';');
      sign.placements.push_back(placement(sign));
    }
    return sign;
  }

 private:
  [[noreturn]] void syntax(const std::string& expected) const {
    throw Error(ErrorCode::kSyntax,
                "position " + std::to_string(pos_) + ": expected " + expected);
  }

  [[noreturn]] void range(std::size_t at, const std::string& what) const {
    throw Error(ErrorCode::kOutOfRange,
                "position " + std::to_string(at) + ": " + what + " out of range");
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) syntax(std::string("'") + c + "'");
    ++pos_;
  }

  bool digit_at(std::size_t i) const {
    return i < text_.size() && text_[i] >= '0' && text_[i] <= '9';
  }

  int integer() {
    if (!digit_at(pos_)) syntax("integer");
    std::size_t start = pos_;
    if (text_[pos_] == '0') {
      ++pos_;
      if (digit_at(pos_)) syntax("delimiter after 0 (leading zeros are not allowed)");
      return 0;
    }
    while (digit_at(pos_)) ++pos_;
    if (pos_ - start > kMaxIntDigits) range(start, "integer");
    int v = 0;
    for (std::size_t i = start; i < pos_; ++i) v = v * 10 + (text_[i] - '0');
    return v;
  }

  std::string_view token(bool allow_upper, const char* what) {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
                (allow_upper && c >= 'A' && c <= 'Z');
      if (!ok) break;
      ++pos_;
    }
    if (start == pos_) syntax(what);
    return text_.substr(start, pos_ - start);
  }

  PlacedGlyph placement(const Sign& sign) {
    PlacedGlyph p;
    expect('G');
    auto category = token(false, "glyph category");
    expect(':');
    auto local = token(true, "glyph name");
    p.glyph_id = GlyphId(category, local);
    expect('@');
    std::size_t at = pos_;
    p.x = integer();
    expect(',');
    p.y = integer();
    if (!sign.contains(p.x, p.y)) range(at, "anchor position");
    expect('r');
    at = pos_;
    if (!digit_at(pos_)) syntax("rotation digit");
    p.rot = text_[pos_++] - '0';
    if (p.rot >= kRotationSteps) range(at, "rotation");
    expect('m');
    if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1')) syntax("mirror bit");
    p.mirrored = text_[pos_++] == '1';
    expect('s');
    at = pos_;
    p.scale = integer();
    if (p.scale < kMinScale || p.scale > kMaxScale) range(at, "scale");
    return p;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_text(const Sign& sign) {
  std::string out;
  out.reserve(16 + sign.placements.size() * 40);
  out += kMagic;
  out += ";C" + std::to_string(sign.canvas_w) + "x" + std::to_string(sign.canvas_h);
  for (const auto& p : sign.placements) {
    out += ";G";
    out += p.glyph_id.str();
    out += "@" + std::to_string(p.x) + "," + std::to_string(p.y);
    out += "r" + std::to_string(p.rot);
    out += p.mirrored ? "m1" : "m0";
    out += "s" + std::to_string(p.scale);
  }
  return out;
}

Sign parse_text(std::string_view text) { return Parser(text).parse(); }

Sign parse_text(std::string_view text, const Catalog& catalog) {
  Sign sign = parse_text(text);
  for (const auto& p : sign.placements) {
    if (catalog.find_glyph(p.glyph_id) == nullptr) {
      throw Error(ErrorCode::kUnknownGlyph, "unknown glyph '" + p.glyph_id.str() + "'");
    }
  }
  return sign;
}

}  // namespace swift
