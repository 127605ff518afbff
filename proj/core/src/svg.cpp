#include "swift/svg.hpp"

#include <charconv>
#include <cmath>

#include "swift/error.hpp"

namespace swift {

std::string format_number(double value) {
  if (std::abs(value) < 5e-7) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  std::string s(buf, ec == std::errc() ? end : buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

namespace {

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string export_svg(const Sign& sign, const Catalog& catalog, bool crop) {
  Rect frame{0, 0, sign.canvas_w, sign.canvas_h};
  if (crop) frame = bounding_box(sign, catalog);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(frame.width()) +
         "\" height=\"" + std::to_string(frame.height()) + "\" viewBox=\"" +
         std::to_string(frame.x0) + " " + std::to_string(frame.y0) + " " +
         std::to_string(frame.width()) + " " + std::to_string(frame.height()) +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"4\" stroke-linejoin=\"round\">\n";
  for (const auto& p : sign.placements) {
    const Glyph* g = catalog.find_glyph(p.glyph_id);
    if (g == nullptr) throw Error(ErrorCode::kUnknownGlyph, "unknown glyph '" + p.glyph_id.str() + "'");
    const Affine t = placement_transform(p, *g);
    out += "<g data-glyph=\"" + escape_xml(p.glyph_id.str()) + "\" transform=\"matrix(" +
           format_number(t.a) + " " + format_number(t.b) + " " + format_number(t.c) + " " +
           format_number(t.d) + " " + format_number(t.e) + " " + format_number(t.f) +
           ")\"><path d=\"" + escape_xml(g->path) + "\"/></g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace swift
