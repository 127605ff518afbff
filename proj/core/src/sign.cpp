#include "swift/sign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swift/error.hpp"

namespace swift {

namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;

// cos/sin of k * 45 degrees, tabulated so every platform sees the same bits.
constexpr double kCos[kRotationSteps] = {1, kHalfSqrt2, 0, -kHalfSqrt2, -1, -kHalfSqrt2, 0, kHalfSqrt2};
constexpr double kSin[kRotationSteps] = {0, kHalfSqrt2, 1, kHalfSqrt2, 0, -kHalfSqrt2, -1, -kHalfSqrt2};

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kValidation, message);
}

}  // namespace

void validate_sign(const Sign& sign) {
  if (sign.canvas_w < 1 || sign.canvas_h < 1 || sign.canvas_w > kMaxCanvas ||
      sign.canvas_h > kMaxCanvas) {
    invalid("canvas size out of range");
  }
  for (std::size_t i = 0; i < sign.placements.size(); ++i) {
    const auto& p = sign.placements[i];
    const std::string where = "placement " + std::to_string(i);
    if (p.glyph_id.empty()) invalid(where + ": missing glyph id");
    if (p.rot < 0 || p.rot >= kRotationSteps) invalid(where + ": rotation out of range");
    if (p.scale < kMinScale || p.scale > kMaxScale) invalid(where + ": scale out of range");
    if (!sign.contains(p.x, p.y)) invalid(where + ": anchor outside canvas");
  }
}

void validate_sign(const Sign& sign, const Catalog& catalog) {
  validate_sign(sign);
  for (const auto& p : sign.placements) {
    if (catalog.find_glyph(p.glyph_id) == nullptr) {
      throw Error(ErrorCode::kUnknownGlyph, "unknown glyph '" + p.glyph_id.str() + "'");
    }
  }
}

void check_selection(const Sign& sign, const Selection& sel) {
  if (!sel.indices.empty() && *sel.indices.rbegin() >= sign.placements.size()) {
    throw Error(ErrorCode::kInvalidSelection,
                "selection index " + std::to_string(*sel.indices.rbegin()) + " out of range (" +
                    std::to_string(sign.placements.size()) + " placements)");
  }
}

Sign add_glyph(const Sign& sign, const Catalog& catalog, const GlyphId& glyph_id, int x, int y) {
  if (catalog.find_glyph(glyph_id) == nullptr) {
    throw Error(ErrorCode::kUnknownGlyph, "unknown glyph '" + glyph_id.str() + "'");
  }
  if (!sign.contains(x, y)) {
    throw Error(ErrorCode::kOutOfCanvas, "position (" + std::to_string(x) + "," +
                                             std::to_string(y) + ") is outside the canvas");
  }
  Sign out = sign;
  out.placements.push_back(PlacedGlyph{glyph_id, x, y, 0, false, kNaturalScale});
  return out;
}

Sign move(const Sign& sign, const Selection& sel, int dx, int dy) {
  check_selection(sign, sel);
  Sign out = sign;
  for (std::size_t i : sel.indices) {
    auto& p = out.placements[i];
    long long nx = static_cast<long long>(p.x) + dx;
    long long ny = static_cast<long long>(p.y) + dy;
    if (nx < 0 || ny < 0 || nx > sign.canvas_w || ny > sign.canvas_h) {
      throw Error(ErrorCode::kOutOfCanvas,
                  "move would take placement " + std::to_string(i) + " outside the canvas");
    }
    p.x = static_cast<int>(nx);
    p.y = static_cast<int>(ny);
  }
  return out;
}

Sign rotate(const Sign& sign, const Selection& sel, RotateDirection direction) {
  check_selection(sign, sel);
  const int step = direction == RotateDirection::kCounterClockwise ? 1 : kRotationSteps - 1;
  Sign out = sign;
  for (std::size_t i : sel.indices) {
    auto& p = out.placements[i];
    p.rot = (p.rot + step) % kRotationSteps;
  }
  return out;
}

Sign mirror(const Sign& sign, const Selection& sel) {
  check_selection(sign, sel);
  Sign out = sign;
  for (std::size_t i : sel.indices) out.placements[i].mirrored = !out.placements[i].mirrored;
  return out;
}

Sign remove(const Sign& sign, const Selection& sel) {
  check_selection(sign, sel);
  Sign out = sign;
  out.placements.clear();
  for (std::size_t i = 0; i < sign.placements.size(); ++i) {
    if (!sel.indices.contains(i)) out.placements.push_back(sign.placements[i]);
  }
  return out;
}

Sign clear(const Sign& sign) {
  Sign out = sign;
  out.placements.clear();
  return out;
}

Sign resize(const Sign& sign, const Selection& sel, int scale) {
  check_selection(sign, sel);
  if (scale < kMinScale || scale > kMaxScale) {
    throw Error(ErrorCode::kOutOfRange, "scale " + std::to_string(scale) + " outside " +
                                            std::to_string(kMinScale) + ".." +
                                            std::to_string(kMaxScale));
  }
  Sign out = sign;
  for (std::size_t i : sel.indices) out.placements[i].scale = scale;
  return out;
}

Affine placement_transform(const PlacedGlyph& placement, const Glyph& glyph) {
  const double k = placement.scale / 1000.0;
  const double m = placement.mirrored ? -1.0 : 1.0;
  const double cs = kCos[placement.rot];
  const double sn = kSin[placement.rot];
  // Screen coordinates have +y down, so a visually counter-clockwise turn by
  // theta maps (x, y) to (x cos + y sin, -x sin + y cos).
  Affine t;
  t.a = m * k * cs;
  t.b = -m * k * sn;
  t.c = k * sn;
  t.d = k * cs;
  t.e = placement.x - (t.a * glyph.anchor.x + t.c * glyph.anchor.y);
  t.f = placement.y - (t.b * glyph.anchor.x + t.d * glyph.anchor.y);
  return t;
}

std::array<Point, 4> placed_corners(const PlacedGlyph& placement, const Glyph& glyph) {
  const Affine t = placement_transform(placement, glyph);
  return {t.apply({0, 0}), t.apply({kArtBoxSize, 0}), t.apply({kArtBoxSize, kArtBoxSize}),
          t.apply({0, kArtBoxSize})};
}

Rect bounding_box(const Sign& sign, const Catalog& catalog) {
  if (sign.placements.empty()) return {};
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& p : sign.placements) {
    const Glyph* g = catalog.find_glyph(p.glyph_id);
    if (g == nullptr) throw Error(ErrorCode::kUnknownGlyph, "unknown glyph '" + p.glyph_id.str() + "'");
    for (const Point& c : placed_corners(p, *g)) {
      min_x = std::min(min_x, c.x);
      min_y = std::min(min_y, c.y);
      max_x = std::max(max_x, c.x);
      max_y = std::max(max_y, c.y);
    }
  }
  // Snap away rounding noise (e.g. 199.99999999999997) before flooring.
  auto snap = [](double v) { return std::round(v * 1e6) / 1e6; };
  return {static_cast<int>(std::floor(snap(min_x))), static_cast<int>(std::floor(snap(min_y))),
          static_cast<int>(std::ceil(snap(max_x))), static_cast<int>(std::ceil(snap(max_y)))};
}

}  // namespace swift
