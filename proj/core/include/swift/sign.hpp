#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swift/catalog.hpp"

namespace swift {

inline constexpr int kDefaultCanvas = 500;
inline constexpr int kMaxCanvas = 100000;
inline constexpr int kMinScale = 100;
inline constexpr int kMaxScale = 4000;
inline constexpr int kNaturalScale = 1000;
inline constexpr int kRotationSteps = 8;

/// A glyph on the canvas. The anchor sits at (x, y); +y points down.
/// rot counts counter-clockwise 45 degree steps, scale is per-mille.
struct PlacedGlyph {
  GlyphId glyph_id;
  int x = 0;
  int y = 0;
  int rot = 0;
  bool mirrored = false;
  int scale = kNaturalScale;

  friend bool operator==(const PlacedGlyph&, const PlacedGlyph&) = default;
};

struct Sign {
  std::string id;  // empty until saved
  int canvas_w = kDefaultCanvas;
  int canvas_h = kDefaultCanvas;
  std::vector<PlacedGlyph> placements;  // z-order, last on top
  std::optional<std::string> label;

  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x <= canvas_w && y <= canvas_h; }
  friend bool operator==(const Sign&, const Sign&) = default;
};

struct Selection {
  std::set<std::size_t> indices;

  static Selection of(std::initializer_list<std::size_t> idx) {
    return Selection{std::set<std::size_t>(idx)};
  }
  friend bool operator==(const Selection&, const Selection&) = default;
};

enum class RotateDirection { kClockwise, kCounterClockwise };

/// Throws kValidation when a sign breaks a placement or canvas invariant.
void validate_sign(const Sign& sign);
/// validate_sign plus every glyph id resolving (kUnknownGlyph otherwise).
void validate_sign(const Sign& sign, const Catalog& catalog);

// Toolbox operations. All are pure; invalid input throws and produces nothing.

Sign add_glyph(const Sign& sign, const Catalog& catalog, const GlyphId& glyph_id, int x, int y);
/// Rejected atomically (kOutOfCanvas) if any moved anchor would leave the canvas.
Sign move(const Sign& sign, const Selection& sel, int dx, int dy);
Sign rotate(const Sign& sign, const Selection& sel, RotateDirection direction);
Sign mirror(const Sign& sign, const Selection& sel);
Sign remove(const Sign& sign, const Selection& sel);
Sign clear(const Sign& sign);
/// Sets the per-mille scale of the selection; kOutOfRange outside 100..4000.
Sign resize(const Sign& sign, const Selection& sel, int scale);

/// Throws kInvalidSelection when an index is past the last placement.
void check_selection(const Sign& sign, const Selection& sel);

/// 2D affine map x' = a*x + c*y + e, y' = b*x + d*y + f (SVG matrix order).
struct Affine {
  double a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;

  Point apply(Point p) const { return {a * p.x + c * p.y + e, b * p.x + d * p.y + f}; }
};

/// Maps glyph-local art coordinates to canvas coordinates: scale, then
/// horizontal mirror, then rotation, all about the anchor, then translation
/// of the anchor to (x, y).
Affine placement_transform(const PlacedGlyph& placement, const Glyph& glyph);

/// Corners of the transformed 100x100 art box.
std::array<Point, 4> placed_corners(const PlacedGlyph& placement, const Glyph& glyph);

struct Rect {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;

  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Smallest integer rectangle holding every transformed art box; the empty
/// sign yields (0,0,0,0). Throws kUnknownGlyph.
Rect bounding_box(const Sign& sign, const Catalog& catalog);

}  // namespace swift
