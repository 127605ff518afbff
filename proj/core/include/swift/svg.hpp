#pragma once

#include <string>

#include "swift/catalog.hpp"
#include "swift/sign.hpp"

namespace swift {

/// Renders a sign as a standalone SVG document, one <g> per placement in
/// z-order carrying the placement transform as an SVG matrix. With `crop`
/// the document covers bounding_box() instead of the whole canvas. Output
/// is byte-identical for equal inputs. Throws kUnknownGlyph.
std::string export_svg(const Sign& sign, const Catalog& catalog, bool crop);

/// Fixed-point rendering used in SVG output: at most six decimals, trailing
/// zeros dropped, never "-0".
std::string format_number(double value);

}  // namespace swift
