#pragma once

#include <string>
#include <string_view>

#include "swift/catalog.hpp"
#include "swift/sign.hpp"

namespace swift {

/// SWT1, the single-line text form of a sign:
///
///   SWIFT1;C<w>x<h>;G<category:local>@<x>,<y>r<rot>m<0|1>s<scale>;G...
///
/// Placements appear in z-order. Integers carry no sign and no leading
/// zeros. The sign's id and label are not part of the text form.
std::string serialize_text(const Sign& sign);

/// Parses SWT1 without consulting a catalog. Throws kSyntax (with the byte
/// position and the expected token) or kOutOfRange (rot > 7, scale outside
/// 100..4000, canvas size, anchor off the canvas).
Sign parse_text(std::string_view text);

/// As above, then rejects glyph ids the catalog lacks with kUnknownGlyph.
Sign parse_text(std::string_view text, const Catalog& catalog);

}  // namespace swift
