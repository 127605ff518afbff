// Renders every sign of an SWT1 corpus as text, full SVG and cropped SVG.
// The acceptance suite runs this twice and compares the bytes.
//
//   swift_export_dump <catalog> <corpus.swt>

#include <fstream>
#include <iostream>
#include <string>

#include "swift/catalog.hpp"
#include "swift/error.hpp"
#include "swift/svg.hpp"
#include "swift/text_format.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <catalog> <corpus.swt>\n";
    return 2;
  }
  try {
    const swift::Catalog catalog = swift::load_catalog_file(argv[1]);
    std::ifstream in(argv[2]);
    if (!in) {
      std::cerr << "cannot open " << argv[2] << "\n";
      return 1;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const swift::Sign sign = swift::parse_text(line, catalog);
      std::cout << swift::serialize_text(sign) << "\n"
                << swift::export_svg(sign, catalog, false)
                << swift::export_svg(sign, catalog, true);
    }
  } catch (const swift::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
