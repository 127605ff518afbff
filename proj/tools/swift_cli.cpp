// swift: operational command line for the sign editor backend.
//
//   swift serve --catalog data/sample_catalog.txt --store signs.db
//   swift validate-catalog data/sample_catalog.txt
//   swift export 00000001 --fmt svg --catalog ... --store ...
//   swift stats --catalog ... --store ...
//
// Every option has a SWIFT_* environment override (e.g. SWIFT_PORT).

#include <csignal>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "swift/api.hpp"
#include "swift/catalog.hpp"
#include "swift/error.hpp"
#include "swift/hints.hpp"
#include "swift/http_server.hpp"
#include "swift/store.hpp"
#include "swift/svg.hpp"
#include "swift/text_format.hpp"

namespace {

struct DataOptions {
  std::string catalog;
  std::string store;
};

void add_data_options(CLI::App* cmd, DataOptions& opts) {
  cmd->add_option("--catalog", opts.catalog, "Catalog document")
      ->envname("SWIFT_CATALOG")
      ->required();
  cmd->add_option("--store", opts.store, "Sign store file (created if absent)")
      ->envname("SWIFT_STORE")
      ->required();
}

int run_serve(const DataOptions& data, swift::HttpOptions http, swift::ApiOptions api_opts) {
  auto catalog = std::make_shared<const swift::Catalog>(swift::load_catalog_file(data.catalog));
  auto store = std::make_shared<swift::SignStore>(data.store, *catalog);
  for (const auto& p : store->problems()) std::cerr << "store: " << p << "\n";
  for (const auto& area : swift::missing_editor_areas(*catalog)) {
    std::cerr << "catalog: warning: no '" << area << "' category\n";
  }

  swift::ApiService api(catalog, store, std::move(api_opts));
  swift::HttpServer server(api, http);
  const int port = server.bind();

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  waiter.detach();

  std::cout << "serving catalog '" << catalog->name() << "' (" << catalog->glyphs().size()
            << " glyphs, " << store->size() << " saved signs) on http://" << http.host << ":"
            << port << std::endl;
  server.run();
  return 0;
}

int run_validate(const std::string& path) {
  const swift::Catalog catalog = swift::load_catalog_file(path);
  std::cout << "catalog " << catalog.name() << " " << catalog.version() << ": "
            << catalog.categories().size() << " categories, " << catalog.glyphs().size()
            << " glyphs\n";
  for (const auto& c : catalog.categories()) {
    std::cout << "  " << c.token << " (" << swift::to_string(c.kind) << "): "
              << catalog.glyphs_in_category(c.token).size() << " glyphs, "
              << catalog.facet_schema(c.token).facets.size() << " facets\n";
  }
  for (const auto& area : swift::missing_editor_areas(catalog)) {
    std::cout << "warning: no '" << area << "' category for the glyph menu\n";
  }
  return 0;
}

int run_export(const DataOptions& data, const std::string& id, const std::string& fmt, bool crop) {
  const swift::Catalog catalog = swift::load_catalog_file(data.catalog);
  swift::SignStore store(data.store, catalog);
  const swift::SignRecord rec = store.load(id);
  if (fmt == "svg") {
    std::cout << swift::export_svg(rec.sign, catalog, crop);
  } else {
    std::cout << swift::serialize_text(rec.sign) << "\n";
  }
  return 0;
}

int run_stats(const DataOptions& data, std::size_t top) {
  const swift::Catalog catalog = swift::load_catalog_file(data.catalog);
  swift::SignStore store(data.store, catalog);
  const auto table = store.table();
  std::cout << "sign_total " << table->sign_total() << "\n";
  for (const auto& [pair, count] : swift::top_pairs(*table, top)) {
    std::cout << count << "\t" << pair.first.str() << "\t" << pair.second.str() << "\n";
  }
  for (const auto& p : store.problems()) std::cerr << "store: " << p << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign editor backend: catalog validation, export, statistics and the HTTP API"};
  app.require_subcommand(1);

  DataOptions data;
  swift::HttpOptions http;
  swift::ApiOptions api_opts;
  long ttl_minutes = 60;

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  add_data_options(serve, data);
  serve->add_option("--host", http.host, "Listen address")->envname("SWIFT_HOST")->capture_default_str();
  serve->add_option("--port", http.port, "Listen port (0 = any)")->envname("SWIFT_PORT")->capture_default_str();
  serve->add_option("--tau", api_opts.tau, "Minimum co-occurrence count for a hint")
      ->envname("SWIFT_TAU")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  serve->add_option("--hint-limit", api_opts.hint_limit, "Hints returned per query")
      ->envname("SWIFT_HINT_LIMIT")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  serve->add_option("--session-ttl", ttl_minutes, "Idle session timeout in minutes")
      ->envname("SWIFT_SESSION_TTL")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  serve->add_option("--cors-origin", http.cors_origin, "Access-Control-Allow-Origin value")
      ->envname("SWIFT_CORS_ORIGIN")
      ->capture_default_str();
  serve->add_option("--static-dir", http.static_dir, "Editor UI bundle to serve at /")
      ->envname("SWIFT_STATIC_DIR");

  std::string catalog_path;
  auto* validate = app.add_subcommand("validate-catalog", "Load and validate a catalog document");
  validate->add_option("path", catalog_path, "Catalog document")->required();

  std::string export_id;
  std::string fmt = "swt";
  bool crop = false;
  auto* exp = app.add_subcommand("export", "Print a stored sign as SWT1 text or SVG");
  add_data_options(exp, data);
  exp->add_option("id", export_id, "Store id, e.g. 00000001")->required();
  exp->add_option("--fmt", fmt, "Output format")->check(CLI::IsMember({"swt", "svg"}))->capture_default_str();
  exp->add_flag("--crop", crop, "Crop SVG to the sign's bounding box");

  std::size_t top = 10;
  auto* stats = app.add_subcommand("stats", "Print corpus size and top co-occurring base glyphs");
  add_data_options(stats, data);
  stats->add_option("--top", top, "Number of pairs to list")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve) {
      api_opts.session_ttl = std::chrono::minutes(ttl_minutes);
      return run_serve(data, http, api_opts);
    }
    if (*validate) return run_validate(catalog_path);
    if (*exp) return run_export(data, export_id, fmt, crop);
    if (*stats) return run_stats(data, top);
  } catch (const swift::Error& e) {
    std::cerr << "error: " << swift::to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
