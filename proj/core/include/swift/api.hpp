#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "swift/catalog.hpp"
#include "swift/hints.hpp"
#include "swift/search.hpp"
#include "swift/sign.hpp"
#include "swift/store.hpp"

namespace swift {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr std::size_t kDefaultPageSize = 50;
inline constexpr std::size_t kMaxPageSize = 500;

/// Transport-neutral request; the HTTP layer only fills this in.
struct ApiRequest {
  std::string method;
  std::string path;  // without query string
  std::vector<std::pair<std::string, std::string>> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;

  nlohmann::json json() const { return nlohmann::json::parse(body); }
};

struct SessionState {
  std::string session_id;
  Sign sign;
  Selection selection;
  std::optional<std::string> last_area;

  friend bool operator==(const SessionState&, const SessionState&) = default;
};

struct ApiOptions {
  std::uint64_t tau = kDefaultTau;
  std::size_t hint_limit = kDefaultHintLimit;
  std::chrono::seconds session_ttl{60 * 60};
  std::function<std::chrono::steady_clock::time_point()> now;  // defaults to steady_clock
};

// JSON views of the domain types, shared by every endpoint.
nlohmann::json to_json(const Glyph& glyph);
nlohmann::json to_json(const Sign& sign);
nlohmann::json to_json(const SessionState& state);
nlohmann::json to_json(const SignRecord& record);
nlohmann::json to_json(const FacetSchema& schema);

/// The editor backend: routes requests onto the catalog, search, sign
/// model, hint engine, and store. Endpoints hold no logic of their own.
///
/// Edits to one session are applied under that session's lock, so a request
/// never observes a half-applied edit; sessions idle longer than the TTL are
/// dropped.
class ApiService {
 public:
  ApiService(std::shared_ptr<const Catalog> catalog, std::shared_ptr<SignStore> store,
             ApiOptions options = {});

  ApiResponse handle(const ApiRequest& request);

  const Catalog& catalog() const { return *catalog_; }
  const GlyphSearch& search() const { return search_; }
  SignStore& store() { return *store_; }
  const ApiOptions& options() const { return options_; }

  /// Snapshot of a session; nullopt when unknown or expired.
  std::optional<SessionState> session(const std::string& id);
  std::size_t session_count();

 private:
  struct Session {
    std::mutex mu;
    SessionState state;
    std::chrono::steady_clock::time_point last_used;
  };

  std::shared_ptr<Session> find_session(const std::string& id);
  void expire_sessions();
  std::chrono::steady_clock::time_point now() const;

  ApiResponse route(const ApiRequest& request);
  ApiResponse categories();
  ApiResponse schema(const std::string& category);
  ApiResponse glyphs(const std::string& category, const ApiRequest& request);
  ApiResponse create_session();
  ApiResponse get_session(const std::string& id);
  ApiResponse delete_session(const std::string& id);
  ApiResponse apply_op(const std::string& id, const std::string& body);
  ApiResponse session_hints(const std::string& id);
  ApiResponse save_session(const std::string& id, const std::string& body);
  ApiResponse export_session(const std::string& id, const ApiRequest& request);
  ApiResponse list_signs(const ApiRequest& request);
  ApiResponse get_sign(const std::string& id);
  ApiResponse export_sign(const std::string& id, const ApiRequest& request);
  ApiResponse health();

  ApiResponse export_as(const Sign& sign, const ApiRequest& request);

  std::shared_ptr<const Catalog> catalog_;
  std::shared_ptr<SignStore> store_;
  ApiOptions options_;
  GlyphSearch search_;

  std::mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

/// Applies one editing op (the JSON body of POST /sessions/{id}/ops) to a
/// session state. Throws swift::Error; the input is never modified.
SessionState apply_session_op(const SessionState& state, const Catalog& catalog,
                              const nlohmann::json& op);

}  // namespace swift
