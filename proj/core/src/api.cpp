#include "swift/api.hpp"

#include <charconv>
#include <random>

#include "swift/error.hpp"
#include "swift/svg.hpp"
#include "swift/text_format.hpp"

namespace swift {

using nlohmann::json;

namespace {

ApiResponse json_response(int status, const json& body) {
  return ApiResponse{status, "application/json", body.dump()};
}

ApiResponse error_response(int status, std::string_view code, const std::string& message) {
  return json_response(status, json{{"error", {{"code", code}, {"message", message}}}});
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
    case ErrorCode::kUnknownCategory:
      return 404;
    case ErrorCode::kStorage:
    case ErrorCode::kCorruptRecord:
      return 500;
    case ErrorCode::kBadRequest:
    case ErrorCode::kUnknownFacet:
    case ErrorCode::kFacetDomain:
    case ErrorCode::kParse:
    case ErrorCode::kSyntax:
      return 400;
    default:
      return 422;
  }
}

[[noreturn]] void bad_request(const std::string& message) {
  throw Error(ErrorCode::kBadRequest, message);
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start < path.size()) {
    auto next = path.find('/', start);
    if (next == std::string::npos) next = path.size();
    if (next > start) parts.push_back(path.substr(start, next - start));
    start = next + 1;
  }
  return parts;
}

std::optional<std::string> query_param(const ApiRequest& req, std::string_view name) {
  std::optional<std::string> found;
  for (const auto& [k, v] : req.query) {
    if (k != name) continue;
    if (found) bad_request("parameter '" + std::string(name) + "' given twice");
    found = v;
  }
  return found;
}

std::size_t parse_count(const std::string& text, std::string_view name) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    bad_request("parameter '" + std::string(name) + "' must be a non-negative integer");
  }
  return v;
}

std::pair<std::size_t, std::size_t> page_params(const ApiRequest& req) {
  std::size_t offset = 0;
  std::size_t limit = kDefaultPageSize;
  if (auto v = query_param(req, "offset")) offset = parse_count(*v, "offset");
  if (auto v = query_param(req, "limit")) limit = parse_count(*v, "limit");
  if (limit < 1 || limit > kMaxPageSize) {
    bad_request("limit must be between 1 and " + std::to_string(kMaxPageSize));
  }
  return {offset, limit};
}

json parse_body(const std::string& body) {
  if (body.empty()) return json::object();
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) bad_request("body must be a JSON object");
  return j;
}

int int_arg(const json& op, const char* name) {
  auto it = op.find(name);
  if (it == op.end() || !it->is_number_integer()) {
    throw Error(ErrorCode::kValidation, std::string("op needs integer '") + name + "'");
  }
  auto v = it->get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::kOutOfRange, std::string("'") + name + "' out of range");
  }
  return static_cast<int>(v);
}

std::string string_arg(const json& op, const char* name) {
  auto it = op.find(name);
  if (it == op.end() || !it->is_string()) {
    throw Error(ErrorCode::kValidation, std::string("op needs string '") + name + "'");
  }
  return it->get<std::string>();
}

Selection selection_arg(const json& op, const Selection& fallback) {
  auto it = op.find("indices");
  if (it == op.end()) return fallback;
  if (!it->is_array()) throw Error(ErrorCode::kValidation, "'indices' must be an array");
  Selection sel;
  for (const auto& v : *it) {
    if (!v.is_number_unsigned()) {
      throw Error(ErrorCode::kInvalidSelection, "selection indices must be non-negative integers");
    }
    sel.indices.insert(v.get<std::size_t>());
  }
  return sel;
}

}  // namespace

json to_json(const Glyph& glyph) {
  return json{{"id", glyph.id.str()},
              {"base", glyph.base_id.str()},
              {"category", glyph.category},
              {"facets", glyph.facets},
              {"path", glyph.path},
              {"anchor", {glyph.anchor.x, glyph.anchor.y}}};
}

json to_json(const Sign& sign) {
  json placements = json::array();
  for (const auto& p : sign.placements) {
    placements.push_back({{"glyph", p.glyph_id.str()},
                          {"x", p.x},
                          {"y", p.y},
                          {"rot", p.rot},
                          {"mirrored", p.mirrored},
                          {"scale", p.scale}});
  }
  return json{{"id", sign.id},
              {"canvas", {{"w", sign.canvas_w}, {"h", sign.canvas_h}}},
              {"label", sign.label ? json(*sign.label) : json(nullptr)},
              {"placements", std::move(placements)},
              {"swt", serialize_text(sign)}};
}

json to_json(const SessionState& state) {
  return json{{"session_id", state.session_id},
              {"sign", to_json(state.sign)},
              {"selection", state.selection.indices},
              {"last_area", state.last_area ? json(*state.last_area) : json(nullptr)}};
}

json to_json(const SignRecord& record) {
  json glyphs = json::array();
  for (const auto& g : record.glyph_list) glyphs.push_back(g.str());
  return json{{"id", record.id},
              {"saved_at", format_utc(record.saved_at)},
              {"label", record.sign.label ? json(*record.sign.label) : json(nullptr)},
              {"glyph_list", std::move(glyphs)},
              {"swt", serialize_text(record.sign)},
              {"record", format_record_line(record)},
              {"sign", to_json(record.sign)}};
}

json to_json(const FacetSchema& schema) {
  json facets = json::array();
  for (const auto& f : schema.facets) {
    facets.push_back({{"name", f.name}, {"label", f.label}, {"values", f.domain}});
  }
  return json{{"category", schema.category}, {"facets", std::move(facets)}};
}

SessionState apply_session_op(const SessionState& state, const Catalog& catalog, const json& op) {
  if (!op.is_object()) throw Error(ErrorCode::kValidation, "op must be a JSON object");
  const std::string name = string_arg(op, "op");
  SessionState next = state;
  const Selection sel = selection_arg(op, state.selection);

  if (name == "add") {
    next.sign = add_glyph(state.sign, catalog, GlyphId::parse(string_arg(op, "glyph")),
                          int_arg(op, "x"), int_arg(op, "y"));
  } else if (name == "move") {
    next.sign = move(state.sign, sel, int_arg(op, "dx"), int_arg(op, "dy"));
  } else if (name == "rotate") {
    const std::string dir = string_arg(op, "direction");
    if (dir != "cw" && dir != "ccw") {
      throw Error(ErrorCode::kValidation, "direction must be cw or ccw");
    }
    next.sign = rotate(state.sign, sel,
                       dir == "ccw" ? RotateDirection::kCounterClockwise : RotateDirection::kClockwise);
  } else if (name == "mirror") {
    next.sign = mirror(state.sign, sel);
  } else if (name == "delete") {
    next.sign = remove(state.sign, sel);
    next.selection = {};
  } else if (name == "clear") {
    next.sign = clear(state.sign);
    next.selection = {};
  } else if (name == "scale") {
    next.sign = resize(state.sign, sel, int_arg(op, "scale"));
  } else if (name == "select") {
    if (!op.contains("indices")) throw Error(ErrorCode::kValidation, "select needs 'indices'");
    check_selection(state.sign, sel);
    next.selection = sel;
  } else if (name == "set_area") {
    auto it = op.find("area");
    if (it == op.end() || it->is_null()) {
      next.last_area.reset();
    } else {
      const std::string area = string_arg(op, "area");
      if (!catalog.has_category(area)) {
        throw Error(ErrorCode::kValidation, "unknown area '" + area + "'");
      }
      next.last_area = area;
    }
  } else {
    throw Error(ErrorCode::kValidation, "unknown op '" + name + "'");
  }
  return next;
}

ApiService::ApiService(std::shared_ptr<const Catalog> catalog, std::shared_ptr<SignStore> store,
                       ApiOptions options)
    : catalog_(std::move(catalog)),
      store_(std::move(store)),
      options_(std::move(options)),
      search_(*catalog_) {
  if (options_.tau < 1) throw Error(ErrorCode::kValidation, "tau must be at least 1");
  if (options_.hint_limit < 1) throw Error(ErrorCode::kValidation, "hint limit must be positive");
}

std::chrono::steady_clock::time_point ApiService::now() const {
  return options_.now ? options_.now() : std::chrono::steady_clock::now();
}

void ApiService::expire_sessions() {
  const auto cutoff = now() - options_.session_ttl;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::lock_guard lock(it->second->mu);
    if (it->second->last_used < cutoff) {
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
}

std::shared_ptr<ApiService::Session> ApiService::find_session(const std::string& id) {
  std::lock_guard lock(sessions_mu_);
  expire_sessions();
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::kNotFound, "session '" + id + "' not found");
  return it->second;
}

std::optional<SessionState> ApiService::session(const std::string& id) {
  try {
    auto s = find_session(id);
    std::lock_guard lock(s->mu);
    return s->state;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::size_t ApiService::session_count() {
  std::lock_guard lock(sessions_mu_);
  expire_sessions();
  return sessions_.size();
}

ApiResponse ApiService::handle(const ApiRequest& request) {
  try {
    return route(request);
  } catch (const Error& e) {
    return error_response(status_for(e.code()), to_string(e.code()), e.what());
  } catch (const json::exception& e) {
    return error_response(400, "bad_request", e.what());
  }
}

ApiResponse ApiService::route(const ApiRequest& req) {
  const auto parts = split_path(req.path);
  const std::size_t n = parts.size();
  const bool get = req.method == "GET";
  const bool post = req.method == "POST";
  const bool del = req.method == "DELETE";

  if (n < 2 || parts[0] != "api") {
    return error_response(404, "not_found", "no route for " + req.path);
  }
  const std::string& head = parts[1];

  if (head == "health" && n == 2 && get) return health();
  if (head == "catalog") {
    if (n == 3 && parts[2] == "categories" && get) return categories();
    if (n == 4 && parts[3] == "schema" && get) return schema(parts[2]);
    if (n == 4 && parts[3] == "glyphs" && get) return glyphs(parts[2], req);
  }
  if (head == "sessions") {
    if (n == 2 && post) return create_session();
    if (n == 3 && get) return get_session(parts[2]);
    if (n == 3 && del) return delete_session(parts[2]);
    if (n == 4 && parts[3] == "ops" && post) return apply_op(parts[2], req.body);
    if (n == 4 && parts[3] == "hints" && get) return session_hints(parts[2]);
    if (n == 4 && parts[3] == "save" && post) return save_session(parts[2], req.body);
    if (n == 4 && parts[3] == "export" && get) return export_session(parts[2], req);
  }
  if (head == "signs") {
    if (n == 2 && get) return list_signs(req);
    if (n == 3 && get) return get_sign(parts[2]);
    if (n == 4 && parts[3] == "export" && get) return export_sign(parts[2], req);
  }
  return error_response(404, "not_found", "no route for " + req.method + " " + req.path);
}

ApiResponse ApiService::health() {
  return json_response(200, {{"version", kVersion},
                             {"catalog", catalog_->name()},
                             {"catalog_version", catalog_->version()},
                             {"sign_total", store_->table()->sign_total()}});
}

ApiResponse ApiService::categories() {
  json out = json::array();
  for (const auto& c : catalog_->categories()) {
    out.push_back({{"token", c.token}, {"label", c.label}, {"kind", to_string(c.kind)}});
  }
  return json_response(200, {{"categories", std::move(out)}});
}

ApiResponse ApiService::schema(const std::string& category) {
  return json_response(200, to_json(catalog_->facet_schema(category)));
}

ApiResponse ApiService::glyphs(const std::string& category, const ApiRequest& req) {
  auto [offset, limit] = page_params(req);
  FacetQuery query = search_.new_query(category);
  for (const auto& [key, value] : req.query) {
    if (key == "offset" || key == "limit") continue;
    if (query.selections.contains(key)) bad_request("facet '" + key + "' given twice");
    query = search_.set_facet(query, key, value);
  }
  const auto results = search_.execute(query);
  json page = json::array();
  for (std::size_t i = offset; i < results.size() && page.size() < limit; ++i) {
    page.push_back(to_json(*results[i]));
  }
  return json_response(200, {{"category", category},
                             {"selections", query.selections},
                             {"total", results.size()},
                             {"offset", offset},
                             {"limit", limit},
                             {"glyphs", std::move(page)},
                             {"remaining_counts", search_.remaining_counts(query)}});
}

ApiResponse ApiService::create_session() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  auto s = std::make_shared<Session>();
  s->last_used = now();
  std::lock_guard lock(sessions_mu_);
  expire_sessions();
  std::string id;
  do {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng()));
    id = buf;
  } while (sessions_.contains(id));
  s->state.session_id = id;
  sessions_.emplace(id, s);
  return json_response(201, to_json(s->state));
}

ApiResponse ApiService::get_session(const std::string& id) {
  auto s = find_session(id);
  std::lock_guard lock(s->mu);
  s->last_used = now();
  return json_response(200, to_json(s->state));
}

ApiResponse ApiService::delete_session(const std::string& id) {
  std::lock_guard lock(sessions_mu_);
  if (sessions_.erase(id) == 0) {
    return error_response(404, "not_found", "session '" + id + "' not found");
  }
  return json_response(200, {{"deleted", id}});
}

ApiResponse ApiService::apply_op(const std::string& id, const std::string& body) {
  auto s = find_session(id);
  const json op = parse_body(body);
  std::lock_guard lock(s->mu);
  s->last_used = now();
  try {
    s->state = apply_session_op(s->state, *catalog_, op);
  } catch (const Error& e) {
    return error_response(422, to_string(e.code()), e.what());
  }
  return json_response(200, to_json(s->state));
}

ApiResponse ApiService::session_hints(const std::string& id) {
  auto s = find_session(id);
  SessionState state;
  {
    std::lock_guard lock(s->mu);
    s->last_used = now();
    state = s->state;
  }
  json out{{"area", state.last_area ? json(*state.last_area) : json(nullptr)},
           {"tau", options_.tau},
           {"limit", options_.hint_limit}};
  if (!state.last_area) {
    out["hints"] = json::array();
    out["total"] = 0;
    out["hint_count"] = 0;
    return json_response(200, out);
  }
  std::vector<GlyphId> placed;
  for (const auto& p : state.sign.placements) placed.push_back(p.glyph_id);
  const auto table = store_->table();
  const HintResult result =
      hints(*table, *catalog_, *state.last_area, placed, options_.tau, options_.hint_limit);
  json list = json::array();
  for (const auto& h : result.hints) list.push_back({{"glyph", to_json(*h.glyph)}, {"score", h.score}});
  out["hints"] = std::move(list);
  out["total"] = result.total;
  out["hint_count"] = hint_count(*table, *catalog_, *state.last_area, placed, options_.tau);
  return json_response(200, out);
}

ApiResponse ApiService::save_session(const std::string& id, const std::string& body) {
  auto s = find_session(id);
  const json req = parse_body(body);
  std::lock_guard lock(s->mu);
  s->last_used = now();
  Sign sign = s->state.sign;
  if (auto it = req.find("label"); it != req.end()) {
    if (it->is_string()) {
      sign.label = it->get<std::string>();
    } else if (!it->is_null()) {
      bad_request("label must be a string");
    }
  }
  const SignRecord rec = store_->save(sign);
  return json_response(201, to_json(rec));
}

ApiResponse ApiService::export_as(const Sign& sign, const ApiRequest& req) {
  const std::string fmt = query_param(req, "fmt").value_or("swt");
  if (fmt == "swt") return ApiResponse{200, "text/plain; charset=utf-8", serialize_text(sign)};
  if (fmt == "svg") {
    const std::string crop = query_param(req, "crop").value_or("0");
    if (crop != "0" && crop != "1") bad_request("crop must be 0 or 1");
    return ApiResponse{200, "image/svg+xml", export_svg(sign, *catalog_, crop == "1")};
  }
  bad_request("fmt must be swt or svg");
}

ApiResponse ApiService::export_session(const std::string& id, const ApiRequest& req) {
  auto s = find_session(id);
  Sign sign;
  {
    std::lock_guard lock(s->mu);
    s->last_used = now();
    sign = s->state.sign;
  }
  return export_as(sign, req);
}

ApiResponse ApiService::list_signs(const ApiRequest& req) {
  auto [offset, limit] = page_params(req);
  json out = json::array();
  for (const auto& s : store_->list(offset, limit)) {
    out.push_back({{"id", s.id},
                   {"label", s.label ? json(*s.label) : json(nullptr)},
                   {"saved_at", format_utc(s.saved_at)},
                   {"glyph_count", s.glyph_count}});
  }
  return json_response(200, {{"signs", std::move(out)},
                             {"offset", offset},
                             {"limit", limit},
                             {"total", store_->size()}});
}

ApiResponse ApiService::get_sign(const std::string& id) {
  return json_response(200, to_json(store_->load(id)));
}

ApiResponse ApiService::export_sign(const std::string& id, const ApiRequest& req) {
  return export_as(store_->load(id).sign, req);
}

}  // namespace swift
