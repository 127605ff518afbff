#include "swift/http_server.hpp"

#include <httplib.h>

#include "swift/error.hpp"

namespace swift {

struct HttpServer::Impl {
  ApiService& api;
  HttpOptions options;
  httplib::Server server;
  int port = -1;

  Impl(ApiService& a, HttpOptions o) : api(a), options(std::move(o)) {}

  void dispatch(const httplib::Request& req, httplib::Response& res) {
    ApiRequest request;
    request.method = req.method;
    request.path = req.path;
    request.body = req.body;
    for (const auto& [k, v] : req.params) request.query.emplace_back(k, v);
    ApiResponse out = api.handle(request);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  }
};

HttpServer::HttpServer(ApiService& api, HttpOptions options)
    : impl_(std::make_unique<Impl>(api, std::move(options))) {
  auto& srv = impl_->server;
  Impl* impl = impl_.get();
  auto handler = [impl](const httplib::Request& req, httplib::Response& res) {
    impl->dispatch(req, res);
  };
  srv.Get("/api/.*", handler);
  srv.Post("/api/.*", handler);
  srv.Delete("/api/.*", handler);
  srv.Options("/api/.*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  srv.set_post_routing_handler([impl](const httplib::Request&, httplib::Response& res) {
    if (impl->options.cors_origin.empty()) return;
    res.set_header("Access-Control-Allow-Origin", impl->options.cors_origin);
    res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
  if (!impl_->options.static_dir.empty() &&
      !srv.set_mount_point("/", impl_->options.static_dir)) {
    throw Error(ErrorCode::kStorage, "static directory '" + impl_->options.static_dir +
                                         "' does not exist");
  }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  auto& o = impl_->options;
  if (o.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(o.host);
  } else {
    impl_->port = impl_->server.bind_to_port(o.host, o.port) ? o.port : -1;
  }
  if (impl_->port < 0) {
    throw Error(ErrorCode::kStorage,
                "cannot bind " + o.host + ":" + std::to_string(o.port));
  }
  return impl_->port;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace swift
