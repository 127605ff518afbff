#pragma once

#include <memory>
#include <string>

#include "swift/api.hpp"

namespace swift {

struct HttpOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string cors_origin = "*";
  std::string static_dir;  // optional editor bundle served at /
};

/// HTTP/1.1 front end for an ApiService.
class HttpServer {
 public:
  HttpServer(ApiService& api, HttpOptions options);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket and returns the bound port. Throws kStorage on failure.
  int bind();
  /// Blocks serving requests until stop().
  void run();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace swift
