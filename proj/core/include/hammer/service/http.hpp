#pragma once

#include <map>
#include <memory>
#include <string>
#include <thread>

#include "hammer/service/service.hpp"

namespace httplib {
class Server;
}

namespace hammer::service {

struct ApiRequest {
  std::string method;  // GET | POST
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Maps the JSON API onto a service. Every JSON body carries
/// `schema_version`; errors come back as `{"error": {"kind", "message"}}`.
class ApiRouter {
 public:
  explicit ApiRouter(HammerService& service) : service_(service) {}

  ApiResponse handle(const ApiRequest& request) const;

 private:
  HammerService& service_;
};

/// The router behind an HTTP listener.
class HttpServer {
 public:
  explicit HttpServer(HammerService& service);
  ~HttpServer();

  /// Binds; port 0 picks a free one. Returns the bound port.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  void listen();
  /// bind() and serve on a background thread.
  int start(const std::string& host, int port);
  void stop();

 private:
  ApiRouter router_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace hammer::service
