#include "hammer/service/http.hpp"

#include <regex>

#include "hammer/error.hpp"
#include "hammer/service/json_codec.hpp"
#include "hammer/tptp/printer.hpp"
#include "httplib.h"

namespace hammer::service {

namespace {

ApiResponse json_response(int status, Json body) {
  body["schema_version"] = kSchemaVersion;
  return {status, "application/json", body.dump()};
}

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownFact:
    case ErrorKind::UnresolvedReference:
      return 404;
    case ErrorKind::ContractViolation:
    case ErrorKind::Unprovable:
      return 409;
    case ErrorKind::Io:
      return 500;
    default:
      return 400;
  }
}

ApiResponse error_response(int status, std::string_view kind, const std::string& message) {
  return json_response(status, {{"error", {{"kind", kind}, {"message", message}}}});
}

Json parse_body(const std::string& body) {
  if (body.empty()) return Json::object();
  auto j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorKind::InvalidArgument, "request body must be a JSON object");
  }
  return j;
}

FactId goal_of(const Json& j) {
  if (!j.contains("article") || !j.contains("label")) {
    throw Error(ErrorKind::InvalidArgument, "article and label are required");
  }
  return {j["article"].get<std::string>(), j["label"].get<std::string>()};
}

Json article_json(const corpus::CorpusSnapshot& snap, const std::string& name) {
  const auto& art = snap.article(name);
  Json facts = Json::array();
  for (const auto& f : art.facts) {
    Json refs = Json::array();
    std::string justification = "none";
    if (f->justification) {
      justification = f->justification->kind == tptp::Justification::Kind::By ? "by" : "assumed";
      for (const auto& r : f->justification->refs) {
        refs.push_back(fact_json(snap.resolve_reference(name, r)->id));
      }
    }
    facts.push_back({{"label", f->id.label},
                     {"role", tptp::to_string(f->role)},
                     {"formula", tptp::render_formula(f->formula)},
                     {"status", corpus::to_string(f->status)},
                     {"justification", justification},
                     {"refs", refs}});
  }
  return {{"article", name}, {"imports", art.imports}, {"facts", facts}};
}

}  // namespace

ApiResponse ApiRouter::handle(const ApiRequest& req) const {
  static const std::regex kJob(R"(^/jobs/([0-9a-f]+)$)");
  static const std::regex kCancel(R"(^/jobs/([0-9a-f]+)/cancel$)");
  static const std::regex kArticle(R"(^/articles/([^/]+)$)");
  static const std::regex kExplain(R"(^/articles/([^/]+)/explain/([^/]+)$)");
  static const std::regex kProbe(R"(^/probe/([^/]+)$)");
  static const std::regex kVerify(R"(^/verify/([^/]+)$)");
  static const std::regex kProblem(R"(^/problem/([^/]+)/([^/]+)$)");
  std::smatch m;
  const bool get = req.method == "GET";
  const bool post = req.method == "POST";
  try {
    if (get && req.path == "/articles") {
      Json names = Json::array();
      for (const auto& a : service_.snapshot()->articles()) names.push_back(a.name);
      return json_response(200, {{"articles", names}});
    }
    if (post && req.path == "/articles") {
      auto upload = service_.add_article(req.body);
      return json_response(upload.ok() ? 200 : 422, to_json(upload));
    }
    if (get && std::regex_match(req.path, m, kArticle)) {
      return json_response(200, article_json(*service_.snapshot(), m[1]));
    }
    if (post && req.path == "/solve") {
      const auto j = parse_body(req.body);
      SolveRequest request;
      request.goal = goal_of(j);
      if (j.contains("mode") && !j["mode"].is_null()) {
        request.mode = selection::slice_kind_from_string(j["mode"].get<std::string>());
      }
      if (j.contains("timeout_ms")) request.timeout = std::chrono::milliseconds(j["timeout_ms"].get<long>());
      if (j.contains("sine") && !j["sine"].is_null()) {
        request.sine = selection::SineParams::parse(j["sine"].get<std::string>());
      }
      const auto id = service_.submit_solve(request);
      return json_response(202, {{"job_id", id}});
    }
    if (get && std::regex_match(req.path, m, kJob)) {
      auto job = service_.job(m[1]);
      if (!job) return error_response(404, "unknown_job", "no job " + m[1].str());
      return json_response(200, to_json(*job));
    }
    if (post && std::regex_match(req.path, m, kCancel)) {
      const bool cancelled = service_.cancel(m[1]);
      auto job = service_.job(m[1]);
      if (!job) return error_response(404, "unknown_job", "no job " + m[1].str());
      return json_response(200, {{"cancelled", cancelled}, {"job", to_json(*job)}});
    }
    if (get && std::regex_match(req.path, m, kExplain)) {
      return json_response(200, to_json(service_.explain({m[1], m[2]})));
    }
    if (post && req.path == "/hints") {
      const auto j = parse_body(req.body);
      const auto k = j.value<std::size_t>("k", 10);
      return json_response(200, {{"hints", to_json(service_.hints(goal_of(j), k))},
                                 {"trained_on", service_.model()->proofs()}});
    }
    if (post && std::regex_match(req.path, m, kProbe)) {
      auto report = service_.probe(m[1]);
      Json body = to_json(report);
      body["report"] = report.to_string();
      return json_response(200, body);
    }
    if (post && std::regex_match(req.path, m, kVerify)) {
      return json_response(202, {{"job_id", service_.submit_verify(m[1])}});
    }
    if (post && req.path == "/train") {
      return json_response(200, to_json(service_.train()));
    }
    if (get && std::regex_match(req.path, m, kProblem)) {
      auto it = req.query.find("mode");
      const auto mode = selection::slice_kind_from_string(it == req.query.end() ? "full" : it->second);
      const auto text = service_.export_problem({m[1], m[2]}, mode);
      if (auto f = req.query.find("format"); f != req.query.end() && f->second == "text") {
        return {200, "text/plain", text};
      }
      return json_response(200, {{"mode", selection::to_string(mode)}, {"problem", text}});
    }
    return error_response(404, "not_found", req.method + " " + req.path);
  } catch (const Error& e) {
    return error_response(status_for(e.kind()), to_string(e.kind()), e.what());
  } catch (const Json::exception& e) {
    return error_response(400, "invalid_argument", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

HttpServer::HttpServer(HammerService& service)
    : router_(service), server_(std::make_unique<httplib::Server>()) {
  auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest request{req.method, req.path, {}, req.body};
    for (const auto& [k, v] : req.params) request.query[k] = v;
    const auto response = router_.handle(request);
    res.status = response.status;
    res.set_header("X-Schema-Version", std::to_string(kSchemaVersion));
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(response.body, response.content_type);
  };
  server_->Get(R"(/.*)", dispatch);
  server_->Post(R"(/.*)", dispatch);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = server_->bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorKind::Io, "cannot bind " + host);
    return bound;
  }
  if (!server_->bind_to_port(host, port)) {
    throw Error(ErrorKind::Io, "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::listen() { server_->listen_after_bind(); }

int HttpServer::start(const std::string& host, int port) {
  const int bound = bind(host, port);
  thread_ = std::thread([this] { listen(); });
  server_->wait_until_ready();
  return bound;
}

void HttpServer::stop() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace hammer::service
