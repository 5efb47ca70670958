#include "hammer/service/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hammer/error.hpp"
#include "json.hpp"

namespace hammer::service {

ServiceConfig ServiceConfig::parse(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "config: expected a JSON object");
  static const std::set<std::string> known = {"corpus",      "job_log",          "model",
                                              "time_limit_ms", "clause_limit",   "sine",
                                              "task_budget", "job_workers",      "external_provers",
                                              "engine"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw Error(ErrorKind::InvalidArgument, "config: unknown key '" + key + "'");
  }
  ServiceConfig c;
  try {
    c.corpus = j.value("corpus", "");
    if (j.contains("job_log")) c.job_log = j["job_log"].get<std::string>();
    if (j.contains("model")) c.model = j["model"].get<std::string>();
    c.engine.time_limit = std::chrono::milliseconds(j.value("time_limit_ms", 10'000));
    c.engine.clause_limit = j.value<std::size_t>("clause_limit", 200'000);
    if (j.contains("sine")) c.sine = selection::SineParams::parse(j["sine"].get<std::string>());
    c.task_budget = j.value<std::size_t>("task_budget", 0);
    c.job_workers = j.value<std::size_t>("job_workers", 4);
    for (const auto& p : j.value("external_provers", nlohmann::json::array())) {
      c.external.push_back({p.at("name").get<std::string>(), p.at("command").get<std::string>()});
    }
    const auto engine = j.value("engine", std::string("builtin"));
    if (engine != "builtin") {
      auto it = std::find_if(c.external.begin(), c.external.end(),
                             [&](const auto& p) { return p.name == engine; });
      if (it == c.external.end()) {
        throw Error(ErrorKind::InvalidArgument, "config: engine '" + engine + "' is not defined");
      }
      c.engine.external = *it;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("config: ") + e.what());
  }
  c.engine.validate();
  c.sine.validate();
  return c;
}

ServiceConfig ServiceConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read config " + path);
  std::stringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

}  // namespace hammer::service
