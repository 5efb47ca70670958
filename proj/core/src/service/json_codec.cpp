#include "hammer/service/json_codec.hpp"

namespace hammer::service {

namespace {

Json facts_json(const std::vector<corpus::FactId>& ids) {
  Json out = Json::array();
  for (const auto& id : ids) out.push_back(fact_json(id));
  return out;
}

std::vector<corpus::FactId> facts_from(const Json& j) {
  std::vector<corpus::FactId> out;
  for (const auto& f : j) out.push_back({f.at("article").get<std::string>(), f.at("label").get<std::string>()});
  return out;
}

std::string iso_time(Job::Time t) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
  return std::to_string(ms);
}

}  // namespace

Json fact_json(const corpus::FactId& id) {
  return {{"article", id.article}, {"label", id.label}, {"id", id.to_string()}};
}

Json to_json(const StrategyVerdict& v) {
  Json j = {{"name", v.name},
            {"mode", v.mode},
            {"status", tptp::to_string(v.status)},
            {"elapsed_ms", v.elapsed.count()},
            {"premises", v.premises},
            {"used", facts_json(v.used)},
            {"cancelled", v.cancelled}};
  if (!v.error.empty()) j["error"] = v.error;
  return j;
}

Json to_json(const SolveResult& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"goal", fact_json(r.goal)},
          {"status", tptp::to_string(r.status)},
          {"winner", r.winner ? Json(*r.winner) : Json()},
          {"used", facts_json(r.used)},
          {"used_minimal", r.used_minimal},
          {"by_clause", r.by_clause},
          {"verdicts", verdicts},
          {"elapsed_ms", r.elapsed.count()}};
}

Json to_json(const VerifyReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"label", e.label},
                       {"status", tptp::to_string(e.status)},
                       {"elapsed_ms", e.elapsed.count()},
                       {"used", facts_json(e.used)},
                       {"by_clause", e.by_clause}});
  }
  return {{"article", r.article},   {"entries", entries},         {"assumed", r.assumed},
          {"unjustified", r.unjustified}, {"failures", r.failures()}, {"ok", r.ok()},
          {"elapsed_ms", r.elapsed.count()}};
}

Json to_json(const Explanation& e) {
  Json j = to_json(e.solve);
  j["outcome"] = e.outcome;
  return j;
}

Json to_json(const analysis::ProbeReport& r) {
  Json warnings = Json::array();
  for (const auto& w : r.warnings) {
    warnings.push_back({{"article", w.article},
                        {"before", w.before_label},
                        {"used", facts_json(w.used)},
                        {"line", w.to_string()}});
  }
  return {{"article", r.article}, {"probed", r.probed}, {"warnings", warnings}};
}

Json to_json(const TrainSummary& s) { return {{"examples", s.examples}, {"facts", s.facts}}; }

Json to_json(const ArticleUpload& u) {
  return {{"article", u.article}, {"facts", u.facts}, {"diagnostics", u.diagnostics}, {"ok", u.ok()}};
}

Json to_json(const std::vector<selection::Hint>& hints) {
  Json out = Json::array();
  for (const auto& h : hints) {
    auto id = corpus::FactId::parse(h.fact);
    Json f = fact_json(id);
    f["score"] = h.score;
    out.push_back(f);
  }
  return out;
}

Json to_json(const Job& job) {
  Json j = {{"id", job.id},
            {"kind", to_string(job.kind)},
            {"state", to_string(job.state)},
            {"subject", job.subject},
            {"created", iso_time(job.created)},
            {"result", job.result}};
  if (job.started) j["started"] = iso_time(*job.started);
  if (job.finished) j["finished"] = iso_time(*job.finished);
  if (!job.error.empty()) j["error"] = job.error;
  return j;
}

std::vector<ProofRecord> proof_records(JobKind kind, const Json& result) {
  std::vector<ProofRecord> out;
  if (!result.is_object()) return out;
  if (kind == JobKind::Solve && result.value("status", "") == "Theorem") {
    const auto& g = result.at("goal");
    out.push_back({{g.at("article").get<std::string>(), g.at("label").get<std::string>()},
                   facts_from(result.at("used"))});
  } else if (kind == JobKind::Verify) {
    const auto article = result.at("article").get<std::string>();
    for (const auto& e : result.at("entries")) {
      if (e.value("status", "") != "Theorem") continue;
      out.push_back({{article, e.at("label").get<std::string>()}, facts_from(e.at("used"))});
    }
  }
  return out;
}

}  // namespace hammer::service
