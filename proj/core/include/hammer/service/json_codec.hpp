#pragma once

#include <vector>

#include "hammer/analysis/analysis.hpp"
#include "hammer/selection/advisor.hpp"
#include "hammer/service/jobs.hpp"
#include "hammer/service/scheduler.hpp"
#include "hammer/service/service.hpp"
#include "json.hpp"

namespace hammer::service {

/// Version stamped on every API response.
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

Json fact_json(const corpus::FactId& id);
Json to_json(const StrategyVerdict& v);
Json to_json(const SolveResult& r);
Json to_json(const VerifyReport& r);
Json to_json(const Explanation& e);
Json to_json(const analysis::ProbeReport& r);
Json to_json(const TrainSummary& s);
Json to_json(const ArticleUpload& u);
Json to_json(const std::vector<selection::Hint>& hints);
Json to_json(const Job& job);

/// Proofs recorded in a finished job's result (solve and verify jobs).
std::vector<ProofRecord> proof_records(JobKind kind, const Json& result);

}  // namespace hammer::service
