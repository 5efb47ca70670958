// Command-line front end: verification, solving, minimization, hints,
// probing, problem export, advisor training and the HTTP server.
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hammer/analysis/analysis.hpp"
#include "hammer/corpus/snapshot.hpp"
#include "hammer/error.hpp"
#include "hammer/service/http.hpp"
#include "hammer/service/json_codec.hpp"
#include "hammer/service/service.hpp"
#include "hammer/tptp/parser.hpp"

using namespace hammer;
using service::Json;

namespace {

struct Options {
  std::string corpus;
  std::string config;
  std::string model;
  bool json = false;
};

corpus::FactId goal_arg(const std::string& text) {
  const auto id = corpus::FactId::parse(text);
  if (id.article.empty() || id.label.empty()) {
    throw Error(ErrorKind::InvalidArgument, "expected ARTICLE:LABEL, got '" + text + "'");
  }
  return id;
}

service::ServiceConfig make_config(const Options& opt) {
  service::ServiceConfig config;
  if (!opt.config.empty()) config = service::ServiceConfig::load(opt.config);
  if (!opt.corpus.empty()) config.corpus = opt.corpus;
  if (config.corpus.empty()) {
    const char* env = std::getenv("HAMMER_CORPUS");
    config.corpus = env ? env : "corpus/demo";
  }
  if (!opt.model.empty()) config.model = opt.model;
  return config;
}

std::unique_ptr<service::HammerService> open_service(const Options& opt,
                                                     std::optional<long> timeout_ms = {}) {
  auto config = make_config(opt);
  if (timeout_ms) config.engine.time_limit = std::chrono::milliseconds(*timeout_ms);
  auto snapshot = std::make_shared<const corpus::CorpusSnapshot>(corpus::load_path(config.corpus));
  return std::make_unique<service::HammerService>(std::move(config), std::move(snapshot));
}

void emit(const Options& opt, Json j, const std::string& text) {
  if (opt.json) {
    j["schema_version"] = service::kSchemaVersion;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string ids_text(const std::vector<corpus::FactId>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id.to_string();
  return out;
}

int cmd_parse(const Options& opt, const std::vector<std::string>& files) {
  int failures = 0;
  Json all = Json::array();
  std::string text;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto parsed = tptp::parse_article(buffer.str());
    Json diags = Json::array();
    for (const auto& d : parsed.diagnostics) {
      diags.push_back(d.to_string());
      text += file + ":" + d.to_string() + "\n";
    }
    if (!parsed.ok()) ++failures;
    text += file + ": article " + parsed.header.name + ", " + std::to_string(parsed.facts.size()) +
            " facts" + (parsed.ok() ? "" : ", errors") + "\n";
    all.push_back({{"file", file}, {"article", parsed.header.name},
                   {"facts", parsed.facts.size()}, {"diagnostics", diags}});
  }
  emit(opt, {{"files", all}}, text);
  return failures == 0 ? 0 : 1;
}

int cmd_verify(const Options& opt, const std::string& article, std::optional<long> timeout) {
  auto svc = open_service(opt, timeout);
  const auto report = svc->verify_article(article);
  std::string text;
  for (const auto& e : report.entries) {
    text += e.label + ": " + std::string(tptp::to_string(e.status)) + " (" +
            std::to_string(e.elapsed.count()) + " ms)\n";
  }
  for (const auto& a : report.assumed) text += a + ": assumed\n";
  text += std::to_string(report.entries.size() - report.failures()) + "/" +
          std::to_string(report.entries.size()) + " inferences verified in " +
          std::to_string(report.elapsed.count()) + " ms\n";
  emit(opt, service::to_json(report), text);
  return report.ok() ? 0 : 1;
}

int cmd_solve(const Options& opt, const std::string& goal, const std::string& mode,
              std::optional<long> timeout, const std::string& sine, bool show_proof) {
  auto svc = open_service(opt);
  service::SolveRequest request;
  request.goal = goal_arg(goal);
  if (!mode.empty() && mode != "all") request.mode = selection::slice_kind_from_string(mode);
  if (timeout) request.timeout = std::chrono::milliseconds(*timeout);
  if (!sine.empty()) request.sine = selection::SineParams::parse(sine);
  const auto result = svc->solve(request);
  std::string text = "% SZS status " + std::string(tptp::to_string(result.status)) + " for " +
                     request.goal.to_string() + "\n";
  for (const auto& v : result.verdicts) {
    text += "%   " + v.name + ": " + std::string(tptp::to_string(v.status)) + " (" +
            std::to_string(v.elapsed.count()) + " ms, " + std::to_string(v.premises) + " premises)\n";
  }
  if (result.proved()) {
    text += "% winner: " + *result.winner + "\n";
    text += "% used: " + ids_text(result.used) + "\n";
    text += result.by_clause + "\n";
    if (show_proof) text += result.proof_output;
  } else {
    text += "Unsolved\n";
  }
  emit(opt, service::to_json(result), text);
  return result.proved() ? 0 : 1;
}

int cmd_minimize(const Options& opt, const std::string& goal_text,
                 const std::vector<std::string>& extra, std::optional<long> timeout) {
  auto svc = open_service(opt, timeout);
  const auto snap = svc->snapshot();
  const auto goal = goal_arg(goal_text);
  const auto fact = snap->fact(goal);
  std::vector<corpus::FactId> premises;
  if (fact->justification && fact->justification->kind == tptp::Justification::Kind::By) {
    for (const auto& r : fact->justification->refs) {
      premises.push_back(snap->resolve_reference(goal.article, r)->id);
    }
  }
  for (const auto& e : extra) {
    tptp::FactRef ref;
    if (const auto colon = e.find(':'); colon != std::string::npos) {
      ref.article = e.substr(0, colon);
      ref.label = e.substr(colon + 1);
    } else {
      ref.label = e;
    }
    premises.push_back(snap->resolve_reference(goal.article, ref)->id);
  }
  const auto minimal = analysis::minimize(*snap, goal, premises, svc->config().engine);
  const auto clause = analysis::render_by_clause(*snap, minimal, goal.article);
  Json dropped = Json::array();
  std::string text;
  for (const auto& p : premises) {
    if (std::find(minimal.begin(), minimal.end(), p) == minimal.end()) {
      dropped.push_back(p.to_string());
      text += "unnecessary: " + p.to_string() + "\n";
    }
  }
  text += clause + "\n";
  Json kept = Json::array();
  for (const auto& m : minimal) kept.push_back(m.to_string());
  emit(opt, {{"goal", goal.to_string()}, {"kept", kept}, {"dropped", dropped}, {"by_clause", clause}}, text);
  return 0;
}

int cmd_hints(const Options& opt, const std::string& goal, std::size_t k) {
  auto svc = open_service(opt);
  const auto hints = svc->hints(goal_arg(goal), k);
  std::string text;
  if (svc->model()->proofs() == 0) text += "% advisor untrained: ranking by fact id\n";
  for (const auto& h : hints) {
    std::ostringstream line;
    line.precision(6);
    line << std::fixed << h.score << "  " << h.fact << "\n";
    text += line.str();
  }
  emit(opt, {{"hints", service::to_json(hints)}, {"trained_on", svc->model()->proofs()}}, text);
  return 0;
}

int cmd_probe(const Options& opt, const std::string& article, std::optional<long> timeout) {
  auto svc = open_service(opt, timeout);
  const auto report = svc->probe(article);
  std::string text = report.to_string();
  if (report.warnings.empty()) {
    text += "% no inconsistency found (" + std::to_string(report.probed.size()) + " assumed facts probed)\n";
  }
  emit(opt, service::to_json(report), text);
  return report.warnings.empty() ? 0 : 1;
}

int cmd_export(const Options& opt, const std::string& goal, const std::string& mode,
               const std::string& output) {
  auto svc = open_service(opt);
  const auto text = svc->export_problem(goal_arg(goal), selection::slice_kind_from_string(mode));
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + output);
    out << text;
    emit(opt, {{"written", output}}, "% wrote " + output + "\n");
  } else {
    emit(opt, {{"problem", text}}, text);
  }
  return 0;
}

int cmd_train(Options opt) {
  if (opt.model.empty()) opt.model = "hammer-advisor.model";
  auto svc = open_service(opt);
  std::size_t failures = 0;
  for (const auto& art : svc->snapshot()->articles()) failures += svc->verify_article(art.name).failures();
  const auto summary = svc->train();
  emit(opt, service::to_json(summary),
       "% trained on " + std::to_string(summary.examples) + " proofs (" +
           std::to_string(summary.facts) + " facts), wrote " + opt.model + "\n" +
           (failures ? "% " + std::to_string(failures) + " inferences did not verify\n" : ""));
  return 0;
}

service::HttpServer* g_server = nullptr;

int cmd_serve(const Options& opt, const std::string& host, int port) {
  auto svc = open_service(opt);
  service::HttpServer server(*svc);
  const int bound = server.bind(host, port);
  g_server = &server;
  std::signal(SIGINT, [](int) { if (g_server) g_server->stop(); });
  std::signal(SIGTERM, [](int) { if (g_server) g_server->stop(); });
  std::cerr << "hammer: serving " << svc->config().corpus << " on http://" << host << ":" << bound << "\n";
  server.listen();
  g_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hammer: proof automation for first-order article corpora"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--corpus", opt.corpus, "Article directory or snapshot file");
  app.add_option("--config", opt.config, "Service config (JSON)");
  app.add_option("--model", opt.model, "Advisor model file");
  app.add_flag("--json", opt.json, "Machine-readable output");

  std::vector<std::string> files;
  auto* parse = app.add_subcommand("parse", "Parse article files and report diagnostics");
  parse->add_option("files", files, "Article files")->required();

  std::string article, goal, mode, sine, output, host = "127.0.0.1";
  std::optional<long> timeout;
  std::size_t k = 10;
  int port = 8080;
  bool show_proof = false;
  std::vector<std::string> extra;

  auto* verify = app.add_subcommand("verify", "Check every by-justified fact of an article");
  verify->add_option("article", article)->required();
  verify->add_option("--timeout", timeout, "Per-inference limit (ms)");

  auto* solve = app.add_subcommand("solve", "Prove a fact with the strategy pool");
  solve->add_option("goal", goal, "ARTICLE:LABEL")->required();
  solve->add_option("--mode", mode, "full|imports|current|by (default: all four)");
  solve->add_option("--timeout", timeout, "Per-strategy limit (ms)");
  solve->add_option("--sine", sine, "SInE tolerance,depth (depth may be inf)");
  solve->add_flag("--proof", show_proof, "Print the refutation");

  auto* minimize = app.add_subcommand("minimize", "Drop unnecessary premises of a justification");
  minimize->add_option("goal", goal, "ARTICLE:LABEL")->required();
  minimize->add_option("--add", extra, "Extra premises to start from");
  minimize->add_option("--timeout", timeout, "Per-call limit (ms)");

  auto* hints = app.add_subcommand("hints", "Rank likely premises with the advisor");
  hints->add_option("goal", goal, "ARTICLE:LABEL")->required();
  hints->add_option("-k", k, "Number of hints")->check(CLI::PositiveNumber);

  auto* probe = app.add_subcommand("probe", "Look for contradictions among assumed facts");
  probe->add_option("article", article)->required();
  probe->add_option("--timeout", timeout, "Per-probe limit (ms)");

  auto* export_problem = app.add_subcommand("export-problem", "Write the TPTP problem for a fact");
  export_problem->add_option("goal", goal, "ARTICLE:LABEL")->required();
  export_problem->add_option("--mode", mode, "full|imports|current|by")->required();
  export_problem->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* train = app.add_subcommand("train", "Verify the corpus and train the advisor on its proofs");

  auto* serve = app.add_subcommand("serve", "Serve the HTTP/JSON API");
  serve->add_option("--port", port, "Port (0 picks one)");
  serve->add_option("--host", host, "Address to bind");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*parse) return cmd_parse(opt, files);
    if (*verify) return cmd_verify(opt, article, timeout);
    if (*solve) return cmd_solve(opt, goal, mode, timeout, sine, show_proof);
    if (*minimize) return cmd_minimize(opt, goal, extra, timeout);
    if (*hints) return cmd_hints(opt, goal, k);
    if (*probe) return cmd_probe(opt, article, timeout);
    if (*export_problem) return cmd_export(opt, goal, mode, output);
    if (*train) return cmd_train(opt);
    if (*serve) return cmd_serve(opt, host, port);
  } catch (const corpus::CorpusError& e) {
    std::cerr << "hammer: " << e.what() << "\n";
    for (const auto& d : e.diagnostics()) std::cerr << "  " << d << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hammer: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
