#include "hammer/tptp/szs.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hammer/error.hpp"
#include "hammer/tptp/parser.hpp"

namespace hammer::tptp {

std::string_view to_string(SzsStatus status) {
  switch (status) {
    case SzsStatus::Theorem: return "Theorem";
    case SzsStatus::CounterSatisfiable: return "CounterSatisfiable";
    case SzsStatus::Timeout: return "Timeout";
    case SzsStatus::GaveUp: return "GaveUp";
    case SzsStatus::ResourceOut: return "ResourceOut";
    case SzsStatus::Error: return "Error";
  }
  return "Error";
}

std::optional<SzsStatus> szs_status_from_string(std::string_view text) {
  // Provers report a handful of synonyms; generated problems always carry
  // a conjecture, so unsatisfiability of the clause set means Theorem.
  static const std::pair<std::string_view, SzsStatus> kStatuses[] = {
      {"Theorem", SzsStatus::Theorem},
      {"Unsatisfiable", SzsStatus::Theorem},
      {"ContradictoryAxioms", SzsStatus::Theorem},
      {"CounterSatisfiable", SzsStatus::CounterSatisfiable},
      {"Satisfiable", SzsStatus::CounterSatisfiable},
      {"Timeout", SzsStatus::Timeout},
      {"GaveUp", SzsStatus::GaveUp},
      {"Unknown", SzsStatus::GaveUp},
      {"Incomplete", SzsStatus::GaveUp},
      {"Inappropriate", SzsStatus::GaveUp},
      {"ResourceOut", SzsStatus::ResourceOut},
      {"MemoryOut", SzsStatus::ResourceOut},
      {"Error", SzsStatus::Error},
      {"OSError", SzsStatus::Error},
      {"InputError", SzsStatus::Error},
      {"SyntaxError", SzsStatus::Error},
  };
  for (const auto& [name, status] : kStatuses) {
    if (name == text) return status;
  }
  return std::nullopt;
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    out.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

void collect_parent_names(const GeneralTerm& t, std::vector<std::string>& out) {
  if (t.is_list()) {
    for (const auto& a : t.args) collect_parent_names(a, out);
    return;
  }
  if (t.functor == "inference" && t.args.size() == 3) {
    collect_parent_names(t.args[2], out);
    return;
  }
  if (t.functor == ":" && !t.args.empty()) {
    collect_parent_names(t.args[0], out);
    return;
  }
  if (t.args.empty() && !t.functor.empty()) out.push_back(t.functor);
}

std::vector<DerivationNode> tstp_nodes(std::string_view block) {
  std::vector<DerivationNode> nodes;
  for (auto& raw : parse_annotated_block(block)) {
    DerivationNode node;
    node.id = raw.name;
    node.formula = trim(raw.formula_text);
    if (!raw.source) {
      node.source = DerivationNode::Source::Leaf;
      node.leaf_label = raw.name;
    } else if (raw.source->functor == "file" && raw.source->args.size() >= 2) {
      node.source = DerivationNode::Source::Leaf;
      node.leaf_label = raw.source->args[1].functor;
    } else if (raw.source->functor == "inference" && raw.source->args.size() == 3) {
      node.source = DerivationNode::Source::Inference;
      node.rule = raw.source->args[0].functor;
      collect_parent_names(raw.source->args[2], node.parents);
    } else {
      // introduced(...), theory(equality), ... : axioms the prover added.
      node.source = DerivationNode::Source::Leaf;
      node.leaf_label = raw.source->functor;
    }
    nodes.push_back(std::move(node));
  }
  return nodes;
}

std::vector<DerivationNode> builtin_nodes(std::string_view block) {
  std::vector<DerivationNode> nodes;
  for (auto line : split_lines(block)) {
    auto text = trim(line);
    if (text.empty() || text[0] == '%') continue;
    if (text[0] != '[') throw Error(ErrorKind::Syntax, "derivation line without id: " + text);
    auto close = text.find(']');
    auto arrow = text.rfind(" <- ");
    if (close == std::string::npos || arrow == std::string::npos || arrow < close) {
      throw Error(ErrorKind::Syntax, "malformed derivation line: " + text);
    }
    DerivationNode node;
    node.id = text.substr(1, close - 1);
    node.formula = trim(std::string_view(text).substr(close + 1, arrow - close - 1));
    std::istringstream rest(text.substr(arrow + 4));
    std::string rule;
    rest >> rule;
    if (rule.empty()) throw Error(ErrorKind::Syntax, "derivation line without rule: " + text);
    if (rule == "input") {
      node.source = DerivationNode::Source::Leaf;
      rest >> node.leaf_label;
      if (node.leaf_label.empty()) node.leaf_label = node.id;
    } else if (rule == "eq_axiom") {
      node.source = DerivationNode::Source::Leaf;
      node.leaf_label = "eq_axiom";
    } else {
      node.source = DerivationNode::Source::Inference;
      node.rule = rule;
      for (std::string p; rest >> p;) node.parents.push_back(p);
    }
    nodes.push_back(std::move(node));
  }
  return nodes;
}

}  // namespace

bool DerivationNode::derives_falsum() const {
  std::string compact;
  for (char c : formula) {
    if (c != '(' && c != ')' && std::isspace(static_cast<unsigned char>(c)) == 0) {
      compact.push_back(c);
    }
  }
  return compact == "$false";
}

std::vector<std::string> SzsVerdict::leaf_labels() const {
  std::vector<std::string> out;
  if (!derivation) return out;
  for (const auto& n : *derivation) {
    if (n.source == DerivationNode::Source::Leaf) out.push_back(n.leaf_label);
  }
  return out;
}

std::optional<std::string> check_derivation(const std::vector<DerivationNode>& nodes,
                                            SzsStatus status) {
  std::set<std::string> seen;
  std::size_t falsum = 0;
  for (const auto& n : nodes) {
    for (const auto& p : n.parents) {
      if (!seen.contains(p)) return "node " + n.id + " cites " + p + " before its definition";
    }
    if (!seen.insert(n.id).second) return "duplicate node id " + n.id;
    if (n.derives_falsum()) ++falsum;
  }
  if (status == SzsStatus::Theorem && falsum != 1) {
    return "expected exactly one node deriving $false, found " + std::to_string(falsum);
  }
  return std::nullopt;
}

SzsVerdict parse_prover_output(std::string_view text, OutputDialect dialect) {
  SzsVerdict verdict;
  std::optional<SzsStatus> status;
  std::string block;
  bool in_block = false;
  bool saw_block = false;
  for (auto line : split_lines(text)) {
    if (auto at = line.find("SZS status"); at != std::string_view::npos && !status) {
      std::istringstream words{std::string(line.substr(at + 10))};
      std::string word;
      words >> word;
      status = szs_status_from_string(word);
      if (!status) verdict.warnings.push_back("unknown SZS status '" + word + "'");
      continue;
    }
    if (line.find("SZS output start") != std::string_view::npos) {
      in_block = true;
      saw_block = true;
      continue;
    }
    if (line.find("SZS output end") != std::string_view::npos) {
      in_block = false;
      continue;
    }
    if (in_block) {
      block.append(line);
      block.push_back('\n');
    }
  }

  if (!status) {
    verdict.status = SzsStatus::Error;
    verdict.excerpt = trim(text.substr(0, 400));
    verdict.warnings.push_back(text.empty() ? "empty prover output" : "no SZS status line");
    return verdict;
  }
  verdict.status = *status;
  if (!saw_block) return verdict;

  try {
    auto nodes = dialect == OutputDialect::Tstp ? tstp_nodes(block) : builtin_nodes(block);
    if (auto problem = check_derivation(nodes, verdict.status)) {
      verdict.warnings.push_back("malformed derivation: " + *problem);
    } else {
      verdict.derivation = std::move(nodes);
    }
  } catch (const Error& e) {
    verdict.warnings.push_back(std::string("malformed derivation: ") + e.what());
  }
  return verdict;
}

}  // namespace hammer::tptp
