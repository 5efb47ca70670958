#include "hammer/corpus/snapshot.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "hammer/tptp/parser.hpp"
#include "hammer/tptp/printer.hpp"

namespace hammer::corpus {

namespace fs = std::filesystem;

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FactStatus status_of(const tptp::AnnotatedFormula& f) {
  if (f.justification) {
    return f.justification->kind == Justification::Kind::Assumed ? FactStatus::Assumed
                                                                 : FactStatus::Accepted;
  }
  return (f.role == Role::Theorem || f.role == Role::Lemma) ? FactStatus::Unjustified
                                                            : FactStatus::Accepted;
}

}  // namespace

CorpusError::CorpusError(ErrorKind kind, std::vector<std::string> diagnostics)
    : Error(kind, join(diagnostics, "\n")), diagnostics_(std::move(diagnostics)) {}

FactId FactId::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "expected ARTICLE:LABEL, got '" + std::string(text) + "'");
  }
  return FactId{std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

std::string_view to_string(FactStatus status) {
  switch (status) {
    case FactStatus::Accepted: return "accepted";
    case FactStatus::Assumed: return "assumed";
    case FactStatus::Unjustified: return "unjustified";
  }
  return "accepted";
}

std::map<std::string, std::size_t> count_symbol_occurrences(const FactList& facts) {
  std::map<std::string, std::size_t> out;
  for (const auto& f : facts) {
    if (!f->counts_for_occurrences()) continue;
    for (const auto& name : tptp::symbol_names(f->formula)) ++out[name];
  }
  return out;
}

CorpusSnapshot CorpusSnapshot::load(const std::vector<std::string>& article_texts) {
  CorpusSnapshot snap;
  std::vector<std::string> problems;

  // Parse.
  std::vector<tptp::ArticleParse> parsed;
  for (std::size_t i = 0; i < article_texts.size(); ++i) {
    auto p = tptp::parse_article(article_texts[i]);
    const std::string where = p.header.name.empty() ? "article #" + std::to_string(i + 1)
                                                    : p.header.name;
    for (const auto& d : p.diagnostics) problems.push_back(where + ":" + d.to_string());
    parsed.push_back(std::move(p));
  }
  if (!problems.empty()) throw CorpusError(ErrorKind::Syntax, std::move(problems));

  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const auto& name = parsed[i].header.name;
    if (!snap.by_name_.emplace(name, i).second) {
      problems.push_back("article " + name + " loaded twice");
    }
  }
  if (!problems.empty()) throw CorpusError(ErrorKind::DuplicateLabel, std::move(problems));

  // Import graph: declared imports must be loaded; background imports nothing.
  auto imports_of = [&](std::size_t i) {
    std::vector<std::string> out = parsed[i].header.imports;
    const auto& name = parsed[i].header.name;
    if (name != kBackgroundArticle && snap.by_name_.contains(kBackgroundArticle) &&
        std::find(out.begin(), out.end(), kBackgroundArticle) == out.end()) {
      out.emplace_back(kBackgroundArticle);
    }
    return out;
  };
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const auto& header = parsed[i].header;
    if (header.name == kBackgroundArticle && !header.imports.empty()) {
      problems.push_back("article background cannot import other articles");
    }
    for (const auto& imp : header.imports) {
      if (imp != header.name && !snap.by_name_.contains(imp)) {
        problems.push_back("article " + header.name + " imports unknown article " + imp);
      }
    }
  }
  if (!problems.empty()) throw CorpusError(ErrorKind::UnresolvedReference, std::move(problems));

  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(parsed.size(), Mark::White);
  std::vector<std::string> stack;
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    mark[i] = Mark::Grey;
    stack.push_back(parsed[i].header.name);
    for (const auto& imp : imports_of(i)) {
      const std::size_t j = snap.by_name_.find(imp)->second;
      if (mark[j] == Mark::Grey) {
        auto from = std::find(stack.begin(), stack.end(), imp);
        std::vector<std::string> cycle(from, stack.end());
        cycle.push_back(imp);
        throw CorpusError(ErrorKind::ImportCycle, {"import cycle: " + join(cycle, " -> ")});
      }
      if (mark[j] == Mark::White) visit(j);
    }
    stack.pop_back();
    mark[i] = Mark::Black;
  };
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (mark[i] == Mark::White) visit(i);
  }

  for (std::size_t i = 0; i < parsed.size(); ++i) {
    std::set<std::string> closure{parsed[i].header.name};
    std::vector<std::size_t> todo{i};
    while (!todo.empty()) {
      auto k = todo.back();
      todo.pop_back();
      for (const auto& imp : imports_of(k)) {
        if (closure.insert(imp).second) todo.push_back(snap.by_name_.find(imp)->second);
      }
    }
    snap.closures_.emplace(parsed[i].header.name, std::move(closure));
  }

  // Facts.
  for (auto& p : parsed) {
    Article art;
    art.name = p.header.name;
    art.imports = p.header.imports;
    for (auto& af : p.facts) {
      auto fact = std::make_shared<Fact>();
      fact->id = FactId{art.name, af.label};
      fact->role = af.role;
      fact->status = status_of(af);
      fact->formula = std::move(af.formula);
      fact->justification = std::move(af.justification);
      fact->position = art.facts.size();
      art.index.emplace(af.label, art.facts.size());
      art.facts.push_back(std::move(fact));
    }
    snap.articles_.push_back(std::move(art));
  }

  // Justification references: resolvable and strictly earlier.
  for (const auto& art : snap.articles_) {
    for (const auto& fact : art.facts) {
      if (!fact->justification || fact->justification->kind != Justification::Kind::By) continue;
      for (const auto& ref : fact->justification->refs) {
        try {
          auto target = snap.resolve_reference(art.name, ref);
          if (target->id.article == art.name && target->position >= fact->position) {
            problems.push_back(fact->id.to_string() + ": reference " + ref.to_string() +
                               " does not precede the fact");
          }
        } catch (const Error& e) {
          problems.push_back(fact->id.to_string() + ": " + e.what());
        }
      }
    }
  }
  if (!problems.empty()) throw CorpusError(ErrorKind::UnresolvedReference, std::move(problems));

  // One kind and arity per symbol, corpus-wide.
  struct Site {
    tptp::Symbol symbol;
    FactId where;
  };
  std::map<std::string, Site> first_use;
  for (const auto& art : snap.articles_) {
    for (const auto& fact : art.facts) {
      for (const auto& sym : tptp::symbols_of(fact->formula)) {
        auto [it, inserted] = first_use.emplace(sym.name, Site{sym, fact->id});
        if (inserted || it->second.symbol == sym) continue;
        auto describe = [](const tptp::Symbol& s) {
          return std::string(s.kind == tptp::SymbolKind::Predicate ? "predicate " : "function ") +
                 s.name + "/" + std::to_string(s.arity);
        };
        problems.push_back("arity clash: " + describe(it->second.symbol) + " at " +
                           it->second.where.to_string() + " vs " + describe(sym) + " at " +
                           fact->id.to_string());
      }
    }
  }
  if (!problems.empty()) throw CorpusError(ErrorKind::ArityClash, std::move(problems));

  snap.occurrences_ = count_symbol_occurrences(snap.all_facts());
  return snap;
}

bool CorpusSnapshot::has_article(std::string_view name) const {
  return by_name_.find(name) != by_name_.end();
}

const Article& CorpusSnapshot::article(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) {
    throw Error(ErrorKind::UnknownFact, "unknown article " + std::string(name));
  }
  return articles_[it->second];
}

FactPtr CorpusSnapshot::find(const FactId& id) const {
  auto it = by_name_.find(id.article);
  if (it == by_name_.end()) return nullptr;
  const auto& art = articles_[it->second];
  auto f = art.index.find(id.label);
  return f == art.index.end() ? nullptr : art.facts[f->second];
}

FactPtr CorpusSnapshot::fact(const FactId& id) const {
  if (auto f = find(id)) return f;
  throw Error(ErrorKind::UnknownFact, "unknown fact " + id.to_string());
}

FactPtr CorpusSnapshot::resolve_reference(std::string_view current_article,
                                          const FactRef& ref) const {
  const std::string target = ref.article ? *ref.article : std::string(current_article);
  if (target != current_article) {
    const auto closure = import_closure(current_article);
    if (!closure.contains(target)) {
      throw Error(ErrorKind::NotImported, "reference " + ref.to_string() + ": article " + target +
                                              " not imported by " + std::string(current_article));
    }
  }
  if (auto f = find(FactId{target, ref.label})) return f;
  throw Error(ErrorKind::UnknownFact,
              "reference " + ref.to_string() + ": unknown label " + ref.label + " in " + target);
}

FactList CorpusSnapshot::context_before(const FactId& id) const {
  auto goal = fact(id);
  const auto& art = article(id.article);
  return FactList(art.facts.begin(),
                  art.facts.begin() + static_cast<std::ptrdiff_t>(goal->position));
}

std::set<std::string> CorpusSnapshot::import_closure(std::string_view article) const {
  auto it = closures_.find(article);
  if (it == closures_.end()) {
    throw Error(ErrorKind::UnknownFact, "unknown article " + std::string(article));
  }
  return it->second;
}

FactList CorpusSnapshot::all_facts() const {
  FactList out;
  for (const auto& art : articles_) out.insert(out.end(), art.facts.begin(), art.facts.end());
  return out;
}

std::string CorpusSnapshot::render_article(std::string_view name) const {
  const auto& art = article(name);
  std::vector<tptp::AnnotatedFormula> facts;
  for (const auto& f : art.facts) {
    facts.push_back(tptp::AnnotatedFormula{f->id.label, f->role, f->formula, f->justification, {}});
  }
  return tptp::render_article(tptp::ArticleHeader{art.name, art.imports}, facts);
}

std::string CorpusSnapshot::serialize() const {
  std::ostringstream os;
  os << "snapshot(" << kSnapshotVersion << ", [";
  for (std::size_t i = 0; i < articles_.size(); ++i) {
    if (i != 0) os << ", ";
    os << articles_[i].name;
  }
  os << "]).\n";
  for (const auto& art : articles_) os << render_article(art.name);
  return os.str();
}

CorpusSnapshot CorpusSnapshot::deserialize(std::string_view text) {
  const auto manifest_end = text.find('\n');
  const std::string manifest(text.substr(0, manifest_end));
  const std::string prefix = "snapshot(";
  if (manifest.rfind(prefix, 0) != 0) {
    throw Error(ErrorKind::Syntax, "snapshot file must start with snapshot(version, [...]).");
  }
  const auto comma = manifest.find(',');
  int version = 0;
  try {
    version = std::stoi(manifest.substr(prefix.size(), comma - prefix.size()));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Syntax, "bad snapshot version in: " + manifest);
  }
  if (version != kSnapshotVersion) {
    throw Error(ErrorKind::Syntax, "unsupported snapshot version " + std::to_string(version));
  }
  std::vector<std::string> names;
  {
    const auto open = manifest.find('[');
    const auto close = manifest.find(']');
    if (open == std::string::npos || close == std::string::npos) {
      throw Error(ErrorKind::Syntax, "bad snapshot manifest: " + manifest);
    }
    std::istringstream list(manifest.substr(open + 1, close - open - 1));
    for (std::string name; std::getline(list, name, ',');) {
      name.erase(0, name.find_first_not_of(' '));
      name.erase(name.find_last_not_of(' ') + 1);
      if (!name.empty()) names.push_back(name);
    }
  }

  std::vector<std::string> texts;
  std::string_view body = manifest_end == std::string_view::npos ? "" : text.substr(manifest_end + 1);
  std::size_t start = 0;
  while (start < body.size()) {
    auto next = body.find("\narticle(", start);
    const auto end = next == std::string_view::npos ? body.size() : next + 1;
    texts.emplace_back(body.substr(start, end - start));
    start = end;
  }
  auto snap = load(texts);
  std::vector<std::string> loaded;
  for (const auto& a : snap.articles()) loaded.push_back(a.name);
  if (loaded != names) {
    throw Error(ErrorKind::Syntax, "snapshot manifest lists [" + join(names, ", ") +
                                       "] but the file holds [" + join(loaded, ", ") + "]");
  }
  return snap;
}

CorpusSnapshot load_directory(const std::string& directory) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".art") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  struct Entry {
    std::string name;
    std::vector<std::string> imports;
    std::string text;
  };
  std::vector<Entry> entries;
  for (const auto& f : files) {
    auto text = read_file(f);
    auto header = tptp::parse_article(text).header;
    entries.push_back({header.name, header.imports, std::move(text)});
  }

  // Kahn-style ordering with the background article first; leftovers (cycles,
  // unknown imports) are appended so that load() reports them.
  std::vector<std::string> texts;
  std::set<std::string> placed;
  std::vector<bool> done(entries.size(), false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].name == kBackgroundArticle) {
      texts.push_back(entries[i].text);
      placed.insert(entries[i].name);
      done[i] = true;
    }
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (done[i]) continue;
      const bool ready = std::all_of(entries[i].imports.begin(), entries[i].imports.end(),
                                     [&](const std::string& imp) { return placed.contains(imp); });
      if (!ready) continue;
      texts.push_back(entries[i].text);
      placed.insert(entries[i].name);
      done[i] = true;
      progress = true;
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!done[i]) texts.push_back(entries[i].text);
  }
  return CorpusSnapshot::load(texts);
}

CorpusSnapshot load_path(const std::string& path) {
  if (fs::is_directory(path)) return load_directory(path);
  return CorpusSnapshot::deserialize(read_file(path));
}

}  // namespace hammer::corpus
