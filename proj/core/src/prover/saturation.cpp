#include "hammer/prover/saturation.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <queue>
#include <set>

namespace hammer::prover {

namespace {

constexpr TermId kUnbound = 0xFFFFFFFFu;

/// Unification of terms living in two variable namespaces ("sides"), so
/// that two clauses can be resolved without first renaming one of them.
class Unifier {
 public:
  explicit Unifier(TermBank& bank) : bank_(bank) {}

  void reset(std::uint32_t vars0, std::uint32_t vars1) {
    for (const auto& [side, v] : trail_) bindings_[side][v] = {kUnbound, 0};
    trail_.clear();
    if (bindings_[0].size() < vars0) bindings_[0].resize(vars0, {kUnbound, 0});
    if (bindings_[1].size() < vars1) bindings_[1].resize(vars1, {kUnbound, 0});
  }

  bool unify(TermId a, int sa, TermId b, int sb) {
    stack_.clear();
    stack_.push_back({a, sa, b, sb});
    while (!stack_.empty()) {
      auto [x, xs, y, ys] = stack_.back();
      stack_.pop_back();
      deref(x, xs);
      deref(y, ys);
      if (x == y && (xs == ys || bank_.is_ground(x))) continue;
      const bool xv = bank_.is_variable(x);
      const bool yv = bank_.is_variable(y);
      if (xv) {
        if (occurs(bank_.var_index(x), xs, y, ys)) return false;
        bind(xs, bank_.var_index(x), y, ys);
      } else if (yv) {
        if (occurs(bank_.var_index(y), ys, x, xs)) return false;
        bind(ys, bank_.var_index(y), x, xs);
      } else {
        if (bank_.functor(x) != bank_.functor(y)) return false;
        const auto xa = bank_.args(x);
        const auto ya = bank_.args(y);
        for (std::size_t i = 0; i < xa.size(); ++i) stack_.push_back({xa[i], xs, ya[i], ys});
      }
    }
    return true;
  }

  /// Instantiates `t`; side-1 variables are shifted by `offset`.
  TermId apply(TermId t, int side, std::uint32_t offset) {
    if (bank_.is_ground(t)) return t;
    if (bank_.is_variable(t)) {
      const auto v = bank_.var_index(t);
      const auto& b = bindings_[side][v];
      if (b.term != kUnbound) return apply(b.term, b.side, offset);
      return bank_.variable(side == 0 ? v : v + offset);
    }
    const auto n = bank_.args(t).size();
    std::vector<TermId> args(n);
    for (std::size_t i = 0; i < n; ++i) args[i] = apply(bank_.args(t)[i], side, offset);
    return bank_.apply(bank_.functor(t), args);
  }

 private:
  struct Binding {
    TermId term;
    int side;
  };
  struct Pair {
    TermId a;
    int sa;
    TermId b;
    int sb;
  };

  void deref(TermId& t, int& side) const {
    while (bank_.is_variable(t)) {
      const auto& b = bindings_[side][bank_.var_index(t)];
      if (b.term == kUnbound) return;
      t = b.term;
      side = b.side;
    }
  }

  void bind(int side, std::uint32_t v, TermId t, int tside) {
    bindings_[side][v] = {t, tside};
    trail_.emplace_back(side, v);
  }

  bool occurs(std::uint32_t v, int vside, TermId t, int tside) const {
    deref(t, tside);
    if (bank_.is_ground(t)) return false;
    if (bank_.is_variable(t)) return tside == vside && bank_.var_index(t) == v;
    for (auto a : bank_.args(t)) {
      if (occurs(v, vside, a, tside)) return true;
    }
    return false;
  }

  TermBank& bank_;
  std::vector<Binding> bindings_[2];
  std::vector<std::pair<int, std::uint32_t>> trail_;
  std::vector<Pair> stack_;
};

/// One-way matching for subsumption: only pattern variables get bound.
class Matcher {
 public:
  explicit Matcher(const TermBank& bank) : bank_(bank) {}

  bool subsumes(const Clause& general, const Clause& specific) {
    if (general.literals.size() > specific.literals.size()) return false;
    binding_.assign(general.num_vars, kUnbound);
    trail_.clear();
    return extend(general, specific, 0);
  }

 private:
  bool extend(const Clause& c, const Clause& d, std::size_t i) {
    if (i == c.literals.size()) return true;
    const auto& lit = c.literals[i];
    for (const auto& target : d.literals) {
      if (target.positive != lit.positive ||
          bank_.functor(target.atom) != bank_.functor(lit.atom)) {
        continue;
      }
      const auto mark = trail_.size();
      if (match(lit.atom, target.atom) && extend(c, d, i + 1)) return true;
      undo(mark);
    }
    return false;
  }

  bool match(TermId pattern, TermId target) {
    if (bank_.is_ground(pattern)) return pattern == target;
    if (bank_.is_variable(pattern)) {
      auto& b = binding_[bank_.var_index(pattern)];
      if (b == kUnbound) {
        b = target;
        trail_.push_back(bank_.var_index(pattern));
        return true;
      }
      return b == target;
    }
    if (bank_.is_variable(target) || bank_.functor(pattern) != bank_.functor(target)) return false;
    const auto pa = bank_.args(pattern);
    const auto ta = bank_.args(target);
    for (std::size_t k = 0; k < pa.size(); ++k) {
      if (!match(pa[k], ta[k])) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      binding_[trail_.back()] = kUnbound;
      trail_.pop_back();
    }
  }

  const TermBank& bank_;
  std::vector<TermId> binding_;
  std::vector<std::uint32_t> trail_;
};

std::uint64_t signature(const TermBank& bank, const Clause& c) {
  std::uint64_t mask = 0;
  for (const auto& lit : c.literals) {
    const auto bit = (bank.functor(lit.atom) * 2u + (lit.positive ? 1u : 0u)) % 64u;
    mask |= std::uint64_t{1} << bit;
  }
  return mask;
}

class Saturation {
 public:
  Saturation(ClauseSet set, const SaturationLimits& limits, std::stop_token stop, bool support)
      : support_(support),
        symbols_(std::move(set.symbols)),
        bank_(std::move(set.bank)),
        store_(std::move(set.clauses)),
        limits_(limits),
        stop_(std::move(stop)),
        unifier_(*bank_),
        matcher_(*bank_),
        deadline_(std::chrono::steady_clock::now() + limits.time_limit) {}

  SaturationOutcome run() {
    SaturationOutcome out;
    out.status = loop();
    out.symbols = symbols_;
    out.bank = bank_;
    out.stats = stats_;
    if (out.status == tptp::SzsStatus::Theorem) out.refutation = extract(empty_clause_);
    return out;
  }

 private:
  using Status = tptp::SzsStatus;

  Status loop() {
    signatures_.resize(store_.size());
    const std::size_t inputs = store_.size();
    for (ClauseId id = 0; id < inputs; ++id) {
      store_[id].id = id;
      if (store_[id].is_empty()) {
        empty_clause_ = id;
        return Status::Theorem;
      }
      signatures_[id] = signature(*bank_, store_[id]);
      if (is_tautology(store_[id])) continue;
      enqueue(id);
      if (support_ && store_[id].origin.kind != Origin::Kind::NegatedGoal) {
        // Premises start out active and are never given.
        passive_flag_[id] = false;
        --passive_count_;
        active_.push_back(id);
        active_flag_[id] = true;
      }
    }
    stats_.kept = store_.size();

    std::size_t pick = 0;
    for (;;) {
      if (auto s = interrupted()) return *s;
      auto given = select(pick++);
      if (!given) return support_ ? Status::GaveUp : Status::CounterSatisfiable;
      const ClauseId g = *given;
      if (forward_subsumed(g)) continue;
      backward_subsume(g);
      active_.push_back(g);
      active_flag_[g] = true;
      ++stats_.activated;
      if (auto s = generate(g)) return *s;
    }
  }

  std::optional<Status> interrupted() const {
    if (stop_.stop_requested()) return Status::GaveUp;
    if (std::chrono::steady_clock::now() >= deadline_) return Status::Timeout;
    return std::nullopt;
  }

  void enqueue(ClauseId id) {
    if (passive_flag_.size() <= id) {
      passive_flag_.resize(id + 1, false);
      active_flag_.resize(id + 1, false);
    }
    passive_flag_[id] = true;
    by_weight_.push({priority(id), id});
    by_age_.push_back(id);
    ++passive_count_;
  }

  // Clauses descending from the negated goal weigh less, which steers the
  // weight queue towards the goal without losing completeness.
  std::uint32_t priority(ClauseId id) {
    const auto& origin = store_[id].origin;
    if (goal_derived_.size() <= id) goal_derived_.resize(id + 1, false);
    goal_derived_[id] = origin.kind == Origin::Kind::NegatedGoal ||
                        std::any_of(origin.parents.begin(), origin.parents.end(),
                                    [&](ClauseId p) { return goal_derived_[p]; });
    return store_[id].weight * (goal_derived_[id] ? 2u : 3u);
  }

  std::optional<ClauseId> select(std::size_t pick) {
    if (passive_count_ == 0) return std::nullopt;
    const bool by_age = limits_.weight_ratio == 0 || pick % (limits_.weight_ratio + 1) == limits_.weight_ratio;
    ClauseId id = 0;
    if (by_age) {
      while (!passive_flag_[by_age_.front()]) by_age_.pop_front();
      id = by_age_.front();
      by_age_.pop_front();
    } else {
      while (!passive_flag_[by_weight_.top().second]) by_weight_.pop();
      id = by_weight_.top().second;
      by_weight_.pop();
    }
    passive_flag_[id] = false;
    --passive_count_;
    return id;
  }

  bool forward_subsumed(ClauseId id) {
    const auto& c = store_[id];
    const auto sig = signatures_[id];
    for (auto a : active_) {
      if (!active_flag_[a]) continue;
      const auto& d = store_[a];
      if (d.literals.size() > c.literals.size() || (signatures_[a] & ~sig) != 0) continue;
      if (matcher_.subsumes(d, c)) return true;
    }
    return false;
  }

  void backward_subsume(ClauseId id) {
    const auto& c = store_[id];
    const auto sig = signatures_[id];
    for (auto a : active_) {
      if (!active_flag_[a]) continue;
      const auto& d = store_[a];
      if (c.literals.size() > d.literals.size() || (sig & ~signatures_[a]) != 0) continue;
      if (matcher_.subsumes(c, d)) active_flag_[a] = false;
    }
    std::erase_if(active_, [&](ClauseId a) { return !active_flag_[a]; });
  }

  // Ground negative literals first, then heavier ones.
  bool better_selection(TermId candidate, TermId current) const {
    const bool cg = bank_->is_ground(candidate);
    const bool pg = bank_->is_ground(current);
    if (cg != pg) return cg;
    return bank_->weight(candidate) > bank_->weight(current);
  }

  // Literals a clause may resolve on: its selected negative literal, or every
  // literal of a positive clause. Every resolution step therefore has one
  // positive parent, which keeps the calculus refutationally complete.
  std::vector<std::size_t> eligible(ClauseId id) const {
    const auto& lits = store_[id].literals;
    if (support_) {
      std::vector<std::size_t> all(lits.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      return all;
    }
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (lits[i].positive) continue;
      if (!pick || better_selection(lits[i].atom, lits[*pick].atom)) pick = i;
    }
    if (pick) return {*pick};
    std::vector<std::size_t> all(lits.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }

  bool is_positive(ClauseId id) const {
    return std::all_of(store_[id].literals.begin(), store_[id].literals.end(),
                       [](const Literal& l) { return l.positive; });
  }

  // Returns a final status when the empty clause appears or a limit hits.
  // store_ grows inside consider(): index it afresh, never hold references.
  std::optional<Status> generate(ClauseId g) {
    const auto n = store_[g].literals.size();
    if (support_ || is_positive(g)) {
      for (auto i : eligible(g)) {
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || (support_ && j < i)) continue;
          const auto li = store_[g].literals[i];
          const auto lj = store_[g].literals[j];
          if (li.positive != lj.positive || bank_->functor(li.atom) != bank_->functor(lj.atom)) continue;
          unifier_.reset(store_[g].num_vars, 0);
          if (!unifier_.unify(li.atom, 0, lj.atom, 0)) continue;
          std::vector<Literal> lits;
          for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const auto lk = store_[g].literals[k];
            lits.push_back({lk.positive, unifier_.apply(lk.atom, 0, 0)});
          }
          if (auto s = consider(std::move(lits), Origin{Origin::Kind::Factoring, {}, {g}})) return s;
        }
      }
    }
    const auto given_eligible = eligible(g);
    const bool given_positive = is_positive(g);
    const auto snapshot = active_;
    for (auto a : snapshot) {
      if (!active_flag_[a] || (!support_ && is_positive(a) == given_positive)) continue;
      const auto other_eligible = eligible(a);
      const auto given_size = store_[g].literals.size();
      const auto other_size = store_[a].literals.size();
      for (auto i : given_eligible) {
        for (auto j : other_eligible) {
          const auto li = store_[g].literals[i];
          const auto lj = store_[a].literals[j];
          if (li.positive == lj.positive || bank_->functor(li.atom) != bank_->functor(lj.atom)) continue;
          unifier_.reset(store_[g].num_vars, store_[a].num_vars);
          if (!unifier_.unify(li.atom, 0, lj.atom, 1)) continue;
          const auto offset = store_[g].num_vars;
          std::vector<Literal> lits;
          for (std::size_t k = 0; k < given_size; ++k) {
            if (k == i) continue;
            const auto lk = store_[g].literals[k];
            lits.push_back({lk.positive, unifier_.apply(lk.atom, 0, offset)});
          }
          for (std::size_t k = 0; k < other_size; ++k) {
            if (k == j) continue;
            const auto lk = store_[a].literals[k];
            lits.push_back({lk.positive, unifier_.apply(lk.atom, 1, offset)});
          }
          if (auto s = consider(std::move(lits), Origin{Origin::Kind::Resolution, {}, {g, a}})) {
            return s;
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Status> consider(std::vector<Literal> lits, Origin origin) {
    ++stats_.generated;
    if ((stats_.generated & 63u) == 0) {
      if (auto s = interrupted()) return s;
    }
    Clause c;
    c.literals = std::move(lits);
    c.origin = std::move(origin);
    normalize(*bank_, c);
    if (is_tautology(c)) return std::nullopt;
    const auto id = static_cast<ClauseId>(store_.size());
    c.id = id;
    store_.push_back(std::move(c));
    signatures_.push_back(signature(*bank_, store_.back()));
    if (store_.back().is_empty()) {
      empty_clause_ = id;
      return Status::Theorem;
    }
    if (forward_subsumed(id)) {
      store_.pop_back();
      signatures_.pop_back();
      return std::nullopt;
    }
    ++stats_.kept;
    enqueue(id);
    if (store_.size() > limits_.clause_limit) return Status::ResourceOut;
    return std::nullopt;
  }

  std::vector<Clause> extract(ClauseId root) const {
    std::set<ClauseId> seen;
    std::vector<ClauseId> todo{root};
    while (!todo.empty()) {
      auto id = todo.back();
      todo.pop_back();
      if (!seen.insert(id).second) continue;
      for (auto p : store_[id].origin.parents) todo.push_back(p);
    }
    std::vector<Clause> out;
    for (auto id : seen) out.push_back(store_[id]);  // ids ascend: parents first
    return out;
  }

  bool support_;
  std::shared_ptr<SymbolTable> symbols_;
  std::shared_ptr<TermBank> bank_;
  std::vector<Clause> store_;
  std::vector<std::uint64_t> signatures_;
  SaturationLimits limits_;
  std::stop_token stop_;
  Unifier unifier_;
  Matcher matcher_;
  std::chrono::steady_clock::time_point deadline_;

  std::priority_queue<std::pair<std::uint32_t, ClauseId>,
                      std::vector<std::pair<std::uint32_t, ClauseId>>, std::greater<>>
      by_weight_;
  std::deque<ClauseId> by_age_;
  std::vector<bool> passive_flag_;
  std::vector<bool> active_flag_;
  std::vector<bool> goal_derived_;
  std::size_t passive_count_ = 0;
  std::vector<ClauseId> active_;
  ClauseId empty_clause_ = 0;
  SaturationStats stats_;
};

}  // namespace

SaturationOutcome saturate(ClauseSet clauses, const SaturationLimits& limits, std::stop_token stop) {
  const bool has_goal = std::any_of(clauses.clauses.begin(), clauses.clauses.end(), [](const Clause& c) {
    return c.origin.kind == Origin::Kind::NegatedGoal;
  });
  if (!has_goal || limits.support_share <= 0.0) {
    return Saturation(std::move(clauses), limits, std::move(stop), false).run();
  }

  const auto start = std::chrono::steady_clock::now();
  // Equality axioms are left to the complete phase: in the support search
  // goal descendants chain through them without end.
  ClauseSet copy{std::make_shared<SymbolTable>(*clauses.symbols), std::make_shared<TermBank>(*clauses.bank), {}};
  std::copy_if(clauses.clauses.begin(), clauses.clauses.end(), std::back_inserter(copy.clauses),
               [](const Clause& c) { return c.origin.kind != Origin::Kind::EqAxiom; });
  auto first_limits = limits;
  first_limits.time_limit = std::max(std::chrono::milliseconds(1),
                                     std::chrono::duration_cast<std::chrono::milliseconds>(
                                         limits.time_limit * limits.support_share));
  first_limits.clause_limit = std::max<std::size_t>(1, limits.clause_limit / 8);
  auto first = Saturation(std::move(copy), first_limits, stop, true).run();
  if (first.status == tptp::SzsStatus::Theorem || stop.stop_requested()) return first;

  auto rest = limits;
  rest.time_limit = std::max(std::chrono::milliseconds(1),
                             limits.time_limit - std::chrono::duration_cast<std::chrono::milliseconds>(
                                                     std::chrono::steady_clock::now() - start));
  auto second = Saturation(std::move(clauses), rest, std::move(stop), false).run();
  second.stats.generated += first.stats.generated;
  second.stats.kept += first.stats.kept;
  second.stats.activated += first.stats.activated;
  return second;
}

}  // namespace hammer::prover
