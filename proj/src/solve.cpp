#include "strpart/solve.hpp"

#include <chrono>

#include "strpart/collision_index.hpp"
#include "strpart/error.hpp"

namespace strpart {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  std::optional<uint64_t> node_limit;
  std::optional<double> time_limit;
  Clock::time_point start = Clock::now();
  uint64_t nodes = 0;
  bool exhausted = false;

  // Returns false once the budget is gone.  The time check is amortized.
  bool tick() {
    ++nodes;
    if (node_limit && nodes > *node_limit) exhausted = true;
    if (time_limit && (nodes & 0xfff) == 0 && elapsed() > *time_limit) exhausted = true;
    return !exhausted;
  }

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

void record_solution(const Partition& p, const SolveConfig& cfg, SolveResult& res) {
  if (!res.partition) res.partition = p;
  if (cfg.count_all || cfg.collect_all) res.count = res.count.value_or(0) + 1;
  if (cfg.collect_all && res.all.size() < cfg.collect_cap) res.all.push_back(p);
}

bool keep_searching(const SolveConfig& cfg, const SolveResult& res) {
  return cfg.count_all || cfg.collect_all || !res.partition;
}

// One node of the explicit depth-first stack.  Both solvers share the shape:
// a node is a (string, position) pair plus how far its piece-length loop has
// advanced and whether a piece is currently placed below it.  An explicit
// stack keeps the search depth off the call stack; single-string instances
// in the megabyte range would otherwise overflow it.
struct Frame {
  size_t si = 0;
  size_t pos = 0;
  size_t step = 0;
  size_t placed_len = 0;  // 0 when nothing is placed by this frame
};

// Piece length for loop index `step` at most `longest`, honoring the order.
size_t step_length(const SolveConfig& cfg, size_t longest, size_t step) {
  return cfg.piece_order == PieceOrder::LongestFirst ? longest - step : step + 1;
}

// Cut-point odometer for the exhaustive enumeration: every composition of
// every string into parts of length at most K, each complete candidate
// verified from scratch.
void exhaust(const Instance& inst, const SolveConfig& cfg, Partition& current,
             Budget& budget, SolveResult& res) {
  std::vector<Frame> stack{{0, 0, 0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    res.stats.max_depth = std::max(res.stats.max_depth, stack.size() - 1);
    if (f.placed_len) {
      if (f.pos + f.placed_len < inst.strings[f.si].size()) current.cuts[f.si].pop_back();
      f.placed_len = 0;
    }
    if (f.si == inst.strings.size()) {
      if (!budget.tick()) return;
      if (verify_partition(inst, current).valid) record_solution(current, cfg, res);
      if (!keep_searching(cfg, res)) return;
      stack.pop_back();
      continue;
    }
    size_t longest = std::min(inst.max_piece_len, inst.strings[f.si].size() - f.pos);
    if (f.step == longest) {
      stack.pop_back();
      continue;
    }
    size_t l = f.step + 1;
    ++f.step;
    f.placed_len = l;
    size_t next = f.pos + l;
    if (next == inst.strings[f.si].size()) {
      stack.push_back({f.si + 1, 0, 0, 0});
    } else {
      current.cuts[f.si].push_back(next);
      stack.push_back({f.si, next, 0, 0});
    }
  }
}

void backtrack(const Instance& inst, const SolveConfig& cfg, CollisionIndex& index,
               Partition& current, Budget& budget, SolveResult& res) {
  std::vector<Frame> stack{{0, 0, 0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    res.stats.max_depth = std::max(res.stats.max_depth, stack.size() - 1);
    if (f.placed_len) {
      index.remove(SymStrView(inst.strings[f.si]).substr(f.pos, f.placed_len));
      if (f.pos + f.placed_len < inst.strings[f.si].size()) current.cuts[f.si].pop_back();
      f.placed_len = 0;
    }
    if (f.si == inst.strings.size()) {
      record_solution(current, cfg, res);
      if (!keep_searching(cfg, res)) return;
      stack.pop_back();
      continue;
    }
    const SymStr& w = inst.strings[f.si];
    size_t longest = std::min(inst.max_piece_len, w.size() - f.pos);
    bool advanced = false;
    while (f.step < longest) {
      size_t l = step_length(cfg, longest, f.step);
      ++f.step;
      if (!budget.tick()) return;
      SymStrView piece = SymStrView(w).substr(f.pos, l);
      if (index.would_collide(piece)) continue;
      index.add(piece);
      f.placed_len = l;
      size_t next = f.pos + l;
      if (next == w.size()) {
        stack.push_back({f.si + 1, 0, 0, 0});
      } else {
        current.cuts[f.si].push_back(next);
        stack.push_back({f.si, next, 0, 0});
      }
      advanced = true;
      break;
    }
    if (!advanced) stack.pop_back();
  }
}

SolveResult run(const Instance& inst, const SolveConfig& cfg, bool exhaustive) {
  inst.validate();
  if (cfg.node_budget && *cfg.node_budget == 0)
    throw SemanticError("solve: node budget must be positive");
  if (cfg.time_budget_secs && *cfg.time_budget_secs <= 0)
    throw SemanticError("solve: time budget must be positive");
  Budget budget{cfg.node_budget, cfg.time_budget_secs};
  SolveResult res;
  if (cfg.count_all || cfg.collect_all) res.count = 0;
  Partition current;
  current.cuts.resize(inst.strings.size());
  if (exhaustive) {
    exhaust(inst, cfg, current, budget, res);
  } else {
    CollisionIndex index(inst.kind, inst.max_piece_len);
    backtrack(inst, cfg, index, current, budget, res);
  }
  res.stats.nodes = budget.nodes;
  res.stats.elapsed_secs = budget.elapsed();
  if (budget.exhausted) {
    res.status = SolveStatus::BudgetExhausted;
  } else {
    res.status = res.partition ? SolveStatus::Sat : SolveStatus::Unsat;
  }
  return res;
}

}  // namespace

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::BudgetExhausted: return "BUDGET";
  }
  return "?";
}

SolveResult solve_exhaustive(const Instance& inst, const SolveConfig& cfg) {
  return run(inst, cfg, true);
}

SolveResult solve_backtracking(const Instance& inst, const SolveConfig& cfg) {
  return run(inst, cfg, false);
}

SolveResult solve(const Instance& inst, const SolveConfig& cfg) {
  return run(inst, cfg, cfg.strategy == Strategy::Exhaustive);
}

uint64_t count_valid(const Instance& inst, const SolveConfig& cfg) {
  SolveConfig counting = cfg;
  counting.count_all = true;
  SolveResult res = solve_exhaustive(inst, counting);
  if (res.status == SolveStatus::BudgetExhausted)
    throw BudgetError("count_valid: budget exhausted after " +
                      std::to_string(res.stats.nodes) + " nodes");
  return *res.count;
}

}  // namespace strpart
