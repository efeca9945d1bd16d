#pragma once

#include <cstdint>
#include <optional>

#include "strpart/instance.hpp"
#include "strpart/partition.hpp"

namespace strpart {

enum class Strategy { Exhaustive, Backtracking };
enum class PieceOrder { LongestFirst, ShortestFirst };

struct SolveConfig {
  Strategy strategy = Strategy::Backtracking;
  std::optional<uint64_t> node_budget = 50'000'000;
  std::optional<double> time_budget_secs = 60.0;
  // Long pieces constrain the collision index sooner, so they go first.
  PieceOrder piece_order = PieceOrder::LongestFirst;
  bool count_all = false;
  // Collects every valid partition (up to collect_cap); implies counting.
  bool collect_all = false;
  size_t collect_cap = 1u << 20;
};

enum class SolveStatus { Sat, Unsat, BudgetExhausted };

const char* status_name(SolveStatus s);

struct SolveStats {
  uint64_t nodes = 0;
  size_t max_depth = 0;
  double elapsed_secs = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<Partition> partition;  // present iff a valid partition was found
  SolveStats stats;
  std::optional<uint64_t> count;    // number of valid partitions (count_all)
  std::vector<Partition> all;       // collect_all only
};

// Enumerates every combination of cut points (the product, over strings, of
// all compositions into parts of length 1..K) and checks each candidate with
// verify_partition.  Slow and simple; this is the oracle the backtracking
// solver is tested against.
SolveResult solve_exhaustive(const Instance& inst, const SolveConfig& cfg = {});

// Depth-first search over strings in instance order, extending the current
// string by one piece of length 1..K and pruning with
// CollisionIndex::would_collide.  Agrees with solve_exhaustive on status (and
// count) for every instance both can finish.
SolveResult solve_backtracking(const Instance& inst, const SolveConfig& cfg = {});

// Dispatches on cfg.strategy.
SolveResult solve(const Instance& inst, const SolveConfig& cfg = {});

// Exact number of valid K-partitions; throws BudgetError on exhaustion.
uint64_t count_valid(const Instance& inst, const SolveConfig& cfg = {});

}  // namespace strpart
