#include <doctest.h>

#include <random>

#include "strpart/cnf.hpp"
#include "strpart/error.hpp"
#include "strpart/solve.hpp"
#include "support.hpp"

using namespace strpart;
using namespace strpart::testing;

namespace {

Instance binary_instance(uint64_t bits, size_t len, size_t k, CollisionKind kind) {
  Instance inst;
  inst.kind = kind;
  inst.max_piece_len = k;
  inst.alphabet = Alphabet::binary();
  SymStr w;
  for (size_t i = 0; i < len; ++i) w.push_back(static_cast<Sym>((bits >> i) & 1));
  inst.strings.push_back(w);
  return inst;
}

constexpr CollisionKind kAllKinds[] = {CollisionKind::Equality, CollisionKind::Prefix,
                                       CollisionKind::Suffix, CollisionKind::Factor};

}  // namespace

TEST_CASE("trivial decisions") {
  CHECK(solve_backtracking(ascii_instance("aa", 1, CollisionKind::Equality)).status ==
        SolveStatus::Unsat);
  auto r = solve_backtracking(ascii_instance("aa", 2, CollisionKind::Equality));
  REQUIRE(r.status == SolveStatus::Sat);
  CHECK(r.partition->cuts[0].empty());

  auto ab = solve_backtracking(ascii_instance("ab", 1, CollisionKind::Factor));
  REQUIRE(ab.status == SolveStatus::Sat);
  CHECK(ab.partition->cuts[0] == std::vector<size_t>{1});
}

TEST_CASE("any Sat partition passes verify_partition") {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 1500; ++iter) {
    Instance inst = binary_instance(rng(), 1 + rng() % 9, 1 + rng() % 3,
                                    kAllKinds[rng() % 4]);
    auto r = solve_backtracking(inst);
    if (r.status == SolveStatus::Sat) CHECK(verify_partition(inst, *r.partition).valid);
  }
}

TEST_CASE("mississippi fixture: count frozen against the enumeration oracle") {
  Instance inst = ascii_instance("mississippi", 2, CollisionKind::Factor);
  SolveConfig cfg;
  cfg.collect_all = true;
  auto r = solve_exhaustive(inst, cfg);
  REQUIRE(r.status == SolveStatus::Sat);
  // frozen: the enumeration finds exactly one factor-free 2-partition
  CHECK(*r.count == 1);
  REQUIRE(r.all.size() == 1);
  CHECK(r.all[0].cuts[0] == std::vector<size_t>{1, 3, 5, 7, 9});
  CHECK(count_valid(inst) == 1);

  auto bt = solve_backtracking(inst);
  REQUIRE(bt.status == SolveStatus::Sat);
  CHECK(bt.partition->cuts[0] == std::vector<size_t>{1, 3, 5, 7, 9});
}

TEST_CASE("count_valid unit values") {
  CHECK(count_valid(ascii_instance("a", 1, CollisionKind::Factor)) == 1);
  CHECK(count_valid(ascii_instance("aa", 1, CollisionKind::Equality)) == 0);
  CHECK(count_valid(ascii_instance("ab", 2, CollisionKind::Equality)) == 2);
}

TEST_CASE("backtracking agrees with the enumeration oracle on small binary strings") {
  SolveConfig cfg;
  cfg.count_all = true;
  for (size_t len = 1; len <= 8; ++len) {
    for (uint64_t bits = 0; bits < (1ull << len); ++bits) {
      for (size_t k : {1, 2, 3}) {
        for (auto kind : kAllKinds) {
          Instance inst = binary_instance(bits, len, k, kind);
          auto ex = solve_exhaustive(inst, cfg);
          auto bt = solve_backtracking(inst, cfg);
          REQUIRE(ex.status == bt.status);
          REQUIRE(*ex.count == *bt.count);
        }
      }
    }
  }
}

TEST_CASE("backtracking agrees with the oracle on multi-string instances") {
  std::mt19937 rng(321);
  SolveConfig cfg;
  cfg.count_all = true;
  for (int iter = 0; iter < 400; ++iter) {
    Instance inst;
    inst.kind = kAllKinds[rng() % 4];
    inst.max_piece_len = 1 + rng() % 3;
    inst.alphabet = Alphabet::binary();
    size_t n_strings = 2 + rng() % 2;
    for (size_t i = 0; i < n_strings; ++i)
      inst.strings.push_back(random_symstr(rng, 1 + rng() % 5, 2));
    auto ex = solve_exhaustive(inst, cfg);
    auto bt = solve_backtracking(inst, cfg);
    REQUIRE(ex.status == bt.status);
    REQUIRE(*ex.count == *bt.count);
    if (ex.partition) CHECK(verify_partition(inst, *ex.partition).valid);
  }
}

TEST_CASE("piece order does not change the answer") {
  std::mt19937 rng(77);
  SolveConfig longest, shortest;
  longest.count_all = shortest.count_all = true;
  shortest.piece_order = PieceOrder::ShortestFirst;
  for (int iter = 0; iter < 400; ++iter) {
    Instance inst = binary_instance(rng(), 1 + rng() % 8, 1 + rng() % 3,
                                    kAllKinds[rng() % 4]);
    auto a = solve_backtracking(inst, longest);
    auto b = solve_backtracking(inst, shortest);
    CHECK(a.status == b.status);
    CHECK(*a.count == *b.count);
  }
}

TEST_CASE("satisfiability is monotone in K") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 600; ++iter) {
    Instance inst = binary_instance(rng(), 1 + rng() % 8, 1 + rng() % 2,
                                    kAllKinds[rng() % 4]);
    if (solve_backtracking(inst).status != SolveStatus::Sat) continue;
    Instance relaxed = inst;
    relaxed.max_piece_len += 1;
    CHECK(solve_backtracking(relaxed).status == SolveStatus::Sat);
  }
}

TEST_CASE("suffix instances solve like their mirrored prefix instances") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 400; ++iter) {
    Instance inst = binary_instance(rng(), 1 + rng() % 8, 1 + rng() % 3,
                                    CollisionKind::Suffix);
    auto direct = solve_backtracking(inst);
    auto mirrored_r = solve_backtracking(mirror_instance(inst));
    CHECK(direct.status == mirrored_r.status);
  }
}

TEST_CASE("node budget exhaustion is reported") {
  Instance inst = binary_instance(0x5a5a5a5a, 20, 3, CollisionKind::Equality);
  SolveConfig cfg;
  cfg.count_all = true;  // force full traversal
  cfg.node_budget = 10;
  auto r = solve_backtracking(inst, cfg);
  CHECK(r.status == SolveStatus::BudgetExhausted);
  CHECK(r.stats.nodes >= 10);
  auto ex = solve_exhaustive(inst, cfg);
  CHECK(ex.status == SolveStatus::BudgetExhausted);
  CHECK_THROWS_AS(count_valid(inst, cfg), BudgetError);
}

TEST_CASE("cnf export unit cases") {
  // two forced single-letter pieces that are equal: unsatisfiable
  Instance aa = ascii_instance("aa", 1, CollisionKind::Equality);
  auto doc = export_cnf(aa);
  REQUIRE(doc.var_count() == 2);
  bool has_mutex = false;
  for (const auto& cl : doc.clauses)
    has_mutex |= cl == std::vector<int>{-1, -2};
  CHECK(has_mutex);

  std::string dimacs = render_dimacs(doc);
  CHECK(dimacs.find("p cnf 2") != std::string::npos);
  CHECK(dimacs.find("c 1 = string 0 offset 0 len 1") != std::string::npos);
}

TEST_CASE("cnf models decode to valid partitions and counts match the oracle") {
  std::mt19937 rng(31337);
  auto count_models = [](const CnfDocument& doc,
                         auto&& on_model) -> uint64_t {
    // plain truth-table sweep over the piece variables
    size_t n = doc.var_count();
    REQUIRE(n <= 26);
    uint64_t models = 0;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
      bool ok = true;
      for (const auto& cl : doc.clauses) {
        bool sat = false;
        for (int lit : cl) {
          size_t v = static_cast<size_t>(std::abs(lit)) - 1;
          bool val = (mask >> v) & 1;
          if (lit < 0) val = !val;
          sat |= val;
          if (sat) break;
        }
        if (!sat) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ++models;
        std::vector<bool> model(n);
        for (size_t v = 0; v < n; ++v) model[v] = (mask >> v) & 1;
        on_model(model);
      }
    }
    return models;
  };

  int checked = 0;
  for (int iter = 0; iter < 60; ++iter) {
    size_t len = 1 + rng() % 5;  // keeps the truth table under 2^26
    size_t k = 1 + rng() % 3;
    Instance inst = binary_instance(rng(), len, k, kAllKinds[rng() % 4]);
    auto doc = export_cnf(inst);
    if (doc.var_count() > 20) continue;
    uint64_t models = count_models(doc, [&](const std::vector<bool>& model) {
      Partition p = partition_from_model(inst, doc, model);
      CHECK(verify_partition(inst, p).valid);
    });
    CHECK(models == count_valid(inst));
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("budgets must be positive when present") {
  Instance inst = ascii_instance("ab", 2, CollisionKind::Equality);
  SolveConfig zero_nodes;
  zero_nodes.node_budget = 0;
  CHECK_THROWS_AS(solve_backtracking(inst, zero_nodes), SemanticError);
  SolveConfig zero_secs;
  zero_secs.time_budget_secs = 0.0;
  CHECK_THROWS_AS(solve_exhaustive(inst, zero_secs), SemanticError);
}
