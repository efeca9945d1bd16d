#include <doctest.h>

#include "gadget_support.hpp"
#include "strpart/gadgets.hpp"
#include "strpart/solve.hpp"
#include "support.hpp"

using namespace strpart;
using namespace strpart::testing;

namespace {

std::vector<Assignment> all_satisfying(const Formula3Sat3& f) {
  std::vector<Assignment> out;
  for (uint64_t mask = 0; mask < (1ull << f.n_vars); ++mask) {
    Assignment a;
    for (uint32_t v = 0; v < f.n_vars; ++v)
      a.values.push_back((mask >> (f.n_vars - 1 - v)) & 1);
    if (satisfies(f, a)) out.push_back(a);
  }
  return out;
}

}  // namespace

// Every valid partition of a reduced instance must read back as a satisfying
// assignment, and every satisfying assignment must produce a verifying
// witness.  The partition counts are frozen from the enumeration oracle.
TEST_CASE("all valid partitions of the fixture reductions extract correctly") {
  Formula3Sat3 f = two_var_formula();
  auto satisfying = all_satisfying(f);
  REQUIRE(satisfying.size() == 2);  // (T,F) and (F,T)

  struct Expected {
    Family family;
    Stage stage;
    uint64_t count;
  };
  const Expected cases[] = {
      {Family::EF, Stage::Msp, 4}, {Family::EF, Stage::Sp, 8},
      {Family::FF, Stage::Msp, 2}, {Family::FF, Stage::Sp, 2},
      {Family::PF, Stage::Msp, 2}, {Family::PF, Stage::Sp, 2},
  };
  for (const auto& expected : cases) {
    CAPTURE(family_name(expected.family));
    CAPTURE(stage_name(expected.stage));
    ReductionOutput r = run_reduction(expected.family, expected.stage, f, {});

    SolveConfig cfg;
    cfg.collect_all = true;
    // EF and PF multi-string stages are small enough for the enumeration
    // oracle; FF enforcers make the raw composition product explode, so the
    // single-string stages and FF rely on the (independently cross-checked)
    // backtracking search
    bool enumerable = expected.stage == Stage::Msp && expected.family != Family::FF;
    auto res = enumerable ? solve_exhaustive(r.instance, cfg)
                          : solve_backtracking(r.instance, cfg);
    REQUIRE(res.status == SolveStatus::Sat);
    CHECK(*res.count == expected.count);
    REQUIRE(res.all.size() == expected.count);
    for (const Partition& p : res.all)
      CHECK(satisfies(f, assignment_from_partition(r, p)));

    for (const Assignment& a : satisfying)
      CHECK(verify_partition(r.instance, witness_from_assignment(r, a)).valid);
  }
}

TEST_CASE("K and kind match the family and stage on every pipeline output") {
  Formula3Sat3 f = two_var_formula();
  for (auto family : {Family::EF, Family::FF, Family::PF}) {
    for (auto stage : {Stage::Msp, Stage::Sp, Stage::MspBinary, Stage::SpBinary}) {
      ReductionOutput r = run_reduction(family, stage, f, {});
      size_t k = r.instance.max_piece_len;
      bool binary = stage == Stage::MspBinary || stage == Stage::SpBinary;
      CHECK(r.instance.alphabet.is_binary() == binary);
      switch (family) {
        case Family::EF:
          CHECK(r.instance.kind == CollisionKind::Equality);
          CHECK(k == (binary ? 2 * r.block_len : 2));
          break;
        case Family::FF:
          CHECK(r.instance.kind == CollisionKind::Factor);
          CHECK(k == (binary ? 2 * r.block_len + 1 : 3));
          break;
        case Family::PF:
          CHECK(r.instance.kind == CollisionKind::Prefix);
          CHECK(k == (binary ? 2 * r.block_len : 2));
          break;
      }
      bool single = stage == Stage::Sp || stage == Stage::SpBinary;
      CHECK((r.instance.strings.size() == 1) == single);
      // literal markers land on in-range spans
      for (const LiteralMarker& mk : r.markers) {
        REQUIRE(mk.span.string_index < r.instance.strings.size());
        CHECK(mk.span.begin + mk.span.len <=
              r.instance.strings[mk.span.string_index].size());
        CHECK(mk.span.len > 0);
      }
    }
  }
}

// The same bidirectional check on generated three-variable formulas.
TEST_CASE("per-partition extraction over generated formulas") {
  for (uint64_t seed = 0; seed < 4; ++seed) {
    Formula3Sat3 f = gen_3sat3(3, seed);
    auto satisfying = all_satisfying(f);
    for (auto family : {Family::EF, Family::FF, Family::PF}) {
      ReductionOutput r = run_reduction(family, Stage::Msp, f, {});
      SolveConfig cfg;
      cfg.collect_all = true;
      auto res = solve_backtracking(r.instance, cfg);
      REQUIRE((res.status == SolveStatus::Sat) == !satisfying.empty());
      for (const Partition& p : res.all)
        CHECK(satisfies(f, assignment_from_partition(r, p)));
      for (const Assignment& a : satisfying)
        CHECK(verify_partition(r.instance, witness_from_assignment(r, a)).valid);
    }
  }
}
