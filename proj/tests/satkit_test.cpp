#include <doctest.h>

#include <algorithm>
#include <random>

#include "strpart/error.hpp"
#include "strpart/sat3.hpp"

using namespace strpart;

namespace {

// c1 = (x1 v x2), c2 = (x1 v x2), c3 = (~x1 v ~x2): each variable twice
// positive, once negated.
Formula3Sat3 tiny_formula() {
  Formula3Sat3 f;
  f.n_vars = 2;
  f.clauses = {{{0, false}, {1, false}},
               {{0, false}, {1, false}},
               {{0, true}, {1, true}}};
  return f;
}

}  // namespace

TEST_CASE("validate_3sat3 accepts the canonical fixture") {
  CHECK(validate_3sat3(tiny_formula()).empty());
}

TEST_CASE("validate_3sat3 reports occurrence violations") {
  Formula3Sat3 f;
  f.n_vars = 3;
  f.clauses = {{{0, false}, {1, false}, {2, false}}};
  auto violations = validate_3sat3(f);
  CHECK(violations.size() == 3);  // every variable occurs once, not three times

  Formula3Sat3 four = tiny_formula();
  four.clauses[0].push_back({0, true});
  CHECK_FALSE(validate_3sat3(four).empty());

  Formula3Sat3 dup = tiny_formula();
  dup.clauses[2] = {{0, true}, {0, false}};
  bool mentions_repeat = false;
  for (const auto& v : validate_3sat3(dup))
    mentions_repeat |= v.find("repeats") != std::string::npos;
  CHECK(mentions_repeat);
}

TEST_CASE("gen_3sat3 is deterministic and always validates") {
  for (uint32_t n : {2u, 3u, 4u, 7u}) {
    for (uint64_t seed = 0; seed < 25; ++seed) {
      Formula3Sat3 f = gen_3sat3(n, seed);
      CHECK(validate_3sat3(f).empty());
      CHECK(f == gen_3sat3(n, seed));
      size_t occurrences = 0;
      for (const auto& cl : f.clauses) occurrences += cl.size();
      CHECK(occurrences == 3 * n);
    }
  }
  CHECK_THROWS_AS(gen_3sat3(1, 0), SemanticError);
}

TEST_CASE("gen_3sat3 with two variables yields only 2-literal clauses") {
  Formula3Sat3 f = gen_3sat3(2, 17);
  for (const auto& cl : f.clauses) CHECK(cl.size() == 2);
}

TEST_CASE("brute-force solver on the fixture") {
  auto a = solve_sat_bruteforce(tiny_formula());
  REQUIRE(a.has_value());
  CHECK(satisfies(tiny_formula(), *a));
  // lexicographically first satisfying assignment: x1=false fails c1/c2 only
  // if x2 is false too; first hit is x1=false, x2=true
  CHECK(a->values == std::vector<bool>{false, true});
}

TEST_CASE("brute-force answer matches a direct truth-table sweep") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Formula3Sat3 f = gen_3sat3(2 + seed % 4, seed);
    bool any = false;
    for (uint64_t mask = 0; mask < (1ull << f.n_vars) && !any; ++mask) {
      Assignment cand;
      for (uint32_t v = 0; v < f.n_vars; ++v)
        cand.values.push_back((mask >> (f.n_vars - 1 - v)) & 1);
      any = satisfies(f, cand);
    }
    CHECK(solve_sat_bruteforce(f).has_value() == any);
  }
}

TEST_CASE("all-positive clauses are satisfied by all-true") {
  std::mt19937 rng(5);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Formula3Sat3 f = gen_3sat3(3 + seed % 3, seed);
    bool all_positive = true;
    for (const auto& cl : f.clauses)
      for (const Lit& l : cl) all_positive &= !l.negated;
    if (!all_positive) continue;
    Assignment a;
    a.values.assign(f.n_vars, true);
    CHECK(satisfies(f, a));
  }
}

TEST_CASE("brute force commutes with variable relabeling") {
  std::mt19937 rng(9);
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Formula3Sat3 f = gen_3sat3(4, seed);
    std::vector<uint32_t> perm(f.n_vars);
    for (uint32_t i = 0; i < f.n_vars; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Formula3Sat3 g = f;
    for (auto& cl : g.clauses)
      for (auto& l : cl) l.var = perm[l.var];
    auto fa = solve_sat_bruteforce(f);
    auto ga = solve_sat_bruteforce(g);
    REQUIRE(fa.has_value() == ga.has_value());
    if (fa) {
      // relabeling the solution of f solves g, and vice versa
      Assignment relabeled;
      relabeled.values.resize(f.n_vars);
      for (uint32_t v = 0; v < f.n_vars; ++v) relabeled.values[perm[v]] = fa->values[v];
      CHECK(satisfies(g, relabeled));
      Assignment back;
      back.values.resize(f.n_vars);
      for (uint32_t v = 0; v < f.n_vars; ++v) back.values[v] = ga->values[perm[v]];
      CHECK(satisfies(f, back));
    }
  }
}

TEST_CASE("size guard on the brute-force sweep") {
  Formula3Sat3 f;
  f.n_vars = 30;
  CHECK_THROWS_AS(solve_sat_bruteforce(f), SemanticError);
}

TEST_CASE("sat3 text round-trip") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Formula3Sat3 f = gen_3sat3(5, seed);
    Formula3Sat3 g = parse_sat3(render_sat3(f));
    CHECK(f == g);
    CHECK(render_sat3(f) == render_sat3(g));
  }
  CHECK_THROWS_AS(parse_sat3("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_sat3("p sat3 2 1\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_sat3("p sat3 2 2\n1 2\n"), ParseError);
  Formula3Sat3 with_comments = parse_sat3("# header\np sat3 2 1\nc note\n1 -2\n");
  REQUIRE(with_comments.clauses.size() == 1);
  CHECK(with_comments.clauses[0][1].negated);
}
