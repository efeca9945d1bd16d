#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace strpart {

// Literal of a 3SAT(3) formula; variables are 0-based indices.
struct Lit {
  uint32_t var = 0;
  bool negated = false;

  bool operator==(const Lit& o) const { return var == o.var && negated == o.negated; }
};

// CNF formula in which every clause has two or three literals and every
// variable occurs in exactly three clauses, twice positive and once negated.
struct Formula3Sat3 {
  uint32_t n_vars = 0;
  std::vector<std::vector<Lit>> clauses;

  bool operator==(const Formula3Sat3& o) const {
    return n_vars == o.n_vars && clauses == o.clauses;
  }
};

struct Assignment {
  std::vector<bool> values;  // one per variable
};

// Checks both defining conditions plus no-duplicate-variable-in-clause and
// index ranges.  Returns every violation found; empty means valid.
std::vector<std::string> validate_3sat3(const Formula3Sat3& f);

// Deterministic seeded generator; every output passes validate_3sat3.
// Builds the occurrence pool (two positive and one negative slot per
// variable), draws a clause-size sequence over {2,3} that exactly exhausts
// the pool, then fills clauses by sampling slots without repeating a
// variable.  Dead ends are retried with fresh randomness; throws
// SemanticError after the retry bound.
Formula3Sat3 gen_3sat3(uint32_t n_vars, uint64_t seed);

bool satisfies(const Formula3Sat3& f, const Assignment& a);

// 2^n sweep; returns the lexicographically first satisfying assignment
// (variable 0 most significant, false < true) or nullopt if unsatisfiable.
// Throws SemanticError for n_vars > 24.
std::optional<Assignment> solve_sat_bruteforce(const Formula3Sat3& f);

// Text format: "p sat3 <n_vars> <n_clauses>" header, then one clause per
// line as signed 1-based integers.  '#' and 'c' lines are comments.
std::string render_sat3(const Formula3Sat3& f);
Formula3Sat3 parse_sat3(const std::string& text);

}  // namespace strpart
