#pragma once

#include <string>
#include <vector>

#include "strpart/error.hpp"
#include "strpart/gadgets.hpp"

namespace strpart::detail {

// Clause-position pairs of the three occurrences of one variable.
struct VarOccurrences {
  std::pair<uint32_t, uint32_t> pos_first;   // first positive, in clause order
  std::pair<uint32_t, uint32_t> pos_second;  // second positive
  std::pair<uint32_t, uint32_t> negated;
};

inline std::vector<VarOccurrences> occurrences_of(const Formula3Sat3& f) {
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> pos(f.n_vars), neg(f.n_vars);
  for (uint32_t i = 0; i < f.clauses.size(); ++i)
    for (uint32_t j = 0; j < f.clauses[i].size(); ++j) {
      const Lit& l = f.clauses[i][j];
      (l.negated ? neg : pos)[l.var].push_back({i, j});
    }
  std::vector<VarOccurrences> out(f.n_vars);
  for (uint32_t v = 0; v < f.n_vars; ++v) {
    if (pos[v].size() != 2 || neg[v].size() != 1)
      throw SemanticError("formula is not 3SAT(3): variable " + std::to_string(v + 1));
    out[v] = {pos[v][0], pos[v][1], neg[v][0]};
  }
  return out;
}

inline void require_valid(const Formula3Sat3& f) {
  auto violations = validate_3sat3(f);
  if (!violations.empty())
    throw SemanticError("formula is not 3SAT(3): " + violations.front());
}

inline std::string lit_role(uint32_t clause, uint32_t lit) {
  return "lit:" + std::to_string(clause + 1) + ":" + std::to_string(lit + 1);
}

inline std::string lit_symbol(uint32_t clause, uint32_t lit) {
  return "c_" + std::to_string(clause + 1) + "^" + std::to_string(lit + 1);
}

inline std::string var_role(uint32_t v) { return "var:" + std::to_string(v + 1); }

inline std::string var_role(uint32_t v, uint32_t k) {
  return "var:" + std::to_string(v + 1) + ":" + std::to_string(k);
}

inline std::string var_symbol(uint32_t v) { return "x_" + std::to_string(v + 1); }

inline std::string var_symbol(uint32_t v, uint32_t k) {
  return "x_" + std::to_string(v + 1) + "^" + std::to_string(k);
}

// Interns all literal letters in (clause, position) order, recording roles.
inline std::vector<std::vector<Sym>> intern_literal_letters(const Formula3Sat3& f,
                                                            Instance& inst,
                                                            SymbolTable& table) {
  std::vector<std::vector<Sym>> lit_syms(f.clauses.size());
  for (uint32_t i = 0; i < f.clauses.size(); ++i)
    for (uint32_t j = 0; j < f.clauses[i].size(); ++j) {
      std::string name = lit_symbol(i, j);
      lit_syms[i].push_back(inst.alphabet.intern(name));
      table.roles[lit_role(i, j)] = name;
    }
  return lit_syms;
}

inline size_t ceil_log2(size_t n) {
  size_t bits = 0;
  while ((size_t{1} << bits) < n) ++bits;
  return bits;
}

}  // namespace strpart::detail
