#include "strpart/sat3.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "strpart/error.hpp"

namespace strpart {

std::vector<std::string> validate_3sat3(const Formula3Sat3& f) {
  std::vector<std::string> violations;
  std::vector<int> pos(f.n_vars, 0), neg(f.n_vars, 0);
  for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
    const auto& cl = f.clauses[ci];
    if (cl.size() != 2 && cl.size() != 3)
      violations.push_back("clause " + std::to_string(ci + 1) + " has " +
                           std::to_string(cl.size()) + " literals (want 2 or 3)");
    for (size_t a = 0; a < cl.size(); ++a) {
      if (cl[a].var >= f.n_vars) {
        violations.push_back("clause " + std::to_string(ci + 1) +
                             " references variable out of range");
        continue;
      }
      (cl[a].negated ? neg : pos)[cl[a].var]++;
      for (size_t b = a + 1; b < cl.size(); ++b)
        if (cl[a].var == cl[b].var)
          violations.push_back("clause " + std::to_string(ci + 1) + " repeats variable " +
                               std::to_string(cl[a].var + 1));
    }
  }
  for (uint32_t v = 0; v < f.n_vars; ++v) {
    if (pos[v] != 2 || neg[v] != 1)
      violations.push_back("variable " + std::to_string(v + 1) + " occurs " +
                           std::to_string(pos[v]) + " times positive and " +
                           std::to_string(neg[v]) + " times negated (want 2 and 1)");
  }
  return violations;
}

Formula3Sat3 gen_3sat3(uint32_t n_vars, uint64_t seed) {
  if (n_vars < 2) throw SemanticError("gen_3sat3: n_vars must be >= 2");
  std::mt19937_64 rng(seed);
  const int attempts = 500;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    // clause sizes: a threes and 3u twos with 3a + 6u = 3n
    uint32_t u_max = n_vars / 2;
    uint32_t u_min = n_vars >= 3 ? 0 : u_max;  // two variables cannot fill a 3-clause
    uint32_t u = u_min + (u_max > u_min
                              ? std::uniform_int_distribution<uint32_t>(0, u_max - u_min)(rng)
                              : 0);
    std::vector<int> sizes(n_vars - 2 * u, 3);
    sizes.insert(sizes.end(), 3 * u, 2);
    std::shuffle(sizes.begin(), sizes.end(), rng);

    // occurrence pool: slot = (variable, polarity)
    std::vector<Lit> pool;
    for (uint32_t v = 0; v < n_vars; ++v) {
      pool.push_back({v, false});
      pool.push_back({v, false});
      pool.push_back({v, true});
    }
    std::shuffle(pool.begin(), pool.end(), rng);

    Formula3Sat3 f;
    f.n_vars = n_vars;
    bool dead = false;
    for (int size : sizes) {
      std::vector<Lit> clause;
      // draw `size` slots with pairwise distinct variables, scanning from the
      // back so erasure is cheap
      for (int k = 0; k < size && !dead; ++k) {
        std::vector<size_t> candidates;
        for (size_t i = 0; i < pool.size(); ++i) {
          bool used = false;
          for (const Lit& l : clause) used |= l.var == pool[i].var;
          if (!used) candidates.push_back(i);
        }
        if (candidates.empty()) {
          dead = true;
          break;
        }
        size_t pick =
            candidates[std::uniform_int_distribution<size_t>(0, candidates.size() - 1)(rng)];
        clause.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
      }
      if (dead) break;
      f.clauses.push_back(std::move(clause));
    }
    if (dead || !pool.empty()) continue;
    if (validate_3sat3(f).empty()) return f;
  }
  throw SemanticError("gen_3sat3: generation failed after retries (n_vars=" +
                      std::to_string(n_vars) + ", seed=" + std::to_string(seed) + ")");
}

bool satisfies(const Formula3Sat3& f, const Assignment& a) {
  if (a.values.size() != f.n_vars) return false;
  for (const auto& cl : f.clauses) {
    bool sat = false;
    for (const Lit& l : cl) sat |= a.values[l.var] != l.negated;
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> solve_sat_bruteforce(const Formula3Sat3& f) {
  if (f.n_vars > 24) throw SemanticError("solve_sat_bruteforce: n_vars > 24");
  uint64_t limit = 1ull << f.n_vars;
  for (uint64_t mask = 0; mask < limit; ++mask) {
    Assignment a;
    a.values.resize(f.n_vars);
    for (uint32_t v = 0; v < f.n_vars; ++v)
      a.values[v] = (mask >> (f.n_vars - 1 - v)) & 1;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

std::string render_sat3(const Formula3Sat3& f) {
  std::ostringstream out;
  out << "p sat3 " << f.n_vars << " " << f.clauses.size() << "\n";
  for (const auto& cl : f.clauses) {
    for (size_t i = 0; i < cl.size(); ++i) {
      if (i) out << " ";
      out << (cl[i].negated ? "-" : "") << (cl[i].var + 1);
    }
    out << "\n";
  }
  return out.str();
}

Formula3Sat3 parse_sat3(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Formula3Sat3 f;
  bool header = false;
  size_t declared_clauses = 0;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#' || tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> f.n_vars >> declared_clauses) || fmt != "sat3")
        throw ParseError("line " + std::to_string(line_no) + ": expected 'p sat3 <n> <m>'");
      header = true;
      continue;
    }
    if (!header)
      throw ParseError("line " + std::to_string(line_no) + ": clause before 'p sat3' header");
    std::vector<Lit> clause;
    ls.clear();
    ls.seekg(0);
    long long v;
    while (ls >> v) {
      if (v == 0 || static_cast<uint64_t>(std::llabs(v)) > f.n_vars)
        throw ParseError("line " + std::to_string(line_no) + ": literal " +
                         std::to_string(v) + " out of range");
      clause.push_back({static_cast<uint32_t>(std::llabs(v) - 1), v < 0});
    }
    if (ls.fail() && !ls.eof())
      throw ParseError("line " + std::to_string(line_no) + ": malformed literal");
    f.clauses.push_back(std::move(clause));
  }
  if (!header) throw ParseError("missing 'p sat3' header");
  if (f.clauses.size() != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                     " clauses but " + std::to_string(f.clauses.size()) + " found");
  return f;
}

}  // namespace strpart
