#pragma once

#include <string>
#include <vector>

#include "strpart/instance.hpp"
#include "strpart/partition.hpp"

namespace strpart {

// Propositional encoding of one instance.  Variable v (1-based) asserts that
// the piece vars[v-1] is selected, i.e. a piece of that length starts at that
// offset of that string.  Satisfying assignments correspond one-to-one with
// valid K-partitions.
struct CnfDocument {
  std::vector<PieceRef> vars;           // meta for variables 1..n
  std::vector<std::vector<int>> clauses;  // DIMACS-style signed literals

  size_t var_count() const { return vars.size(); }
};

// Clauses enforce (a) tiling: some piece starts at offset 0, every selected
// piece is followed by exactly one piece (unless it ends the string) and
// every selected piece at offset > 0 is preceded by one; and (b) freeness: a
// binary mutual-exclusion clause for every pair of position-distinct piece
// occurrences whose texts collide under inst.kind.
CnfDocument export_cnf(const Instance& inst);

// DIMACS text with a comment header mapping variables to
// (string, offset, length) triples.
std::string render_dimacs(const CnfDocument& doc);

// Reads the selected pieces of a satisfying assignment back into cut lists.
// model[v-1] is the value of variable v.
Partition partition_from_model(const Instance& inst, const CnfDocument& doc,
                               const std::vector<bool>& model);

}  // namespace strpart
