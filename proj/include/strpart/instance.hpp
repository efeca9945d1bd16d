#pragma once

#include <string>
#include <vector>

#include "strpart/alphabet.hpp"

namespace strpart {

// The four collision relations between selected pieces.  Factor subsumes the
// other three: a copy, prefix or suffix of a piece is also a factor of it.
enum class CollisionKind { Equality, Prefix, Suffix, Factor };

const char* kind_name(CollisionKind k);
CollisionKind kind_from_name(const std::string& name);

// One decision-problem instance: may the strings be partitioned into pieces
// of length at most max_piece_len with no two pieces colliding under kind?
struct Instance {
  CollisionKind kind = CollisionKind::Equality;
  size_t max_piece_len = 1;  // K
  Alphabet alphabet;
  std::vector<SymStr> strings;  // ordered; duplicates permitted

  size_t total_length() const;

  // Throws SemanticError unless K >= 1, every string is non-empty and every
  // symbol index is in range.
  void validate() const;
};

// Reverses every string and swaps Prefix <-> Suffix.  An involution; a
// partition is valid for inst iff its mirrored cuts are valid for the result.
Instance mirror_instance(const Instance& inst);

}  // namespace strpart
