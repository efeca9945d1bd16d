#pragma once

#include <vector>

#include "strpart/instance.hpp"

namespace strpart {

// A partition is stored as the interior cut points of every string, strictly
// increasing within (0, |w|).  Cut points 0 and |w| are implicit; the pieces
// are derived.
struct Partition {
  std::vector<std::vector<size_t>> cuts;

  bool operator==(const Partition& o) const { return cuts == o.cuts; }
};

// Splits w at the given interior cut points.  Concatenating the result
// reproduces w; the piece count is |cuts| + 1.  Throws SemanticError on
// out-of-range or non-increasing cuts.
std::vector<SymStr> pieces_of(SymStrView w, const std::vector<size_t>& cuts);

// A piece occurrence: the span [begin, begin+len) of one instance string.
struct PieceRef {
  size_t string_index = 0;
  size_t begin = 0;
  size_t len = 0;

  bool operator==(const PieceRef& o) const {
    return string_index == o.string_index && begin == o.begin && len == o.len;
  }
};

struct Violation {
  enum class Kind { LengthViolation, Collision };
  Kind kind = Kind::LengthViolation;
  PieceRef a;  // the long piece, or the earlier piece of a colliding pair
  PieceRef b;  // the later piece of a colliding pair
};

struct VerifyReport {
  bool valid = false;
  std::vector<Violation> violations;  // valid <=> empty
};

// Checks that p is a valid K-partition of inst: one cut list per string, all
// pieces of length <= K, and no two pieces (across all strings, including two
// pieces of the same string) colliding under inst.kind.  Identical pieces at
// different positions collide under every kind.  Scans strings in order and
// pieces left to right; all length violations are reported, then the first
// collision found.  Malformed cuts throw SemanticError.
VerifyReport verify_partition(const Instance& inst, const Partition& p);

// Cut lists mapped through string reversal: c -> |w| - c, sorted.  p is valid
// for inst iff mirror_partition(inst, p) is valid for mirror_instance(inst).
Partition mirror_partition(const Instance& inst, const Partition& p);

// Piece spans in scan order (strings in order, pieces left to right).
std::vector<PieceRef> piece_refs(const Instance& inst, const Partition& p);

SymStr piece_text(const Instance& inst, const PieceRef& ref);

}  // namespace strpart
