#pragma once

#include <vector>

#include "strpart/instance.hpp"

namespace strpart {

// True iff needle occurs contiguously inside hay (needle may equal hay).
bool is_factor(SymStrView needle, SymStrView hay);

// Symmetric collision predicate between two non-empty pieces:
//   Equality: a == b
//   Prefix:   a is a prefix of b, or b of a
//   Suffix:   a is a suffix of b, or b of a
//   Factor:   a occurs inside b, or b inside a
bool collides(CollisionKind kind, SymStrView a, SymStrView b);

// All non-empty contiguous substrings of p, with multiplicity.
std::vector<SymStr> substr_closure(SymStrView p);

}  // namespace strpart
