#pragma once

#include <random>
#include <string>
#include <vector>

#include "strpart/collide.hpp"
#include "strpart/instance.hpp"
#include "strpart/partition.hpp"

namespace strpart::testing {

inline Instance ascii_multi_instance(const std::vector<std::string>& words, size_t k,
                                     CollisionKind kind) {
  Instance inst;
  inst.kind = kind;
  inst.max_piece_len = k;
  for (const auto& word : words) {
    SymStr w;
    for (char c : word) w.push_back(inst.alphabet.intern(std::string(1, c)));
    inst.strings.push_back(w);
  }
  return inst;
}

// Builds a single-string instance from an ASCII word; each character becomes
// a one-letter symbol.
inline Instance ascii_instance(const std::string& word, size_t k, CollisionKind kind) {
  return ascii_multi_instance({word}, k, kind);
}

// Dead-simple all-pairs reference check, independent of the incremental
// structures used by verify_partition.
inline bool naive_valid(const Instance& inst, const Partition& p) {
  std::vector<SymStr> pieces;
  for (size_t i = 0; i < inst.strings.size(); ++i) {
    for (const auto& piece : pieces_of(inst.strings[i], p.cuts[i])) {
      if (piece.size() > inst.max_piece_len) return false;
      pieces.push_back(piece);
    }
  }
  for (size_t a = 0; a < pieces.size(); ++a)
    for (size_t b = a + 1; b < pieces.size(); ++b)
      if (collides(inst.kind, pieces[a], pieces[b])) return false;
  return true;
}

inline SymStr random_symstr(std::mt19937& rng, size_t len, size_t alphabet_size) {
  SymStr w;
  std::uniform_int_distribution<uint32_t> dist(0, alphabet_size - 1);
  for (size_t i = 0; i < len; ++i) w.push_back(static_cast<Sym>(dist(rng)));
  return w;
}

inline std::vector<size_t> random_cuts(std::mt19937& rng, size_t len) {
  std::vector<size_t> cuts;
  for (size_t c = 1; c < len; ++c)
    if (std::uniform_int_distribution<int>(0, 1)(rng)) cuts.push_back(c);
  return cuts;
}

}  // namespace strpart::testing
