#pragma once

#include <unordered_map>
#include <vector>

#include "strpart/instance.hpp"

namespace strpart {

// Incremental multiset of selected pieces supporting would-collide queries.
// All structures are reference-counted so that add followed by remove
// restores the exact prior state; the backtracking solver relies on this.
class CollisionIndex {
 public:
  CollisionIndex(CollisionKind kind, size_t max_piece_len);

  // True iff inserting piece now would violate kind-freeness against the
  // current contents, including a second copy of piece itself.
  bool would_collide(SymStrView piece) const;

  void add(SymStrView piece);
  void remove(SymStrView piece);

  size_t piece_count() const { return piece_count_; }
  CollisionKind kind() const { return kind_; }

 private:
  struct TrieNode {
    std::unordered_map<Sym, size_t> kids;
    uint32_t terminal = 0;  // pieces ending here
    uint32_t subtree = 0;   // pieces passing through here
  };

  SymStr key_of(SymStrView piece) const;
  void trie_add(const SymStr& key, int delta);

  CollisionKind kind_;
  size_t max_piece_len_;
  size_t piece_count_ = 0;
  std::unordered_map<SymStr, uint32_t> pieces_;   // equality / factor
  std::unordered_map<SymStr, uint32_t> closure_;  // factor substrings
  std::vector<TrieNode> trie_;                    // prefix / suffix
};

}  // namespace strpart
