#include "strpart/collision_index.hpp"

#include "strpart/collide.hpp"
#include "strpart/error.hpp"

namespace strpart {

CollisionIndex::CollisionIndex(CollisionKind kind, size_t max_piece_len)
    : kind_(kind), max_piece_len_(max_piece_len) {
  trie_.emplace_back();
}

SymStr CollisionIndex::key_of(SymStrView piece) const {
  return kind_ == CollisionKind::Suffix ? mirrored(piece) : SymStr(piece);
}

bool CollisionIndex::would_collide(SymStrView piece) const {
  if (piece.empty() || piece.size() > max_piece_len_)
    throw SemanticError("collision index: piece empty or longer than K");
  SymStr key = key_of(piece);
  switch (kind_) {
    case CollisionKind::Equality: {
      auto it = pieces_.find(key);
      return it != pieces_.end() && it->second > 0;
    }
    case CollisionKind::Prefix:
    case CollisionKind::Suffix: {
      size_t node = 0;
      for (size_t j = 0; j < key.size(); ++j) {
        if (j > 0 && trie_[node].terminal > 0) return true;  // existing proper prefix
        auto it = trie_[node].kids.find(key[j]);
        if (it == trie_[node].kids.end()) return false;
        node = it->second;
      }
      return trie_[node].subtree > 0;  // key is a prefix of an existing piece
    }
    case CollisionKind::Factor: {
      auto it = closure_.find(key);
      if (it != closure_.end() && it->second > 0) return true;  // key inside existing
      for (size_t i = 0; i < key.size(); ++i) {
        for (size_t len = 1; i + len <= key.size(); ++len) {
          auto jt = pieces_.find(key.substr(i, len));
          if (jt != pieces_.end() && jt->second > 0) return true;  // existing inside key
        }
      }
      return false;
    }
  }
  return false;
}

void CollisionIndex::trie_add(const SymStr& key, int delta) {
  size_t node = 0;
  trie_[node].subtree += delta;
  for (Sym s : key) {
    auto it = trie_[node].kids.find(s);
    if (it == trie_[node].kids.end()) {
      trie_[node].kids.emplace(s, trie_.size());
      node = trie_.size();
      trie_.emplace_back();
    } else {
      node = it->second;
    }
    trie_[node].subtree += delta;
  }
  trie_[node].terminal += delta;
}

void CollisionIndex::add(SymStrView piece) {
  SymStr key = key_of(piece);
  ++piece_count_;
  switch (kind_) {
    case CollisionKind::Equality:
      ++pieces_[key];
      break;
    case CollisionKind::Prefix:
    case CollisionKind::Suffix:
      trie_add(key, +1);
      break;
    case CollisionKind::Factor:
      ++pieces_[key];
      for (const auto& sub : substr_closure(key)) ++closure_[sub];
      break;
  }
}

void CollisionIndex::remove(SymStrView piece) {
  SymStr key = key_of(piece);
  if (piece_count_ == 0) throw SemanticError("collision index: remove from empty index");
  --piece_count_;
  switch (kind_) {
    case CollisionKind::Equality: {
      auto it = pieces_.find(key);
      if (it == pieces_.end() || it->second == 0)
        throw SemanticError("collision index: removing a piece that was not added");
      --it->second;
      break;
    }
    case CollisionKind::Prefix:
    case CollisionKind::Suffix:
      trie_add(key, -1);
      break;
    case CollisionKind::Factor: {
      auto it = pieces_.find(key);
      if (it == pieces_.end() || it->second == 0)
        throw SemanticError("collision index: removing a piece that was not added");
      --it->second;
      for (const auto& sub : substr_closure(key)) --closure_[sub];
      break;
    }
  }
}

}  // namespace strpart
