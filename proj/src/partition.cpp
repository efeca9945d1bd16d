#include "strpart/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "strpart/collide.hpp"
#include "strpart/error.hpp"

namespace strpart {

namespace {

void check_cuts(SymStrView w, const std::vector<size_t>& cuts) {
  size_t prev = 0;
  for (size_t c : cuts) {
    if (c <= prev || c >= w.size())
      throw SemanticError("malformed cuts: cut points must be strictly increasing within (0, |w|)");
    prev = c;
  }
}

// Tracks previously seen pieces and finds, for a new piece, the earliest
// already-seen piece it collides with under the instance kind.
class SeenPieces {
 public:
  SeenPieces(CollisionKind kind, bool mirror_keys)
      : kind_(kind), mirror_keys_(mirror_keys) {
    trie_.emplace_back();
  }

  // Returns the colliding earlier piece, if any.  Call before insert.
  std::optional<PieceRef> find_collision(const SymStr& piece) const {
    SymStr key = mirror_keys_ ? mirrored(piece) : piece;
    switch (kind_) {
      case CollisionKind::Equality: {
        auto it = first_.find(key);
        if (it != first_.end()) return it->second;
        return std::nullopt;
      }
      case CollisionKind::Prefix:
      case CollisionKind::Suffix: {
        size_t node = 0;
        for (size_t j = 0; j < key.size(); ++j) {
          if (j > 0 && trie_[node].terminal >= 0)
            return refs_[trie_[node].terminal];  // earlier piece is a proper prefix
          auto it = trie_[node].kids.find(key[j]);
          if (it == trie_[node].kids.end()) return std::nullopt;
          node = it->second;
        }
        if (trie_[node].subtree_first >= 0)
          return refs_[trie_[node].subtree_first];  // key is a prefix of an earlier piece
        return std::nullopt;
      }
      case CollisionKind::Factor: {
        auto it = closure_first_.find(key);
        if (it != closure_first_.end()) return it->second;  // key inside earlier piece
        for (size_t i = 0; i < key.size(); ++i) {
          for (size_t len = 1; i + len <= key.size(); ++len) {
            auto jt = first_.find(key.substr(i, len));
            if (jt != first_.end()) return jt->second;  // earlier piece inside key
          }
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  void insert(const SymStr& piece, const PieceRef& ref) {
    SymStr key = mirror_keys_ ? mirrored(piece) : piece;
    int ref_idx = static_cast<int>(refs_.size());
    refs_.push_back(ref);
    switch (kind_) {
      case CollisionKind::Equality:
        first_.emplace(key, ref);
        break;
      case CollisionKind::Prefix:
      case CollisionKind::Suffix: {
        size_t node = 0;
        if (trie_[node].subtree_first < 0) trie_[node].subtree_first = ref_idx;
        for (Sym s : key) {
          auto it = trie_[node].kids.find(s);
          if (it == trie_[node].kids.end()) {
            trie_[node].kids.emplace(s, trie_.size());
            node = trie_.size();
            trie_.emplace_back();
          } else {
            node = it->second;
          }
          if (trie_[node].subtree_first < 0) trie_[node].subtree_first = ref_idx;
        }
        if (trie_[node].terminal < 0) trie_[node].terminal = ref_idx;
        break;
      }
      case CollisionKind::Factor:
        first_.emplace(key, ref);
        for (const auto& sub : substr_closure(key)) closure_first_.emplace(sub, ref);
        break;
    }
  }

 private:
  struct TrieNode {
    std::unordered_map<Sym, size_t> kids;
    int terminal = -1;       // index into refs_ of the first piece ending here
    int subtree_first = -1;  // first piece whose key passes through this node
  };

  CollisionKind kind_;
  bool mirror_keys_;
  std::unordered_map<SymStr, PieceRef> first_;          // equality / factor pieces
  std::unordered_map<SymStr, PieceRef> closure_first_;  // factor substrings
  std::vector<TrieNode> trie_;
  std::vector<PieceRef> refs_;
};

}  // namespace

std::vector<SymStr> pieces_of(SymStrView w, const std::vector<size_t>& cuts) {
  check_cuts(w, cuts);
  std::vector<SymStr> out;
  out.reserve(cuts.size() + 1);
  size_t prev = 0;
  for (size_t c : cuts) {
    out.emplace_back(w.substr(prev, c - prev));
    prev = c;
  }
  out.emplace_back(w.substr(prev));
  return out;
}

std::vector<PieceRef> piece_refs(const Instance& inst, const Partition& p) {
  if (p.cuts.size() != inst.strings.size())
    throw SemanticError("partition: expected one cut list per instance string");
  std::vector<PieceRef> out;
  for (size_t i = 0; i < inst.strings.size(); ++i) {
    check_cuts(inst.strings[i], p.cuts[i]);
    size_t prev = 0;
    for (size_t c : p.cuts[i]) {
      out.push_back({i, prev, c - prev});
      prev = c;
    }
    out.push_back({i, prev, inst.strings[i].size() - prev});
  }
  return out;
}

SymStr piece_text(const Instance& inst, const PieceRef& ref) {
  return SymStr(SymStrView(inst.strings[ref.string_index]).substr(ref.begin, ref.len));
}

VerifyReport verify_partition(const Instance& inst, const Partition& p) {
  inst.validate();
  VerifyReport report;
  SeenPieces seen(inst.kind, inst.kind == CollisionKind::Suffix);
  for (const PieceRef& ref : piece_refs(inst, p)) {
    if (ref.len > inst.max_piece_len) {
      report.violations.push_back({Violation::Kind::LengthViolation, ref, {}});
      continue;  // over-long pieces are reported but not matched against others
    }
    SymStr text = piece_text(inst, ref);
    if (auto earlier = seen.find_collision(text)) {
      report.violations.push_back({Violation::Kind::Collision, *earlier, ref});
      report.valid = false;
      return report;
    }
    seen.insert(text, ref);
  }
  report.valid = report.violations.empty();
  return report;
}

Partition mirror_partition(const Instance& inst, const Partition& p) {
  if (p.cuts.size() != inst.strings.size())
    throw SemanticError("partition: expected one cut list per instance string");
  Partition out;
  out.cuts.resize(p.cuts.size());
  for (size_t i = 0; i < p.cuts.size(); ++i) {
    size_t n = inst.strings[i].size();
    for (size_t c : p.cuts[i]) out.cuts[i].push_back(n - c);
    std::sort(out.cuts[i].begin(), out.cuts[i].end());
  }
  return out;
}

}  // namespace strpart
