#include "strpart/instance.hpp"

#include <numeric>

#include "strpart/error.hpp"

namespace strpart {

const char* kind_name(CollisionKind k) {
  switch (k) {
    case CollisionKind::Equality: return "equality";
    case CollisionKind::Prefix: return "prefix";
    case CollisionKind::Suffix: return "suffix";
    case CollisionKind::Factor: return "factor";
  }
  return "?";
}

CollisionKind kind_from_name(const std::string& name) {
  if (name == "equality") return CollisionKind::Equality;
  if (name == "prefix") return CollisionKind::Prefix;
  if (name == "suffix") return CollisionKind::Suffix;
  if (name == "factor") return CollisionKind::Factor;
  throw ParseError("unknown collision kind '" + name + "'");
}

size_t Instance::total_length() const {
  size_t n = 0;
  for (const auto& w : strings) n += w.size();
  return n;
}

void Instance::validate() const {
  if (max_piece_len < 1) throw SemanticError("instance: K must be >= 1");
  if (alphabet.size() == 0) throw SemanticError("instance: empty alphabet");
  for (size_t i = 0; i < strings.size(); ++i) {
    if (strings[i].empty())
      throw SemanticError("instance: string " + std::to_string(i) + " is empty");
    for (Sym s : strings[i]) {
      if (static_cast<size_t>(s) >= alphabet.size())
        throw SemanticError("instance: string " + std::to_string(i) +
                            " uses a symbol outside the alphabet");
    }
  }
}

Instance mirror_instance(const Instance& inst) {
  Instance out = inst;
  if (inst.kind == CollisionKind::Prefix) out.kind = CollisionKind::Suffix;
  if (inst.kind == CollisionKind::Suffix) out.kind = CollisionKind::Prefix;
  for (auto& w : out.strings) w = mirrored(w);
  return out;
}

}  // namespace strpart
