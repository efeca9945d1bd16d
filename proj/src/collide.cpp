#include "strpart/collide.hpp"

#include "strpart/error.hpp"

namespace strpart {

bool is_factor(SymStrView needle, SymStrView hay) {
  return hay.find(needle) != SymStrView::npos;
}

bool collides(CollisionKind kind, SymStrView a, SymStrView b) {
  if (a.empty() || b.empty()) throw SemanticError("collides: empty piece");
  switch (kind) {
    case CollisionKind::Equality:
      return a == b;
    case CollisionKind::Prefix:
      return a.size() <= b.size() ? b.substr(0, a.size()) == a
                                  : a.substr(0, b.size()) == b;
    case CollisionKind::Suffix:
      return a.size() <= b.size() ? b.substr(b.size() - a.size()) == a
                                  : a.substr(a.size() - b.size()) == b;
    case CollisionKind::Factor:
      return a.size() <= b.size() ? is_factor(a, b) : is_factor(b, a);
  }
  return false;
}

std::vector<SymStr> substr_closure(SymStrView p) {
  std::vector<SymStr> out;
  out.reserve(p.size() * (p.size() + 1) / 2);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t len = 1; i + len <= p.size(); ++len)
      out.emplace_back(p.substr(i, len));
  return out;
}

}  // namespace strpart
