#include "strpart/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "strpart/error.hpp"

namespace strpart {

namespace {

void check_name(std::string_view name) {
  if (name.empty()) throw SemanticError("alphabet: empty symbol name");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) ||
        !std::isprint(static_cast<unsigned char>(c))) {
      throw SemanticError("alphabet: symbol name '" + std::string(name) +
                          "' contains whitespace or non-printable characters");
    }
  }
}

}  // namespace

Alphabet::Alphabet(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (find(n)) throw SemanticError("alphabet: duplicate symbol name '" + n + "'");
    intern(n);
  }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

Sym Alphabet::intern(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  check_name(name);
  Sym s = static_cast<Sym>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), s);
  return s;
}

std::optional<Sym> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& Alphabet::name(Sym s) const {
  size_t i = static_cast<size_t>(s);
  if (i >= names_.size()) throw SemanticError("alphabet: symbol index out of range");
  return names_[i];
}

bool Alphabet::is_binary() const {
  return names_.size() == 2 && names_[0] == "0" && names_[1] == "1";
}

SymStr mirrored(SymStrView w) { return SymStr(w.rbegin(), w.rend()); }

SymStr repeated(SymStrView w, size_t n) {
  SymStr out;
  out.reserve(w.size() * n);
  for (size_t i = 0; i < n; ++i) out.append(w);
  return out;
}

}  // namespace strpart
