#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace strpart {

// A symbol is an index into an Alphabet.  Strings of symbols are stored as
// std::u32string so that substring, comparison and hashing come for free.
using Sym = char32_t;
using SymStr = std::u32string;
using SymStrView = std::u32string_view;

// Ordered set of distinct symbol names.  Names are printable tokens without
// whitespace; gadget alphabets use names like "c_1^2", "x_3^1", "bminus".
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names);

  // The two-symbol alphabet {"0", "1"} used by all binary constructions.
  static Alphabet binary();

  // Adds the name if absent; returns its symbol either way.
  Sym intern(std::string_view name);
  std::optional<Sym> find(std::string_view name) const;
  const std::string& name(Sym s) const;

  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool is_binary() const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Sym> index_;
};

// Reversal; an involution.
SymStr mirrored(SymStrView w);

// w repeated n times.
SymStr repeated(SymStrView w, size_t n);

}  // namespace strpart
