#include <doctest.h>

#include <random>

#include "strpart/collide.hpp"
#include "strpart/collision_index.hpp"
#include "strpart/error.hpp"
#include "support.hpp"

using namespace strpart;
using namespace strpart::testing;

namespace {

// Reference predicate: would inserting piece collide with the multiset?
bool naive_would_collide(CollisionKind kind, const std::vector<SymStr>& contents,
                         const SymStr& piece) {
  for (const auto& other : contents)
    if (collides(kind, piece, other)) return true;
  return false;
}

constexpr CollisionKind kAllKinds[] = {CollisionKind::Equality, CollisionKind::Prefix,
                                       CollisionKind::Suffix, CollisionKind::Factor};

}  // namespace

TEST_CASE("would_collide matches the pairwise predicate under adds and removes") {
  std::mt19937 rng(505);
  for (auto kind : kAllKinds) {
    for (int round = 0; round < 60; ++round) {
      size_t k = 1 + rng() % 3;
      CollisionIndex index(kind, k);
      std::vector<SymStr> contents;
      for (int step = 0; step < 120; ++step) {
        SymStr piece = random_symstr(rng, 1 + rng() % k, 2);
        bool remove = !contents.empty() && rng() % 3 == 0;
        if (remove) {
          size_t at = rng() % contents.size();
          index.remove(contents[at]);
          contents.erase(contents.begin() + at);
        } else {
          index.add(piece);
          contents.push_back(piece);
        }
        SymStr probe = random_symstr(rng, 1 + rng() % k, 2);
        CHECK(index.would_collide(probe) == naive_would_collide(kind, contents, probe));
      }
      CHECK(index.piece_count() == contents.size());
    }
  }
}

TEST_CASE("add then remove restores the exact prior behavior") {
  std::mt19937 rng(9001);
  for (auto kind : kAllKinds) {
    size_t k = 3;
    CollisionIndex index(kind, k);
    std::vector<SymStr> base;
    for (int i = 0; i < 10; ++i) {
      SymStr piece = random_symstr(rng, 1 + rng() % k, 2);
      index.add(piece);
      base.push_back(piece);
    }
    // snapshot query answers over every probe of length <= k
    auto all_probes = [&] {
      std::vector<SymStr> probes;
      for (size_t len = 1; len <= k; ++len)
        for (uint64_t bits = 0; bits < (1ull << len); ++bits) {
          SymStr p;
          for (size_t i = 0; i < len; ++i) p.push_back(static_cast<Sym>((bits >> i) & 1));
          probes.push_back(p);
        }
      return probes;
    }();
    std::vector<bool> before;
    for (const auto& p : all_probes) before.push_back(index.would_collide(p));

    for (int i = 0; i < 20; ++i) {
      SymStr piece = random_symstr(rng, 1 + rng() % k, 2);
      index.add(piece);
      index.remove(piece);
    }
    for (size_t i = 0; i < all_probes.size(); ++i)
      CHECK(index.would_collide(all_probes[i]) == before[i]);
  }
}

TEST_CASE("a second copy of the same piece always collides") {
  for (auto kind : kAllKinds) {
    CollisionIndex index(kind, 2);
    SymStr piece = {0, 1};
    CHECK_FALSE(index.would_collide(piece));
    index.add(piece);
    CHECK(index.would_collide(piece));
    index.remove(piece);
    CHECK_FALSE(index.would_collide(piece));
  }
}

TEST_CASE("index guards") {
  CollisionIndex index(CollisionKind::Equality, 2);
  CHECK_THROWS_AS(index.would_collide(SymStr()), SemanticError);
  CHECK_THROWS_AS(index.would_collide(SymStr(3, Sym(0))), SemanticError);
  CHECK_THROWS_AS(index.remove(SymStr(1, Sym(0))), SemanticError);
}
