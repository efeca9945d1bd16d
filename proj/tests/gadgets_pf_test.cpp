#include <doctest.h>

#include <set>

#include "gadget_support.hpp"
#include "strpart/error.hpp"
#include "strpart/gadgets.hpp"
#include "strpart/solve.hpp"
#include "support.hpp"

using namespace strpart;
using namespace strpart::testing;

TEST_CASE("pf_msp shapes and length audit") {
  Formula3Sat3 f = two_var_formula();
  ReductionOutput r = pf_msp_from_3sat3(f);
  const Instance& inst = r.instance;
  size_t m = f.clauses.size(), n = f.n_vars;

  CHECK(inst.kind == CollisionKind::Prefix);
  CHECK(inst.max_piece_len == 2);
  CHECK(inst.strings.size() == 1 + m + 2 * n);
  CHECK(inst.total_length() <= 5 * m + 8 * n + 2);
  CHECK(inst.alphabet.size() <= 4 * n + 3 * m + 1);

  for (size_t i = 0; i < inst.strings.size(); ++i) {
    switch (r.origins[i].type) {
      case StringOrigin::Type::Forbidden:
        CHECK(inst.strings[i].size() == 2);
        break;
      case StringOrigin::Type::Clause:
        CHECK(inst.strings[i].size() == 2 * f.clauses[r.origins[i].index].size() - 1);
        break;
      case StringOrigin::Type::Enforcer:
        CHECK(inst.strings[i].size() == 4);
        break;
      default:
        FAIL("unexpected origin");
    }
  }

  std::set<std::string> values;
  for (const auto& [role, name] : r.table.roles) {
    CHECK(values.insert(name).second);
    CHECK(inst.alphabet.find(name).has_value());
  }
  CHECK(values.size() == inst.alphabet.size());
}

TEST_CASE("pf witness rows and suffix variant via mirroring") {
  Formula3Sat3 f = two_var_formula();
  ReductionOutput r = pf_msp_from_3sat3(f);
  Assignment a;
  a.values = {true, false};
  REQUIRE(satisfies(f, a));
  Partition p = witness_from_assignment(r, a);
  REQUIRE(verify_partition(r.instance, p).valid);

  auto pieces = piece_set(r.instance, p);
  CHECK(pieces.count("$ $") == 1);  // forbidden string stays whole
  // x1 true: enforcers pair up, each isolating the negated literal as a prefix
  CHECK(pieces.count("c_3^1 x_1^2") == 1);
  CHECK(pieces.count("c_3^1 x_1^4") == 1);
  // x2 false: enforcers isolate the variable letters around the literal pair
  CHECK(pieces.count("x_2^1") == 1);
  CHECK(pieces.count("c_1^2 c_3^2") == 1);

  // the suffix-free variant is the mirrored instance
  Instance suffix_inst = mirror_instance(r.instance);
  CHECK(suffix_inst.kind == CollisionKind::Suffix);
  Partition mp = mirror_partition(r.instance, p);
  CHECK(verify_partition(suffix_inst, mp).valid);
  CHECK(solve_backtracking(suffix_inst).status == SolveStatus::Sat);
}

TEST_CASE("pf msp and sp agree with the SAT oracle at desk scale") {
  for (uint64_t seed = 0; seed < 6; ++seed) {
    for (uint32_t n : {2u, 3u}) {
      Formula3Sat3 f = gen_3sat3(n, seed);
      bool sat = solve_sat_bruteforce(f).has_value();

      ReductionOutput msp = pf_msp_from_3sat3(f);
      auto msp_result = solve_backtracking(msp.instance);
      REQUIRE(msp_result.status != SolveStatus::BudgetExhausted);
      CHECK((msp_result.status == SolveStatus::Sat) == sat);

      ReductionOutput sp = pf_sp_from_msp(msp);
      // K = 2: each connector is alpha g g g g alpha
      size_t strings = msp.instance.strings.size();
      CHECK(sp.instance.strings[0].size() ==
            msp.instance.total_length() + 6 * (strings - 1));
      auto sp_result = solve_backtracking(sp.instance);
      REQUIRE(sp_result.status != SolveStatus::BudgetExhausted);
      CHECK((sp_result.status == SolveStatus::Sat) == sat);

      if (sat) {
        Assignment a = *solve_sat_bruteforce(f);
        CHECK(verify_partition(msp.instance, witness_from_assignment(msp, a)).valid);
        CHECK(verify_partition(sp.instance, witness_from_assignment(sp, a)).valid);
        CHECK(satisfies(f, assignment_from_partition(msp, *msp_result.partition)));
        CHECK(satisfies(f, assignment_from_partition(sp, *sp_result.partition)));
      }
    }
  }
}

TEST_CASE("pf handles unsatisfiable four-variable formulas") {
  for (uint64_t seed : {2, 73, 0}) {
    Formula3Sat3 f = gen_3sat3(4, seed);
    bool sat = solve_sat_bruteforce(f).has_value();
    ReductionOutput msp = pf_msp_from_3sat3(f);
    CHECK((solve_backtracking(msp.instance).status == SolveStatus::Sat) == sat);
    ReductionOutput sp = pf_sp_from_msp(msp);
    CHECK((solve_backtracking(sp.instance).status == SolveStatus::Sat) == sat);
  }
}

TEST_CASE("pf binary codewords are equal-length, 001-prefixed and 0-suffixed") {
  for (size_t t : {25, 40}) {
    std::set<std::string> seen;
    for (size_t i = 2; i + 6 <= t; ++i) {
      std::string cw = pf_codeword(i, t);
      CHECK(cw.size() == t);
      CHECK(cw.substr(0, 3) == "001");
      CHECK(cw.back() == '0');
      CHECK(seen.insert(cw).second);
    }
    // equal length + distinct means pairwise non-prefix
  }
  CHECK_THROWS_AS(pf_codeword(1, 25), SemanticError);
  CHECK_THROWS_AS(pf_codeword(20, 25), SemanticError);
}

TEST_CASE("pf forbidden set is emitted bit-exactly") {
  CHECK(pf_forbidden_strings() ==
        std::vector<std::string>{"11", "01", "101", "0001", "10001"});
  Formula3Sat3 f = two_var_formula();
  ReductionOutput bin = pf_msp_binary_from_3sat3(f);
  std::vector<std::string> got;
  for (size_t i = 0; i < bin.instance.strings.size(); ++i)
    if (bin.origins[i].type == StringOrigin::Type::Forbidden)
      got.push_back(syms_to_bits(bin.instance.strings[i]));
  CHECK(got == pf_forbidden_strings());
}

TEST_CASE("pf msp binary construction and witness") {
  Formula3Sat3 f = two_var_formula();
  size_t m = f.clauses.size(), n = f.n_vars;
  ReductionOutput bin = pf_msp_binary_from_3sat3(f);
  CHECK(bin.block_len == 3 * m + 4 * n + 7);
  CHECK(bin.instance.max_piece_len == 2 * bin.block_len);
  CHECK(bin.codebook.at("$") == "1");

  Assignment a = *solve_sat_bruteforce(f);
  Partition w = witness_from_assignment(bin, a);
  CHECK(verify_partition(bin.instance, w).valid);
  CHECK(satisfies(f, assignment_from_partition(bin, w)));

  CHECK_THROWS_AS(pf_msp_binary_from_3sat3(f, 10), SemanticError);
}

TEST_CASE("pf forcing block parts reassemble from their forced pieces") {
  size_t k = 30;
  auto parts = pf_forcing_block_parts(k);
  REQUIRE(parts.size() == 4);  // F4 F3 F2 F1 in chain order
  CHECK(parts[3] == "1" + std::string(3 * k - 2, '0') + "111");
  CHECK(parts[3].size() == 3 * k + 2);
  CHECK(parts[2].size() == 3 * k + 5);
  CHECK(parts[1].size() == k + 5);
  CHECK(parts[0].size() == k + 4);

  auto piece_lists = pf_forcing_block_pieces(k);
  for (size_t i = 0; i < 4; ++i) {
    std::string joined;
    for (const auto& piece : piece_lists[i]) {
      CHECK(piece.size() <= k);
      joined += piece;
    }
    CHECK(joined == parts[i]);
  }
  // the forced pieces include every forbidden string
  std::set<std::string> all;
  for (const auto& list : piece_lists) all.insert(list.begin(), list.end());
  for (const auto& fs : pf_forbidden_strings()) CHECK(all.count(fs) == 1);
}

TEST_CASE("pf sp binary witness verifies end to end") {
  Formula3Sat3 f = two_var_formula();
  ReductionOutput bin = pf_msp_binary_from_3sat3(f);
  ReductionOutput sp = pf_sp_binary(bin);
  CHECK(sp.instance.max_piece_len == bin.instance.max_piece_len);

  // delimiters between the non-forbidden strings, then the forcing block
  size_t non_forbidden = 0;
  for (const auto& o : bin.origins)
    if (o.type != StringOrigin::Type::Forbidden) ++non_forbidden;
  size_t delimiters = 0, blocks = 0;
  for (const Segment& seg : sp.segments) {
    delimiters += seg.kind == Segment::Kind::PfBinDelimiter;
    blocks += seg.kind == Segment::Kind::PfForbiddenBlock;
  }
  CHECK(delimiters == non_forbidden - 1);
  CHECK(blocks == 4);

  Assignment a = *solve_sat_bruteforce(f);
  Partition w = witness_from_assignment(sp, a);
  REQUIRE(verify_partition(sp.instance, w).valid);
  CHECK(satisfies(f, assignment_from_partition(sp, w)));

  // the F-piece multiset matches the forced listing
  auto pieces = piece_set(sp.instance, w);
  for (const auto& list : pf_forcing_block_pieces(sp.instance.max_piece_len))
    for (const auto& fp : list) {
      SymStr as_syms = bits_to_syms(fp);
      std::ostringstream word;
      for (size_t i = 0; i < as_syms.size(); ++i) {
        if (i) word << " ";
        word << sp.instance.alphabet.name(as_syms[i]);
      }
      CHECK(pieces.count(word.str()) == 1);
    }
}

TEST_CASE("pf suffix-free binary pipeline via mirroring") {
  Formula3Sat3 f = two_var_formula();
  ReductionOutput sp = pf_sp_binary(pf_msp_binary_from_3sat3(f));
  Assignment a = *solve_sat_bruteforce(f);
  Partition w = witness_from_assignment(sp, a);
  Instance mirrored = mirror_instance(sp.instance);
  CHECK(mirrored.kind == CollisionKind::Suffix);
  CHECK(verify_partition(mirrored, mirror_partition(sp.instance, w)).valid);
}
