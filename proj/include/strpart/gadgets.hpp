#pragma once

#include "strpart/reduction.hpp"

namespace strpart {

// ---------------------------------------------------------------------------
// Equality-free family

// One clause string per clause (letters joined by bminus), one nine-letter
// enforcer per variable, and the two forbidden one-letter strings bminus and
// bplus.  Kind Equality, K = 2; total length at most 5m + 9n + 2.
ReductionOutput ef_msp_from_3sat3(const Formula3Sat3& f);

// Chains the strings of an EF-MSP output into one string
//   bdot^4 bminus  w1  d1 bdot bdot d1  w2 ... d_{l-1} bdot bdot d_{l-1}  wl
// over fresh letters bdot, d_1..d_{l-1}.  |w| = ||W|| + 4l + 1.
ReductionOutput ef_sp_from_msp(const ReductionOutput& r);

// Codeword policies for the binary encoding.  MinimalWidth packs the source
// alphabet into ceil(log2 n) bits.  SpChaining picks
// delta >= max(9, ceil(3 log2(n+1))) and makes every codeword start with 0,
// which ef_sp_binary requires.
enum class EfCodewordPolicy { MinimalWidth, SpChaining };

// Maps every letter to a distinct codeword of length delta and adds the
// codeword-prefix set (every prefix of a codeword of length 1..delta-1 and of
// a codeword pair of length delta+1..2delta-1, deduplicated).  K becomes
// 2*delta.  A forced delta below the policy minimum is an error.
ReductionOutput ef_binary_encode(const ReductionOutput& r,
                                 std::optional<size_t> delta = std::nullopt,
                                 EfCodewordPolicy policy = EfCodewordPolicy::MinimalWidth);

// Chains a binary EF-MSP output (SpChaining policy) into a single string
// w1 d1 w2 d2 ... d_{l-1} wl using the padded-string delimiters below.
ReductionOutput ef_sp_binary(const ReductionOutput& r);

// Delimiter machinery of the binary single-string construction, exposed for
// direct testing.  All strings are over '0'/'1' characters.
std::string bin_repr(uint64_t j);                            // binary without the leading one
std::string pad_bits(size_t i, const std::string& s);        // (1)^{i-1} 0 s
std::vector<std::string> chain_components(const std::string& s, size_t k);
std::string chain_bits(const std::string& s, size_t k);
std::string delimiter_bits(size_t j, size_t k);              // j >= 1
// Witness pieces of delimiter j: the chain components for j > 1; for j = 1
// the mirrored padded string, the runs 1^1..1^{K-1}, and the padded string.
std::vector<std::string> delimiter_witness_pieces(size_t j, size_t k);

// The codeword-prefix set of the binary encoding, in deterministic order.
std::vector<std::string> codeword_prefix_set(const std::vector<std::string>& codewords);

// ---------------------------------------------------------------------------
// Factor-free family

// Doubled-letter clause strings, three enforcer strings per variable and the
// forbidden string x_v^3 0 x_v^3 per variable.  Kind Factor, K = 3; total
// length at most 8m + 35n.
ReductionOutput ff_msp_from_3sat3(const Formula3Sat3& f);

// Joins the strings with connectors alpha gamma_i^{3K-2} alpha over fresh
// letters.  |w'| = sum |w_i| + 3K(N-1).  joiner_budget, when given, caps the
// number of fresh gamma letters.
ReductionOutput ff_sp_from_msp(const ReductionOutput& r,
                               std::optional<size_t> joiner_budget = std::nullopt);

// Direct binary construction: codewords 0 1^i 0 1^{t-3-i} 0, the same clause
// strings, simplified enforcers, and forbidden strings {000, 010}.
// K = 2t + 1; requires t >= 3m + 2n + 6.
ReductionOutput ff_msp_binary_from_3sat3(const Formula3Sat3& f,
                                         std::optional<size_t> t = std::nullopt);

// Chains a binary FF-MSP output with the one-zero delimiters
// d_i = 1^i 0 1^{K-1-i}: u1 d0 1^K d0^mirror u2 d1 d1^mirror ... uN.
// Requires N <= K/2.
ReductionOutput ff_sp_binary(const ReductionOutput& r);

std::string ff_codeword(size_t i, size_t t);  // 0 1^i 0 1^{t-3-i} 0
std::string ff_chain_delimiter(size_t i, size_t k);  // 1^i 0 1^{K-1-i}

// ---------------------------------------------------------------------------
// Prefix-free family (suffix-free follows by mirror_instance)

// Clause strings joined by the dollar letter, two four-letter enforcers per
// variable, forbidden string "$$".  Kind Prefix, K = 2; total length at most
// 5m + 8n + 2.
ReductionOutput pf_msp_from_3sat3(const Formula3Sat3& f);

// Same connector construction as the factor-free single-string stage.
ReductionOutput pf_sp_from_msp(const ReductionOutput& r);

// Direct binary construction: codewords 00 1^i 0 1^{t-4-i} 0, dollar mapped
// to 1, forbidden strings {11, 01, 101, 0001, 10001}.  K = 2t; requires
// t >= 3m + 4n + 7.
ReductionOutput pf_msp_binary_from_3sat3(const Formula3Sat3& f,
                                         std::optional<size_t> t = std::nullopt);

// Joins the non-forbidden strings with distinct length-K delimiters
// 00 1^i 0 1^{K-4-i} 0 and appends the forbidden-forcing block
// F = F4 F3 F2 F1.
ReductionOutput pf_sp_binary(const ReductionOutput& r);

std::string pf_codeword(size_t i, size_t t);  // 00 1^i 0 1^{t-4-i} 0
std::vector<std::string> pf_forbidden_strings();
// The four sub-parts F4, F3, F2, F1 in chain order, and their forced pieces.
std::vector<std::string> pf_forcing_block_parts(size_t k);
std::vector<std::vector<std::string>> pf_forcing_block_pieces(size_t k);

// ---------------------------------------------------------------------------
// Witnesses and extraction

// Builds the constructive valid partition for any stage from a satisfying
// assignment of the source formula.  Throws SemanticError if the assignment
// does not satisfy the source.
Partition witness_from_assignment(const ReductionOutput& r, const Assignment& a);

// Reads the selected literals off a valid partition via the literal markers
// and returns a satisfying assignment (unconstrained variables default to
// false).  Throws SemanticError if the partition is invalid or the selected
// literals are inconsistent.
Assignment assignment_from_partition(const ReductionOutput& r, const Partition& p);

// Bits helper shared by the binary stages: "0100..." -> symbol string over
// the binary alphabet.
SymStr bits_to_syms(const std::string& bits);
std::string syms_to_bits(const SymStr& s);

// ---------------------------------------------------------------------------
// Pipeline driver

struct ReduceOptions {
  std::optional<size_t> block_len;  // delta (EF) or t (FF/PF)
  EfCodewordPolicy ef_policy = EfCodewordPolicy::MinimalWidth;
};

// Runs the stage pipeline for one family: msp, msp -> sp, msp -> msp-bin, or
// msp -> msp-bin -> sp-bin.  The sp-bin stage of the EF family always uses
// the SpChaining codeword policy.
ReductionOutput run_reduction(Family family, Stage stage, const Formula3Sat3& f,
                              const ReduceOptions& opts = {});

}  // namespace strpart
