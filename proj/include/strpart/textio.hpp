#pragma once

#include <string>
#include <utility>

#include "strpart/instance.hpp"
#include "strpart/partition.hpp"
#include "strpart/reduction.hpp"
#include "strpart/sat3.hpp"

namespace strpart {

// Line-based instance text:
//   kind: equality|prefix|suffix|factor
//   K: <int>
//   alphabet: tok tok ...          (optional; order defines symbol indices)
//   string: tok tok ...            (one line per string)
//   string01: 0110...              (compact form for binary instances)
// '#' starts a comment.  Parse errors carry the line number.
Instance parse_instance(const std::string& text);
std::string render_instance(const Instance& inst);

// One "cuts: c1 c2 ..." line per string; a bare "cuts:" is an empty list.
Partition parse_partition(const std::string& text);
std::string render_partition(const Partition& p);

// Assignment text: whitespace-separated signed 1-based variables, positive
// for true ("1 -2 3").  Every variable must appear exactly once.
Assignment parse_assignment(const std::string& text, uint32_t n_vars);
std::string render_assignment(const Assignment& a);

// Reduction sidecar: JSON document holding family, stage, parameters, the
// source formula, role table, codebook and literal markers.  The reduction
// pipeline is deterministic, so the sidecar pins everything needed to
// rebuild the full ReductionOutput (see rebuild_reduction).
std::string render_sidecar(const ReductionOutput& r);

struct SidecarInfo {
  Family family = Family::EF;
  Stage stage = Stage::Msp;
  size_t block_len = 0;  // delta or t; 0 for unbounded stages
  bool sp_chaining_codewords = false;
  Formula3Sat3 source;
};
SidecarInfo parse_sidecar(const std::string& text);

// Re-runs the reduction pipeline described by a sidecar.
ReductionOutput rebuild_reduction(const SidecarInfo& info);

// Single-record FASTA; returns (header, sequence).  The sequence must be
// non-empty and use only A, C, G, T (case-insensitive).
std::pair<std::string, std::string> parse_fasta(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace strpart
