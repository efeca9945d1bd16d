#include "strpart/cli.hpp"

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strpart/cnf.hpp"
#include "strpart/error.hpp"
#include "strpart/gadgets.hpp"
#include "strpart/solve.hpp"
#include "strpart/textio.hpp"

namespace strpart {

namespace {

using nlohmann::json;

std::string piece_line(const Instance& inst, const SymStr& piece) {
  std::string out;
  bool binary = inst.alphabet.is_binary();
  for (size_t i = 0; i < piece.size(); ++i) {
    if (!binary && i) out += " ";
    out += inst.alphabet.name(piece[i]);
  }
  return out;
}

json cuts_json(const Partition& p) {
  json cuts = json::array();
  for (const auto& c : p.cuts) cuts.push_back(c);
  return cuts;
}

int report_solve(const Instance& inst, const SolveResult& res, bool want_json,
                 const std::string& out_partition, std::ostream& out) {
  if (!out_partition.empty() && res.partition)
    write_file(out_partition, render_partition(*res.partition));
  if (want_json) {
    json j;
    j["status"] = res.status == SolveStatus::Sat     ? "sat"
                  : res.status == SolveStatus::Unsat ? "unsat"
                                                     : "budget";
    j["nodes"] = res.stats.nodes;
    j["max_depth"] = res.stats.max_depth;
    j["elapsed_secs"] = res.stats.elapsed_secs;
    if (res.count) j["count"] = *res.count;
    if (res.partition) j["cuts"] = cuts_json(*res.partition);
    out << j.dump(2) << "\n";
  } else {
    out << status_name(res.status) << "\n";
    if (res.partition) {
      out << render_partition(*res.partition);
      for (size_t i = 0; i < inst.strings.size(); ++i) {
        out << "pieces:";
        for (const auto& piece : pieces_of(inst.strings[i], res.partition->cuts[i]))
          out << " [" << piece_line(inst, piece) << "]";
        out << "\n";
      }
    }
    if (res.count) out << "count: " << *res.count << "\n";
    out << "nodes: " << res.stats.nodes << "\n";
  }
  switch (res.status) {
    case SolveStatus::Sat: return ExitCode::Sat;
    case SolveStatus::Unsat: return ExitCode::Unsat;
    case SolveStatus::BudgetExhausted: return ExitCode::Budget;
  }
  return ExitCode::SemanticFailure;
}

struct LengthAudit {
  size_t total = 0;
  std::optional<size_t> bound;  // absent when no bound is stated for the stage
  std::string description;
  bool exact = false;
};

LengthAudit audit_of(const ReductionOutput& r) {
  size_t m = r.source.clauses.size(), n = r.source.n_vars;
  size_t total = r.instance.total_length();
  size_t k = r.instance.max_piece_len;
  switch (r.family) {
    case Family::EF:
      switch (r.stage) {
        case Stage::Msp:
          return {total, 5 * m + 9 * n + 2, "5m+9n+2", false};
        case Stage::Sp:
          return {total,
                  r.parent->instance.total_length() +
                      4 * r.parent->instance.strings.size() + 1,
                  "||W||+4l+1", true};
        case Stage::MspBinary: {
          // h(W) maps exactly, the prefix set is bounded by (3a^2+a)(d-1)d/2
          // over the source alphabet size a
          size_t a = r.parent->instance.alphabet.size();
          size_t d = r.block_len;
          return {total,
                  d * r.parent->instance.total_length() +
                      (3 * a * a + a) * (d - 1) * d / 2,
                  "delta*||W|| + (3a^2+a)(delta-1)delta/2", false};
        }
        case Stage::SpBinary:
          return {total,
                  r.parent->instance.total_length() +
                      r.parent->instance.strings.size() * k * k,
                  "||W||+l*K^2", false};
      }
      break;
    case Family::FF:
      switch (r.stage) {
        case Stage::Msp:
          return {total, 8 * m + 35 * n, "8m+35n", false};
        case Stage::Sp:
          return {total,
                  r.parent->instance.total_length() +
                      3 * k * (r.parent->instance.strings.size() - 1),
                  "sum|w_i| + 3K(N-1)", true};
        case Stage::MspBinary:
          return {total, std::nullopt, "no stated bound", false};
        case Stage::SpBinary:
          return {total,
                  r.parent->instance.total_length() + 3 * k +
                      (r.parent->instance.strings.size() - 2) * 2 * k,
                  "sum|u_i| + 3K + 2K(N-2)", true};
      }
      break;
    case Family::PF:
      switch (r.stage) {
        case Stage::Msp:
          return {total, 5 * m + 8 * n + 2, "5m+8n+2", false};
        case Stage::Sp:
          return {total,
                  r.parent->instance.total_length() +
                      3 * k * (r.parent->instance.strings.size() - 1),
                  "sum|w_i| + 3K(N-1)", true};
        case Stage::MspBinary:
          return {total, std::nullopt, "no stated bound", false};
        case Stage::SpBinary:
          return {total, std::nullopt, "joined non-forbidden strings plus F", false};
      }
      break;
  }
  return {total, std::nullopt, "", false};
}

Instance oligo_instance(const std::string& seq, size_t k, CollisionKind kind) {
  Instance inst;
  inst.kind = kind;
  inst.max_piece_len = k;
  inst.alphabet = Alphabet({"A", "C", "G", "T"});
  SymStr w;
  for (char c : seq) w.push_back(*inst.alphabet.find(std::string(1, c)));
  inst.strings.push_back(std::move(w));
  return inst;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"string partition toolkit: exact solving and 3SAT(3) reductions"};
  app.require_subcommand(1);

  // ---- solve ----------------------------------------------------------
  auto* solve_cmd = app.add_subcommand("solve", "decide one instance file");
  std::string solve_path, solve_strategy = "backtracking", solve_order = "longest";
  std::string solve_out_partition;
  uint64_t solve_nodes = 50'000'000;
  double solve_secs = 60.0;
  bool solve_count = false, solve_json = false;
  solve_cmd->add_option("instance", solve_path)->required();
  solve_cmd->add_option("--strategy", solve_strategy)
      ->check(CLI::IsMember({"backtracking", "exhaustive"}));
  solve_cmd->add_option("--order", solve_order)->check(CLI::IsMember({"longest", "shortest"}));
  solve_cmd->add_option("--budget-nodes", solve_nodes);
  solve_cmd->add_option("--budget-secs", solve_secs);
  solve_cmd->add_flag("--count", solve_count, "count all valid partitions");
  solve_cmd->add_flag("--json", solve_json);
  solve_cmd->add_option("--out-partition", solve_out_partition);

  // ---- verify ---------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "check a partition file");
  std::string verify_instance, verify_partition_path;
  bool verify_json = false;
  verify_cmd->add_option("instance", verify_instance)->required();
  verify_cmd->add_option("partition", verify_partition_path)->required();
  verify_cmd->add_flag("--json", verify_json);

  // ---- reduce ---------------------------------------------------------
  auto* reduce_cmd = app.add_subcommand("reduce", "build a reduction from a 3SAT(3) formula");
  std::string reduce_formula, reduce_family, reduce_stage;
  std::string reduce_out_instance, reduce_out_meta, reduce_policy = "minimal";
  uint64_t reduce_block = 0;
  reduce_cmd->add_option("formula", reduce_formula)->required();
  reduce_cmd->add_option("--family", reduce_family)
      ->required()
      ->check(CLI::IsMember({"ef", "ff", "pf"}));
  reduce_cmd->add_option("--stage", reduce_stage)
      ->required()
      ->check(CLI::IsMember({"msp", "sp", "msp-bin", "sp-bin"}));
  reduce_cmd->add_option("--delta,--t", reduce_block, "block length override");
  reduce_cmd->add_option("--policy", reduce_policy, "EF msp-bin codeword policy")
      ->check(CLI::IsMember({"minimal", "chaining"}));
  reduce_cmd->add_option("--out-instance", reduce_out_instance);
  reduce_cmd->add_option("--out-meta", reduce_out_meta);

  // ---- witness --------------------------------------------------------
  auto* witness_cmd = app.add_subcommand("witness", "build the witness partition");
  std::string witness_meta, witness_assignment, witness_out = "witness.partition";
  std::string witness_check_instance;
  witness_cmd->add_option("meta", witness_meta)->required();
  witness_cmd->add_option("assignment", witness_assignment)->required();
  witness_cmd->add_option("--out", witness_out);
  witness_cmd->add_option("--check-instance", witness_check_instance,
                          "cross-check the rebuilt instance against this file");

  // ---- extract --------------------------------------------------------
  auto* extract_cmd = app.add_subcommand("extract", "read an assignment off a partition");
  std::string extract_meta, extract_partition, extract_out;
  extract_cmd->add_option("meta", extract_meta)->required();
  extract_cmd->add_option("partition", extract_partition)->required();
  extract_cmd->add_option("--out", extract_out);

  // ---- gen3sat3 -------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("gen3sat3", "generate a random 3SAT(3) formula");
  uint32_t gen_nvars = 3;
  uint64_t gen_seed = 0;
  std::string gen_out;
  gen_cmd->add_option("--nvars", gen_nvars)->required();
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--out", gen_out);

  // ---- cnf ------------------------------------------------------------
  auto* cnf_cmd = app.add_subcommand("cnf", "export an instance as DIMACS");
  std::string cnf_instance, cnf_out;
  cnf_cmd->add_option("instance", cnf_instance)->required();
  cnf_cmd->add_option("--out", cnf_out);

  // ---- audit ----------------------------------------------------------
  auto* audit_cmd = app.add_subcommand("audit", "batch SAT-vs-solver agreement check");
  std::string audit_family, audit_stage = "msp";
  uint32_t audit_nvars = 3;
  uint64_t audit_seeds = 10, audit_seed_base = 0;
  bool audit_json = false;
  audit_cmd->add_option("--family", audit_family)
      ->required()
      ->check(CLI::IsMember({"ef", "ff", "pf"}));
  audit_cmd->add_option("--stage", audit_stage)->check(CLI::IsMember({"msp", "sp"}));
  audit_cmd->add_option("--nvars", audit_nvars);
  audit_cmd->add_option("--seeds", audit_seeds);
  audit_cmd->add_option("--seed-base", audit_seed_base);
  audit_cmd->add_flag("--json", audit_json);

  // ---- oligo ----------------------------------------------------------
  auto* oligo_cmd = app.add_subcommand("oligo", "partition a DNA sequence into oligos");
  std::string oligo_fasta, oligo_kind = "factor";
  uint64_t oligo_k = 0;
  bool oligo_json = false;
  oligo_cmd->add_option("fasta", oligo_fasta)->required();
  oligo_cmd->add_option("--K", oligo_k)->required();
  oligo_cmd->add_option("--kind", oligo_kind)->check(CLI::IsMember({"equality", "factor"}));
  oligo_cmd->add_flag("--json", oligo_json);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ExitCode::Sat;
  } catch (const CLI::ParseError& e) {
    err << e.get_name() << ": " << e.what() << "\n";
    return ExitCode::ParseFailure;
  }

  try {
    if (*solve_cmd) {
      Instance inst = parse_instance(read_file(solve_path));
      SolveConfig cfg;
      cfg.strategy =
          solve_strategy == "exhaustive" ? Strategy::Exhaustive : Strategy::Backtracking;
      cfg.piece_order =
          solve_order == "shortest" ? PieceOrder::ShortestFirst : PieceOrder::LongestFirst;
      cfg.node_budget = solve_nodes;
      cfg.time_budget_secs = solve_secs;
      cfg.count_all = solve_count;
      return report_solve(inst, solve(inst, cfg), solve_json, solve_out_partition, out);
    }

    if (*verify_cmd) {
      Instance inst = parse_instance(read_file(verify_instance));
      Partition p = parse_partition(read_file(verify_partition_path));
      VerifyReport report = verify_partition(inst, p);
      if (verify_json) {
        json j;
        j["valid"] = report.valid;
        json vs = json::array();
        for (const auto& v : report.violations) {
          json item;
          item["kind"] = v.kind == Violation::Kind::Collision ? "collision" : "length";
          item["a"] = {{"string", v.a.string_index}, {"begin", v.a.begin}, {"len", v.a.len}};
          if (v.kind == Violation::Kind::Collision)
            item["b"] = {{"string", v.b.string_index}, {"begin", v.b.begin}, {"len", v.b.len}};
          vs.push_back(item);
        }
        j["violations"] = vs;
        out << j.dump(2) << "\n";
      } else if (report.valid) {
        out << "VALID\n";
      } else {
        out << "INVALID\n";
        for (const auto& v : report.violations) {
          if (v.kind == Violation::Kind::LengthViolation) {
            out << "length violation: string " << v.a.string_index << " piece at "
                << v.a.begin << " has length " << v.a.len << "\n";
          } else {
            out << "collision: string " << v.a.string_index << " piece ["
                << piece_line(inst, piece_text(inst, v.a)) << "] at " << v.a.begin
                << " vs string " << v.b.string_index << " piece ["
                << piece_line(inst, piece_text(inst, v.b)) << "] at " << v.b.begin << "\n";
          }
        }
      }
      return report.valid ? ExitCode::Sat : ExitCode::Unsat;
    }

    if (*reduce_cmd) {
      Formula3Sat3 f = parse_sat3(read_file(reduce_formula));
      auto violations = validate_3sat3(f);
      if (!violations.empty()) {
        for (const auto& v : violations) err << "formula: " << v << "\n";
        return ExitCode::SemanticFailure;
      }
      ReduceOptions opts;
      if (reduce_cmd->count("--delta")) opts.block_len = reduce_block;
      opts.ef_policy = reduce_policy == "chaining" ? EfCodewordPolicy::SpChaining
                                                   : EfCodewordPolicy::MinimalWidth;
      Family family = family_from_name(reduce_family);
      Stage stage = stage_from_name(reduce_stage);
      ReductionOutput r = run_reduction(family, stage, f, opts);

      std::string stem = reduce_family + "-" + reduce_stage;
      std::string out_instance =
          reduce_out_instance.empty() ? stem + ".instance" : reduce_out_instance;
      std::string out_meta = reduce_out_meta.empty() ? stem + ".meta.json" : reduce_out_meta;
      write_file(out_instance, render_instance(r.instance));
      write_file(out_meta, render_sidecar(r));

      LengthAudit audit = audit_of(r);
      out << "family: " << reduce_family << "  stage: " << reduce_stage << "\n";
      out << "strings: " << r.instance.strings.size() << "  K: " << r.instance.max_piece_len
          << "  alphabet: " << r.instance.alphabet.size() << "\n";
      if (r.block_len) out << "block length: " << r.block_len << "\n";
      if (audit.bound) {
        out << "total length: " << audit.total << (audit.exact ? " = " : " <= ")
            << *audit.bound << " (" << audit.description << ")\n";
        if (audit.exact ? audit.total != *audit.bound : audit.total > *audit.bound) {
          err << "length audit failed\n";
          return ExitCode::SemanticFailure;
        }
      } else {
        out << "total length: " << audit.total << " (" << audit.description << ")\n";
      }
      out << "wrote " << out_instance << " and " << out_meta << "\n";
      return ExitCode::Sat;
    }

    if (*witness_cmd) {
      SidecarInfo info = parse_sidecar(read_file(witness_meta));
      ReductionOutput r = rebuild_reduction(info);
      if (!witness_check_instance.empty()) {
        Instance on_disk = parse_instance(read_file(witness_check_instance));
        if (!(on_disk.strings == r.instance.strings &&
              on_disk.max_piece_len == r.instance.max_piece_len &&
              on_disk.kind == r.instance.kind))
          throw SemanticError("instance file does not match the sidecar's reduction");
      }
      Assignment a = parse_assignment(read_file(witness_assignment), r.source.n_vars);
      Partition w = witness_from_assignment(r, a);
      write_file(witness_out, render_partition(w));
      out << "wrote " << witness_out << "\n";
      return ExitCode::Sat;
    }

    if (*extract_cmd) {
      SidecarInfo info = parse_sidecar(read_file(extract_meta));
      ReductionOutput r = rebuild_reduction(info);
      Partition p = parse_partition(read_file(extract_partition));
      Assignment a = assignment_from_partition(r, p);
      std::string rendered = render_assignment(a);
      out << rendered;
      if (!extract_out.empty()) write_file(extract_out, rendered);
      return ExitCode::Sat;
    }

    if (*gen_cmd) {
      Formula3Sat3 f = gen_3sat3(gen_nvars, gen_seed);
      std::string rendered = render_sat3(f);
      if (gen_out.empty())
        out << rendered;
      else
        write_file(gen_out, rendered);
      return ExitCode::Sat;
    }

    if (*cnf_cmd) {
      Instance inst = parse_instance(read_file(cnf_instance));
      std::string rendered = render_dimacs(export_cnf(inst));
      if (cnf_out.empty())
        out << rendered;
      else
        write_file(cnf_out, rendered);
      return ExitCode::Sat;
    }

    if (*audit_cmd) {
      Family family = family_from_name(audit_family);
      Stage stage = stage_from_name(audit_stage);
      uint64_t agree = 0;
      std::vector<uint64_t> disagreements;
      json rows = json::array();
      for (uint64_t seed = audit_seed_base; seed < audit_seed_base + audit_seeds; ++seed) {
        Formula3Sat3 f = gen_3sat3(audit_nvars, seed);
        bool sat = solve_sat_bruteforce(f).has_value();
        ReductionOutput r = run_reduction(family, stage, f, {});
        SolveResult res = solve_backtracking(r.instance);
        bool solver_sat = res.status == SolveStatus::Sat;
        bool ok = res.status != SolveStatus::BudgetExhausted && solver_sat == sat;
        if (ok && sat) {
          // forward witness and extraction must also close the loop
          Assignment a = *solve_sat_bruteforce(f);
          Partition w = witness_from_assignment(r, a);
          ok = verify_partition(r.instance, w).valid &&
               satisfies(f, assignment_from_partition(r, *res.partition));
        }
        if (ok)
          ++agree;
        else
          disagreements.push_back(seed);
        if (audit_json)
          rows.push_back({{"seed", seed},
                          {"sat", sat},
                          {"solver", status_name(res.status)},
                          {"agree", ok}});
        else
          out << "seed " << seed << ": sat=" << (sat ? "yes" : "no") << " solver="
              << status_name(res.status) << (ok ? "" : "  << DISAGREEMENT") << "\n";
      }
      if (audit_json) {
        json j;
        j["rows"] = rows;
        j["agreement"] = agree;
        j["seeds"] = audit_seeds;
        j["counterexamples"] = disagreements;
        out << j.dump(2) << "\n";
      } else {
        out << "agreement: " << agree << "/" << audit_seeds << "\n";
        for (uint64_t seed : disagreements) out << "counterexample seed: " << seed << "\n";
      }
      return disagreements.empty() ? ExitCode::Sat : ExitCode::AuditDisagreement;
    }

    if (*oligo_cmd) {
      auto [header, seq] = parse_fasta(read_file(oligo_fasta));
      if (oligo_k < 1) throw SemanticError("oligo: --K must be >= 1");
      Instance inst = oligo_instance(seq, oligo_k, kind_from_name(oligo_kind));
      SolveResult res = solve_backtracking(inst);
      auto oligo_word = [&](const SymStr& piece) {
        std::string word;
        for (Sym s : piece) word += inst.alphabet.name(s);
        return word;
      };
      if (oligo_json) {
        json j;
        j["header"] = header;
        j["status"] = res.status == SolveStatus::Sat     ? "sat"
                      : res.status == SolveStatus::Unsat ? "unsat"
                                                         : "budget";
        if (res.partition) {
          json oligos = json::array();
          for (const auto& piece : pieces_of(inst.strings[0], res.partition->cuts[0]))
            oligos.push_back(oligo_word(piece));
          j["oligos"] = oligos;
        }
        out << j.dump(2) << "\n";
      } else if (res.status == SolveStatus::Sat) {
        out << "SAT: " << res.partition->cuts[0].size() + 1 << " oligos\n";
        for (const auto& piece : pieces_of(inst.strings[0], res.partition->cuts[0]))
          out << oligo_word(piece) << "\n";
      } else {
        out << status_name(res.status) << "\n";
      }
      return res.status == SolveStatus::Sat     ? ExitCode::Sat
             : res.status == SolveStatus::Unsat ? ExitCode::Unsat
                                                : ExitCode::Budget;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return ExitCode::ParseFailure;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return ExitCode::Budget;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::SemanticFailure;
  }
  err << "no subcommand\n";
  return ExitCode::ParseFailure;
}

}  // namespace strpart
