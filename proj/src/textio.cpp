#include "strpart/textio.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strpart/error.hpp"
#include "strpart/gadgets.hpp"

namespace strpart {

namespace {

using nlohmann::json;

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  size_t b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail(size_t line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Instance inst;
  bool have_kind = false, have_k = false, have_alphabet = false, fixed_alphabet = false;
  std::istringstream in(text);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    auto colon = line.find(':');
    if (tokens_of(line).empty()) continue;
    if (colon == std::string::npos) fail(line_no, "expected 'key: values'");
    std::string key = trimmed(line.substr(0, colon));
    auto toks = tokens_of(line.substr(colon + 1));
    if (key == "kind") {
      if (toks.size() != 1) fail(line_no, "kind wants one value");
      inst.kind = kind_from_name(toks[0]);
      have_kind = true;
    } else if (key == "K") {
      if (toks.size() != 1) fail(line_no, "K wants one integer");
      try {
        long long k = std::stoll(toks[0]);
        if (k < 1) fail(line_no, "K must be >= 1");
        inst.max_piece_len = static_cast<size_t>(k);
      } catch (const std::invalid_argument&) {
        fail(line_no, "K must be an integer");
      }
      have_k = true;
    } else if (key == "alphabet") {
      if (have_alphabet) fail(line_no, "duplicate alphabet line");
      if (!inst.strings.empty()) fail(line_no, "alphabet must precede the strings");
      try {
        inst.alphabet = Alphabet(toks);
      } catch (const SemanticError& e) {
        fail(line_no, e.what());
      }
      have_alphabet = fixed_alphabet = true;
    } else if (key == "string") {
      if (toks.empty()) fail(line_no, "empty string");
      SymStr w;
      for (const auto& tok : toks) {
        if (fixed_alphabet) {
          auto s = inst.alphabet.find(tok);
          if (!s) fail(line_no, "symbol '" + tok + "' not in the declared alphabet");
          w.push_back(*s);
        } else {
          w.push_back(inst.alphabet.intern(tok));
        }
      }
      inst.strings.push_back(std::move(w));
    } else if (key == "string01") {
      if (toks.size() != 1) fail(line_no, "string01 wants one 0/1 word");
      if (!have_alphabet) {
        inst.alphabet = Alphabet::binary();
        have_alphabet = fixed_alphabet = true;
      }
      if (!inst.alphabet.is_binary())
        fail(line_no, "string01 requires the binary alphabet {0, 1}");
      SymStr w;
      for (char c : toks[0]) {
        if (c != '0' && c != '1') fail(line_no, "string01 may contain only 0 and 1");
        w.push_back(static_cast<Sym>(c - '0'));
      }
      inst.strings.push_back(std::move(w));
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  if (!have_kind) throw ParseError("missing 'kind:' line");
  if (!have_k) throw ParseError("missing 'K:' line");
  if (inst.strings.empty()) throw ParseError("instance has no strings");
  try {
    inst.validate();
  } catch (const SemanticError& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string render_instance(const Instance& inst) {
  std::ostringstream out;
  out << "kind: " << kind_name(inst.kind) << "\n";
  out << "K: " << inst.max_piece_len << "\n";
  bool binary = inst.alphabet.is_binary();
  if (!binary) {
    out << "alphabet:";
    for (const auto& name : inst.alphabet.names()) out << " " << name;
    out << "\n";
  }
  for (const auto& w : inst.strings) {
    if (binary) {
      out << "string01: ";
      for (Sym s : w) out << (s ? '1' : '0');
    } else {
      out << "string:";
      for (Sym s : w) out << " " << inst.alphabet.name(s);
    }
    out << "\n";
  }
  return out.str();
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::istringstream in(text);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    auto colon = line.find(':');
    if (tokens_of(line).empty()) continue;
    if (colon == std::string::npos || trimmed(line.substr(0, colon)) != "cuts")
      fail(line_no, "expected 'cuts: ...'");
    std::vector<size_t> cuts;
    for (const auto& tok : tokens_of(line.substr(colon + 1))) {
      try {
        long long c = std::stoll(tok);
        if (c < 1) fail(line_no, "cut points must be positive");
        cuts.push_back(static_cast<size_t>(c));
      } catch (const std::invalid_argument&) {
        fail(line_no, "cut points must be integers");
      }
    }
    p.cuts.push_back(std::move(cuts));
  }
  return p;
}

std::string render_partition(const Partition& p) {
  std::ostringstream out;
  for (const auto& cuts : p.cuts) {
    out << "cuts:";
    for (size_t c : cuts) out << " " << c;
    out << "\n";
  }
  return out.str();
}

Assignment parse_assignment(const std::string& text, uint32_t n_vars) {
  Assignment a;
  a.values.resize(n_vars, false);
  std::vector<bool> seen(n_vars, false);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    long long v;
    try {
      v = std::stoll(tok);
    } catch (const std::invalid_argument&) {
      throw ParseError("assignment: '" + tok + "' is not an integer");
    }
    if (v == 0 || static_cast<uint64_t>(std::llabs(v)) > n_vars)
      throw ParseError("assignment: variable " + std::to_string(v) + " out of range");
    uint32_t var = static_cast<uint32_t>(std::llabs(v) - 1);
    if (seen[var]) throw ParseError("assignment: variable listed twice");
    seen[var] = true;
    a.values[var] = v > 0;
  }
  for (uint32_t v = 0; v < n_vars; ++v)
    if (!seen[v]) throw ParseError("assignment: variable " + std::to_string(v + 1) + " missing");
  return a;
}

std::string render_assignment(const Assignment& a) {
  std::ostringstream out;
  for (size_t v = 0; v < a.values.size(); ++v) {
    if (v) out << " ";
    out << (a.values[v] ? "" : "-") << (v + 1);
  }
  out << "\n";
  return out.str();
}

std::string render_sidecar(const ReductionOutput& r) {
  json j;
  j["family"] = family_name(r.family);
  j["stage"] = stage_name(r.stage);
  j["K"] = r.instance.max_piece_len;
  j["kind"] = kind_name(r.instance.kind);
  j["block_len"] = r.block_len;
  bool chaining = false;
  if (!r.codebook.empty()) {
    chaining = true;
    for (const auto& [sym, bits] : r.codebook)
      if (sym != "0" && sym != "1" && sym != "$" && (bits.empty() || bits[0] != '0'))
        chaining = false;
  }
  j["sp_chaining_codewords"] = r.family == Family::EF && chaining;
  j["source"] = render_sat3(r.source);
  j["roles"] = r.table.roles;
  j["codebook"] = r.codebook;
  json markers = json::array();
  for (const LiteralMarker& m : r.markers) {
    markers.push_back({{"clause", m.clause},
                       {"lit", m.lit},
                       {"string", m.span.string_index},
                       {"begin", m.span.begin},
                       {"len", m.span.len}});
  }
  j["markers"] = markers;
  return j.dump(2) + "\n";
}

SidecarInfo parse_sidecar(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("sidecar: ") + e.what());
  }
  SidecarInfo info;
  try {
    info.family = family_from_name(j.at("family").get<std::string>());
    info.stage = stage_from_name(j.at("stage").get<std::string>());
    info.block_len = j.at("block_len").get<size_t>();
    info.sp_chaining_codewords = j.value("sp_chaining_codewords", false);
    info.source = parse_sat3(j.at("source").get<std::string>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("sidecar: ") + e.what());
  }
  return info;
}

ReductionOutput rebuild_reduction(const SidecarInfo& info) {
  ReduceOptions opts;
  if (info.block_len > 0) opts.block_len = info.block_len;
  opts.ef_policy = info.sp_chaining_codewords ? EfCodewordPolicy::SpChaining
                                              : EfCodewordPolicy::MinimalWidth;
  return run_reduction(info.family, info.stage, info.source, opts);
}

std::pair<std::string, std::string> parse_fasta(const std::string& text) {
  std::istringstream in(text);
  std::string line, header, seq;
  bool have_header = false;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '>') {
      if (have_header) fail(line_no, "FASTA: more than one record");
      header = line.substr(1);
      have_header = true;
      continue;
    }
    if (!have_header) fail(line_no, "FASTA: sequence before '>' header");
    for (char c : line) {
      char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (u == 'A' || u == 'C' || u == 'G' || u == 'T') {
        seq.push_back(u);
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        fail(line_no, std::string("FASTA: unexpected character '") + c + "'");
      }
    }
  }
  if (!have_header) throw ParseError("FASTA: missing '>' header");
  if (seq.empty()) throw ParseError("FASTA: empty sequence");
  return {header, seq};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SemanticError("cannot write file: " + path);
  out << content;
}

}  // namespace strpart
