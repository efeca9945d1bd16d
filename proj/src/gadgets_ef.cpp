#include <algorithm>
#include <cmath>
#include <set>

#include "gadgets_detail.hpp"
#include "strpart/gadgets.hpp"

namespace strpart {

using detail::ceil_log2;

const char* family_name(Family f) {
  switch (f) {
    case Family::EF: return "ef";
    case Family::FF: return "ff";
    case Family::PF: return "pf";
  }
  return "?";
}

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Msp: return "msp";
    case Stage::Sp: return "sp";
    case Stage::MspBinary: return "msp-bin";
    case Stage::SpBinary: return "sp-bin";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "ef") return Family::EF;
  if (name == "ff") return Family::FF;
  if (name == "pf") return Family::PF;
  throw ParseError("unknown family '" + name + "' (want ef|ff|pf)");
}

Stage stage_from_name(const std::string& name) {
  if (name == "msp") return Stage::Msp;
  if (name == "sp") return Stage::Sp;
  if (name == "msp-bin") return Stage::MspBinary;
  if (name == "sp-bin") return Stage::SpBinary;
  throw ParseError("unknown stage '" + name + "' (want msp|sp|msp-bin|sp-bin)");
}

const std::string& SymbolTable::require(const std::string& role) const {
  auto it = roles.find(role);
  if (it == roles.end()) throw SemanticError("symbol table: missing role " + role);
  return it->second;
}

SymStr bits_to_syms(const std::string& bits) {
  SymStr out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw SemanticError("bits_to_syms: non-binary character");
    out.push_back(static_cast<Sym>(c - '0'));
  }
  return out;
}

std::string syms_to_bits(const SymStr& s) {
  std::string out;
  out.reserve(s.size());
  for (Sym x : s) {
    if (x > 1) throw SemanticError("syms_to_bits: non-binary symbol");
    out.push_back(static_cast<char>('0' + x));
  }
  return out;
}

ReductionOutput ef_msp_from_3sat3(const Formula3Sat3& f) {
  detail::require_valid(f);
  ReductionOutput r;
  r.family = Family::EF;
  r.stage = Stage::Msp;
  r.source = f;
  Instance& inst = r.instance;
  inst.kind = CollisionKind::Equality;
  inst.max_piece_len = 2;

  auto lit_syms = detail::intern_literal_letters(f, inst, r.table);
  std::vector<Sym> var_syms;
  for (uint32_t v = 0; v < f.n_vars; ++v) {
    std::string name = detail::var_symbol(v);
    var_syms.push_back(inst.alphabet.intern(name));
    r.table.roles[detail::var_role(v)] = name;
  }
  Sym bminus = inst.alphabet.intern("bminus");
  Sym bplus = inst.alphabet.intern("bplus");
  r.table.roles["sep:bminus"] = "bminus";
  r.table.roles["sep:bplus"] = "bplus";

  // Forbidden strings come first so the solver pins both letters immediately.
  inst.strings.push_back(SymStr(1, bminus));
  r.origins.push_back({StringOrigin::Type::Forbidden, 0, 0});
  inst.strings.push_back(SymStr(1, bplus));
  r.origins.push_back({StringOrigin::Type::Forbidden, 1, 0});

  for (uint32_t i = 0; i < f.clauses.size(); ++i) {
    SymStr w;
    for (uint32_t j = 0; j < f.clauses[i].size(); ++j) {
      if (j) w.push_back(bminus);
      r.markers.push_back({i, j, {inst.strings.size(), w.size(), 1}});
      w.push_back(lit_syms[i][j]);
    }
    inst.strings.push_back(std::move(w));
    r.origins.push_back({StringOrigin::Type::Clause, i, 0});
  }

  // Enforcer for x_v: c_i^p + c_k^r x_v c_k^r x_v c_k^r + c_j^q, where c_i^p
  // and c_j^q are the positive occurrences and c_k^r the negated one.
  auto occs = detail::occurrences_of(f);
  for (uint32_t v = 0; v < f.n_vars; ++v) {
    const auto& occ = occs[v];
    Sym cp = lit_syms[occ.pos_first.first][occ.pos_first.second];
    Sym cq = lit_syms[occ.pos_second.first][occ.pos_second.second];
    Sym cr = lit_syms[occ.negated.first][occ.negated.second];
    Sym xv = var_syms[v];
    inst.strings.push_back({cp, bplus, cr, xv, cr, xv, cr, bplus, cq});
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 0});
  }
  inst.validate();
  return r;
}

ReductionOutput ef_sp_from_msp(const ReductionOutput& msp) {
  if (msp.family != Family::EF || msp.stage != Stage::Msp)
    throw SemanticError("ef_sp_from_msp: input must be an EF-MSP output");
  ReductionOutput r;
  r.family = Family::EF;
  r.stage = Stage::Sp;
  r.source = msp.source;
  r.table = msp.table;
  r.parent = std::make_shared<ReductionOutput>(msp);

  Instance& inst = r.instance;
  inst.kind = CollisionKind::Equality;
  inst.max_piece_len = 2;
  inst.alphabet = msp.instance.alphabet;
  Sym bdot = inst.alphabet.intern("bdot");
  r.table.roles["sep:bdot"] = "bdot";
  size_t l = msp.instance.strings.size();
  std::vector<Sym> joiners;
  for (size_t i = 1; i < l; ++i) {
    std::string name = "d_" + std::to_string(i);
    joiners.push_back(inst.alphabet.intern(name));
    r.table.roles["joiner:" + std::to_string(i)] = name;
  }

  Sym bminus = *inst.alphabet.find("bminus");
  SymStr w;
  w.append(SymStr(4, bdot));
  w.push_back(bminus);
  r.segments.push_back({Segment::Kind::EfPrefix, 0, 5, 0});
  for (size_t i = 0; i < l; ++i) {
    if (i > 0) {
      Sym d = joiners[i - 1];
      r.segments.push_back({Segment::Kind::EfJoiner, w.size(), 4, static_cast<uint32_t>(i)});
      w.push_back(d);
      w.push_back(bdot);
      w.push_back(bdot);
      w.push_back(d);
    }
    r.segments.push_back({Segment::Kind::SourceString, w.size(),
                          msp.instance.strings[i].size(), static_cast<uint32_t>(i)});
    w.append(msp.instance.strings[i]);
  }
  inst.strings.push_back(std::move(w));

  // markers move into the single string at the segment offsets
  for (const LiteralMarker& m : msp.markers) {
    LiteralMarker shifted = m;
    for (const Segment& seg : r.segments)
      if (seg.kind == Segment::Kind::SourceString && seg.index == m.span.string_index) {
        shifted.span.string_index = 0;
        shifted.span.begin = seg.begin + m.span.begin;
      }
    r.markers.push_back(shifted);
  }
  inst.validate();
  return r;
}

// --------------------------------------------------------------------------
// binary encoding

namespace {

std::string fixed_width_bits(size_t value, size_t width) {
  std::string out(width, '0');
  for (size_t b = 0; b < width; ++b)
    if (value & (size_t{1} << (width - 1 - b))) out[b] = '1';
  return out;
}

}  // namespace

std::vector<std::string> codeword_prefix_set(const std::vector<std::string>& codewords) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  size_t delta = codewords.empty() ? 0 : codewords.front().size();
  auto push = [&](std::string s) {
    if (seen.insert(s).second) out.push_back(std::move(s));
  };
  for (const auto& c : codewords)
    for (size_t i = 1; i + 1 <= delta; ++i) push(c.substr(0, i));
  for (const auto& c : codewords)
    for (const auto& d : codewords)
      for (size_t i = delta + 1; i + 1 <= 2 * delta; ++i) push((c + d).substr(0, i));
  return out;
}

ReductionOutput ef_binary_encode(const ReductionOutput& msp, std::optional<size_t> delta_in,
                                 EfCodewordPolicy policy) {
  if (msp.family != Family::EF || msp.stage != Stage::Msp)
    throw SemanticError("ef_binary_encode: input must be an EF-MSP output");
  size_t n = msp.instance.alphabet.size();
  size_t min_width = std::max<size_t>(1, ceil_log2(n));
  size_t policy_min = min_width;
  if (policy == EfCodewordPolicy::SpChaining) {
    size_t three_log = static_cast<size_t>(std::ceil(3.0 * std::log2(double(n) + 1.0)));
    policy_min = std::max({size_t{9}, three_log, min_width + 1});
  }
  size_t delta = delta_in.value_or(policy_min);
  if (delta < min_width)
    throw SemanticError("ef_binary_encode: delta=" + std::to_string(delta) +
                        " below ceil(log2 |alphabet|)=" + std::to_string(min_width));
  if (delta < policy_min)
    throw SemanticError("ef_binary_encode: delta=" + std::to_string(delta) +
                        " below the chaining policy minimum " + std::to_string(policy_min));

  ReductionOutput r;
  r.family = Family::EF;
  r.stage = Stage::MspBinary;
  r.source = msp.source;
  r.table = msp.table;
  r.block_len = delta;
  r.parent = std::make_shared<ReductionOutput>(msp);
  Instance& inst = r.instance;
  inst.kind = CollisionKind::Equality;
  inst.max_piece_len = 2 * delta;
  inst.alphabet = Alphabet::binary();

  std::vector<std::string> codewords;
  for (size_t i = 0; i < n; ++i) {
    std::string bits = policy == EfCodewordPolicy::SpChaining
                           ? "0" + fixed_width_bits(i, delta - 1)
                           : fixed_width_bits(i, delta);
    codewords.push_back(bits);
    r.codebook[msp.instance.alphabet.name(static_cast<Sym>(i))] = bits;
  }

  for (size_t i = 0; i < msp.instance.strings.size(); ++i) {
    SymStr w;
    for (Sym s : msp.instance.strings[i]) w += bits_to_syms(codewords[s]);
    inst.strings.push_back(std::move(w));
    r.origins.push_back(msp.origins[i]);
  }
  uint32_t ordinal = 0;
  for (const auto& bits : codeword_prefix_set(codewords)) {
    inst.strings.push_back(bits_to_syms(bits));
    r.origins.push_back({StringOrigin::Type::CodePrefix, ordinal++, 0});
  }

  for (const LiteralMarker& m : msp.markers) {
    LiteralMarker shifted = m;
    shifted.span.begin = m.span.begin * delta;
    shifted.span.len = delta;
    r.markers.push_back(shifted);
  }
  inst.validate();
  return r;
}

// --------------------------------------------------------------------------
// padded-string delimiters

std::string bin_repr(uint64_t j) {
  if (j == 0) throw SemanticError("bin_repr: argument must be positive");
  std::string out;
  while (j > 1) {
    out.insert(out.begin(), static_cast<char>('0' + (j & 1)));
    j >>= 1;
  }
  return out;
}

std::string pad_bits(size_t i, const std::string& s) {
  if (i == 0) throw SemanticError("pad_bits: pad width must be positive");
  return std::string(i - 1, '1') + "0" + s;
}

std::vector<std::string> chain_components(const std::string& s, size_t k) {
  if (k < 4 || s.empty() || s.size() > k / 2 - 1)
    throw SemanticError("chain_components: need 1 <= |s| <= K/2 - 1");
  size_t trailing = 0;
  while (trailing < s.size() && s[s.size() - 1 - trailing] == '0') ++trailing;
  std::string head = s.substr(0, s.size() - trailing);  // empty or ends with 1
  size_t width = k - s.size();
  std::vector<std::string> parts;
  auto mirror = [](const std::string& x) { return std::string(x.rbegin(), x.rend()); };
  parts.push_back(mirror(pad_bits(width, s)));
  for (size_t i = 0; i < trailing; ++i) {
    std::string mid = head + std::string(i, '0');
    parts.push_back(pad_bits(width, mid));
    parts.push_back(mirror(pad_bits(width, mid)));
  }
  parts.push_back(pad_bits(width, s));
  return parts;
}

std::string chain_bits(const std::string& s, size_t k) {
  std::string out;
  for (const auto& part : chain_components(s, k)) out += part;
  return out;
}

std::string delimiter_bits(size_t j, size_t k) {
  if (j < 1) throw SemanticError("delimiter_bits: j must be >= 1");
  if (j == 1) {
    // 0 (1)^{K-1} (1)^{K(K-1)/2} (1)^{K-1} 0, of length K(K+3)/2
    return "0" + std::string((k - 1) + k * (k - 1) / 2 + (k - 1), '1') + "0";
  }
  return chain_bits(bin_repr(j), k);
}

std::vector<std::string> delimiter_witness_pieces(size_t j, size_t k) {
  if (j == 1) {
    std::vector<std::string> parts;
    parts.push_back("0" + std::string(k - 1, '1'));
    // the middle run of K(K-1)/2 ones splits into the distinct runs 1..K-1
    for (size_t run = 1; run <= k - 1; ++run) parts.push_back(std::string(run, '1'));
    parts.push_back(std::string(k - 1, '1') + "0");
    return parts;
  }
  return chain_components(bin_repr(j), k);
}

ReductionOutput ef_sp_binary(const ReductionOutput& bin) {
  if (bin.family != Family::EF || bin.stage != Stage::MspBinary)
    throw SemanticError("ef_sp_binary: input must be an EF-MSP binary output");
  size_t delta = bin.block_len;
  size_t k = 2 * delta;
  size_t n = bin.codebook.size();
  size_t l = bin.instance.strings.size();
  for (const auto& [sym, bits] : bin.codebook)
    if (bits.empty() || bits[0] != '0')
      throw SemanticError("ef_sp_binary: codeword for '" + sym +
                          "' does not start with 0 (use the SpChaining policy)");
  double three_log = 3.0 * std::log2(double(n) + 1.0);
  if (delta < 9 || double(delta) < three_log)
    throw SemanticError("ef_sp_binary: need delta >= max(9, 3*log2(n+1)); delta=" +
                        std::to_string(delta) + ", n=" + std::to_string(n));
  if (l > (n * n + n) * (delta - 1))
    throw SemanticError("ef_sp_binary: need l <= (n^2+n)(delta-1); l=" + std::to_string(l) +
                        ", bound=" + std::to_string((n * n + n) * (delta - 1)));

  ReductionOutput r;
  r.family = Family::EF;
  r.stage = Stage::SpBinary;
  r.source = bin.source;
  r.table = bin.table;
  r.codebook = bin.codebook;
  r.block_len = delta;
  r.parent = std::make_shared<ReductionOutput>(bin);
  Instance& inst = r.instance;
  inst.kind = CollisionKind::Equality;
  inst.max_piece_len = k;
  inst.alphabet = Alphabet::binary();

  SymStr w;
  for (size_t i = 0; i < l; ++i) {
    if (i > 0) {
      std::string d = delimiter_bits(i, k);
      if (d.size() > k * k)
        throw SemanticError("ef_sp_binary: delimiter longer than K^2");
      r.segments.push_back(
          {Segment::Kind::EfBinDelimiter, w.size(), d.size(), static_cast<uint32_t>(i)});
      w += bits_to_syms(d);
    }
    r.segments.push_back({Segment::Kind::SourceString, w.size(),
                          bin.instance.strings[i].size(), static_cast<uint32_t>(i)});
    w.append(bin.instance.strings[i]);
  }
  inst.strings.push_back(std::move(w));

  for (const LiteralMarker& m : bin.markers) {
    LiteralMarker shifted = m;
    for (const Segment& seg : r.segments)
      if (seg.kind == Segment::Kind::SourceString && seg.index == m.span.string_index) {
        shifted.span.string_index = 0;
        shifted.span.begin = seg.begin + m.span.begin;
      }
    r.markers.push_back(shifted);
  }
  inst.validate();
  return r;
}

}  // namespace strpart
