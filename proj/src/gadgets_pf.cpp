#include <array>

#include "gadgets_detail.hpp"
#include "strpart/gadgets.hpp"

namespace strpart {

ReductionOutput pf_msp_from_3sat3(const Formula3Sat3& f) {
  detail::require_valid(f);
  ReductionOutput r;
  r.family = Family::PF;
  r.stage = Stage::Msp;
  r.source = f;
  Instance& inst = r.instance;
  inst.kind = CollisionKind::Prefix;
  inst.max_piece_len = 2;

  auto lit_syms = detail::intern_literal_letters(f, inst, r.table);
  std::vector<std::array<Sym, 4>> var_syms(f.n_vars);
  for (uint32_t v = 0; v < f.n_vars; ++v)
    for (uint32_t k = 1; k <= 4; ++k) {
      std::string name = detail::var_symbol(v, k);
      var_syms[v][k - 1] = inst.alphabet.intern(name);
      r.table.roles[detail::var_role(v, k)] = name;
    }
  Sym dollar = inst.alphabet.intern("$");
  r.table.roles["sep:dollar"] = "$";

  inst.strings.push_back({dollar, dollar});
  r.origins.push_back({StringOrigin::Type::Forbidden, 0, 0});

  for (uint32_t i = 0; i < f.clauses.size(); ++i) {
    SymStr w;
    for (uint32_t j = 0; j < f.clauses[i].size(); ++j) {
      if (j) w.push_back(dollar);
      r.markers.push_back({i, j, {inst.strings.size(), w.size(), 1}});
      w.push_back(lit_syms[i][j]);
    }
    inst.strings.push_back(std::move(w));
    r.origins.push_back({StringOrigin::Type::Clause, i, 0});
  }

  // enforcer pair per variable: x1 cp cr x2 and x3 cq cr x4
  auto occs = detail::occurrences_of(f);
  for (uint32_t v = 0; v < f.n_vars; ++v) {
    const auto& occ = occs[v];
    Sym cp = lit_syms[occ.pos_first.first][occ.pos_first.second];
    Sym cq = lit_syms[occ.pos_second.first][occ.pos_second.second];
    Sym cr = lit_syms[occ.negated.first][occ.negated.second];
    inst.strings.push_back({var_syms[v][0], cp, cr, var_syms[v][1]});
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 0});
    inst.strings.push_back({var_syms[v][2], cq, cr, var_syms[v][3]});
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 1});
  }
  inst.validate();
  return r;
}

ReductionOutput pf_sp_from_msp(const ReductionOutput& msp) {
  if (msp.family != Family::PF || msp.stage != Stage::Msp)
    throw SemanticError("pf_sp_from_msp: input must be a PF-MSP output");
  return ff_sp_from_msp(msp);  // same connector construction
}

std::string pf_codeword(size_t i, size_t t) {
  if (i < 2 || i + 6 > t)
    throw SemanticError("pf_codeword: need 2 <= i <= t-6");
  return "00" + std::string(i, '1') + "0" + std::string(t - 4 - i, '1') + "0";
}

std::vector<std::string> pf_forbidden_strings() {
  return {"11", "01", "101", "0001", "10001"};
}

ReductionOutput pf_msp_binary_from_3sat3(const Formula3Sat3& f, std::optional<size_t> t_in) {
  detail::require_valid(f);
  size_t m = f.clauses.size();
  size_t n = f.n_vars;
  size_t t_min = 3 * m + 4 * n + 7;
  size_t t = t_in.value_or(t_min);
  if (t < t_min)
    throw SemanticError("pf_msp_binary: need t >= 3m+4n+7 = " + std::to_string(t_min) +
                        ", got " + std::to_string(t));

  ReductionOutput r;
  r.family = Family::PF;
  r.stage = Stage::MspBinary;
  r.source = f;
  r.block_len = t;
  Instance& inst = r.instance;
  inst.kind = CollisionKind::Prefix;
  inst.max_piece_len = 2 * t;
  inst.alphabet = Alphabet::binary();

  size_t next = 2;
  std::vector<std::vector<std::string>> lit_bits(m);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < f.clauses[i].size(); ++j) {
      std::string cw = pf_codeword(next++, t);
      lit_bits[i].push_back(cw);
      r.table.roles[detail::lit_role(i, j)] = detail::lit_symbol(i, j);
      r.codebook[detail::lit_symbol(i, j)] = cw;
    }
  std::vector<std::array<std::string, 4>> var_bits(n);
  for (uint32_t v = 0; v < n; ++v)
    for (uint32_t k = 1; k <= 4; ++k) {
      std::string cw = pf_codeword(next++, t);
      var_bits[v][k - 1] = cw;
      r.table.roles[detail::var_role(v, k)] = detail::var_symbol(v, k);
      r.codebook[detail::var_symbol(v, k)] = cw;
    }
  r.codebook["$"] = "1";

  uint32_t forb = 0;
  for (const std::string& s : pf_forbidden_strings()) {
    inst.strings.push_back(bits_to_syms(s));
    r.origins.push_back({StringOrigin::Type::Forbidden, forb++, 0});
  }

  for (uint32_t i = 0; i < m; ++i) {
    SymStr w;
    for (uint32_t j = 0; j < f.clauses[i].size(); ++j) {
      if (j) w += bits_to_syms("1");
      r.markers.push_back({i, j, {inst.strings.size(), w.size(), t}});
      w += bits_to_syms(lit_bits[i][j]);
    }
    inst.strings.push_back(std::move(w));
    r.origins.push_back({StringOrigin::Type::Clause, i, 0});
  }

  auto occs = detail::occurrences_of(f);
  for (uint32_t v = 0; v < n; ++v) {
    const auto& occ = occs[v];
    const std::string& cp = lit_bits[occ.pos_first.first][occ.pos_first.second];
    const std::string& cq = lit_bits[occ.pos_second.first][occ.pos_second.second];
    const std::string& cr = lit_bits[occ.negated.first][occ.negated.second];
    inst.strings.push_back(bits_to_syms(var_bits[v][0] + cp + cr + var_bits[v][1]));
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 0});
    inst.strings.push_back(bits_to_syms(var_bits[v][2] + cq + cr + var_bits[v][3]));
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 1});
  }
  inst.validate();
  return r;
}

std::vector<std::string> pf_forcing_block_parts(size_t k) {
  if (k < 12) throw SemanticError("pf forcing block: K too small");
  std::string f1 = "1" + std::string(3 * k - 2, '0') + "111";
  std::string f2 = "001" + std::string(k - 3, '0') + std::string(k - 2, '0') + "11" +
                   "101" + "00" + std::string(k - 2, '1') + "01";
  std::string f3 = "00" + std::string(k - 3, '1') + "0" + "10001";
  std::string f4 = "00" + std::string(k - 4, '1') + "01" + "0001";
  return {f4, f3, f2, f1};
}

std::vector<std::vector<std::string>> pf_forcing_block_pieces(size_t k) {
  std::vector<std::string> f4 = {"00" + std::string(k - 4, '1') + "01", "0001"};
  std::vector<std::string> f3 = {"00" + std::string(k - 3, '1') + "0", "10001"};
  std::vector<std::string> f2 = {"001" + std::string(k - 3, '0'),
                                 std::string(k - 2, '0') + "11", "101",
                                 "00" + std::string(k - 2, '1'), "01"};
  std::vector<std::string> f1 = {"1" + std::string(k - 1, '0'), std::string(k, '0'),
                                 std::string(k - 1, '0') + "1", "11"};
  return {f4, f3, f2, f1};
}

ReductionOutput pf_sp_binary(const ReductionOutput& bin) {
  if (bin.family != Family::PF || bin.stage != Stage::MspBinary)
    throw SemanticError("pf_sp_binary: input must be a PF-MSP binary output");
  size_t k = bin.instance.max_piece_len;

  std::vector<size_t> keep;  // indices of the non-forbidden strings
  for (size_t i = 0; i < bin.instance.strings.size(); ++i)
    if (bin.origins[i].type != StringOrigin::Type::Forbidden) keep.push_back(i);
  if (keep.size() > k - 6)
    throw SemanticError("pf_sp_binary: delimiter exhaustion; need " +
                        std::to_string(keep.size() - 1) + " delimiters, have " +
                        std::to_string(k - 7));

  ReductionOutput r;
  r.family = Family::PF;
  r.stage = Stage::SpBinary;
  r.source = bin.source;
  r.table = bin.table;
  r.codebook = bin.codebook;
  r.block_len = bin.block_len;
  r.parent = std::make_shared<ReductionOutput>(bin);
  Instance& inst = r.instance;
  inst.kind = CollisionKind::Prefix;
  inst.max_piece_len = k;
  inst.alphabet = Alphabet::binary();

  // Delimiters are length-K codewords; a real codeword has length t = K/2, so
  // no parameter clash is possible, but assert it anyway.
  SymStr w;
  size_t next_param = 2;
  for (size_t idx = 0; idx < keep.size(); ++idx) {
    if (idx > 0) {
      std::string d = pf_codeword(next_param++, k);
      for (const auto& [sym, bits] : bin.codebook)
        if (bits == d)
          throw SemanticError("pf_sp_binary: delimiter equals codeword of " + sym);
      r.segments.push_back({Segment::Kind::PfBinDelimiter, w.size(), d.size(),
                            static_cast<uint32_t>(idx)});
      w += bits_to_syms(d);
    }
    r.segments.push_back({Segment::Kind::SourceString, w.size(),
                          bin.instance.strings[keep[idx]].size(),
                          static_cast<uint32_t>(keep[idx])});
    w.append(bin.instance.strings[keep[idx]]);
  }
  auto parts = pf_forcing_block_parts(k);
  for (uint32_t pi = 0; pi < parts.size(); ++pi) {
    r.segments.push_back({Segment::Kind::PfForbiddenBlock, w.size(), parts[pi].size(), pi});
    w += bits_to_syms(parts[pi]);
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
