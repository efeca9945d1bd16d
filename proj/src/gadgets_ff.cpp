#include <array>

#include "gadgets_detail.hpp"
#include "strpart/gadgets.hpp"

namespace strpart {

ReductionOutput ff_msp_from_3sat3(const Formula3Sat3& f) {
  detail::require_valid(f);
  ReductionOutput r;
  r.family = Family::FF;
  r.stage = Stage::Msp;
  r.source = f;
  Instance& inst = r.instance;
  inst.kind = CollisionKind::Factor;
  inst.max_piece_len = 3;

  auto lit_syms = detail::intern_literal_letters(f, inst, r.table);
  std::vector<std::array<Sym, 3>> var_syms(f.n_vars);
  for (uint32_t v = 0; v < f.n_vars; ++v)
    for (uint32_t k = 1; k <= 3; ++k) {
      std::string name = detail::var_symbol(v, k);
      var_syms[v][k - 1] = inst.alphabet.intern(name);
      r.table.roles[detail::var_role(v, k)] = name;
    }
  Sym zero = inst.alphabet.intern("0");
  Sym one = inst.alphabet.intern("1");
  r.table.roles["const:0"] = "0";
  r.table.roles["const:1"] = "1";

  // Forbidden per variable: x_v^3 0 x_v^3 (whole-string selection is forced).
  for (uint32_t v = 0; v < f.n_vars; ++v) {
    Sym x3 = var_syms[v][2];
    inst.strings.push_back({x3, zero, x3});
    r.origins.push_back({StringOrigin::Type::Forbidden, v, 0});
  }

  // Clause strings: doubled literal letters joined by 0.
  for (uint32_t i = 0; i < f.clauses.size(); ++i) {
    SymStr w;
    for (uint32_t j = 0; j < f.clauses[i].size(); ++j) {
      if (j) w.push_back(zero);
      r.markers.push_back({i, j, {inst.strings.size(), w.size(), 2}});
      w.push_back(lit_syms[i][j]);
      w.push_back(lit_syms[i][j]);
    }
    inst.strings.push_back(std::move(w));
    r.origins.push_back({StringOrigin::Type::Clause, i, 0});
  }

  // Three enforcers per variable, lengths 6, 13 and 13.
  auto occs = detail::occurrences_of(f);
  for (uint32_t v = 0; v < f.n_vars; ++v) {
    const auto& occ = occs[v];
    Sym cp = lit_syms[occ.pos_first.first][occ.pos_first.second];
    Sym cq = lit_syms[occ.pos_second.first][occ.pos_second.second];
    Sym cr = lit_syms[occ.negated.first][occ.negated.second];
    Sym x1 = var_syms[v][0], x2 = var_syms[v][1], x3 = var_syms[v][2];
    inst.strings.push_back({x1, x2, one, cr, cr, one});
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 0});
    inst.strings.push_back({one, cp, cp, one, x3, x3, zero, x3, x3, one, x1, x2, zero});
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 1});
    inst.strings.push_back({zero, x1, x2, one, x3, x3, zero, x3, x3, one, cq, cq, one});
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 2});
  }
  inst.validate();
  return r;
}

ReductionOutput ff_sp_from_msp(const ReductionOutput& msp, std::optional<size_t> joiner_budget) {
  if ((msp.family != Family::FF && msp.family != Family::PF) || msp.stage != Stage::Msp)
    throw SemanticError("sp_from_msp connectors: input must be an FF or PF MSP output");
  size_t n = msp.instance.strings.size();
  if (joiner_budget && n > 0 && n - 1 > *joiner_budget)
    throw SemanticError("sp_from_msp connectors: need " + std::to_string(n - 1) +
                        " joiner letters, budget is " + std::to_string(*joiner_budget));
  ReductionOutput r;
  r.family = msp.family;
  r.stage = Stage::Sp;
  r.source = msp.source;
  r.table = msp.table;
  r.parent = std::make_shared<ReductionOutput>(msp);
  Instance& inst = r.instance;
  inst.kind = msp.instance.kind;
  size_t k = msp.instance.max_piece_len;
  inst.max_piece_len = k;
  inst.alphabet = msp.instance.alphabet;

  Sym alpha = inst.alphabet.intern("alpha");
  r.table.roles["joiner:alpha"] = "alpha";
  SymStr w;
  for (size_t i = 0; i < n; ++i) {
    if (i > 0) {
      std::string name = "g_" + std::to_string(i);
      Sym gamma = inst.alphabet.intern(name);
      r.table.roles["joiner:" + std::to_string(i)] = name;
      r.segments.push_back(
          {Segment::Kind::Connector, w.size(), 3 * k, static_cast<uint32_t>(i)});
      w.push_back(alpha);
      w.append(SymStr(3 * k - 2, gamma));
      w.push_back(alpha);
    }
    r.segments.push_back({Segment::Kind::SourceString, w.size(),
                          msp.instance.strings[i].size(), static_cast<uint32_t>(i)});
    w.append(msp.instance.strings[i]);
  }
  inst.strings.push_back(std::move(w));

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

std::string ff_codeword(size_t i, size_t t) {
  if (i < 2 || i + 5 > t)
    throw SemanticError("ff_codeword: need 2 <= i <= t-5");
  return "0" + std::string(i, '1') + "0" + std::string(t - 3 - i, '1') + "0";
}

ReductionOutput ff_msp_binary_from_3sat3(const Formula3Sat3& f, std::optional<size_t> t_in) {
  detail::require_valid(f);
  size_t m = f.clauses.size();
  size_t n = f.n_vars;
  size_t t_min = 3 * m + 2 * n + 6;
  size_t t = t_in.value_or(t_min);
  if (t < t_min)
    throw SemanticError("ff_msp_binary: need t >= 3m+2n+6 = " + std::to_string(t_min) +
                        ", got " + std::to_string(t));

  ReductionOutput r;
  r.family = Family::FF;
  r.stage = Stage::MspBinary;
  r.source = f;
  r.block_len = t;
  Instance& inst = r.instance;
  inst.kind = CollisionKind::Factor;
  inst.max_piece_len = 2 * t + 1;
  inst.alphabet = Alphabet::binary();

  // codeword parameters i = 2, 3, ... assigned to literal letters in
  // (clause, position) order, then variable letters in (variable, superscript)
  // order; only x_v^1 and x_v^2 survive in the simplified enforcers
  size_t next = 2;
  std::vector<std::vector<std::string>> lit_bits(m);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < f.clauses[i].size(); ++j) {
      std::string cw = ff_codeword(next++, t);
      lit_bits[i].push_back(cw);
      r.table.roles[detail::lit_role(i, j)] = detail::lit_symbol(i, j);
      r.codebook[detail::lit_symbol(i, j)] = cw;
    }
  std::vector<std::array<std::string, 2>> var_bits(n);
  for (uint32_t v = 0; v < n; ++v)
    for (uint32_t k = 1; k <= 2; ++k) {
      std::string cw = ff_codeword(next++, t);
      var_bits[v][k - 1] = cw;
      r.table.roles[detail::var_role(v, k)] = detail::var_symbol(v, k);
      r.codebook[detail::var_symbol(v, k)] = cw;
    }
  r.codebook["0"] = "0";
  r.codebook["1"] = "1";

  inst.strings.push_back(bits_to_syms("000"));
  r.origins.push_back({StringOrigin::Type::Forbidden, 0, 0});
  inst.strings.push_back(bits_to_syms("010"));
  r.origins.push_back({StringOrigin::Type::Forbidden, 1, 0});

  for (uint32_t i = 0; i < m; ++i) {
    SymStr w;
    for (uint32_t j = 0; j < f.clauses[i].size(); ++j) {
      if (j) w += bits_to_syms("0");
      r.markers.push_back({i, j, {inst.strings.size(), w.size(), 2 * t}});
      w += bits_to_syms(lit_bits[i][j]);
      w += bits_to_syms(lit_bits[i][j]);
    }
    inst.strings.push_back(std::move(w));
    r.origins.push_back({StringOrigin::Type::Clause, i, 0});
  }

  // simplified enforcers: x1 x2 1 cr cr 1,  1 cp cp 1 x1 x2 0,  0 x1 x2 1 cq cq 1
  auto occs = detail::occurrences_of(f);
  for (uint32_t v = 0; v < n; ++v) {
    const auto& occ = occs[v];
    const std::string& cp = lit_bits[occ.pos_first.first][occ.pos_first.second];
    const std::string& cq = lit_bits[occ.pos_second.first][occ.pos_second.second];
    const std::string& cr = lit_bits[occ.negated.first][occ.negated.second];
    const std::string& x1 = var_bits[v][0];
    const std::string& x2 = var_bits[v][1];
    inst.strings.push_back(bits_to_syms(x1 + x2 + "1" + cr + cr + "1"));
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 0});
    inst.strings.push_back(bits_to_syms("1" + cp + cp + "1" + x1 + x2 + "0"));
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 1});
    inst.strings.push_back(bits_to_syms("0" + x1 + x2 + "1" + cq + cq + "1"));
    r.origins.push_back({StringOrigin::Type::Enforcer, v, 2});
  }
  inst.validate();
  return r;
}

std::string ff_chain_delimiter(size_t i, size_t k) {
  if (i + 1 > k) throw SemanticError("ff_chain_delimiter: need i <= K-1");
  return std::string(i, '1') + "0" + std::string(k - 1 - i, '1');
}

ReductionOutput ff_sp_binary(const ReductionOutput& bin) {
  if (bin.family != Family::FF || bin.stage != Stage::MspBinary)
    throw SemanticError("ff_sp_binary: input must be an FF-MSP binary output");
  size_t k = bin.instance.max_piece_len;
  size_t n = bin.instance.strings.size();
  if (n > k / 2)
    throw SemanticError("ff_sp_binary: need N <= K/2; N=" + std::to_string(n) +
                        ", K=" + std::to_string(k));

  ReductionOutput r;
  r.family = Family::FF;
  r.stage = Stage::SpBinary;
  r.source = bin.source;
  r.table = bin.table;
  r.codebook = bin.codebook;
  r.block_len = bin.block_len;
  r.parent = std::make_shared<ReductionOutput>(bin);
  Instance& inst = r.instance;
  inst.kind = CollisionKind::Factor;
  inst.max_piece_len = k;
  inst.alphabet = Alphabet::binary();

  SymStr w;
  for (size_t i = 0; i < n; ++i) {
    if (i == 1) {
      // first joiner: d_0 1^K d_0^mirror
      std::string d0 = ff_chain_delimiter(0, k);
      std::string joiner = d0 + std::string(k, '1') + std::string(d0.rbegin(), d0.rend());
      r.segments.push_back({Segment::Kind::FfBinFirstJoiner, w.size(), joiner.size(), 0});
      w += bits_to_syms(joiner);
    } else if (i > 1) {
      std::string d = ff_chain_delimiter(i - 1, k);
      std::string joiner = d + std::string(d.rbegin(), d.rend());
      r.segments.push_back({Segment::Kind::FfBinJoiner, w.size(), joiner.size(),
                            static_cast<uint32_t>(i - 1)});
      w += bits_to_syms(joiner);
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
