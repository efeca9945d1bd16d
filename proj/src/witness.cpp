#include <algorithm>
#include <set>

#include "gadgets_detail.hpp"
#include "strpart/gadgets.hpp"

namespace strpart {

namespace {

// Index of the clause's selected literal: the first true one in clause order.
uint32_t selected_literal(const Formula3Sat3& f, const Assignment& a, uint32_t clause) {
  const auto& cl = f.clauses[clause];
  for (uint32_t j = 0; j < cl.size(); ++j)
    if (a.values[cl[j].var] != cl[j].negated) return j;
  throw SemanticError("witness: clause " + std::to_string(clause + 1) +
                      " is not satisfied by the assignment");
}

// Clause strings of the shape c1 SEP c2 (SEP c3) shared by EF and PF: the
// selected letter stands alone, every separator pairs with the other side.
std::vector<size_t> separator_clause_cuts(size_t n_lits, uint32_t selected) {
  if (n_lits == 2) return selected == 0 ? std::vector<size_t>{1} : std::vector<size_t>{2};
  switch (selected) {
    case 0: return {1, 3};
    case 1: return {2, 3};
    default: return {2, 4};
  }
}

// Doubled-letter clause strings c1 c1 0 c2 c2 (0 c3 c3) of the FF family.
std::vector<size_t> doubled_clause_cuts(size_t n_lits, uint32_t selected) {
  if (n_lits == 2) return selected == 0 ? std::vector<size_t>{2} : std::vector<size_t>{3};
  switch (selected) {
    case 0: return {2, 5};
    case 1: return {3, 5};
    default: return {3, 6};
  }
}

std::vector<size_t> bit_cuts(const std::vector<size_t>& letter_cuts,
                             const std::vector<size_t>& widths) {
  std::vector<size_t> offsets(widths.size() + 1, 0);
  for (size_t i = 0; i < widths.size(); ++i) offsets[i + 1] = offsets[i] + widths[i];
  std::vector<size_t> out;
  for (size_t c : letter_cuts) out.push_back(offsets[c]);
  return out;
}

// EF enforcer c_p + c_r x c_r x c_r + c_q.  When the variable is true the
// negated letter stands alone (last row of the enforcer partitions); when it
// is false both positive letters do (fifth row).
std::vector<size_t> ef_enforcer_cuts(bool var_true) {
  return var_true ? std::vector<size_t>{2, 4, 5, 7} : std::vector<size_t>{1, 3, 5, 6, 8};
}

// FF enforcer rows, unbounded alphabet (strings of lengths 6, 13, 13).
std::vector<size_t> ff_enforcer_cuts(uint32_t sub, bool var_true) {
  switch (sub) {
    case 0: return var_true ? std::vector<size_t>{3} : std::vector<size_t>{2, 4};
    case 1: return var_true ? std::vector<size_t>{2, 4, 7, 10} : std::vector<size_t>{3, 6, 9, 11};
    default: return var_true ? std::vector<size_t>{3, 6, 9, 11} : std::vector<size_t>{2, 4, 7, 10};
  }
}

// FF enforcer rows for the simplified binary strings, in letters.
std::vector<size_t> ff_bin_enforcer_letter_cuts(uint32_t sub, bool var_true) {
  switch (sub) {
    case 0: return var_true ? std::vector<size_t>{3} : std::vector<size_t>{2, 4};
    case 1: return var_true ? std::vector<size_t>{2, 4} : std::vector<size_t>{3, 5};
    default: return var_true ? std::vector<size_t>{3, 5} : std::vector<size_t>{2, 4};
  }
}

// PF enforcer x. c c x.: pair up when true, isolate the literal pair when false.
std::vector<size_t> pf_enforcer_cuts(bool var_true) {
  return var_true ? std::vector<size_t>{2} : std::vector<size_t>{1, 3};
}

std::vector<size_t> ff_bin_letter_widths(const ReductionOutput& r, size_t string_idx) {
  size_t t = r.block_len;
  const StringOrigin& o = r.origins[string_idx];
  switch (o.type) {
    case StringOrigin::Type::Clause: {
      size_t n_lits = r.source.clauses[o.index].size();
      std::vector<size_t> w;
      for (size_t j = 0; j < n_lits; ++j) {
        if (j) w.push_back(1);
        w.push_back(t);
        w.push_back(t);
      }
      return w;
    }
    case StringOrigin::Type::Enforcer:
      if (o.sub == 0) return {t, t, 1, t, t, 1};
      return {1, t, t, 1, t, t, 1};
    default:
      return {};
  }
}

std::vector<size_t> pf_bin_letter_widths(const ReductionOutput& r, size_t string_idx) {
  size_t t = r.block_len;
  const StringOrigin& o = r.origins[string_idx];
  switch (o.type) {
    case StringOrigin::Type::Clause: {
      std::vector<size_t> w;
      for (size_t j = 0; j < r.source.clauses[o.index].size(); ++j) {
        if (j) w.push_back(1);
        w.push_back(t);
      }
      return w;
    }
    case StringOrigin::Type::Enforcer:
      return {t, t, t, t};
    default:
      return {};
  }
}

Partition witness_msp(const ReductionOutput& r, const Assignment& a) {
  Partition p;
  p.cuts.resize(r.instance.strings.size());
  for (size_t s = 0; s < r.instance.strings.size(); ++s) {
    const StringOrigin& o = r.origins[s];
    if (o.type == StringOrigin::Type::Forbidden ||
        o.type == StringOrigin::Type::CodePrefix)
      continue;  // selected whole
    if (o.type == StringOrigin::Type::Clause) {
      size_t n_lits = r.source.clauses[o.index].size();
      uint32_t sel = selected_literal(r.source, a, o.index);
      std::vector<size_t> letter_cuts;
      switch (r.family) {
        case Family::EF:
        case Family::PF:
          letter_cuts = separator_clause_cuts(n_lits, sel);
          break;
        case Family::FF:
          letter_cuts = doubled_clause_cuts(n_lits, sel);
          break;
      }
      if (r.stage == Stage::MspBinary) {
        auto widths = r.family == Family::FF ? ff_bin_letter_widths(r, s)
                                             : pf_bin_letter_widths(r, s);
        p.cuts[s] = bit_cuts(letter_cuts, widths);
      } else {
        p.cuts[s] = letter_cuts;
      }
      continue;
    }
    // enforcer
    bool var_true = a.values[o.index];
    switch (r.family) {
      case Family::EF:
        p.cuts[s] = ef_enforcer_cuts(var_true);
        break;
      case Family::FF:
        if (r.stage == Stage::MspBinary)
          p.cuts[s] = bit_cuts(ff_bin_enforcer_letter_cuts(o.sub, var_true),
                               ff_bin_letter_widths(r, s));
        else
          p.cuts[s] = ff_enforcer_cuts(o.sub, var_true);
        break;
      case Family::PF:
        if (r.stage == Stage::MspBinary)
          p.cuts[s] = bit_cuts(pf_enforcer_cuts(var_true), pf_bin_letter_widths(r, s));
        else
          p.cuts[s] = pf_enforcer_cuts(var_true);
        break;
    }
  }
  return p;
}

// The binary EF stage carries the unbounded witness through the codeword map:
// cuts scale by delta, codeword-prefix strings stay whole.
Partition witness_ef_binary(const ReductionOutput& r, const Assignment& a) {
  Partition parent = witness_msp(*r.parent, a);
  Partition p;
  p.cuts.resize(r.instance.strings.size());
  for (size_t s = 0; s < r.instance.strings.size(); ++s) {
    if (r.origins[s].type == StringOrigin::Type::CodePrefix) continue;
    for (size_t c : parent.cuts[s]) p.cuts[s].push_back(c * r.block_len);
  }
  return p;
}

Partition witness_sp(const ReductionOutput& r, const Partition& parent_partition) {
  size_t k = r.instance.max_piece_len;
  std::vector<size_t> cuts;
  auto push_pieces = [&](size_t begin, const std::vector<std::string>& pieces) {
    size_t at = begin;
    for (size_t i = 0; i + 1 < pieces.size(); ++i) {
      at += pieces[i].size();
      cuts.push_back(at);
    }
  };
  for (const Segment& seg : r.segments) {
    if (seg.begin > 0) cuts.push_back(seg.begin);
    switch (seg.kind) {
      case Segment::Kind::SourceString:
        for (size_t c : parent_partition.cuts[seg.index]) cuts.push_back(seg.begin + c);
        break;
      case Segment::Kind::EfPrefix:  // bdot | bdot bdot | bdot bminus
        cuts.push_back(seg.begin + 1);
        cuts.push_back(seg.begin + 3);
        break;
      case Segment::Kind::EfJoiner:  // d bdot | bdot d
        cuts.push_back(seg.begin + 2);
        break;
      case Segment::Kind::EfBinDelimiter:
        push_pieces(seg.begin, delimiter_witness_pieces(seg.index, k));
        break;
      case Segment::Kind::Connector:        // alpha g^{K-1} | g^K | g^{K-1} alpha
      case Segment::Kind::FfBinFirstJoiner:  // d0 | 1^K | d0^mirror
        cuts.push_back(seg.begin + k);
        cuts.push_back(seg.begin + 2 * k);
        break;
      case Segment::Kind::FfBinJoiner:  // d_i | d_i^mirror
        cuts.push_back(seg.begin + k);
        break;
      case Segment::Kind::PfBinDelimiter:  // selected whole
        break;
      case Segment::Kind::PfForbiddenBlock:
        push_pieces(seg.begin, pf_forcing_block_pieces(k)[seg.index]);
        break;
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Partition p;
  p.cuts.push_back(std::move(cuts));
  return p;
}

}  // namespace

Partition witness_from_assignment(const ReductionOutput& r, const Assignment& a) {
  if (a.values.size() != r.source.n_vars)
    throw SemanticError("witness: assignment has wrong variable count");
  for (uint32_t i = 0; i < r.source.clauses.size(); ++i)
    selected_literal(r.source, a, i);  // throws naming the failing clause

  switch (r.stage) {
    case Stage::Msp:
      return witness_msp(r, a);
    case Stage::MspBinary:
      return r.family == Family::EF ? witness_ef_binary(r, a) : witness_msp(r, a);
    case Stage::Sp:
    case Stage::SpBinary:
      return witness_sp(r, witness_from_assignment(*r.parent, a));
  }
  throw SemanticError("witness: unsupported stage");
}

Assignment assignment_from_partition(const ReductionOutput& r, const Partition& p) {
  auto report = verify_partition(r.instance, p);
  if (!report.valid)
    throw SemanticError("assignment_from_partition: the partition is not valid");

  std::vector<std::set<size_t>> cut_sets(p.cuts.size());
  for (size_t s = 0; s < p.cuts.size(); ++s)
    cut_sets[s].insert(p.cuts[s].begin(), p.cuts[s].end());
  auto is_cut = [&](size_t s, size_t pos) {
    return pos == 0 || pos == r.instance.strings[s].size() || cut_sets[s].count(pos) > 0;
  };

  std::vector<std::optional<bool>> forced(r.source.n_vars);
  for (const LiteralMarker& m : r.markers) {
    size_t s = m.span.string_index;
    size_t begin = m.span.begin, end = m.span.begin + m.span.len;
    if (!is_cut(s, begin) || !is_cut(s, end)) continue;  // not super-selected
    if (r.family != Family::FF) {
      // EF/PF selection means the span is exactly one piece
      auto inner = cut_sets[s].lower_bound(begin + 1);
      if (inner != cut_sets[s].end() && *inner < end) continue;
    }
    const Lit& lit = r.source.clauses[m.clause][m.lit];
    bool want = !lit.negated;
    if (forced[lit.var] && *forced[lit.var] != want)
      throw SemanticError(
          "assignment_from_partition: inconsistent selected literals for variable " +
          std::to_string(lit.var + 1) + " (reduction bug)");
    forced[lit.var] = want;
  }

  Assignment a;
  a.values.resize(r.source.n_vars, false);
  for (uint32_t v = 0; v < r.source.n_vars; ++v)
    if (forced[v]) a.values[v] = *forced[v];
  if (!satisfies(r.source, a))
    throw SemanticError(
        "assignment_from_partition: extracted assignment does not satisfy the formula");
  return a;
}

}  // namespace strpart
