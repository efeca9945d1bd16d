#include "strpart/cnf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "strpart/collide.hpp"
#include "strpart/error.hpp"

namespace strpart {

CnfDocument export_cnf(const Instance& inst) {
  inst.validate();
  CnfDocument doc;
  // var_at[(string, offset)] -> first variable for that start, one per length
  std::map<std::pair<size_t, size_t>, std::vector<int>> starts;
  for (size_t w = 0; w < inst.strings.size(); ++w) {
    size_t n = inst.strings[w].size();
    for (size_t i = 0; i < n; ++i) {
      auto& vars = starts[{w, i}];
      for (size_t l = 1; l <= std::min(inst.max_piece_len, n - i); ++l) {
        doc.vars.push_back({w, i, l});
        vars.push_back(static_cast<int>(doc.vars.size()));
      }
    }
  }

  auto at_most_one = [&](const std::vector<int>& vars, int guard) {
    for (size_t a = 0; a < vars.size(); ++a)
      for (size_t b = a + 1; b < vars.size(); ++b) {
        std::vector<int> cl;
        if (guard) cl.push_back(-guard);
        cl.push_back(-vars[a]);
        cl.push_back(-vars[b]);
        doc.clauses.push_back(std::move(cl));
      }
  };

  for (size_t w = 0; w < inst.strings.size(); ++w) {
    size_t n = inst.strings[w].size();
    // exactly one piece starts the string
    doc.clauses.push_back(starts[{w, 0}]);
    at_most_one(starts[{w, 0}], 0);
    for (size_t i = 0; i < n; ++i) {
      for (int v : starts[{w, i}]) {
        size_t l = doc.vars[v - 1].len;
        if (i + l < n) {
          // selected piece implies exactly one successor at its end
          std::vector<int> cl{-v};
          for (int s : starts[{w, i + l}]) cl.push_back(s);
          doc.clauses.push_back(std::move(cl));
          at_most_one(starts[{w, i + l}], v);
        }
        if (i > 0) {
          // selected piece implies some piece ends right before it
          std::vector<int> cl{-v};
          for (size_t pl = 1; pl <= std::min(inst.max_piece_len, i); ++pl) {
            for (int pv : starts[{w, i - pl}])
              if (doc.vars[pv - 1].len == pl) cl.push_back(pv);
          }
          doc.clauses.push_back(std::move(cl));
        }
      }
    }
  }

  // pairwise mutual exclusion between colliding occurrences
  for (size_t a = 0; a < doc.vars.size(); ++a) {
    SymStr ta = piece_text(inst, doc.vars[a]);
    for (size_t b = a + 1; b < doc.vars.size(); ++b) {
      SymStr tb = piece_text(inst, doc.vars[b]);
      if (collides(inst.kind, ta, tb))
        doc.clauses.push_back({-static_cast<int>(a + 1), -static_cast<int>(b + 1)});
    }
  }
  return doc;
}

std::string render_dimacs(const CnfDocument& doc) {
  std::ostringstream out;
  out << "c piece variables: c <var> = string <w> offset <i> len <l>\n";
  for (size_t v = 0; v < doc.vars.size(); ++v) {
    out << "c " << (v + 1) << " = string " << doc.vars[v].string_index << " offset "
        << doc.vars[v].begin << " len " << doc.vars[v].len << "\n";
  }
  out << "p cnf " << doc.vars.size() << " " << doc.clauses.size() << "\n";
  for (const auto& cl : doc.clauses) {
    for (int lit : cl) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

Partition partition_from_model(const Instance& inst, const CnfDocument& doc,
                               const std::vector<bool>& model) {
  if (model.size() != doc.vars.size())
    throw SemanticError("cnf model: wrong number of variables");
  std::vector<std::vector<size_t>> ends(inst.strings.size());
  for (size_t v = 0; v < doc.vars.size(); ++v) {
    if (!model[v]) continue;
    const PieceRef& ref = doc.vars[v];
    size_t end = ref.begin + ref.len;
    if (end < inst.strings[ref.string_index].size())
      ends[ref.string_index].push_back(end);
  }
  Partition p;
  p.cuts = std::move(ends);
  for (auto& cuts : p.cuts) std::sort(cuts.begin(), cuts.end());
  return p;
}

}  // namespace strpart
