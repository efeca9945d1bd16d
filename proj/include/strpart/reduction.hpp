#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strpart/instance.hpp"
#include "strpart/partition.hpp"
#include "strpart/sat3.hpp"

namespace strpart {

enum class Family { EF, FF, PF };
enum class Stage { Msp, Sp, MspBinary, SpBinary };

const char* family_name(Family f);
const char* stage_name(Stage s);
Family family_from_name(const std::string& name);
Stage stage_from_name(const std::string& name);

// Maps gadget roles to symbol names.  Role keys:
//   lit:<clause>:<pos>  literal letter (1-based)
//   var:<v>             variable letter (EF)
//   var:<v>:<k>         variable letters (FF k=1..3, PF k=1..4)
//   sep:bminus|bplus|bdot|dollar
//   const:0|1           the plain letters of the FF construction
//   joiner:alpha, joiner:<i>   fresh single-string joiner letters
struct SymbolTable {
  std::map<std::string, std::string> roles;

  const std::string& require(const std::string& role) const;
};

// The piece span whose selection means "literal <lit> of clause <clause> is
// selected"; selection is checked by cut points at both span boundaries.
struct LiteralMarker {
  uint32_t clause = 0;  // 0-based
  uint32_t lit = 0;     // 0-based position within the clause
  PieceRef span;
};

// What each string of a multi-string stage encodes.
struct StringOrigin {
  enum class Type { Forbidden, Clause, Enforcer, CodePrefix };
  Type type = Type::Forbidden;
  uint32_t index = 0;  // clause / variable / ordinal
  uint32_t sub = 0;    // enforcer slot within the variable
};

// Layout of the single string of an SP stage.
struct Segment {
  enum class Kind {
    SourceString,     // one string of the parent stage; index = parent string
    EfPrefix,         // the five-letter bdot prefix
    EfJoiner,         // d_i bdot bdot d_i
    EfBinDelimiter,   // chain-of-padded-strings delimiter d_<index>
    Connector,        // alpha gamma^{3K-2} alpha
    FfBinFirstJoiner, // d_0 1^K d_0^mirror
    FfBinJoiner,      // d_i d_i^mirror
    PfBinDelimiter,   // one length-K delimiter codeword
    PfForbiddenBlock, // F = F4 F3 F2 F1
  };
  Kind kind = Kind::SourceString;
  size_t begin = 0;
  size_t len = 0;
  uint32_t index = 0;
};

// Everything produced by one reduction stage: the instance itself plus the
// metadata needed to build witness partitions and read assignments back out.
struct ReductionOutput {
  Family family = Family::EF;
  Stage stage = Stage::Msp;
  Instance instance;
  SymbolTable table;
  Formula3Sat3 source;
  std::vector<LiteralMarker> markers;
  std::vector<StringOrigin> origins;            // one per string (MSP stages)
  std::map<std::string, std::string> codebook;  // symbol name -> bits (binary stages)
  size_t block_len = 0;                         // delta (EF) or t (FF/PF)
  std::shared_ptr<const ReductionOutput> parent;  // stage this one was built from
  std::vector<Segment> segments;                // SP stages only
};

}  // namespace strpart
