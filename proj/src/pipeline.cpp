#include "strpart/error.hpp"
#include "strpart/gadgets.hpp"

namespace strpart {

ReductionOutput run_reduction(Family family, Stage stage, const Formula3Sat3& f,
                              const ReduceOptions& opts) {
  switch (family) {
    case Family::EF: {
      ReductionOutput msp = ef_msp_from_3sat3(f);
      switch (stage) {
        case Stage::Msp: return msp;
        case Stage::Sp: return ef_sp_from_msp(msp);
        case Stage::MspBinary: return ef_binary_encode(msp, opts.block_len, opts.ef_policy);
        case Stage::SpBinary:
          return ef_sp_binary(
              ef_binary_encode(msp, opts.block_len, EfCodewordPolicy::SpChaining));
      }
      break;
    }
    case Family::FF: {
      switch (stage) {
        case Stage::Msp: return ff_msp_from_3sat3(f);
        case Stage::Sp: return ff_sp_from_msp(ff_msp_from_3sat3(f));
        case Stage::MspBinary: return ff_msp_binary_from_3sat3(f, opts.block_len);
        case Stage::SpBinary:
          return ff_sp_binary(ff_msp_binary_from_3sat3(f, opts.block_len));
      }
      break;
    }
    case Family::PF: {
      switch (stage) {
        case Stage::Msp: return pf_msp_from_3sat3(f);
        case Stage::Sp: return pf_sp_from_msp(pf_msp_from_3sat3(f));
        case Stage::MspBinary: return pf_msp_binary_from_3sat3(f, opts.block_len);
        case Stage::SpBinary:
          return pf_sp_binary(pf_msp_binary_from_3sat3(f, opts.block_len));
      }
      break;
    }
  }
  throw SemanticError("run_reduction: unsupported family/stage combination");
}

}  // namespace strpart
