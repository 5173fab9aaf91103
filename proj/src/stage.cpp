#include "padc/stage.hpp"

#include <cmath>
#include <stdexcept>

#include "padc/error_models.hpp"

namespace padc {

void ReferencePair::validate() const {
  if (!std::isfinite(vrefp) || !std::isfinite(vrefn) || !(vrefp > vrefn)) {
    throw std::domain_error("reference pair requires finite vrefp > vrefn");
  }
}

int compare(double vin, double vth, double offset) {
  if (!std::isfinite(vin) || !std::isfinite(vth) || !std::isfinite(offset)) {
    throw std::domain_error("compare: inputs must be finite");
  }
  return (vin - offset) >= vth ? 1 : 0;
}

double residue_ideal(double vin, int bit, const ReferencePair& refs) {
  if (bit != 0 && bit != 1) {
    throw std::domain_error("residue_ideal: bit must be 0 or 1");
  }
  return 2.0 * vin - (bit ? refs.vrefp : refs.vrefn);
}

StageDecision stage_transfer(double vin, const StageParams& params,
                             const ReferencePair& refs, double settle_time_s,
                             double noise_unit) {
  const int bit = compare(vin, refs.threshold(), params.offset_v);
  const double residue =
      residue_with_errors(vin, bit, params, refs, settle_time_s, noise_unit);
  return StageDecision{bit, residue};
}

}  // namespace padc
