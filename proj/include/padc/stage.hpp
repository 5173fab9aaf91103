#pragma once

#include <limits>

namespace padc {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Positive/negative reference pair of one converter stage. The comparator
// threshold sits midway between the two, and the residue map uses them as the
// subtracted reference.
struct ReferencePair {
  double vrefp = 1.0;
  double vrefn = -1.0;

  double threshold() const { return 0.5 * (vrefp + vrefn); }
  double full_scale() const { return vrefp - vrefn; }

  // throws std::domain_error unless finite and vrefp > vrefn
  void validate() const;
};

// One stage's output: the resolved bit and the residue handed to the next
// stage.
struct StageDecision {
  int bit = 0;
  double residue = 0.0;
};

// Comparator decision: 1 iff (vin - offset) >= vth. Equality resolves to 1 so
// the cascade matches a floor-with-clamp quantizer at exact transition
// voltages. Non-finite inputs throw std::domain_error.
int compare(double vin, double vth, double offset = 0.0);

// Ideal multiply-by-two residue: 2*vin - vrefp when bit = 1, 2*vin - vrefn
// when bit = 0. No clamping here; saturation is an error-model concern.
double residue_ideal(double vin, int bit, const ReferencePair& refs);

struct StageParams;

// Full behavioral stage: comparator decision plus the residue with all
// configured non-idealities applied (mismatch, finite gain, incomplete
// settling, noise, rail clamp). With neutral parameters this reduces
// bit-for-bit to (compare, residue_ideal).
//
// settle_time_s is the multiplying-phase duration (half a clock period);
// noise_unit is a standard-normal draw scaled by the stage's noise sigma.
StageDecision stage_transfer(double vin, const StageParams& params,
                             const ReferencePair& refs,
                             double settle_time_s = kInf,
                             double noise_unit = 0.0);

}  // namespace padc
