#pragma once

#include <cstdint>

#include "padc/pipeline.hpp"

namespace padc {

// Independent ground-truth references. Nothing here calls into the stage or
// pipeline code paths; the conversions are re-derived from the parameter
// semantics as plain sequential arithmetic so comparisons against the engine
// are meaningful.

struct IdealQuantizerSpec {
  int bits = 8;
  ReferencePair refs{};

  double lsb() const { return refs.full_scale() / (1 << bits); }
};

// Closed-form ideal transfer: clamp(floor((vin - vrefn)/lsb), 0, 2^N - 1).
// Exact multiples of the LSB take the higher code, matching the comparator's
// tie rule.
int ideal_quantize(double vin, const IdealQuantizerSpec& spec);

// Stage-by-stage conversion written as a plain loop with no pipeline
// machinery. With the per-(sample, stage) noise addressing this equals
// convert_sample / run_stream for every input.
int brute_force_convert(double vin, const AdcConfig& cfg,
                        const NoiseSource& noise,
                        std::uint64_t sample_index = 0);

}  // namespace padc
