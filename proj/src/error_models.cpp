#include "padc/error_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace padc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void Rails::validate() const {
  if (std::isnan(hi) || std::isnan(lo) || !(hi > lo)) {
    throw std::domain_error("rails require hi > lo");
  }
}

double StageParams::resolved_noise_sigma() const {
  if (noise_auto_ktc) return ktc_noise_sigma(load_cap_f, kRoomTempK);
  return noise_sigma_v;
}

bool StageParams::is_neutral() const {
  return offset_v == 0.0 && std::isinf(open_loop_gain_db) &&
         cap_mismatch == 0.0 && std::isinf(gbw_hz) &&
         resolved_noise_sigma() == 0.0 && std::isinf(rail_pos_v) &&
         std::isinf(rail_neg_v);
}

void StageParams::validate(const char* field_prefix) const {
  const std::string p = field_prefix;
  auto fail = [&p](const char* field, const char* what) {
    throw std::invalid_argument(p + field + " " + what);
  };
  if (std::isnan(offset_v)) fail("offset_v", "must be finite");
  if (!(open_loop_gain_db > 0.0)) fail("open_loop_gain_db", "must be > 0");
  if (!(cap_mismatch > -1.0)) fail("cap_mismatch", "must be > -1");
  if (!(gbw_hz > 0.0)) fail("gbw_hz", "must be > 0");
  if (!(load_cap_f > 0.0)) fail("load_cap_f", "must be > 0");
  if (!(noise_sigma_v >= 0.0)) fail("noise_sigma_v", "must be >= 0");
  if (std::isnan(rail_pos_v) || std::isnan(rail_neg_v) ||
      !(rail_pos_v > rail_neg_v)) {
    fail("rail_pos_v/rail_neg_v", "must satisfy rail_pos_v > rail_neg_v");
  }
}

double closed_loop_gain(double open_loop_gain_db, double c1_over_c2) {
  if (!(c1_over_c2 > 0.0)) {
    throw std::domain_error("closed_loop_gain: c1_over_c2 must be > 0");
  }
  const double a = std::pow(10.0, open_loop_gain_db / 20.0);
  if (!(a > 0.0)) throw std::domain_error("closed_loop_gain: A must be > 0");
  const double ideal = 1.0 + c1_over_c2;
  if (std::isinf(a)) return ideal;
  return ideal / (1.0 + ideal / a);
}

double finite_gain_error(double open_loop_gain_db, double c1_over_c2) {
  if (!(c1_over_c2 > 0.0)) {
    throw std::domain_error("finite_gain_error: c1_over_c2 must be > 0");
  }
  const double a = std::pow(10.0, open_loop_gain_db / 20.0);
  if (!(a > 0.0)) throw std::domain_error("finite_gain_error: A must be > 0");
  if (std::isinf(a)) return 1.0;
  return 1.0 / (1.0 + (1.0 + c1_over_c2) / a);
}

double settling_factor(double gbw_hz, double feedback_factor,
                       double settle_time_s) {
  if (!(gbw_hz > 0.0)) {
    throw std::domain_error("settling_factor: gbw_hz must be > 0");
  }
  if (!(feedback_factor > 0.0) || feedback_factor > 1.0) {
    throw std::domain_error("settling_factor: feedback_factor must be in (0,1]");
  }
  if (!(settle_time_s > 0.0)) {
    throw std::domain_error("settling_factor: settle_time_s must be > 0");
  }
  if (std::isinf(settle_time_s) || std::isinf(gbw_hz)) return 1.0;
  const double tau = 1.0 / (kTwoPi * feedback_factor * gbw_hz);
  return 1.0 - std::exp(-settle_time_s / tau);
}

double ktc_noise_sigma(double cap_f, double temp_k) {
  if (!(cap_f > 0.0)) throw std::domain_error("ktc_noise_sigma: cap_f must be > 0");
  if (!(temp_k > 0.0)) throw std::domain_error("ktc_noise_sigma: temp_k must be > 0");
  return std::sqrt(kBoltzmann * temp_k / cap_f);
}

double saturate(double v, const Rails& rails) {
  rails.validate();
  return std::clamp(v, rails.lo, rails.hi);
}

double residue_mismatch(double vin, int bit, const ReferencePair& refs,
                        double delta) {
  if (!(delta > -1.0)) {
    throw std::domain_error("residue_mismatch: delta must be > -1");
  }
  if (bit != 0 && bit != 1) {
    throw std::domain_error("residue_mismatch: bit must be 0 or 1");
  }
  const double ratio = 1.0 + delta;  // C1/C2
  return (1.0 + ratio) * vin - ratio * (bit ? refs.vrefp : refs.vrefn);
}

double residue_with_errors(double vin, int bit, const StageParams& params,
                           const ReferencePair& refs, double settle_time_s,
                           double noise_unit) {
  double v = residue_mismatch(vin, bit, refs, params.cap_mismatch);
  v *= finite_gain_error(params.open_loop_gain_db, 1.0 + params.cap_mismatch);
  v *= settling_factor(params.gbw_hz, kFeedbackFactor, settle_time_s);
  const double sigma = params.resolved_noise_sigma();
  if (sigma > 0.0) v += sigma * noise_unit;
  return saturate(v, Rails{params.rail_pos_v, params.rail_neg_v});
}

}  // namespace padc
