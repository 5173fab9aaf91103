#include "padc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace padc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kKb = 1.380649e-23;
}  // namespace

int ideal_quantize(double vin, const IdealQuantizerSpec& spec) {
  const double lsb = spec.lsb();
  const double k = std::floor((vin - spec.refs.vrefn) / lsb);
  const int top = (1 << spec.bits) - 1;
  if (!(k > 0.0)) return 0;
  if (k > static_cast<double>(top)) return top;
  return static_cast<int>(k);
}

int brute_force_convert(double vin, const AdcConfig& cfg,
                        const NoiseSource& noise, std::uint64_t sample_index) {
  if (!std::isfinite(vin)) {
    throw std::domain_error("brute_force_convert: vin must be finite");
  }
  const double vth = 0.5 * (cfg.refs.vrefp + cfg.refs.vrefn);
  const double settle_time = 0.5 / cfg.clock_hz;

  double v = vin;
  int code = 0;
  for (int i = 0; i < cfg.resolution; ++i) {
    const StageParams& p = cfg.stages[static_cast<std::size_t>(i)];
    const int bit = (v - p.offset_v) >= vth ? 1 : 0;
    code = (code << 1) | bit;
    if (i + 1 == cfg.resolution) break;

    const double ratio = 1.0 + p.cap_mismatch;
    double r = (1.0 + ratio) * v - ratio * (bit ? cfg.refs.vrefp : cfg.refs.vrefn);

    if (!std::isinf(p.open_loop_gain_db)) {
      const double a = std::pow(10.0, p.open_loop_gain_db / 20.0);
      r *= 1.0 / (1.0 + (1.0 + ratio) / a);
    }
    if (!std::isinf(p.gbw_hz)) {
      const double tau = 1.0 / (kTwoPi * 0.5 * p.gbw_hz);
      r *= 1.0 - std::exp(-settle_time / tau);
    }
    const double sigma =
        p.noise_auto_ktc ? std::sqrt(kKb * 300.0 / p.load_cap_f) : p.noise_sigma_v;
    if (sigma > 0.0) {
      r += sigma * noise.unit_normal(sample_index, static_cast<std::uint64_t>(i));
    }
    v = std::clamp(r, p.rail_neg_v, p.rail_pos_v);
  }
  return code;
}

}  // namespace padc
