#pragma once

#include "padc/stage.hpp"

namespace padc {

constexpr double kBoltzmann = 1.380649e-23;  // J/K
constexpr double kRoomTempK = 300.0;

// Feedback factor C2/(C1+C2) of the equal-capacitor residue amplifier; the
// settling model keeps it fixed at 1/2 (parasitic input capacitance ignored).
constexpr double kFeedbackFactor = 0.5;

// Output swing limits of the residue amplifier.
struct Rails {
  double hi = kInf;
  double lo = -kInf;

  void validate() const;  // hi > lo
};

// Per-stage non-ideality set. Every default is the neutral element, so a
// default-constructed stage is exact.
struct StageParams {
  double offset_v = 0.0;             // comparator input-referred offset
  double open_loop_gain_db = kInf;   // op-amp open-loop gain
  double cap_mismatch = 0.0;         // delta where C1/C2 = 1 + delta
  double gbw_hz = kInf;              // gain-bandwidth product
  double load_cap_f = 0.1e-12;       // sampling/load capacitor
  double noise_sigma_v = 0.0;        // residue noise sigma (ignored if auto kT/C)
  bool noise_auto_ktc = false;       // derive sigma from load_cap_f at 300 K
  double rail_pos_v = kInf;
  double rail_neg_v = -kInf;

  // Effective residue-noise sigma: explicit value, or sqrt(kT/C) of the load
  // capacitor at room temperature when noise_auto_ktc is set.
  double resolved_noise_sigma() const;

  bool is_neutral() const;

  // throws std::invalid_argument with `field_prefix` + field name
  void validate(const char* field_prefix = "") const;
};

// Closed-loop gain of the switched-capacitor amplifier:
//   G = (1 + c1/c2) / (1 + (1 + c1/c2)/A),  A = 10^(dB/20).
// Tends to the ideal 1 + c1/c2 as A grows.
double closed_loop_gain(double open_loop_gain_db, double c1_over_c2);

// Multiplicative gain-error term of the same loop, G / (1 + c1/c2) =
// 1 / (1 + (1 + c1/c2)/A). This is what scales the residue: the nominal
// interstage gain already lives in the capacitor-ratio map below.
double finite_gain_error(double open_loop_gain_db, double c1_over_c2);

// Fraction of the final value reached after settle_time_s of single-pole
// settling, 1 - exp(-t/tau) with tau = 1/(2*pi*beta*gbw).
double settling_factor(double gbw_hz, double feedback_factor,
                       double settle_time_s);

// Thermal noise sigma sampled onto a capacitor: sqrt(kT/C).
double ktc_noise_sigma(double cap_f, double temp_k);

// Clamp to the amplifier rails.
double saturate(double v, const Rails& rails);

// Residue map with capacitor mismatch C1/C2 = 1 + delta:
//   V_out = (1 + (1+delta))*vin - (1+delta)*vref(bit).
// Reduces exactly to residue_ideal at delta = 0.
double residue_mismatch(double vin, int bit, const ReferencePair& refs,
                        double delta);

// The residue path of stage_transfer for an already-decided bit: mismatch map,
// finite-gain and settling scaling, noise, rail clamp -- in that order.
double residue_with_errors(double vin, int bit, const StageParams& params,
                           const ReferencePair& refs, double settle_time_s,
                           double noise_unit);

}  // namespace padc
