#pragma once

namespace padc {

// Readout geometry of the sensor front end feeding the converter column.
struct SensorGeometry {
  int rows = 64;
  int cols = 64;
  int adc_channels = 64;
  double pixel_time_s = 100e-9;

  void validate() const;  // throws std::domain_error
};

// Frame timing under the two readout disciplines: every pixel through one
// channel (serialized) versus the column channels running in parallel. Both
// are always reported; serialized = adc_channels * parallel exactly.
struct FrameBudget {
  double serialized_frame_time_s = 0.0;
  double serialized_fps = 0.0;
  double parallel_frame_time_s = 0.0;
  double parallel_fps = 0.0;
};

FrameBudget frame_budget(const SensorGeometry& geom);

// Per-channel sample rate needed for target_fps:
// (rows*cols / adc_channels) * target_fps.
double required_adc_rate(const SensorGeometry& geom, double target_fps);

// Constants of the reference converter design this simulator models; carried
// into budget reports as configured values, never computed.
struct ReferenceDesign {
  double stated_target_sps = 80e6;
  double total_power_w = 75.47e-3;
  double opamp_power_w = 10.825e-3;
  double opamp_bias_a = 2.5e-6;
};

}  // namespace padc
