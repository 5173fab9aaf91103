#include "padc/camera_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace padc {

void SensorGeometry::validate() const {
  if (rows <= 0 || cols <= 0 || adc_channels <= 0) {
    throw std::domain_error("sensor geometry fields must be positive");
  }
  if (adc_channels > cols) {
    throw std::domain_error("adc_channels must not exceed cols");
  }
  if (!(pixel_time_s > 0.0) || !std::isfinite(pixel_time_s)) {
    throw std::domain_error("pixel_time_s must be finite and > 0");
  }
}

FrameBudget frame_budget(const SensorGeometry& geom) {
  geom.validate();
  const double total_pixels =
      static_cast<double>(geom.rows) * static_cast<double>(geom.cols);
  FrameBudget b;
  // Parallel first; the serialized figure is defined as channels * parallel
  // so the pair stays exactly consistent.
  b.parallel_frame_time_s =
      total_pixels / static_cast<double>(geom.adc_channels) * geom.pixel_time_s;
  b.serialized_frame_time_s =
      b.parallel_frame_time_s * static_cast<double>(geom.adc_channels);
  b.parallel_fps = 1.0 / b.parallel_frame_time_s;
  b.serialized_fps = 1.0 / b.serialized_frame_time_s;
  return b;
}

double required_adc_rate(const SensorGeometry& geom, double target_fps) {
  geom.validate();
  if (!(target_fps > 0.0) || !std::isfinite(target_fps)) {
    throw std::domain_error("target_fps must be finite and > 0");
  }
  const double total_pixels =
      static_cast<double>(geom.rows) * static_cast<double>(geom.cols);
  return total_pixels / static_cast<double>(geom.adc_channels) * target_fps;
}

}  // namespace padc
