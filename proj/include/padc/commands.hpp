#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "padc/camera_budget.hpp"
#include "padc/config.hpp"

namespace padc {

inline constexpr const char* kToolName = "padc";
inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

struct CommonOptions {
  std::optional<std::string> preset;
  std::optional<std::filesystem::path> config_path;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out_dir = "out";
};

// Oracle-equivalence and ideal-linearity checks for the resolved config.
// Returns kExitOk on pass, kExitCheckFailed with a diff report on mismatch.
int cmd_verify(const CommonOptions& common, std::ostream& log);

struct LinearityOptions {
  std::size_t ramp_points = 65536;
  double overshoot_lsb = 2.0;        // ramp margin past each reference
  std::string method = "histogram";  // "histogram" | "transitions"
  bool dump_stimulus = false;
};
int cmd_linearity(const CommonOptions& common, const LinearityOptions& opt,
                  std::ostream& log);

struct SpectrumOptions {
  std::size_t nfft = 1024;
  int bin = 479;
  std::optional<double> amplitude;  // default: full scale / 2
  std::optional<double> offset;     // default: mid-scale
  bool float_passthrough = false;   // analyze the stimulus, skip conversion
  bool dump_stimulus = false;
};
int cmd_spectrum(const CommonOptions& common, const SpectrumOptions& opt,
                 std::ostream& log);

struct BudgetOptions {
  SensorGeometry geom{};
  double target_fps = 2500.0;
};
int cmd_budget(const BudgetOptions& opt, const std::filesystem::path& out_dir,
               std::ostream& log);

struct SweepOptions {
  std::string axis;  // offset_sigma | cap_mismatch_sigma | gain_db | gbw_hz | noise_sigma
  std::vector<double> values;
  int seeds = 8;
};
int cmd_sweep(const CommonOptions& common, const SweepOptions& opt,
              std::ostream& log);

const std::vector<std::string>& sweep_axes();

// Apply one sweep-axis value to every stage of `base`; randomized axes draw
// per stage from the given seed.
AdcConfig apply_sweep_axis(const AdcConfig& base, const std::string& axis,
                           double value, std::uint64_t seed);

}  // namespace padc
