#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "padc/pipeline.hpp"

namespace padc {

// Noise-source streams reserved for materializing randomized configurations
// (per-stage parameter draws). Conversion noise uses stream = stage index,
// so these sit far away.
constexpr std::uint64_t kStreamStageOffsets = 0x0FF5E701;
constexpr std::uint64_t kStreamCapMismatch = 0x0CA93154;

// Seed committed with the paper-like preset; the calibrated preset + seed
// pass the acceptance bands deterministically.
constexpr std::uint64_t kPaperLikeSeed = 1;

const std::vector<std::string>& preset_names();

// Build a named preset ("ideal", "paper-like", "missing-code"), optionally
// with a different resolution or seed. Randomized presets draw their
// per-stage parameters deterministically from the final seed.
AdcConfig make_preset(const std::string& name, std::optional<int> resolution,
                      std::optional<std::uint64_t> seed);

// JSON <-> AdcConfig. Infinities serialize as the strings "inf"/"-inf";
// noise_sigma_v accepts the string "auto-ktc".
nlohmann::json config_to_json(const AdcConfig& cfg);
AdcConfig config_from_json(const nlohmann::json& j);

// Flag-level overrides (highest precedence).
struct ConfigOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> clock_hz;
};

// Resolve the effective configuration with precedence
// flags > config file > preset defaults. The config file may itself name a
// "preset" to start from; a --preset flag wins over that.
AdcConfig resolve_config(const std::optional<std::string>& preset_flag,
                         const std::optional<std::filesystem::path>& config_path,
                         const ConfigOverrides& overrides);

}  // namespace padc
