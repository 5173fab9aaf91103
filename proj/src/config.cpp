#include "padc/config.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "padc/noise.hpp"

namespace padc {

using nlohmann::json;

namespace {

json num_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

double parse_num_or_inf(const json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw std::invalid_argument(field + ": expected a number, \"inf\" or \"-inf\"");
}

json stage_to_json(const StageParams& p) {
  json j;
  j["offset_v"] = p.offset_v;
  j["open_loop_gain_db"] = num_or_inf(p.open_loop_gain_db);
  j["cap_mismatch"] = p.cap_mismatch;
  j["gbw_hz"] = num_or_inf(p.gbw_hz);
  j["load_cap_f"] = p.load_cap_f;
  if (p.noise_auto_ktc) {
    j["noise_sigma_v"] = "auto-ktc";
  } else {
    j["noise_sigma_v"] = p.noise_sigma_v;
  }
  j["rail_pos_v"] = num_or_inf(p.rail_pos_v);
  j["rail_neg_v"] = num_or_inf(p.rail_neg_v);
  return j;
}

StageParams stage_from_json(const json& j, const std::string& prefix) {
  if (!j.is_object()) {
    throw std::invalid_argument(prefix + ": expected an object");
  }
  StageParams p;
  for (const auto& [key, value] : j.items()) {
    const std::string field = prefix + "." + key;
    if (key == "offset_v") {
      p.offset_v = value.get<double>();
    } else if (key == "open_loop_gain_db") {
      p.open_loop_gain_db = parse_num_or_inf(value, field);
    } else if (key == "cap_mismatch") {
      p.cap_mismatch = value.get<double>();
    } else if (key == "gbw_hz") {
      p.gbw_hz = parse_num_or_inf(value, field);
    } else if (key == "load_cap_f") {
      p.load_cap_f = value.get<double>();
    } else if (key == "noise_sigma_v") {
      if (value.is_string() && value.get<std::string>() == "auto-ktc") {
        p.noise_auto_ktc = true;
        p.noise_sigma_v = 0.0;
      } else if (value.is_number()) {
        p.noise_auto_ktc = false;
        p.noise_sigma_v = value.get<double>();
      } else {
        throw std::invalid_argument(field + ": expected a number or \"auto-ktc\"");
      }
    } else if (key == "rail_pos_v") {
      p.rail_pos_v = parse_num_or_inf(value, field);
    } else if (key == "rail_neg_v") {
      p.rail_neg_v = parse_num_or_inf(value, field);
    } else {
      throw std::invalid_argument(field + ": unknown stage field");
    }
  }
  return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"ideal", "paper-like",
                                                 "missing-code"};
  return names;
}

AdcConfig make_preset(const std::string& name, std::optional<int> resolution,
                      std::optional<std::uint64_t> seed) {
  AdcConfig cfg;
  cfg.resolution = resolution.value_or(8);
  cfg.refs = ReferencePair{1.0, -1.0};
  cfg.clock_hz = 20e6;
  cfg.stages.assign(static_cast<std::size_t>(cfg.resolution), StageParams{});

  if (name == "ideal") {
    cfg.seed = seed.value_or(1);
  } else if (name == "paper-like") {
    // Reference non-ideality set: 55 dB open-loop gain, 800 MHz GBW, 0.1%
    // capacitor mismatch, per-stage comparator offsets drawn with
    // sigma = 2 mV from the run seed, +/-5 V rails. The 5.5 mV residue noise
    // is the calibrated total per-stage noise (thermal, comparator and
    // amplifier together; plain kT/C of the 0.1 pF load alone would be
    // 0.2 mV and far too clean for the measured SNDR neighbourhood).
    cfg.seed = seed.value_or(kPaperLikeSeed);
    const NoiseSource draw(cfg.seed);
    for (std::size_t i = 0; i < cfg.stages.size(); ++i) {
      StageParams& p = cfg.stages[i];
      p.offset_v = 2e-3 * draw.unit_normal(i, kStreamStageOffsets);
      p.open_loop_gain_db = 55.0;
      p.cap_mismatch = 1e-3;
      p.gbw_hz = 800e6;
      p.load_cap_f = 0.1e-12;
      p.noise_sigma_v = 5.5e-3;
      p.rail_pos_v = 5.0;
      p.rail_neg_v = -5.0;
    }
  } else if (name == "missing-code") {
    // A +4 LSB comparator offset in the first stage: inputs just above
    // mid-scale resolve the MSB low, the residue overranges, and the four
    // codes above the MSB transition become unreachable.
    cfg.seed = seed.value_or(1);
    cfg.stages[0].offset_v = 4.0 * cfg.lsb();
  } else {
    std::string msg = "unknown preset \"" + name + "\"; available:";
    for (const auto& n : preset_names()) msg += " " + n;
    throw std::invalid_argument(msg);
  }
  cfg.validate();
  return cfg;
}

json config_to_json(const AdcConfig& cfg) {
  json j;
  j["resolution"] = cfg.resolution;
  j["refs"] = {{"vrefp", cfg.refs.vrefp}, {"vrefn", cfg.refs.vrefn}};
  j["clock_hz"] = cfg.clock_hz;
  j["seed"] = cfg.seed;
  json stages = json::array();
  for (const auto& p : cfg.stages) stages.push_back(stage_to_json(p));
  j["stages"] = std::move(stages);
  return j;
}

AdcConfig config_from_json(const json& j) {
  // Resolution and seed resolve first: randomized presets materialize their
  // per-stage draws from them.
  const std::string preset = j.value("preset", std::string("ideal"));
  std::optional<int> res;
  std::optional<std::uint64_t> seed;
  if (j.contains("resolution")) res = j.at("resolution").get<int>();
  if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
  AdcConfig cfg = make_preset(preset, res, seed);

  for (const auto& [key, value] : j.items()) {
    if (key == "preset" || key == "resolution" || key == "seed") continue;
    if (key == "refs") {
      if (value.contains("vrefp")) cfg.refs.vrefp = value.at("vrefp").get<double>();
      if (value.contains("vrefn")) cfg.refs.vrefn = value.at("vrefn").get<double>();
    } else if (key == "clock_hz") {
      cfg.clock_hz = value.get<double>();
    } else if (key == "stages") {
      if (!value.is_array()) {
        throw std::invalid_argument("stages: expected an array");
      }
      cfg.stages.clear();
      for (std::size_t i = 0; i < value.size(); ++i) {
        cfg.stages.push_back(
            stage_from_json(value[i], "stages[" + std::to_string(i) + "]"));
      }
    } else {
      throw std::invalid_argument(key + ": unknown config field");
    }
  }
  cfg.validate();
  return cfg;
}

AdcConfig resolve_config(const std::optional<std::string>& preset_flag,
                         const std::optional<std::filesystem::path>& config_path,
                         const ConfigOverrides& overrides) {
  json file;
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) {
      throw std::runtime_error("cannot open config file: " +
                               config_path->string());
    }
    file = json::parse(in);  // propagates parse_error with position info
    if (!file.is_object()) {
      throw std::invalid_argument("config file: expected a JSON object");
    }
  }
  if (preset_flag) file["preset"] = *preset_flag;
  if (overrides.seed) file["seed"] = *overrides.seed;
  if (overrides.clock_hz) file["clock_hz"] = *overrides.clock_hz;
  if (!file.contains("preset")) file["preset"] = "ideal";
  return config_from_json(file);
}

}  // namespace padc
