#include "padc/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "padc/io_util.hpp"
#include "padc/metrology.hpp"
#include "padc/oracle.hpp"
#include "padc/report_io.hpp"
#include "padc/signal_gen.hpp"

namespace padc {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void write_json_file(const fs::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const fs::path& out_dir, const std::string& command,
                    const CommonOptions& common, const AdcConfig& cfg) {
  std::ostringstream m;
  m << "command: " << command << '\n';
  m << "tool: " << kToolName << ' ' << kToolVersion << '\n';
  m << "config: " << (common.config_path ? common.config_path->string() : "-")
    << '\n';
  m << "preset: " << (common.preset ? *common.preset : "-") << '\n';
  m << "seed: " << cfg.seed << '\n';
  m << "output_dir: " << out_dir.string() << '\n';
  m << "resolved_config: resolved_config.json" << '\n';
  m << "timestamp: " << utc_timestamp() << '\n';
  write_text_file(out_dir / "manifest.txt", m.str());
}

AdcConfig resolve_common(const CommonOptions& common) {
  ConfigOverrides ov;
  ov.seed = common.seed;
  return resolve_config(common.preset, common.config_path, ov);
}

fs::path prepare_out_dir(const CommonOptions& common, const std::string& command,
                         const AdcConfig& cfg) {
  fs::create_directories(common.out_dir);
  write_json_file(common.out_dir / "resolved_config.json", config_to_json(cfg));
  write_manifest(common.out_dir, command, common, cfg);
  return common.out_dir;
}

Stimulus default_ramp(const AdcConfig& cfg, std::size_t points,
                      double overshoot_lsb) {
  const double lsb = cfg.lsb();
  return gen_ramp(points, cfg.refs.vrefn - overshoot_lsb * lsb,
                  cfg.refs.vrefp + overshoot_lsb * lsb);
}

void note_missing_codes(LinearityReport& rep) {
  std::vector<int> missing;
  for (std::size_t i = 0; i < rep.dnl.size(); ++i) {
    if (rep.dnl[i] == -1.0) missing.push_back(static_cast<int>(i + 1));
  }
  if (missing.empty()) return;
  std::string w = "missing codes (dnl = -1):";
  for (int c : missing) w += " " + std::to_string(c);
  rep.warnings.push_back(w);
}

struct PointMetrics {
  double worst_dnl = 0.0;
  double worst_inl = 0.0;
  double sndr_db = 0.0;
  double enob_bits = 0.0;
};

// Shared per-configuration measurement: code-density linearity over a
// 65,536-point ramp plus a 1024-point coherent-sine spectrum.
PointMetrics measure_point(const AdcConfig& cfg) {
  PointMetrics m;
  const Stimulus ramp = default_ramp(cfg, 65536, 2.0);
  const CodeStream ramp_codes = run_stream(ramp.samples, cfg);
  const LinearityReport lin = histogram_linearity(ramp_codes, cfg.resolution);
  m.worst_dnl = lin.worst_dnl;
  m.worst_inl = lin.worst_inl;

  const Stimulus sine =
      gen_coherent_sine(1024, 479, 0.5 * cfg.refs.full_scale(),
                        cfg.refs.threshold());
  const CodeStream sine_codes = run_stream(sine.samples, cfg);
  std::vector<double> x(sine_codes.codes.begin(), sine_codes.codes.end());
  const SpectrumReport spec = analyze_spectrum(x, 1024, 479);
  m.sndr_db = spec.sndr_db;
  m.enob_bits = spec.enob_bits;
  return m;
}

}  // namespace

int cmd_verify(const CommonOptions& common, std::ostream& log) {
  const AdcConfig cfg = resolve_common(common);
  const fs::path out_dir = prepare_out_dir(common, "verify", cfg);
  const NoiseSource noise(cfg.seed);
  json result;
  bool ok = true;

  // Pipeline vs sequential reference on random inputs slightly past both
  // references, with whatever noise the config carries.
  {
    const std::size_t n = 10000;
    const NoiseSource gen(mix64(cfg.seed ^ 0x5EEDul));
    const double fs = cfg.refs.full_scale();
    std::vector<double> vins(n);
    for (std::size_t k = 0; k < n; ++k) {
      vins[k] = cfg.refs.vrefn - 0.05 * fs + 1.1 * fs * gen.uniform(k);
    }
    const CodeStream piped = run_stream(vins, cfg);
    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const int want = brute_force_convert(vins[k], cfg, noise, k);
      if (piped.codes[k] != want) {
        if (mismatches < 10) {
          log << "  diff: vin=" << fmt_double(vins[k])
              << " pipeline=" << piped.codes[k] << " reference=" << want
              << '\n';
        }
        ++mismatches;
      }
    }
    result["pipeline_vs_reference"] = {{"samples", n},
                                       {"mismatches", mismatches}};
    log << "pipeline vs reference: " << mismatches << "/" << n
        << " mismatches\n";
    ok = ok && mismatches == 0;
  }

  // Against the closed-form quantizer; exact agreement is only defined for a
  // fully neutral parameter set.
  if (cfg.all_stages_neutral()) {
    const std::size_t n = 65536;
    const double fs = cfg.refs.full_scale();
    const double lsb = cfg.lsb();
    const IdealQuantizerSpec spec{cfg.resolution, cfg.refs};
    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double v = cfg.refs.vrefn + lsb / 8.0 +
                       static_cast<double>(k) * fs / static_cast<double>(n);
      const int got = convert_sample(v, cfg, noise, k);
      const int want = ideal_quantize(v, spec);
      if (got != want) {
        if (mismatches < 10) {
          log << "  diff: vin=" << fmt_double(v) << " pipeline=" << got
              << " ideal=" << want << '\n';
        }
        ++mismatches;
      }
    }
    result["ideal_quantizer"] = {{"samples", n}, {"mismatches", mismatches}};
    log << "ideal quantizer grid: " << mismatches << "/" << n
        << " mismatches\n";
    ok = ok && mismatches == 0;
  }

  // Linearity snapshot; a hard bound only when the config is ideal.
  {
    const Stimulus ramp = default_ramp(cfg, 65536, 2.0);
    const CodeStream codes = run_stream(ramp.samples, cfg);
    const LinearityReport rep = histogram_linearity(codes, cfg.resolution);
    result["linearity"] = {{"worst_dnl_lsb", rep.worst_dnl},
                           {"worst_inl_lsb", rep.worst_inl}};
    log << "linearity: worst dnl " << fmt_double(rep.worst_dnl)
        << " lsb, worst inl " << fmt_double(rep.worst_inl) << " lsb\n";
    if (cfg.all_stages_neutral()) {
      const bool tight = rep.worst_dnl <= 0.02 && rep.worst_inl <= 0.02;
      result["linearity"]["ideal_bound_ok"] = tight;
      ok = ok && tight;
    }
  }

  result["pass"] = ok;
  write_json_file(out_dir / "verify.json", result);
  log << (ok ? "verify: PASS\n" : "verify: FAIL\n");
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_linearity(const CommonOptions& common, const LinearityOptions& opt,
                  std::ostream& log) {
  const AdcConfig cfg = resolve_common(common);
  const fs::path out_dir = prepare_out_dir(common, "linearity", cfg);

  LinearityReport rep;
  if (opt.method == "histogram") {
    const Stimulus ramp =
        default_ramp(cfg, opt.ramp_points, opt.overshoot_lsb);
    if (opt.dump_stimulus) {
      std::ostringstream s;
      write_stimulus_csv(ramp, s);
      write_text_file(out_dir / "stimulus.csv", s.str());
    }
    const CodeStream codes = run_stream(ramp.samples, cfg);
    rep = histogram_linearity(codes, cfg.resolution);
  } else if (opt.method == "transitions") {
    for (const auto& s : cfg.stages) {
      if (s.resolved_noise_sigma() > 0.0) {
        throw std::invalid_argument(
            "linearity --method transitions requires a noise-free config");
      }
    }
    const NoiseSource noise(cfg.seed);
    const auto adc = [&](double v) { return convert_sample(v, cfg, noise); };
    const TransitionScan scan =
        transition_levels(adc, cfg.resolution, cfg.refs, cfg.lsb() / 4096.0);
    if (!scan.monotone) {
      std::string msg = "transfer is non-monotone at codes:";
      for (int c : scan.offending_codes) msg += " " + std::to_string(c);
      throw std::runtime_error(msg);
    }
    rep = linearity_from_transitions(scan.levels);
  } else {
    throw std::invalid_argument("unknown method \"" + opt.method +
                                "\"; available: histogram transitions");
  }

  note_missing_codes(rep);
  {
    std::ostringstream s;
    write_linearity_csv(rep, s);
    write_text_file(out_dir / "linearity.csv", s.str());
  }
  write_json_file(out_dir / "linearity.json", linearity_to_json(rep));

  for (const auto& w : rep.warnings) log << "warning: " << w << '\n';
  log << "method: " << rep.method << '\n';
  log << "worst dnl: " << fmt_double(rep.worst_dnl) << " lsb\n";
  log << "worst inl: " << fmt_double(rep.worst_inl) << " lsb\n";
  return kExitOk;
}

int cmd_spectrum(const CommonOptions& common, const SpectrumOptions& opt,
                 std::ostream& log) {
  const AdcConfig cfg = resolve_common(common);
  const fs::path out_dir = prepare_out_dir(common, "spectrum", cfg);

  const double amplitude = opt.amplitude.value_or(0.5 * cfg.refs.full_scale());
  const double offset = opt.offset.value_or(cfg.refs.threshold());
  const Stimulus sine = gen_coherent_sine(opt.nfft, opt.bin, amplitude, offset);
  for (const auto& w : sine.warnings) log << "warning: " << w << '\n';
  if (opt.dump_stimulus) {
    std::ostringstream s;
    write_stimulus_csv(sine, s);
    write_text_file(out_dir / "stimulus.csv", s.str());
  }

  SpectrumReport rep;
  if (opt.float_passthrough) {
    rep = analyze_spectrum(sine.samples, opt.nfft,
                           static_cast<std::size_t>(opt.bin));
  } else {
    const CodeStream codes = run_stream(sine.samples, cfg);
    std::vector<double> x(codes.codes.begin(), codes.codes.end());
    rep = analyze_spectrum(x, opt.nfft, static_cast<std::size_t>(opt.bin));
  }

  {
    std::ostringstream s;
    write_spectrum_csv(rep, s);
    write_text_file(out_dir / "spectrum.csv", s.str());
  }
  json j = spectrum_to_json(rep);
  j["signal_freq_hz"] = static_cast<double>(opt.bin) /
                        static_cast<double>(opt.nfft) * cfg.clock_hz;
  j["sample_rate_hz"] = cfg.clock_hz;
  j["float_passthrough"] = opt.float_passthrough;
  j["stimulus_note"] =
      "coherent tone below Nyquist; an fs/2 tone aliases onto a single "
      "alternating pattern and has no defined SNDR";
  write_json_file(out_dir / "spectrum.json", j);

  log << "sndr: " << fmt_double(rep.sndr_db) << " dB\n";
  log << "sfdr: " << fmt_double(rep.sfdr_db) << " dB\n";
  log << "enob: " << fmt_double(rep.enob_bits) << " bits\n";
  return kExitOk;
}

int cmd_budget(const BudgetOptions& opt, const fs::path& out_dir,
               std::ostream& log) {
  const FrameBudget b = frame_budget(opt.geom);
  const double required = required_adc_rate(opt.geom, opt.target_fps);
  const double pixel_rate = 1.0 / opt.geom.pixel_time_s;
  const ReferenceDesign ref;

  const bool target_matches =
      std::abs(ref.stated_target_sps - required) <= 0.01 * ref.stated_target_sps;

  json j;
  j["geometry"] = {{"rows", opt.geom.rows},
                   {"cols", opt.geom.cols},
                   {"adc_channels", opt.geom.adc_channels},
                   {"pixel_time_s", opt.geom.pixel_time_s}};
  j["serialized"] = {{"frame_time_s", b.serialized_frame_time_s},
                     {"frames_per_s", b.serialized_fps}};
  j["parallel"] = {{"frame_time_s", b.parallel_frame_time_s},
                   {"frames_per_s", b.parallel_fps}};
  j["target_fps"] = opt.target_fps;
  j["required_sps_per_channel"] = required;
  j["single_channel_pixel_rate_sps"] = pixel_rate;
  j["reference_design"] = {{"stated_target_sps", ref.stated_target_sps},
                           {"total_power_w", ref.total_power_w},
                           {"opamp_power_w", ref.opamp_power_w},
                           {"opamp_bias_a", ref.opamp_bias_a}};
  j["stated_target_consistent"] = target_matches;
  if (!target_matches) {
    j["note"] =
        "the stated per-channel design target does not follow from "
        "rows*cols/channels*target_fps (" +
        fmt_double(required) + " S/s) nor from the single-channel pixel rate (" +
        fmt_double(pixel_rate) + " S/s); both derived figures are reported";
  }

  fs::create_directories(out_dir);
  write_json_file(out_dir / "budget.json", j);
  {
    std::ostringstream m;
    m << "command: budget\n";
    m << "tool: " << kToolName << ' ' << kToolVersion << '\n';
    m << "geometry: " << opt.geom.rows << 'x' << opt.geom.cols << '/'
      << opt.geom.adc_channels << "ch @ " << fmt_double(opt.geom.pixel_time_s)
      << " s/pixel\n";
    m << "target_fps: " << fmt_double(opt.target_fps) << '\n';
    m << "output_dir: " << out_dir.string() << '\n';
    m << "timestamp: " << utc_timestamp() << '\n';
    write_text_file(out_dir / "manifest.txt", m.str());
  }

  log << "serialized: " << fmt_double(b.serialized_frame_time_s * 1e6)
      << " us/frame, " << fmt_double(b.serialized_fps) << " fps\n";
  log << "parallel:   " << fmt_double(b.parallel_frame_time_s * 1e6)
      << " us/frame, " << fmt_double(b.parallel_fps) << " fps\n";
  log << "required rate @ " << fmt_double(opt.target_fps)
      << " fps: " << fmt_double(required) << " S/s per channel\n";
  if (!target_matches) {
    log << "note: stated design target " << fmt_double(ref.stated_target_sps)
        << " S/s is inconsistent with the derived figures\n";
  }
  return kExitOk;
}

const std::vector<std::string>& sweep_axes() {
  static const std::vector<std::string> axes = {
      "offset_sigma", "cap_mismatch_sigma", "gain_db", "gbw_hz", "noise_sigma"};
  return axes;
}

AdcConfig apply_sweep_axis(const AdcConfig& base, const std::string& axis,
                           double value, std::uint64_t seed) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("sweep values must be finite");
  }
  AdcConfig cfg = base;
  cfg.seed = seed;
  const NoiseSource draw(seed);
  for (std::size_t i = 0; i < cfg.stages.size(); ++i) {
    StageParams& p = cfg.stages[i];
    if (axis == "offset_sigma") {
      p.offset_v = value * draw.unit_normal(i, kStreamStageOffsets);
    } else if (axis == "cap_mismatch_sigma") {
      p.cap_mismatch = value * draw.unit_normal(i, kStreamCapMismatch);
    } else if (axis == "gain_db") {
      p.open_loop_gain_db = value;
    } else if (axis == "gbw_hz") {
      p.gbw_hz = value;
    } else if (axis == "noise_sigma") {
      p.noise_auto_ktc = false;
      p.noise_sigma_v = value;
    } else {
      std::string msg = "unknown sweep axis \"" + axis + "\"; available:";
      for (const auto& a : sweep_axes()) msg += " " + a;
      throw std::invalid_argument(msg);
    }
  }
  cfg.validate();
  return cfg;
}

int cmd_sweep(const CommonOptions& common, const SweepOptions& opt,
              std::ostream& log) {
  if (opt.values.empty()) {
    throw std::invalid_argument("sweep needs at least one value");
  }
  if (opt.seeds < 1) throw std::invalid_argument("sweep needs seeds >= 1");
  const AdcConfig base = resolve_common(common);
  const fs::path out_dir = prepare_out_dir(common, "sweep", base);

  std::vector<double> values = opt.values;
  std::sort(values.begin(), values.end());

  std::ostringstream csv;
  csv << "axis,value,seed,worst_dnl_lsb,worst_inl_lsb,sndr_db,enob_bits\n";
  for (double v : values) {
    for (int s = 0; s < opt.seeds; ++s) {
      const std::uint64_t seed = base.seed + static_cast<std::uint64_t>(s);
      const AdcConfig cfg = apply_sweep_axis(base, opt.axis, v, seed);
      const PointMetrics m = measure_point(cfg);
      csv << opt.axis << ',' << fmt_double(v) << ',' << seed << ','
          << fmt_double(m.worst_dnl) << ',' << fmt_double(m.worst_inl) << ','
          << fmt_double(m.sndr_db) << ',' << fmt_double(m.enob_bits) << '\n';
    }
  }
  write_text_file(out_dir / "sweep.csv", csv.str());
  log << "sweep: " << values.size() << " values x " << opt.seeds
      << " seeds -> " << (out_dir / "sweep.csv").string() << '\n';
  return kExitOk;
}

}  // namespace padc
