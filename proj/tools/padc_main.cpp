#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "padc/commands.hpp"

namespace {

void add_common(CLI::App* cmd, padc::CommonOptions& common) {
  cmd->add_option("--config", common.config_path, "JSON configuration file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--preset", common.preset,
                  "named preset: ideal | paper-like | missing-code");
  cmd->add_option("--seed", common.seed, "noise / materialization seed");
  cmd->add_option("--out", common.out_dir, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"behavioral 8-bit one-bit-per-stage pipeline ADC simulator "
               "and converter metrology"};
  app.require_subcommand(1);

  padc::CommonOptions common;

  auto* verify = app.add_subcommand(
      "verify", "check pipeline against the sequential and ideal references");
  add_common(verify, common);

  padc::LinearityOptions lin_opt;
  auto* linearity =
      app.add_subcommand("linearity", "DNL/INL from a full-scale ramp");
  add_common(linearity, common);
  linearity->add_option("--points", lin_opt.ramp_points, "ramp points");
  linearity->add_option("--overshoot-lsb", lin_opt.overshoot_lsb,
                        "ramp margin past each reference, in LSB");
  linearity->add_option("--method", lin_opt.method,
                        "histogram | transitions");
  linearity->add_flag("--dump-stimulus", lin_opt.dump_stimulus,
                      "also write stimulus.csv");

  padc::SpectrumOptions spec_opt;
  auto* spectrum = app.add_subcommand(
      "spectrum", "SNDR/SFDR/ENOB from a coherent sine record");
  add_common(spectrum, common);
  spectrum->add_option("--nfft", spec_opt.nfft, "record length (power of two)");
  spectrum->add_option("--bin", spec_opt.bin, "coherent signal bin");
  spectrum->add_option("--amplitude", spec_opt.amplitude, "sine amplitude (V)");
  spectrum->add_option("--offset", spec_opt.offset, "sine offset (V)");
  spectrum->add_flag("--float-passthrough", spec_opt.float_passthrough,
                     "analyze the un-quantized stimulus");
  spectrum->add_flag("--dump-stimulus", spec_opt.dump_stimulus,
                     "also write stimulus.csv");

  padc::BudgetOptions budget_opt;
  auto* budget = app.add_subcommand(
      "budget", "frame-time and per-channel rate arithmetic for the sensor "
                "readout");
  budget->add_option("--rows", budget_opt.geom.rows, "pixel rows");
  budget->add_option("--cols", budget_opt.geom.cols, "pixel columns");
  budget->add_option("--channels", budget_opt.geom.adc_channels,
                     "parallel ADC channels");
  double pixel_ns = 100.0;
  budget->add_option("--pixel-ns", pixel_ns, "per-pixel conversion time in ns");
  budget->add_option("--fps", budget_opt.target_fps, "target frame rate");
  std::string budget_out = "out";
  budget->add_option("--out", budget_out, "output directory");

  padc::SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand(
      "sweep", "metrics across one stage-parameter axis and several seeds");
  add_common(sweep, common);
  sweep->add_option("--axis", sweep_opt.axis,
                    "offset_sigma | cap_mismatch_sigma | gain_db | gbw_hz | "
                    "noise_sigma")
      ->required();
  sweep->add_option("--values", sweep_opt.values, "axis values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--seeds", sweep_opt.seeds, "seeds per value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message / help text
    return code == 0 ? 0 : padc::kExitUsage;
  }

  try {
    if (verify->parsed()) return padc::cmd_verify(common, std::cout);
    if (linearity->parsed())
      return padc::cmd_linearity(common, lin_opt, std::cout);
    if (spectrum->parsed())
      return padc::cmd_spectrum(common, spec_opt, std::cout);
    if (budget->parsed()) {
      budget_opt.geom.pixel_time_s = pixel_ns * 1e-9;
      return padc::cmd_budget(budget_opt, budget_out, std::cout);
    }
    if (sweep->parsed()) return padc::cmd_sweep(common, sweep_opt, std::cout);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "config parse error: " << e.what() << '\n';
    return padc::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return padc::kExitUsage;
  }
  return padc::kExitUsage;
}
