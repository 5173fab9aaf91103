#include "padc/pipeline.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace padc {

bool AdcConfig::all_stages_neutral() const {
  for (const auto& s : stages) {
    if (!s.is_neutral()) return false;
  }
  return true;
}

void AdcConfig::validate() const {
  if (resolution < 1 || resolution > 24) {
    throw std::invalid_argument("resolution must be in [1, 24]");
  }
  refs.validate();
  if (!(clock_hz > 0.0) || !std::isfinite(clock_hz)) {
    throw std::invalid_argument("clock_hz must be finite and > 0");
  }
  if (stages.size() != static_cast<std::size_t>(resolution)) {
    throw std::invalid_argument(
        "stages must have exactly `resolution` entries (got " +
        std::to_string(stages.size()) + ", need " +
        std::to_string(resolution) + ")");
  }
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const std::string prefix = "stages[" + std::to_string(i) + "].";
    stages[i].validate(prefix.c_str());
  }
}

ControllerStep controller_step(ControllerState state, ControllerEvent event,
                               int n_stages) {
  ControllerStep out{state, false};
  switch (state.phase) {
    case ControllerPhase::Idle:
    case ControllerPhase::Stopped:
      if (event == ControllerEvent::Start) {
        out.state = ControllerState{ControllerPhase::Running, 0};
      }
      break;
    case ControllerPhase::Running:
      if (event == ControllerEvent::Clock) {
        out.state.address = state.address + 1;
        if (out.state.address >= n_stages) {
          out.state.address = 0;
          out.cycle_boundary = true;
        }
      } else if (event == ControllerEvent::Stop) {
        out.state = ControllerState{ControllerPhase::Stopped, 0};
      }
      break;
  }
  return out;
}

int assemble_code(std::span<const int> bits, int n_bits) {
  if (bits.size() != static_cast<std::size_t>(n_bits)) {
    throw std::domain_error("assemble_code: expected " +
                            std::to_string(n_bits) + " bits, got " +
                            std::to_string(bits.size()));
  }
  int code = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw std::domain_error("assemble_code: bits must be 0 or 1");
    }
    code = (code << 1) | b;
  }
  return code;
}

int convert_sample(double vin, const AdcConfig& cfg, const NoiseSource& noise,
                   std::uint64_t sample_index) {
  if (!std::isfinite(vin)) {
    throw std::domain_error("convert_sample: vin must be finite");
  }
  const double vth = cfg.refs.threshold();
  const double phase = cfg.phase_time_s();
  double v = vin;
  int code = 0;
  for (int i = 0; i < cfg.resolution; ++i) {
    const StageParams& p = cfg.stages[static_cast<std::size_t>(i)];
    const int bit = compare(v, vth, p.offset_v);
    code = (code << 1) | bit;
    if (i + 1 == cfg.resolution) break;  // last stage resolves a bit only
    const double z = p.resolved_noise_sigma() > 0.0
                         ? noise.unit_normal(sample_index,
                                             static_cast<std::uint64_t>(i))
                         : 0.0;
    v = residue_with_errors(v, bit, p, cfg.refs, phase, z);
  }
  return code;
}

PipelineState::PipelineState(const AdcConfig& cfg) {
  const int n = cfg.resolution;
  held.resize(static_cast<std::size_t>(n));
  align.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    align[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n - i),
                                              kEmptySlot);
  }
}

namespace {

void shift_alignment(std::vector<std::int8_t>& reg) {
  // The output slot must have been consumed by the previous emission.
  if (reg.back() != PipelineState::kEmptySlot) {
    throw std::logic_error("pipeline alignment register overflow");
  }
  for (std::size_t k = reg.size() - 1; k > 0; --k) reg[k] = reg[k - 1];
  reg[0] = PipelineState::kEmptySlot;
}

}  // namespace

TickResult tick(PipelineState& state, const AdcConfig& cfg,
                const NoiseSource& noise, std::optional<double> sample) {
  const int n = cfg.resolution;
  const double vth = cfg.refs.threshold();
  const double phase_time = cfg.phase_time_s();
  const std::uint64_t t = state.tick;
  TickResult result;

  // Address counter advances once per full clock period.
  if (t > 0 && t % 2 == 0 &&
      state.controller.phase == ControllerPhase::Running) {
    state.controller =
        controller_step(state.controller, ControllerEvent::Clock, n).state;
  }

  for (auto& reg : state.align) shift_alignment(reg);

  // Residues produced by multiplying stages during this half-cycle; entry i
  // feeds stage i+1, which samples in the same half-cycle.
  struct Wire {
    double v = 0.0;
    std::uint64_t sample = 0;
    bool valid = false;
  };
  std::vector<Wire> wires(static_cast<std::size_t>(n));

  if (sample.has_value() && !std::isfinite(*sample)) {
    throw std::domain_error("tick: sample must be finite");
  }

  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const StageParams& p = cfg.stages[ui];
    const bool sampling = (t % 2) == (static_cast<std::uint64_t>(i) % 2);
    if (sampling) {
      double vin = 0.0;
      std::uint64_t idx = 0;
      bool have_input = false;
      if (i == 0) {
        if (sample.has_value() &&
            state.controller.phase == ControllerPhase::Running) {
          vin = *sample;
          idx = state.accepted;
          have_input = true;
          result.accepted = true;
          ++state.accepted;
        }
      } else if (wires[ui - 1].valid) {
        vin = wires[ui - 1].v;
        idx = wires[ui - 1].sample;
        have_input = true;
      }
      if (have_input) {
        const int bit = compare(vin, vth, p.offset_v);
        state.held[ui] = PipelineState::Latch{vin, bit, idx, true};
        state.align[ui][0] = static_cast<std::int8_t>(bit);
      } else {
        state.held[ui].valid = false;
      }
    } else {
      // Multiplying phase: hand the residue to the next stage. The last
      // stage resolves a bit only; its residue is never consumed.
      if (state.held[ui].valid && i + 1 < n) {
        const double z =
            p.resolved_noise_sigma() > 0.0
                ? noise.unit_normal(state.held[ui].sample,
                                    static_cast<std::uint64_t>(i))
                : 0.0;
        wires[ui].v = residue_with_errors(state.held[ui].v, state.held[ui].bit,
                                          p, cfg.refs, phase_time, z);
        wires[ui].sample = state.held[ui].sample;
        wires[ui].valid = true;
      }
      state.held[ui].valid = false;
    }
  }

  // An offered sample that was not taken (wrong phase or controller not
  // running) signals not-ready; the caller retries on a later half-cycle.
  if (sample.has_value() && !result.accepted) result.not_ready = true;

  // A code completes when the last stage's bit reaches its output slot; all
  // other registers hold the matching sample's bits at their outputs.
  if (state.align[static_cast<std::size_t>(n - 1)].back() !=
      PipelineState::kEmptySlot) {
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const std::int8_t b = state.align[static_cast<std::size_t>(i)].back();
      if (b == PipelineState::kEmptySlot) {
        throw std::logic_error("pipeline alignment registers out of step");
      }
      bits[static_cast<std::size_t>(i)] = b;
      state.align[static_cast<std::size_t>(i)].back() =
          PipelineState::kEmptySlot;
    }
    result.code = assemble_code(bits, n);
  }

  ++state.tick;
  return result;
}

int pipeline_latency_cycles(int resolution) { return (resolution - 1) / 2; }

CodeStream run_stream(std::span<const double> samples, const AdcConfig& cfg) {
  if (samples.empty()) {
    throw std::domain_error("run_stream: samples must be non-empty");
  }
  cfg.validate();
  const NoiseSource noise(cfg.seed);

  PipelineState state(cfg);
  state.controller =
      controller_step(state.controller, ControllerEvent::Start, cfg.resolution)
          .state;

  CodeStream out;
  out.codes.reserve(samples.size());
  out.latency_cycles = pipeline_latency_cycles(cfg.resolution);

  std::size_t next = 0;
  // Drain guard: everything must be out within fill latency after the last
  // input.
  const std::uint64_t max_ticks =
      2 * samples.size() + 2 * static_cast<std::uint64_t>(cfg.resolution) + 4;
  while (out.codes.size() < samples.size()) {
    std::optional<double> offer;
    if (next < samples.size() && state.tick % 2 == 0) offer = samples[next];
    const TickResult r = tick(state, cfg, noise, offer);
    if (r.accepted) ++next;
    if (r.code) out.codes.push_back(*r.code);
    if (state.tick > max_ticks) {
      throw std::logic_error("run_stream: pipeline failed to drain");
    }
  }

  state.controller =
      controller_step(state.controller, ControllerEvent::Stop, cfg.resolution)
          .state;
  return out;
}

}  // namespace padc
