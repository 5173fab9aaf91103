#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "padc/error_models.hpp"
#include "padc/noise.hpp"
#include "padc/stage.hpp"

namespace padc {

// Full converter description: geometry, references, clock, one parameter set
// per stage, and the noise seed of the run.
struct AdcConfig {
  int resolution = 8;
  ReferencePair refs{};
  double clock_hz = 20e6;
  std::vector<StageParams> stages = std::vector<StageParams>(8);
  std::uint64_t seed = 1;

  int num_codes() const { return 1 << resolution; }
  double lsb() const { return refs.full_scale() / num_codes(); }
  // One clock phase: the multiplying (settling) window.
  double phase_time_s() const { return 0.5 / clock_hz; }
  bool all_stages_neutral() const;

  // throws std::invalid_argument naming the offending field
  void validate() const;
};

// Controller of the conversion sequencing: started explicitly, advances its
// stage address once per clock, wraps at the last address, stops on demand.
enum class ControllerPhase { Idle, Running, Stopped };
enum class ControllerEvent { Start, Clock, Stop };

struct ControllerState {
  ControllerPhase phase = ControllerPhase::Idle;
  int address = 0;
};

struct ControllerStep {
  ControllerState state;
  bool cycle_boundary = false;  // address wrapped on this clock
};

// FSM: Idle+Start -> Running(0); Running(a)+Clock -> Running((a+1) mod n),
// flagging the wrap; Running+Stop -> Stopped; Stopped+Start -> Running(0).
// Events without a defined transition leave the state unchanged.
ControllerStep controller_step(ControllerState state, ControllerEvent event,
                               int n_stages);

// MSB-first code assembly: bits[0] is the first (most significant) stage.
int assemble_code(std::span<const int> bits, int n_bits);

// One complete conversion, stage by stage, the way a single sample flows
// through the cascade. sample_index addresses the per-(sample, stage) noise
// draws so a pipelined run of the same stream produces identical codes.
int convert_sample(double vin, const AdcConfig& cfg, const NoiseSource& noise,
                   std::uint64_t sample_index = 0);

// Half-cycle-accurate pipeline state. Stage i samples on half-cycles with
// tick == i (mod 2) and multiplies on the opposite phase, so adjacent stages
// run on opposite clock phases and a stage's residue is consumed by its
// neighbour in the same half-cycle it is produced.
//
// Bit alignment: stage i's register has resolution - i slots; a decided bit
// shifts one slot per half-cycle and reaches the output slot exactly when the
// last stage decides the same sample's LSB.
struct PipelineState {
  struct Latch {
    double v = 0.0;
    int bit = 0;
    std::uint64_t sample = 0;
    bool valid = false;
  };
  static constexpr std::int8_t kEmptySlot = -1;

  explicit PipelineState(const AdcConfig& cfg);

  std::vector<Latch> held;                     // per-stage sample/decision hold
  std::vector<std::vector<std::int8_t>> align; // per-stage alignment registers
  ControllerState controller;
  std::uint64_t tick = 0;      // half-cycles elapsed
  std::uint64_t accepted = 0;  // samples accepted so far
};

struct TickResult {
  bool accepted = false;   // the offered sample entered stage 1
  bool not_ready = false;  // a sample was offered but could not be taken
  std::optional<int> code;
};

// Advance the pipeline by one half clock cycle, optionally offering a new
// input sample. Samples are taken only on stage-1 sampling half-cycles and
// only while the controller is Running; one sample per full clock period.
TickResult tick(PipelineState& state, const AdcConfig& cfg,
                const NoiseSource& noise,
                std::optional<double> sample = std::nullopt);

struct CodeStream {
  std::vector<int> codes;
  int latency_cycles = 0;
};

// Whole clock periods between the period a sample is accepted and the period
// its code is emitted: (resolution - 1) / 2.
int pipeline_latency_cycles(int resolution);

// Drive the pipeline over a sample stream; returns one code per input, in
// order, plus the fill latency. Deterministic for a fixed cfg.seed.
CodeStream run_stream(std::span<const double> samples, const AdcConfig& cfg);

}  // namespace padc
