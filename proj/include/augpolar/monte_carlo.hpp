#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "augpolar/channel.hpp"
#include "augpolar/coupling.hpp"

namespace augpolar {

// A simulated system: a single polar code under plain BP, or a coupling
// graph under the joint schedule.
using System = std::variant<CodeSpec, AugmentedSpec>;

int info_length(const System& system);
int block_length(const System& system);
double code_rate(const System& system);

struct StopRule {
    std::uint64_t min_frame_errors = 100;
    std::uint64_t max_frames = 100000;
};

struct SimOptions {
    int max_iters = 60;
    bool early_stop = false;
    bool coupled = true;  // augmented systems: false runs the uncoupled baseline
};

struct SimResult {
    ChannelPoint point;
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t info_bits_total = 0;
    double ber = 0.0;
    double fer = 0.0;
    double avg_iters = 0.0;
    std::uint64_t seed = 0;
};

// Frames are numbered 0..max_frames-1 with per-frame RNG streams derived
// from (seed, frame index), and the stop rule is evaluated at fixed batch
// boundaries. Both drivers therefore process exactly the same frame set and
// produce bit-identical tallies; run_point distributes each batch over
// OpenMP threads, run_point_serial is the reference kernel kept for testing.
inline constexpr std::uint64_t kFrameBatch = 32;

SimResult run_point(const System& system, const ChannelPoint& point, const StopRule& stop,
                    std::uint64_t seed, const SimOptions& opts = {});
SimResult run_point_serial(const System& system, const ChannelPoint& point, const StopRule& stop,
                           std::uint64_t seed, const SimOptions& opts = {});

// run_point per point at seed base_seed + point index, results in input order.
std::vector<SimResult> run_sweep(const System& system, const std::vector<ChannelPoint>& points,
                                 const StopRule& stop, std::uint64_t base_seed,
                                 const SimOptions& opts = {}, bool parallel = true);

}  // namespace augpolar
