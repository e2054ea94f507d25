#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace augpolar {

using Bits = std::vector<std::uint8_t>;

// Bhattacharyya parameters of the N = 2^levels synthesized channels,
// natural (non-bit-reversed) index order.
struct ChannelReliabilities {
    int levels = 0;
    double design_snr_db = 0.0;  // Es/N0 in dB used for the initial value
    std::vector<double> z;

    int block_length() const { return static_cast<int>(z.size()); }
};

// One polarization step in the equality (BEC) form:
// z^- = 2z - z^2, z^+ = z^2.
std::pair<double, double> polarize_step(double z);

// Runs the recursion for `levels` levels starting from
// z0 = exp(-Es/N0_linear). Index bit selects the transform, MSB first:
// bit 0 -> minus, bit 1 -> plus.
ChannelReliabilities build_reliabilities(int levels, double design_snr_db);

// A single polar code: index sets partition {0..N-1}. semi_set is the
// portion handed to an auxiliary code when the code is used as the inner
// part of an augmented construction; empty for a plain code.
struct CodeSpec {
    int n_total = 0;
    int k_info = 0;
    std::vector<int> info_set;    // sorted ascending
    std::vector<int> semi_set;    // sorted ascending
    std::vector<int> frozen_set;  // sorted ascending
    ChannelReliabilities reliabilities;
    // Realized channel-quality thresholds: z at the good/semi and semi/bad
    // rank boundaries. Reported for inspection, not used by any algorithm.
    double delta1 = 0.0;
    double delta2 = 0.0;

    int levels() const { return reliabilities.levels; }
    int semi_count() const { return static_cast<int>(semi_set.size()); }
};

// Ranks channels best-first (ascending z, ties by smaller index) and assigns
// the first k_info ranks to info, the next n_semi to semi, the rest frozen.
CodeSpec partition_channels(const ChannelReliabilities& rel, int k_info, int n_semi, int k_frozen);

// Plain code without a semipolarized set.
CodeSpec make_plain_code(int levels, int k_info, double design_snr_db);

}  // namespace augpolar
