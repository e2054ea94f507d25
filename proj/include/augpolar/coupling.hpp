#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "augpolar/bp.hpp"
#include "augpolar/construction.hpp"

namespace augpolar {

// Seeded pseudo-random interleaver. interleave: out[i] = in[forward[i]].
struct Permutation {
    std::uint64_t seed = 0;
    std::vector<int> forward;
    std::vector<int> inverse;

    int size() const { return static_cast<int>(forward.size()); }
};

// Uniform permutation by Fisher-Yates over a seeded mt19937_64; identical
// (size, seed) always yields the identical permutation, on any platform.
Permutation make_interleaver(int size, std::uint64_t seed);

// `count` interleaved auxiliary codeword symbols, starting at `offset`,
// routed to the semipolarized positions of one inner code.
struct CouplingEdge {
    int aux_id = 0;
    int inner_id = 0;
    int count = 0;
    int offset = 0;
};

// A coupling graph: inner codes transmit, auxiliary codes ride on the inner
// codes' semipolarized positions. Covers serial augmentation (1 inner /
// 1 aux), flexible-length parallel coupling (2 inner / 1 aux) and the
// four-code ring, plus arbitrary graphs with the same conservation laws.
struct AugmentedSpec {
    std::vector<CodeSpec> inner_codes;
    std::vector<CodeSpec> aux_codes;
    std::vector<CouplingEdge> edges;
    std::vector<Permutation> interleavers;  // one per aux code
    int total_n = 0;                        // sum of inner lengths
    int total_k = 0;                        // sum of all info counts
    double design_snr_db = 0.0;

    double rate() const { return static_cast<double>(total_k) / total_n; }
};

// Conservation laws: edge counts out of each aux sum to N_aux with offsets
// tiling [0, N_aux); counts into each inner sum to its semi count; aux codes
// carry no semi positions. Throws std::invalid_argument on violation.
void validate_augmented(const AugmentedSpec& spec);

// Builds the spec from parts and derives one interleaver per aux code from
// the base seed; validated before returning.
AugmentedSpec make_augmented(std::vector<CodeSpec> inner_codes, std::vector<CodeSpec> aux_codes,
                             std::vector<CouplingEdge> edges, std::uint64_t interleaver_seed);

// The three published configurations, all total rate 1/2:
//   1: serial augmentation, aux 256 into inner 4096
//   2: flexible length N=3072, aux 256 split across inner 2048 + 1024
//   3: ring of four aux 128 coupling four inner 1024
AugmentedSpec build_setup(int id, double design_snr_db, std::uint64_t interleaver_seed = 1);

// Info layout: auxiliary codes first, then inner codes, each code's bits in
// ascending position order.
Bits encode_augmented(const AugmentedSpec& spec, const Bits& info_bits);

std::uint64_t pe_count(const AugmentedSpec& spec);

struct AugDecodeOptions {
    int max_iters = 60;
    bool early_stop = false;
};

struct AugDecodeResult {
    Bits info;           // same layout as encode_augmented input
    int iters_used = 0;  // global iterations executed
};

// Joint iterative schedule: per global iteration each inner decoder runs one
// BP iteration, the leftmost-stage L messages on semi positions travel
// through the deinterleavers to the aux decoders' right boundaries, each aux
// decoder runs one BP iteration, and the aux right-boundary R messages come
// back through the interleavers as priors on the inner semi positions. Only
// extrinsic boundary messages cross the interface.
AugDecodeResult decode_augmented(const AugmentedSpec& spec, std::span<const double> channel_llrs,
                                 const AugDecodeOptions& opts = {});

// Same inner decoders with the exchange switched off (semi priors held at
// zero); aux info is recovered afterwards by standalone BP decodes on the
// deinterleaved semi LLRs.
AugDecodeResult uncoupled_baseline(const AugmentedSpec& spec, std::span<const double> channel_llrs,
                                   const AugDecodeOptions& opts = {});

}  // namespace augpolar
