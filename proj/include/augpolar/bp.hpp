#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "augpolar/construction.hpp"

namespace augpolar {

// LLR saturation. 40 keeps every exp() finite in double precision and acts
// as effective infinity for the hard decisions.
inline constexpr double kLlrClip = 40.0;
inline constexpr double kFrozenLlr = kLlrClip;

inline double clip_llr(double v) {
    if (v > kLlrClip) return kLlrClip;
    if (v < -kLlrClip) return -kLlrClip;
    return v;
}

// f(a,b) = ln((1+e^{a+b})/(e^a+e^b)), evaluated as
// sign(a)sign(b)min(|a|,|b|) + ln(1+e^{-|a+b|}) - ln(1+e^{-|a-b|}).
double box_plus(double a, double b);

// One processing element, the four update equations of the 2x2 node.
// Ports 1/2 are the upper/lower variable of the butterfly pair; L flows
// right-to-left, R left-to-right.
struct PeOutputs {
    double l_out1, l_out2, r_out1, r_out2;
};
PeOutputs pe_update(double l_in1, double l_in2, double r_in1, double r_in2);

// Message memory for one decoding frame: (levels+1) variable stages of N
// LLRs per direction, row-major [stage * N + index]. Stage 0 is the a-priori
// (message) side, stage `levels` the channel side. Row 0 of R and row
// `levels` of L are boundary inputs owned by the BoundaryCondition.
struct BpState {
    int levels = 0;
    int block_length = 0;
    std::vector<double> l_msg;
    std::vector<double> r_msg;

    explicit BpState(int levels_);
    void reset();

    double& l(int stage, int i) { return l_msg[static_cast<std::size_t>(stage) * block_length + i]; }
    double& r(int stage, int i) { return r_msg[static_cast<std::size_t>(stage) * block_length + i]; }
    double l(int stage, int i) const { return l_msg[static_cast<std::size_t>(stage) * block_length + i]; }
    double r(int stage, int i) const { return r_msg[static_cast<std::size_t>(stage) * block_length + i]; }
};

struct BoundaryCondition {
    std::vector<double> left_priors;   // injected as R at stage 0
    std::vector<double> right_priors;  // injected as L at stage `levels` (channel LLRs)
};

// Standard boundary: frozen positions pinned to +kFrozenLlr, info positions
// 0, semi positions 0 (the coupled decoder overwrites those between
// iterations).
BoundaryCondition make_boundary(const CodeSpec& spec, std::span<const double> channel_llrs);

// One full iteration over the natural-order butterfly graph: an R sweep from
// the a-priori side to the channel side, then an L sweep back. All N/2
// processing elements of a stage fire on the same input snapshot.
void iterate(BpState& state, const BoundaryCondition& bc);

struct HardDecision {
    Bits u_hat;  // a-priori side, L(u_i) = L_{0,i} + R_{0,i}
    Bits x_hat;  // channel side,  L(x_i) = L_{n,i} + R_{n,i}
};
HardDecision harden(const BpState& state, const BoundaryCondition& bc);

// G-matrix stopping check: the two hard-decision vectors form a consistent
// (input, codeword) pair.
bool converged(const Bits& u_hat, const Bits& x_hat);

struct BpOptions {
    int max_iters = 60;
    bool early_stop = false;
};

struct BpDecodeResult {
    Bits info;    // bits on info_set, ascending index order
    Bits u_hat;   // full length-N input estimate
    int iters_used = 0;
};

// Standalone BP decode of a single code (semi positions, if any, are treated
// as zero-prior unknowns and not reported).
BpDecodeResult bp_decode(const CodeSpec& spec, std::span<const double> channel_llrs,
                         const BpOptions& opts = {});

// Sum over codes of log2(N_i) * N_i / 2 processing elements.
std::uint64_t pe_count(std::span<const int> lengths);

}  // namespace augpolar
