#include "augpolar/bp.hpp"

#include <cmath>
#include <stdexcept>

#include "augpolar/codec.hpp"

namespace augpolar {

double box_plus(double a, double b) {
    const double mag = std::min(std::fabs(a), std::fabs(b));
    const double sgn = ((a < 0.0) != (b < 0.0)) ? -1.0 : 1.0;
    return sgn * mag + std::log1p(std::exp(-std::fabs(a + b))) -
           std::log1p(std::exp(-std::fabs(a - b)));
}

PeOutputs pe_update(double l_in1, double l_in2, double r_in1, double r_in2) {
    PeOutputs out;
    out.l_out1 = clip_llr(box_plus(l_in1, l_in2 + r_in2));
    out.r_out1 = clip_llr(box_plus(r_in1, l_in2 + r_in2));
    const double cross = box_plus(r_in1, l_in1);
    out.l_out2 = clip_llr(cross + l_in2);
    out.r_out2 = clip_llr(cross + r_in2);
    return out;
}

BpState::BpState(int levels_)
    : levels(levels_),
      block_length(1 << levels_),
      l_msg(static_cast<std::size_t>(levels_ + 1) << levels_, 0.0),
      r_msg(static_cast<std::size_t>(levels_ + 1) << levels_, 0.0) {}

void BpState::reset() {
    std::fill(l_msg.begin(), l_msg.end(), 0.0);
    std::fill(r_msg.begin(), r_msg.end(), 0.0);
}

BoundaryCondition make_boundary(const CodeSpec& spec, std::span<const double> channel_llrs) {
    if (static_cast<int>(channel_llrs.size()) != spec.n_total)
        throw std::invalid_argument("make_boundary: channel LLR length mismatch");
    BoundaryCondition bc;
    bc.left_priors.assign(spec.n_total, 0.0);
    for (int i : spec.frozen_set) bc.left_priors[i] = kFrozenLlr;
    bc.right_priors.assign(channel_llrs.begin(), channel_llrs.end());
    for (double& v : bc.right_priors) v = clip_llr(v);
    return bc;
}

void iterate(BpState& state, const BoundaryCondition& bc) {
    const int n = state.block_length;
    const int stages = state.levels;
    if (static_cast<int>(bc.left_priors.size()) != n ||
        static_cast<int>(bc.right_priors.size()) != n)
        throw std::invalid_argument("iterate: boundary size mismatch");

    double* lm = state.l_msg.data();
    double* rm = state.r_msg.data();
    std::copy(bc.left_priors.begin(), bc.left_priors.end(), rm);
    std::copy(bc.right_priors.begin(), bc.right_priors.end(), lm + static_cast<std::size_t>(stages) * n);

    // PE stage s couples variables (p, p + 2^s) between variable stages s
    // and s+1. Within a stage every PE reads only stage-s R and stage-(s+1)
    // L values, so the visit order inside a stage is immaterial.

    // R sweep, a-priori side towards channel side
    for (int s = 0; s < stages; ++s) {
        const int half = 1 << s;
        const double* l_right = lm + static_cast<std::size_t>(s + 1) * n;
        const double* r_left = rm + static_cast<std::size_t>(s) * n;
        double* r_right = rm + static_cast<std::size_t>(s + 1) * n;
        for (int base = 0; base < n; base += 2 * half) {
            for (int k = 0; k < half; ++k) {
                const int p = base + k;
                const int q = p + half;
                const double sum2 = l_right[q] + r_left[q];
                r_right[p] = clip_llr(box_plus(r_left[p], sum2));
                r_right[q] = clip_llr(box_plus(r_left[p], l_right[p]) + r_left[q]);
            }
        }
    }

    // L sweep, channel side back to a-priori side
    for (int s = stages - 1; s >= 0; --s) {
        const int half = 1 << s;
        const double* l_right = lm + static_cast<std::size_t>(s + 1) * n;
        const double* r_left = rm + static_cast<std::size_t>(s) * n;
        double* l_left = lm + static_cast<std::size_t>(s) * n;
        for (int base = 0; base < n; base += 2 * half) {
            for (int k = 0; k < half; ++k) {
                const int p = base + k;
                const int q = p + half;
                const double sum2 = l_right[q] + r_left[q];
                l_left[p] = clip_llr(box_plus(l_right[p], sum2));
                l_left[q] = clip_llr(box_plus(r_left[p], l_right[p]) + l_right[q]);
            }
        }
    }
}

HardDecision harden(const BpState& state, const BoundaryCondition& bc) {
    const int n = state.block_length;
    HardDecision hd;
    hd.u_hat.resize(n);
    hd.x_hat.resize(n);
    for (int i = 0; i < n; ++i) {
        hd.u_hat[i] = (state.l(0, i) + bc.left_priors[i]) < 0.0 ? 1 : 0;
        hd.x_hat[i] = (bc.right_priors[i] + state.r(state.levels, i)) < 0.0 ? 1 : 0;
    }
    return hd;
}

bool converged(const Bits& u_hat, const Bits& x_hat) {
    return encode(u_hat) == x_hat;
}

BpDecodeResult bp_decode(const CodeSpec& spec, std::span<const double> channel_llrs,
                         const BpOptions& opts) {
    BpState state(spec.levels());
    const BoundaryCondition bc = make_boundary(spec, channel_llrs);

    BpDecodeResult res;
    int iters = 0;
    while (iters < opts.max_iters) {
        iterate(state, bc);
        ++iters;
        if (opts.early_stop) {
            const HardDecision hd = harden(state, bc);
            if (converged(hd.u_hat, hd.x_hat)) break;
        }
    }
    res.iters_used = iters;

    const HardDecision hd = harden(state, bc);
    res.u_hat = hd.u_hat;
    res.info.reserve(spec.info_set.size());
    for (int i : spec.info_set) res.info.push_back(hd.u_hat[i]);
    return res;
}

std::uint64_t pe_count(std::span<const int> lengths) {
    std::uint64_t total = 0;
    for (int len : lengths) {
        if (len <= 0 || (len & (len - 1)) != 0)
            throw std::invalid_argument("pe_count: lengths must be powers of two");
        int log2n = 0;
        while ((1 << log2n) < len) ++log2n;
        total += static_cast<std::uint64_t>(log2n) * (static_cast<std::uint64_t>(len) / 2);
    }
    return total;
}

}  // namespace augpolar
