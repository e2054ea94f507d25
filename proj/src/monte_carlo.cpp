#include "augpolar/monte_carlo.hpp"

#include <algorithm>

#include "augpolar/codec.hpp"
#include "augpolar/rng.hpp"

namespace augpolar {

int info_length(const System& system) {
    if (const auto* plain = std::get_if<CodeSpec>(&system)) return plain->k_info;
    return std::get<AugmentedSpec>(system).total_k;
}

int block_length(const System& system) {
    if (const auto* plain = std::get_if<CodeSpec>(&system)) return plain->n_total;
    return std::get<AugmentedSpec>(system).total_n;
}

double code_rate(const System& system) {
    return static_cast<double>(info_length(system)) / block_length(system);
}

namespace {

struct FrameOutcome {
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_error = 0;
    std::uint64_t iters = 0;
};

FrameOutcome simulate_frame(const System& system, double noise_var, std::uint64_t frame_seed,
                            const SimOptions& opts) {
    std::mt19937_64 rng(frame_seed);

    const int k = info_length(system);
    Bits info(k);
    for (int i = 0; i < k; ++i) info[i] = static_cast<std::uint8_t>(rng() & 1u);

    Bits tx;
    if (const auto* plain = std::get_if<CodeSpec>(&system)) {
        tx = encode(assemble_input(*plain, info, Bits(plain->semi_set.size(), 0)));
    } else {
        tx = encode_augmented(std::get<AugmentedSpec>(system), info);
    }

    const std::vector<double> symbols = modulate(tx);
    const std::vector<double> received = transmit(symbols, noise_var, rng);
    const std::vector<double> llrs = llr_vector(received, noise_var);

    Bits decoded;
    FrameOutcome out;
    if (const auto* plain = std::get_if<CodeSpec>(&system)) {
        BpDecodeResult res = bp_decode(*plain, llrs, {opts.max_iters, opts.early_stop});
        decoded = std::move(res.info);
        out.iters = static_cast<std::uint64_t>(res.iters_used);
    } else {
        const AugmentedSpec& aug = std::get<AugmentedSpec>(system);
        const AugDecodeOptions dec_opts{opts.max_iters, opts.early_stop};
        AugDecodeResult res = opts.coupled ? decode_augmented(aug, llrs, dec_opts)
                                           : uncoupled_baseline(aug, llrs, dec_opts);
        decoded = std::move(res.info);
        out.iters = static_cast<std::uint64_t>(res.iters_used);
    }

    for (int i = 0; i < k; ++i) out.bit_errors += (decoded[i] != info[i]) ? 1u : 0u;
    out.frame_error = out.bit_errors > 0 ? 1u : 0u;
    return out;
}

struct Tally {
    std::uint64_t frames = 0, bit_errors = 0, frame_errors = 0, iter_sum = 0;
};

SimResult finish(const System& system, const ChannelPoint& point, std::uint64_t seed,
                 const Tally& t) {
    SimResult res;
    res.point = point;
    res.frames = t.frames;
    res.bit_errors = t.bit_errors;
    res.frame_errors = t.frame_errors;
    res.info_bits_total = t.frames * static_cast<std::uint64_t>(info_length(system));
    res.ber = t.frames ? static_cast<double>(t.bit_errors) / static_cast<double>(res.info_bits_total)
                       : 0.0;
    res.fer = t.frames ? static_cast<double>(t.frame_errors) / static_cast<double>(t.frames) : 0.0;
    res.avg_iters = t.frames ? static_cast<double>(t.iter_sum) / static_cast<double>(t.frames) : 0.0;
    res.seed = seed;
    return res;
}

}  // namespace

SimResult run_point(const System& system, const ChannelPoint& point, const StopRule& stop,
                    std::uint64_t seed, const SimOptions& opts) {
    const double noise_var = point.noise_var();
    Tally t;
    std::uint64_t bit_errors = 0, frame_errors = 0, iter_sum = 0;
    while (t.frames < stop.max_frames && frame_errors < stop.min_frame_errors) {
        const std::uint64_t batch = std::min(kFrameBatch, stop.max_frames - t.frames);
        const std::int64_t first = static_cast<std::int64_t>(t.frames);
        const std::int64_t last = first + static_cast<std::int64_t>(batch);
#pragma omp parallel for schedule(dynamic) reduction(+ : bit_errors, frame_errors, iter_sum)
        for (std::int64_t f = first; f < last; ++f) {
            const FrameOutcome o = simulate_frame(
                system, noise_var, derive_seed(seed, static_cast<std::uint64_t>(f)), opts);
            bit_errors += o.bit_errors;
            frame_errors += o.frame_error;
            iter_sum += o.iters;
        }
        t.frames += batch;
    }
    t.bit_errors = bit_errors;
    t.frame_errors = frame_errors;
    t.iter_sum = iter_sum;
    return finish(system, point, seed, t);
}

SimResult run_point_serial(const System& system, const ChannelPoint& point, const StopRule& stop,
                           std::uint64_t seed, const SimOptions& opts) {
    const double noise_var = point.noise_var();
    Tally t;
    while (t.frames < stop.max_frames && t.frame_errors < stop.min_frame_errors) {
        const std::uint64_t batch = std::min(kFrameBatch, stop.max_frames - t.frames);
        for (std::uint64_t f = t.frames; f < t.frames + batch; ++f) {
            const FrameOutcome o = simulate_frame(system, noise_var, derive_seed(seed, f), opts);
            t.bit_errors += o.bit_errors;
            t.frame_errors += o.frame_error;
            t.iter_sum += o.iters;
        }
        t.frames += batch;
    }
    return finish(system, point, seed, t);
}

std::vector<SimResult> run_sweep(const System& system, const std::vector<ChannelPoint>& points,
                                 const StopRule& stop, std::uint64_t base_seed,
                                 const SimOptions& opts, bool parallel) {
    std::vector<SimResult> results;
    results.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        results.push_back(parallel ? run_point(system, points[i], stop, seed, opts)
                                   : run_point_serial(system, points[i], stop, seed, opts));
    }
    return results;
}

}  // namespace augpolar
