#include "augpolar/coupling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "augpolar/codec.hpp"
#include "augpolar/rng.hpp"

namespace augpolar {

Permutation make_interleaver(int size, std::uint64_t seed) {
    if (size < 1) throw std::invalid_argument("make_interleaver: size must be >= 1");
    Permutation perm;
    perm.seed = seed;
    perm.forward.resize(size);
    std::iota(perm.forward.begin(), perm.forward.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = size - 1; i > 0; --i) {
        const int j = static_cast<int>(bounded_uniform(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(perm.forward[i], perm.forward[j]);
    }
    perm.inverse.resize(size);
    for (int i = 0; i < size; ++i) perm.inverse[perm.forward[i]] = i;
    return perm;
}

void validate_augmented(const AugmentedSpec& spec) {
    const int num_aux = static_cast<int>(spec.aux_codes.size());
    const int num_inner = static_cast<int>(spec.inner_codes.size());
    if (num_aux == 0 || num_inner == 0)
        throw std::invalid_argument("augmented spec: needs at least one aux and one inner code");
    if (static_cast<int>(spec.interleavers.size()) != num_aux)
        throw std::invalid_argument("augmented spec: one interleaver per aux code required");

    for (const CodeSpec& aux : spec.aux_codes)
        if (!aux.semi_set.empty())
            throw std::invalid_argument("augmented spec: aux codes must have empty semi sets");
    for (const CodeSpec& inner : spec.inner_codes)
        if (inner.semi_set.empty())
            throw std::invalid_argument("augmented spec: inner codes must have semi positions");

    std::vector<std::vector<std::pair<int, int>>> aux_ranges(num_aux);  // (offset, count)
    std::vector<int> into_inner(num_inner, 0);
    for (const CouplingEdge& e : spec.edges) {
        if (e.aux_id < 0 || e.aux_id >= num_aux || e.inner_id < 0 || e.inner_id >= num_inner)
            throw std::invalid_argument("augmented spec: edge references unknown code");
        if (e.count <= 0 || e.offset < 0)
            throw std::invalid_argument("augmented spec: edge count/offset out of range");
        aux_ranges[e.aux_id].emplace_back(e.offset, e.count);
        into_inner[e.inner_id] += e.count;
    }
    for (int a = 0; a < num_aux; ++a) {
        auto& ranges = aux_ranges[a];
        std::sort(ranges.begin(), ranges.end());
        int expect = 0;
        for (const auto& [offset, count] : ranges) {
            if (offset != expect)
                throw std::invalid_argument("augmented spec: aux edge offsets must tile [0, N_aux)");
            expect = offset + count;
        }
        if (expect != spec.aux_codes[a].n_total)
            throw std::invalid_argument("augmented spec: aux edge counts must sum to N_aux");
        if (spec.interleavers[a].size() != spec.aux_codes[a].n_total)
            throw std::invalid_argument("augmented spec: interleaver size must equal N_aux");
    }
    for (int i = 0; i < num_inner; ++i)
        if (into_inner[i] != spec.inner_codes[i].semi_count())
            throw std::invalid_argument("augmented spec: incoming edge counts must fill the semi set");
}

namespace {

// First semi-set slot used by each edge in its target inner code; edges fill
// inner semi positions in list order, ascending index within each edge.
std::vector<int> edge_semi_starts(const AugmentedSpec& spec) {
    std::vector<int> starts(spec.edges.size(), 0);
    std::vector<int> cursor(spec.inner_codes.size(), 0);
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        starts[e] = cursor[spec.edges[e].inner_id];
        cursor[spec.edges[e].inner_id] += spec.edges[e].count;
    }
    return starts;
}

std::vector<int> inner_offsets(const AugmentedSpec& spec) {
    std::vector<int> offs(spec.inner_codes.size() + 1, 0);
    for (std::size_t i = 0; i < spec.inner_codes.size(); ++i)
        offs[i + 1] = offs[i] + spec.inner_codes[i].n_total;
    return offs;
}

}  // namespace

AugmentedSpec make_augmented(std::vector<CodeSpec> inner_codes, std::vector<CodeSpec> aux_codes,
                             std::vector<CouplingEdge> edges, std::uint64_t interleaver_seed) {
    AugmentedSpec spec;
    spec.inner_codes = std::move(inner_codes);
    spec.aux_codes = std::move(aux_codes);
    spec.edges = std::move(edges);
    if (!spec.inner_codes.empty())
        spec.design_snr_db = spec.inner_codes.front().reliabilities.design_snr_db;
    for (std::size_t a = 0; a < spec.aux_codes.size(); ++a)
        spec.interleavers.push_back(
            make_interleaver(spec.aux_codes[a].n_total, derive_seed(interleaver_seed, a)));

    spec.total_n = 0;
    spec.total_k = 0;
    for (const CodeSpec& c : spec.inner_codes) {
        spec.total_n += c.n_total;
        spec.total_k += c.k_info;
    }
    for (const CodeSpec& c : spec.aux_codes) spec.total_k += c.k_info;

    validate(spec);
    return spec;
}

AugmentedSpec build_setup(int id, double design_snr_db, std::uint64_t interleaver_seed) {
    std::vector<CodeSpec> inner, aux;
    std::vector<CouplingEdge> edges;
    switch (id) {
        case 1:
            aux.push_back(partition_channels(build_reliabilities(8, design_snr_db), 128, 0, 128));
            inner.push_back(
                partition_channels(build_reliabilities(12, design_snr_db), 1920, 256, 1920));
            edges.push_back({0, 0, 256, 0});
            break;
        case 2:
            aux.push_back(partition_channels(build_reliabilities(8, design_snr_db), 128, 0, 128));
            inner.push_back(
                partition_channels(build_reliabilities(11, design_snr_db), 960, 128, 960));
            inner.push_back(
                partition_channels(build_reliabilities(10, design_snr_db), 448, 128, 448));
            edges.push_back({0, 0, 128, 0});
            edges.push_back({0, 1, 128, 128});
            break;
        case 3:
            for (int i = 0; i < 4; ++i)
                aux.push_back(partition_channels(build_reliabilities(7, design_snr_db), 64, 0, 64));
            for (int i = 0; i < 4; ++i)
                inner.push_back(
                    partition_channels(build_reliabilities(10, design_snr_db), 448, 128, 448));
            // ring: aux i sends its first half to inner i, second half to inner i+1
            for (int i = 0; i < 4; ++i) {
                edges.push_back({i, i, 64, 0});
                edges.push_back({i, (i + 1) % 4, 64, 64});
            }
            break;
        default:
            throw std::invalid_argument("build_setup: id must be 1, 2 or 3");
    }
    return make_augmented(std::move(inner), std::move(aux), std::move(edges), interleaver_seed);
}

Bits encode_augmented(const AugmentedSpec& spec, const Bits& info_bits) {
    if (static_cast<int>(info_bits.size()) != spec.total_k)
        throw std::invalid_argument("encode_augmented: info length mismatch");

    const std::vector<int> semi_starts = edge_semi_starts(spec);
    std::size_t info_pos = 0;

    // aux codewords, interleaved
    std::vector<Bits> interleaved(spec.aux_codes.size());
    for (std::size_t a = 0; a < spec.aux_codes.size(); ++a) {
        const CodeSpec& code = spec.aux_codes[a];
        const Bits slice(info_bits.begin() + info_pos, info_bits.begin() + info_pos + code.k_info);
        info_pos += code.k_info;
        const Bits codeword = encode(assemble_input(code, slice, {}));
        Bits& t = interleaved[a];
        t.resize(code.n_total);
        for (int i = 0; i < code.n_total; ++i) t[i] = codeword[spec.interleavers[a].forward[i]];
    }

    // scatter to the inner codes' semi positions
    std::vector<Bits> semi_bits(spec.inner_codes.size());
    for (std::size_t i = 0; i < spec.inner_codes.size(); ++i)
        semi_bits[i].resize(spec.inner_codes[i].semi_count());
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        const CouplingEdge& edge = spec.edges[e];
        for (int k = 0; k < edge.count; ++k)
            semi_bits[edge.inner_id][semi_starts[e] + k] = interleaved[edge.aux_id][edge.offset + k];
    }

    Bits out;
    out.reserve(spec.total_n);
    for (std::size_t i = 0; i < spec.inner_codes.size(); ++i) {
        const CodeSpec& code = spec.inner_codes[i];
        const Bits slice(info_bits.begin() + info_pos, info_bits.begin() + info_pos + code.k_info);
        info_pos += code.k_info;
        const Bits codeword = encode(assemble_input(code, slice, semi_bits[i]));
        out.insert(out.end(), codeword.begin(), codeword.end());
    }
    return out;
}

std::uint64_t pe_count(const AugmentedSpec& spec) {
    std::vector<int> lengths;
    for (const CodeSpec& c : spec.inner_codes) lengths.push_back(c.n_total);
    for (const CodeSpec& c : spec.aux_codes) lengths.push_back(c.n_total);
    return pe_count(lengths);
}

namespace {

struct JointDecoder {
    const AugmentedSpec& spec;
    std::vector<int> semi_starts;
    std::vector<int> offsets;
    std::vector<BpState> inner_states;
    std::vector<BpState> aux_states;
    std::vector<BoundaryCondition> inner_bcs;
    std::vector<BoundaryCondition> aux_bcs;

    JointDecoder(const AugmentedSpec& spec_, std::span<const double> channel_llrs)
        : spec(spec_), semi_starts(edge_semi_starts(spec_)), offsets(inner_offsets(spec_)) {
        if (static_cast<int>(channel_llrs.size()) != spec.total_n)
            throw std::invalid_argument("decode_augmented: channel LLR length mismatch");
        for (std::size_t i = 0; i < spec.inner_codes.size(); ++i) {
            const CodeSpec& code = spec.inner_codes[i];
            inner_states.emplace_back(code.levels());
            inner_bcs.push_back(
                make_boundary(code, channel_llrs.subspan(offsets[i], code.n_total)));
        }
        for (const CodeSpec& code : spec.aux_codes) {
            aux_states.emplace_back(code.levels());
            // right boundary starts at zero; the gather step feeds it
            aux_bcs.push_back(make_boundary(code, std::vector<double>(code.n_total, 0.0)));
        }
    }

    void inner_iteration() {
        for (std::size_t i = 0; i < inner_states.size(); ++i)
            iterate(inner_states[i], inner_bcs[i]);
    }

    // inner leftmost-stage L messages on semi positions -> deinterleave ->
    // aux right boundary
    void gather_to_aux() {
        std::vector<std::vector<double>> gathered(spec.aux_codes.size());
        for (std::size_t a = 0; a < spec.aux_codes.size(); ++a)
            gathered[a].resize(spec.aux_codes[a].n_total);
        for (std::size_t e = 0; e < spec.edges.size(); ++e) {
            const CouplingEdge& edge = spec.edges[e];
            const CodeSpec& inner = spec.inner_codes[edge.inner_id];
            const BpState& state = inner_states[edge.inner_id];
            for (int k = 0; k < edge.count; ++k) {
                const int pos = inner.semi_set[semi_starts[e] + k];
                gathered[edge.aux_id][edge.offset + k] = state.l(0, pos);
            }
        }
        for (std::size_t a = 0; a < spec.aux_codes.size(); ++a) {
            const Permutation& perm = spec.interleavers[a];
            std::vector<double>& right = aux_bcs[a].right_priors;
            for (int i = 0; i < perm.size(); ++i)
                right[perm.forward[i]] = clip_llr(gathered[a][i]);
        }
    }

    void aux_iteration() {
        for (std::size_t a = 0; a < aux_states.size(); ++a)
            iterate(aux_states[a], aux_bcs[a]);
    }

    // aux rightmost-stage R messages -> interleave -> inner semi priors
    void scatter_to_inner() {
        for (std::size_t e = 0; e < spec.edges.size(); ++e) {
            const CouplingEdge& edge = spec.edges[e];
            const CodeSpec& inner = spec.inner_codes[edge.inner_id];
            const BpState& aux = aux_states[edge.aux_id];
            const Permutation& perm = spec.interleavers[edge.aux_id];
            for (int k = 0; k < edge.count; ++k) {
                const int pos = inner.semi_set[semi_starts[e] + k];
                const double r_out = aux.r(aux.levels, perm.forward[edge.offset + k]);
                inner_bcs[edge.inner_id].left_priors[pos] = clip_llr(r_out);
            }
        }
    }

    bool all_converged(bool with_aux) const {
        for (std::size_t i = 0; i < inner_states.size(); ++i) {
            const HardDecision hd = harden(inner_states[i], inner_bcs[i]);
            if (!converged(hd.u_hat, hd.x_hat)) return false;
        }
        if (with_aux) {
            for (std::size_t a = 0; a < aux_states.size(); ++a) {
                const HardDecision hd = harden(aux_states[a], aux_bcs[a]);
                if (!converged(hd.u_hat, hd.x_hat)) return false;
            }
        }
        return true;
    }

    // Eq-(5)/(6) style extraction: a-posteriori L+R at the leftmost stage.
    Bits extract_info(const std::vector<Bits>& aux_info) const {
        Bits info;
        info.reserve(spec.total_k);
        for (std::size_t a = 0; a < spec.aux_codes.size(); ++a)
            info.insert(info.end(), aux_info[a].begin(), aux_info[a].end());
        for (std::size_t i = 0; i < spec.inner_codes.size(); ++i) {
            const CodeSpec& code = spec.inner_codes[i];
            const BpState& state = inner_states[i];
            const BoundaryCondition& bc = inner_bcs[i];
            for (int pos : code.info_set)
                info.push_back((state.l(0, pos) + bc.left_priors[pos]) < 0.0 ? 1 : 0);
        }
        return info;
    }

    Bits aux_info_from_state(std::size_t a) const {
        const CodeSpec& code = spec.aux_codes[a];
        const BpState& state = aux_states[a];
        const BoundaryCondition& bc = aux_bcs[a];
        Bits info;
        info.reserve(code.info_set.size());
        for (int pos : code.info_set)
            info.push_back((state.l(0, pos) + bc.left_priors[pos]) < 0.0 ? 1 : 0);
        return info;
    }
};

}  // namespace

AugDecodeResult decode_augmented(const AugmentedSpec& spec, std::span<const double> channel_llrs,
                                 const AugDecodeOptions& opts) {
    JointDecoder dec(spec, channel_llrs);

    int iters = 0;
    while (iters < opts.max_iters) {
        dec.inner_iteration();
        dec.gather_to_aux();
        dec.aux_iteration();
        dec.scatter_to_inner();
        ++iters;
        if (opts.early_stop && dec.all_converged(true)) break;
    }

    AugDecodeResult res;
    res.iters_used = iters;
    std::vector<Bits> aux_info(spec.aux_codes.size());
    for (std::size_t a = 0; a < spec.aux_codes.size(); ++a)
        aux_info[a] = dec.aux_info_from_state(a);
    res.info = dec.extract_info(aux_info);
    return res;
}

AugDecodeResult uncoupled_baseline(const AugmentedSpec& spec, std::span<const double> channel_llrs,
                                   const AugDecodeOptions& opts) {
    JointDecoder dec(spec, channel_llrs);

    int iters = 0;
    while (iters < opts.max_iters) {
        dec.inner_iteration();
        ++iters;
        if (opts.early_stop && dec.all_converged(false)) break;
    }

    // One final gather feeds standalone aux decodes on the deinterleaved
    // semi LLRs (the semi priors stayed zero throughout, so these are the
    // inner decoders' own beliefs only).
    dec.gather_to_aux();
    BpOptions bp_opts{opts.max_iters, opts.early_stop};
    std::vector<Bits> aux_info(spec.aux_codes.size());
    for (std::size_t a = 0; a < spec.aux_codes.size(); ++a) {
        std::vector<double> llrs(spec.aux_codes[a].n_total);
        for (int i = 0; i < spec.aux_codes[a].n_total; ++i)
            llrs[i] = dec.aux_bcs[a].right_priors[i];
        aux_info[a] = bp_decode(spec.aux_codes[a], llrs, bp_opts).info;
    }

    AugDecodeResult res;
    res.iters_used = iters;
    res.info = dec.extract_info(aux_info);
    return res;
}

}  // namespace augpolar
