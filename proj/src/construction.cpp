#include "augpolar/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>

namespace augpolar {

std::pair<double, double> polarize_step(double z) {
    if (!(z >= 0.0 && z <= 1.0))
        throw std::invalid_argument("polarize_step: z must be in [0,1]");
    return {2.0 * z - z * z, z * z};
}

namespace {

void fill_recursive(std::span<double> out, double z) {
    if (out.size() == 1) {
        out[0] = z;
        return;
    }
    const auto [z_minus, z_plus] = polarize_step(z);
    const std::size_t half = out.size() / 2;
    fill_recursive(out.first(half), z_minus);  // MSB clear
    fill_recursive(out.subspan(half), z_plus); // MSB set
}

}  // namespace

ChannelReliabilities build_reliabilities(int levels, double design_snr_db) {
    if (levels < 0)
        throw std::invalid_argument("build_reliabilities: levels must be >= 0");
    ChannelReliabilities rel;
    rel.levels = levels;
    rel.design_snr_db = design_snr_db;
    rel.z.resize(std::size_t{1} << levels);
    const double es_n0 = std::pow(10.0, design_snr_db / 10.0);
    fill_recursive(rel.z, std::exp(-es_n0));
    return rel;
}

CodeSpec partition_channels(const ChannelReliabilities& rel, int k_info, int n_semi, int k_frozen) {
    const int n_total = rel.block_length();
    if (k_info < 0 || n_semi < 0 || k_frozen < 0 || k_info + n_semi + k_frozen != n_total)
        throw std::invalid_argument("partition_channels: counts must be nonnegative and sum to N");

    std::vector<int> rank(n_total);
    std::iota(rank.begin(), rank.end(), 0);
    // stable sort on z keeps the smaller index first on exact ties
    std::stable_sort(rank.begin(), rank.end(),
                     [&rel](int a, int b) { return rel.z[a] < rel.z[b]; });

    CodeSpec spec;
    spec.n_total = n_total;
    spec.k_info = k_info;
    spec.reliabilities = rel;
    spec.info_set.assign(rank.begin(), rank.begin() + k_info);
    spec.semi_set.assign(rank.begin() + k_info, rank.begin() + k_info + n_semi);
    spec.frozen_set.assign(rank.begin() + k_info + n_semi, rank.end());
    std::sort(spec.info_set.begin(), spec.info_set.end());
    std::sort(spec.semi_set.begin(), spec.semi_set.end());
    std::sort(spec.frozen_set.begin(), spec.frozen_set.end());

    spec.delta1 = k_info > 0 ? rel.z[rank[k_info - 1]] : 0.0;
    spec.delta2 = n_semi > 0 ? rel.z[rank[k_info + n_semi - 1]] : spec.delta1;
    return spec;
}

CodeSpec make_plain_code(int levels, int k_info, double design_snr_db) {
    const ChannelReliabilities rel = build_reliabilities(levels, design_snr_db);
    return partition_channels(rel, k_info, 0, rel.block_length() - k_info);
}

}  // namespace augpolar
