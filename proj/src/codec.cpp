#include "augpolar/codec.hpp"

#include <stdexcept>

namespace augpolar {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void encode_inplace(Bits& u) {
    const std::size_t n = u.size();
    if (!is_power_of_two(n))
        throw std::invalid_argument("encode: length must be a power of two");
    for (std::size_t half = n / 2; half >= 1; half /= 2)
        for (std::size_t start = 0; start < n; start += 2 * half)
            for (std::size_t i = start; i < start + half; ++i)
                u[i] ^= u[i + half];
}

Bits encode(Bits u) {
    encode_inplace(u);
    return u;
}

Bits encode_matrix_oracle(const Bits& u) {
    const std::size_t n = u.size();
    if (!is_power_of_two(n))
        throw std::invalid_argument("encode_matrix_oracle: length must be a power of two");
    if (n > 4096)
        throw std::invalid_argument("encode_matrix_oracle: N > 4096 not supported");

    // G = F^{kron n} built row by row: G_1 = [1], and
    // G_{2m} = [[G_m, 0], [G_m, G_m]] for row blocks (u1, u2).
    std::vector<Bits> g(n, Bits(n, 0));
    g[0][0] = 1;
    for (std::size_t m = 1; m < n; m *= 2) {
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                const std::uint8_t v = g[r][c];
                g[r + m][c] = v;
                g[r + m][c + m] = v;
            }
        }
    }

    Bits x(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (!u[r]) continue;
        for (std::size_t c = 0; c < n; ++c) x[c] ^= g[r][c];
    }
    return x;
}

Bits assemble_input(const CodeSpec& spec, const Bits& info_bits, const Bits& semi_bits) {
    if (info_bits.size() != spec.info_set.size())
        throw std::invalid_argument("assemble_input: info length mismatch");
    if (semi_bits.size() != spec.semi_set.size())
        throw std::invalid_argument("assemble_input: semi length mismatch");

    Bits u(spec.n_total, 0);
    for (std::size_t i = 0; i < info_bits.size(); ++i) u[spec.info_set[i]] = info_bits[i];
    for (std::size_t i = 0; i < semi_bits.size(); ++i) u[spec.semi_set[i]] = semi_bits[i];
    return u;
}

}  // namespace augpolar
