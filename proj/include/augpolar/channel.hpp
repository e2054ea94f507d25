#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "augpolar/construction.hpp"

namespace augpolar {

enum class SnrConvention { eb_n0, es_n0 };

std::string to_string(SnrConvention c);
SnrConvention snr_convention_from_string(const std::string& s);

// One simulated SNR point. With unit-energy BPSK the per-dimension noise
// variance is sigma^2 = 1/(2 R 10^(EbN0/10)) under Eb/N0 and
// sigma^2 = 1/(2 10^(EsN0/10)) under Es/N0.
struct ChannelPoint {
    double snr_db = 0.0;
    SnrConvention convention = SnrConvention::eb_n0;
    double rate = 0.5;

    double noise_var() const;
};

// BPSK: bit 0 -> +1.0, bit 1 -> -1.0
std::vector<double> modulate(const Bits& x);

// y_i = s_i + n_i with n_i i.i.d. N(0, noise_var) drawn from rng
std::vector<double> transmit(std::span<const double> symbols, double noise_var,
                             std::mt19937_64& rng);

// L_i = 2 y_i / sigma^2, clipped to the working LLR range
std::vector<double> llr_vector(std::span<const double> y, double noise_var);

}  // namespace augpolar
