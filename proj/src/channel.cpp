#include "augpolar/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "augpolar/bp.hpp"
#include "augpolar/rng.hpp"

namespace augpolar {

std::string to_string(SnrConvention c) {
    return c == SnrConvention::eb_n0 ? "EbN0" : "EsN0";
}

SnrConvention snr_convention_from_string(const std::string& s) {
    if (s == "EbN0" || s == "ebn0") return SnrConvention::eb_n0;
    if (s == "EsN0" || s == "esn0") return SnrConvention::es_n0;
    throw std::invalid_argument("unknown SNR convention: " + s);
}

double ChannelPoint::noise_var() const {
    const double snr_lin = std::pow(10.0, snr_db / 10.0);
    if (convention == SnrConvention::eb_n0) {
        if (rate <= 0.0) throw std::invalid_argument("ChannelPoint: rate must be positive for Eb/N0");
        return 1.0 / (2.0 * rate * snr_lin);
    }
    return 1.0 / (2.0 * snr_lin);
}

std::vector<double> modulate(const Bits& x) {
    std::vector<double> s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? -1.0 : 1.0;
    return s;
}

std::vector<double> transmit(std::span<const double> symbols, double noise_var,
                             std::mt19937_64& rng) {
    if (noise_var <= 0.0) throw std::invalid_argument("transmit: noise variance must be positive");
    const double sigma = std::sqrt(noise_var);
    GaussianSampler gauss;
    std::vector<double> y(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) y[i] = symbols[i] + sigma * gauss(rng);
    return y;
}

std::vector<double> llr_vector(std::span<const double> y, double noise_var) {
    if (noise_var <= 0.0) throw std::invalid_argument("llr_vector: noise variance must be positive");
    std::vector<double> llrs(y.size());
    const double scale = 2.0 / noise_var;
    for (std::size_t i = 0; i < y.size(); ++i) llrs[i] = clip_llr(scale * y[i]);
    return llrs;
}

}  // namespace augpolar
