// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_OPPONENCY_HPP
#define SPIKESAL_OPPONENCY_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "spikesal/convolve.hpp"
#include "spikesal/kernel.hpp"
#include "spikesal/stimulus.hpp"

namespace spikesal {

/// The four center-surround pairings present in the V1 color model.
enum class OpponentPair {
    RedGreen,     // red center, green surround
    GreenRed,     // green center, red surround
    YellowBlue,   // yellow center, blue surround
    BlueYellow,   // blue center, yellow surround
};

constexpr std::array<OpponentPair, 4> kOpponentPairs{
    OpponentPair::RedGreen, OpponentPair::GreenRed, OpponentPair::YellowBlue,
    OpponentPair::BlueYellow};

inline const char* center_color(OpponentPair pair) {
    switch (pair) {
        case OpponentPair::RedGreen: return "red";
        case OpponentPair::GreenRed: return "green";
        case OpponentPair::YellowBlue: return "yellow";
        case OpponentPair::BlueYellow: return "blue";
    }
    throw std::invalid_argument("center_color: bad pair");
}

inline const char* surround_color(OpponentPair pair) {
    switch (pair) {
        case OpponentPair::RedGreen: return "green";
        case OpponentPair::GreenRed: return "red";
        case OpponentPair::YellowBlue: return "blue";
        case OpponentPair::BlueYellow: return "yellow";
    }
    throw std::invalid_argument("surround_color: bad pair");
}

namespace detail {

inline const ChannelPlane& channel_by_name(const ColorChannelSet& channels,
                                           const std::string& name) {
    if (name == "red") return channels.red;
    if (name == "green") return channels.green;
    if (name == "blue") return channels.blue;
    if (name == "yellow") return channels.yellow;
    throw std::invalid_argument("channel_by_name: unknown channel " + name);
}

}  // namespace detail

/// Double-opponent response: center channel filtered with the narrow
/// Gaussian minus surround channel filtered with the wide one. Negative
/// values are clamped to zero so the result is a valid firing-rate drive.
inline ResponsePlane dog_opponent_response(const ColorChannelSet& channels, OpponentPair pair,
                                           double sigma_cen, double sigma_sur) {
    if (sigma_cen <= 0 || sigma_sur <= 0)
        throw std::invalid_argument("dog_opponent_response: sigmas must be positive");
    if (sigma_cen >= sigma_sur)
        throw std::invalid_argument("dog_opponent_response: center width must be smaller");
    require_same_size(channels.red, channels.green, "dog_opponent_response");
    require_same_size(channels.red, channels.blue, "dog_opponent_response");
    require_same_size(channels.red, channels.yellow, "dog_opponent_response");

    const ChannelPlane& center = detail::channel_by_name(channels, center_color(pair));
    const ChannelPlane& surround = detail::channel_by_name(channels, surround_color(pair));
    const Kernel g_cen = gaussian_kernel(sigma_cen, gaussian_radius(sigma_cen));
    const Kernel g_sur = gaussian_kernel(sigma_sur, gaussian_radius(sigma_sur));

    const Plane c = convolve2d(center, g_cen);
    const Plane s = convolve2d(surround, g_sur);
    Plane out(c.width(), c.height());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(c[i] - s[i], 0.0);
    return out;
}

/// All four opponent responses, ordered as kOpponentPairs.
inline std::array<ResponsePlane, 4> opponent_responses(const ColorChannelSet& channels,
                                                       double sigma_cen, double sigma_sur) {
    std::array<ResponsePlane, 4> out;
    for (std::size_t i = 0; i < kOpponentPairs.size(); ++i)
        out[i] = dog_opponent_response(channels, kOpponentPairs[i], sigma_cen, sigma_sur);
    return out;
}

}  // namespace spikesal

#endif  // SPIKESAL_OPPONENCY_HPP
