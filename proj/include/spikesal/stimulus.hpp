// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_STIMULUS_HPP
#define SPIKESAL_STIMULUS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spikesal/image_io.hpp"
#include "spikesal/plane.hpp"

namespace spikesal {

/// The four color channels the double-opponent cells draw from.
struct ColorChannelSet {
    ChannelPlane red;
    ChannelPlane green;
    ChannelPlane blue;
    ChannelPlane yellow;
};

/// Bilinear resampling to the target size, pixel-center aligned. Values stay
/// in [0,1]; resizing to the source size reproduces the input exactly.
inline ChannelPlane resize(const ChannelPlane& plane, int target_width, int target_height) {
    if (target_width < 1 || target_height < 1)
        throw std::invalid_argument("resize: target dimensions must be >= 1");
    if (plane.empty()) throw std::invalid_argument("resize: empty plane");
    if (target_width == plane.width() && target_height == plane.height()) return plane;

    const int sw = plane.width();
    const int sh = plane.height();
    Plane out(target_width, target_height);
    const double sx_scale = static_cast<double>(sw) / target_width;
    const double sy_scale = static_cast<double>(sh) / target_height;
    for (int y = 0; y < target_height; ++y) {
        const double sy = std::clamp((y + 0.5) * sy_scale - 0.5, 0.0, sh - 1.0);
        const int y0 = static_cast<int>(sy);
        const int y1 = std::min(y0 + 1, sh - 1);
        const double fy = sy - y0;
        for (int x = 0; x < target_width; ++x) {
            const double sx = std::clamp((x + 0.5) * sx_scale - 0.5, 0.0, sw - 1.0);
            const int x0 = static_cast<int>(sx);
            const int x1 = std::min(x0 + 1, sw - 1);
            const double fx = sx - x0;
            const double top = (1.0 - fx) * plane.at(x0, y0) + fx * plane.at(x1, y0);
            const double bottom = (1.0 - fx) * plane.at(x0, y1) + fx * plane.at(x1, y1);
            out.at(x, y) = (1.0 - fy) * top + fy * bottom;
        }
    }
    return out;
}

inline RgbImage resize(const RgbImage& image, int target_width, int target_height) {
    return RgbImage{resize(image.red, target_width, target_height),
                    resize(image.green, target_width, target_height),
                    resize(image.blue, target_width, target_height)};
}

/// Yellow channel: (r+g)/2 - |r-g|/2 - b, negatives zeroed out.
inline ChannelPlane yellow_channel(const ChannelPlane& red, const ChannelPlane& green,
                                   const ChannelPlane& blue) {
    require_same_size(red, green, "yellow_channel");
    require_same_size(red, blue, "yellow_channel");
    Plane out(red.width(), red.height());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double v = 0.5 * (red[i] + green[i]) - 0.5 * std::abs(red[i] - green[i]) - blue[i];
        out[i] = std::max(v, 0.0);
    }
    return out;
}

/// Standard luma conversion, 0.299 r + 0.587 g + 0.114 b.
inline ChannelPlane grayscale(const ChannelPlane& red, const ChannelPlane& green,
                              const ChannelPlane& blue) {
    require_same_size(red, green, "grayscale");
    require_same_size(red, blue, "grayscale");
    Plane out(red.width(), red.height());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = 0.299 * red[i] + 0.587 * green[i] + 0.114 * blue[i];
    return out;
}

inline ChannelPlane grayscale(const RgbImage& image) {
    return grayscale(image.red, image.green, image.blue);
}

/// Splits an RGB image into the four channels driving the V1 opponent cells.
inline ColorChannelSet color_channels(const RgbImage& image) {
    return ColorChannelSet{image.red, image.green, image.blue,
                           yellow_channel(image.red, image.green, image.blue)};
}

}  // namespace spikesal

#endif  // SPIKESAL_STIMULUS_HPP
