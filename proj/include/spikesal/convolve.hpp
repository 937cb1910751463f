// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_CONVOLVE_HPP
#define SPIKESAL_CONVOLVE_HPP

#include <algorithm>
#include <stdexcept>

#include "spikesal/kernel.hpp"
#include "spikesal/plane.hpp"

namespace spikesal {

/// 2D convolution with edge replication outside the plane. Output has the
/// same size as the input. The kernel is flipped, i.e. this is a true
/// convolution: out(x,y) = sum_{dx,dy} k(dx,dy) * in(x-dx, y-dy).
inline Plane convolve2d(const Plane& plane, const Kernel& kernel) {
    if (plane.empty()) throw std::invalid_argument("convolve2d: empty plane");
    if (kernel.side() > plane.width() || kernel.side() > plane.height())
        throw std::invalid_argument("convolve2d: kernel larger than plane");

    const int w = plane.width();
    const int h = plane.height();
    const int r = kernel.radius();
    Plane out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int dy = -r; dy <= r; ++dy) {
                const int sy = std::clamp(y - dy, 0, h - 1);
                for (int dx = -r; dx <= r; ++dx) {
                    const int sx = std::clamp(x - dx, 0, w - 1);
                    acc += kernel.at(dx, dy) * plane.at(sx, sy);
                }
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

/// Repeated box smoothing as used throughout the saliency post-processing.
inline Plane smooth(const Plane& plane, const Kernel& kernel, int passes = 1) {
    Plane out = plane;
    for (int i = 0; i < passes; ++i) out = convolve2d(out, kernel);
    return out;
}

}  // namespace spikesal

#endif  // SPIKESAL_CONVOLVE_HPP
