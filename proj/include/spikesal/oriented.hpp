// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_ORIENTED_HPP
#define SPIKESAL_ORIENTED_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spikesal/convolve.hpp"
#include "spikesal/kernel.hpp"
#include "spikesal/plane.hpp"

namespace spikesal {

inline constexpr int kOrientationCount = 8;

/// The 8 bar orientations, k * pi/8 for k in 0..7, covering [0, pi).
inline std::array<double, kOrientationCount> orientation_angles() {
    std::array<double, kOrientationCount> out{};
    for (int k = 0; k < kOrientationCount; ++k)
        out[k] = k * std::numbers::pi / kOrientationCount;
    return out;
}

/// Oriented V1 filters: third derivative of a Gaussian taken along the axis
/// perpendicular to the bar orientation, so a bar at angle theta drives
/// filter theta the hardest. Each kernel is zero-mean and unit L2 norm
/// before the global scale is applied.
struct OrientedFilterBank {
    std::array<double, kOrientationCount> angles{};
    std::array<Kernel, kOrientationCount> filters;
    double scale = 1.0;          // alpha applied to the linear response
    double semisaturation = 0.1; // constant of the divisive normalization
};

inline OrientedFilterBank oriented_filter_bank(double sigma, int radius, double scale,
                                               double semisaturation = 0.1) {
    if (sigma <= 0) throw std::invalid_argument("oriented_filter_bank: sigma must be positive");
    if (radius < 1) throw std::invalid_argument("oriented_filter_bank: radius must be >= 1");

    OrientedFilterBank bank;
    bank.angles = orientation_angles();
    bank.scale = scale;
    bank.semisaturation = semisaturation;

    const double s2 = sigma * sigma;
    for (int k = 0; k < kOrientationCount; ++k) {
        const double theta = bank.angles[k];
        // u: signed distance from the bar line, v: position along it
        // (screen coordinates, y growing downward).
        const double nx = -std::sin(theta);
        const double ny = std::cos(theta);
        const double dx_ = std::cos(theta);
        const double dy_ = std::sin(theta);
        Kernel kern(radius);
        for (int dy = -radius; dy <= radius; ++dy) {
            for (int dx = -radius; dx <= radius; ++dx) {
                const double u = dx * nx + dy * ny;
                const double v = dx * dx_ + dy * dy_;
                const double g = std::exp(-(u * u + v * v) / (2.0 * s2));
                // d^3/du^3 of exp(-u^2 / 2 sigma^2), up to a constant factor.
                const double third = (3.0 * u / (s2 * s2) - (u * u * u) / (s2 * s2 * s2));
                kern.at(dx, dy) = third * g;
            }
        }
        kern.subtract_mean();
        const double norm = kern.l2_norm();
        if (norm > 0) kern.scale(1.0 / norm);
        bank.filters[k] = kern;
    }
    return bank;
}

/// Linear V1 response: the grayscale image convolved with each oriented
/// filter, multiplied by the bank's scale. Signed output.
inline std::array<ResponsePlane, kOrientationCount> v1_linear_response(
    const ChannelPlane& gray, const OrientedFilterBank& bank) {
    std::array<ResponsePlane, kOrientationCount> out;
    for (int k = 0; k < kOrientationCount; ++k) {
        out[k] = convolve2d(gray, bank.filters[k]);
        for (double& v : out[k]) v *= bank.scale;
    }
    return out;
}

/// Half-square rectification: max(v, 0)^2 pointwise.
inline ResponsePlane half_square_rectify(const ResponsePlane& plane) {
    Plane out = plane;
    for (double& v : out) {
        const double r = std::max(v, 0.0);
        v = r * r;
    }
    return out;
}

/// Divisive normalization across the orientation channels:
/// R_k <- R_k / (sigma^2 + sum_k' R_k') at each pixel. Outputs lie in [0,1)
/// and keep the per-pixel argmax of the unnormalized responses.
inline std::array<ResponsePlane, kOrientationCount> divisive_normalize(
    const std::array<ResponsePlane, kOrientationCount>& planes, double semisaturation) {
    if (semisaturation <= 0)
        throw std::invalid_argument("divisive_normalize: semisaturation must be positive");
    for (int k = 1; k < kOrientationCount; ++k)
        require_same_size(planes[0], planes[k], "divisive_normalize");

    const double s2 = semisaturation * semisaturation;
    std::array<ResponsePlane, kOrientationCount> out;
    for (int k = 0; k < kOrientationCount; ++k)
        out[k] = Plane(planes[0].width(), planes[0].height());
    for (std::size_t i = 0; i < planes[0].size(); ++i) {
        double pool = 0.0;
        for (int k = 0; k < kOrientationCount; ++k) pool += planes[k][i];
        const double denom = s2 + pool;
        for (int k = 0; k < kOrientationCount; ++k) out[k][i] = planes[k][i] / denom;
    }
    return out;
}

/// The full orientation front end: linear response, rectification, then
/// divisive normalization. The result is the drive fed to the MT encoder.
inline std::array<ResponsePlane, kOrientationCount> v1_orientation_responses(
    const ChannelPlane& gray, const OrientedFilterBank& bank) {
    std::array<ResponsePlane, kOrientationCount> linear = v1_linear_response(gray, bank);
    for (int k = 0; k < kOrientationCount; ++k) linear[k] = half_square_rectify(linear[k]);
    return divisive_normalize(linear, bank.semisaturation);
}

}  // namespace spikesal

#endif  // SPIKESAL_ORIENTED_HPP
