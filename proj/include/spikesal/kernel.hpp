// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_KERNEL_HPP
#define SPIKESAL_KERNEL_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spikesal {

/// Odd-sized square convolution kernel anchored at its center.
class Kernel {
public:
    Kernel() = default;

    explicit Kernel(int radius, double fill = 0.0)
        : radius_(radius), side_(2 * radius + 1),
          values_(static_cast<std::size_t>(side_) * side_, fill) {
        if (radius < 0) throw std::invalid_argument("Kernel: radius must be >= 0");
    }

    int radius() const { return radius_; }
    int side() const { return side_; }

    /// Access by offset from the anchor, dx and dy in [-radius, radius].
    double& at(int dx, int dy) { return values_[idx(dx, dy)]; }
    double at(int dx, int dy) const { return values_[idx(dx, dy)]; }

    double sum() const {
        double s = 0.0;
        for (double v : values_) s += v;
        return s;
    }

    double l2_norm() const {
        double s = 0.0;
        for (double v : values_) s += v * v;
        return std::sqrt(s);
    }

    void scale(double factor) {
        for (double& v : values_) v *= factor;
    }

    void subtract_mean() {
        const double m = sum() / static_cast<double>(values_.size());
        for (double& v : values_) v -= m;
    }

private:
    std::size_t idx(int dx, int dy) const {
        return static_cast<std::size_t>(dy + radius_) * static_cast<std::size_t>(side_) +
               static_cast<std::size_t>(dx + radius_);
    }

    int radius_ = 0;
    int side_ = 1;
    std::vector<double> values_{0.0};
};

/// Isotropic Gaussian sampled on the integer grid and normalized to sum 1.
inline Kernel gaussian_kernel(double sigma, int radius) {
    if (sigma <= 0.0) throw std::invalid_argument("gaussian_kernel: sigma must be positive");
    if (radius < 1) throw std::invalid_argument("gaussian_kernel: radius must be >= 1");
    Kernel k(radius);
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx)
            k.at(dx, dy) = std::exp(-(dx * dx + dy * dy) * inv2s2);
    k.scale(1.0 / k.sum());
    return k;
}

/// Default kernel radius for a Gaussian of the given width.
inline int gaussian_radius(double sigma) {
    return std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
}

/// The smoothing kernel K: a box average, 1/side^2 per tap (3x3 by default).
inline Kernel averaging_kernel(int radius = 1) {
    if (radius < 0) throw std::invalid_argument("averaging_kernel: radius must be >= 0");
    Kernel k(radius);
    const int side = 2 * radius + 1;
    const double w = 1.0 / (side * side);
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx) k.at(dx, dy) = w;
    return k;
}

}  // namespace spikesal

#endif  // SPIKESAL_KERNEL_HPP
