// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_PLANE_HPP
#define SPIKESAL_PLANE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spikesal {

/// A dense H x W matrix of doubles, row-major, indexed as (x, y) with y
/// growing downward. One type carries image channels, filter responses
/// and saliency maps; the producing operation defines the value range.
class Plane {
public:
    Plane() = default;

    Plane(int width, int height, double fill = 0.0)
        : width_(width), height_(height),
          values_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
        if (width <= 0 || height <= 0)
            throw std::invalid_argument("Plane: dimensions must be positive");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    double& at(int x, int y) { return values_[idx(x, y)]; }
    double at(int x, int y) const { return values_[idx(x, y)]; }

    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }

    double* data() { return values_.data(); }
    const double* data() const { return values_.data(); }

    std::vector<double>::iterator begin() { return values_.begin(); }
    std::vector<double>::iterator end() { return values_.end(); }
    std::vector<double>::const_iterator begin() const { return values_.begin(); }
    std::vector<double>::const_iterator end() const { return values_.end(); }

    bool same_size(const Plane& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    double max_value() const {
        double m = 0.0;
        bool first = true;
        for (double v : values_) {
            if (first || v > m) { m = v; first = false; }
        }
        return values_.empty() ? 0.0 : m;
    }

    double min_value() const {
        double m = 0.0;
        bool first = true;
        for (double v : values_) {
            if (first || v < m) { m = v; first = false; }
        }
        return values_.empty() ? 0.0 : m;
    }

    double sum() const {
        double s = 0.0;
        for (double v : values_) s += v;
        return s;
    }

    double mean() const { return values_.empty() ? 0.0 : sum() / static_cast<double>(size()); }

    bool all_finite() const {
        return std::all_of(values_.begin(), values_.end(),
                           [](double v) { return std::isfinite(v); });
    }

    /// Index of the largest value (first occurrence, row-major order).
    std::size_t argmax() const {
        return static_cast<std::size_t>(
            std::max_element(values_.begin(), values_.end()) - values_.begin());
    }

    int argmax_x() const { return static_cast<int>(argmax() % static_cast<std::size_t>(width_)); }
    int argmax_y() const { return static_cast<int>(argmax() / static_cast<std::size_t>(width_)); }

    void clamp_negative_to_zero() {
        for (double& v : values_) v = std::max(v, 0.0);
    }

private:
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> values_;
};

// Role aliases. Invariants are maintained by the producing operations:
// channel planes hold intensities in [0,1], response planes nonnegative
// firing-rate drive, saliency maps values in [0,1] with max 1 unless all-zero.
using ChannelPlane = Plane;
using ResponsePlane = Plane;
using SaliencyMap = Plane;

inline void require_same_size(const Plane& a, const Plane& b, const char* what) {
    if (!a.same_size(b))
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace spikesal

#endif  // SPIKESAL_PLANE_HPP
