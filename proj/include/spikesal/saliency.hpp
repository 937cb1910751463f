// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_SALIENCY_HPP
#define SPIKESAL_SALIENCY_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "spikesal/config.hpp"
#include "spikesal/convolve.hpp"
#include "spikesal/kernel.hpp"
#include "spikesal/plane.hpp"

namespace spikesal {

/// Divides by the maximum when it is positive; an identically-zero map is
/// returned unchanged so degenerate inputs never produce NaN.
inline SaliencyMap normalize_map(const Plane& map) {
    if (!map.all_finite()) throw std::invalid_argument("normalize_map: non-finite values");
    Plane out = map;
    const double m = out.max_value();
    if (m > 0.0)
        for (double& v : out) v /= m;
    return out;
}

/// Color saliency. Inputs are the six V4 spike-count responses keyed by
/// color name. Each channel keeps only what stands out against the mean of
/// the other five, drops everything below keep_fraction * max, and is down
/// weighted by how many pixels survive, so widespread colors wash out and
/// rare ones dominate.
inline SaliencyMap color_saliency(const std::map<std::string, ResponsePlane>& responses,
                                  const PipelineConfig& config) {
    static const std::array<const char*, 6> colors{"red", "green", "blue",
                                                   "yellow", "cyan", "magenta"};
    if (responses.size() != colors.size())
        throw std::invalid_argument("color_saliency: expected exactly six color responses");
    for (const char* c : colors)
        if (responses.find(c) == responses.end())
            throw std::invalid_argument(std::string("color_saliency: missing color ") + c);

    const Plane& first = responses.begin()->second;
    for (const auto& kv : responses) require_same_size(first, kv.second, "color_saliency");

    const Kernel k = averaging_kernel();
    const int w = first.width();
    const int h = first.height();

    Plane combined(w, h);
    for (const char* color : colors) {
        const Plane& own = responses.at(color);
        const double alpha = config.alpha_for(color);

        // R_c <- R_c - alpha_c * mean of the other five channels.
        Plane distinct(w, h);
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            double others = 0.0;
            for (const char* other : colors)
                if (other != color) others += responses.at(other)[i];
            distinct[i] = own[i] - alpha * others / 5.0;
        }

        // Keep only the strongest responses (top 30% of the peak).
        const double peak = distinct.max_value();
        if (peak <= 0.0) continue;  // nothing distinctive in this channel
        for (double& v : distinct)
            if (v < config.keep_fraction_color * peak) v = 0.0;

        Plane smoothed = smooth(distinct, k, config.smooth_passes);

        // Rarity weight: many supra-threshold pixels -> weak contribution.
        const double m = smoothed.max_value();
        long long n_c = 0;
        for (double v : smoothed)
            if (v > config.count_threshold_color * m) ++n_c;

        const double scale = 1.0 / (1.0 + static_cast<double>(n_c));
        for (std::size_t i = 0; i < combined.size(); ++i) combined[i] += scale * smoothed[i];
    }

    return normalize_map(smooth(combined, k, config.smooth_passes));
}

namespace detail {

inline int wrap_orientation(int k) { return ((k % 8) + 8) % 8; }

}  // namespace detail

/// Orientation saliency. Inputs are the eight MT spike-count responses
/// indexed by orientation (angle k * pi/8). Channels covering a large area
/// are crushed by 1/N^2; each channel is then contrasted against the rest,
/// except that the two immediate angular neighbours (mod pi) are half
/// forgiven because nearby orientations legitimately co-fire.
inline SaliencyMap orientation_saliency(const std::array<ResponsePlane, 8>& responses,
                                        const PipelineConfig& config) {
    for (int kk = 1; kk < 8; ++kk)
        require_same_size(responses[0], responses[kk], "orientation_saliency");

    const Kernel k = averaging_kernel();
    const int w = responses[0].width();
    const int h = responses[0].height();

    std::array<Plane, 8> smoothed;
    for (int i = 0; i < 8; ++i) {
        smoothed[i] = smooth(responses[i], k, config.smooth_passes);
        const double peak = smoothed[i].max_value();
        if (peak <= 0.0) {
            smoothed[i] = Plane(w, h);  // silent channel contributes nothing
            continue;
        }
        long long n_theta = 0;
        for (double v : smoothed[i])
            if (v >= config.count_threshold_orient * peak) ++n_theta;
        const double scale = 1.0 / (static_cast<double>(n_theta) * static_cast<double>(n_theta));
        for (double& v : smoothed[i]) v *= scale;
    }

    Plane total(w, h);
    for (const Plane& s : smoothed)
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += s[i];

    Plane sum(w, h);
    for (int theta = 0; theta < 8; ++theta) {
        const Plane& own = smoothed[theta];
        const Plane& before = smoothed[detail::wrap_orientation(theta - 1)];
        const Plane& after = smoothed[detail::wrap_orientation(theta + 1)];
        for (std::size_t i = 0; i < sum.size(); ++i) {
            // own - sum(others) + 0.5 * both angular neighbours, clamped.
            const double v = 2.0 * own[i] - total[i] + 0.5 * before[i] + 0.5 * after[i];
            if (v > 0.0) sum[i] += v;
        }
    }

    return normalize_map(smooth(sum, k, config.smooth_passes));
}

/// Final fusion: smooth the average of the color and orientation maps with
/// the averaging kernel, then renormalize.
inline SaliencyMap fuse_maps(const SaliencyMap& color, const SaliencyMap& orient,
                             const Kernel& kernel) {
    require_same_size(color, orient, "fuse_maps");
    Plane avg(color.width(), color.height());
    for (std::size_t i = 0; i < avg.size(); ++i) avg[i] = 0.5 * (color[i] + orient[i]);
    return normalize_map(convolve2d(avg, kernel));
}

/// Optional final-map cleanup: zeroes the lowest fraction of the value
/// range, then renormalizes. Off by default.
inline SaliencyMap drop_bottom_fraction(const SaliencyMap& map, double fraction) {
    if (fraction <= 0.0) return map;
    if (fraction >= 1.0)
        throw std::invalid_argument("drop_bottom_fraction: fraction must lie in [0,1)");
    Plane out = map;
    const double cutoff = fraction * out.max_value();
    for (double& v : out)
        if (v < cutoff) v = 0.0;
    return normalize_map(out);
}

}  // namespace spikesal

#endif  // SPIKESAL_SALIENCY_HPP
