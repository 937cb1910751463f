// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_METRICS_HPP
#define SPIKESAL_METRICS_HPP

#include <cmath>
#include <random>
#include <stdexcept>

#include "spikesal/convolve.hpp"
#include "spikesal/kernel.hpp"
#include "spikesal/plane.hpp"
#include "spikesal/snn.hpp"

namespace spikesal {

/// Regularizer used by KL and IG, following the benchmark convention
/// (MATLAB machine epsilon).
inline constexpr double kMetricEpsilon = 2.2204e-16;

namespace detail {

inline Plane sum_normalized(const Plane& map, const char* what) {
    const double s = map.sum();
    if (!(s > 0.0)) throw std::invalid_argument(std::string(what) + ": zero-sum map");
    Plane out = map;
    for (double& v : out) v /= s;
    return out;
}

inline double population_std(const Plane& map, double mean) {
    double acc = 0.0;
    for (double v : map) acc += (v - mean) * (v - mean);
    return std::sqrt(acc / static_cast<double>(map.size()));
}

inline long long fixation_count(const Plane& fixations) {
    long long n = 0;
    for (double v : fixations)
        if (v > 0.0) ++n;
    return n;
}

}  // namespace detail

/// Similarity: histogram intersection of the two sum-normalized maps,
/// 1 for identical distributions, 0 for disjoint support.
inline double sim_score(const Plane& prediction, const Plane& gt_density) {
    require_same_size(prediction, gt_density, "sim_score");
    const Plane p = detail::sum_normalized(prediction, "sim_score");
    const Plane q = detail::sum_normalized(gt_density, "sim_score");
    double score = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) score += std::min(p[i], q[i]);
    return score;
}

/// Normalized scan-path saliency: the prediction is z-scored over all
/// pixels (population standard deviation) and averaged at fixated pixels.
inline double nss_score(const Plane& prediction, const Plane& fixations) {
    require_same_size(prediction, fixations, "nss_score");
    const long long n_fix = detail::fixation_count(fixations);
    if (n_fix == 0) throw std::invalid_argument("nss_score: no fixations");
    const double mean = prediction.mean();
    const double sd = detail::population_std(prediction, mean);
    if (!(sd > 0.0)) throw std::invalid_argument("nss_score: degenerate map");

    double acc = 0.0;
    for (std::size_t i = 0; i < prediction.size(); ++i)
        if (fixations[i] > 0.0) acc += (prediction[i] - mean) / sd;
    return acc / static_cast<double>(n_fix);
}

/// Pearson correlation between the two maps over all pixels.
inline double cc_score(const Plane& prediction, const Plane& gt_density) {
    require_same_size(prediction, gt_density, "cc_score");
    const double mp = prediction.mean();
    const double mq = gt_density.mean();
    double spq = 0.0, spp = 0.0, sqq = 0.0;
    for (std::size_t i = 0; i < prediction.size(); ++i) {
        const double dp = prediction[i] - mp;
        const double dq = gt_density[i] - mq;
        spq += dp * dq;
        spp += dp * dp;
        sqq += dq * dq;
    }
    if (!(spp > 0.0) || !(sqq > 0.0))
        throw std::invalid_argument("cc_score: zero-variance input");
    return spq / std::sqrt(spp * sqq);
}

/// Kullback-Leibler divergence of the ground truth from the prediction,
/// both sum-normalized; natural log with epsilon regularization.
inline double kl_score(const Plane& prediction, const Plane& gt_density,
                       double epsilon = kMetricEpsilon) {
    require_same_size(prediction, gt_density, "kl_score");
    const Plane p = detail::sum_normalized(prediction, "kl_score");
    const Plane q = detail::sum_normalized(gt_density, "kl_score");
    double score = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        score += q[i] * std::log(epsilon + q[i] / (epsilon + p[i]));
    return score;
}

/// Information gain of the prediction over a baseline, in bits per
/// fixation: mean over fixated pixels of log2(eps + P) - log2(eps + B)
/// with both maps sum-normalized.
inline double ig_score(const Plane& prediction, const Plane& baseline, const Plane& fixations,
                       double epsilon = kMetricEpsilon) {
    require_same_size(prediction, baseline, "ig_score");
    require_same_size(prediction, fixations, "ig_score");
    const long long n_fix = detail::fixation_count(fixations);
    if (n_fix == 0) throw std::invalid_argument("ig_score: no fixations");
    const Plane p = detail::sum_normalized(prediction, "ig_score");
    const Plane b = detail::sum_normalized(baseline, "ig_score");

    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (fixations[i] > 0.0) acc += std::log2(epsilon + p[i]) - std::log2(epsilon + b[i]);
    return acc / static_cast<double>(n_fix);
}

/// Center-prior baseline: isotropic Gaussian at the image center,
/// sigma = min(H, W) / divisor, peak normalized to 1.
inline SaliencyMap center_prior_baseline(int width, int height, double sigma_divisor = 4.0) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("center_prior_baseline: dimensions must be positive");
    if (sigma_divisor <= 0)
        throw std::invalid_argument("center_prior_baseline: divisor must be positive");
    const double sigma = std::min(width, height) / sigma_divisor;
    const double cx = (width - 1) / 2.0;
    const double cy = (height - 1) / 2.0;
    Plane out(width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const double dx = x - cx;
            const double dy = y - cy;
            out.at(x, y) = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
        }
    const double m = out.max_value();
    for (double& v : out) v /= m;
    return out;
}

/// Chance baseline: uniform random values in [0,1), deterministic per seed.
inline SaliencyMap chance_baseline(int width, int height, std::uint32_t seed) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("chance_baseline: dimensions must be positive");
    Plane out(width, height);
    std::mt19937 rng(seed);
    for (double& v : out) v = detail::uniform01(rng);
    return out;
}

/// Fixation density from a binary fixation map, for datasets that ship
/// none: Gaussian blur of the points.
inline Plane density_from_fixations(const Plane& fixations, double sigma) {
    if (sigma <= 0) throw std::invalid_argument("density_from_fixations: sigma must be positive");
    const int radius = gaussian_radius(sigma);
    const int max_radius = (std::min(fixations.width(), fixations.height()) - 1) / 2;
    const Kernel g = gaussian_kernel(sigma, std::min(radius, std::max(1, max_radius)));
    return convolve2d(fixations, g);
}

/// The five scores of one prediction against one ground truth.
struct MetricReport {
    double sim = 0.0;
    double nss = 0.0;
    double cc = 0.0;
    double kl = 0.0;
    double ig_center = 0.0;
    double ig_chance = 0.0;
};

}  // namespace spikesal

#endif  // SPIKESAL_METRICS_HPP
