// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_PIPELINE_HPP
#define SPIKESAL_PIPELINE_HPP

#include <map>
#include <ostream>
#include <string>

#include "spikesal/config.hpp"
#include "spikesal/opponency.hpp"
#include "spikesal/oriented.hpp"
#include "spikesal/saliency.hpp"
#include "spikesal/snn.hpp"
#include "spikesal/stimulus.hpp"

namespace spikesal {

enum class Pathway { Color, Orientation, Both };

inline Pathway pathway_from_string(const std::string& s) {
    if (s == "color") return Pathway::Color;
    if (s == "orientation") return Pathway::Orientation;
    if (s == "both") return Pathway::Both;
    throw std::invalid_argument("unknown pathway: " + s);
}

/// Everything one end-to-end run produces. Spike counts are kept around for
/// benchmarking and debugging; the maps are the primary output.
struct PipelineResult {
    SaliencyMap color;   // ventral pathway map
    SaliencyMap orient;  // dorsal pathway map
    SaliencyMap fused;   // final saliency
    std::map<std::string, SpikeCountPlane> v4_counts;
    std::map<std::string, SpikeCountPlane> mt_counts;
};

namespace detail {

inline ResponsePlane clamp_unit(ResponsePlane plane) {
    for (double& v : plane) v = std::clamp(v, 0.0, 1.0);
    return plane;
}

}  // namespace detail

/// Ventral pathway: opponent DoG responses, rate-encoded into the V4
/// network; returns the six per-hue spike-count planes.
inline std::map<std::string, SpikeCountPlane> run_v4(const RgbImage& working,
                                                     const PipelineConfig& config,
                                                     std::ostream* raster = nullptr) {
    const ColorChannelSet channels = color_channels(working);

    NetworkSpec spec = build_v4_network(config);
    spec.seed = detail::mix_seed(config.seed, 0x76347634u);

    std::map<std::string, ResponsePlane> drives;
    for (std::size_t i = 0; i < kOpponentPairs.size(); ++i) {
        const OpponentPair pair = kOpponentPairs[i];
        ResponsePlane r =
            dog_opponent_response(channels, pair, config.sigma_cen, config.sigma_sur);
        drives.emplace(std::string(center_color(pair)) + "_center",
                       detail::clamp_unit(std::move(r)));
    }

    SimulationOptions options;
    options.raster = raster;
    return simulate(spec, encode_inputs(spec, drives), options);
}

/// Dorsal pathway: oriented V1 responses, rate-encoded into the MT
/// network; returns the eight per-orientation spike-count planes.
inline std::map<std::string, SpikeCountPlane> run_mt(const RgbImage& working,
                                                     const PipelineConfig& config,
                                                     std::ostream* raster = nullptr) {
    const ChannelPlane gray = grayscale(working);
    const OrientedFilterBank bank = oriented_filter_bank(
        config.v1_sigma, config.v1_radius, config.alpha_v1lin, config.sigma_norm);
    const auto responses = v1_orientation_responses(gray, bank);

    NetworkSpec spec = build_mt_network(config);
    spec.seed = detail::mix_seed(config.seed, 0x4D544D54u);

    std::map<std::string, ResponsePlane> drives;
    for (int k = 0; k < kOrientationCount; ++k)
        drives.emplace(mt_input_name(k), detail::clamp_unit(responses[k]));

    SimulationOptions options;
    options.raster = raster;
    return simulate(spec, encode_inputs(spec, drives), options);
}

/// Runs the full framework on an already-loaded image. The image is resized
/// to the working resolution first; the chosen pathway(s) are simulated and
/// the final map is the smoothed average of the two (an unselected pathway
/// contributes an all-zero map).
inline PipelineResult run_pipeline(const RgbImage& input, const PipelineConfig& config,
                                   Pathway pathway = Pathway::Both,
                                   std::ostream* raster = nullptr) {
    config.validate();
    const RgbImage working = resize(input, config.resolution, config.resolution);

    PipelineResult result;
    result.color = Plane(config.resolution, config.resolution);
    result.orient = Plane(config.resolution, config.resolution);

    if (pathway != Pathway::Orientation) {
        result.v4_counts = run_v4(working, config, raster);
        std::map<std::string, ResponsePlane> responses;
        for (const std::string& color : v4_color_names())
            responses.emplace(color, spike_counts_to_response(result.v4_counts.at(color)));
        result.color = color_saliency(responses, config);
    }
    if (pathway != Pathway::Color) {
        result.mt_counts = run_mt(working, config, raster);
        std::array<ResponsePlane, kOrientationCount> responses;
        for (int k = 0; k < kOrientationCount; ++k)
            responses[k] = spike_counts_to_response(result.mt_counts.at(mt_group_name(k)));
        result.orient = orientation_saliency(responses, config);
    }

    result.fused = fuse_maps(result.color, result.orient, averaging_kernel());
    if (config.drop_bottom_fraction > 0.0)
        result.fused = drop_bottom_fraction(result.fused, config.drop_bottom_fraction);
    return result;
}

}  // namespace spikesal

#endif  // SPIKESAL_PIPELINE_HPP
