// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_DATASETS_HPP
#define SPIKESAL_DATASETS_HPP

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spikesal/image_io.hpp"
#include "spikesal/plane.hpp"
#include "spikesal/stimulus.hpp"

namespace spikesal {

/// One stimulus/ground-truth pairing found on disk.
struct DatasetEntry {
    std::string id;  // shared filename stem
    std::filesystem::path stimulus;
    std::filesystem::path fixations;
    std::optional<std::filesystem::path> density;
};

/// Ground truth at working resolution: binary fixation points and,
/// when the dataset provides one, a fixation density map.
struct FixationData {
    Plane points;
    std::optional<Plane> density;
};

/// Scans the canonical layout: `stimuli/` and `fixations/` (required),
/// `density/` (optional), files paired by filename stem. Unpaired stimuli
/// are skipped with a warning. Entries come back in name order.
inline std::vector<DatasetEntry> scan_dataset(const std::filesystem::path& root,
                                              std::ostream& warnings = std::cerr) {
    namespace fs = std::filesystem;
    const fs::path stim_dir = root / "stimuli";
    const fs::path fix_dir = root / "fixations";
    const fs::path den_dir = root / "density";
    if (!fs::is_directory(root))
        throw std::runtime_error("scan_dataset: no such directory: " + root.string());
    if (!fs::is_directory(stim_dir))
        throw std::runtime_error("scan_dataset: missing subdirectory: " + stim_dir.string());
    if (!fs::is_directory(fix_dir))
        throw std::runtime_error("scan_dataset: missing subdirectory: " + fix_dir.string());

    auto index_dir = [](const fs::path& dir) {
        std::map<std::string, fs::path> by_stem;
        for (const auto& e : fs::directory_iterator(dir))
            if (e.is_regular_file()) by_stem[e.path().stem().string()] = e.path();
        return by_stem;
    };
    const auto fixations = index_dir(fix_dir);
    const auto densities = fs::is_directory(den_dir) ? index_dir(den_dir)
                                                     : std::map<std::string, fs::path>{};

    std::vector<DatasetEntry> entries;
    std::vector<fs::path> stimuli;
    for (const auto& e : fs::directory_iterator(stim_dir))
        if (e.is_regular_file()) stimuli.push_back(e.path());
    std::sort(stimuli.begin(), stimuli.end());

    for (const auto& stim : stimuli) {
        const std::string stem = stim.stem().string();
        auto fix = fixations.find(stem);
        if (fix == fixations.end()) {
            warnings << "warning: no fixation map for stimulus " << stim.string()
                     << ", skipping\n";
            continue;
        }
        DatasetEntry entry{stem, stim, fix->second, std::nullopt};
        auto den = densities.find(stem);
        if (den != densities.end()) entry.density = den->second;
        entries.push_back(std::move(entry));
    }
    return entries;
}

namespace detail {

inline Plane max_channel(const RgbImage& img) {
    Plane out(img.width(), img.height());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::max(img.red[i], std::max(img.green[i], img.blue[i]));
    return out;
}

inline int map_coordinate(int src, int src_size, int dst_size) {
    const double scaled = (src + 0.5) * static_cast<double>(dst_size) / src_size - 0.5;
    return std::clamp(static_cast<int>(std::lround(scaled)), 0, dst_size - 1);
}

}  // namespace detail

/// Loads a fixation map and binarizes it at > 0. Points are mapped to the
/// nearest pixel at the target size; an empty result is an error.
inline Plane load_fixation_points(const std::filesystem::path& path, int target_width,
                                  int target_height) {
    const RgbImage img = load_image(path.string());
    const Plane src = detail::max_channel(img);

    Plane out(target_width, target_height);
    long long n = 0;
    for (int y = 0; y < src.height(); ++y)
        for (int x = 0; x < src.width(); ++x)
            if (src.at(x, y) > 0.0) {
                const int tx = detail::map_coordinate(x, src.width(), target_width);
                const int ty = detail::map_coordinate(y, src.height(), target_height);
                if (out.at(tx, ty) == 0.0) ++n;
                out.at(tx, ty) = 1.0;
            }
    if (n == 0)
        throw std::runtime_error("load_fixations: zero fixations in " + path.string());
    return out;
}

/// Loads a density map and resizes it to the target size (bilinear).
inline Plane load_density(const std::filesystem::path& path, int target_width,
                          int target_height) {
    const RgbImage img = load_image(path.string());
    Plane density = resize(detail::max_channel(img), target_width, target_height);
    if (!(density.sum() > 0.0))
        throw std::runtime_error("load_density: zero-sum density in " + path.string());
    return density;
}

/// Ground truth of one dataset entry at the working resolution.
inline FixationData load_fixations(const DatasetEntry& entry, int target_width,
                                   int target_height) {
    FixationData data{load_fixation_points(entry.fixations, target_width, target_height),
                      std::nullopt};
    if (entry.density)
        data.density = load_density(*entry.density, target_width, target_height);
    return data;
}

}  // namespace spikesal

#endif  // SPIKESAL_DATASETS_HPP
