// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_SYNTHETIC_HPP
#define SPIKESAL_SYNTHETIC_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spikesal/image_io.hpp"
#include "spikesal/plane.hpp"
#include "spikesal/snn.hpp"

namespace spikesal {

/// The colormix tuning image: six equal vertical stripes, one per V4 hue,
/// ordered red, green, blue, yellow, cyan, magenta at full saturation.
inline RgbImage synth_colormix(int width, int height) {
    if (width < 6 || height < 1)
        throw std::invalid_argument("synth_colormix: image must be at least 6 px wide");
    static const std::array<std::array<double, 3>, 6> stripe_rgb{{
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}};
    RgbImage img{Plane(width, height), Plane(width, height), Plane(width, height)};
    for (int x = 0; x < width; ++x) {
        const int stripe = std::min(6 * x / width, 5);
        for (int y = 0; y < height; ++y) {
            img.red.at(x, y) = stripe_rgb[stripe][0];
            img.green.at(x, y) = stripe_rgb[stripe][1];
            img.blue.at(x, y) = stripe_rgb[stripe][2];
        }
    }
    return img;
}

/// Stripe index of a colormix column, matching synth_colormix.
inline int colormix_stripe_of(int x, int width) { return std::min(6 * x / width, 5); }

namespace detail {

/// Marks the pixels of a bar: a rectangle of the given length and width
/// (px) centered at (cx, cy) in pixel-center coordinates, at angle theta.
inline void draw_bar(Plane& plane, double cx, double cy, double theta, double length,
                     double bar_width) {
    const double dx = std::cos(theta);
    const double dy = std::sin(theta);
    const int w = plane.width();
    const int h = plane.height();
    const int reach = static_cast<int>(std::ceil(length / 2 + bar_width)) + 1;
    const int x0 = std::max(0, static_cast<int>(cx) - reach);
    const int x1 = std::min(w - 1, static_cast<int>(cx) + reach);
    const int y0 = std::max(0, static_cast<int>(cy) - reach);
    const int y1 = std::min(h - 1, static_cast<int>(cy) + reach);
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            const double px = x - cx;
            const double py = y - cy;
            const double along = px * dx + py * dy;
            const double perp = -px * dy + py * dx;
            if (std::abs(along) <= length / 2 && std::abs(perp) < bar_width / 2)
                plane.at(x, y) = 1.0;
        }
    }
}

inline void draw_disc(Plane& plane, double cx, double cy, double radius) {
    const int w = plane.width();
    const int h = plane.height();
    const int r = static_cast<int>(std::ceil(radius)) + 1;
    for (int y = std::max(0, static_cast<int>(cy) - r);
         y <= std::min(h - 1, static_cast<int>(cy) + r); ++y)
        for (int x = std::max(0, static_cast<int>(cx) - r);
             x <= std::min(w - 1, static_cast<int>(cx) + r); ++x) {
            const double dx = x - cx;
            const double dy = y - cy;
            if (dx * dx + dy * dy <= radius * radius) plane.at(x, y) = 1.0;
        }
}

}  // namespace detail

/// The oriented-bars tuning image: 8 columns, each holding one white bar at
/// angle k * pi/8 (k = column index, left to right) on black background.
/// Bars are ~3/4 of a column wide and 2 px thick.
inline ChannelPlane synth_oriented_bars(int width, int height) {
    if (width < 8 || height < 1)
        throw std::invalid_argument("synth_oriented_bars: image must be at least 8 px wide");
    Plane out(width, height);
    const double cell = width / 8.0;
    const double length = 0.75 * cell;
    for (int k = 0; k < 8; ++k) {
        const double cx = (k + 0.5) * cell - 0.5;
        const double cy = height / 2.0 - 0.5;
        detail::draw_bar(out, cx, cy, k * std::numbers::pi / 8.0, length, 2.0);
    }
    return out;
}

/// Horizontal extent of column k of the bars image, for region scoring.
inline std::pair<int, int> bars_cell_range(int k, int width) {
    const int x0 = k * width / 8;
    const int x1 = (k + 1) * width / 8 - 1;
    return {x0, x1};
}

enum class PopoutKind { Color, Orientation };

/// A synthetic pop-out stimulus plus the ground-truth singleton mask.
struct PopoutStimulus {
    RgbImage image;
    Plane target_mask;  // 1 on the singleton's pixels
};

/// Builds a pop-out image: one red disc among green discs on gray for the
/// color kind, one vertical bar among horizontal bars on black for the
/// orientation kind. Geometry is deterministic for a given seed.
inline PopoutStimulus synth_popout(PopoutKind kind, int width, int height, std::uint32_t seed) {
    if (width < 32 || height < 32)
        throw std::invalid_argument("synth_popout: image must be at least 32x32");
    std::mt19937 rng(detail::mix_seed(seed, 0x504F5055u));

    PopoutStimulus out{{Plane(width, height), Plane(width, height), Plane(width, height)},
                       Plane(width, height)};

    if (kind == PopoutKind::Color) {
        const double radius = 3.5;
        const int total = 16;  // one red singleton among 15 green distractors
        for (double& v : out.image.red) v = 0.5;
        for (double& v : out.image.green) v = 0.5;
        for (double& v : out.image.blue) v = 0.5;

        std::vector<std::pair<double, double>> centers;
        const double margin = radius + 2.0;
        const double min_dist = 2.0 * radius + 3.0;
        int guard = 0;
        while (static_cast<int>(centers.size()) < total && guard < 20000) {
            ++guard;
            const double cx = margin + detail::uniform01(rng) * (width - 2 * margin);
            const double cy = margin + detail::uniform01(rng) * (height - 2 * margin);
            bool ok = true;
            for (const auto& c : centers) {
                const double dx = c.first - cx;
                const double dy = c.second - cy;
                if (dx * dx + dy * dy < min_dist * min_dist) { ok = false; break; }
            }
            if (ok) centers.emplace_back(cx, cy);
        }
        if (static_cast<int>(centers.size()) < total)
            throw std::runtime_error("synth_popout: could not place discs");

        const std::size_t target =
            static_cast<std::size_t>(detail::uniform01(rng) * centers.size());
        for (std::size_t i = 0; i < centers.size(); ++i) {
            Plane marked(width, height);
            detail::draw_disc(marked, centers[i].first, centers[i].second, radius);
            const bool is_target = (i == target);
            for (std::size_t p = 0; p < marked.size(); ++p) {
                if (marked[p] <= 0.0) continue;
                out.image.red[p] = is_target ? 1.0 : 0.0;
                out.image.green[p] = is_target ? 0.0 : 1.0;
                out.image.blue[p] = 0.0;
                if (is_target) out.target_mask[p] = 1.0;
            }
        }
    } else {
        const int grid = 5;  // 5x5 cells, one vertical singleton among horizontals
        const double cell_w = static_cast<double>(width) / grid;
        const double cell_h = static_cast<double>(height) / grid;
        const double length = std::min(cell_w, cell_h) * 0.6;
        const int target_cell = static_cast<int>(detail::uniform01(rng) * grid * grid);

        Plane gray(width, height);
        for (int cy = 0; cy < grid; ++cy) {
            for (int cx = 0; cx < grid; ++cx) {
                const double jx = (detail::uniform01(rng) - 0.5) * 2.0;
                const double jy = (detail::uniform01(rng) - 0.5) * 2.0;
                const double bx = (cx + 0.5) * cell_w - 0.5 + jx;
                const double by = (cy + 0.5) * cell_h - 0.5 + jy;
                const bool is_target = (cy * grid + cx) == target_cell;
                const double angle = is_target ? std::numbers::pi / 2.0 : 0.0;
                if (is_target) {
                    Plane marked(width, height);
                    detail::draw_bar(marked, bx, by, angle, length, 2.0);
                    for (std::size_t p = 0; p < marked.size(); ++p)
                        if (marked[p] > 0.0) {
                            gray[p] = 1.0;
                            out.target_mask[p] = 1.0;
                        }
                } else {
                    detail::draw_bar(gray, bx, by, angle, length, 2.0);
                }
            }
        }
        out.image.red = gray;
        out.image.green = gray;
        out.image.blue = gray;
    }
    return out;
}

/// Dilates a binary mask by the given radius (chessboard metric).
inline Plane dilate_mask(const Plane& mask, int radius) {
    const int w = mask.width();
    const int h = mask.height();
    Plane out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (mask.at(x, y) <= 0.0) continue;
            for (int dy = -radius; dy <= radius; ++dy)
                for (int dx = -radius; dx <= radius; ++dx) {
                    const int nx = x + dx;
                    const int ny = y + dy;
                    if (nx >= 0 && nx < w && ny >= 0 && ny < h) out.at(nx, ny) = 1.0;
                }
        }
    return out;
}

}  // namespace spikesal

#endif  // SPIKESAL_SYNTHETIC_HPP
