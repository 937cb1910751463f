// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_CONFIG_HPP
#define SPIKESAL_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spikesal {

/// Every tunable constant of the pipeline in one validated record.
/// Defaults reproduce the benchmark behaviour; the synaptic weights were
/// tuned once against the colormix / oriented-bars images and frozen here.
struct PipelineConfig {
    // Working resolution (images are resized to resolution x resolution).
    int resolution = 64;

    // V1 double-opponent receptive fields.
    double sigma_cen = 1.2;
    double sigma_sur = 1.6;

    // V1 oriented filters (third derivative of Gaussian, 8 angles).
    double v1_sigma = 1.5;
    int v1_radius = 4;  // 9x9 kernels
    double alpha_v1lin = 1.0;
    double sigma_norm = 0.1;  // semisaturation constant of divisive normalization

    // Per-color weights of the cross-color subtraction.
    double alpha_red = 0.8;
    double alpha_green = 1.0;
    double alpha_blue = 1.0;
    double alpha_yellow = 0.9;
    double alpha_cyan = 1.0;
    double alpha_magenta = 1.0;

    // Saliency post-processing thresholds.
    double keep_fraction_color = 0.7;      // zero values below 0.7 * max
    double count_threshold_color = 0.2;    // N_c counts values > 0.2 * max
    double count_threshold_orient = 0.5;   // N_theta counts values >= 0.5 * max
    int smooth_passes = 1;                 // applications of K per smoothing step
    double drop_bottom_fraction = 0.0;     // optional final-map cleanup, off by default

    // Spiking-network substrate.
    double max_rate_hz = 50.0;
    double duration_ms = 500.0;
    double step_ms = 1.0;
    double exc_weight = 16.0;        // one-to-one primary color / orientation drive
    double secondary_weight = 11.0;  // each of the two afferents of cyan and magenta
    double inh_weight = 8.0;         // magnitude of cyan/magenta -> yellow inhibition
    double izh_a = 0.02;             // Izhikevich regular-spiking cell
    double izh_b = 0.2;
    double izh_c = -65.0;
    double izh_d = 8.0;

    // Evaluation.
    double center_sigma_divisor = 4.0;  // center prior sigma = min(H,W) / divisor
    double density_sigma = 2.0;         // blur used when a dataset ships no density maps

    std::uint32_t seed = 0;

    /// Throws std::invalid_argument when any constraint is violated.
    void validate() const {
        if (resolution < 1) throw std::invalid_argument("config: resolution must be >= 1");
        if (sigma_cen <= 0 || sigma_sur <= 0)
            throw std::invalid_argument("config: sigmas must be positive");
        if (sigma_cen >= sigma_sur)
            throw std::invalid_argument("config: sigma_cen must be smaller than sigma_sur");
        if (v1_sigma <= 0) throw std::invalid_argument("config: v1_sigma must be positive");
        if (v1_radius < 1) throw std::invalid_argument("config: v1_radius must be >= 1");
        if (sigma_norm <= 0) throw std::invalid_argument("config: sigma_norm must be positive");
        for (double a : {alpha_red, alpha_green, alpha_blue, alpha_yellow, alpha_cyan,
                         alpha_magenta}) {
            if (a <= 0.0 || a > 1.0)
                throw std::invalid_argument("config: alpha weights must lie in (0,1]");
        }
        for (double t : {keep_fraction_color, count_threshold_color, count_threshold_orient}) {
            if (t <= 0.0 || t >= 1.0)
                throw std::invalid_argument("config: thresholds must lie in (0,1)");
        }
        if (smooth_passes < 1)
            throw std::invalid_argument("config: smooth_passes must be >= 1");
        if (drop_bottom_fraction < 0.0 || drop_bottom_fraction >= 1.0)
            throw std::invalid_argument("config: drop_bottom_fraction must lie in [0,1)");
        if (max_rate_hz <= 0) throw std::invalid_argument("config: max_rate_hz must be positive");
        if (step_ms <= 0) throw std::invalid_argument("config: step_ms must be positive");
        const double steps = duration_ms / step_ms;
        if (duration_ms <= 0 || std::abs(steps - std::round(steps)) > 1e-9)
            throw std::invalid_argument(
                "config: duration_ms must be a positive multiple of step_ms");
        if (center_sigma_divisor <= 0)
            throw std::invalid_argument("config: center_sigma_divisor must be positive");
        if (density_sigma <= 0)
            throw std::invalid_argument("config: density_sigma must be positive");
    }

    int steps() const { return static_cast<int>(std::llround(duration_ms / step_ms)); }

    double alpha_for(const std::string& color) const {
        if (color == "red") return alpha_red;
        if (color == "green") return alpha_green;
        if (color == "blue") return alpha_blue;
        if (color == "yellow") return alpha_yellow;
        if (color == "cyan") return alpha_cyan;
        if (color == "magenta") return alpha_magenta;
        throw std::invalid_argument("config: unknown color name " + color);
    }

    /// Key/value view used by config files, CLI overrides and reports.
    std::vector<std::pair<std::string, std::string>> items() const;
    void set(const std::string& key, const std::string& value);
};

namespace detail {

inline double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for " + key + ": " + value);
    }
    if (used != value.size())
        throw std::invalid_argument("config: bad numeric value for " + key + ": " + value);
    return v;
}

inline std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline std::vector<std::pair<std::string, std::string>> PipelineConfig::items() const {
    using detail::format_double;
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("resolution", std::to_string(resolution));
    out.emplace_back("sigma_cen", format_double(sigma_cen));
    out.emplace_back("sigma_sur", format_double(sigma_sur));
    out.emplace_back("v1_sigma", format_double(v1_sigma));
    out.emplace_back("v1_radius", std::to_string(v1_radius));
    out.emplace_back("alpha_v1lin", format_double(alpha_v1lin));
    out.emplace_back("sigma_norm", format_double(sigma_norm));
    out.emplace_back("alpha_red", format_double(alpha_red));
    out.emplace_back("alpha_green", format_double(alpha_green));
    out.emplace_back("alpha_blue", format_double(alpha_blue));
    out.emplace_back("alpha_yellow", format_double(alpha_yellow));
    out.emplace_back("alpha_cyan", format_double(alpha_cyan));
    out.emplace_back("alpha_magenta", format_double(alpha_magenta));
    out.emplace_back("keep_fraction_color", format_double(keep_fraction_color));
    out.emplace_back("count_threshold_color", format_double(count_threshold_color));
    out.emplace_back("count_threshold_orient", format_double(count_threshold_orient));
    out.emplace_back("smooth_passes", std::to_string(smooth_passes));
    out.emplace_back("drop_bottom_fraction", format_double(drop_bottom_fraction));
    out.emplace_back("max_rate_hz", format_double(max_rate_hz));
    out.emplace_back("duration_ms", format_double(duration_ms));
    out.emplace_back("step_ms", format_double(step_ms));
    out.emplace_back("exc_weight", format_double(exc_weight));
    out.emplace_back("secondary_weight", format_double(secondary_weight));
    out.emplace_back("inh_weight", format_double(inh_weight));
    out.emplace_back("izh_a", format_double(izh_a));
    out.emplace_back("izh_b", format_double(izh_b));
    out.emplace_back("izh_c", format_double(izh_c));
    out.emplace_back("izh_d", format_double(izh_d));
    out.emplace_back("center_sigma_divisor", format_double(center_sigma_divisor));
    out.emplace_back("density_sigma", format_double(density_sigma));
    out.emplace_back("seed", std::to_string(seed));
    return out;
}

inline void PipelineConfig::set(const std::string& key, const std::string& value) {
    using detail::parse_double;
    if (key == "resolution") resolution = static_cast<int>(parse_double(key, value));
    else if (key == "sigma_cen") sigma_cen = parse_double(key, value);
    else if (key == "sigma_sur") sigma_sur = parse_double(key, value);
    else if (key == "v1_sigma") v1_sigma = parse_double(key, value);
    else if (key == "v1_radius") v1_radius = static_cast<int>(parse_double(key, value));
    else if (key == "alpha_v1lin") alpha_v1lin = parse_double(key, value);
    else if (key == "sigma_norm") sigma_norm = parse_double(key, value);
    else if (key == "alpha_red") alpha_red = parse_double(key, value);
    else if (key == "alpha_green") alpha_green = parse_double(key, value);
    else if (key == "alpha_blue") alpha_blue = parse_double(key, value);
    else if (key == "alpha_yellow") alpha_yellow = parse_double(key, value);
    else if (key == "alpha_cyan") alpha_cyan = parse_double(key, value);
    else if (key == "alpha_magenta") alpha_magenta = parse_double(key, value);
    else if (key == "keep_fraction_color") keep_fraction_color = parse_double(key, value);
    else if (key == "count_threshold_color") count_threshold_color = parse_double(key, value);
    else if (key == "count_threshold_orient") count_threshold_orient = parse_double(key, value);
    else if (key == "smooth_passes") smooth_passes = static_cast<int>(parse_double(key, value));
    else if (key == "drop_bottom_fraction") drop_bottom_fraction = parse_double(key, value);
    else if (key == "max_rate_hz") max_rate_hz = parse_double(key, value);
    else if (key == "duration_ms") duration_ms = parse_double(key, value);
    else if (key == "step_ms") step_ms = parse_double(key, value);
    else if (key == "exc_weight") exc_weight = parse_double(key, value);
    else if (key == "secondary_weight") secondary_weight = parse_double(key, value);
    else if (key == "inh_weight") inh_weight = parse_double(key, value);
    else if (key == "izh_a") izh_a = parse_double(key, value);
    else if (key == "izh_b") izh_b = parse_double(key, value);
    else if (key == "izh_c") izh_c = parse_double(key, value);
    else if (key == "izh_d") izh_d = parse_double(key, value);
    else if (key == "center_sigma_divisor") center_sigma_divisor = parse_double(key, value);
    else if (key == "density_sigma") density_sigma = parse_double(key, value);
    else if (key == "seed") seed = static_cast<std::uint32_t>(parse_double(key, value));
    else throw std::invalid_argument("config: unknown key " + key);
}

/// Parses a flat "key = value" config file. Blank lines and lines starting
/// with '#' are ignored. Unknown keys and malformed lines are errors.
inline void apply_config_file(PipelineConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: missing '=' at " + path + ":" +
                                        std::to_string(lineno));
        const std::string key = detail::trim(t.substr(0, eq));
        const std::string value = detail::trim(t.substr(eq + 1));
        config.set(key, value);
    }
}

}  // namespace spikesal

#endif  // SPIKESAL_CONFIG_HPP
