// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_SNN_HPP
#define SPIKESAL_SNN_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spikesal/config.hpp"
#include "spikesal/plane.hpp"

namespace spikesal {

/// Izhikevich cell parameters. Defaults are the regular-spiking set.
struct IzhikevichParams {
    double a = 0.02;
    double b = 0.2;
    double c = -65.0;
    double d = 8.0;
};

/// A topographic population, one neuron per pixel.
struct NeuronGroup {
    std::string name;
    int width = 0;
    int height = 0;
    IzhikevichParams dynamics;

    int count() const { return width * height; }
};

/// A topographic spike source, one Poisson generator per pixel.
struct InputGroup {
    std::string name;
    int width = 0;
    int height = 0;

    int count() const { return width * height; }
};

enum class SynapseSign { Excitatory, Inhibitory };

/// One-to-one topographic projection. Weight is a positive current
/// magnitude; inhibitory projections inject it with a negative sign.
struct Projection {
    std::string source;
    std::string target;
    SynapseSign sign = SynapseSign::Excitatory;
    double weight = 0.0;

    double signed_weight() const {
        return sign == SynapseSign::Excitatory ? weight : -weight;
    }
};

/// Complete network description: spike sources, neuron populations and the
/// projections wiring them, plus the simulation timing and seed.
struct NetworkSpec {
    std::vector<InputGroup> inputs;
    std::vector<NeuronGroup> groups;
    std::vector<Projection> projections;
    double duration_ms = 500.0;
    double step_ms = 1.0;
    double max_rate_hz = 50.0;
    std::uint32_t seed = 0;

    int steps() const { return static_cast<int>(std::llround(duration_ms / step_ms)); }

    const InputGroup* find_input(const std::string& name) const {
        for (const auto& g : inputs)
            if (g.name == name) return &g;
        return nullptr;
    }

    const NeuronGroup* find_group(const std::string& name) const {
        for (const auto& g : groups)
            if (g.name == name) return &g;
        return nullptr;
    }

    void validate() const {
        if (duration_ms <= 0 || step_ms <= 0)
            throw std::invalid_argument("network: duration and step must be positive");
        const double n = duration_ms / step_ms;
        if (std::abs(n - std::round(n)) > 1e-9)
            throw std::invalid_argument("network: duration must be a multiple of the step");
        if (max_rate_hz <= 0)
            throw std::invalid_argument("network: max_rate_hz must be positive");
        for (const auto& p : projections) {
            const bool src_ok = find_input(p.source) || find_group(p.source);
            if (!src_ok)
                throw std::invalid_argument("network: projection from undefined group " +
                                            p.source);
            const NeuronGroup* tgt = find_group(p.target);
            if (!tgt)
                throw std::invalid_argument("network: projection onto undefined group " +
                                            p.target);
            if (p.weight < 0)
                throw std::invalid_argument("network: projection weight must be nonnegative");
            int sw = 0, sh = 0;
            if (const InputGroup* in = find_input(p.source)) { sw = in->width; sh = in->height; }
            else { const NeuronGroup* g = find_group(p.source); sw = g->width; sh = g->height; }
            if (sw != tgt->width || sh != tgt->height)
                throw std::invalid_argument("network: projection endpoint sizes differ");
        }
    }
};

/// Per-pixel spike counts of one population over a run.
struct SpikeCountPlane {
    std::string group;
    int width = 0;
    int height = 0;
    std::vector<int> counts;

    int at(int x, int y) const {
        return counts[static_cast<std::size_t>(y) * width + x];
    }

    long long total() const {
        long long s = 0;
        for (int c : counts) s += c;
        return s;
    }
};

/// Dense spike raster of one source: steps x neurons, one byte per cell.
class SpikeTrain {
public:
    SpikeTrain() = default;
    SpikeTrain(int steps, int neurons)
        : steps_(steps), neurons_(neurons),
          spikes_(static_cast<std::size_t>(steps) * neurons, 0) {}

    int steps() const { return steps_; }
    int neurons() const { return neurons_; }

    std::uint8_t at(int step, int neuron) const {
        return spikes_[static_cast<std::size_t>(step) * neurons_ + neuron];
    }
    void set(int step, int neuron) {
        spikes_[static_cast<std::size_t>(step) * neurons_ + neuron] = 1;
    }
    const std::uint8_t* row(int step) const {
        return spikes_.data() + static_cast<std::size_t>(step) * neurons_;
    }

    long long total() const {
        long long s = 0;
        for (std::uint8_t v : spikes_) s += v;
        return s;
    }

    bool operator==(const SpikeTrain& other) const {
        return steps_ == other.steps_ && neurons_ == other.neurons_ &&
               spikes_ == other.spikes_;
    }

private:
    int steps_ = 0;
    int neurons_ = 0;
    std::vector<std::uint8_t> spikes_;
};

namespace detail {

// 32-bit engine output mapped to [0,1); identical across standard libraries.
inline double uniform01(std::mt19937& rng) {
    return rng() * (1.0 / 4294967296.0);
}

// Stable per-source seed derivation (splitmix-style mix).
inline std::uint32_t mix_seed(std::uint32_t seed, std::uint32_t stream) {
    std::uint64_t z = (static_cast<std::uint64_t>(seed) << 32) | (stream + 0x9E3779B9u);
    z ^= z >> 33;
    z *= 0xFF51AFD7ED558CCDull;
    z ^= z >> 33;
    z *= 0xC4CEB9FE1A85EC53ull;
    z ^= z >> 33;
    return static_cast<std::uint32_t>(z);
}

}  // namespace detail

/// Rate-codes a [0,1] response plane as independent per-neuron Bernoulli
/// spike trains: p(spike per step) = value * max_rate * step / 1000.
/// Bit-identical output for identical inputs and seed.
inline SpikeTrain poisson_encode(const ResponsePlane& plane, double max_rate_hz,
                                 double duration_ms, double step_ms, std::uint32_t seed) {
    if (max_rate_hz <= 0) throw std::invalid_argument("poisson_encode: max_rate must be positive");
    if (duration_ms <= 0 || step_ms <= 0)
        throw std::invalid_argument("poisson_encode: duration and step must be positive");
    for (double v : plane)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("poisson_encode: values must lie in [0,1]");

    const int steps = static_cast<int>(std::llround(duration_ms / step_ms));
    const int n = static_cast<int>(plane.size());
    SpikeTrain train(steps, n);
    std::mt19937 rng(seed);
    const double rate_scale = max_rate_hz * step_ms / 1000.0;
    for (int t = 0; t < steps; ++t) {
        for (int i = 0; i < n; ++i) {
            const double p = plane[i] * rate_scale;
            if (detail::uniform01(rng) < p) train.set(t, i);
        }
    }
    return train;
}

struct SimulationOptions {
    std::ostream* raster = nullptr;  // optional "<group> <neuron> <time-ms>" dump
};

/// Discrete-time simulation. A spike fired at step t (by a source or a
/// neuron) is delivered as synaptic current at step t+1; neurons integrate
/// with the Izhikevich update and reset on threshold crossing at +30 mV.
inline std::map<std::string, SpikeCountPlane> simulate(
    const NetworkSpec& spec, const std::map<std::string, SpikeTrain>& inputs,
    const SimulationOptions& options = {}) {
    spec.validate();
    const int steps = spec.steps();

    for (const auto& in : spec.inputs) {
        auto it = inputs.find(in.name);
        if (it == inputs.end())
            throw std::invalid_argument("simulate: missing input spike train for " + in.name);
        if (it->second.steps() != steps || it->second.neurons() != in.count())
            throw std::invalid_argument("simulate: spike train shape mismatch for " + in.name);
    }
    for (const auto& kv : inputs)
        if (!spec.find_input(kv.first))
            throw std::invalid_argument("simulate: unexpected input group " + kv.first);

    struct GroupState {
        const NeuronGroup* group;
        std::vector<double> v, u;
        std::vector<double> current_now, current_next;
        std::vector<std::uint8_t> fired;
        std::vector<int> counts;
    };
    std::vector<GroupState> states;
    states.reserve(spec.groups.size());
    std::map<std::string, int> group_index;
    for (const auto& g : spec.groups) {
        GroupState st;
        st.group = &g;
        const int n = g.count();
        st.v.assign(n, g.dynamics.c);
        st.u.assign(n, g.dynamics.b * g.dynamics.c);
        st.current_now.assign(n, 0.0);
        st.current_next.assign(n, 0.0);
        st.fired.assign(n, 0);
        st.counts.assign(n, 0);
        group_index[g.name] = static_cast<int>(states.size());
        states.push_back(std::move(st));
    }

    const double dt = spec.step_ms;
    for (int t = 0; t < steps; ++t) {
        // Integrate and fire with the current delivered from step t-1.
        for (auto& st : states) {
            const IzhikevichParams& p = st.group->dynamics;
            const int n = st.group->count();
            for (int i = 0; i < n; ++i) {
                double v = st.v[i];
                double u = st.u[i];
                const double I = st.current_now[i];
                // Two half-steps on v for numerical stability, then u.
                v += 0.5 * dt * (0.04 * v * v + 5.0 * v + 140.0 - u + I);
                v += 0.5 * dt * (0.04 * v * v + 5.0 * v + 140.0 - u + I);
                u += dt * p.a * (p.b * v - u);
                if (v >= 30.0) {
                    st.fired[i] = 1;
                    ++st.counts[i];
                    v = p.c;
                    u += p.d;
                    if (options.raster)
                        (*options.raster) << st.group->name << ' ' << i << ' ' << t * dt << '\n';
                } else {
                    st.fired[i] = 0;
                }
                st.v[i] = v;
                st.u[i] = u;
                st.current_now[i] = 0.0;
            }
        }

        if (options.raster) {
            for (const auto& in : spec.inputs) {
                const SpikeTrain& train = inputs.at(in.name);
                for (int i = 0; i < in.count(); ++i)
                    if (train.at(t, i))
                        (*options.raster) << in.name << ' ' << i << ' ' << t * dt << '\n';
            }
        }

        // Deliver this step's spikes to the next step.
        for (const auto& proj : spec.projections) {
            auto tgt_it = group_index.find(proj.target);
            GroupState& tgt = states[tgt_it->second];
            const double w = proj.signed_weight();
            const int n = tgt.group->count();
            if (const InputGroup* in = spec.find_input(proj.source)) {
                const std::uint8_t* pre = inputs.at(in->name).row(t);
                for (int i = 0; i < n; ++i)
                    if (pre[i]) tgt.current_next[i] += w;
            } else {
                const GroupState& src = states[group_index.at(proj.source)];
                for (int i = 0; i < n; ++i)
                    if (src.fired[i]) tgt.current_next[i] += w;
            }
        }
        for (auto& st : states) std::swap(st.current_now, st.current_next);
    }

    std::map<std::string, SpikeCountPlane> out;
    for (auto& st : states) {
        SpikeCountPlane plane;
        plane.group = st.group->name;
        plane.width = st.group->width;
        plane.height = st.group->height;
        plane.counts = std::move(st.counts);
        out.emplace(plane.group, std::move(plane));
    }
    return out;
}

/// Spike counts as a real-valued response plane (plain cast, no scaling).
inline ResponsePlane spike_counts_to_response(const SpikeCountPlane& counts) {
    Plane out(counts.width, counts.height);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<double>(counts.counts[i]);
    return out;
}

// V4 color names in the order used throughout the color pathway.
inline const std::vector<std::string>& v4_color_names() {
    static const std::vector<std::string> names{"red", "green", "blue",
                                                "yellow", "cyan", "magenta"};
    return names;
}

/// The ventral network: four V1 opponent sources feeding six hue-selective
/// V4 populations. Primary hues receive their same-center source one-to-one;
/// cyan pools green+blue centers and magenta red+blue centers at the
/// secondary weight; both inhibit the yellow population.
inline NetworkSpec build_v4_network(const PipelineConfig& config) {
    config.validate();
    const int w = config.resolution;
    const int h = config.resolution;
    const IzhikevichParams dyn{config.izh_a, config.izh_b, config.izh_c, config.izh_d};

    NetworkSpec spec;
    spec.duration_ms = config.duration_ms;
    spec.step_ms = config.step_ms;
    spec.max_rate_hz = config.max_rate_hz;
    spec.seed = config.seed;

    for (const char* name : {"red_center", "green_center", "yellow_center", "blue_center"})
        spec.inputs.push_back(InputGroup{name, w, h});
    for (const std::string& name : v4_color_names())
        spec.groups.push_back(NeuronGroup{name, w, h, dyn});

    const double we = config.exc_weight;
    const double ws = config.secondary_weight;
    const double wi = config.inh_weight;
    using S = SynapseSign;
    spec.projections = {
        {"red_center", "red", S::Excitatory, we},
        {"green_center", "green", S::Excitatory, we},
        {"blue_center", "blue", S::Excitatory, we},
        {"yellow_center", "yellow", S::Excitatory, we},
        {"green_center", "cyan", S::Excitatory, ws},
        {"blue_center", "cyan", S::Excitatory, ws},
        {"red_center", "magenta", S::Excitatory, ws},
        {"blue_center", "magenta", S::Excitatory, ws},
        {"cyan", "yellow", S::Inhibitory, wi},
        {"magenta", "yellow", S::Inhibitory, wi},
    };
    spec.validate();
    return spec;
}

inline std::string mt_group_name(int k) { return "theta_" + std::to_string(k); }
inline std::string mt_input_name(int k) { return "v1_theta_" + std::to_string(k); }

/// The dorsal network: eight V1 orientation channels driving eight MT
/// populations through one-to-one excitatory projections.
inline NetworkSpec build_mt_network(const PipelineConfig& config) {
    config.validate();
    const int w = config.resolution;
    const int h = config.resolution;
    const IzhikevichParams dyn{config.izh_a, config.izh_b, config.izh_c, config.izh_d};

    NetworkSpec spec;
    spec.duration_ms = config.duration_ms;
    spec.step_ms = config.step_ms;
    spec.max_rate_hz = config.max_rate_hz;
    spec.seed = config.seed;

    for (int k = 0; k < 8; ++k) {
        spec.inputs.push_back(InputGroup{mt_input_name(k), w, h});
        spec.groups.push_back(NeuronGroup{mt_group_name(k), w, h, dyn});
        spec.projections.push_back(
            Projection{mt_input_name(k), mt_group_name(k), SynapseSign::Excitatory,
                       config.exc_weight});
    }
    spec.validate();
    return spec;
}

/// Encodes one drive plane per input group, with a stable per-source seed
/// derived from the spec seed and the input's position in the spec.
inline std::map<std::string, SpikeTrain> encode_inputs(
    const NetworkSpec& spec, const std::map<std::string, ResponsePlane>& drives) {
    std::map<std::string, SpikeTrain> out;
    for (std::size_t i = 0; i < spec.inputs.size(); ++i) {
        const InputGroup& in = spec.inputs[i];
        auto it = drives.find(in.name);
        if (it == drives.end())
            throw std::invalid_argument("encode_inputs: missing drive for " + in.name);
        if (it->second.width() != in.width || it->second.height() != in.height)
            throw std::invalid_argument("encode_inputs: drive shape mismatch for " + in.name);
        const std::uint32_t seed =
            detail::mix_seed(spec.seed, static_cast<std::uint32_t>(i));
        out.emplace(in.name, poisson_encode(it->second, spec.max_rate_hz, spec.duration_ms,
                                            spec.step_ms, seed));
    }
    return out;
}

}  // namespace spikesal

#endif  // SPIKESAL_SNN_HPP
