// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_REPORT_HPP
#define SPIKESAL_REPORT_HPP

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spikesal/config.hpp"
#include "spikesal/metrics.hpp"

namespace spikesal {

/// One evaluated image: its scores, or the error that excluded it.
struct ReportRow {
    std::string id;
    std::optional<MetricReport> scores;
    std::string error;  // non-empty when scores are absent
    double wall_ms = 0.0;
};

/// Full evaluation run: per-image rows plus aggregate means over the
/// successfully scored images. The effective config travels with it.
struct RunReport {
    std::vector<ReportRow> rows;
    PipelineConfig config;
    double wall_ms = 0.0;

    int scored() const {
        int n = 0;
        for (const auto& r : rows)
            if (r.scores) ++n;
        return n;
    }

    int failed() const { return static_cast<int>(rows.size()) - scored(); }

    /// Arithmetic mean of the per-image scores listed in the rows.
    MetricReport aggregate() const {
        MetricReport agg;
        const int n = scored();
        if (n == 0) return agg;
        for (const auto& r : rows) {
            if (!r.scores) continue;
            agg.sim += r.scores->sim;
            agg.nss += r.scores->nss;
            agg.cc += r.scores->cc;
            agg.kl += r.scores->kl;
            agg.ig_center += r.scores->ig_center;
            agg.ig_chance += r.scores->ig_chance;
        }
        agg.sim /= n;
        agg.nss /= n;
        agg.cc /= n;
        agg.kl /= n;
        agg.ig_center /= n;
        agg.ig_chance /= n;
        return agg;
    }
};

inline void write_text_report(std::ostream& os, const RunReport& report) {
    os << "# spikesal evaluation report\n";
    os << "# seed = " << report.config.seed << "\n";
    os << "# wall_ms = " << report.wall_ms << "\n";
    for (const auto& kv : report.config.items())
        os << "# config: " << kv.first << " = " << kv.second << "\n";

    os << std::left << std::setw(24) << "image" << std::right << std::setw(9) << "SIM"
       << std::setw(9) << "NSS" << std::setw(9) << "CC" << std::setw(9) << "KL"
       << std::setw(11) << "IG_center" << std::setw(11) << "IG_chance" << std::setw(10)
       << "wall_ms" << "\n";
    os << std::fixed << std::setprecision(4);
    for (const auto& row : report.rows) {
        os << std::left << std::setw(24) << row.id << std::right;
        if (row.scores) {
            os << std::setw(9) << row.scores->sim << std::setw(9) << row.scores->nss
               << std::setw(9) << row.scores->cc << std::setw(9) << row.scores->kl
               << std::setw(11) << row.scores->ig_center << std::setw(11)
               << row.scores->ig_chance << std::setw(10) << std::setprecision(1)
               << row.wall_ms << std::setprecision(4);
        } else {
            os << "  error: " << row.error;
        }
        os << "\n";
    }
    const MetricReport agg = report.aggregate();
    os << std::left << std::setw(24) << "aggregate" << std::right << std::setw(9) << agg.sim
       << std::setw(9) << agg.nss << std::setw(9) << agg.cc << std::setw(9) << agg.kl
       << std::setw(11) << agg.ig_center << std::setw(11) << agg.ig_chance << "\n";
    os << "# scored " << report.scored() << " image(s), " << report.failed()
       << " failure(s)\n";
    os.unsetf(std::ios::fixed);
}

inline nlohmann::json to_json(const MetricReport& m) {
    return nlohmann::json{{"sim", m.sim},       {"nss", m.nss},
                          {"cc", m.cc},         {"kl", m.kl},
                          {"ig_center", m.ig_center}, {"ig_chance", m.ig_chance}};
}

inline nlohmann::json to_json(const RunReport& report) {
    nlohmann::json config = nlohmann::json::object();
    for (const auto& kv : report.config.items()) config[kv.first] = kv.second;

    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json j{{"image", row.id}, {"wall_ms", row.wall_ms}};
        if (row.scores)
            j["scores"] = to_json(*row.scores);
        else
            j["error"] = row.error;
        rows.push_back(std::move(j));
    }
    return nlohmann::json{{"config", config},
                          {"seed", report.config.seed},
                          {"wall_ms", report.wall_ms},
                          {"images", rows},
                          {"aggregate", to_json(report.aggregate())},
                          {"scored", report.scored()},
                          {"failures", report.failed()}};
}

inline void write_json_report(std::ostream& os, const RunReport& report) {
    os << to_json(report).dump(2) << "\n";
}

}  // namespace spikesal

#endif  // SPIKESAL_REPORT_HPP
