#pragma once

// Machine-readable experiment reports. A report is pure data with a stable
// JSON schema: parse(serialise(r)) == r field for field, bit for bit on the
// doubles. Coefficient dumps are capped so artifacts stay bounded.

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "tklab/errors.hpp"
#include "tklab/grid.hpp"

namespace tklab {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::size_t kArtifactCap = 1024;

enum class Status { Pass, Fail, Uncertain };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "uncertain";
    }
}

inline Status status_from_string(const std::string& s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "uncertain") return Status::Uncertain;
    throw ParseError("unknown status \"" + s + "\"");
}

struct ExperimentReport {
    std::string experiment_id;
    Status status = Status::Uncertain;
    std::map<std::string, double> metrics;
    std::map<std::string, std::vector<cplx>> artifacts;
    GridConfig config;
    double wall_time = 0.0;
    int schema_version = kReportSchemaVersion;
};

// pass 0, fail 1, uncertain 2. Matches the CLI contract.
inline int exit_code(const ExperimentReport& r) {
    switch (r.status) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    default: return 2;
    }
}

inline void add_artifact(ExperimentReport& r, const std::string& name,
                         const std::vector<cplx>& coeffs) {
    const std::size_t n = std::min(coeffs.size(), kArtifactCap);
    r.artifacts[name].assign(coeffs.begin(), coeffs.begin() + static_cast<long>(n));
}

inline bool operator==(const ExperimentReport& a, const ExperimentReport& b) {
    return a.experiment_id == b.experiment_id && a.status == b.status &&
           a.metrics == b.metrics && a.artifacts == b.artifacts &&
           a.config.grid_size == b.config.grid_size &&
           a.config.truncation == b.config.truncation &&
           a.config.tol_coeff == b.config.tol_coeff &&
           a.config.tol_residual == b.config.tol_residual &&
           a.config.tol_outer == b.config.tol_outer &&
           a.config.tol_branch == b.config.tol_branch &&
           a.config.section_size == b.config.section_size && a.config.seed == b.config.seed &&
           a.wall_time == b.wall_time && a.schema_version == b.schema_version;
}

inline nlohmann::json to_json(const GridConfig& cfg) {
    return {{"grid_size", cfg.grid_size},     {"truncation", cfg.truncation},
            {"tol_coeff", cfg.tol_coeff},     {"tol_residual", cfg.tol_residual},
            {"tol_outer", cfg.tol_outer},     {"tol_branch", cfg.tol_branch},
            {"section_size", cfg.section_size}, {"seed", cfg.seed}};
}

inline GridConfig config_from_json(const nlohmann::json& j) {
    GridConfig cfg;
    if (!j.is_object()) throw ParseError("config expects an object");
    cfg.grid_size = j.at("grid_size").get<std::size_t>();
    cfg.truncation = j.at("truncation").get<std::size_t>();
    cfg.tol_coeff = j.at("tol_coeff").get<double>();
    cfg.tol_residual = j.at("tol_residual").get<double>();
    cfg.tol_outer = j.at("tol_outer").get<double>();
    cfg.tol_branch = j.at("tol_branch").get<double>();
    cfg.section_size = j.at("section_size").get<std::size_t>();
    cfg.seed = j.at("seed").get<unsigned>();
    return cfg;
}

inline nlohmann::json to_json(const ExperimentReport& r) {
    nlohmann::json metrics = nlohmann::json::object();
    for (const auto& [name, value] : r.metrics) metrics[name] = value;
    nlohmann::json artifacts = nlohmann::json::object();
    for (const auto& [name, coeffs] : r.artifacts) {
        nlohmann::json arr = nlohmann::json::array();
        for (const cplx& c : coeffs) arr.push_back({c.real(), c.imag()});
        artifacts[name] = std::move(arr);
    }
    return {{"schema_version", r.schema_version},
            {"experiment_id", r.experiment_id},
            {"status", to_string(r.status)},
            {"metrics", std::move(metrics)},
            {"artifacts", std::move(artifacts)},
            {"config", to_json(r.config)},
            {"wall_time", r.wall_time}};
}

inline ExperimentReport report_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("report expects an object");
    ExperimentReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion)
        throw ParseError("unsupported schema_version " + std::to_string(r.schema_version));
    r.experiment_id = j.at("experiment_id").get<std::string>();
    r.status = status_from_string(j.at("status").get<std::string>());
    for (const auto& item : j.at("metrics").items()) {
        // Infinite metrics (certification gaps with no competing scale)
        // serialize as null; read them back as +infinity.
        if (item.value().is_null())
            r.metrics[item.key()] = std::numeric_limits<double>::infinity();
        else
            r.metrics[item.key()] = item.value().get<double>();
    }
    for (const auto& item : j.at("artifacts").items()) {
        std::vector<cplx> coeffs;
        for (const auto& e : item.value()) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("artifact entry expects [re, im]");
            coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        r.artifacts[item.key()] = std::move(coeffs);
    }
    r.config = config_from_json(j.at("config"));
    r.wall_time = j.at("wall_time").get<double>();
    return r;
}

} // namespace tklab
