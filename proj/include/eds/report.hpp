#pragma once

#include "eds/dsl.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eds {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "edsv-report/1";

enum class Verdict { verified, failed, ambiguous };

const char* to_string(Verdict v);
// 0 verified, 1 failed, 3 ambiguous. Parse and usage errors exit with 2.
int exit_code(Verdict v);

using Json = nlohmann::ordered_json;

struct Report {
    std::string command;
    std::string system;
    Verdict verdict = Verdict::verified;
    std::optional<std::uint64_t> seed;
    Json certificates = Json::array();
    Json constraints = Json::array();
    Json violations = Json::array();
    Json checks = Json::array();
    Json numeric;  // null unless a numeric check ran
    std::vector<std::string> undecided;
    Json results = Json::object();
    std::vector<std::string> lines;  // human-readable body

    void downgrade(Verdict v);  // keeps the worse of the two (failed > ambiguous > verified)
    Json to_json() const;
    std::string machine() const;
    std::string human() const;
};

struct RunOptions {
    std::string command;  // close, section, prolong, conserve, backlund, audit
    bool eliminate = false;
    bool extract = false;
    std::string connection;
    std::string assume_case;
    std::string expect;  // constraint set to compare against
    std::string realize;
    std::string candidate;
    std::string backlund;
    std::string table;
    std::vector<std::string> assume;  // extra relations, e.g. "beta = 2"
    std::map<std::string, Rational> numeric;
    bool run_numeric = false;
    std::uint64_t seed = 1;
    int trials = 20;
    double tol = 1e-9;
    std::string primary = "u";
};

// Runs one command. Usage problems (unknown names, missing options) throw
// eds::Error; undecidable case splits become an ambiguous verdict.
Report run(const SystemFile& file, const RunOptions& opts);

// Error report used when parsing or option handling fails.
Report usage_error(const std::string& command, const std::string& message);

}  // namespace eds
