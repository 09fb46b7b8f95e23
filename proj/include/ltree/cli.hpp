#pragma once

#include <string>
#include <vector>

#include "ltree/checker.hpp"

namespace ltree {

inline constexpr const char* kToolVersion = "ltree 1.0.0";
inline constexpr int kReportSchemaVersion = 1;

struct RunConfig {
    GroupId group = GroupId::Int;
    std::string space_spec;  // empty when only condition-a runs
    SpacePtr space;          // built during validation
    std::vector<std::string> checks;
    std::vector<std::string> expectations;  // "pass" / "fail", paired with checks by position
    std::uint64_t seed = 0;
    long samples = 1000;
    int chain_depth = 20;
    std::string format = "json";
    std::string out_path;  // empty = stdout
};

/// Parses and validates argv (without the program name). Throws
/// std::invalid_argument / parse_error naming the violated precondition.
RunConfig parse_config(const std::vector<std::string>& args);

struct RunReport {
    RunConfig config;
    std::vector<CheckReport> checks;
    int exit_status = 0;
};

RunReport run(const RunConfig& config);

/// Canonical serialization: identical reports produce identical bytes.
std::string emit(const RunReport& report);

int cli_main(int argc, char** argv);

}  // namespace ltree
