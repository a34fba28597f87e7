#pragma once

#include <optional>
#include <string>

#include "manip/instance.hpp"

namespace manip {

/// Exit codes: 0 achievable/true, 1 not achievable/false, 2 usage or
/// input error.
enum ExitCode { kExitTrue = 0, kExitFalse = 1, kExitError = 2 };

struct RunRequest {
    std::string command;  // cup, cup-min, cup-destructive, rr-constructive,
                          // rr-destructive, rr-min, reseed, delim, oracle
    InstanceFile instance;
    std::optional<Team> target;
    std::optional<Team> lose;
    bool json = false;
    int max_coalition = 4;
    int oracle_cap = 20;
    std::string oracle_format = "rr";  // cup | rr | reseed | delim
};

struct RunReport {
    int exit_code = kExitError;
    std::string text;  // rendered human or machine output, newline terminated
};

/// Dispatches to the module operations. Never throws for verdicts; input
/// and usage problems surface as exit code 2 with a diagnostic.
RunReport run(const RunRequest& request);

}  // namespace manip
