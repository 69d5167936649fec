#pragma once

#include "balcone/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace balcone {

// Bad command line: unknown command, wrong arguments, unknown names.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitValidation = 3,
    kExitComputation = 4,
};

struct RunOptions {
    std::vector<std::string> args;
    // Ample class for bound checks in demo; h11 coordinates.
    Vec2 ample{3, 4};
    bool color = false;
    // For render: an existing gap/demo report to draw instead of recomputing.
    std::optional<ordered_json> report;
};

const std::vector<std::string> &commands();

// Runs one command against a scenario. Throws UsageError, ValidationError or
// ComputationError.
Report run(const std::string &command, const Scenario &scenario,
           const RunOptions &options);

// Maps an in-flight exception to the documented exit code.
int exit_code_for(const std::exception &e);

} // namespace balcone
