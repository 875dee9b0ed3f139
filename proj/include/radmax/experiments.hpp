#pragma once

#include "radmax/config.hpp"

#include <ostream>
#include <string>

namespace radmax {

struct ExperimentOutcome {
    bool all_pass = true;
    std::size_t rows = 0;
    std::string summary;
};

// Dispatch one experiment, stream its CSV to `out`, and return the verdict.
// Numerical failures become failed rows with error strings, never silence.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg, std::ostream& out);

} // namespace radmax
