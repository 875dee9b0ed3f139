#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace radmax {

struct CriterionResult {
    std::string id;
    std::string label;
    bool pass = false;
    bool skipped = false;
    double margin = 0.0; // smallest relative slack observed (negative = violated)
    double seconds = 0.0;
    std::string detail;
};

// Run the full acceptance battery (or the subset whose id contains `filter`),
// with every tolerance pinned in code. Prints one line per criterion.
std::vector<CriterionResult> run_acceptance(const std::string& filter,
                                            unsigned threads, std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace radmax
