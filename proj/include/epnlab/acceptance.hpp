#pragma once

#include <string>
#include <vector>

namespace epnlab {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// the eight release checks; each runs independently
CheckResult run_check(int id);
std::vector<CheckResult> run_all_checks();

}  // namespace epnlab
