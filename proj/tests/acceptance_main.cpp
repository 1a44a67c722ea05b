// Verification-suite binary: one pass/fail line per criterion, exit 0
// only when every criterion holds.

#include <iostream>

#include "cwilf/acceptance.hpp"

int main() {
    try {
        const auto cfg = cwilf::RunConfig::from_env();
        const auto results = cwilf::run_acceptance(cfg);
        const int failures = cwilf::print_acceptance_report(std::cout, results);
        return failures == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "verification aborted: " << e.what() << "\n";
        return 1;
    }
}
