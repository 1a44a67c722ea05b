#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cwilf/parallel.hpp"

namespace cwilf {

/// Runtime configuration shared by the CLI and the verification suite.
/// Environment: CWILF_BUDGET caps enumeration length, CWILF_CACHE names
/// the cache directory (caching is off when unset).
struct RunConfig {
    int budget_n = 9;
    std::string cache_dir;
    enum class Format { Json, Csv, Pretty };
    Format format = Format::Json;
    int threads = 0; // 0 = hardware concurrency

    static RunConfig from_env();
    ParallelContext parallel() const;
};

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full verification suite: nine mathematical criteria plus
/// the thread-count determinism check (which re-runs the nine with one
/// thread and compares report bytes). Results come back in order.
std::vector<CriterionResult> run_acceptance(const RunConfig& config);

/// One "[PASS]/[FAIL] name: detail" line per criterion; returns the
/// number of failures.
int print_acceptance_report(std::ostream& os, const std::vector<CriterionResult>& results);

/// The canonical report text (what --threads determinism compares).
std::string acceptance_report_text(const std::vector<CriterionResult>& results);

} // namespace cwilf
