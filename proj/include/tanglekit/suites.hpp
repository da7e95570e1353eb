#pragma once

#include <string>
#include <vector>

#include "tanglekit/corpus.hpp"

namespace tanglekit {

struct SuiteFailure {
    std::string instance;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    long checked = 0;
    long skipped = 0;  // hypothesis failures, counted so vacuous passes show
    std::vector<SuiteFailure> failures;
    double wall_ms = 0;
    bool complete = true;  // false when the budget ran out
};

struct SuiteOptions {
    int exhaustive_max = 10;  // instances up to this size get exhaustive quantifiers
    int sampled_max = 12;     // larger instances are sampled; above this, skipped
    long budget = 400000;     // work units (quantifier instantiations)
    bool include_random = true;
    std::vector<std::string> only;  // restrict to these instance names
};

std::vector<std::string> suite_ids();
bool suite_exists(const std::string& id);

SuiteReport run_suite(const std::string& id, const SuiteOptions& opts = {});

// Every suite, in catalog order.
std::vector<SuiteReport> run_all_suites(const SuiteOptions& opts = {});

std::string suite_report_json(const SuiteReport& rep, bool pretty = false);

}  // namespace tanglekit
