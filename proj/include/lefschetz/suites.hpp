#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/report.hpp"

namespace lefschetz {

// Named verification sweeps shared by the CLI `grid` subcommand and the
// acceptance suite.
struct SuiteResult {
    std::vector<VerificationReport> reports;
    bool passed = true;

    void add(VerificationReport r) {
        passed = passed && r.passed;
        reports.push_back(std::move(r));
    }
};

SuiteResult run_thm1_grid();
SuiteResult run_pp_grid();
SuiteResult run_symmetry_grid();
SuiteResult run_toeplitz_random(std::uint64_t seed, int trials);
SuiteResult run_lr_suite(std::uint64_t seed);
SuiteResult run_slow_n5();

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials);

} // namespace lefschetz
