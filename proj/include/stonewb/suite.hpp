#pragma once

// The acceptance battery: property checks over generated corpora, one
// result per criterion, reported without timings so that reports are
// byte-identical across runs.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stonewb/space.hpp"

namespace stonewb {

struct SuiteOptions {
    std::uint64_t seed = 42;
    SoberMode mode = SoberMode::standard;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = true;
    std::size_t instances = 0;
    std::size_t cases = 0;
    std::string counterexample;  // first failure
    nlohmann::json detail = nlohmann::json::object();
};

/// Criteria 1..11; criterion 12 concerns the CLI and is checked outside.
inline constexpr int kSuiteCriteria = 11;

std::string criterion_name(int id);
CriterionResult run_criterion(int id, const SuiteOptions& options);
std::vector<CriterionResult> run_suite(const SuiteOptions& options);

nlohmann::json to_json(const CriterionResult& r);
nlohmann::json suite_report(const std::vector<CriterionResult>& results, const SuiteOptions& options);

}  // namespace stonewb
