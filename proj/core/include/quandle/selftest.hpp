#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace qdl {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double budget = 0;
    std::string detail;
};

// The ten acceptance checks.  oracle_path points at the committed
// brute-force values, corpus_dir at the shipped diagram corpus.  A
// criterion fails if its checks fail or its runtime exceeds the budget.
std::vector<CriterionResult> run_acceptance(const std::string& oracle_path,
                                            const std::string& corpus_dir,
                                            std::uint64_t seed = 1);

std::string format_results(const std::vector<CriterionResult>& rs);
bool all_pass(const std::vector<CriterionResult>& rs);

} // namespace qdl
