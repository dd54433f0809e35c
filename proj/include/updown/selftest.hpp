#pragma once

#include <string>
#include <vector>

namespace updown {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the built-in consistency suites with every size bound capped at
/// max_n: golden small cases, equinumeracy with the updown numbers, phi/psi
/// round trips, the updown oracle, ideal counts, lemma closure, penultimate
/// digit and pattern closure.
std::vector<SuiteResult> run_selftest(unsigned max_n, unsigned threads = 0);

}  // namespace updown
