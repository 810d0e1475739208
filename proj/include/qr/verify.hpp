#pragma once

#include "qr/fraction.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qr {

struct SuiteOptions {
    int max_den = 12;
    int max_num = 12;  // bound on |numerator|
    int depth = 4;
    std::vector<double> q_samples = {0.3, 0.45, 0.7};
    int threads = 0;  // 0 = hardware concurrency
};

struct SuiteResult {
    std::string name;
    long cases = 0;
    std::vector<std::string> failures;  // machine-readable JSON, deterministic order
    bool ok() const { return failures.empty(); }
};

/// Registered suites: duality, positivity, qfarey-duality, qgcd, main-theorem,
/// markov-q, fence, companions, geometry.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

/// All reduced fractions with |num| <= max_num, 1 <= den <= max_den, ordered
/// by (den, num); infinity appended when requested.
std::vector<Fraction> enumerate_fractions(int max_num, int max_den, bool with_infinity);

/// Runs fn(i) for i in [0, n) on a worker pool; non-empty returns are
/// collected as failures in index order.
std::vector<std::string> parallel_cases(long n, int threads,
                                        const std::function<std::string(long)>& fn);

}  // namespace qr
