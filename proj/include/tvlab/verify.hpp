#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tvlab/graph.hpp"

namespace tvlab::verify {

struct SuiteParams {
    int n = -1;        // size cap override
    int s = -1;        // class parameter (-1 = suite default / sweep)
    int count = -1;    // random-instance count override
    uint64_t seed = 1;
    int w_samples = -1;  // extension-set samples per instance
};

struct SuiteResult {
    std::string name;
    uint64_t checked = 0;
    uint64_t failures = 0;
    std::string first_failure = {};  // counterexample + context, when failures > 0
    double seconds = 0;
    bool pass() const { return failures == 0; }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteParams& p);

// Labeled trees via Prufer sequences (n >= 1).
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn);
// Exhaustive isomorphism-free tree list (AHU-canonical leaf growth).
std::vector<Graph> nonisomorphic_trees(int n);

}  // namespace tvlab::verify
