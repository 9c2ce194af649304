#pragma once

#include "foldseq/morphism.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fsq {

struct WalkGenerator {
    std::vector<Word> images;  // rose automorphism, images of x1..xN
    long weight = 1;
};

struct WalkConfig {
    int rank = 2;
    std::vector<WalkGenerator> generators;
    std::uint64_t seed = 0;
    int steps = 0;
    // Exact Lipschitz displacements while every image word has at most this many letters.
    size_t exact_budget = 20000;
};

struct WalkStep {
    int n = 0;
    int generator = -1;        // index into the canonically sorted support
    double displacement = 0;   // d(R, R w_n) + d(R w_n, R), or the proxy
    bool proxy = false;
    std::vector<double> lengths;  // normalized lengths of x1..xN in R w_n
};

struct WalkRecord {
    WalkConfig config;  // generators in canonical order
    std::vector<WalkStep> steps;
    int proxy_from = -1;  // first step using the abelianized proxy
    double rate = 0;       // least-squares slope over the trailing half
    double intercept = 0;
    double slope_dispersion = 0;  // max relative deviation of quarter-window slopes from the rate
    double ratio_dispersion = 0;  // (max - min) / mean of d_n / n over the trailing half
};

// Sorted support with merged weights; throws Validation when a generator is not an automorphism.
std::vector<WalkGenerator> canonical_support(int rank, const std::vector<WalkGenerator>& gens);
// w_{n+1} = w_n g_{n+1} acting on the base rose with unit lengths.
WalkRecord run_walk(const WalkConfig& config);

}  // namespace fsq
