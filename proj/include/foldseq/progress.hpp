#pragma once

#include "foldseq/measures.hpp"
#include "foldseq/metric.hpp"

#include <optional>
#include <vector>

namespace fsq {

// A cyclic loop fills when it crosses every edge.
bool fills(const Path& loop, const OrientedGraph& g);

struct NonFillingWitness {
    int index = 0;        // user index n
    int horizon = 0;      // p
    Path circle;          // embedded circle of G_n
    std::vector<int> missed;  // per q = 0..p, an edge of G_{n+q} missed by the image
};

// First embedded circle of G_n (in canonical order) whose images miss an edge
// of every graph in the window [n, n+p].
std::optional<NonFillingWitness> non_filling_witness(const FoldingSequence& seq, int n, int p);

struct HorizonPoint {
    int index = 0;
    int horizon = -1;      // w(n); -1 when every circle already fills
    bool reaches_end = false;  // the witness survives to the last graph
    bool truncated = false;    // an exact image exceeded the budget; horizon is a lower bound
    Path circle;
};
// w(n) for the given user indices (all indices when empty).
std::vector<HorizonPoint> ff_progress_diagnostic(const FoldingSequence& seq, const std::vector<int>& indices = {});

// Re-derives the missed edges of a witness from exact images (budgeted).
bool verify_witness(const FoldingSequence& seq, const NonFillingWitness& w);

struct StretchSample {
    int from = 0, to = 0;  // user indices
    Rational ratio;        // Lipschitz stretch between volume-normalized graphs
    double distance = 0.0;
};

struct SpeedReport {
    long max_entry = 0;  // M
    bool growing_entries = false;  // maxima on the second half exceed the first half
    std::vector<StretchSample> samples;
    double speed = 0.0;  // least-squares slope of distance against the gap
    double C = 0.0;      // smallest C with d <= C gap + C on the samples
    bool bound_holds = true;
};
// Pairs (m, m+g) for g = 1..max_gap and m on the stride.
SpeedReport linearity_and_speed(const FoldingSequence& seq, const MeasureTrack& lambda, int max_gap = 8,
                                int stride = 1);
// d(G_m, G_n) along the sequence, with lengths lambda normalized to volume 1.
StretchSample stretch_between(const FoldingSequence& seq, const MeasureTrack& lambda, int m, int n);

}  // namespace fsq
