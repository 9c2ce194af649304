#pragma once

#include "foldseq/measures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsq {

struct ModuliWindow {
    std::vector<int> indices;  // user indices, last one is the limit end
    OrientedGraph graph;       // the graph at the first index
    std::vector<GraphIso> identifications;  // G_index -> graph
    std::vector<QVec> normalized;           // P lambda per index, in graph coordinates
    QVec limit;                             // normalized vector at the last index
    Rational pinch_tol;
    std::vector<int> pinched;  // edges of graph
};

// Default tolerance 1e-3 / |EG|.
ModuliWindow moduli_window(const FoldingSequence& seq, const MeasureTrack& lambda, const std::vector<int>& indices,
                           std::optional<Rational> pinch_tol = std::nullopt);

// Evenly spread indices over the given depth range, ordered toward the limit end.
std::vector<int> default_window(const FoldingSequence& seq, int count = 10);

enum class DecompositionVerdict { Confident, Undecided, Inconsistent };
std::string to_string(DecompositionVerdict v);

struct TransverseDecomposition {
    int k = 0;
    std::vector<int> indices;
    std::vector<int> label;                // per edge of the window graph: 0..k, or -1 when undecided
    std::vector<std::vector<int>> parts;   // parts[i] = edges of H^i
    std::vector<int> undecided;
    // stats[i][t][e] = mu^i lambda (unfolding) or mu lambda^i (folding) at indices[t]
    std::vector<std::vector<QVec>> stats;
    // Folding only: max over j != label(e) of lambda^j / lambda^label(e) at indices[t] (NaN when not defined).
    std::vector<std::vector<double>> ratio_trace;
    std::vector<Rational> thresholds;  // eps times the median nonzero statistic, per component
    DecompositionVerdict verdict = DecompositionVerdict::Undecided;
    std::vector<std::string> issues;
};

// Current components on the window graph; tracks must cover every window index.
TransverseDecomposition transverse_decomposition_unfolding(const FoldingSequence& seq,
                                                           const std::vector<MeasureTrack>& currents,
                                                           const MeasureTrack& lambda, const ModuliWindow& window,
                                                           const Rational& eps = Rational(1, 1000));
TransverseDecomposition transverse_decomposition_folding(const FoldingSequence& seq,
                                                         const std::vector<MeasureTrack>& lengths,
                                                         const MeasureTrack& mu, const ModuliWindow& window,
                                                         const Rational& eps = Rational(1, 1000));

// One track per extreme cluster of the cone, started from a unit vector at the cone's depth.
std::vector<MeasureTrack> ergodic_current_tracks(const FoldingSequence& seq, const ConeApprox& cone);
std::vector<MeasureTrack> ergodic_length_tracks(const FoldingSequence& seq, const ConeApprox& cone);

struct Collapse {
    OrientedGraph quotient;
    std::vector<int> edge_map;    // old edge -> new edge, -1 when collapsed
    std::vector<int> vertex_map;  // old vertex -> new vertex
    std::vector<int> label;       // labels carried to the quotient edges
    // valence[i][v]: oriented edges of label i leaving quotient vertex v
    std::vector<std::vector<int>> valence;
};
// labels may be empty; then all edges carry label 0.
Collapse collapse(const OrientedGraph& g, const std::vector<int>& collapsed, const std::vector<int>& label = {});

// Structural checks on a decomposition after collapsing the pinched part.
std::vector<std::string> structural_violations(const OrientedGraph& g, const TransverseDecomposition& d,
                                               const std::vector<int>& pinched);

enum class RecurrenceKind { Recurrent, Pinching };
struct RecurrenceReport {
    RecurrenceKind kind = RecurrenceKind::Pinching;
    int window = -1;  // index of the window with forest pinched part
    int bound = 0;    // N when recurrent
    int measured_k = 0;
    bool consistent = true;
    std::vector<std::vector<int>> pinched;  // per window
};
RecurrenceReport recurrence_check(const FoldingSequence& seq, const MeasureTrack& lambda,
                                  const std::vector<std::vector<int>>& windows, int measured_k,
                                  std::optional<Rational> pinch_tol = std::nullopt);

bool is_forest(const OrientedGraph& g, const std::vector<int>& edges);

}  // namespace fsq
