#pragma once

#include "foldseq/measures.hpp"
#include "foldseq/sequence.hpp"

#include <vector>

namespace fsq {

struct Turn {
    DirEdge a, b;  // a < b, same initial vertex
    bool legal;
};

struct LegalStructure {
    int index = 0;
    std::vector<Turn> turns;
    bool gate_complete = false;  // every oriented edge has a legal continuation
};

// Legality with respect to the composite from G_n to the last graph.
LegalStructure gates(const FoldingSequence& seq, int n);

// Which turns a harvested path may cross. EdgeGenerated keeps turns crossed by
// images of edges of deeper graphs; AllLegal keeps every legal turn.
enum class LanguageMode { EdgeGenerated, AllLegal };

struct LanguageApprox {
    int depth = 0;
    int length = 0;
    std::vector<Path> words;  // sorted, both orientations present
    bool short_images = false;  // every edge image was shorter than L (deepest graph only)
    long unoriented_count() const;
};

// Words of length L in the last graph, harvested from images of paths of the
// graph `depth` steps back.
LanguageApprox allowed_words(const FoldingSequence& seq, int depth, int L,
                             LanguageMode mode = LanguageMode::EdgeGenerated);

struct ComplexityProfile {
    int depth = 0;
    std::vector<long> counts;      // counts[L-1] = |B_L| up to orientation
    std::vector<double> entropy;   // log|B_L| / L
    double entropy_at_max = 0.0;
    bool subexponential = false;   // entropy estimates decreasing over the upper half of L
};
ComplexityProfile complexity_profile(const FoldingSequence& seq, const std::vector<int>& depths, int L_max,
                                     LanguageMode mode = LanguageMode::EdgeGenerated);

// alpha(gamma) = sum_e mu(e) <gamma, phi(e)> at the graph `depth` steps back.
Rational cylinder_weight(const FoldingSequence& seq, const MeasureTrack& mu, const Path& gamma, int depth);
// Same weight summed over gamma and its reverse.
Rational cylinder_weight_symmetric(const FoldingSequence& seq, const MeasureTrack& mu, const Path& gamma, int depth);

struct SandwichCheck {
    Rational extensions_sum;  // sum over one-edge extensions
    Rational value;
    Rational defect;          // sum_e mu(e)
    bool holds = false;
};
SandwichCheck kolmogorov_sandwich(const FoldingSequence& seq, const MeasureTrack& mu, const Path& gamma, int depth);

struct ComponentReport {
    int count = 0;
    int bound = 0;  // 3N-3
    std::vector<long> component_sizes;
};
ComponentReport minimal_components(const FoldingSequence& seq, int depth, int L,
                                   LanguageMode mode = LanguageMode::EdgeGenerated);

}  // namespace fsq
