#pragma once

#include "foldseq/sequence.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace fsq {

enum class TrackKind { Length, Current };

// Vectors at internal positions lo..hi. Length tracks satisfy v[p] = M_p^T v[p+1],
// current tracks v[p+1] = M_p v[p].
struct MeasureTrack {
    TrackKind kind = TrackKind::Length;
    int lo = 0, hi = 0;
    std::vector<QVec> v;
    const QVec& at(int pos) const { return v[pos - lo]; }
    bool covers(int pos) const { return pos >= lo && pos <= hi; }
};

MeasureTrack simplicial_length_measure(const FoldingSequence& seq);
MeasureTrack frequency_current(const FoldingSequence& seq);
// Length track from a vector at `pos`, pulled back to position 0.
MeasureTrack length_track_from(const FoldingSequence& seq, int pos, const QVec& lambda);
// Current track from a vector at `pos`, pushed forward to the end.
MeasureTrack current_track_from(const FoldingSequence& seq, int pos, const QVec& mu);
// Exact recurrence check.
bool track_valid(const FoldingSequence& seq, const MeasureTrack& t);
// Throws Validation on a recurrence violation or when the pairing varies.
Rational area(const FoldingSequence& seq, const MeasureTrack& lambda, const MeasureTrack& mu);

struct HilbertDistance {
    bool infinite = false;
    Rational cross_ratio;  // exp(distance), >= 1
    double value = 0.0;    // log of cross_ratio, +inf when infinite
};
HilbertDistance hilbert_distance(const QVec& x, const QVec& y);

struct ConeApprox {
    int ambient = 0;
    int depth = 0;
    int rank = 0;
    double tol = 1e-8;
    std::vector<QVec> generators;  // l1-normalized
    HilbertDistance diameter;
    std::vector<std::pair<int, int>> diameter_pair;  // a pair realising the diameter
    std::vector<int> extreme;                        // indices of extreme generators
    std::vector<std::vector<int>> clusters;          // extreme indices grouped at tol
    int dimension = 0;
    bool dimension_capped = false;
    std::vector<double> history;  // diameter at depth 0..depth (inf when supports differ)
};

// Columns of M_{-1} ... M_{-m}.
ConeApprox current_cone(const FoldingSequence& seq, int depth, double tol = 1e-8);
// Rows of M_{n-1} ... M_0.
ConeApprox length_cone(const FoldingSequence& seq, int depth, double tol = 1e-8);
// Cone analysis of an explicit generator list (history left empty).
ConeApprox analyze_generators(const std::vector<QVec>& gens, double tol, int rank);

enum class VerdictKind { Unique, Multiple, Undecided };
struct ErgodicityVerdict {
    VerdictKind kind = VerdictKind::Undecided;
    int k = 0;
    std::string reason;
};
std::string to_string(const ErgodicityVerdict& v);
ErgodicityVerdict ergodicity_verdict(const ConeApprox& cone, double tol);

struct DecayReport {
    std::vector<int> indices;
    std::vector<Rational> lambda_max, lambda_min, mu_max, mu_min;
    bool lengths_decay = false;  // lambda shrinks toward later indices, strictly overall
    bool currents_grow = false;  // mu grows toward later indices, strictly overall
    bool reduced_consistent = false;
};
DecayReport decay_check(const FoldingSequence& seq, const MeasureTrack& lambda, const MeasureTrack& mu);

struct ReducedWindowVerdict {
    bool witness_found = false;
    std::vector<std::vector<int>> chain;  // edge sets per index in the window
    int n0 = 0, n1 = 0;
};
ReducedWindowVerdict is_reduced_window(const FoldingSequence& seq, int n0, int n1);

}  // namespace fsq
