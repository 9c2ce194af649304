#pragma once

#include "foldseq/marking.hpp"
#include "foldseq/morphism.hpp"

#include <string>
#include <vector>

namespace fsq {

// Embedded circles, deduplicated up to rotation and inversion.
std::vector<Path> embedded_circles(const OrientedGraph& g);

enum class CandidateShape { EmbeddedCircle, FigureEight, Barbell };
std::string to_string(CandidateShape s);

struct CandidateLoop {
    Path loop;  // cyclic, canonical rotation
    CandidateShape shape;
};
// Rank <= 5.
std::vector<CandidateLoop> candidates(const MarkedGraph& t);

struct LipschitzDistance {
    Rational ratio;      // max l_U(g) / l_T(g)
    double value = 0.0;  // log ratio
    Word witness;        // a conjugacy class realizing the maximum
};
// twist, when given, is an automorphism precomposed with the marking of u: l(g) = l_U(twist(g)).
LipschitzDistance lipschitz_distance(const MarkedGraph& t, const MarkedGraph& u, const std::vector<Word>& twist = {});
// Maximum over cyclically reduced words of length <= max_len.
LipschitzDistance lipschitz_bruteforce(const MarkedGraph& t, const MarkedGraph& u, int max_len,
                                       const std::vector<Word>& twist = {});
// Every candidate reads a word of length at most twice the rank.
int bruteforce_length(const MarkedGraph& t);

// Edge crossings of the tightened loop of w.
QVec current_of_word(const MarkedGraph& t, const Word& w);
Rational kl_pairing(const MarkedGraph& t, const QVec& mu);

struct Thickness {
    Rational injectivity_radius;  // shortest embedded circle
    Rational normalized;          // radius / volume
    bool thick = false;           // normalized >= eps
};
Thickness thickness(const MarkedGraph& t, const Rational& eps);

struct ThickFit {
    double C = 0.0;  // median of d(U,T) / d(T,U)
    double B = 0.0;  // smallest additive constant making every sample satisfy d(U,T) <= B + C d(T,U)
    int samples = 0;
};
ThickFit fit_thick_constants(const std::vector<std::pair<double, double>>& forward_backward);

struct FreeFactor {
    std::vector<int> edges;  // a subgraph representing it
    int rank = 0;
    std::vector<Word> basis;
    std::string canonical;   // core graph canonical form
};
std::vector<FreeFactor> factor_projection(const MarkedGraph& t);
// Canonical form of the conjugacy class of the subgroup generated by the words.
std::string subgroup_core_form(const std::vector<Word>& gens);

}  // namespace fsq
