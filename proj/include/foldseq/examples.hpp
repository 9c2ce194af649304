#pragma once

#include "foldseq/sequence.hpp"

#include <random>
#include <string>
#include <vector>

namespace fsq {

// Fibonacci substitution a -> ab, b -> a on R_2.
GraphMorphism fibonacci_map();
FoldingSequence fibonacci_sequence(int steps, Direction dir);

// Identity steps on g (not reduced; used as a degenerate control).
FoldingSequence identity_sequence(const OrientedGraph& g, int steps, Direction dir);

// Letter groups mixed by the two alternating automorphisms (1-based letters).
// Groups are the two halves of the alphabet; a group of one letter borrows a
// neighbour, so rank 3 gives {1,2} and {2,3}.
std::pair<std::vector<int>, std::vector<int>> alternating_groups(int rank);
// Positive automorphism mixing a group: g1 -> g1 g2, gi -> g(i+1), gk -> g1.
GraphMorphism group_mixing_map(int rank, const std::vector<int>& group);
// Exponents 4, 16, 64, ... for the given number of blocks.
std::vector<long> default_schedule(int blocks);

// Block i applies the mixing map of group (i odd ? first : second) exponents[i]
// times. Expanded mode emits one step per application, otherwise one step per
// block with the power map (budgeted).
FoldingSequence alternating_block(int rank, const std::vector<long>& exponents, Direction dir, bool expanded = true);
// Step positions where blocks start, in arrow order, plus the total length.
std::vector<int> block_boundaries(const std::vector<long>& exponents);

// Steps given by rose automorphisms, applied in the listed order.
FoldingSequence custom_sequence(int rank, const std::vector<std::vector<Word>>& automorphisms,
                                const std::vector<int>& schedule, Direction dir);

// Graphs with every valence >= 3 used for sampling: ranks 2 and 3.
std::vector<OrientedGraph> small_graphs(int rank);
// Random spanning tree, letters permuted with random signs, lengths k/8 for k in 1..8.
MarkedGraph random_marked_graph(int rank, std::mt19937_64& rng);
// Product of elementary Nielsen moves x_i -> x_i x_j^{+-1} (positive moves only when positive is set).
std::vector<Word> random_automorphism(int rank, int moves, std::mt19937_64& rng, bool positive = false);

}  // namespace fsq
