#pragma once

#include "foldseq/graph.hpp"

#include <string>
#include <vector>

namespace fsq {

// Word over x1^{+-1}..xN^{+-1}: +k is xk, -k its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse_word(const Word& w);
// Letters a,b,c,... with capitals for inverses (rank <= 26).
std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);

struct Marking {
    std::vector<char> tree;   // per edge: 1 if in the spanning tree
    std::vector<int> letter;  // per edge: 0 for tree edges, else +-k (edge forwards reads xk^{+-1})
};

class MarkedGraph {
public:
    MarkedGraph() = default;
    MarkedGraph(OrientedGraph g, QVec lengths, Marking marking);

    // Rose with edge i reading x_{i+1}.
    static MarkedGraph rose(const QVec& lengths);
    // Marking from a tree and the remaining edges labelled x1.. in edge order.
    static Marking default_marking(const OrientedGraph& g);

    const OrientedGraph& graph() const { return g_; }
    const QVec& lengths() const { return lengths_; }
    const Marking& marking() const { return marking_; }
    int rank() const { return g_.rank(); }
    Rational volume() const;
    bool positive() const;
    MarkedGraph with_lengths(QVec lengths) const;

    Rational length(const Path& p) const;
    // Tree geodesic between vertices.
    Path tree_path(int from, int to) const;
    // Loop at the base vertex reading the single letter (+-k).
    Path letter_loop(int letter) const;
    Path word_loop(const Word& w) const;
    // Letters crossed by a path (tree edges read as nothing).
    Word path_to_word(const Path& p) const;

private:
    OrientedGraph g_;
    QVec lengths_;
    Marking marking_;
    std::vector<DirEdge> parent_;  // tree edge from parent toward the vertex, -1 at base
    std::vector<int> depth_;
    std::vector<DirEdge> letter_edge_;  // letter k -> oriented edge reading xk
};

Rational translation_length(const MarkedGraph& t, const Word& w);
// Cyclically tightened loop of a word.
Path word_cycle(const MarkedGraph& t, const Word& w);

}  // namespace fsq
