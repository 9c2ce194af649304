#pragma once

#include "foldseq/morphism.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fsq {

enum class Direction { Folding, Unfolding };

std::string to_string(Direction d);
Direction parse_direction(const std::string& s);

using MorphismPtr = std::shared_ptr<const GraphMorphism>;

// Chain G_0 -> G_1 -> ... -> G_L stored in arrow order. Folding sequences use
// indices 0..L; unfolding sequences use -L..0 so that the last graph is G_0.
class FoldingSequence {
public:
    FoldingSequence() = default;
    // Validates every step as a change of marking and every composite as reduced.
    static FoldingSequence build(Direction dir, std::vector<MorphismPtr> steps);
    // Same steps read in the other direction convention.
    FoldingSequence with_direction(Direction dir) const;
    // The first `count` steps.
    FoldingSequence prefix(int count) const;

    Direction direction() const { return dir_; }
    int length() const { return static_cast<int>(steps_.size()); }
    int rank() const { return graphs_.front().rank(); }
    int max_edges() const;

    // Internal positions run 0..length(); user indices follow the direction convention.
    int first_index() const { return dir_ == Direction::Folding ? 0 : -length(); }
    int last_index() const { return dir_ == Direction::Folding ? length() : 0; }
    int pos(int index) const;
    int index_of(int pos) const { return dir_ == Direction::Folding ? pos : pos - length(); }

    const OrientedGraph& graph_at(int pos) const { return graphs_[pos]; }
    const GraphMorphism& step_at(int pos) const { return *steps_[pos]; }
    const MorphismPtr& step_ptr(int pos) const { return steps_[pos]; }
    const IntMatrix& matrix_at(int pos) const { return steps_[pos]->incidence(); }

    // Image of an oriented edge of graph pos `from` in graph `to` (from <= to).
    // Throws Budget when the image would exceed `cap` edges.
    Path image(int from, int to, DirEdge d, size_t cap = 2000000) const;
    Path image_of_path(int from, int to, const Path& p, size_t cap = 2000000) const;
    // First edge of the image in graph `to` (cheap, uses reducedness of composites).
    DirEdge first_edge(int from, int to, DirEdge d) const;
    // First edge of the image in the last graph, for all oriented edges of graph pos.
    const std::vector<DirEdge>& first_edges_to_end(int pos) const { return first_to_end_[pos]; }
    IntMatrix product(int from, int to) const;  // incidence of the composite G_from -> G_to

private:
    void validate();

    Direction dir_ = Direction::Folding;
    std::vector<OrientedGraph> graphs_;
    std::vector<MorphismPtr> steps_;
    std::vector<std::vector<DirEdge>> first_to_end_;
};

// Turns taken by images of earlier edges: turns[pos] lists unordered pairs (a,b), a<b.
std::vector<std::vector<std::pair<DirEdge, DirEdge>>> taken_turns(const FoldingSequence& seq);

}  // namespace fsq
