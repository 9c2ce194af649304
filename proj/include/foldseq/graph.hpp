#pragma once

#include "foldseq/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fsq {

// Oriented edge code: 2*e for edge e read forwards, 2*e+1 for its reverse.
using DirEdge = int;
using Path = std::vector<DirEdge>;

inline DirEdge rev(DirEdge d) { return d ^ 1; }
inline int edge_of(DirEdge d) { return d >> 1; }
inline bool is_reversed(DirEdge d) { return (d & 1) != 0; }
inline DirEdge forward(int e) { return 2 * e; }

// Signed 1-based edge ids as used in files and reports: +k is edge k-1 forwards.
int signed_id(DirEdge d);
DirEdge from_signed_id(int id, int num_edges);

class OrientedGraph {
public:
    OrientedGraph() = default;

    // Public constructor: connected, rank >= 2, every vertex of valence >= 3.
    static OrientedGraph make(int num_vertices, const std::vector<std::pair<int, int>>& edges);
    // Internal constructor used for subdivisions, folds and subgraphs: only checks endpoints.
    static OrientedGraph make_unchecked(int num_vertices, const std::vector<std::pair<int, int>>& edges);

    static OrientedGraph rose(int rank);
    static OrientedGraph theta();

    int num_vertices() const { return nv_; }
    int num_edges() const { return static_cast<int>(ends_.size()); }
    int num_dir_edges() const { return 2 * num_edges(); }
    int init(DirEdge d) const { return is_reversed(d) ? ends_[edge_of(d)].second : ends_[edge_of(d)].first; }
    int term(DirEdge d) const { return init(rev(d)); }
    const std::vector<DirEdge>& out_edges(int v) const { return out_[v]; }
    int valence(int v) const { return static_cast<int>(out_[v].size()); }
    int rank() const { return num_edges() - nv_ + 1; }  // valid for connected graphs
    bool connected() const;
    const std::vector<std::pair<int, int>>& ends() const { return ends_; }

    bool operator==(const OrientedGraph& o) const { return nv_ == o.nv_ && ends_ == o.ends_; }
    bool operator!=(const OrientedGraph& o) const { return !(*this == o); }

private:
    void build_adjacency();

    int nv_ = 0;
    std::vector<std::pair<int, int>> ends_;
    std::vector<std::vector<DirEdge>> out_;
};

bool composable(const OrientedGraph& g, const Path& p);
// Throws Malformed if p is not a composable edge sequence.
void check_path(const OrientedGraph& g, const Path& p);
bool is_reduced(const Path& p);
bool is_cyclically_reduced(const Path& p);
Path reverse_path(const Path& p);

// Free reduction rel endpoints.
Path tighten(const Path& p);
Path tighten(const OrientedGraph& g, const Path& p);
// Free reduction followed by cyclic reduction (for closed paths).
Path cyclic_tighten(const Path& p);
Path cyclic_tighten(const OrientedGraph& g, const Path& p);

// Canonical representative of a cyclic path up to rotation and inversion.
Path canonical_cyclic(const Path& p);

// Number of crossings of each unoriented edge.
std::vector<int> crossing_counts(const Path& p, int num_edges);
// Occurrences of needle inside hay as an oriented subword.
long count_occurrences(const Path& needle, const Path& hay);

std::string path_to_string(const Path& p);  // signed 1-based ids separated by spaces

// Graph isomorphism as a bijection on oriented edges (dir_map[d] in h) and vertices.
struct GraphIso {
    std::vector<DirEdge> dir_map;
    std::vector<int> vertex_map;
};
bool find_isomorphism(const OrientedGraph& g, const OrientedGraph& h, GraphIso& iso);

}  // namespace fsq
