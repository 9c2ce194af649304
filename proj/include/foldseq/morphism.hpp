#pragma once

#include "foldseq/graph.hpp"
#include "foldseq/marking.hpp"
#include "foldseq/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fsq {

// Edge -> nonempty reduced edge path, equivariant under reversal.
class GraphMorphism {
public:
    GraphMorphism() = default;
    // images[e] is the image of edge e read forwards.
    GraphMorphism(OrientedGraph dom, OrientedGraph cod, std::vector<Path> images);

    static GraphMorphism identity(const OrientedGraph& g);
    // Rose self-map from words: edge i of R_N goes to words[i].
    static GraphMorphism rose_map(int rank, const std::vector<Word>& words);

    const OrientedGraph& domain() const { return dom_; }
    const OrientedGraph& codomain() const { return cod_; }
    const std::vector<Path>& images() const { return images_; }
    Path image(DirEdge d) const;
    int vertex_image(int v) const { return vmap_[v]; }
    const IntMatrix& incidence() const { return incidence_; }
    bool simplicial() const;
    Path apply(const Path& p) const;  // concatenated, not tightened

    bool operator==(const GraphMorphism& o) const {
        return dom_ == o.dom_ && cod_ == o.cod_ && images_ == o.images_;
    }

private:
    OrientedGraph dom_, cod_;
    std::vector<Path> images_;
    std::vector<int> vmap_;
    IntMatrix incidence_;
};

IntMatrix incidence_matrix(const GraphMorphism& f);
QVec pullback_length(const GraphMorphism& f, const QVec& lambda_h);
QVec pushforward_current(const GraphMorphism& f, const QVec& mu_g);

struct Composite {
    GraphMorphism map;
    bool cancelled = false;  // some composite image needed tightening
};
// g o f
Composite compose(const GraphMorphism& f, const GraphMorphism& g);

struct StallingsFactorization {
    GraphMorphism subdivision;  // f1: G -> G', edge e into |f(e)| pieces
    GraphMorphism simplicial;   // f2: G' -> H
};
StallingsFactorization stallings_factorize(const GraphMorphism& f);

struct Fold {
    DirEdge first, second;  // oriented edges of the graph before the fold, same initial vertex
    bool rank_loss = false;  // the two edges already had the same terminal vertex
    GraphMorphism quotient;  // before -> after, simplicial
};

struct FoldOutcome {
    std::vector<Fold> folds;
    GraphMorphism immersion;  // last folded graph -> codomain
    bool isomorphism = false;
    bool rank_loss = false;
};
// Folds the lexicographically least eligible pair until the map is an immersion.
FoldOutcome fold_until_immersion(const GraphMorphism& simplicial_map);
// Throws Validation when the folds do not end in an isomorphism.
std::vector<Fold> fold_decompose(const GraphMorphism& simplicial_map);

struct MarkingVerdict {
    bool ok = false;
    std::string diagnostic;
    int folds = 0;
};
MarkingVerdict validate_change_of_marking(const GraphMorphism& f);

// Homotopy inverse of a change of marking, as an edge -> path map (possibly empty
// paths before tightening). Returned paths are tightened.
struct PathMap {
    OrientedGraph dom, cod;
    std::vector<Path> images;
    std::vector<int> vmap;
    Path apply(const Path& p) const;
};
PathMap homotopy_inverse(const GraphMorphism& f);

// Automorphism of F_N given as images of x1..xN, and its inverse up to conjugation.
std::vector<Word> rose_automorphism_words(const GraphMorphism& f);
std::vector<Word> inverse_automorphism(const GraphMorphism& f);
Word apply_automorphism(const std::vector<Word>& images, const Word& w);

}  // namespace fsq
