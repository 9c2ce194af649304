#pragma once

#include "foldseq/marking.hpp"
#include "foldseq/morphism.hpp"
#include "foldseq/sequence.hpp"

#include <string>

namespace fsq {

// Text formats. Ids are 1-based, '#' starts a comment.
//
// Marked graph:
//   VERTICES 2
//   EDGES            one "id init term" per line
//   LENGTHS          one "id num/den" per line, optional
//   MARKING          "tree id id ..." then "id x3" or "id -x3" per loose edge, optional
//
// Morphism: DOMAIN and CODOMAIN sections each holding VERTICES/EDGES, then
//   MORPHISM         one "id: signed ids" per line
//
// Sequence:
//   DIRECTION folding|unfolding
//   STEP file [count]     paths relative to the sequence file
MarkedGraph parse_marked_graph(const std::string& text);
std::string format_marked_graph(const MarkedGraph& t);
GraphMorphism parse_morphism(const std::string& text);
std::string format_morphism(const GraphMorphism& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

MarkedGraph load_marked_graph(const std::string& path);
GraphMorphism load_morphism(const std::string& path);
FoldingSequence load_sequence(const std::string& path);
// Writes one morphism file per distinct step and the sequence file; returns the sequence path.
std::string save_sequence(const FoldingSequence& seq, const std::string& dir, const std::string& name);

}  // namespace fsq
