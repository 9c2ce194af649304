#include "foldseq/sequence.hpp"

#include <map>
#include <set>

namespace fsq {

std::string to_string(Direction d) { return d == Direction::Folding ? "folding" : "unfolding"; }

Direction parse_direction(const std::string& s) {
    if (s == "folding") return Direction::Folding;
    if (s == "unfolding") return Direction::Unfolding;
    fail(ErrorKind::Malformed, "unknown direction '" + s + "'");
}

int FoldingSequence::max_edges() const {
    int m = 0;
    for (const auto& g : graphs_) m = std::max(m, g.num_edges());
    return m;
}

int FoldingSequence::pos(int index) const {
    if (index < first_index() || index > last_index())
        fail(ErrorKind::Argument, "index " + std::to_string(index) + " outside the stored range");
    return dir_ == Direction::Folding ? index : index + length();
}

FoldingSequence FoldingSequence::build(Direction dir, std::vector<MorphismPtr> steps) {
    if (steps.empty()) fail(ErrorKind::Argument, "a sequence needs at least one step");
    FoldingSequence s;
    s.dir_ = dir;
    s.steps_ = std::move(steps);
    s.graphs_.push_back(s.steps_.front()->domain());
    for (size_t i = 0; i < s.steps_.size(); ++i) {
        if (s.steps_[i]->domain() != s.graphs_.back())
            fail(ErrorKind::Validation, "step " + std::to_string(i) + " does not start at the previous codomain");
        s.graphs_.push_back(s.steps_[i]->codomain());
    }
    s.validate();
    return s;
}

void FoldingSequence::validate() {
    std::set<const OrientedGraph*> checked_graphs;
    for (const auto& g : graphs_) {
        // Public invariants: connected, rank >= 2, valence >= 3.
        (void)OrientedGraph::make(g.num_vertices(), g.ends());
    }
    std::map<const GraphMorphism*, bool> verdicts;
    for (size_t i = 0; i < steps_.size(); ++i) {
        const GraphMorphism* f = steps_[i].get();
        auto it = verdicts.find(f);
        if (it == verdicts.end()) {
            auto v = validate_change_of_marking(*f);
            if (!v.ok) fail(ErrorKind::Validation, "step " + std::to_string(i) + " is not a change of marking: " + v.diagnostic);
            verdicts[f] = true;
        }
    }

    const int L = length();
    first_to_end_.assign(L + 1, {});
    first_to_end_[L].resize(graphs_[L].num_dir_edges());
    for (DirEdge d = 0; d < graphs_[L].num_dir_edges(); ++d) first_to_end_[L][d] = d;
    for (int p = L - 1; p >= 0; --p) {
        first_to_end_[p].resize(graphs_[p].num_dir_edges());
        for (DirEdge d = 0; d < graphs_[p].num_dir_edges(); ++d)
            first_to_end_[p][d] = first_to_end_[p + 1][steps_[p]->image(d).front()];
    }

    auto turns = taken_turns(*this);
    for (int p = 0; p <= L; ++p)
        for (auto [a, b] : turns[p])
            if (first_to_end_[p][a] == first_to_end_[p][b])
                fail(ErrorKind::Validation, "composite map is not reduced: a turn taken at position " +
                                                std::to_string(p) + " is folded later");
}

FoldingSequence FoldingSequence::with_direction(Direction dir) const {
    FoldingSequence s = *this;
    s.dir_ = dir;
    return s;
}

FoldingSequence FoldingSequence::prefix(int count) const {
    if (count < 1 || count > length()) fail(ErrorKind::Argument, "prefix length out of range");
    std::vector<MorphismPtr> st(steps_.begin(), steps_.begin() + count);
    return build(dir_, st);
}

Path FoldingSequence::image(int from, int to, DirEdge d, size_t cap) const { return image_of_path(from, to, {d}, cap); }

Path FoldingSequence::image_of_path(int from, int to, const Path& p, size_t cap) const {
    Path cur = p;
    for (int q = from; q < to; ++q) {
        Path next;
        for (DirEdge d : cur) {
            Path im = steps_[q]->image(d);
            next.insert(next.end(), im.begin(), im.end());
            if (next.size() > cap) fail(ErrorKind::Budget, "image expansion exceeds " + std::to_string(cap) + " edges");
        }
        cur = tighten(next);
    }
    return cur;
}

DirEdge FoldingSequence::first_edge(int from, int to, DirEdge d) const {
    for (int q = from; q < to; ++q) d = steps_[q]->image(d).front();
    return d;
}

IntMatrix FoldingSequence::product(int from, int to) const {
    IntMatrix m = IntMatrix::identity(graphs_[from].num_edges());
    for (int q = from; q < to; ++q) m = steps_[q]->incidence() * m;
    return m;
}

std::vector<std::vector<std::pair<DirEdge, DirEdge>>> taken_turns(const FoldingSequence& seq) {
    const int L = seq.length();
    std::vector<std::vector<std::pair<DirEdge, DirEdge>>> out(L + 1);
    std::set<std::pair<DirEdge, DirEdge>> cur;
    // Distinct step maps contribute the same interior turns; cache them.
    std::map<const GraphMorphism*, std::set<std::pair<DirEdge, DirEdge>>> interior;
    auto mk = [](DirEdge a, DirEdge b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    for (int p = 0; p < L; ++p) {
        const GraphMorphism& f = seq.step_at(p);
        auto it = interior.find(&f);
        if (it == interior.end()) {
            std::set<std::pair<DirEdge, DirEdge>> s;
            for (const auto& im : f.images())
                for (size_t j = 1; j < im.size(); ++j) s.insert(mk(rev(im[j - 1]), im[j]));
            it = interior.emplace(&f, std::move(s)).first;
        }
        std::set<std::pair<DirEdge, DirEdge>> next = it->second;
        for (auto [a, b] : cur) {
            DirEdge x = f.image(a).front(), y = f.image(b).front();
            if (x != y) next.insert(mk(x, y));
        }
        cur = std::move(next);
        out[p + 1].assign(cur.begin(), cur.end());
    }
    return out;
}

}  // namespace fsq
