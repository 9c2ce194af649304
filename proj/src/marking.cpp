#include "foldseq/marking.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace fsq {

Word free_reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word t = free_reduce(w);
    size_t lo = 0, hi = t.size();
    while (hi - lo >= 2 && t[lo] == -t[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(t.begin() + lo, t.begin() + hi);
}

Word inverse_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& x : r) x = -x;
    return r;
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (int x : w) {
        int k = std::abs(x);
        if (k > 26) fail(ErrorKind::Argument, "letter index too large for text form");
        s += static_cast<char>((x > 0 ? 'a' : 'A') + k - 1);
    }
    return s;
}

Word parse_word(const std::string& s) {
    Word w;
    for (char c : s) {
        if (std::islower(static_cast<unsigned char>(c)))
            w.push_back(c - 'a' + 1);
        else if (std::isupper(static_cast<unsigned char>(c)))
            w.push_back(-(c - 'A' + 1));
        else if (!std::isspace(static_cast<unsigned char>(c)))
            fail(ErrorKind::Malformed, std::string("bad letter '") + c + "' in word");
    }
    return w;
}

MarkedGraph::MarkedGraph(OrientedGraph g, QVec lengths, Marking marking)
    : g_(std::move(g)), lengths_(std::move(lengths)), marking_(std::move(marking)) {
    const int ne = g_.num_edges();
    if (static_cast<int>(lengths_.size()) != ne) fail(ErrorKind::Malformed, "length vector size mismatch");
    for (const auto& x : lengths_)
        if (x < 0) fail(ErrorKind::Validation, "negative edge length");
    if (static_cast<int>(marking_.tree.size()) != ne || static_cast<int>(marking_.letter.size()) != ne)
        fail(ErrorKind::Malformed, "marking size mismatch");

    // Tree must be spanning and acyclic.
    int tree_edges = 0;
    for (int e = 0; e < ne; ++e) tree_edges += marking_.tree[e] ? 1 : 0;
    if (tree_edges != g_.num_vertices() - 1) fail(ErrorKind::Validation, "marking tree has wrong edge count");
    parent_.assign(g_.num_vertices(), -1);
    depth_.assign(g_.num_vertices(), -1);
    depth_[0] = 0;
    std::vector<int> queue{0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (DirEdge d : g_.out_edges(v)) {
            if (!marking_.tree[edge_of(d)]) continue;
            int w = g_.term(d);
            if (depth_[w] != -1) continue;
            depth_[w] = depth_[v] + 1;
            parent_[w] = d;
            queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != g_.num_vertices()) fail(ErrorKind::Validation, "marking tree is not spanning");

    const int n = g_.rank();
    letter_edge_.assign(n + 1, -1);
    for (int e = 0; e < ne; ++e) {
        int l = marking_.letter[e];
        if (marking_.tree[e]) {
            if (l != 0) fail(ErrorKind::Validation, "tree edge carries a basis letter");
            continue;
        }
        int k = std::abs(l);
        if (k < 1 || k > n) fail(ErrorKind::Validation, "basis letter out of range");
        if (letter_edge_[k] != -1) fail(ErrorKind::Validation, "basis letter used twice");
        letter_edge_[k] = l > 0 ? forward(e) : rev(forward(e));
    }
}

MarkedGraph MarkedGraph::rose(const QVec& lengths) {
    OrientedGraph g = OrientedGraph::rose(static_cast<int>(lengths.size()));
    return MarkedGraph(g, lengths, default_marking(g));
}

Marking MarkedGraph::default_marking(const OrientedGraph& g) {
    Marking m;
    const int ne = g.num_edges();
    m.tree.assign(ne, 0);
    m.letter.assign(ne, 0);
    std::vector<char> seen(g.num_vertices(), 0);
    seen[0] = 1;
    std::vector<int> queue{0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (DirEdge d : g.out_edges(v)) {
            int w = g.term(d);
            if (seen[w]) continue;
            seen[w] = 1;
            m.tree[edge_of(d)] = 1;
            queue.push_back(w);
        }
    }
    int k = 0;
    for (int e = 0; e < ne; ++e)
        if (!m.tree[e]) m.letter[e] = ++k;
    return m;
}

Rational MarkedGraph::volume() const {
    Rational s = 0;
    for (const auto& x : lengths_) s += x;
    return s;
}

bool MarkedGraph::positive() const {
    for (const auto& x : lengths_)
        if (x <= 0) return false;
    return true;
}

MarkedGraph MarkedGraph::with_lengths(QVec lengths) const { return MarkedGraph(g_, std::move(lengths), marking_); }

Rational MarkedGraph::length(const Path& p) const {
    Rational s = 0;
    for (DirEdge d : p) s += lengths_[edge_of(d)];
    return s;
}

Path MarkedGraph::tree_path(int from, int to) const {
    // Climb both endpoints to their common ancestor.
    Path up, down;
    int a = from, b = to;
    while (depth_[a] > depth_[b]) {
        up.push_back(rev(parent_[a]));
        a = g_.init(parent_[a]);
    }
    while (depth_[b] > depth_[a]) {
        down.push_back(parent_[b]);
        b = g_.init(parent_[b]);
    }
    while (a != b) {
        up.push_back(rev(parent_[a]));
        a = g_.init(parent_[a]);
        down.push_back(parent_[b]);
        b = g_.init(parent_[b]);
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

Path MarkedGraph::letter_loop(int letter) const {
    int k = std::abs(letter);
    if (k < 1 || k >= static_cast<int>(letter_edge_.size())) fail(ErrorKind::Argument, "letter out of range");
    DirEdge d = letter > 0 ? letter_edge_[k] : rev(letter_edge_[k]);
    Path p = tree_path(0, g_.init(d));
    p.push_back(d);
    Path back = tree_path(g_.term(d), 0);
    p.insert(p.end(), back.begin(), back.end());
    return p;
}

Path MarkedGraph::word_loop(const Word& w) const {
    Path p;
    for (int x : w) {
        Path l = letter_loop(x);
        p.insert(p.end(), l.begin(), l.end());
    }
    return p;
}

Word MarkedGraph::path_to_word(const Path& p) const {
    Word w;
    for (DirEdge d : p) {
        int l = marking_.letter[edge_of(d)];
        if (l == 0) continue;
        w.push_back(is_reversed(d) ? -l : l);
    }
    return w;
}

Path word_cycle(const MarkedGraph& t, const Word& w) { return cyclic_tighten(t.word_loop(w)); }

Rational translation_length(const MarkedGraph& t, const Word& w) {
    if (w.empty()) return 0;
    return t.length(word_cycle(t, w));
}

}  // namespace fsq
