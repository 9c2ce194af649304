#include "foldseq/examples.hpp"

#include <numeric>

namespace fsq {

GraphMorphism fibonacci_map() { return GraphMorphism::rose_map(2, {{1, 2}, {1}}); }

FoldingSequence fibonacci_sequence(int steps, Direction dir) {
    if (steps < 1) fail(ErrorKind::Argument, "need at least one step");
    auto f = std::make_shared<const GraphMorphism>(fibonacci_map());
    return FoldingSequence::build(dir, std::vector<MorphismPtr>(steps, f));
}

FoldingSequence identity_sequence(const OrientedGraph& g, int steps, Direction dir) {
    if (steps < 1) fail(ErrorKind::Argument, "need at least one step");
    auto f = std::make_shared<const GraphMorphism>(GraphMorphism::identity(g));
    return FoldingSequence::build(dir, std::vector<MorphismPtr>(steps, f));
}

std::pair<std::vector<int>, std::vector<int>> alternating_groups(int rank) {
    if (rank < 2) fail(ErrorKind::Argument, "rank must be at least 2");
    std::vector<int> g1, g2;
    const int half = (rank + 1) / 2;
    for (int i = 1; i <= rank; ++i) (i <= half ? g1 : g2).push_back(i);
    if (g1.size() == 1) g1.push_back(2);
    if (g2.size() == 1) g2.insert(g2.begin(), g2.front() - 1);
    return {g1, g2};
}

GraphMorphism group_mixing_map(int rank, const std::vector<int>& group) {
    if (group.size() < 2) fail(ErrorKind::Argument, "a mixing group needs two letters");
    std::vector<Word> words(rank);
    for (int i = 1; i <= rank; ++i) words[i - 1] = {i};
    const size_t k = group.size();
    words[group[0] - 1] = {group[0], group[1]};
    for (size_t i = 1; i + 1 < k; ++i) words[group[i] - 1] = {group[i + 1]};
    words[group[k - 1] - 1] = {group[0]};
    return GraphMorphism::rose_map(rank, words);
}

std::vector<long> default_schedule(int blocks) {
    if (blocks < 1) fail(ErrorKind::Argument, "need at least one block");
    std::vector<long> out;
    long e = 1;
    for (int i = 0; i < blocks; ++i) out.push_back(e *= 4);
    return out;
}

std::vector<int> block_boundaries(const std::vector<long>& exponents) {
    std::vector<int> out{0};
    for (long e : exponents) out.push_back(out.back() + static_cast<int>(e));
    return out;
}

FoldingSequence alternating_block(int rank, const std::vector<long>& exponents, Direction dir, bool expanded) {
    if (exponents.empty()) fail(ErrorKind::Argument, "empty exponent schedule");
    long total = 0;
    for (long e : exponents) {
        if (e < 1) fail(ErrorKind::Argument, "exponents must be positive");
        total += e;
    }
    if (total > 200000) fail(ErrorKind::Budget, "schedule too long");
    auto [g1, g2] = alternating_groups(rank);
    auto m1 = std::make_shared<const GraphMorphism>(group_mixing_map(rank, g1));
    auto m2 = std::make_shared<const GraphMorphism>(group_mixing_map(rank, g2));
    std::vector<MorphismPtr> steps;
    for (size_t b = 0; b < exponents.size(); ++b) {
        const MorphismPtr& m = b % 2 == 0 ? m1 : m2;
        if (expanded) {
            steps.insert(steps.end(), exponents[b], m);
            continue;
        }
        std::vector<Word> base = rose_automorphism_words(*m), cur = base;
        for (long i = 1; i < exponents[b]; ++i) {
            std::vector<Word> next(rank);
            size_t size = 0;
            for (int j = 0; j < rank; ++j) {
                next[j] = apply_automorphism(base, cur[j]);
                size += next[j].size();
            }
            if (size > 1000000) fail(ErrorKind::Budget, "block power too long; use expanded mode");
            cur = std::move(next);
        }
        steps.push_back(std::make_shared<const GraphMorphism>(GraphMorphism::rose_map(rank, cur)));
    }
    return FoldingSequence::build(dir, steps);
}

FoldingSequence custom_sequence(int rank, const std::vector<std::vector<Word>>& automorphisms,
                                const std::vector<int>& schedule, Direction dir) {
    std::vector<MorphismPtr> maps;
    for (const auto& a : automorphisms) maps.push_back(std::make_shared<const GraphMorphism>(GraphMorphism::rose_map(rank, a)));
    std::vector<MorphismPtr> steps;
    for (int i : schedule) {
        if (i < 0 || i >= static_cast<int>(maps.size())) fail(ErrorKind::Argument, "schedule refers to unknown map");
        steps.push_back(maps[i]);
    }
    return FoldingSequence::build(dir, steps);
}

std::vector<OrientedGraph> small_graphs(int rank) {
    if (rank == 2)
        return {OrientedGraph::rose(2), OrientedGraph::theta(), OrientedGraph::make(2, {{0, 0}, {0, 1}, {1, 1}})};
    if (rank == 3)
        return {OrientedGraph::rose(3),
                OrientedGraph::make(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}),
                OrientedGraph::make(2, {{0, 0}, {0, 1}, {0, 1}, {1, 1}}),
                OrientedGraph::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}),
                OrientedGraph::make(4, {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 3}}),
                OrientedGraph::make(4, {{0, 0}, {1, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}})};
    fail(ErrorKind::Argument, "sample graphs exist for ranks 2 and 3");
}

MarkedGraph random_marked_graph(int rank, std::mt19937_64& rng) {
    auto graphs = small_graphs(rank);
    const OrientedGraph& g = graphs[rng() % graphs.size()];
    const int ne = g.num_edges();
    std::vector<int> order(ne);
    std::iota(order.begin(), order.end(), 0);
    for (int i = ne - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    Marking m{std::vector<char>(ne, 0), std::vector<int>(ne, 0)};
    std::vector<int> loose;
    for (int e : order) {
        int a = root(g.ends()[e].first), b = root(g.ends()[e].second);
        if (a != b) {
            parent[a] = b;
            m.tree[e] = 1;
        } else {
            loose.push_back(e);
        }
    }
    for (size_t k = 0; k < loose.size(); ++k) m.letter[loose[k]] = (rng() % 2 ? 1 : -1) * static_cast<int>(k + 1);
    QVec lengths(ne);
    for (auto& l : lengths) l = Rational(static_cast<long>(rng() % 8 + 1)) / 8;
    return MarkedGraph(g, lengths, m);
}

std::vector<Word> random_automorphism(int rank, int moves, std::mt19937_64& rng, bool positive) {
    std::vector<Word> w(rank);
    for (int i = 0; i < rank; ++i) w[i] = {i + 1};
    for (int step = 0; step < moves; ++step) {
        int i = static_cast<int>(rng() % rank), j = static_cast<int>(rng() % (rank - 1));
        if (j >= i) ++j;
        int s = positive || rng() % 2 ? 1 : -1;
        std::vector<Word> el(rank);
        for (int k = 0; k < rank; ++k) el[k] = {k + 1};
        el[i] = {i + 1, s * (j + 1)};
        for (auto& x : w) x = apply_automorphism(el, x);
    }
    return w;
}

}  // namespace fsq
