#include "foldseq/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace fsq {

namespace {

int pos_at_depth(const FoldingSequence& seq, int depth) {
    if (depth < 0 || depth > seq.length())
        fail(ErrorKind::Argument, "depth " + std::to_string(depth) + " outside 0.." + std::to_string(seq.length()));
    return seq.length() - depth;
}

Path canonical_orientation(const Path& w) {
    Path r = reverse_path(w);
    return std::min(w, r);
}

// allowed[a][b] for oriented edges a, b leaving the same vertex.
std::vector<std::vector<char>> allowed_turns(const FoldingSequence& seq, int pos, LanguageMode mode) {
    const OrientedGraph& g = seq.graph_at(pos);
    const int nd = g.num_dir_edges();
    std::vector<std::vector<char>> ok(nd, std::vector<char>(nd, 0));
    if (mode == LanguageMode::AllLegal) {
        const auto& first = seq.first_edges_to_end(pos);
        for (int v = 0; v < g.num_vertices(); ++v)
            for (DirEdge a : g.out_edges(v))
                for (DirEdge b : g.out_edges(v))
                    if (a != b && first[a] != first[b]) ok[a][b] = 1;
    } else {
        auto turns = taken_turns(seq);
        for (auto [a, b] : turns[pos]) ok[a][b] = ok[b][a] = 1;
    }
    return ok;
}

}  // namespace

LegalStructure gates(const FoldingSequence& seq, int n) {
    const int p = seq.pos(n);
    const OrientedGraph& g = seq.graph_at(p);
    const auto& first = seq.first_edges_to_end(p);
    LegalStructure out;
    out.index = n;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& outs = g.out_edges(v);
        for (size_t i = 0; i < outs.size(); ++i)
            for (size_t j = i + 1; j < outs.size(); ++j) {
                DirEdge a = std::min(outs[i], outs[j]), b = std::max(outs[i], outs[j]);
                out.turns.push_back({a, b, first[a] != first[b]});
            }
    }
    std::sort(out.turns.begin(), out.turns.end(),
              [](const Turn& x, const Turn& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    out.gate_complete = true;
    for (DirEdge d = 0; d < g.num_dir_edges(); ++d) {
        // d arrives at term(d); the turn is {rev(d), e}.
        bool found = false;
        for (DirEdge e : g.out_edges(g.term(d)))
            if (e != rev(d) && first[e] != first[rev(d)]) found = true;
        if (!found) out.gate_complete = false;
    }
    return out;
}

long LanguageApprox::unoriented_count() const {
    std::set<Path> canon;
    for (const auto& w : words) canon.insert(canonical_orientation(w));
    return static_cast<long>(canon.size());
}

LanguageApprox allowed_words(const FoldingSequence& seq, int depth, int L, LanguageMode mode) {
    if (L < 1) fail(ErrorKind::Argument, "word length must be positive");
    const int p = pos_at_depth(seq, depth);
    const int end = seq.length();
    const OrientedGraph& g = seq.graph_at(p);
    const int nd = g.num_dir_edges();

    std::vector<Path> img(nd);
    size_t min_len = SIZE_MAX, max_len = 0;
    for (DirEdge d = 0; d < nd; ++d) {
        img[d] = seq.image(p, end, d);
        min_len = std::min(min_len, img[d].size());
        max_len = std::max(max_len, img[d].size());
    }
    // At the deepest stored graph there is nothing to deepen; harvest from paths.
    const bool short_images = max_len < static_cast<size_t>(L);
    if (short_images && depth < seq.length())
        fail(ErrorKind::Argument, "depth " + std::to_string(depth) + " too shallow for words of length " +
                                      std::to_string(L));
    const int K = static_cast<int>((L + min_len - 1) / min_len) + 1;
    auto ok = allowed_turns(seq, p, mode);

    std::set<Path> found;
    Path walk;
    auto harvest = [&]() {
        Path w;
        for (DirEdge d : walk) w.insert(w.end(), img[d].begin(), img[d].end());
        for (size_t i = 0; i + L <= w.size(); ++i) found.insert(Path(w.begin() + i, w.begin() + i + L));
    };
    std::function<void()> extend = [&]() {
        bool extended = false;
        if (static_cast<int>(walk.size()) < K) {
            DirEdge last = walk.back();
            for (DirEdge e : g.out_edges(g.term(last))) {
                if (e == rev(last) || !ok[rev(last)][e]) continue;
                extended = true;
                walk.push_back(e);
                extend();
                walk.pop_back();
            }
        }
        if (!extended) harvest();
    };
    for (DirEdge d = 0; d < nd; ++d) {
        walk.assign(1, d);
        extend();
    }

    LanguageApprox out;
    out.depth = depth;
    out.length = L;
    out.short_images = short_images;
    out.words.assign(found.begin(), found.end());
    return out;
}

ComplexityProfile complexity_profile(const FoldingSequence& seq, const std::vector<int>& depths, int L_max,
                                     LanguageMode mode) {
    if (depths.empty()) fail(ErrorKind::Argument, "no depths given");
    if (L_max < 1) fail(ErrorKind::Argument, "L_max must be positive");
    ComplexityProfile out;
    out.depth = *std::max_element(depths.begin(), depths.end());
    for (int L = 1; L <= L_max; ++L) {
        long c = allowed_words(seq, out.depth, L, mode).unoriented_count();
        out.counts.push_back(c);
        out.entropy.push_back(c > 0 ? std::log(static_cast<double>(c)) / L : 0.0);
    }
    out.entropy_at_max = out.entropy.back();
    out.subexponential = true;
    for (int L = std::max(2, L_max / 2); L <= L_max; ++L)
        if (out.entropy[L - 1] >= out.entropy[L - 2]) out.subexponential = false;
    return out;
}

Rational cylinder_weight(const FoldingSequence& seq, const MeasureTrack& mu, const Path& gamma, int depth) {
    if (mu.kind != TrackKind::Current) fail(ErrorKind::Argument, "cylinder weight needs a current track");
    const int p = pos_at_depth(seq, depth);
    if (!mu.covers(p)) fail(ErrorKind::Argument, "current track does not cover depth " + std::to_string(depth));
    if (gamma.empty() || !is_reduced(gamma)) fail(ErrorKind::Malformed, "cylinder word must be nonempty and reduced");
    check_path(seq.graph_at(seq.length()), gamma);
    const QVec& m = mu.at(p);
    Rational total = 0;
    for (int e = 0; e < seq.graph_at(p).num_edges(); ++e) {
        if (m[e] == 0) continue;
        long c = count_occurrences(gamma, seq.image(p, seq.length(), forward(e)));
        if (c) total += m[e] * c;
    }
    return total;
}

Rational cylinder_weight_symmetric(const FoldingSequence& seq, const MeasureTrack& mu, const Path& gamma, int depth) {
    return cylinder_weight(seq, mu, gamma, depth) + cylinder_weight(seq, mu, reverse_path(gamma), depth);
}

SandwichCheck kolmogorov_sandwich(const FoldingSequence& seq, const MeasureTrack& mu, const Path& gamma, int depth) {
    SandwichCheck out;
    out.value = cylinder_weight(seq, mu, gamma, depth);
    const OrientedGraph& g0 = seq.graph_at(seq.length());
    DirEdge last = gamma.back();
    out.extensions_sum = 0;
    for (DirEdge e : g0.out_edges(g0.term(last))) {
        if (e == rev(last)) continue;
        Path ext = gamma;
        ext.push_back(e);
        out.extensions_sum += cylinder_weight(seq, mu, ext, depth);
    }
    out.defect = 0;
    for (const auto& x : mu.at(pos_at_depth(seq, depth))) out.defect += x;
    out.holds = out.extensions_sum <= out.value && out.value <= out.extensions_sum + out.defect;
    return out;
}

ComponentReport minimal_components(const FoldingSequence& seq, int depth, int L, LanguageMode mode) {
    if (L < 2) fail(ErrorKind::Argument, "component analysis needs L >= 2");
    auto lang = allowed_words(seq, depth, L, mode);
    const auto& words = lang.words;
    const int n = static_cast<int>(words.size());

    std::map<Path, std::vector<int>> by_prefix;
    for (int i = 0; i < n; ++i) by_prefix[Path(words[i].begin(), words[i].end() - 1)].push_back(i);
    std::vector<std::vector<int>> succ(n);
    for (int i = 0; i < n; ++i) {
        auto it = by_prefix.find(Path(words[i].begin() + 1, words[i].end()));
        if (it != by_prefix.end()) succ[i] = it->second;
    }

    // Drop words that cannot be extended forever.
    std::vector<char> alive(n, 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            bool any = false;
            for (int j : succ[i])
                if (alive[j]) any = true;
            if (!any) alive[i] = 0, changed = true;
        }
    }

    // Tarjan SCC, iterative.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int counter = 0, ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (!alive[root] || index[root] >= 0) continue;
        std::vector<std::pair<int, size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, k] = call.back();
            if (k < succ[v].size()) {
                int w = succ[v][k++];
                if (!alive[w]) continue;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                int vv = v;
                call.pop_back();
                if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[vv]);
                if (low[vv] == index[vv]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = ncomp;
                    } while (w != vv);
                    ++ncomp;
                }
            }
        }
    }

    std::vector<char> sink(ncomp, 1);
    std::vector<std::set<Path>> members(ncomp);
    for (int i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        members[comp[i]].insert(words[i]);
        for (int j : succ[i])
            if (alive[j] && comp[j] != comp[i]) sink[comp[i]] = 0;
    }

    // Reversal pairs sink components; count orbits.
    std::vector<int> sinks;
    for (int c = 0; c < ncomp; ++c)
        if (sink[c]) sinks.push_back(c);
    std::vector<char> used(ncomp, 0);
    ComponentReport out;
    out.bound = 3 * seq.rank() - 3;
    for (int c : sinks) {
        if (used[c]) continue;
        used[c] = 1;
        long size = static_cast<long>(members[c].size());
        std::set<Path> reversed;
        for (const auto& w : members[c]) reversed.insert(reverse_path(w));
        for (int d : sinks)
            if (!used[d] && members[d] == reversed) used[d] = 1;
        out.component_sizes.push_back(size);
        ++out.count;
    }
    if (out.count > out.bound)
        fail(ErrorKind::Validation, "found " + std::to_string(out.count) + " minimal components, above 3N-3 = " +
                                        std::to_string(out.bound));
    return out;
}

}  // namespace fsq
