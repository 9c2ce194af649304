#include "foldseq/metric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace fsq {

namespace {

std::vector<int> circle_vertices(const OrientedGraph& g, const Path& c) {
    std::vector<int> v;
    for (DirEdge d : c) v.push_back(g.init(d));
    std::sort(v.begin(), v.end());
    return v;
}

Path rotate_to(const OrientedGraph& g, const Path& c, int v) {
    for (size_t i = 0; i < c.size(); ++i)
        if (g.init(c[i]) == v) {
            Path r(c.begin() + i, c.end());
            r.insert(r.end(), c.begin(), c.begin() + i);
            return r;
        }
    fail(ErrorKind::Argument, "vertex not on circle");
}

Path concat(std::initializer_list<Path> parts) {
    Path out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Word canonical_word(const Word& w) {
    Word best = w;
    for (const Word& q : {w, inverse_word(w)})
        for (size_t s = 0; s < q.size(); ++s) {
            Word r(q.begin() + s, q.end());
            r.insert(r.end(), q.begin(), q.begin() + s);
            best = std::min(best, r);
        }
    return best;
}

LipschitzDistance finish(Rational best, Word witness) {
    LipschitzDistance d;
    d.ratio = best;
    d.value = log_of_ratio(best);
    d.witness = std::move(witness);
    return d;
}

Rational twisted_length(const MarkedGraph& u, const std::vector<Word>& twist, const Word& w) {
    return translation_length(u, twist.empty() ? w : apply_automorphism(twist, w));
}

void check_twist(const MarkedGraph& u, const std::vector<Word>& twist) {
    if (!twist.empty() && static_cast<int>(twist.size()) != u.rank()) fail(ErrorKind::Argument, "twist rank mismatch");
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

std::vector<Path> embedded_circles(const OrientedGraph& g) {
    std::set<Path> found;
    const int nv = g.num_vertices();
    std::vector<char> on(nv, 0);
    Path path;
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (DirEdge d : g.out_edges(v)) {
            if (!path.empty() && edge_of(d) == edge_of(path.back())) continue;
            int w = g.term(d);
            if (w == s) {
                if (path.size() == 1 && edge_of(path[0]) == edge_of(d)) continue;
                path.push_back(d);
                found.insert(canonical_cyclic(path));
                path.pop_back();
            } else if (w > s && !on[w]) {
                on[w] = 1;
                path.push_back(d);
                dfs(s, w);
                path.pop_back();
                on[w] = 0;
            }
        }
    };
    for (int s = 0; s < nv; ++s) {
        on[s] = 1;
        dfs(s, s);
        on[s] = 0;
    }
    return {found.begin(), found.end()};
}

std::string to_string(CandidateShape s) {
    switch (s) {
        case CandidateShape::EmbeddedCircle: return "embedded-circle";
        case CandidateShape::FigureEight: return "figure-eight";
        default: return "barbell";
    }
}

std::vector<CandidateLoop> candidates(const MarkedGraph& t) {
    const OrientedGraph& g = t.graph();
    if (g.rank() > 5) fail(ErrorKind::Budget, "candidate enumeration is capped at rank 5");
    auto circles = embedded_circles(g);
    std::map<Path, CandidateShape> out;
    for (const auto& c : circles) out.emplace(c, CandidateShape::EmbeddedCircle);

    std::vector<std::vector<int>> verts;
    std::vector<std::set<int>> edges;
    for (const auto& c : circles) {
        verts.push_back(circle_vertices(g, c));
        std::set<int> es;
        for (DirEdge d : c) es.insert(edge_of(d));
        edges.push_back(es);
    }
    const int nc = static_cast<int>(circles.size());
    for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j) {
            std::vector<int> common;
            std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(), verts[j].end(),
                                  std::back_inserter(common));
            bool edge_disjoint = std::none_of(edges[i].begin(), edges[i].end(), [&](int e) { return edges[j].count(e) > 0; });
            if (common.size() == 1 && edge_disjoint) {
                Path a = rotate_to(g, circles[i], common[0]), b = rotate_to(g, circles[j], common[0]);
                out.emplace(canonical_cyclic(concat({a, b})), CandidateShape::FigureEight);
                out.emplace(canonical_cyclic(concat({a, reverse_path(b)})), CandidateShape::FigureEight);
            }
            if (!common.empty()) continue;
            // Barbells: arcs from circle i to circle j with interior off both circles.
            std::vector<char> blocked(g.num_vertices(), 0), target(g.num_vertices(), 0);
            for (int v : verts[i]) blocked[v] = 1;
            for (int v : verts[j]) target[v] = 1;
            Path arc;
            std::vector<char> on(g.num_vertices(), 0);
            std::function<void(int, int)> walk = [&](int start, int v) {
                for (DirEdge d : g.out_edges(v)) {
                    int w = g.term(d);
                    if (on[w] || (blocked[w] && w != start) || w == start) continue;
                    arc.push_back(d);
                    if (target[w]) {
                        Path a = rotate_to(g, circles[i], start), b = rotate_to(g, circles[j], w);
                        Path back = reverse_path(arc);
                        out.emplace(canonical_cyclic(concat({a, arc, b, back})), CandidateShape::Barbell);
                        out.emplace(canonical_cyclic(concat({a, arc, reverse_path(b), back})), CandidateShape::Barbell);
                    } else {
                        on[w] = 1;
                        walk(start, w);
                        on[w] = 0;
                    }
                    arc.pop_back();
                }
            };
            for (int u : verts[i]) {
                on[u] = 1;
                walk(u, u);
                on[u] = 0;
            }
        }
    std::vector<CandidateLoop> list;
    for (const auto& [loop, shape] : out) list.push_back({loop, shape});
    std::stable_sort(list.begin(), list.end(),
                     [](const CandidateLoop& a, const CandidateLoop& b) { return a.shape < b.shape; });
    return list;
}

LipschitzDistance lipschitz_distance(const MarkedGraph& t, const MarkedGraph& u, const std::vector<Word>& twist) {
    check_twist(u, twist);
    if (t.rank() != u.rank()) fail(ErrorKind::Argument, "rank mismatch");
    if (!t.positive() || !u.positive()) fail(ErrorKind::Argument, "lengths must be positive");
    Rational best = -1;
    Word witness;
    for (const auto& c : candidates(t)) {
        Word w = cyclic_reduce(t.path_to_word(c.loop));
        Rational r = twisted_length(u, twist, w) / t.length(c.loop);
        if (r > best) {
            best = r;
            witness = w;
        }
    }
    return finish(best, witness);
}

int bruteforce_length(const MarkedGraph& t) { return 2 * t.rank(); }

LipschitzDistance lipschitz_bruteforce(const MarkedGraph& t, const MarkedGraph& u, int max_len,
                                       const std::vector<Word>& twist) {
    check_twist(u, twist);
    if (t.rank() != u.rank()) fail(ErrorKind::Argument, "rank mismatch");
    if (!t.positive() || !u.positive()) fail(ErrorKind::Argument, "lengths must be positive");
    const int n = t.rank();
    if (max_len < 1) fail(ErrorKind::Argument, "word length must be positive");
    if (std::pow(2.0 * n - 1, max_len) > 5e7) fail(ErrorKind::Budget, "brute-force word enumeration too large");
    Rational best = -1;
    Word witness, w;
    std::function<void()> rec = [&]() {
        if (!w.empty() && w.front() != -w.back() && canonical_word(w) == w) {
            Rational r = twisted_length(u, twist, w) / translation_length(t, w);
            if (r > best) {
                best = r;
                witness = w;
            }
        }
        if (static_cast<int>(w.size()) == max_len) return;
        for (int x = -n; x <= n; ++x) {
            if (x == 0 || (!w.empty() && w.back() == -x)) continue;
            w.push_back(x);
            rec();
            w.pop_back();
        }
    };
    rec();
    return finish(best, witness);
}

QVec current_of_word(const MarkedGraph& t, const Word& w) {
    auto c = crossing_counts(word_cycle(t, w), t.graph().num_edges());
    return QVec(c.begin(), c.end());
}

Rational kl_pairing(const MarkedGraph& t, const QVec& mu) {
    if (static_cast<int>(mu.size()) != t.graph().num_edges()) fail(ErrorKind::Argument, "current does not match the graph");
    return dot(t.lengths(), mu);
}

Thickness thickness(const MarkedGraph& t, const Rational& eps) {
    if (!t.positive()) fail(ErrorKind::Argument, "lengths must be positive");
    Thickness th;
    bool first = true;
    for (const auto& c : embedded_circles(t.graph())) {
        Rational l = t.length(c);
        if (first || l < th.injectivity_radius) th.injectivity_radius = l;
        first = false;
    }
    th.normalized = th.injectivity_radius / t.volume();
    th.thick = th.normalized >= eps;
    return th;
}

ThickFit fit_thick_constants(const std::vector<std::pair<double, double>>& fb) {
    ThickFit f;
    f.samples = static_cast<int>(fb.size());
    std::vector<double> ratios;
    for (auto [x, y] : fb)
        if (x > 0) ratios.push_back(y / x);
    if (!ratios.empty()) {
        std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
        f.C = ratios[ratios.size() / 2];
    }
    for (auto [x, y] : fb) f.B = std::max(f.B, y - f.C * x);
    return f;
}

std::string subgroup_core_form(const std::vector<Word>& gens) {
    // Labelled graph: edge (u, letter > 0, v).
    struct E { int u, l, v; };
    std::vector<E> es;
    int nv = 1;
    for (const Word& raw : gens) {
        Word w = free_reduce(raw);
        if (w.empty()) continue;
        int prev = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            int next = i + 1 == w.size() ? 0 : nv++;
            if (w[i] > 0) es.push_back({prev, w[i], next});
            else es.push_back({next, -w[i], prev});
            prev = next;
        }
    }
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    for (bool changed = true; changed;) {
        changed = false;
        std::map<std::tuple<int, int, int>, int> seen;  // (vertex, signed letter) -> other end
        for (const auto& e : es) {
            int u = find_root(parent, e.u), v = find_root(parent, e.v);
            for (auto [key, other] : {std::pair{std::tuple{u, e.l, 1}, v}, std::pair{std::tuple{v, e.l, -1}, u}}) {
                auto it = seen.find(key);
                if (it == seen.end()) {
                    seen[key] = other;
                } else if (find_root(parent, it->second) != find_root(parent, other)) {
                    parent[find_root(parent, it->second)] = find_root(parent, other);
                    changed = true;
                }
            }
        }
    }
    std::set<std::tuple<int, int, int>> folded;
    for (const auto& e : es) folded.insert({find_root(parent, e.u), e.l, find_root(parent, e.v)});
    std::vector<std::tuple<int, int, int>> edges(folded.begin(), folded.end());

    // Prune to the core.
    for (bool changed = true; changed;) {
        changed = false;
        std::map<int, int> val;
        for (auto [u, l, v] : edges) ++val[u], ++val[v];
        std::vector<std::tuple<int, int, int>> keep;
        for (auto e : edges) {
            auto [u, l, v] = e;
            if (val[u] == 1 || val[v] == 1) changed = true;
            else keep.push_back(e);
        }
        edges = keep;
    }
    if (edges.empty()) return "trivial";

    std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (signed letter, neighbour)
    for (auto [u, l, v] : edges) {
        adj[u].push_back({l, v});
        adj[v].push_back({-l, u});
    }
    for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
    std::string best;
    for (const auto& [start, unused] : adj) {
        std::map<int, int> num{{start, 0}};
        std::queue<int> q;
        q.push(start);
        std::string s;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            s += std::to_string(num[v]) + ":";
            for (auto [l, w] : adj[v]) {
                if (!num.count(w)) {
                    int k = static_cast<int>(num.size());
                    num[w] = k;
                    q.push(w);
                }
                s += std::to_string(l) + ">" + std::to_string(num[w]) + ",";
            }
            s += ";";
        }
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::vector<FreeFactor> factor_projection(const MarkedGraph& t) {
    const OrientedGraph& g = t.graph();
    const int ne = g.num_edges(), n = g.rank();
    if (ne > 15) fail(ErrorKind::Budget, "subgraph enumeration is capped at 15 edges");
    std::map<std::string, FreeFactor> found;
    for (unsigned mask = 1; mask < (1u << ne); ++mask) {
        std::vector<int> es;
        for (int e = 0; e < ne; ++e)
            if (mask & (1u << e)) es.push_back(e);
        std::set<int> vs;
        for (int e : es) vs.insert(g.ends()[e].first), vs.insert(g.ends()[e].second);
        int rank = static_cast<int>(es.size()) - static_cast<int>(vs.size()) + 1;
        if (rank < 1 || rank >= n) continue;
        std::vector<int> parent(g.num_vertices());
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<char> tree(ne, 0);
        for (int e : es) {
            int a = find_root(parent, g.ends()[e].first), b = find_root(parent, g.ends()[e].second);
            if (a != b) parent[a] = b, tree[e] = 1;
        }
        int root = find_root(parent, *vs.begin());
        bool connected = std::all_of(vs.begin(), vs.end(), [&](int v) { return find_root(parent, v) == root; });
        if (!connected) continue;

        // Tree paths inside the subgraph from its least vertex.
        const int v0 = *vs.begin();
        std::map<int, Path> reach{{v0, {}}};
        std::queue<int> q;
        q.push(v0);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (DirEdge d : g.out_edges(v)) {
                if (!(mask & (1u << edge_of(d))) || !tree[edge_of(d)] || reach.count(g.term(d))) continue;
                Path p = reach[v];
                p.push_back(d);
                reach[g.term(d)] = p;
                q.push(g.term(d));
            }
        }
        FreeFactor f;
        f.edges = es;
        f.rank = rank;
        for (int e : es) {
            if (tree[e]) continue;
            DirEdge d = forward(e);
            Path loop = concat({reach[g.init(d)], Path{d}, reverse_path(reach[g.term(d)])});
            f.basis.push_back(free_reduce(t.path_to_word(loop)));
        }
        f.canonical = subgroup_core_form(f.basis);
        found.emplace(f.canonical, f);
    }
    std::vector<FreeFactor> out;
    for (auto& [k, f] : found) out.push_back(f);
    std::sort(out.begin(), out.end(), [](const FreeFactor& a, const FreeFactor& b) {
        return std::tie(a.rank, a.edges) < std::tie(b.rank, b.edges);
    });
    return out;
}

}  // namespace fsq
