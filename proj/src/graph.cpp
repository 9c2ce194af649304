#include "foldseq/graph.hpp"

#include <algorithm>
#include <functional>

namespace fsq {

int signed_id(DirEdge d) { return is_reversed(d) ? -(edge_of(d) + 1) : edge_of(d) + 1; }

DirEdge from_signed_id(int id, int num_edges) {
    if (id == 0 || id > num_edges || -id > num_edges)
        fail(ErrorKind::Malformed, "edge id " + std::to_string(id) + " out of range");
    return id > 0 ? forward(id - 1) : rev(forward(-id - 1));
}

OrientedGraph OrientedGraph::make_unchecked(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
    if (num_vertices <= 0) fail(ErrorKind::Malformed, "graph needs at least one vertex");
    OrientedGraph g;
    g.nv_ = num_vertices;
    g.ends_ = edges;
    for (auto [a, b] : edges)
        if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices)
            fail(ErrorKind::Malformed, "edge endpoint out of range");
    g.build_adjacency();
    return g;
}

OrientedGraph OrientedGraph::make(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
    OrientedGraph g = make_unchecked(num_vertices, edges);
    if (!g.connected()) fail(ErrorKind::Validation, "graph is not connected");
    if (g.rank() < 2) fail(ErrorKind::Validation, "graph rank must be at least 2");
    for (int v = 0; v < num_vertices; ++v)
        if (g.valence(v) < 3)
            fail(ErrorKind::Validation, "vertex " + std::to_string(v) + " has valence " +
                                            std::to_string(g.valence(v)) + " < 3");
    return g;
}

OrientedGraph OrientedGraph::rose(int rank) {
    std::vector<std::pair<int, int>> e(rank, {0, 0});
    return make(1, e);
}

OrientedGraph OrientedGraph::theta() { return make(2, {{0, 1}, {0, 1}, {0, 1}}); }

void OrientedGraph::build_adjacency() {
    out_.assign(nv_, {});
    for (DirEdge d = 0; d < num_dir_edges(); ++d) out_[init(d)].push_back(d);
}

bool OrientedGraph::connected() const {
    std::vector<char> seen(nv_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (DirEdge d : out_[v]) {
            int w = term(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == nv_;
}

bool composable(const OrientedGraph& g, const Path& p) {
    for (DirEdge d : p)
        if (d < 0 || d >= g.num_dir_edges()) return false;
    for (size_t i = 1; i < p.size(); ++i)
        if (g.term(p[i - 1]) != g.init(p[i])) return false;
    return true;
}

void check_path(const OrientedGraph& g, const Path& p) {
    if (!composable(g, p)) fail(ErrorKind::Malformed, "edge sequence is not composable");
}

bool is_reduced(const Path& p) {
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i] == rev(p[i - 1])) return false;
    return true;
}

bool is_cyclically_reduced(const Path& p) {
    if (!is_reduced(p)) return false;
    return p.size() < 2 || p.front() != rev(p.back());
}

Path reverse_path(const Path& p) {
    Path r(p.rbegin(), p.rend());
    for (auto& d : r) d = rev(d);
    return r;
}

Path tighten(const Path& p) {
    Path out;
    out.reserve(p.size());
    for (DirEdge d : p) {
        if (!out.empty() && out.back() == rev(d))
            out.pop_back();
        else
            out.push_back(d);
    }
    return out;
}

Path tighten(const OrientedGraph& g, const Path& p) {
    check_path(g, p);
    return tighten(p);
}

Path cyclic_tighten(const Path& p) {
    Path t = tighten(p);
    size_t lo = 0, hi = t.size();
    while (hi - lo >= 2 && t[lo] == rev(t[hi - 1])) {
        ++lo;
        --hi;
    }
    return Path(t.begin() + lo, t.begin() + hi);
}

Path cyclic_tighten(const OrientedGraph& g, const Path& p) {
    check_path(g, p);
    if (!p.empty() && g.term(p.back()) != g.init(p.front()))
        fail(ErrorKind::Malformed, "cyclic path is not closed");
    return cyclic_tighten(p);
}

Path canonical_cyclic(const Path& p) {
    if (p.empty()) return p;
    Path best;
    bool have = false;
    for (const Path& q : {p, reverse_path(p)}) {
        for (size_t s = 0; s < q.size(); ++s) {
            Path r(q.begin() + s, q.end());
            r.insert(r.end(), q.begin(), q.begin() + s);
            if (!have || r < best) {
                best = r;
                have = true;
            }
        }
    }
    return best;
}

std::vector<int> crossing_counts(const Path& p, int num_edges) {
    std::vector<int> c(num_edges, 0);
    for (DirEdge d : p) ++c[edge_of(d)];
    return c;
}

long count_occurrences(const Path& needle, const Path& hay) {
    if (needle.empty() || needle.size() > hay.size()) return 0;
    long n = 0;
    auto it = hay.begin();
    while (true) {
        it = std::search(it, hay.end(), needle.begin(), needle.end());
        if (it == hay.end()) break;
        ++n;
        ++it;
    }
    return n;
}

std::string path_to_string(const Path& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(signed_id(p[i]));
    }
    return s;
}

bool find_isomorphism(const OrientedGraph& g, const OrientedGraph& h, GraphIso& iso) {
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
    const int ne = g.num_edges();
    if (g == h) {
        iso.dir_map.resize(2 * ne);
        for (int d = 0; d < 2 * ne; ++d) iso.dir_map[d] = d;
        iso.vertex_map.resize(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) iso.vertex_map[v] = v;
        return true;
    }
    std::vector<int> vmap(g.num_vertices(), -1), vinv(h.num_vertices(), -1);
    std::vector<DirEdge> emap(ne, -1);
    std::vector<char> used(ne, 0);

    std::function<bool(int)> assign = [&](int e) -> bool {
        if (e == ne) return true;
        int a = g.ends()[e].first, b = g.ends()[e].second;
        for (DirEdge t = 0; t < 2 * ne; ++t) {
            if (used[edge_of(t)]) continue;
            int x = h.init(t), y = h.term(t);
            bool a_new = vmap[a] == -1, b_new = vmap[b] == -1;
            if (!a_new && vmap[a] != x) continue;
            if (a_new && vinv[x] != -1) continue;
            if (a_new) { vmap[a] = x; vinv[x] = a; }
            bool ok = true;
            bool b_set = false;
            if (vmap[b] == -1) {
                if (vinv[y] != -1) ok = false;
                else { vmap[b] = y; vinv[y] = b; b_set = true; }
            } else if (vmap[b] != y) {
                ok = false;
            }
            if (ok) {
                used[edge_of(t)] = 1;
                emap[e] = t;
                if (assign(e + 1)) return true;
                used[edge_of(t)] = 0;
            }
            if (b_set) { vinv[vmap[b]] = -1; vmap[b] = -1; }
            if (a_new) { vinv[vmap[a]] = -1; vmap[a] = -1; }
            (void)b_new;
        }
        return false;
    };
    if (!assign(0)) return false;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (vmap[v] == -1) return false;
    iso.dir_map.resize(2 * ne);
    for (int e = 0; e < ne; ++e) {
        iso.dir_map[forward(e)] = emap[e];
        iso.dir_map[rev(forward(e))] = rev(emap[e]);
    }
    iso.vertex_map = vmap;
    return true;
}

}  // namespace fsq
