#include "foldseq/morphism.hpp"

#include <map>
#include <numeric>

#include <cstdlib>

namespace fsq {

GraphMorphism::GraphMorphism(OrientedGraph dom, OrientedGraph cod, std::vector<Path> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
    const int ne = dom_.num_edges();
    if (static_cast<int>(images_.size()) != ne) fail(ErrorKind::Malformed, "morphism needs one image per edge");
    vmap_.assign(dom_.num_vertices(), -1);
    auto set_vertex = [&](int v, int w) {
        if (vmap_[v] == -1)
            vmap_[v] = w;
        else if (vmap_[v] != w)
            fail(ErrorKind::Malformed, "edge images disagree on the image of vertex " + std::to_string(v));
    };
    for (int e = 0; e < ne; ++e) {
        const Path& p = images_[e];
        if (p.empty()) fail(ErrorKind::Malformed, "edge " + std::to_string(e + 1) + " has an empty image");
        check_path(cod_, p);
        if (!is_reduced(p)) fail(ErrorKind::Malformed, "edge " + std::to_string(e + 1) + " has an unreduced image");
        set_vertex(dom_.init(forward(e)), cod_.init(p.front()));
        set_vertex(dom_.term(forward(e)), cod_.term(p.back()));
    }
    for (int v = 0; v < dom_.num_vertices(); ++v)
        if (vmap_[v] == -1) fail(ErrorKind::Malformed, "isolated vertex in morphism domain");

    incidence_ = IntMatrix(cod_.num_edges(), ne);
    for (int e = 0; e < ne; ++e)
        for (DirEdge d : images_[e]) incidence_.at(edge_of(d), e) += 1;
}

GraphMorphism GraphMorphism::identity(const OrientedGraph& g) {
    std::vector<Path> im(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) im[e] = {forward(e)};
    return GraphMorphism(g, g, im);
}

GraphMorphism GraphMorphism::rose_map(int rank, const std::vector<Word>& words) {
    OrientedGraph r = OrientedGraph::rose(rank);
    if (static_cast<int>(words.size()) != rank) fail(ErrorKind::Malformed, "rose map needs one word per petal");
    std::vector<Path> im(rank);
    for (int i = 0; i < rank; ++i) {
        for (int x : words[i]) {
            int k = std::abs(x);
            if (k < 1 || k > rank) fail(ErrorKind::Malformed, "letter out of range in rose map");
            im[i].push_back(x > 0 ? forward(k - 1) : rev(forward(k - 1)));
        }
    }
    return GraphMorphism(r, r, im);
}

Path GraphMorphism::image(DirEdge d) const {
    const Path& p = images_[edge_of(d)];
    return is_reversed(d) ? reverse_path(p) : p;
}

bool GraphMorphism::simplicial() const {
    for (const auto& p : images_)
        if (p.size() != 1) return false;
    return true;
}

Path GraphMorphism::apply(const Path& p) const {
    Path out;
    for (DirEdge d : p) {
        Path im = image(d);
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

IntMatrix incidence_matrix(const GraphMorphism& f) { return f.incidence(); }

QVec pullback_length(const GraphMorphism& f, const QVec& lambda_h) {
    if (static_cast<int>(lambda_h.size()) != f.codomain().num_edges())
        fail(ErrorKind::Argument, "length vector does not match the codomain");
    return f.incidence().apply_transpose(lambda_h);
}

QVec pushforward_current(const GraphMorphism& f, const QVec& mu_g) {
    if (static_cast<int>(mu_g.size()) != f.domain().num_edges())
        fail(ErrorKind::Argument, "current vector does not match the domain");
    return f.incidence().apply(mu_g);
}

Composite compose(const GraphMorphism& f, const GraphMorphism& g) {
    if (f.codomain() != g.domain()) fail(ErrorKind::Argument, "compose: codomain and domain differ");
    Composite c;
    std::vector<Path> im(f.domain().num_edges());
    for (int e = 0; e < f.domain().num_edges(); ++e) {
        Path raw = g.apply(f.images()[e]);
        Path t = tighten(raw);
        if (t.size() != raw.size()) c.cancelled = true;
        if (t.empty()) fail(ErrorKind::Validation, "composite collapses edge " + std::to_string(e + 1));
        im[e] = std::move(t);
    }
    c.map = GraphMorphism(f.domain(), g.codomain(), std::move(im));
    return c;
}

StallingsFactorization stallings_factorize(const GraphMorphism& f) {
    const OrientedGraph& g = f.domain();
    int nv = g.num_vertices();
    std::vector<std::pair<int, int>> ends;
    std::vector<Path> sub_images(g.num_edges());
    std::vector<Path> simp_images;
    for (int e = 0; e < g.num_edges(); ++e) {
        const Path& im = f.images()[e];
        const int k = static_cast<int>(im.size());
        int prev = g.init(forward(e));
        for (int j = 0; j < k; ++j) {
            int next = (j == k - 1) ? g.term(forward(e)) : nv++;
            sub_images[e].push_back(forward(static_cast<int>(ends.size())));
            ends.emplace_back(prev, next);
            simp_images.push_back({im[j]});
            prev = next;
        }
    }
    OrientedGraph sub = OrientedGraph::make_unchecked(nv, ends);
    return {GraphMorphism(g, sub, std::move(sub_images)), GraphMorphism(sub, f.codomain(), std::move(simp_images))};
}

namespace {

struct FoldState {
    OrientedGraph g;
    std::vector<DirEdge> img;  // image of each edge read forwards, a single edge of the codomain
    DirEdge image(DirEdge d) const { return is_reversed(d) ? rev(img[edge_of(d)]) : img[edge_of(d)]; }
};

bool find_fold(const FoldState& s, DirEdge& d1, DirEdge& d2) {
    const int nd = s.g.num_dir_edges();
    for (DirEdge a = 0; a < nd; ++a)
        for (DirEdge b = a + 1; b < nd; ++b) {
            if (edge_of(a) == edge_of(b)) continue;
            if (s.g.init(a) != s.g.init(b)) continue;
            if (s.image(a) != s.image(b)) continue;
            d1 = a;
            d2 = b;
            return true;
        }
    return false;
}

}  // namespace

FoldOutcome fold_until_immersion(const GraphMorphism& f) {
    if (!f.simplicial()) fail(ErrorKind::Argument, "fold_decompose needs a simplicial morphism");
    FoldOutcome out;
    FoldState s{f.domain(), {}};
    for (const auto& p : f.images()) s.img.push_back(p[0]);

    DirEdge d1, d2;
    while (find_fold(s, d1, d2)) {
        const int u1 = s.g.term(d1), u2 = s.g.term(d2);
        const int removed = edge_of(d2);
        const bool loss = (u1 == u2);
        auto vnew = [&](int v) {
            if (!loss && v == u2) v = u1;
            if (!loss && v > u2) --v;
            return v;
        };
        auto enew = [&](int e) { return e > removed ? e - 1 : e; };

        std::vector<std::pair<int, int>> ends;
        std::vector<DirEdge> img;
        for (int e = 0; e < s.g.num_edges(); ++e) {
            if (e == removed) continue;
            ends.emplace_back(vnew(s.g.ends()[e].first), vnew(s.g.ends()[e].second));
            img.push_back(s.img[e]);
        }
        OrientedGraph next = OrientedGraph::make_unchecked(s.g.num_vertices() - (loss ? 0 : 1), ends);

        std::vector<Path> q(s.g.num_edges());
        const DirEdge d1_new = is_reversed(d1) ? rev(forward(enew(edge_of(d1)))) : forward(enew(edge_of(d1)));
        for (int e = 0; e < s.g.num_edges(); ++e) {
            if (e == removed)
                q[e] = {is_reversed(d2) ? rev(d1_new) : d1_new};
            else
                q[e] = {forward(enew(e))};
        }
        Fold fold{d1, d2, loss, GraphMorphism(s.g, next, q)};
        out.rank_loss = out.rank_loss || loss;
        out.folds.push_back(std::move(fold));
        s = FoldState{next, img};
    }

    std::vector<Path> im;
    for (DirEdge d : s.img) im.push_back({d});
    out.immersion = GraphMorphism(s.g, f.codomain(), im);

    const OrientedGraph& h = f.codomain();
    bool iso = s.g.num_edges() == h.num_edges() && s.g.num_vertices() == h.num_vertices();
    if (iso) {
        std::vector<char> hit(h.num_edges(), 0);
        for (DirEdge d : s.img) {
            if (hit[edge_of(d)]) iso = false;
            hit[edge_of(d)] = 1;
        }
        std::vector<char> vhit(h.num_vertices(), 0);
        for (int v = 0; v < s.g.num_vertices(); ++v) {
            int w = out.immersion.vertex_image(v);
            if (vhit[w]) iso = false;
            vhit[w] = 1;
        }
    }
    out.isomorphism = iso;
    return out;
}

std::vector<Fold> fold_decompose(const GraphMorphism& f) {
    FoldOutcome o = fold_until_immersion(f);
    if (o.rank_loss || !o.isomorphism) fail(ErrorKind::Validation, "morphism does not fold to an isomorphism");
    return std::move(o.folds);
}

namespace {

// Folding outcome without materializing intermediate graphs: vertex classes in a
// union-find, each holding its outgoing edges keyed by their image.
struct FoldSummary {
    int folds = 0, edges = 0;
    bool rank_loss = false, isomorphism = false;
};

FoldSummary fold_summary(const GraphMorphism& f) {
    const OrientedGraph& g = f.domain();
    const OrientedGraph& h = f.codomain();
    const int nv = g.num_vertices(), ne = g.num_edges();
    auto label = [&](DirEdge d) { return is_reversed(d) ? rev(f.images()[edge_of(d)][0]) : f.images()[edge_of(d)][0]; };
    std::vector<int> vpar(nv), epar(ne);
    std::iota(vpar.begin(), vpar.end(), 0);
    std::iota(epar.begin(), epar.end(), 0);
    auto find = [](std::vector<int>& par, int x) {
        while (par[x] != x) x = par[x] = par[par[x]];
        return x;
    };
    std::vector<std::map<DirEdge, DirEdge>> out(nv);
    std::vector<std::pair<DirEdge, DirEdge>> pending;
    auto add = [&](int root, DirEdge d) {
        auto [it, inserted] = out[root].emplace(label(d), d);
        if (!inserted) pending.emplace_back(it->second, d);
    };
    for (DirEdge d = 0; d < g.num_dir_edges(); ++d) add(g.init(d), d);
    int vclasses = nv, eclasses = ne;
    FoldSummary s;
    while (!pending.empty()) {
        auto [d1, d2] = pending.back();
        pending.pop_back();
        int e1 = find(epar, edge_of(d1)), e2 = find(epar, edge_of(d2));
        if (e1 == e2) continue;
        epar[e1] = e2;
        --eclasses;
        ++s.folds;
        int a = find(vpar, g.term(d1)), b = find(vpar, g.term(d2));
        if (a == b) continue;
        if (out[a].size() > out[b].size()) std::swap(a, b);
        vpar[a] = b;
        --vclasses;
        for (auto [l, d] : out[a]) add(b, d);
        out[a].clear();
    }
    s.edges = eclasses;
    s.rank_loss = eclasses - vclasses != ne - nv;
    std::vector<char> hit(h.num_edges(), 0);
    for (int e = 0; e < ne; ++e)
        if (find(epar, e) == e) hit[edge_of(label(forward(e)))] = 1;
    s.isomorphism = !s.rank_loss && eclasses == h.num_edges() && vclasses == h.num_vertices() &&
                    std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    return s;
}

}  // namespace

MarkingVerdict validate_change_of_marking(const GraphMorphism& f) {
    MarkingVerdict v;
    if (!f.domain().connected() || !f.codomain().connected()) {
        v.diagnostic = "disconnected graph";
        return v;
    }
    if (f.domain().rank() != f.codomain().rank()) {
        v.diagnostic = "Betti numbers differ (" + std::to_string(f.domain().rank()) + " vs " +
                       std::to_string(f.codomain().rank()) + ")";
        return v;
    }
    auto st = stallings_factorize(f);
    FoldSummary o = fold_summary(st.simplicial);
    v.folds = o.folds;
    if (o.rank_loss) {
        v.diagnostic = "a fold identified two edges with common endpoints (rank loss)";
        return v;
    }
    if (!o.isomorphism) {
        v.diagnostic = "folding stops at an immersion that is not an isomorphism (" + std::to_string(o.edges) +
                       " edges onto " + std::to_string(f.codomain().num_edges()) + ")";
        return v;
    }
    v.ok = true;
    v.diagnostic = "folds to an isomorphism";
    return v;
}

Path PathMap::apply(const Path& p) const {
    Path out;
    for (DirEdge d : p) {
        const Path& im = images[edge_of(d)];
        if (is_reversed(d)) {
            for (auto it = im.rbegin(); it != im.rend(); ++it) out.push_back(rev(*it));
        } else {
            out.insert(out.end(), im.begin(), im.end());
        }
    }
    return out;
}

namespace {

// a then b
PathMap then(const PathMap& a, const PathMap& b) {
    PathMap c{a.dom, b.cod, {}, {}};
    for (const auto& p : a.images) c.images.push_back(tighten(b.apply(p)));
    for (int v : a.vmap) c.vmap.push_back(b.vmap[v]);
    return c;
}

}  // namespace

PathMap homotopy_inverse(const GraphMorphism& f) {
    auto v = validate_change_of_marking(f);
    if (!v.ok) fail(ErrorKind::Validation, "not a change of marking: " + v.diagnostic);
    auto st = stallings_factorize(f);
    FoldOutcome o = fold_until_immersion(st.simplicial);

    // Inverse of the final isomorphism.
    const GraphMorphism& iso = o.immersion;
    PathMap inv{iso.codomain(), iso.domain(), std::vector<Path>(iso.codomain().num_edges()),
                std::vector<int>(iso.codomain().num_vertices())};
    for (int e = 0; e < iso.domain().num_edges(); ++e) {
        DirEdge t = iso.images()[e][0];
        inv.images[edge_of(t)] = {is_reversed(t) ? rev(forward(e)) : forward(e)};
    }
    for (int x = 0; x < iso.domain().num_vertices(); ++x) inv.vmap[iso.vertex_image(x)] = x;

    for (auto it = o.folds.rbegin(); it != o.folds.rend(); ++it) {
        const Fold& fd = *it;
        const OrientedGraph& before = fd.quotient.domain();
        const OrientedGraph& after = fd.quotient.codomain();
        const int u2 = before.term(fd.second);
        PathMap r{after, before, std::vector<Path>(after.num_edges()), std::vector<int>(after.num_vertices(), -1)};
        for (int x = 0; x < before.num_edges(); ++x) {
            if (x == edge_of(fd.second)) continue;
            DirEdge y = fd.quotient.images()[x][0];
            Path p;
            int a = before.init(forward(x)), b = before.term(forward(x));
            if (a == u2) p = {rev(fd.first), fd.second};
            p.push_back(forward(x));
            if (b == u2) {
                p.push_back(rev(fd.second));
                p.push_back(fd.first);
            }
            r.images[edge_of(y)] = is_reversed(y) ? reverse_path(p) : p;
        }
        for (int w = 0; w < before.num_vertices(); ++w) {
            int img = fd.quotient.vertex_image(w);
            if (w == u2) continue;
            r.vmap[img] = w;
        }
        inv = then(inv, r);
    }

    // Undo the subdivision: the last piece of each edge carries the whole edge.
    const GraphMorphism& s = st.subdivision;
    PathMap rs{s.codomain(), s.domain(), std::vector<Path>(s.codomain().num_edges()),
               std::vector<int>(s.codomain().num_vertices(), -1)};
    for (int e = 0; e < s.domain().num_edges(); ++e) {
        const Path& pieces = s.images()[e];
        for (size_t j = 0; j < pieces.size(); ++j) {
            int piece = edge_of(pieces[j]);
            if (j + 1 == pieces.size()) rs.images[piece] = {forward(e)};
            if (j > 0) rs.vmap[s.codomain().init(pieces[j])] = s.domain().init(forward(e));
        }
    }
    for (int v = 0; v < s.domain().num_vertices(); ++v) rs.vmap[v] = v;
    return then(inv, rs);
}

std::vector<Word> rose_automorphism_words(const GraphMorphism& f) {
    if (f.domain().num_vertices() != 1 || f.codomain().num_vertices() != 1)
        fail(ErrorKind::Argument, "expected a rose self-map");
    std::vector<Word> out;
    for (const auto& p : f.images()) {
        Word w;
        for (DirEdge d : p) w.push_back(is_reversed(d) ? -(edge_of(d) + 1) : edge_of(d) + 1);
        out.push_back(w);
    }
    return out;
}

std::vector<Word> inverse_automorphism(const GraphMorphism& f) {
    if (f.domain().num_vertices() != 1 || f.codomain().num_vertices() != 1)
        fail(ErrorKind::Argument, "expected a rose self-map");
    PathMap g = homotopy_inverse(f);
    std::vector<Word> out;
    for (const auto& p : g.images) {
        Word w;
        for (DirEdge d : p) w.push_back(is_reversed(d) ? -(edge_of(d) + 1) : edge_of(d) + 1);
        out.push_back(free_reduce(w));
    }
    return out;
}

Word apply_automorphism(const std::vector<Word>& images, const Word& w) {
    Word out;
    for (int x : w) {
        const Word& im = images[std::abs(x) - 1];
        if (x > 0)
            out.insert(out.end(), im.begin(), im.end());
        else
            for (auto it = im.rbegin(); it != im.rend(); ++it) out.push_back(-*it);
    }
    return free_reduce(out);
}

}  // namespace fsq
