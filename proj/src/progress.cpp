#include "foldseq/progress.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>

namespace fsq {

namespace {

constexpr size_t kImageCap = 200000;

using Mask = std::uint64_t;

Mask support(const Path& loop) {
    Mask m = 0;
    for (DirEdge d : loop) m |= Mask(1) << edge_of(d);
    return m;
}

Mask full_mask(int edges) { return edges == 64 ? ~Mask(0) : (Mask(1) << edges) - 1; }

int first_missing(Mask m, int edges) {
    for (int e = 0; e < edges; ++e)
        if (!(m & (Mask(1) << e))) return e;
    return -1;
}

// Every cyclic turn of the loop stays nondegenerate up to the last graph.
bool legal_loop(const FoldingSequence& seq, int pos, const Path& loop) {
    const auto& first = seq.first_edges_to_end(pos);
    for (size_t i = 0; i < loop.size(); ++i) {
        DirEdge in = rev(loop[i]), out = loop[(i + 1) % loop.size()];
        if (first[in] == first[out]) return false;
    }
    return true;
}

// Edges of G_{pos+1} crossed by the image of each edge of G_pos.
std::vector<std::vector<Mask>> step_masks(const FoldingSequence& seq) {
    std::vector<std::vector<Mask>> out(seq.length());
    for (int pos = 0; pos < seq.length(); ++pos) {
        const IntMatrix& m = seq.matrix_at(pos);
        out[pos].assign(m.cols(), 0);
        for (int c = 0; c < m.cols(); ++c)
            for (int r = 0; r < m.rows(); ++r)
                if (sgn(m.at(r, c)) > 0) out[pos][c] |= Mask(1) << r;
    }
    return out;
}

struct Track {
    int horizon = -1;
    bool truncated = false;
    std::vector<int> missed;
};

Track track_circle(const FoldingSequence& seq, const std::vector<std::vector<Mask>>& masks, int pos0,
                   const Path& circle, int qmax) {
    Track t;
    Path loop = circle;
    bool exact = true;
    int pos = pos0;
    Mask supp = support(loop);
    int ne = seq.graph_at(pos).num_edges();
    if (supp == full_mask(ne)) return t;
    t.horizon = 0;
    t.missed.push_back(first_missing(supp, ne));
    for (int q = 1; q <= qmax; ++q, ++pos) {
        if (exact && legal_loop(seq, pos, loop)) exact = false;
        if (exact) {
            loop = cyclic_tighten(seq.graph_at(pos + 1), seq.step_at(pos).apply(loop));
            if (loop.size() > kImageCap) {
                t.truncated = true;
                return t;
            }
            supp = support(loop);
        } else {
            Mask next = 0;
            for (int e = 0; e < ne; ++e)
                if (supp & (Mask(1) << e)) next |= masks[pos][e];
            supp = next;
        }
        ne = seq.graph_at(pos + 1).num_edges();
        if (supp == full_mask(ne)) return t;
        t.horizon = q;
        t.missed.push_back(first_missing(supp, ne));
    }
    return t;
}

void check_edges(const FoldingSequence& seq) {
    if (seq.max_edges() > 64) fail(ErrorKind::Budget, "edge support masks hold at most 64 edges");
}

}  // namespace

bool fills(const Path& loop, const OrientedGraph& g) {
    std::vector<char> hit(g.num_edges(), 0);
    for (DirEdge d : loop) hit[edge_of(d)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::optional<NonFillingWitness> non_filling_witness(const FoldingSequence& seq, int n, int p) {
    check_edges(seq);
    int pos0 = seq.pos(n);
    if (p < 0 || pos0 + p > seq.length()) fail(ErrorKind::Argument, "window outside the sequence");
    auto masks = step_masks(seq);
    for (const auto& c : embedded_circles(seq.graph_at(pos0))) {
        Track t = track_circle(seq, masks, pos0, c, p);
        if (t.horizon >= p) {
            t.missed.resize(p + 1);
            return NonFillingWitness{n, p, c, t.missed};
        }
    }
    return std::nullopt;
}

std::vector<HorizonPoint> ff_progress_diagnostic(const FoldingSequence& seq, const std::vector<int>& indices) {
    check_edges(seq);
    std::vector<int> idx = indices;
    if (idx.empty())
        for (int i = seq.first_index(); i <= seq.last_index(); ++i) idx.push_back(i);
    auto masks = step_masks(seq);
    std::vector<HorizonPoint> out;
    for (int n : idx) {
        int pos0 = seq.pos(n), qmax = seq.length() - pos0;
        HorizonPoint hp;
        hp.index = n;
        for (const auto& c : embedded_circles(seq.graph_at(pos0))) {
            Track t = track_circle(seq, masks, pos0, c, qmax);
            if (t.horizon > hp.horizon) {
                hp.horizon = t.horizon;
                hp.circle = c;
                hp.truncated = t.truncated;
            }
        }
        hp.reaches_end = hp.horizon == qmax;
        out.push_back(hp);
    }
    return out;
}

bool verify_witness(const FoldingSequence& seq, const NonFillingWitness& w) {
    int pos0 = seq.pos(w.index);
    if (static_cast<int>(w.missed.size()) != w.horizon + 1) return false;
    for (int q = 0; q <= w.horizon; ++q) {
        Path img = cyclic_tighten(seq.graph_at(pos0 + q), seq.image_of_path(pos0, pos0 + q, w.circle, kImageCap));
        int e = w.missed[q];
        if (e < 0 || std::any_of(img.begin(), img.end(), [&](DirEdge d) { return edge_of(d) == e; })) return false;
    }
    return true;
}

StretchSample stretch_between(const FoldingSequence& seq, const MeasureTrack& lambda, int m, int n) {
    int pm = seq.pos(m), pn = seq.pos(n);
    if (pm > pn) fail(ErrorKind::Argument, "stretch is measured along the arrows");
    if (lambda.kind != TrackKind::Length || !lambda.covers(pm) || !lambda.covers(pn))
        fail(ErrorKind::Argument, "length track does not cover the window");
    const QVec &lm = lambda.at(pm), &ln = lambda.at(pn);
    for (const QVec* v : {&lm, &ln})
        for (const auto& x : *v)
            if (sgn(x) <= 0) fail(ErrorKind::Argument, "lengths must be positive on the window");
    const OrientedGraph& g = seq.graph_at(pm);
    MarkedGraph t(g, lm, MarkedGraph::default_marking(g));
    Rational vm = l1_norm(lm), vn = l1_norm(ln);
    Rational best = -1;
    for (const auto& c : candidates(t)) {
        Rational len = t.length(c.loop), img;
        if (legal_loop(seq, pm, c.loop)) {
            img = len;
        } else {
            for (DirEdge d : cyclic_tighten(seq.graph_at(pn), seq.image_of_path(pm, pn, c.loop, kImageCap)))
                img += ln[edge_of(d)];
        }
        Rational r = (img / vn) / (len / vm);
        best = std::max(best, r);
    }
    StretchSample s{m, n, best, log_of_ratio(best)};
    return s;
}

SpeedReport linearity_and_speed(const FoldingSequence& seq, const MeasureTrack& lambda, int max_gap, int stride) {
    if (max_gap < 1 || stride < 1) fail(ErrorKind::Argument, "gap and stride must be positive");
    SpeedReport r;
    const int L = seq.length();
    long first = 0, second = 0;
    for (int pos = 0; pos < L; ++pos) {
        BigInt e = seq.matrix_at(pos).max_entry();
        long v = e.fits_slong_p() ? e.get_si() : LONG_MAX;
        r.max_entry = std::max(r.max_entry, v);
        (pos < L / 2 ? first : second) = std::max(pos < L / 2 ? first : second, v);
    }
    r.growing_entries = second > first;
    double sgd = 0, sgg = 0;
    for (int pm = 0; pm < L; pm += stride)
        for (int g = 1; g <= max_gap && pm + g <= L; ++g) {
            auto s = stretch_between(seq, lambda, seq.index_of(pm), seq.index_of(pm + g));
            r.samples.push_back(s);
            sgd += g * s.distance;
            sgg += double(g) * g;
            r.C = std::max(r.C, s.distance / (g + 1));
        }
    if (sgg > 0) r.speed = sgd / sgg;
    for (const auto& s : r.samples) {
        int g = seq.pos(s.to) - seq.pos(s.from);
        if (s.distance > r.C * g + r.C + 1e-12) r.bound_holds = false;
    }
    return r;
}

}  // namespace fsq
