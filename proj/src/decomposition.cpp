#include "foldseq/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fsq {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

// Values on G_index edges moved to window-graph coordinates.
QVec to_window(const GraphIso& iso, const QVec& v) {
    QVec out(v.size());
    for (size_t e = 0; e < v.size(); ++e) out[edge_of(iso.dir_map[forward(static_cast<int>(e))])] = v[e];
    return out;
}

Rational sum_range(const std::vector<QVec>& series, size_t from, size_t to, int e) {
    Rational s = 0;
    for (size_t t = from; t < to; ++t) s += series[t][e];
    return s;
}

struct Assignment {
    std::vector<int> label;
    std::vector<Rational> thresholds;
};

// stats[i][t][e]; trailing half = second half of the window. Each component is
// measured against its own median since components are only defined up to scale.
Assignment assign(const std::vector<std::vector<QVec>>& stats, int num_edges, const Rational& eps) {
    const int k = static_cast<int>(stats.size());
    const size_t T = stats.empty() ? 0 : stats[0].size();
    const size_t half = T / 2;
    Assignment a;
    for (const auto& s : stats) {
        std::vector<Rational> nonzero;
        for (const auto& v : s)
            for (const auto& x : v)
                if (x != 0) nonzero.push_back(x);
        if (nonzero.empty()) {
            a.thresholds.push_back(eps);
        } else {
            std::nth_element(nonzero.begin(), nonzero.begin() + nonzero.size() / 2, nonzero.end());
            a.thresholds.push_back(eps * nonzero[nonzero.size() / 2]);
        }
    }
    a.label.assign(num_edges, 0);
    for (int e = 0; e < num_edges; ++e) {
        std::vector<char> liminf_ok(k), budget_ok(k);
        for (int i = 0; i < k; ++i) {
            Rational mn = stats[i][half][e];
            for (size_t t = half; t < T; ++t) mn = std::min(mn, stats[i][t][e]);
            liminf_ok[i] = mn >= a.thresholds[i] && mn > 0;
            budget_ok[i] = sum_range(stats[i], half, T, e) * 10 <= sum_range(stats[i], 0, half, e);
        }
        std::vector<int> cand;
        for (int i = 0; i < k; ++i) {
            if (!liminf_ok[i]) continue;
            bool others = true;
            for (int j = 0; j < k; ++j)
                if (j != i && !budget_ok[j]) others = false;
            if (others) cand.push_back(i);
        }
        if (cand.size() == 1) {
            a.label[e] = cand[0] + 1;
        } else if (cand.empty()) {
            bool all_summable = std::all_of(budget_ok.begin(), budget_ok.end(), [](char c) { return c != 0; });
            a.label[e] = all_summable ? 0 : -1;
        } else {
            a.label[e] = -1;
        }
    }
    return a;
}

TransverseDecomposition finish(std::vector<std::vector<QVec>> stats, const ModuliWindow& w, const Rational& eps) {
    TransverseDecomposition d;
    d.k = static_cast<int>(stats.size());
    d.indices = w.indices;
    const int ne = w.graph.num_edges();
    if (w.indices.size() < 2) fail(ErrorKind::Argument, "decomposition window needs at least two indices");
    Assignment a = assign(stats, ne, eps);
    d.label = a.label;
    d.thresholds = a.thresholds;
    d.stats = std::move(stats);
    d.parts.assign(d.k + 1, {});
    for (int e = 0; e < ne; ++e) {
        if (d.label[e] < 0)
            d.undecided.push_back(e);
        else
            d.parts[d.label[e]].push_back(e);
    }
    bool nonempty = true;
    for (int i = 1; i <= d.k; ++i)
        if (d.parts[i].empty()) {
            nonempty = false;
            d.issues.push_back("H^" + std::to_string(i) + " is empty");
        }
    if (!d.undecided.empty()) d.issues.push_back(std::to_string(d.undecided.size()) + " undecided edges");
    if (d.k >= 1 && nonempty && d.undecided.empty()) {
        d.verdict = DecompositionVerdict::Confident;
        auto v = structural_violations(w.graph, d, w.pinched);
        if (!v.empty()) {
            d.verdict = DecompositionVerdict::Inconsistent;
            d.issues.insert(d.issues.end(), v.begin(), v.end());
        }
    }
    return d;
}

void check_cover(const MeasureTrack& t, const FoldingSequence& seq, const std::vector<int>& indices, const char* what) {
    for (int n : indices)
        if (!t.covers(seq.pos(n))) fail(ErrorKind::Argument, std::string(what) + " track does not cover index " + std::to_string(n));
}

}  // namespace

std::string to_string(DecompositionVerdict v) {
    switch (v) {
        case DecompositionVerdict::Confident: return "confident";
        case DecompositionVerdict::Inconsistent: return "inconsistent-with-theory";
        default: return "undecided";
    }
}

ModuliWindow moduli_window(const FoldingSequence& seq, const MeasureTrack& lambda, const std::vector<int>& indices,
                           std::optional<Rational> pinch_tol) {
    if (lambda.kind != TrackKind::Length) fail(ErrorKind::Argument, "moduli window needs a length track");
    if (indices.empty()) fail(ErrorKind::Argument, "empty index list");
    ModuliWindow w;
    w.indices = indices;
    w.graph = seq.graph_at(seq.pos(indices.front()));
    const int ne = w.graph.num_edges();
    w.pinch_tol = pinch_tol ? *pinch_tol : Rational(1, 1000 * ne);
    if (w.pinch_tol <= 0) fail(ErrorKind::Argument, "pinch tolerance must be positive");
    for (int n : indices) {
        const int p = seq.pos(n);
        if (!lambda.covers(p)) fail(ErrorKind::Argument, "length track does not cover index " + std::to_string(n));
        GraphIso iso;
        if (!find_isomorphism(seq.graph_at(p), w.graph, iso))
            fail(ErrorKind::Validation, "graph at index " + std::to_string(n) + " is not isomorphic to the window graph");
        Rational vol = 0;
        for (const auto& x : lambda.at(p)) vol += x;
        if (vol == 0) fail(ErrorKind::Validation, "zero volume at index " + std::to_string(n));
        QVec v = to_window(iso, lambda.at(p));
        for (auto& x : v) x /= vol;
        w.identifications.push_back(iso);
        w.normalized.push_back(v);
    }
    w.limit = w.normalized.back();
    const size_t T = indices.size();
    const size_t from = T - std::max<size_t>(1, T / 4);
    for (int e = 0; e < ne; ++e) {
        bool small = true, down = true;
        for (size_t t = from; t < T; ++t) {
            if (w.normalized[t][e] >= w.pinch_tol) small = false;
            if (t > from && w.normalized[t][e] > w.normalized[t - 1][e]) down = false;
        }
        if (small && down) w.pinched.push_back(e);
    }
    return w;
}

std::vector<int> default_window(const FoldingSequence& seq, int count) {
    const int D = seq.length();
    int a = D / 4, b = (3 * D) / 4;
    if (b <= a) b = std::min(D, a + 1);
    std::vector<int> depths;
    for (int i = 0; i < count; ++i) {
        int d = count == 1 ? b : a + static_cast<int>((static_cast<long>(b - a) * i) / (count - 1));
        if (depths.empty() || depths.back() != d) depths.push_back(d);
    }
    std::vector<int> out;
    for (int d : depths) out.push_back(seq.direction() == Direction::Unfolding ? -d : d);
    return out;
}

TransverseDecomposition transverse_decomposition_unfolding(const FoldingSequence& seq,
                                                           const std::vector<MeasureTrack>& currents,
                                                           const MeasureTrack& lambda, const ModuliWindow& window,
                                                           const Rational& eps) {
    if (eps <= 0) fail(ErrorKind::Argument, "eps must be positive");
    check_cover(lambda, seq, window.indices, "length");
    std::vector<std::vector<QVec>> stats;
    for (const auto& mu : currents) {
        if (mu.kind != TrackKind::Current) fail(ErrorKind::Argument, "expected current tracks");
        check_cover(mu, seq, window.indices, "current");
        std::vector<QVec> s;
        for (size_t t = 0; t < window.indices.size(); ++t) {
            const int p = seq.pos(window.indices[t]);
            QVec v(mu.at(p).size());
            for (size_t e = 0; e < v.size(); ++e) v[e] = mu.at(p)[e] * lambda.at(p)[e];
            s.push_back(to_window(window.identifications[t], v));
        }
        stats.push_back(std::move(s));
    }
    return finish(std::move(stats), window, eps);
}

TransverseDecomposition transverse_decomposition_folding(const FoldingSequence& seq,
                                                         const std::vector<MeasureTrack>& lengths,
                                                         const MeasureTrack& mu, const ModuliWindow& window,
                                                         const Rational& eps) {
    if (eps <= 0) fail(ErrorKind::Argument, "eps must be positive");
    check_cover(mu, seq, window.indices, "current");
    std::vector<std::vector<QVec>> stats, lam;
    for (const auto& l : lengths) {
        if (l.kind != TrackKind::Length) fail(ErrorKind::Argument, "expected length tracks");
        check_cover(l, seq, window.indices, "length");
        std::vector<QVec> s, raw;
        bool nonzero = false;
        for (size_t t = 0; t < window.indices.size(); ++t) {
            const int p = seq.pos(window.indices[t]);
            QVec v(l.at(p).size());
            for (size_t e = 0; e < v.size(); ++e) v[e] = mu.at(p)[e] * l.at(p)[e];
            if (!all_zero(l.at(p))) nonzero = true;
            s.push_back(to_window(window.identifications[t], v));
            raw.push_back(to_window(window.identifications[t], l.at(p)));
        }
        if (!nonzero) fail(ErrorKind::Argument, "length component vanishes on the window");
        stats.push_back(std::move(s));
        lam.push_back(std::move(raw));
    }
    TransverseDecomposition d = finish(std::move(stats), window, eps);
    const int ne = window.graph.num_edges();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (size_t t = 0; t < window.indices.size(); ++t) {
        std::vector<double> row(ne, nan);
        for (int e = 0; e < ne; ++e) {
            int i = d.label[e] - 1;
            if (i < 0 || lam[i][t][e] == 0) continue;
            double best = 0.0;
            for (int j = 0; j < d.k; ++j)
                if (j != i) best = std::max(best, to_double(lam[j][t][e] / lam[i][t][e]));
            row[e] = best;
        }
        d.ratio_trace.push_back(std::move(row));
    }
    return d;
}

std::vector<MeasureTrack> ergodic_current_tracks(const FoldingSequence& seq, const ConeApprox& cone) {
    const int p = seq.length() - cone.depth;
    const int ne = seq.graph_at(p).num_edges();
    std::vector<MeasureTrack> out;
    for (const auto& cl : cone.clusters) {
        QVec unit(ne, 0);
        unit[cl.front()] = 1;
        out.push_back(current_track_from(seq, p, unit));
    }
    return out;
}

std::vector<MeasureTrack> ergodic_length_tracks(const FoldingSequence& seq, const ConeApprox& cone) {
    const int p = cone.depth;
    const int ne = seq.graph_at(p).num_edges();
    std::vector<MeasureTrack> out;
    for (const auto& cl : cone.clusters) {
        QVec unit(ne, 0);
        unit[cl.front()] = 1;
        out.push_back(length_track_from(seq, p, unit));
    }
    return out;
}

Collapse collapse(const OrientedGraph& g, const std::vector<int>& collapsed, const std::vector<int>& label) {
    const int ne = g.num_edges(), nv = g.num_vertices();
    std::vector<char> in(ne, 0);
    for (int e : collapsed) {
        if (e < 0 || e >= ne) fail(ErrorKind::Argument, "collapsed edge out of range");
        in[e] = 1;
    }
    if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; }))
        fail(ErrorKind::Argument, "cannot collapse the whole graph");
    if (!label.empty() && static_cast<int>(label.size()) != ne) fail(ErrorKind::Argument, "label size mismatch");

    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < ne; ++e)
        if (in[e]) parent[find_root(parent, g.ends()[e].first)] = find_root(parent, g.ends()[e].second);
    Collapse c;
    c.vertex_map.assign(nv, -1);
    std::vector<int> slot(nv, -1);
    int next = 0;
    for (int v = 0; v < nv; ++v) {
        int r = find_root(parent, v);
        if (slot[r] < 0) slot[r] = next++;
        c.vertex_map[v] = slot[r];
    }
    std::vector<std::pair<int, int>> ends;
    c.edge_map.assign(ne, -1);
    int max_label = 0;
    for (int e = 0; e < ne; ++e) {
        if (in[e]) continue;
        c.edge_map[e] = static_cast<int>(ends.size());
        ends.push_back({c.vertex_map[g.ends()[e].first], c.vertex_map[g.ends()[e].second]});
        int l = label.empty() ? 0 : label[e];
        c.label.push_back(l);
        max_label = std::max(max_label, l);
    }
    c.quotient = OrientedGraph::make_unchecked(next, ends);
    c.valence.assign(max_label + 1, std::vector<int>(next, 0));
    for (size_t e = 0; e < ends.size(); ++e) {
        int l = c.label[e];
        if (l < 0) continue;
        ++c.valence[l][ends[e].first];
        ++c.valence[l][ends[e].second];
    }
    return c;
}

std::vector<std::string> structural_violations(const OrientedGraph& g, const TransverseDecomposition& d,
                                               const std::vector<int>& pinched) {
    std::vector<std::string> out;
    std::vector<int> seen(g.num_edges(), 0);
    for (const auto& part : d.parts)
        for (int e : part) ++seen[e];
    for (int e = 0; e < g.num_edges(); ++e)
        if (seen[e] > 1) out.push_back("edge " + std::to_string(e + 1) + " lies in two parts");
    for (int i = 1; i <= d.k; ++i)
        if (d.parts[i].empty()) out.push_back("H^" + std::to_string(i) + " is degenerate");
    if (static_cast<int>(pinched.size()) >= g.num_edges()) return out;
    std::vector<int> labels = d.label;
    Collapse c = collapse(g, pinched, labels);
    for (int i = 1; i <= d.k && i < static_cast<int>(c.valence.size()); ++i)
        for (int v = 0; v < c.quotient.num_vertices(); ++v)
            if (c.valence[i][v] == 1)
                out.push_back("vertex " + std::to_string(v + 1) + " has valence 1 in H^" + std::to_string(i) + "/E");
    return out;
}

bool is_forest(const OrientedGraph& g, const std::vector<int>& edges) {
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    for (int e : edges) {
        int a = find_root(parent, g.ends()[e].first), b = find_root(parent, g.ends()[e].second);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

RecurrenceReport recurrence_check(const FoldingSequence& seq, const MeasureTrack& lambda,
                                  const std::vector<std::vector<int>>& windows, int measured_k,
                                  std::optional<Rational> pinch_tol) {
    RecurrenceReport r;
    r.measured_k = measured_k;
    for (size_t i = 0; i < windows.size(); ++i) {
        ModuliWindow w = moduli_window(seq, lambda, windows[i], pinch_tol);
        r.pinched.push_back(w.pinched);
        if (r.window < 0 && static_cast<int>(w.pinched.size()) < w.graph.num_edges() && is_forest(w.graph, w.pinched))
            r.window = static_cast<int>(i);
    }
    if (r.window >= 0) {
        r.kind = RecurrenceKind::Recurrent;
        r.bound = seq.rank();
        r.consistent = measured_k <= r.bound;
    }
    return r;
}

}  // namespace fsq
