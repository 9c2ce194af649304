#include "foldseq/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace fsq {

MeasureTrack length_track_from(const FoldingSequence& seq, int pos, const QVec& lambda) {
    if (pos < 0 || pos > seq.length()) fail(ErrorKind::Argument, "track position out of range");
    if (static_cast<int>(lambda.size()) != seq.graph_at(pos).num_edges())
        fail(ErrorKind::Argument, "length vector does not match the graph");
    if (!all_nonnegative(lambda)) fail(ErrorKind::Argument, "length vector has negative entries");
    MeasureTrack t{TrackKind::Length, 0, pos, std::vector<QVec>(pos + 1)};
    t.v[pos] = lambda;
    for (int p = pos - 1; p >= 0; --p) t.v[p] = seq.matrix_at(p).apply_transpose(t.v[p + 1]);
    return t;
}

MeasureTrack current_track_from(const FoldingSequence& seq, int pos, const QVec& mu) {
    if (pos < 0 || pos > seq.length()) fail(ErrorKind::Argument, "track position out of range");
    if (static_cast<int>(mu.size()) != seq.graph_at(pos).num_edges())
        fail(ErrorKind::Argument, "current vector does not match the graph");
    if (!all_nonnegative(mu)) fail(ErrorKind::Argument, "current vector has negative entries");
    const int L = seq.length();
    MeasureTrack t{TrackKind::Current, pos, L, std::vector<QVec>(L - pos + 1)};
    t.v[0] = mu;
    for (int p = pos; p < L; ++p) t.v[p + 1 - pos] = seq.matrix_at(p).apply(t.v[p - pos]);
    return t;
}

MeasureTrack simplicial_length_measure(const FoldingSequence& seq) {
    const int L = seq.length();
    return length_track_from(seq, L, QVec(seq.graph_at(L).num_edges(), Rational(1)));
}

MeasureTrack frequency_current(const FoldingSequence& seq) {
    return current_track_from(seq, 0, QVec(seq.graph_at(0).num_edges(), Rational(1)));
}

bool track_valid(const FoldingSequence& seq, const MeasureTrack& t) {
    if (t.lo < 0 || t.hi > seq.length() || t.lo > t.hi) return false;
    if (static_cast<int>(t.v.size()) != t.hi - t.lo + 1) return false;
    for (int p = t.lo; p <= t.hi; ++p) {
        if (static_cast<int>(t.at(p).size()) != seq.graph_at(p).num_edges()) return false;
        if (!all_nonnegative(t.at(p))) return false;
    }
    for (int p = t.lo; p < t.hi; ++p) {
        if (t.kind == TrackKind::Length) {
            if (seq.matrix_at(p).apply_transpose(t.at(p + 1)) != t.at(p)) return false;
        } else {
            if (seq.matrix_at(p).apply(t.at(p)) != t.at(p + 1)) return false;
        }
    }
    return true;
}

Rational area(const FoldingSequence& seq, const MeasureTrack& lambda, const MeasureTrack& mu) {
    if (lambda.kind != TrackKind::Length || mu.kind != TrackKind::Current)
        fail(ErrorKind::Argument, "area needs a length track and a current track");
    if (!track_valid(seq, lambda) || !track_valid(seq, mu)) fail(ErrorKind::Validation, "invalid track");
    int lo = std::max(lambda.lo, mu.lo), hi = std::min(lambda.hi, mu.hi);
    if (lo > hi) fail(ErrorKind::Argument, "tracks have no common index");
    Rational a = dot(mu.at(lo), lambda.at(lo));
    for (int p = lo + 1; p <= hi; ++p)
        if (dot(mu.at(p), lambda.at(p)) != a) fail(ErrorKind::Validation, "area differs between indices");
    return a;
}

HilbertDistance hilbert_distance(const QVec& x, const QVec& y) {
    HilbertDistance h;
    const size_t n = x.size();
    int a = -1, b = -1;
    for (size_t i = 0; i < n; ++i) {
        bool px = x[i] != 0, py = y[i] != 0;
        if (px != py) {
            h.infinite = true;
            h.value = INFINITY;
            return h;
        }
        if (!px) continue;
        // a maximises x_i/y_i, b minimises it.
        if (a < 0 || x[i] * y[a] > x[a] * y[i]) a = static_cast<int>(i);
        if (b < 0 || x[i] * y[b] < x[b] * y[i]) b = static_cast<int>(i);
    }
    if (a < 0) {
        h.infinite = true;  // both zero: no projective class
        h.value = INFINITY;
        return h;
    }
    h.cross_ratio = (x[a] * y[b]) / (y[a] * x[b]);
    h.value = log_of_ratio(h.cross_ratio);
    return h;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

void fill_diameter(ConeApprox& c) {
    c.diameter = HilbertDistance{};
    c.diameter.cross_ratio = 1;
    c.diameter_pair.clear();
    const auto& g = c.generators;
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) {
            HilbertDistance h = hilbert_distance(g[i], g[j]);
            if (c.diameter.infinite) return;
            if (h.infinite || c.diameter_pair.empty() || h.cross_ratio > c.diameter.cross_ratio) {
                c.diameter = h;
                c.diameter_pair = {{static_cast<int>(i), static_cast<int>(j)}};
            }
        }
}

double diameter_value(const std::vector<QVec>& cols) {
    double best = 0.0;
    Rational best_ratio = 1;
    for (size_t i = 0; i < cols.size(); ++i)
        for (size_t j = i + 1; j < cols.size(); ++j) {
            HilbertDistance h = hilbert_distance(cols[i], cols[j]);
            if (h.infinite) return INFINITY;
            if (h.cross_ratio > best_ratio) {
                best_ratio = h.cross_ratio;
                best = h.value;
            }
        }
    return best;
}

bool in_cone_of(const std::vector<QVec>& others, const QVec& target) {
    // Caratheodory: a cone member is a nonnegative combination of an independent subset.
    const int n = static_cast<int>(others.size());
    const int dim = target.empty() ? 0 : static_cast<int>(target.size());
    const int rk = rational_rank(others);
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int start) -> bool {
        if (!pick.empty()) {
            std::vector<QVec> basis;
            for (int i : pick) basis.push_back(others[i]);
            if (rational_rank(basis) != static_cast<int>(basis.size())) return false;
            QVec coeffs;
            if (solve_combination(basis, target, coeffs)) {
                bool nonneg = true;
                for (const auto& c : coeffs)
                    if (c < 0) nonneg = false;
                if (nonneg) return true;
            }
        }
        if (static_cast<int>(pick.size()) >= std::min(rk, dim)) return false;
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

ConeApprox analyze(std::vector<QVec> gens, double tol, int rank, int depth, std::vector<double> history) {
    ConeApprox c;
    c.ambient = gens.empty() ? 0 : static_cast<int>(gens[0].size());
    c.depth = depth;
    c.rank = rank;
    c.tol = tol;
    for (auto& g : gens) c.generators.push_back(normalized_l1(g));
    c.history = std::move(history);
    fill_diameter(c);

    // Extreme rays: drop exact duplicates and zero vectors, then test cone membership.
    std::vector<int> distinct;
    for (size_t i = 0; i < c.generators.size(); ++i) {
        if (all_zero(c.generators[i])) continue;
        bool dup = false;
        for (int j : distinct)
            if (c.generators[j] == c.generators[i]) dup = true;
        if (!dup) distinct.push_back(static_cast<int>(i));
    }
    std::vector<QVec> dv;
    for (int i : distinct) dv.push_back(c.generators[i]);
    if (rational_rank(dv) == static_cast<int>(dv.size())) {
        c.extreme = distinct;
    } else {
        for (size_t a = 0; a < distinct.size(); ++a) {
            std::vector<QVec> others;
            for (size_t b = 0; b < distinct.size(); ++b)
                if (b != a) others.push_back(dv[b]);
            if (!in_cone_of(others, dv[a])) c.extreme.push_back(distinct[a]);
        }
    }

    std::vector<int> parent(c.extreme.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (size_t a = 0; a < c.extreme.size(); ++a)
        for (size_t b = a + 1; b < c.extreme.size(); ++b) {
            HilbertDistance h = hilbert_distance(c.generators[c.extreme[a]], c.generators[c.extreme[b]]);
            if (!h.infinite && h.value < tol) parent[find_root(parent, a)] = find_root(parent, b);
        }
    std::vector<int> root_slot(c.extreme.size(), -1);
    for (size_t a = 0; a < c.extreme.size(); ++a) {
        int r = find_root(parent, a);
        if (root_slot[r] < 0) {
            root_slot[r] = static_cast<int>(c.clusters.size());
            c.clusters.emplace_back();
        }
        c.clusters[root_slot[r]].push_back(c.extreme[a]);
    }
    c.dimension = static_cast<int>(c.clusters.size());
    if (c.dimension > c.ambient) {
        c.dimension = c.ambient;
        c.dimension_capped = true;
    }
    return c;
}

std::vector<QVec> columns(const IntMatrix& m) {
    std::vector<QVec> out;
    for (int c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
    return out;
}

}  // namespace

ConeApprox analyze_generators(const std::vector<QVec>& gens, double tol, int rank) {
    return analyze(gens, tol, rank, 0, {});
}

ConeApprox current_cone(const FoldingSequence& seq, int depth, double tol) {
    if (seq.direction() != Direction::Unfolding) fail(ErrorKind::Argument, "current_cone needs an unfolding sequence");
    const int L = seq.length();
    if (depth < 0 || depth > L) fail(ErrorKind::Argument, "depth outside the stored range");
    IntMatrix p = IntMatrix::identity(seq.graph_at(L).num_edges());
    std::vector<double> history{diameter_value(columns(p))};
    for (int k = 1; k <= depth; ++k) {
        p = p * seq.matrix_at(L - k);
        history.push_back(diameter_value(columns(p)));
    }
    return analyze(columns(p), tol, seq.rank(), depth, std::move(history));
}

ConeApprox length_cone(const FoldingSequence& seq, int depth, double tol) {
    if (seq.direction() != Direction::Folding) fail(ErrorKind::Argument, "length_cone needs a folding sequence");
    const int L = seq.length();
    if (depth < 0 || depth > L) fail(ErrorKind::Argument, "depth outside the stored range");
    // Rows of M_{n-1}...M_0 are the columns of M_0^T ... M_{n-1}^T.
    IntMatrix p = IntMatrix::identity(seq.graph_at(0).num_edges());
    std::vector<double> history{diameter_value(columns(p))};
    for (int k = 0; k < depth; ++k) {
        p = p * seq.matrix_at(k).transpose();
        history.push_back(diameter_value(columns(p)));
    }
    return analyze(columns(p), tol, seq.rank(), depth, std::move(history));
}

std::string to_string(const ErgodicityVerdict& v) {
    switch (v.kind) {
        case VerdictKind::Unique: return "unique";
        case VerdictKind::Multiple: return "multiple(" + std::to_string(v.k) + ")";
        default: return "undecided";
    }
}

ErgodicityVerdict ergodicity_verdict(const ConeApprox& cone, double tol) {
    ErgodicityVerdict v;
    if (cone.generators.size() <= 1) {
        v.kind = VerdictKind::Unique;
        v.k = 1;
        v.reason = "single generator";
        return v;
    }
    if (!cone.diameter.infinite && cone.diameter.value < tol) {
        v.kind = VerdictKind::Unique;
        v.k = 1;
        v.reason = "Hilbert diameter below tolerance";
        return v;
    }
    if (cone.history.size() < 2) {
        v.reason = "no depth history";
        return v;
    }
    const double end = cone.history.back();
    const double mid = cone.history[(cone.history.size() - 1) / 2];
    bool non_contracting;
    if (std::isinf(end))
        non_contracting = true;
    else if (std::isinf(mid))
        non_contracting = false;
    else
        non_contracting = end > mid / 2;

    // Cluster at the verdict tolerance.
    ConeApprox c = analyze_generators(cone.generators, tol, cone.rank);
    int k = c.dimension;
    if (non_contracting && k >= 2) {
        v.kind = VerdictKind::Multiple;
        v.k = std::min(k, std::max(1, 3 * cone.rank - 3));
        v.reason = "diameter did not halve over the trailing half of depths";
        return v;
    }
    v.reason = non_contracting ? "non-contracting but a single cluster" : "diameter still contracting";
    return v;
}

DecayReport decay_check(const FoldingSequence& seq, const MeasureTrack& lambda, const MeasureTrack& mu) {
    if (!track_valid(seq, lambda) || !track_valid(seq, mu)) fail(ErrorKind::Validation, "invalid track");
    DecayReport r;
    int lo = std::max(lambda.lo, mu.lo), hi = std::min(lambda.hi, mu.hi);
    if (lo > hi) fail(ErrorKind::Argument, "tracks have no common index");
    auto mx = [](const QVec& v) { return *std::max_element(v.begin(), v.end()); };
    auto mn = [](const QVec& v) { return *std::min_element(v.begin(), v.end()); };
    for (int p = lo; p <= hi; ++p) {
        r.indices.push_back(seq.index_of(p));
        r.lambda_max.push_back(mx(lambda.at(p)));
        r.lambda_min.push_back(mn(lambda.at(p)));
        r.mu_max.push_back(mx(mu.at(p)));
        r.mu_min.push_back(mn(mu.at(p)));
    }
    const size_t n = r.indices.size();
    bool ldec = true, mgrow = true;
    for (size_t i = 1; i < n; ++i) {
        if (r.lambda_max[i] > r.lambda_max[i - 1] || r.lambda_min[i] > r.lambda_min[i - 1]) ldec = false;
        if (r.mu_min[i] < r.mu_min[i - 1] || r.mu_max[i] < r.mu_max[i - 1]) mgrow = false;
    }
    r.lengths_decay = ldec && n >= 2 && r.lambda_min.front() > r.lambda_min.back();
    r.currents_grow = mgrow && n >= 2 && r.mu_min.back() > r.mu_min.front();
    r.reduced_consistent = r.lengths_decay && r.currents_grow;
    return r;
}

ReducedWindowVerdict is_reduced_window(const FoldingSequence& seq, int n0, int n1) {
    ReducedWindowVerdict out;
    out.n0 = n0;
    out.n1 = n1;
    const int p0 = seq.pos(n0), p1 = seq.pos(n1);
    if (p1 <= p0) fail(ErrorKind::Argument, "window needs at least one step");
    if (seq.rank() > 6 || seq.graph_at(p0).num_edges() > 15)
        fail(ErrorKind::Budget, "subgraph enumeration is capped at rank 6");
    const int ne = seq.graph_at(p0).num_edges();
    for (unsigned mask = 1; mask + 1 < (1u << ne); ++mask) {
        std::vector<int> cur;
        for (int e = 0; e < ne; ++e)
            if (mask & (1u << e)) cur.push_back(e);
        std::vector<std::vector<int>> chain{cur};
        bool alive = true;
        for (int p = p0; p < p1 && alive; ++p) {
            const GraphMorphism& f = seq.step_at(p);
            const OrientedGraph& g = f.domain();
            std::vector<int> next;
            std::vector<char> hit(f.codomain().num_edges(), 0);
            std::vector<int> vimg;
            for (int e : cur) {
                const Path& im = f.images()[e];
                if (im.size() != 1 || hit[edge_of(im[0])]) {
                    alive = false;
                    break;
                }
                hit[edge_of(im[0])] = 1;
                next.push_back(edge_of(im[0]));
            }
            if (!alive) break;
            // Vertex map must be injective on the subgraph.
            std::vector<int> verts;
            for (int e : cur) {
                verts.push_back(g.init(forward(e)));
                verts.push_back(g.term(forward(e)));
            }
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            for (int v : verts) vimg.push_back(f.vertex_image(v));
            std::sort(vimg.begin(), vimg.end());
            if (std::adjacent_find(vimg.begin(), vimg.end()) != vimg.end()) alive = false;
            if (static_cast<int>(next.size()) >= f.codomain().num_edges()) alive = false;
            std::sort(next.begin(), next.end());
            cur = next;
            chain.push_back(cur);
        }
        if (alive) {
            out.witness_found = true;
            out.chain = chain;
            return out;
        }
    }
    return out;
}

}  // namespace fsq
