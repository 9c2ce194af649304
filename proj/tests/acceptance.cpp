// Acceptance suite: one PASS/FAIL line per criterion.

#include "foldseq/decomposition.hpp"
#include "foldseq/examples.hpp"
#include "foldseq/lamination.hpp"
#include "foldseq/measures.hpp"
#include "foldseq/metric.hpp"
#include "foldseq/progress.hpp"
#include "foldseq/report.hpp"
#include "foldseq/walk.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace fsq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failed checks; the first few are kept for the report line.
class Checker {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
    }
    void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }
    Outcome outcome() const {
        Outcome o;
        o.pass = failures_ == 0 && checks_ > 0;
        std::ostringstream out;
        out << checks_ << " checks";
        if (failures_) out << ", " << failures_ << " failed: " << notes_;
        if (!info_.empty()) out << ", " << info_;
        o.detail = out.str();
        return o;
    }

private:
    long checks_ = 0, failures_ = 0;
    std::string notes_, info_;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

Rational random_rational(std::mt19937_64& rng, int num, int den) {
    return Rational(static_cast<long>(rng() % num)) / static_cast<long>(1 + rng() % den);
}

// Sum of entries by explicit loops, independent of the matrix helpers.
Rational forward_pairing(const IntMatrix& m, const QVec& mu, const QVec& lambda) {
    Rational s = 0;
    for (int r = 0; r < m.rows(); ++r) {
        Rational row = 0;
        for (int c = 0; c < m.cols(); ++c) row += m.at(r, c) * mu[c];
        s += row * lambda[r];
    }
    return s;
}

Rational backward_pairing(const IntMatrix& m, const QVec& mu, const QVec& lambda) {
    Rational s = 0;
    for (int c = 0; c < m.cols(); ++c) {
        Rational col = 0;
        for (int r = 0; r < m.rows(); ++r) col += m.at(r, c) * lambda[r];
        s += mu[c] * col;
    }
    return s;
}

Outcome exact_algebra() {
    Checker ck;
    std::mt19937_64 rng(101);
    int sequences = 0;
    for (; sequences < 200; ++sequences) {
        int rank = 2 + sequences % 3;
        int length = 1 + static_cast<int>(rng() % 30);
        std::vector<std::vector<Word>> autos;
        for (int i = 0; i < 3; ++i) autos.push_back(random_automorphism(rank, 1 + static_cast<int>(rng() % 2), rng, true));
        std::vector<int> sched;
        for (int i = 0; i < length; ++i) sched.push_back(static_cast<int>(rng() % 3));
        auto s = custom_sequence(rank, autos, sched, sequences % 2 ? Direction::Unfolding : Direction::Folding);
        QVec la(rank), m0(rank);
        for (int i = 0; i < rank; ++i) la[i] = random_rational(rng, 9, 5) + 1;
        for (int i = 0; i < rank; ++i) m0[i] = random_rational(rng, 7, 3);
        auto L = length_track_from(s, s.length(), la);
        auto M = current_track_from(s, 0, m0);
        Rational a0 = 0;
        for (int i = 0; i < rank; ++i) a0 += M.at(0)[i] * L.at(0)[i];
        bool same = true;
        for (int p = 0; p <= s.length(); ++p) {
            Rational a = 0;
            for (int i = 0; i < rank; ++i) a += M.at(p)[i] * L.at(p)[i];
            same = same && a == a0;
        }
        ck.check(same, "area varies along a sequence");
        ck.check(area(s, L, M) == a0, "area report disagrees");
    }
    for (int t = 0; t < 1000; ++t) {
        int rank = 2 + t % 3;
        auto f = GraphMorphism::rose_map(rank, random_automorphism(rank, 1 + static_cast<int>(rng() % 6), rng));
        const IntMatrix& m = f.incidence();
        QVec mu(rank), lambda(rank);
        for (int i = 0; i < rank; ++i) mu[i] = static_cast<long>(rng() % 21) - 10;
        for (int i = 0; i < rank; ++i) lambda[i] = static_cast<long>(rng() % 21) - 10;
        Rational lhs = forward_pairing(m, mu, lambda), rhs = backward_pairing(m, mu, lambda);
        ck.check(lhs == rhs, "adjointness by direct evaluation");
        ck.check(dot(m.apply(mu), lambda) == lhs && dot(mu, m.apply_transpose(lambda)) == rhs, "adjointness via library");
    }
    ck.note(std::to_string(sequences) + " sequences, 1000 triples");
    return ck.outcome();
}

Outcome lipschitz_oracle() {
    Checker ck;
    auto t = MarkedGraph::rose({Rational(1) / 2, Rational(1) / 2});
    auto u = MarkedGraph::rose({Rational(1) / 3, Rational(2) / 3});
    auto d = lipschitz_distance(t, u);
    ck.check(d.ratio == Rational(4) / 3, "rose example ratio is not 4/3");
    ck.check(lipschitz_bruteforce(t, u, bruteforce_length(t)).ratio == Rational(4) / 3, "rose example brute force");
    ck.check(std::abs(d.value - std::log(4.0 / 3.0)) < 1e-12, "rose example log");
    std::mt19937_64 rng(202);
    for (int i = 0; i < 120; ++i) {
        int rank = 2 + i % 2;
        auto a = random_marked_graph(rank, rng), b = random_marked_graph(rank, rng);
        auto twist = random_automorphism(rank, static_cast<int>(rng() % 4), rng);
        auto fast = lipschitz_distance(a, b, twist);
        auto slow = lipschitz_bruteforce(a, b, bruteforce_length(a), twist);
        ck.check(fast.ratio == slow.ratio, "pair " + std::to_string(i) + ": " + to_string(fast.ratio) + " vs " +
                                               to_string(slow.ratio));
    }
    ck.note("120 pairs");
    return ck.outcome();
}

Outcome kl_pairing_check() {
    Checker ck;
    std::mt19937_64 rng(303);
    for (int gi = 0; gi < 5; ++gi) {
        int rank = 2 + gi % 2;
        auto t = random_marked_graph(rank, rng);
        for (int i = 0; i < 100; ++i) {
            Word w;
            int len = 1 + static_cast<int>(rng() % 10);
            for (int k = 0; k < len; ++k) w.push_back((rng() % 2 ? 1 : -1) * static_cast<int>(1 + rng() % rank));
            Path loop;
            for (int x : w) {
                Path l = t.letter_loop(std::abs(x));
                if (x < 0) l = reverse_path(l);
                loop.insert(loop.end(), l.begin(), l.end());
            }
            Rational expect = 0;
            for (DirEdge e : cyclic_tighten(t.graph(), loop)) expect += t.lengths()[edge_of(e)];
            ck.check(kl_pairing(t, current_of_word(t, w)) == expect, "word " + word_to_string(w));
            ck.check(translation_length(t, w) == expect, "translation length of " + word_to_string(w));
        }
    }
    ck.note("5 graphs x 100 words");
    return ck.outcome();
}

Outcome sandwich() {
    Checker ck;
    auto s = fibonacci_sequence(15, Direction::Unfolding);
    auto mu = current_track_from(s, 0, {1, 1});
    const OrientedGraph& g0 = s.graph_at(s.length());
    std::mt19937_64 rng(404);
    for (int t = 0; t < 20; ++t) {
        auto words = allowed_words(s, 15, 1 + static_cast<int>(rng() % 5)).words;
        Path gamma = words[rng() % words.size()];
        Rational prev = -1;
        for (int d = 1; d <= 15; ++d) {
            Rational value = cylinder_weight(s, mu, gamma, d);
            Rational ext = 0;
            for (DirEdge e = 0; e < 2 * g0.num_edges(); ++e) {
                if (g0.init(e) != g0.term(gamma.back()) || e == rev(gamma.back())) continue;
                Path longer = gamma;
                longer.push_back(e);
                ext += cylinder_weight(s, mu, longer, d);
            }
            Rational defect = 0;
            for (const Rational& x : mu.at(s.pos(-d))) defect += x;
            ck.check(ext <= value && value <= ext + defect, "sandwich at depth " + std::to_string(d));
            auto k = kolmogorov_sandwich(s, mu, gamma, d);
            ck.check(k.holds && k.value == value && k.extensions_sum == ext, "sandwich report disagrees");
            ck.check(value >= prev, "weight decreases with depth");
            prev = value;
        }
    }
    ck.note("20 words, depths 1..15");
    return ck.outcome();
}

BigInt fib(int n) {
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt t = a + b;
        a = b;
        b = t;
    }
    return a;
}

Outcome fibonacci_unique_ergodicity() {
    Checker ck;
    auto s = fibonacci_sequence(40, Direction::Unfolding);
    auto c20 = current_cone(s, 20, 1e-6);
    // columns (F21,F20) and (F20,F19): cross ratio F21 F19 / F20^2
    Rational cross = Rational(fib(21) * fib(19)) / (fib(20) * fib(20));
    ck.check(c20.diameter.cross_ratio == cross, "depth 20 cross ratio differs from the Fibonacci oracle");
    ck.check(c20.diameter.value < 1e-6, "diameter at depth 20 is " + fmt(c20.diameter.value));
    ck.check(c20.dimension == 1, "dimension at depth 20");
    ck.check(ergodicity_verdict(c20, 1e-6).kind == VerdictKind::Unique, "verdict at depth 20");
    auto c40 = current_cone(s, 40);
    ck.check(c40.dimension == 1 && ergodicity_verdict(c40, 1e-8).kind == VerdictKind::Unique, "verdict at depth 40");
    const QVec& g = c40.generators.front();
    Rational ratio = g[0] / g[1];
    Rational golden = Rational(fib(61)) / fib(60);  // within 1e-24 of the golden ratio
    Rational gap = abs(ratio - golden);
    ck.check(gap < Rational(1) / 100000000, "frequency ratio off by " + fmt(to_double(gap)));
    ck.note("diameter(20) " + fmt(c20.diameter.value));
    return ck.outcome();
}

// Hilbert diameter of the columns of an exact product, computed with plain big integers.
double product_diameter(const FoldingSequence& s, int depth) {
    const int n = s.graph_at(s.length()).num_edges();
    std::vector<std::vector<BigInt>> p(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) p[i][i] = 1;
    for (int k = 1; k <= depth; ++k) {
        const IntMatrix& m = s.matrix_at(s.length() - k);
        std::vector<std::vector<BigInt>> q(n, std::vector<BigInt>(m.cols(), 0));
        for (int r = 0; r < n; ++r)
            for (int j = 0; j < m.rows(); ++j)
                if (p[r][j] != 0)
                    for (int c = 0; c < m.cols(); ++c) q[r][c] += p[r][j] * m.at(j, c);
        p = std::move(q);
    }
    double best = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Rational hi = 0, lo = -1;
            for (int r = 0; r < n; ++r) {
                bool za = p[r][a] == 0, zb = p[r][b] == 0;
                if (za != zb) return INFINITY;
                if (za) continue;
                Rational q = Rational(p[r][a]) / p[r][b];
                if (q > hi) hi = q;
                if (lo < 0 || q < lo) lo = q;
            }
            if (lo > 0) best = std::max(best, std::log(to_double(hi / lo)));
        }
    return best;
}

struct BlockCheck {
    bool diameter_ok = false, verdict_ok = false, decomposition_ok = false;
    double min_diameter = INFINITY;
    std::string verdict;
    int undecided = -1;
};

BlockCheck non_ue_candidate(int rank, int blocks) {
    BlockCheck out;
    auto s = alternating_block(rank, default_schedule(blocks), Direction::Unfolding);
    auto b = block_boundaries(default_schedule(blocks));
    bool agree = true;
    auto cone = current_cone(s, s.length());
    for (double h : cone.history) out.min_diameter = std::min(out.min_diameter, h);
    for (size_t k = 1; k < b.size(); ++k) {
        double exact = product_diameter(s, b[k]);
        double got = cone.history[b[k]];
        agree = agree && (std::isinf(exact) ? std::isinf(got) : std::abs(exact - got) <= 1e-9 * (1 + exact));
        out.min_diameter = std::min(out.min_diameter, exact);
    }
    out.diameter_ok = agree && out.min_diameter >= 1;
    auto v = ergodicity_verdict(cone, 1e-8);
    out.verdict = to_string(v);
    out.verdict_ok = v.kind == VerdictKind::Multiple && v.k == 2;
    if (cone.clusters.size() == 2) {
        auto lam = simplicial_length_measure(s);
        auto w = moduli_window(s, lam, default_window(s));
        auto d = transverse_decomposition_unfolding(s, ergodic_current_tracks(s, cone), lam, w);
        out.undecided = static_cast<int>(d.undecided.size());
        bool disjoint = true;
        std::set<int> seen;
        for (size_t i = 1; i < d.parts.size(); ++i)
            for (int e : d.parts[i]) disjoint = disjoint && seen.insert(e).second;
        out.decomposition_ok = d.k == 2 && d.parts.size() == 3 && !d.parts[1].empty() && !d.parts[2].empty() &&
                               disjoint && d.undecided.empty();
    }
    return out;
}

Outcome non_ue_rank3() {
    Checker ck;
    auto r3 = non_ue_candidate(3, 6);
    ck.check(r3.diameter_ok, "rank 3 diameter falls to " + fmt(r3.min_diameter));
    ck.check(r3.verdict_ok, "rank 3 verdict " + r3.verdict);
    ck.check(r3.decomposition_ok, "rank 3 decomposition not two parts (undecided " + std::to_string(r3.undecided) + ")");
    auto r4 = non_ue_candidate(4, 6);
    bool r4_ok = r4.diameter_ok && r4.verdict_ok && r4.decomposition_ok;
    ck.note(std::string("rank 4 disjoint-pair counterpart ") + (r4_ok ? "holds" : "fails") + " (verdict " +
            r4.verdict + ")");
    return ck.outcome();
}

struct CorpusEntry {
    std::string name;
    FoldingSequence seq;
};

std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> c;
    for (auto dir : {Direction::Unfolding, Direction::Folding}) {
        std::string tag = "/" + to_string(dir);
        c.push_back({"fibonacci" + tag, fibonacci_sequence(24, dir)});
        c.push_back({"blocks3" + tag, alternating_block(3, default_schedule(4), dir)});
        c.push_back({"blocks4" + tag, alternating_block(4, default_schedule(4), dir)});
        c.push_back({"identity-theta" + tag, identity_sequence(OrientedGraph::theta(), 6, dir)});
    }
    std::mt19937_64 rng(707);
    for (int i = 0; i < 12; ++i) {
        int rank = 2 + i % 3;
        std::vector<std::vector<Word>> autos;
        for (int k = 0; k < 3; ++k) autos.push_back(random_automorphism(rank, 2, rng, true));
        std::vector<int> sched;
        for (int k = 0; k < 16; ++k) sched.push_back(static_cast<int>(rng() % 3));
        c.push_back({"random" + std::to_string(i), custom_sequence(rank, autos, sched,
                                                                    i % 2 ? Direction::Folding : Direction::Unfolding)});
    }
    return c;
}

Outcome dimension_bounds() {
    Checker ck;
    int forest_windows = 0, not_reduced = 0;
    for (const auto& [name, s] : corpus()) {
        const int n = s.rank();
        auto cc = current_cone(s.with_direction(Direction::Unfolding), s.length());
        auto lc = length_cone(s.with_direction(Direction::Folding), s.length());
        ck.check(cc.dimension <= 3 * n - 3, name + " current cone dimension " + std::to_string(cc.dimension));
        ck.check(lc.dimension <= 3 * n - 3, name + " length cone dimension " + std::to_string(lc.dimension));
        auto us = s.with_direction(Direction::Unfolding);
        // the ergodic count bound needs a reduced sequence
        if (is_reduced_window(us, us.first_index(), us.last_index()).witness_found) {
            ++not_reduced;
            continue;
        }
        int k = ergodicity_verdict(cc, 1e-8).k;
        if (k == 0) k = static_cast<int>(cc.clusters.size());
        auto r = recurrence_check(us, simplicial_length_measure(us), {default_window(us)}, k);
        if (r.kind == RecurrenceKind::Recurrent) {
            ++forest_windows;
            ck.check(k <= n, name + " measured k " + std::to_string(k) + " above rank");
        }
    }
    ck.note(std::to_string(forest_windows) + " forest windows, " + std::to_string(not_reduced) +
            " non-reduced sequences skipped for k");
    return ck.outcome();
}

long factor_count(int k) {
    std::string w = "a";
    while (w.size() < 5000) {
        std::string next;
        for (char c : w) next += c == 'a' ? "ab" : "a";
        w = next;
    }
    std::set<std::string> f;
    for (size_t i = 0; i + k <= w.size(); ++i) f.insert(w.substr(i, k));
    return static_cast<long>(f.size());
}

Outcome complexity() {
    Checker ck;
    auto s = fibonacci_sequence(24, Direction::Unfolding);
    auto c = complexity_profile(s, {20, 22}, 16);
    for (int k = 1; k <= 12; ++k) {
        long oracle = factor_count(k);
        ck.check(oracle == k + 1 && c.counts[k - 1] == oracle,
                 "|B_" + std::to_string(k) + "| = " + std::to_string(c.counts[k - 1]));
    }
    ck.check(c.entropy[15] < 0.2, "entropy at 16 is " + fmt(c.entropy[15]));
    ck.note("entropy(16) " + fmt(c.entropy[15]));
    return ck.outcome();
}

Outcome slow_progress() {
    Checker ck;
    int worst = -1;
    for (auto dir : {Direction::Folding, Direction::Unfolding}) {
        auto seq = fibonacci_sequence(30, dir);
        for (const auto& h : ff_progress_diagnostic(seq)) {
            worst = std::max(worst, h.horizon);
            ck.check(h.horizon <= 4 && !h.truncated, "fibonacci horizon " + std::to_string(h.horizon));
        }
    }
    auto ex = default_schedule(5);
    auto seq = alternating_block(3, ex, Direction::Unfolding);
    auto b = block_boundaries(ex);
    std::vector<int> at;
    for (size_t k = 1; k + 1 < b.size(); ++k) at.push_back(seq.index_of(b[k]));
    auto diag = ff_progress_diagnostic(seq, at);
    std::string horizons;
    int unverified = 0;
    for (size_t k = 0; k < diag.size(); ++k) {
        horizons += (k ? "/" : "") + std::to_string(diag[k].horizon);
        ck.check(diag[k].horizon >= ex[k + 1], "block " + std::to_string(k + 1) + " horizon " +
                                                   std::to_string(diag[k].horizon));
        if (k > 0 && !diag[k - 1].reaches_end)
            ck.check(diag[k].horizon > diag[k - 1].horizon, "horizon does not grow at block " + std::to_string(k + 1));
        auto w = non_filling_witness(seq, diag[k].index, diag[k].horizon);
        ck.check(w.has_value(), "no witness at block " + std::to_string(k + 1));
        try {
            if (w) ck.check(verify_witness(seq, *w), "witness at block " + std::to_string(k + 1) + " not verified");
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Budget) throw;
            ++unverified;
        }
    }
    ck.note("fibonacci max " + std::to_string(worst) + ", block horizons " + horizons);
    if (unverified) ck.note(std::to_string(unverified) + " witnesses too long to expand");
    return ck.outcome();
}

void check_structure(Checker& ck, const std::string& name, const OrientedGraph& g, const TransverseDecomposition& d,
                     const std::vector<int>& pinched) {
    ck.check(structural_violations(g, d, pinched).empty(), name + ": structural violation reported");
    std::vector<int> owner(g.num_edges(), -1);
    for (size_t i = 0; i < d.parts.size(); ++i) {
        if (i >= 1) ck.check(!d.parts[i].empty(), name + ": empty part " + std::to_string(i));
        for (int e : d.parts[i]) {
            ck.check(owner[e] < 0, name + ": edge in two parts");
            owner[e] = static_cast<int>(i);
        }
    }
    std::set<int> pset(pinched.begin(), pinched.end());
    std::vector<int> collapsed;
    for (int e = 0; e < g.num_edges(); ++e)
        if (pset.count(e) && (owner[e] <= 0)) collapsed.push_back(e);
    if (static_cast<int>(collapsed.size()) == g.num_edges()) return;
    auto c = collapse(g, collapsed, owner);
    for (size_t i = 1; i < c.valence.size(); ++i)
        for (int v : c.valence[i])
            ck.check(v == 0 || v >= 2, name + ": valence " + std::to_string(v) + " in part " + std::to_string(i));
}

Outcome structural_sanity() {
    Checker ck;
    int confident = 0;
    auto run_unfolding = [&](const std::string& name, const FoldingSequence& s) {
        auto lam = simplicial_length_measure(s);
        auto cone = current_cone(s, s.length());
        auto w = moduli_window(s, lam, default_window(s));
        auto d = transverse_decomposition_unfolding(s, ergodic_current_tracks(s, cone), lam, w);
        if (d.verdict != DecompositionVerdict::Confident) return;
        ++confident;
        check_structure(ck, name, w.graph, d, w.pinched);
    };
    run_unfolding("fibonacci", fibonacci_sequence(30, Direction::Unfolding));
    run_unfolding("blocks3", alternating_block(3, default_schedule(5), Direction::Unfolding));
    run_unfolding("blocks4", alternating_block(4, default_schedule(4), Direction::Unfolding));
    for (const auto& [name, s] : corpus())
        if (s.direction() == Direction::Unfolding && s.rank() <= 3) run_unfolding(name, s);

    auto f = alternating_block(4, default_schedule(4), Direction::Folding);
    std::vector<int> window;
    for (int n = 21; n <= 83; n += 7) window.push_back(n);
    auto wf = moduli_window(f, simplicial_length_measure(f), window);
    auto df = transverse_decomposition_folding(f, ergodic_length_tracks(f, length_cone(f, f.length())),
                                               frequency_current(f), wf);
    if (df.verdict == DecompositionVerdict::Confident) {
        ++confident;
        check_structure(ck, "blocks4/folding", wf.graph, df, wf.pinched);
    }
    ck.check(confident > 0, "no confident decomposition to examine");
    ck.note(std::to_string(confident) + " confident decompositions");
    return ck.outcome();
}

Outcome walk_regression() {
    Checker ck;
    WalkConfig c;
    c.rank = 2;
    c.seed = 20240601;
    c.steps = 2000;
    c.generators = {{{{1, 2}, {2}}, 1}, {{{1}, {2, 1}}, 1}};
    auto a = run_walk(c), b = run_walk(c);
    ck.check(walk_csv(a) == walk_csv(b), "escape-rate series differs between runs");
    ck.check(dump(walk_json(a)) == dump(walk_json(b)), "walk report differs between runs");
    ck.check(a.ratio_dispersion < 0.05, "trailing dispersion " + fmt(a.ratio_dispersion));
    ck.check(a.rate > 0, "rate not positive");
    ck.note("rate " + fmt(a.rate) + ", dispersion " + fmt(a.ratio_dispersion));
    return ck.outcome();
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "exact algebra: area invariance and adjointness", 60, exact_algebra},
        {2, "lipschitz distance equals brute force", 300, lipschitz_oracle},
        {3, "KL pairing equals translation length", 10, kl_pairing_check},
        {4, "cylinder sandwich and depth monotonicity", 30, sandwich},
        {5, "fibonacci unique ergodicity", 10, fibonacci_unique_ergodicity},
        {6, "rank 3 alternating blocks stay non-uniquely ergodic", 120, non_ue_rank3},
        {7, "cone dimension and ergodic count bounds", 600, dimension_bounds},
        {8, "fibonacci complexity and entropy", 30, complexity},
        {9, "slow progress witness horizons", 120, slow_progress},
        {10, "structural sanity of confident decompositions", 600, structural_sanity},
        {11, "walk reproducibility and dispersion", 600, walk_regression},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            o.pass = false;
            o.detail += ", over time budget";
        }
        if (!o.pass) ++failed;
        std::printf("%s [%2d] %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
