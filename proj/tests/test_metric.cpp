#include "doctest.h"

#include "foldseq/examples.hpp"
#include "foldseq/metric.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <set>

using namespace fsq;

namespace {

Word canon(const Word& w) {
    Word best = w;
    for (const Word& q : {w, inverse_word(w)})
        for (size_t s = 0; s < q.size(); ++s) {
            Word r(q.begin() + s, q.end());
            r.insert(r.end(), q.begin(), q.begin() + s);
            best = std::min(best, r);
        }
    return best;
}

// Cyclic reduced loops of length <= 2|EG| satisfying the three candidate
// conditions: rank of the image <= 2, each edge crossed at most twice, and the
// doubly crossed edges either absent or a segment whose removal leaves two circles.
std::set<Path> candidate_oracle(const OrientedGraph& g) {
    std::set<Path> out;
    const int ne = g.num_edges();
    Path p;
    std::function<void()> rec = [&]() {
        if (!p.empty() && g.term(p.back()) == g.init(p.front()) && p.back() != rev(p.front())) {
            std::vector<int> cross(ne, 0);
            for (DirEdge d : p) ++cross[edge_of(d)];
            bool ok = true;
            std::set<int> verts, single_verts;
            int edges = 0, doubles = 0, singles = 0;
            for (int e = 0; e < ne; ++e) {
                if (cross[e] > 2) ok = false;
                if (cross[e] == 0) continue;
                ++edges;
                verts.insert(g.ends()[e].first);
                verts.insert(g.ends()[e].second);
                if (cross[e] == 2) ++doubles;
                else {
                    ++singles;
                    single_verts.insert(g.ends()[e].first);
                    single_verts.insert(g.ends()[e].second);
                }
            }
            int rank = edges - static_cast<int>(verts.size()) + 1;
            if (ok && rank <= 2) {
                if (doubles > 0) {
                    // singly crossed part: valence 2 everywhere and two components
                    std::vector<int> val(g.num_vertices(), 0), comp(g.num_vertices());
                    for (int v = 0; v < g.num_vertices(); ++v) comp[v] = v;
                    std::function<int(int)> root = [&](int x) { return comp[x] == x ? x : comp[x] = root(comp[x]); };
                    for (int e = 0; e < ne; ++e)
                        if (cross[e] == 1) {
                            ++val[g.ends()[e].first], ++val[g.ends()[e].second];
                            comp[root(g.ends()[e].first)] = root(g.ends()[e].second);
                        }
                    std::set<int> roots;
                    for (int v : single_verts) {
                        ok = ok && val[v] == 2;
                        roots.insert(root(v));
                    }
                    ok = ok && roots.size() == 2 && singles > 0;
                }
                if (ok) out.insert(canonical_cyclic(p));
            }
        }
        if (static_cast<int>(p.size()) == 2 * ne) return;
        int v = p.empty() ? -1 : g.term(p.back());
        for (DirEdge d = 0; d < g.num_dir_edges(); ++d) {
            if (p.empty() ? false : (g.init(d) != v || d == rev(p.back()))) continue;
            p.push_back(d);
            rec();
            p.pop_back();
        }
    };
    rec();
    return out;
}

std::set<Path> candidate_set(const MarkedGraph& t) {
    std::set<Path> s;
    for (const auto& c : candidates(t)) s.insert(c.loop);
    return s;
}

}  // namespace

TEST_CASE("candidates on the rose and theta") {
    auto r2 = MarkedGraph::rose({1, 1});
    std::set<Word> words;
    for (const auto& c : candidates(r2)) words.insert(canon(r2.path_to_word(c.loop)));
    CHECK(words == std::set<Word>{canon({1}), canon({2}), canon({1, 2}), canon({1, -2})});

    auto th = MarkedGraph(OrientedGraph::theta(), {1, 1, 1}, MarkedGraph::default_marking(OrientedGraph::theta()));
    auto cs = candidates(th);
    CHECK(cs.size() == 3);
    for (const auto& c : cs) CHECK(c.shape == CandidateShape::EmbeddedCircle);
}

TEST_CASE("candidates agree with the defining conditions") {
    for (int rank : {2, 3})
        for (const auto& g : small_graphs(rank)) {
            MarkedGraph t(g, QVec(g.num_edges(), Rational(1)), MarkedGraph::default_marking(g));
            CHECK(candidate_set(t) == candidate_oracle(g));
        }
    auto barbell = OrientedGraph::make(2, {{0, 0}, {0, 1}, {1, 1}});
    MarkedGraph t(barbell, {1, 1, 1}, MarkedGraph::default_marking(barbell));
    int bars = 0;
    for (const auto& c : candidates(t)) bars += c.shape == CandidateShape::Barbell;
    CHECK(bars == 2);
}

TEST_CASE("lipschitz distance on the rose") {
    auto t = MarkedGraph::rose({Rational(1) / 2, Rational(1) / 2});
    auto u = MarkedGraph::rose({Rational(1) / 3, Rational(2) / 3});
    auto d = lipschitz_distance(t, u);
    CHECK(d.ratio == Rational(4) / 3);
    CHECK(d.value == doctest::Approx(std::log(4.0 / 3.0)));
    CHECK(lipschitz_bruteforce(t, u, 4).ratio == Rational(4) / 3);
    CHECK(lipschitz_distance(t, t).ratio == 1);
    CHECK(lipschitz_distance(t, t).value == 0.0);
    auto u2 = u.with_lengths({Rational(2) / 3, Rational(4) / 3});
    CHECK(lipschitz_distance(t, u2).ratio == Rational(8) / 3);
    CHECK(lipschitz_distance(t, u2).value == doctest::Approx(std::log(4.0 / 3.0) + std::log(2.0)));
    CHECK_THROWS_AS(lipschitz_distance(t, MarkedGraph::rose({1, 1, 1})), Error);
}

TEST_CASE("candidates match brute force on random pairs") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 40; ++i) {
        int rank = 2 + i % 2;
        auto t = random_marked_graph(rank, rng);
        auto u = random_marked_graph(rank, rng);
        auto twist = random_automorphism(rank, 3, rng);
        auto fast = lipschitz_distance(t, u, twist);
        auto slow = lipschitz_bruteforce(t, u, bruteforce_length(t), twist);
        CHECK(fast.ratio == slow.ratio);
    }
}

TEST_CASE("directed triangle inequality") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 20; ++i) {
        int rank = 2 + i % 2;
        auto a = random_marked_graph(rank, rng), b = random_marked_graph(rank, rng), c = random_marked_graph(rank, rng);
        CHECK(lipschitz_distance(a, c).ratio <= lipschitz_distance(a, b).ratio * lipschitz_distance(b, c).ratio);
    }
}

TEST_CASE("KL pairing") {
    auto r = MarkedGraph::rose({1, 2});
    auto mu = current_of_word(r, {1, 2});
    CHECK(mu == QVec{1, 1});
    CHECK(kl_pairing(r, mu) == 3);
    CHECK(kl_pairing(r, {0, 0}) == 0);
    CHECK_THROWS_AS(kl_pairing(r, {1, 1, 1}), Error);

    auto g = OrientedGraph::theta();
    MarkedGraph th(g, {Rational(1) / 3, Rational(1) / 2, 2}, MarkedGraph::default_marking(g));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        Word w;
        int len = 1 + static_cast<int>(rng() % 9);
        for (int k = 0; k < len; ++k) w.push_back((rng() % 2 ? 1 : -1) * static_cast<int>(1 + rng() % 2));
        Path loop;
        for (int x : w) {
            Path l = th.letter_loop(x > 0 ? x : -x);
            if (x < 0) l = reverse_path(l);
            loop.insert(loop.end(), l.begin(), l.end());
        }
        Rational sum = 0;
        for (DirEdge d : cyclic_tighten(g, loop)) sum += th.lengths()[edge_of(d)];
        CHECK(kl_pairing(th, current_of_word(th, w)) == sum);
    }
}

TEST_CASE("thickness") {
    CHECK(thickness(MarkedGraph::rose({Rational(1) / 2, Rational(1) / 2}), Rational(1) / 10).injectivity_radius ==
          Rational(1) / 2);
    auto g = OrientedGraph::theta();
    Rational third = Rational(1) / 3;
    auto th = thickness(MarkedGraph(g, {third, third, third}, MarkedGraph::default_marking(g)), Rational(1) / 10);
    CHECK(th.injectivity_radius == Rational(2) / 3);
    CHECK(th.thick);
    CHECK_FALSE(thickness(MarkedGraph::rose({Rational(1) / 100, 1}), Rational(1) / 10).thick);

    std::mt19937_64 rng(17);
    std::vector<std::pair<double, double>> fb;
    for (int i = 0; i < 30; ++i) {
        auto t = random_marked_graph(2, rng), u = random_marked_graph(2, rng);
        if (!thickness(t, Rational(1) / 10).thick || !thickness(u, Rational(1) / 10).thick) continue;
        auto tn = t.with_lengths(normalized_l1(t.lengths()));
        auto un = u.with_lengths(normalized_l1(u.lengths()));
        fb.push_back({lipschitz_distance(tn, un).value, lipschitz_distance(un, tn).value});
    }
    auto fit = fit_thick_constants(fb);
    REQUIRE(fit.samples > 5);
    for (auto [f, b] : fb) CHECK(b <= fit.B + fit.C * f + 1e-12);
}

TEST_CASE("factor projection") {
    CHECK(factor_projection(MarkedGraph::rose({1, 1, 1})).size() == 6);
    auto g = OrientedGraph::theta();
    auto th = factor_projection(MarkedGraph(g, {1, 1, 1}, MarkedGraph::default_marking(g)));
    CHECK(th.size() == 3);
    for (const auto& f : th) CHECK(f.rank == 1);
    auto bar = OrientedGraph::make(2, {{0, 0}, {0, 1}, {1, 1}});
    CHECK(factor_projection(MarkedGraph(bar, {1, 1, 1}, MarkedGraph::default_marking(bar))).size() == 2);

    CHECK(subgroup_core_form({{1}}) == subgroup_core_form({{2, 1, -2}}));
    CHECK(subgroup_core_form({{1, 2}, {2}}) == subgroup_core_form({{1}, {2}}));
    CHECK(subgroup_core_form({{1}, {2}}) == subgroup_core_form({{3, 1, -3}, {3, 2, -3}}));
    CHECK(subgroup_core_form({{1}}) != subgroup_core_form({{1, 1}}));
    CHECK(subgroup_core_form({{1}, {2}}) != subgroup_core_form({{1}, {2, 1, -2}}));
}
