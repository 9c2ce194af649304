#include "doctest.h"

#include "foldseq/examples.hpp"
#include "foldseq/measures.hpp"

#include <cmath>
#include <map>
#include <random>
#include <string>

using namespace fsq;

namespace {

// Plain string substitution, independent of the graph machinery.
std::string substitute(const std::string& w, const std::map<char, std::string>& rule, int times) {
    std::string cur = w;
    for (int i = 0; i < times; ++i) {
        std::string next;
        for (char c : cur) next += rule.at(c);
        cur = next;
    }
    return cur;
}

std::vector<Word> random_positive_automorphism(int rank, int moves, std::mt19937_64& rng) {
    std::vector<Word> w(rank);
    for (int i = 0; i < rank; ++i) w[i] = {i + 1};
    for (int m = 0; m < moves; ++m) {
        int i = static_cast<int>(rng() % rank), j = static_cast<int>(rng() % (rank - 1));
        if (j >= i) ++j;
        std::vector<Word> el(rank);
        for (int k = 0; k < rank; ++k) el[k] = {k + 1};
        el[i] = {i + 1, j + 1};
        for (auto& x : w) x = apply_automorphism(el, x);
    }
    return w;
}

FoldingSequence random_sequence(int rank, int length, std::mt19937_64& rng, Direction dir) {
    std::vector<std::vector<Word>> autos;
    for (int i = 0; i < 3; ++i) autos.push_back(random_positive_automorphism(rank, 2, rng));
    std::vector<int> sched;
    for (int i = 0; i < length; ++i) sched.push_back(static_cast<int>(rng() % 3));
    return custom_sequence(rank, autos, sched, dir);
}

const double phi = (1 + std::sqrt(5.0)) / 2;

long fib(int n) {
    long a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        long t = a + b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

TEST_CASE("simplicial length measure") {
    auto id = identity_sequence(OrientedGraph::rose(2), 4, Direction::Unfolding);
    auto li = simplicial_length_measure(id);
    for (int p = 0; p <= 4; ++p) CHECK(li.at(p) == QVec{1, 1});

    auto fib3 = fibonacci_sequence(3, Direction::Unfolding);
    auto l = simplicial_length_measure(fib3);
    std::map<char, std::string> rule{{'a', "ab"}, {'b', "a"}};
    CHECK(l.at(fib3.pos(-3)) == QVec{5, 3});
    CHECK(substitute("a", rule, 3).size() == 5);
    CHECK(substitute("b", rule, 3).size() == 3);

    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        auto s = random_sequence(3, 5, rng, Direction::Unfolding);
        auto lam = simplicial_length_measure(s);
        for (int p = 0; p <= s.length(); ++p)
            for (int e = 0; e < 3; ++e)
                CHECK(lam.at(p)[e] == static_cast<long>(s.image(p, s.length(), forward(e)).size()));
    }
}

TEST_CASE("frequency current") {
    auto id = identity_sequence(OrientedGraph::rose(2), 3, Direction::Folding);
    auto mi = frequency_current(id);
    for (int p = 0; p <= 3; ++p) CHECK(mi.at(p) == QVec{1, 1});
    auto f = fibonacci_sequence(4, Direction::Folding);
    CHECK(frequency_current(f).at(4) == QVec{8, 5});
    CHECK(track_valid(f, frequency_current(f)));
}

TEST_CASE("area") {
    auto id = identity_sequence(OrientedGraph::rose(2), 3, Direction::Folding);
    CHECK(area(id, simplicial_length_measure(id), frequency_current(id)) == 2);

    auto f = fibonacci_sequence(3, Direction::Folding);
    auto lam = simplicial_length_measure(f);
    auto mu = frequency_current(f);
    CHECK(lam.at(0) == QVec{5, 3});
    CHECK(area(f, lam, mu) == 8);
    CHECK(dot(mu.at(3), lam.at(3)) == 8);
    CHECK(area(f, lam, current_track_from(f, 0, {0, 0})) == 0);

    MeasureTrack broken = mu;
    broken.v[2][0] += 1;
    CHECK_THROWS_AS(area(f, lam, broken), Error);

    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        int rank = 2 + static_cast<int>(rng() % 3);
        auto s = random_sequence(rank, 1 + static_cast<int>(rng() % 12), rng, Direction::Folding);
        QVec la(rank), m0(rank);
        for (int i = 0; i < rank; ++i) la[i] = Rational(1 + static_cast<long>(rng() % 9)) / (1 + static_cast<long>(rng() % 4));
        for (int i = 0; i < rank; ++i) m0[i] = static_cast<long>(rng() % 5);
        auto L = length_track_from(s, s.length(), la);
        auto M = current_track_from(s, 0, m0);
        Rational a0 = dot(M.at(0), L.at(0));
        for (int p = 0; p <= s.length(); ++p) CHECK(dot(M.at(p), L.at(p)) == a0);
        CHECK(area(s, L, M) == a0);
    }
}

TEST_CASE("hilbert distance") {
    auto h = hilbert_distance({1, 2}, {2, 1});
    CHECK_FALSE(h.infinite);
    CHECK(h.cross_ratio == 4);
    CHECK(h.value == doctest::Approx(std::log(4.0)));
    CHECK(hilbert_distance({1, 0}, {0, 1}).infinite);
    CHECK(hilbert_distance({3, 6}, {1, 2}).value == 0.0);
    CHECK(hilbert_distance({1, 0, 2}, {2, 0, 1}).cross_ratio == 4);
}

TEST_CASE("current cone of the Fibonacci sequence") {
    auto s = fibonacci_sequence(40, Direction::Unfolding);
    auto c0 = current_cone(s, 0);
    CHECK(c0.diameter.infinite);
    CHECK(ergodicity_verdict(c0, 1e-8).kind == VerdictKind::Undecided);

    auto c = current_cone(s, 20, 1e-6);
    // columns (F21,F20), (F20,F19): cross ratio F21 F19 / F20^2 = 1 + 1/F20^2
    double expected = std::log1p(1.0 / (double(fib(20)) * fib(20)));
    CHECK(c.diameter.value == doctest::Approx(expected).epsilon(1e-6));
    CHECK(c.diameter.value < 1e-6);
    CHECK(c.dimension == 1);
    CHECK(to_double(c.generators[0][0] / c.generators[0][1]) == doctest::Approx(phi).epsilon(1e-8));
    CHECK(ergodicity_verdict(c, 1e-6).kind == VerdictKind::Unique);
    CHECK(ergodicity_verdict(current_cone(s, 40), 1e-8).kind == VerdictKind::Unique);

    for (size_t i = 2; i < c.history.size(); ++i) CHECK(c.history[i] <= c.history[i - 1]);
}

TEST_CASE("length cone of the Fibonacci sequence") {
    auto s = fibonacci_sequence(20, Direction::Folding);
    auto c = length_cone(s, 20, 1e-6);
    CHECK(c.dimension == 1);
    CHECK(ergodicity_verdict(c, 1e-6).kind == VerdictKind::Unique);
    CHECK(length_cone(s, 0).diameter.infinite);
}

TEST_CASE("cone nesting on random sequences") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 5; ++t) {
        auto s = random_sequence(3, 8, rng, Direction::Unfolding);
        auto c = current_cone(s, 8);
        for (size_t i = 2; i < c.history.size(); ++i) CHECK(c.history[i] <= c.history[i - 1] + 1e-12);
        CHECK(c.dimension <= 3 * s.rank() - 3);
        CHECK(c.dimension <= c.ambient);
        // deeper columns are nonnegative combinations of the shallower ones
        auto shallow = current_cone(s, 4);
        for (const auto& g : c.generators) {
            QVec coeffs;
            REQUIRE(solve_combination(shallow.generators, g, coeffs));
            CHECK(all_nonnegative(coeffs));
        }
    }
}

TEST_CASE("verdict is invariant under rescaling a generator") {
    std::vector<QVec> g{{1, 2, 3}, {3, 2, 1}, {1, 1, 1}};
    auto a = analyze_generators(g, 1e-8, 2);
    g[0] = {5, 10, 15};
    auto b = analyze_generators(g, 1e-8, 2);
    CHECK(a.dimension == b.dimension);
    CHECK(a.extreme == b.extreme);
    CHECK(a.diameter.cross_ratio == b.diameter.cross_ratio);
}

TEST_CASE("disjoint alternating blocks give two ergodic directions") {
    auto s = alternating_block(4, default_schedule(4), Direction::Unfolding);
    auto c = current_cone(s, s.length());
    auto v = ergodicity_verdict(c, 1e-8);
    CHECK(v.kind == VerdictKind::Multiple);
    CHECK(v.k == 2);
    CHECK(c.dimension <= 3 * 4 - 3);
}

TEST_CASE("decay check") {
    auto s = fibonacci_sequence(8, Direction::Unfolding);
    auto r = decay_check(s, simplicial_length_measure(s), current_track_from(s, 0, {1, 1}));
    CHECK(r.lengths_decay);
    CHECK(r.currents_grow);
    CHECK(r.reduced_consistent);
    std::vector<long> maxima;
    for (const auto& x : r.lambda_max) maxima.push_back(x.get_num().get_si());
    CHECK(maxima == std::vector<long>{55, 34, 21, 13, 8, 5, 3, 2, 1});

    auto id = identity_sequence(OrientedGraph::rose(2), 5, Direction::Unfolding);
    auto ri = decay_check(id, simplicial_length_measure(id), current_track_from(id, 0, {1, 1}));
    CHECK_FALSE(ri.reduced_consistent);

    auto fo = fibonacci_sequence(8, Direction::Folding);
    auto rf = decay_check(fo, simplicial_length_measure(fo), frequency_current(fo));
    for (size_t i = 1; i < rf.mu_min.size(); ++i) CHECK(rf.mu_min[i] >= rf.mu_min[i - 1]);
    CHECK(rf.mu_min.back() > rf.mu_min.front());
}

TEST_CASE("reduced windows") {
    auto fixed = custom_sequence(3, {{{1, 2}, {1}, {3}}}, std::vector<int>(6, 0), Direction::Folding);
    auto w = is_reduced_window(fixed, 0, 6);
    REQUIRE(w.witness_found);
    for (const auto& set : w.chain) CHECK(set == std::vector<int>{2});

    auto f = fibonacci_sequence(10, Direction::Folding);
    for (int a = 0; a + 2 <= 10; ++a)
        for (int b = a + 2; b <= 10; ++b) CHECK_FALSE(is_reduced_window(f, a, b).witness_found);

    auto blocks = alternating_block(3, {4, 16, 64}, Direction::Folding);
    auto bounds = block_boundaries({4, 16, 64});
    // a letter outside the active group is fixed for a whole block, so windows cover one block and a step on each side
    CHECK(is_reduced_window(blocks, bounds[1] - 1, bounds[1] + 2).witness_found);
    CHECK_FALSE(is_reduced_window(blocks, bounds[1] - 1, bounds[2] + 1).witness_found);
}
