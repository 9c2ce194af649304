#include "doctest.h"

#include "foldseq/walk.hpp"

#include <cmath>

using namespace fsq;

namespace {

WalkConfig two_generator(std::uint64_t seed, int steps) {
    WalkConfig c;
    c.rank = 2;
    c.seed = seed;
    c.steps = steps;
    c.generators = {{{{1, 2}, {2}}, 1}, {{{1}, {2, 1}}, 1}};
    return c;
}

bool same(const WalkRecord& a, const WalkRecord& b) {
    if (a.steps.size() != b.steps.size()) return false;
    for (size_t i = 0; i < a.steps.size(); ++i)
        if (a.steps[i].generator != b.steps[i].generator || a.steps[i].displacement != b.steps[i].displacement ||
            a.steps[i].lengths != b.steps[i].lengths)
            return false;
    return a.rate == b.rate;
}

}  // namespace

TEST_CASE("walk is reproducible and order independent") {
    auto a = run_walk(two_generator(42, 400));
    auto b = run_walk(two_generator(42, 400));
    CHECK(same(a, b));
    auto c = two_generator(42, 400);
    std::swap(c.generators[0], c.generators[1]);
    CHECK(same(a, run_walk(c)));
    CHECK_FALSE(same(a, run_walk(two_generator(43, 400))));
}

TEST_CASE("single generator walk moves at the per-step distance") {
    WalkConfig c;
    c.rank = 2;
    c.seed = 1;
    c.steps = 60;
    c.generators = {{{{1, 2}, {1}}, 1}};
    auto r = run_walk(c);
    double last = r.steps.back().displacement - r.steps[r.steps.size() - 2].displacement;
    CHECK(r.rate == doctest::Approx(last).epsilon(1e-3));
    CHECK(r.rate == doctest::Approx(2 * std::log((1 + std::sqrt(5.0)) / 2)).epsilon(1e-3));
}

TEST_CASE("exact and proxy displacements agree while both are available") {
    WalkConfig c = two_generator(7, 16);
    auto exact = run_walk(c);
    REQUIRE(exact.proxy_from == -1);
    c.exact_budget = 0;
    auto proxy = run_walk(c);
    CHECK(proxy.proxy_from == 1);
    for (size_t i = 0; i < exact.steps.size(); ++i) {
        // positive generators: the forward term is exact in the proxy
        CHECK(proxy.steps[i].displacement <= exact.steps[i].displacement + 1e-9);
        CHECK(proxy.steps[i].displacement >= exact.steps[i].displacement / 2 - 1e-9);
    }
}

TEST_CASE("two generator walk regression") {
    auto r = run_walk(two_generator(20240601, 2000));
    MESSAGE("rate ", r.rate, " slope dispersion ", r.slope_dispersion, " ratio dispersion ", r.ratio_dispersion,
            " proxy from ", r.proxy_from);
    CHECK(r.rate > 0);
    CHECK(r.ratio_dispersion < 0.05);
}

TEST_CASE("invalid generators are rejected") {
    WalkConfig c = two_generator(1, 10);
    c.generators.push_back({{{1, 1}, {2}}, 1});
    CHECK_THROWS_AS(run_walk(c), Error);
}
