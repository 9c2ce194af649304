#include "foldseq/walk.hpp"

#include "foldseq/metric.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace fsq {

namespace {

IntMatrix abelianization(int rank, const std::vector<Word>& images) {
    IntMatrix m(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int x : images[i]) m.at(std::abs(x) - 1, i) += x > 0 ? 1 : -1;
    return m;
}

double log_max_abs_column(const IntMatrix& m) {
    BigInt best = 0;
    for (int c = 0; c < m.cols(); ++c) {
        BigInt s = 0;
        for (int r = 0; r < m.rows(); ++r) s += abs(m.at(r, c));
        if (s > best) best = s;
    }
    return log_bigint(best);
}

std::vector<Word> compose_words(const std::vector<Word>& outer, const std::vector<Word>& inner) {
    std::vector<Word> out;
    for (const Word& w : inner) out.push_back(apply_automorphism(outer, w));
    return out;
}

double slope(const std::vector<double>& x, const std::vector<double>& y, double* intercept = nullptr) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my), sxx += (x[i] - mx) * (x[i] - mx);
    double b = sxx > 0 ? sxy / sxx : 0;
    if (intercept) *intercept = my - b * mx;
    return b;
}

}  // namespace

std::vector<WalkGenerator> canonical_support(int rank, const std::vector<WalkGenerator>& gens) {
    if (gens.empty()) fail(ErrorKind::Argument, "walk needs at least one generator");
    std::map<std::vector<Word>, long> merged;
    for (const auto& g : gens) {
        if (g.weight <= 0) fail(ErrorKind::Argument, "generator weights must be positive");
        if (static_cast<int>(g.images.size()) != rank) fail(ErrorKind::Argument, "generator rank mismatch");
        std::vector<Word> im;
        for (const Word& w : g.images) im.push_back(free_reduce(w));
        auto v = validate_change_of_marking(GraphMorphism::rose_map(rank, im));
        if (!v.ok) fail(ErrorKind::Validation, "walk generator is not an automorphism: " + v.diagnostic);
        merged[im] += g.weight;
    }
    std::vector<WalkGenerator> out;
    for (const auto& [im, w] : merged) out.push_back({im, w});
    return out;
}

WalkRecord run_walk(const WalkConfig& config) {
    if (config.steps < 2) fail(ErrorKind::Argument, "walk needs at least two steps");
    const int n = config.rank;
    WalkRecord rec;
    rec.config = config;
    rec.config.generators = canonical_support(n, config.generators);
    const auto& gens = rec.config.generators;

    std::vector<std::vector<Word>> inv;
    std::vector<IntMatrix> ab, ab_inv;
    long total = 0;
    for (const auto& g : gens) {
        inv.push_back(inverse_automorphism(GraphMorphism::rose_map(n, g.images)));
        ab.push_back(abelianization(n, g.images));
        ab_inv.push_back(abelianization(n, inv.back()));
        total += g.weight;
    }

    const MarkedGraph base = MarkedGraph::rose(QVec(n, Rational(1)));
    std::vector<Word> w(n), winv(n);
    for (int i = 0; i < n; ++i) w[i] = winv[i] = {i + 1};
    IntMatrix aw = IntMatrix::identity(n), awinv = IntMatrix::identity(n);
    bool exact = true;
    std::mt19937_64 rng(config.seed);

    for (int step = 1; step <= config.steps; ++step) {
        long r = static_cast<long>(rng() % static_cast<std::uint64_t>(total));
        int k = 0;
        while (r >= gens[k].weight) r -= gens[k++].weight;
        aw = aw * ab[k];
        awinv = ab_inv[k] * awinv;
        if (exact) {
            w = compose_words(w, gens[k].images);
            for (auto& x : winv) x = apply_automorphism(inv[k], x);
            for (int i = 0; i < n; ++i)
                if (w[i].size() > config.exact_budget || winv[i].size() > config.exact_budget) exact = false;
            if (!exact) rec.proxy_from = step;
        }
        WalkStep s;
        s.n = step;
        s.generator = k;
        s.proxy = !exact;
        std::vector<double> len(n);
        if (exact) {
            s.displacement = lipschitz_distance(base, base, w).value + lipschitz_distance(base, base, winv).value;
            for (int i = 0; i < n; ++i) len[i] = to_double(translation_length(base, w[i]));
        } else {
            s.displacement = log_max_abs_column(aw) + log_max_abs_column(awinv);
            // Columns scaled by the largest column sum before converting to doubles.
            std::vector<BigInt> cs(n, 0);
            BigInt top = 1;
            for (int c = 0; c < n; ++c) {
                for (int row = 0; row < n; ++row) cs[c] += abs(aw.at(row, c));
                if (cs[c] > top) top = cs[c];
            }
            for (int c = 0; c < n; ++c) len[c] = to_double(Rational(cs[c]) / top);
        }
        double sum = 0;
        for (double x : len) sum += x;
        for (double& x : len) x /= sum;
        s.lengths = len;
        rec.steps.push_back(s);
    }

    const int half = config.steps / 2;
    std::vector<double> xs, ys;
    for (int i = half; i < config.steps; ++i) {
        xs.push_back(rec.steps[i].n);
        ys.push_back(rec.steps[i].displacement);
    }
    rec.rate = slope(xs, ys, &rec.intercept);
    const size_t q = xs.size() / 4;
    if (q >= 2 && rec.rate != 0) {
        for (int part = 0; part < 4; ++part) {
            std::vector<double> px(xs.begin() + part * q, xs.begin() + (part + 1) * q);
            std::vector<double> py(ys.begin() + part * q, ys.begin() + (part + 1) * q);
            rec.slope_dispersion = std::max(rec.slope_dispersion, std::abs(slope(px, py) - rec.rate) / std::abs(rec.rate));
        }
    }
    double lo = 1e300, hi = -1e300, mean = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double v = ys[i] / xs[i];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        mean += v;
    }
    mean /= static_cast<double>(xs.size());
    rec.ratio_dispersion = mean != 0 ? (hi - lo) / std::abs(mean) : 0;
    return rec;
}

}  // namespace fsq
