#include "foldseq/report.hpp"

#include <cmath>
#include <cstdio>

namespace fsq {

Json rational_json(const Rational& q) { return to_string(q); }

Json qvec_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

QVec qvec_from_json(const Json& j) {
    QVec v;
    for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

Json float_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

namespace {

Json hilbert_json(const HilbertDistance& h) {
    return Json{{"infinite", h.infinite},
                {"cross_ratio", h.infinite ? Json(nullptr) : rational_json(h.cross_ratio)},
                {"value", float_json(h.value)}};
}

std::string path_json(const Path& p) { return path_to_string(p); }

}  // namespace

Json cone_json(const ConeApprox& c) {
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(qvec_json(g));
    Json pairs = Json::array();
    for (auto [a, b] : c.diameter_pair) pairs.push_back({a, b});
    Json hist = Json::array();
    for (double h : c.history) hist.push_back(float_json(h));
    return Json{{"ambient", c.ambient},
                {"depth", c.depth},
                {"rank", c.rank},
                {"tol", c.tol},
                {"diameter", hilbert_json(c.diameter)},
                {"diameter_pair", pairs},
                {"dimension", c.dimension},
                {"dimension_capped", c.dimension_capped},
                {"extreme", c.extreme},
                {"clusters", c.clusters},
                {"rays", gens},
                {"history", hist}};
}

ConeApprox cone_from_json(const Json& j) {
    ConeApprox c;
    c.ambient = j.at("ambient").get<int>();
    c.depth = j.at("depth").get<int>();
    c.rank = j.at("rank").get<int>();
    c.tol = j.at("tol").get<double>();
    const Json& d = j.at("diameter");
    c.diameter.infinite = d.at("infinite").get<bool>();
    if (!c.diameter.infinite) {
        c.diameter.cross_ratio = parse_rational(d.at("cross_ratio").get<std::string>());
        c.diameter.value = d.at("value").get<double>();
    } else {
        c.diameter.value = INFINITY;
    }
    for (const auto& p : j.at("diameter_pair")) c.diameter_pair.emplace_back(p[0].get<int>(), p[1].get<int>());
    c.dimension = j.at("dimension").get<int>();
    c.dimension_capped = j.at("dimension_capped").get<bool>();
    c.extreme = j.at("extreme").get<std::vector<int>>();
    c.clusters = j.at("clusters").get<std::vector<std::vector<int>>>();
    for (const auto& g : j.at("rays")) c.generators.push_back(qvec_from_json(g));
    for (const auto& h : j.at("history")) c.history.push_back(h.is_null() ? INFINITY : h.get<double>());
    return c;
}

Json verdict_json(const ErgodicityVerdict& v) {
    return Json{{"verdict", to_string(v)}, {"k", v.k}, {"reason", v.reason}};
}

Json language_json(const LanguageApprox& l) {
    Json words = Json::array();
    for (const auto& w : l.words) words.push_back(path_json(w));
    return Json{{"depth", l.depth},
                {"length", l.length},
                {"short_images", l.short_images},
                {"unoriented_count", l.unoriented_count()},
                {"words", words}};
}

Json complexity_json(const ComplexityProfile& p) {
    Json ent = Json::array();
    for (double e : p.entropy) ent.push_back(float_json(e));
    return Json{{"depth", p.depth},
                {"counts", p.counts},
                {"entropy", ent},
                {"entropy_at_max", float_json(p.entropy_at_max)},
                {"subexponential", p.subexponential}};
}

Json components_json(const ComponentReport& r) {
    return Json{{"count", r.count}, {"bound", r.bound}, {"component_sizes", r.component_sizes}};
}

Json decomposition_json(const TransverseDecomposition& d) {
    Json stats = Json::array();
    for (const auto& comp : d.stats) {
        Json series = Json::array();
        for (const auto& v : comp) series.push_back(qvec_json(v));
        stats.push_back(series);
    }
    Json ratios = Json::array();
    for (const auto& row : d.ratio_trace) {
        Json r = Json::array();
        for (double x : row) r.push_back(std::isnan(x) ? Json(nullptr) : float_json(x));
        ratios.push_back(r);
    }
    Json th = Json::array();
    for (const auto& t : d.thresholds) th.push_back(rational_json(t));
    return Json{{"k", d.k},
                {"indices", d.indices},
                {"label", d.label},
                {"parts", d.parts},
                {"undecided", d.undecided},
                {"thresholds", th},
                {"verdict", to_string(d.verdict)},
                {"issues", d.issues},
                {"stats", stats},
                {"ratio_trace", ratios}};
}

std::vector<std::string> decomposition_schema_errors(const Json& j) {
    std::vector<std::string> err;
    auto need = [&](const char* key, bool ok) {
        if (!j.contains(key)) err.push_back(std::string("missing ") + key);
        else if (!ok) err.push_back(std::string("wrong type for ") + key);
    };
    if (!j.is_object()) return {"report is not an object"};
    need("k", j.contains("k") && j["k"].is_number_integer());
    for (const char* key : {"indices", "label", "undecided"}) {
        bool ok = j.contains(key) && j[key].is_array();
        if (ok)
            for (const auto& x : j[key]) ok = ok && x.is_number_integer();
        need(key, ok);
    }
    need("parts", j.contains("parts") && j["parts"].is_array());
    need("thresholds", j.contains("thresholds") && j["thresholds"].is_array());
    need("verdict", j.contains("verdict") && j["verdict"].is_string());
    need("issues", j.contains("issues") && j["issues"].is_array());
    need("stats", j.contains("stats") && j["stats"].is_array());
    need("ratio_trace", j.contains("ratio_trace") && j["ratio_trace"].is_array());
    if (err.empty()) {
        const int k = j["k"].get<int>();
        if (static_cast<int>(j["parts"].size()) != k + 1) err.push_back("parts must hold k + 1 edge lists");
        for (const auto& l : j["label"])
            if (l.get<int>() < -1 || l.get<int>() > k) err.push_back("label out of range");
        for (const auto& s : j["stats"])
            if (s.size() != j["indices"].size()) err.push_back("stats series length differs from indices");
        const std::string v = j["verdict"].get<std::string>();
        if (v != "confident" && v != "undecided" && v != "inconsistent") err.push_back("unknown verdict " + v);
    }
    return err;
}

Json recurrence_json(const RecurrenceReport& r) {
    return Json{{"kind", r.kind == RecurrenceKind::Recurrent ? "recurrent" : "pinching"},
                {"window", r.window},
                {"bound", r.bound},
                {"measured_k", r.measured_k},
                {"consistent", r.consistent},
                {"pinched", r.pinched}};
}

Json distance_json(const LipschitzDistance& d) {
    return Json{{"ratio", rational_json(d.ratio)}, {"log", float_json(d.value)}, {"witness", word_to_string(d.witness)}};
}

Json candidates_json(const MarkedGraph& t, const std::vector<CandidateLoop>& cs) {
    Json a = Json::array();
    for (const auto& c : cs)
        a.push_back(Json{{"shape", to_string(c.shape)},
                         {"loop", path_json(c.loop)},
                         {"word", word_to_string(cyclic_reduce(t.path_to_word(c.loop)))},
                         {"length", rational_json(t.length(c.loop))}});
    return a;
}

Json factors_json(const std::vector<FreeFactor>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) {
        Json basis = Json::array();
        for (const auto& w : f.basis) basis.push_back(word_to_string(w));
        Json edges = Json::array();
        for (int e : f.edges) edges.push_back(e + 1);
        a.push_back(Json{{"rank", f.rank}, {"edges", edges}, {"basis", basis}, {"canonical", f.canonical}});
    }
    return a;
}

Json progress_json(const std::vector<HorizonPoint>& pts) {
    Json a = Json::array();
    for (const auto& p : pts)
        a.push_back(Json{{"index", p.index},
                         {"horizon", p.horizon},
                         {"reaches_end", p.reaches_end},
                         {"truncated", p.truncated},
                         {"circle", path_json(p.circle)}});
    return a;
}

Json speed_json(const SpeedReport& r) {
    Json s = Json::array();
    for (const auto& x : r.samples)
        s.push_back(Json{{"from", x.from}, {"to", x.to}, {"ratio", rational_json(x.ratio)}, {"distance", float_json(x.distance)}});
    return Json{{"max_entry", r.max_entry},
                {"growing_entries", r.growing_entries},
                {"speed", float_json(r.speed)},
                {"C", float_json(r.C)},
                {"bound_holds", r.bound_holds},
                {"samples", s}};
}

Json walk_json(const WalkRecord& r) {
    Json gens = Json::array();
    for (const auto& g : r.config.generators) {
        Json im = Json::array();
        for (const auto& w : g.images) im.push_back(word_to_string(w));
        gens.push_back(Json{{"images", im}, {"weight", g.weight}});
    }
    Json series = Json::array();
    for (const auto& s : r.steps) series.push_back(float_json(s.displacement));
    return Json{{"rank", r.config.rank},
                {"seed", r.config.seed},
                {"steps", r.config.steps},
                {"generators", gens},
                {"proxy_from", r.proxy_from},
                {"rate", float_json(r.rate)},
                {"intercept", float_json(r.intercept)},
                {"slope_dispersion", float_json(r.slope_dispersion)},
                {"ratio_dispersion", float_json(r.ratio_dispersion)},
                {"displacement", series}};
}

Json envelope(const std::string& command, Json payload) {
    return Json{{"command", command}, {"float_format", "binary64, 17 significant digits"}, {"result", std::move(payload)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Csv::Csv(std::vector<std::string> header) : width_(header.size()) { row(header); }

void Csv::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) fail(ErrorKind::Argument, "CSV row has the wrong number of columns");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
}

std::string Csv::num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string cone_history_csv(const ConeApprox& c) {
    Csv csv({"depth", "diameter"});
    for (size_t d = 0; d < c.history.size(); ++d) csv.row({std::to_string(d), Csv::num(c.history[d])});
    return csv.str();
}

std::string complexity_csv(const ComplexityProfile& p) {
    Csv csv({"L", "count", "entropy"});
    for (size_t i = 0; i < p.counts.size(); ++i)
        csv.row({std::to_string(i + 1), std::to_string(p.counts[i]), Csv::num(p.entropy[i])});
    return csv.str();
}

std::string decomposition_csv(const TransverseDecomposition& d) {
    Csv csv({"component", "index", "edge", "label", "statistic"});
    for (size_t i = 0; i < d.stats.size(); ++i)
        for (size_t t = 0; t < d.stats[i].size(); ++t)
            for (size_t e = 0; e < d.stats[i][t].size(); ++e)
                csv.row({std::to_string(i + 1), std::to_string(d.indices[t]), std::to_string(e + 1),
                         std::to_string(d.label[e]), to_string(d.stats[i][t][e])});
    return csv.str();
}

std::string progress_csv(const std::vector<HorizonPoint>& pts) {
    Csv csv({"index", "horizon", "reaches_end", "truncated"});
    for (const auto& p : pts)
        csv.row({std::to_string(p.index), std::to_string(p.horizon), p.reaches_end ? "1" : "0", p.truncated ? "1" : "0"});
    return csv.str();
}

std::string speed_csv(const SpeedReport& r) {
    Csv csv({"from", "to", "ratio", "distance"});
    for (const auto& s : r.samples)
        csv.row({std::to_string(s.from), std::to_string(s.to), to_string(s.ratio), Csv::num(s.distance)});
    return csv.str();
}

std::string walk_csv(const WalkRecord& r) {
    std::vector<std::string> header{"n", "generator", "displacement", "proxy"};
    for (int i = 0; i < r.config.rank; ++i) header.push_back("length_x" + std::to_string(i + 1));
    Csv csv(header);
    for (const auto& s : r.steps) {
        std::vector<std::string> row{std::to_string(s.n), std::to_string(s.generator), Csv::num(s.displacement),
                                     s.proxy ? "1" : "0"};
        for (double x : s.lengths) row.push_back(Csv::num(x));
        csv.row(row);
    }
    return csv.str();
}

}  // namespace fsq
