#include "foldseq/foldseq.h"

#include "foldseq/examples.hpp"
#include "foldseq/io.hpp"
#include "foldseq/report.hpp"

#include <cstring>
#include <new>
#include <sstream>

struct fsq_sequence {
    fsq::FoldingSequence seq;
};

struct fsq_graph {
    fsq::MarkedGraph graph;
};

namespace {

thread_local std::string last_error;

fsq_status code_of(fsq::ErrorKind k) {
    switch (k) {
        case fsq::ErrorKind::Argument: return FSQ_ERR_ARGUMENT;
        case fsq::ErrorKind::Malformed:
        case fsq::ErrorKind::Validation: return FSQ_ERR_VALIDATION;
        case fsq::ErrorKind::Budget: return FSQ_ERR_BUDGET;
        case fsq::ErrorKind::IO: return FSQ_ERR_IO;
    }
    return FSQ_ERR_ARGUMENT;
}

template <class F>
fsq_status guard(F&& f) {
    last_error.clear();
    try {
        return f();
    } catch (const fsq::Error& e) {
        last_error = e.what();
        return code_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return FSQ_ERR_BUDGET;
    } catch (const std::exception& e) {
        last_error = e.what();
        return FSQ_ERR_ARGUMENT;
    }
}

char* copy_out(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void need(const void* p, const char* what) {
    if (!p) fsq::fail(fsq::ErrorKind::Argument, std::string(what) + " is null");
}

fsq::Direction direction(fsq_direction d) {
    if (d != FSQ_FOLDING && d != FSQ_UNFOLDING) fsq::fail(fsq::ErrorKind::Argument, "unknown direction");
    return d == FSQ_FOLDING ? fsq::Direction::Folding : fsq::Direction::Unfolding;
}

fsq_status make_sequence(fsq::FoldingSequence s, fsq_sequence** out) {
    *out = new fsq_sequence{std::move(s)};
    return FSQ_OK;
}

std::vector<fsq::Word> parse_images(const std::string& line) {
    std::istringstream in(line);
    std::vector<fsq::Word> im;
    for (std::string tok; in >> tok;) im.push_back(fsq::parse_word(tok));
    return im;
}

std::vector<std::string> lines_of(const char* text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        auto hash = l.find('#');
        if (hash != std::string::npos) l.resize(hash);
        if (l.find_first_not_of(" \t\r") != std::string::npos) out.push_back(l);
    }
    return out;
}

fsq::Rational rational_arg(const char* s, const fsq::Rational& fallback) {
    if (!s || !*s) return fallback;
    fsq::Rational q;
    try {
        q = fsq::parse_rational(s);
    } catch (const fsq::Error&) {
        fsq::fail(fsq::ErrorKind::Argument, std::string("not a rational: ") + s);
    }
    if (q <= 0) fsq::fail(fsq::ErrorKind::Argument, "tolerances must be positive");
    return q;
}

void check_format(fsq_format f) {
    if (f != FSQ_FORMAT_JSON && f != FSQ_FORMAT_CSV) fsq::fail(fsq::ErrorKind::Argument, "unknown format");
}

}  // namespace

extern "C" {

const char* fsq_version(void) { return "1.0.0"; }

const char* fsq_last_error(void) { return last_error.c_str(); }

void fsq_string_free(char* s) { std::free(s); }

fsq_status fsq_sequence_load(const char* path, fsq_sequence** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        return make_sequence(fsq::load_sequence(path), out);
    });
}

fsq_status fsq_sequence_fibonacci(int steps, fsq_direction dir, fsq_sequence** out) {
    return guard([&] {
        need(out, "out");
        if (steps < 1) fsq::fail(fsq::ErrorKind::Argument, "steps must be positive");
        return make_sequence(fsq::fibonacci_sequence(steps, direction(dir)), out);
    });
}

fsq_status fsq_sequence_alternating_block(int rank, const long* exponents, int blocks, fsq_direction dir,
                                          fsq_sequence** out) {
    return guard([&] {
        need(out, "out");
        if (blocks < 1) fsq::fail(fsq::ErrorKind::Argument, "need at least one block");
        std::vector<long> ex = exponents ? std::vector<long>(exponents, exponents + blocks) : fsq::default_schedule(blocks);
        return make_sequence(fsq::alternating_block(rank, ex, direction(dir)), out);
    });
}

fsq_status fsq_sequence_custom(int rank, const char* automorphisms, const int* schedule, int count, fsq_direction dir,
                               fsq_sequence** out) {
    return guard([&] {
        need(automorphisms, "automorphisms");
        need(schedule, "schedule");
        need(out, "out");
        std::vector<std::vector<fsq::Word>> autos;
        for (const auto& l : lines_of(automorphisms)) autos.push_back(parse_images(l));
        return make_sequence(
            fsq::custom_sequence(rank, autos, std::vector<int>(schedule, schedule + count), direction(dir)), out);
    });
}

fsq_status fsq_sequence_with_direction(const fsq_sequence* seq, fsq_direction dir, fsq_sequence** out) {
    return guard([&] {
        need(seq, "sequence");
        need(out, "out");
        return make_sequence(seq->seq.with_direction(direction(dir)), out);
    });
}

fsq_status fsq_sequence_save(const fsq_sequence* seq, const char* dir, const char* name, char** path_out) {
    return guard([&] {
        need(seq, "sequence");
        need(dir, "dir");
        need(name, "name");
        std::string p = fsq::save_sequence(seq->seq, dir, name);
        if (path_out) *path_out = copy_out(p);
        return FSQ_OK;
    });
}

void fsq_sequence_free(fsq_sequence* seq) { delete seq; }

int fsq_sequence_length(const fsq_sequence* seq) { return seq ? seq->seq.length() : -1; }

int fsq_sequence_rank(const fsq_sequence* seq) { return seq ? seq->seq.rank() : -1; }

int fsq_sequence_first_index(const fsq_sequence* seq) { return seq ? seq->seq.first_index() : 0; }

fsq_status fsq_graph_load(const char* path, fsq_graph** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        *out = new fsq_graph{fsq::load_marked_graph(path)};
        return FSQ_OK;
    });
}

fsq_status fsq_graph_parse(const char* text, fsq_graph** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = new fsq_graph{fsq::parse_marked_graph(text)};
        return FSQ_OK;
    });
}

void fsq_graph_free(fsq_graph* g) { delete g; }

fsq_status fsq_fold_report(const fsq_sequence* seq, char** out) {
    return guard([&] {
        need(seq, "sequence");
        need(out, "out");
        const auto& s = seq->seq;
        std::vector<const fsq::GraphMorphism*> distinct;
        std::vector<int> which;
        for (int p = 0; p < s.length(); ++p) {
            const fsq::GraphMorphism* f = s.step_ptr(p).get();
            auto it = std::find(distinct.begin(), distinct.end(), f);
            if (it == distinct.end()) {
                distinct.push_back(f);
                it = distinct.end() - 1;
            }
            which.push_back(static_cast<int>(it - distinct.begin()));
        }
        fsq::Json maps = fsq::Json::array();
        for (const auto* f : distinct) {
            auto v = fsq::validate_change_of_marking(*f);
            fsq::Json rows = fsq::Json::array();
            const auto& m = f->incidence();
            for (int r = 0; r < m.rows(); ++r) {
                fsq::Json row = fsq::Json::array();
                for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
                rows.push_back(row);
            }
            maps.push_back(fsq::Json{{"domain_edges", f->domain().num_edges()},
                                     {"codomain_edges", f->codomain().num_edges()},
                                     {"change_of_marking", v.ok},
                                     {"folds", v.folds},
                                     {"diagnostic", v.diagnostic},
                                     {"incidence", rows}});
        }
        fsq::Json j{{"direction", fsq::to_string(s.direction())},
                    {"length", s.length()},
                    {"rank", s.rank()},
                    {"first_index", s.first_index()},
                    {"max_edges", s.max_edges()},
                    {"reduced_composites", true},
                    {"morphisms", maps},
                    {"steps", which}};
        *out = copy_out(fsq::dump(fsq::envelope("fold", j)));
        return FSQ_OK;
    });
}

fsq_status fsq_morphism_check(const char* path, char** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        auto f = fsq::load_morphism(path);
        auto v = fsq::validate_change_of_marking(f);
        fsq::Json j{{"change_of_marking", v.ok}, {"folds", v.folds}, {"diagnostic", v.diagnostic}};
        *out = copy_out(fsq::dump(fsq::envelope("fold", j)));
        if (!v.ok) {
            last_error = "not a change of marking: " + v.diagnostic;
            return FSQ_ERR_VALIDATION;
        }
        return FSQ_OK;
    });
}

fsq_status fsq_cone_report(const fsq_sequence* seq, fsq_cone_kind kind, int depth, double tol, fsq_format format,
                           char** out) {
    return guard([&] {
        need(seq, "sequence");
        need(out, "out");
        check_format(format);
        if (!(tol > 0)) fsq::fail(fsq::ErrorKind::Argument, "tol must be positive");
        if (depth <= 0) depth = seq->seq.length();
        auto cone = kind == FSQ_LENGTHS ? fsq::length_cone(seq->seq, depth, tol) : fsq::current_cone(seq->seq, depth, tol);
        if (format == FSQ_FORMAT_CSV) {
            *out = copy_out(fsq::cone_history_csv(cone));
        } else {
            fsq::Json j{{"kind", kind == FSQ_LENGTHS ? "lengths" : "currents"},
                        {"cone", fsq::cone_json(cone)},
                        {"verdict", fsq::verdict_json(fsq::ergodicity_verdict(cone, tol))}};
            *out = copy_out(fsq::dump(fsq::envelope("cone", j)));
        }
        return FSQ_OK;
    });
}

fsq_status fsq_lamination_report(const fsq_sequence* seq, int depth, int max_length, int mode, fsq_format format,
                                 char** out) {
    return guard([&] {
        need(seq, "sequence");
        need(out, "out");
        check_format(format);
        if (mode != 0 && mode != 1) fsq::fail(fsq::ErrorKind::Argument, "mode is 0 or 1");
        if (max_length < 1) fsq::fail(fsq::ErrorKind::Argument, "length must be positive");
        if (depth <= 0) depth = seq->seq.length();
        auto m = mode == 0 ? fsq::LanguageMode::EdgeGenerated : fsq::LanguageMode::AllLegal;
        auto prof = fsq::complexity_profile(seq->seq, {depth}, max_length, m);
        if (format == FSQ_FORMAT_CSV) {
            *out = copy_out(fsq::complexity_csv(prof));
            return FSQ_OK;
        }
        fsq::Json comps;
        try {
            comps = fsq::components_json(fsq::minimal_components(seq->seq, depth, max_length, m));
        } catch (const fsq::Error& e) {
            if (e.kind() != fsq::ErrorKind::Budget) throw;
            comps = fsq::Json{{"skipped", e.what()}};
        }
        auto g = fsq::gates(seq->seq, seq->seq.last_index() - depth);
        fsq::Json turns = fsq::Json::array();
        for (const auto& t : g.turns)
            turns.push_back(fsq::Json{{"a", fsq::signed_id(t.a)}, {"b", fsq::signed_id(t.b)}, {"legal", t.legal}});
        fsq::Json j{{"mode", mode == 0 ? "edge-generated" : "all-legal"},
                    {"complexity", fsq::complexity_json(prof)},
                    {"components", comps},
                    {"gates", fsq::Json{{"index", g.index}, {"gate_complete", g.gate_complete}, {"turns", turns}}}};
        *out = copy_out(fsq::dump(fsq::envelope("lamination", j)));
        return FSQ_OK;
    });
}

fsq_status fsq_decompose_report(const fsq_sequence* seq, int depth, const int* window, int count, const char* eps,
                                const char* pinch_tol, double tol, fsq_format format, char** out) {
    return guard([&] {
        need(seq, "sequence");
        need(out, "out");
        check_format(format);
        if (!(tol > 0)) fsq::fail(fsq::ErrorKind::Argument, "tol must be positive");
        const auto& s = seq->seq;
        if (depth <= 0) depth = s.length();
        std::vector<int> idx = window && count > 0 ? std::vector<int>(window, window + count) : fsq::default_window(s);
        fsq::Rational e = rational_arg(eps, fsq::Rational(1, 1000));
        std::optional<fsq::Rational> pt;
        if (pinch_tol && *pinch_tol) pt = rational_arg(pinch_tol, 1);
        auto lambda = fsq::simplicial_length_measure(s);
        auto w = fsq::moduli_window(s, lambda, idx, pt);
        fsq::ConeApprox cone;
        fsq::TransverseDecomposition d;
        if (s.direction() == fsq::Direction::Unfolding) {
            cone = fsq::current_cone(s, depth, tol);
            d = fsq::transverse_decomposition_unfolding(s, fsq::ergodic_current_tracks(s, cone), lambda, w, e);
        } else {
            cone = fsq::length_cone(s, depth, tol);
            d = fsq::transverse_decomposition_folding(s, fsq::ergodic_length_tracks(s, cone), fsq::frequency_current(s),
                                                      w, e);
        }
        if (format == FSQ_FORMAT_CSV) {
            *out = copy_out(fsq::decomposition_csv(d));
            return FSQ_OK;
        }
        auto violations = fsq::structural_violations(w.graph, d, w.pinched);
        auto rec = fsq::recurrence_check(s, lambda, {idx}, d.k, pt);
        fsq::Json j{{"verdict", fsq::verdict_json(fsq::ergodicity_verdict(cone, tol))},
                    {"window", fsq::Json{{"indices", w.indices},
                                         {"limit", fsq::qvec_json(w.limit)},
                                         {"pinch_tol", fsq::rational_json(w.pinch_tol)},
                                         {"pinched", w.pinched}}},
                    {"decomposition", fsq::decomposition_json(d)},
                    {"structural_violations", violations},
                    {"recurrence", fsq::recurrence_json(rec)}};
        *out = copy_out(fsq::dump(fsq::envelope("decompose", j)));
        return FSQ_OK;
    });
}

fsq_status fsq_distance_report(const fsq_graph* t, const fsq_graph* u, const char* twist, int bruteforce, char** out) {
    return guard([&] {
        need(t, "first graph");
        need(u, "second graph");
        need(out, "out");
        std::vector<fsq::Word> tw = twist && *twist ? parse_images(twist) : std::vector<fsq::Word>{};
        if (!tw.empty()) {
            auto v = fsq::validate_change_of_marking(fsq::GraphMorphism::rose_map(u->graph.rank(), tw));
            if (!v.ok) fsq::fail(fsq::ErrorKind::Validation, "twist is not an automorphism: " + v.diagnostic);
        }
        auto d = fsq::lipschitz_distance(t->graph, u->graph, tw);
        fsq::Json j{{"distance", fsq::distance_json(d)},
                    {"candidates", fsq::candidates_json(t->graph, fsq::candidates(t->graph))}};
        if (bruteforce) {
            auto b = fsq::lipschitz_bruteforce(t->graph, u->graph, fsq::bruteforce_length(t->graph), tw);
            j["bruteforce"] = fsq::distance_json(b);
            j["agrees"] = b.ratio == d.ratio;
        }
        auto thick = [](const fsq::MarkedGraph& g) {
            auto th = fsq::thickness(g, fsq::Rational(1, 10));
            return fsq::Json{{"injectivity_radius", fsq::rational_json(th.injectivity_radius)},
                             {"normalized", fsq::rational_json(th.normalized)}};
        };
        j["thickness"] = fsq::Json{{"first", thick(t->graph)}, {"second", thick(u->graph)}};
        j["factors"] = fsq::factors_json(fsq::factor_projection(t->graph));
        *out = copy_out(fsq::dump(fsq::envelope("distance", j)));
        return FSQ_OK;
    });
}

fsq_status fsq_progress_report(const fsq_sequence* seq, const int* indices, int count, fsq_format format, char** out) {
    return guard([&] {
        need(seq, "sequence");
        need(out, "out");
        check_format(format);
        std::vector<int> idx = indices && count > 0 ? std::vector<int>(indices, indices + count) : std::vector<int>{};
        auto pts = fsq::ff_progress_diagnostic(seq->seq, idx);
        if (format == FSQ_FORMAT_CSV) {
            *out = copy_out(fsq::progress_csv(pts));
        } else {
            int top = -1;
            for (const auto& p : pts) top = std::max(top, p.horizon);
            fsq::Json j{{"max_horizon", top}, {"points", fsq::progress_json(pts)}};
            *out = copy_out(fsq::dump(fsq::envelope("progress", j)));
        }
        return FSQ_OK;
    });
}

fsq_status fsq_speed_report(const fsq_sequence* seq, int max_gap, int stride, fsq_format format, char** out) {
    return guard([&] {
        need(seq, "sequence");
        need(out, "out");
        check_format(format);
        auto r = fsq::linearity_and_speed(seq->seq, fsq::simplicial_length_measure(seq->seq), max_gap, stride);
        *out = copy_out(format == FSQ_FORMAT_CSV ? fsq::speed_csv(r)
                                                 : fsq::dump(fsq::envelope("speed", fsq::speed_json(r))));
        return FSQ_OK;
    });
}

fsq_status fsq_walk_report(int rank, const char* generators, unsigned long long seed, int steps, fsq_format format,
                           char** out) {
    return guard([&] {
        need(generators, "generators");
        need(out, "out");
        check_format(format);
        fsq::WalkConfig c;
        c.rank = rank;
        c.seed = seed;
        c.steps = steps;
        for (const auto& l : lines_of(generators)) {
            fsq::WalkGenerator g;
            std::string images = l;
            auto colon = l.find(':');
            if (colon != std::string::npos) {
                try {
                    g.weight = std::stol(l.substr(0, colon));
                } catch (const std::logic_error&) {
                    fsq::fail(fsq::ErrorKind::Argument, "bad generator weight in '" + l + "'");
                }
                images = l.substr(colon + 1);
            }
            g.images = parse_images(images);
            c.generators.push_back(g);
        }
        auto r = fsq::run_walk(c);
        *out = copy_out(format == FSQ_FORMAT_CSV ? fsq::walk_csv(r) : fsq::dump(fsq::envelope("walk", fsq::walk_json(r))));
        return FSQ_OK;
    });
}

}  // extern "C"
