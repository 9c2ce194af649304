#include "foldseq/foldseq.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct SequenceSource {
    std::string path;
    std::string example;
    int steps = 30;
    int rank = 3;
    std::vector<long> exponents;
    int blocks = 6;
    std::string direction = "unfolding";
    std::string automorphisms_file;
    std::vector<int> schedule;
};

struct Common {
    int depth = 0;
    std::vector<int> window;
    std::string eps;
    std::string pinch_tol;
    double tol = 1e-8;
    std::string out;
    std::string format = "json";
};

using SeqPtr = std::unique_ptr<fsq_sequence, decltype(&fsq_sequence_free)>;

// Status carried out of a failing library call.
struct Failure {
    fsq_status status;
};

void check(fsq_status s) {
    if (s != FSQ_OK) {
        std::cerr << "error: " << fsq_last_error() << '\n';
        throw Failure{s};
    }
}

fsq_direction parse_dir(const std::string& d) { return d == "folding" ? FSQ_FOLDING : FSQ_UNFOLDING; }

fsq_format parse_format(const std::string& f) { return f == "csv" ? FSQ_FORMAT_CSV : FSQ_FORMAT_JSON; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << '\n';
        throw Failure{FSQ_ERR_IO};
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SeqPtr load(const SequenceSource& src) {
    fsq_sequence* s = nullptr;
    fsq_direction dir = parse_dir(src.direction);
    if (!src.path.empty()) {
        check(fsq_sequence_load(src.path.c_str(), &s));
    } else if (src.example == "fibonacci") {
        check(fsq_sequence_fibonacci(src.steps, dir, &s));
    } else if (src.example == "alternating_block") {
        const long* ex = src.exponents.empty() ? nullptr : src.exponents.data();
        int n = src.exponents.empty() ? src.blocks : static_cast<int>(src.exponents.size());
        check(fsq_sequence_alternating_block(src.rank, ex, n, dir, &s));
    } else if (src.example == "custom") {
        std::string autos = slurp(src.automorphisms_file);
        check(fsq_sequence_custom(src.rank, autos.c_str(), src.schedule.data(), static_cast<int>(src.schedule.size()),
                                  dir, &s));
    } else {
        std::cerr << "error: give --seq or --example\n";
        throw Failure{FSQ_ERR_ARGUMENT};
    }
    return SeqPtr(s, fsq_sequence_free);
}

void emit(char* text, const std::string& out) {
    std::string s = text ? text : "";
    fsq_string_free(text);
    if (out.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << s)) {
        std::cerr << "error: cannot write " << out << '\n';
        throw Failure{FSQ_ERR_IO};
    }
}

void add_source(CLI::App* cmd, SequenceSource& src) {
    cmd->add_option("--seq", src.path, "Sequence file");
    cmd->add_option("--example", src.example, "Built-in sequence")
        ->check(CLI::IsMember({"fibonacci", "alternating_block", "custom"}));
    cmd->add_option("--steps", src.steps, "Steps of the Fibonacci example")->check(CLI::PositiveNumber);
    cmd->add_option("--rank", src.rank, "Rank of the block or custom example")->check(CLI::Range(2, 26));
    cmd->add_option("--exponents", src.exponents, "Block exponents")->delimiter(',');
    cmd->add_option("--blocks", src.blocks, "Number of blocks with exponents 4, 16, 64, ...");
    cmd->add_option("--automorphisms", src.automorphisms_file, "File with one automorphism per line");
    cmd->add_option("--schedule", src.schedule, "Automorphism indices for the custom example")->delimiter(',');
    cmd->add_option("--direction", src.direction, "Direction of built-in examples (files carry their own)")
        ->check(CLI::IsMember({"folding", "unfolding"}));
}

void add_output(CLI::App* cmd, Common& c, bool csv = true) {
    cmd->add_option("--out", c.out, "Output file (default stdout)");
    if (csv) cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Folding and unfolding sequences of graphs: measures, cones, laminations and distances"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fsq_version()));

    SequenceSource src;
    Common c;

    auto* fold = app.add_subcommand("fold", "Build and validate a sequence, or check one morphism file");
    std::string morphism;
    add_source(fold, src);
    fold->add_option("--morphism", morphism, "Morphism file to check");
    add_output(fold, c, false);

    auto* cone = app.add_subcommand("cone", "Nested current or length cone");
    std::string kind = "currents";
    add_source(cone, src);
    cone->add_option("--kind", kind, "currents or lengths")->check(CLI::IsMember({"currents", "lengths"}));
    cone->add_option("--depth", c.depth, "Depth (default: whole sequence)");
    cone->add_option("--tol", c.tol, "Clustering tolerance")->check(CLI::PositiveNumber);
    add_output(cone, c);

    auto* lam = app.add_subcommand("lamination", "Legal language, complexity and minimal components");
    int length = 12;
    std::string mode = "edge";
    add_source(lam, src);
    lam->add_option("--depth", c.depth, "Depth (default: whole sequence)");
    lam->add_option("--length", length, "Largest word length")->check(CLI::PositiveNumber);
    lam->add_option("--mode", mode, "edge or legal")->check(CLI::IsMember({"edge", "legal"}));
    add_output(lam, c);

    auto* dec = app.add_subcommand("decompose", "Transverse decomposition on a window");
    add_source(dec, src);
    dec->add_option("--depth", c.depth, "Cone depth (default: whole sequence)");
    dec->add_option("--window", c.window, "User indices, limit end last")->delimiter(',');
    dec->add_option("--eps", c.eps, "Liminf threshold factor, num/den");
    dec->add_option("--pinch-tol", c.pinch_tol, "Pinching tolerance, num/den");
    dec->add_option("--tol", c.tol, "Cone clustering tolerance")->check(CLI::PositiveNumber);
    add_output(dec, c);

    auto* dist = app.add_subcommand("distance", "Lipschitz distance between marked graphs");
    std::string from, to, twist;
    bool brute = false;
    dist->add_option("--from", from, "Marked graph file T")->required();
    dist->add_option("--to", to, "Marked graph file U")->required();
    dist->add_option("--twist", twist, "Automorphism precomposed with the marking of U, e.g. \"ab b\"");
    dist->add_flag("--bruteforce", brute, "Also maximize over all short words");
    add_output(dist, c, false);

    auto* prog = app.add_subcommand("progress", "Non-filling witness horizons, or linearity and speed");
    bool speed = false;
    int max_gap = 8, stride = 1;
    add_source(prog, src);
    prog->add_option("--window", c.window, "User indices to evaluate (default: all)")->delimiter(',');
    prog->add_flag("--speed", speed, "Report step matrix bounds and Lipschitz speed instead");
    prog->add_option("--max-gap", max_gap, "Largest gap for speed samples")->check(CLI::PositiveNumber);
    prog->add_option("--stride", stride, "Stride between speed samples")->check(CLI::PositiveNumber);
    add_output(prog, c);

    auto* walk = app.add_subcommand("walk", "Random walk on the rose by sampled automorphisms");
    int wrank = 2, wsteps = 2000;
    unsigned long long seed = 0;
    std::string gens, gens_file;
    walk->add_option("--rank", wrank, "Rank")->check(CLI::Range(2, 26));
    walk->add_option("--generators", gens, "Generators separated by ';', each \"[weight:] images\"");
    walk->add_option("--generators-file", gens_file, "One generator per line");
    walk->add_option("--seed", seed, "RNG seed")->required();
    walk->add_option("--steps", wsteps, "Steps")->check(CLI::PositiveNumber);
    add_output(walk, c);

    auto* gen = app.add_subcommand("gen", "Write an example sequence as files");
    std::string dir = ".", name;
    add_source(gen, src);
    gen->add_option("--out", dir, "Output directory");
    gen->add_option("--name", name, "Base file name (default: the example name)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : FSQ_ERR_ARGUMENT;
    }

    try {
        fsq_format fmt = parse_format(c.format);
        char* text = nullptr;
        if (*fold) {
            if (!morphism.empty()) {
                fsq_status s = fsq_morphism_check(morphism.c_str(), &text);
                if (text) emit(text, c.out);
                check(s);
            } else {
                auto s = load(src);
                check(fsq_fold_report(s.get(), &text));
                emit(text, c.out);
            }
        } else if (*cone) {
            auto s = load(src);
            check(fsq_cone_report(s.get(), kind == "lengths" ? FSQ_LENGTHS : FSQ_CURRENTS, c.depth, c.tol, fmt, &text));
            emit(text, c.out);
        } else if (*lam) {
            auto s = load(src);
            check(fsq_lamination_report(s.get(), c.depth, length, mode == "edge" ? 0 : 1, fmt, &text));
            emit(text, c.out);
        } else if (*dec) {
            auto s = load(src);
            check(fsq_decompose_report(s.get(), c.depth, c.window.empty() ? nullptr : c.window.data(),
                                       static_cast<int>(c.window.size()), c.eps.c_str(), c.pinch_tol.c_str(), c.tol,
                                       fmt, &text));
            emit(text, c.out);
        } else if (*dist) {
            fsq_graph *t = nullptr, *u = nullptr;
            check(fsq_graph_load(from.c_str(), &t));
            std::unique_ptr<fsq_graph, decltype(&fsq_graph_free)> tg(t, fsq_graph_free);
            check(fsq_graph_load(to.c_str(), &u));
            std::unique_ptr<fsq_graph, decltype(&fsq_graph_free)> ug(u, fsq_graph_free);
            check(fsq_distance_report(t, u, twist.c_str(), brute ? 1 : 0, &text));
            emit(text, c.out);
        } else if (*prog) {
            auto s = load(src);
            if (speed)
                check(fsq_speed_report(s.get(), max_gap, stride, fmt, &text));
            else
                check(fsq_progress_report(s.get(), c.window.empty() ? nullptr : c.window.data(),
                                          static_cast<int>(c.window.size()), fmt, &text));
            emit(text, c.out);
        } else if (*walk) {
            std::string list = gens_file.empty() ? gens : slurp(gens_file);
            for (char& ch : list)
                if (ch == ';') ch = '\n';
            check(fsq_walk_report(wrank, list.c_str(), seed, wsteps, fmt, &text));
            emit(text, c.out);
        } else if (*gen) {
            auto s = load(src);
            if (name.empty()) name = src.path.empty() ? src.example : "sequence";
            check(fsq_sequence_save(s.get(), dir.c_str(), name.c_str(), &text));
            std::cout << text << '\n';
            fsq_string_free(text);
        }
    } catch (const Failure& f) {
        return f.status;
    }
    return 0;
}
