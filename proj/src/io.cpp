#include "foldseq/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace fsq {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

[[noreturn]] void bad(int line, const std::string& what) {
    fail(ErrorKind::Malformed, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        for (char& c : raw)
            if (c == ':' || c == ',') c = ' ';
        std::istringstream ls(raw);
        Line l{number, {}};
        for (std::string tok; ls >> tok;) l.tokens.push_back(tok);
        if (!l.tokens.empty()) out.push_back(std::move(l));
    }
    return out;
}

int to_int(const Line& l, size_t i) {
    if (i >= l.tokens.size()) bad(l.number, "missing field");
    try {
        size_t used = 0;
        int v = std::stoi(l.tokens[i], &used);
        if (used != l.tokens[i].size()) bad(l.number, "not an integer: " + l.tokens[i]);
        return v;
    } catch (const std::logic_error&) {
        bad(l.number, "not an integer: " + l.tokens[i]);
    }
}

bool is_header(const Line& l) {
    static const char* names[] = {"VERTICES", "EDGES", "LENGTHS", "MARKING", "MORPHISM", "DOMAIN", "CODOMAIN"};
    for (const char* n : names)
        if (l.tokens[0] == n) return true;
    return false;
}

// Reads VERTICES/EDGES starting at i; leaves i at the next unrelated header.
OrientedGraph read_graph(const std::vector<Line>& lines, size_t& i, bool checked) {
    if (i >= lines.size() || lines[i].tokens[0] != "VERTICES") fail(ErrorKind::Malformed, "expected VERTICES");
    int nv = to_int(lines[i], 1);
    if (nv < 1) bad(lines[i].number, "vertex count must be positive");
    ++i;
    if (i >= lines.size() || lines[i].tokens[0] != "EDGES") fail(ErrorKind::Malformed, "expected EDGES");
    ++i;
    std::vector<std::pair<int, int>> ends;
    for (; i < lines.size() && !is_header(lines[i]); ++i) {
        const Line& l = lines[i];
        if (l.tokens.size() != 3) bad(l.number, "edge lines are: id init term");
        int id = to_int(l, 0), a = to_int(l, 1), b = to_int(l, 2);
        if (id != static_cast<int>(ends.size()) + 1) bad(l.number, "edge ids must be consecutive from 1");
        if (a < 1 || a > nv || b < 1 || b > nv) bad(l.number, "vertex out of range");
        ends.emplace_back(a - 1, b - 1);
    }
    if (ends.empty()) fail(ErrorKind::Malformed, "graph without edges");
    return checked ? OrientedGraph::make(nv, ends) : OrientedGraph::make_unchecked(nv, ends);
}

std::string graph_text(const OrientedGraph& g) {
    std::ostringstream out;
    out << "VERTICES " << g.num_vertices() << "\nEDGES\n";
    for (int e = 0; e < g.num_edges(); ++e)
        out << e + 1 << ' ' << g.ends()[e].first + 1 << ' ' << g.ends()[e].second + 1 << '\n';
    return out.str();
}

int parse_letter(const Line& l, const std::string& tok) {
    int sign = 1;
    size_t p = 0;
    if (!tok.empty() && tok[0] == '-') sign = -1, p = 1;
    if (p >= tok.size() || tok[p] != 'x') bad(l.number, "expected a basis symbol like x2 or -x2");
    try {
        int k = std::stoi(tok.substr(p + 1));
        if (k < 1) bad(l.number, "basis symbols start at x1");
        return sign * k;
    } catch (const std::logic_error&) {
        bad(l.number, "bad basis symbol " + tok);
    }
}

}  // namespace

MarkedGraph parse_marked_graph(const std::string& text) {
    auto lines = tokenize(text);
    size_t i = 0;
    OrientedGraph g = read_graph(lines, i, true);
    const int ne = g.num_edges();
    QVec lengths(ne, Rational(1));
    Marking m = MarkedGraph::default_marking(g);
    while (i < lines.size()) {
        const std::string& h = lines[i].tokens[0];
        if (h == "LENGTHS") {
            std::vector<char> seen(ne, 0);
            for (++i; i < lines.size() && !is_header(lines[i]); ++i) {
                const Line& l = lines[i];
                int e = to_int(l, 0);
                if (e < 1 || e > ne || l.tokens.size() != 2) bad(l.number, "length lines are: id num/den");
                try {
                    lengths[e - 1] = parse_rational(l.tokens[1]);
                } catch (const Error&) {
                    bad(l.number, "bad rational " + l.tokens[1]);
                }
                if (lengths[e - 1] < 0) bad(l.number, "negative length");
                seen[e - 1] = 1;
            }
        } else if (h == "MARKING") {
            m = Marking{std::vector<char>(ne, 0), std::vector<int>(ne, 0)};
            for (++i; i < lines.size() && !is_header(lines[i]); ++i) {
                const Line& l = lines[i];
                if (l.tokens[0] == "tree") {
                    for (size_t k = 1; k < l.tokens.size(); ++k) {
                        int e = to_int(l, k);
                        if (e < 1 || e > ne) bad(l.number, "tree edge out of range");
                        m.tree[e - 1] = 1;
                    }
                } else {
                    int e = to_int(l, 0);
                    if (e < 1 || e > ne || l.tokens.size() != 2) bad(l.number, "marking lines are: id xk");
                    m.letter[e - 1] = parse_letter(l, l.tokens[1]);
                }
            }
        } else {
            bad(lines[i].number, "unexpected section " + h);
        }
    }
    try {
        return MarkedGraph(g, lengths, m);
    } catch (const Error& e) {
        fail(ErrorKind::Malformed, std::string("invalid marking: ") + e.what());
    }
}

std::string format_marked_graph(const MarkedGraph& t) {
    const OrientedGraph& g = t.graph();
    std::ostringstream out;
    out << graph_text(g) << "LENGTHS\n";
    for (int e = 0; e < g.num_edges(); ++e) out << e + 1 << ' ' << to_string(t.lengths()[e]) << '\n';
    out << "MARKING\ntree";
    for (int e = 0; e < g.num_edges(); ++e)
        if (t.marking().tree[e]) out << ' ' << e + 1;
    out << '\n';
    for (int e = 0; e < g.num_edges(); ++e) {
        int k = t.marking().letter[e];
        if (!t.marking().tree[e]) out << e + 1 << ' ' << (k < 0 ? "-x" : "x") << std::abs(k) << '\n';
    }
    return out.str();
}

GraphMorphism parse_morphism(const std::string& text) {
    auto lines = tokenize(text);
    size_t i = 0;
    if (lines.empty() || lines[0].tokens[0] != "DOMAIN") fail(ErrorKind::Malformed, "expected DOMAIN");
    ++i;
    OrientedGraph dom = read_graph(lines, i, true);
    if (i >= lines.size() || lines[i].tokens[0] != "CODOMAIN") fail(ErrorKind::Malformed, "expected CODOMAIN");
    ++i;
    OrientedGraph cod = read_graph(lines, i, true);
    if (i >= lines.size() || lines[i].tokens[0] != "MORPHISM") fail(ErrorKind::Malformed, "expected MORPHISM");
    std::vector<Path> images(dom.num_edges());
    std::vector<char> seen(dom.num_edges(), 0);
    for (++i; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (is_header(l)) bad(l.number, "unexpected section " + l.tokens[0]);
        int e = to_int(l, 0);
        if (e < 1 || e > dom.num_edges()) bad(l.number, "domain edge out of range");
        if (seen[e - 1]) bad(l.number, "edge listed twice");
        seen[e - 1] = 1;
        for (size_t k = 1; k < l.tokens.size(); ++k) {
            int id = to_int(l, k);
            if (id == 0 || std::abs(id) > cod.num_edges()) bad(l.number, "codomain edge out of range");
            images[e - 1].push_back(from_signed_id(id, cod.num_edges()));
        }
    }
    for (int e = 0; e < dom.num_edges(); ++e)
        if (!seen[e]) fail(ErrorKind::Malformed, "no image for edge " + std::to_string(e + 1));
    return GraphMorphism(dom, cod, images);
}

std::string format_morphism(const GraphMorphism& f) {
    std::ostringstream out;
    out << "DOMAIN\n" << graph_text(f.domain()) << "CODOMAIN\n" << graph_text(f.codomain()) << "MORPHISM\n";
    for (int e = 0; e < f.domain().num_edges(); ++e) out << e + 1 << ": " << path_to_string(f.images()[e]) << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::IO, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::IO, "cannot write " + path);
    out << text;
    if (!out) fail(ErrorKind::IO, "write failed for " + path);
}

MarkedGraph load_marked_graph(const std::string& path) { return parse_marked_graph(read_file(path)); }

GraphMorphism load_morphism(const std::string& path) { return parse_morphism(read_file(path)); }

FoldingSequence load_sequence(const std::string& path) {
    auto lines = tokenize(read_file(path));
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    std::map<std::string, MorphismPtr> cache;
    std::vector<MorphismPtr> steps;
    std::optional<Direction> dir;
    for (const Line& l : lines) {
        if (l.tokens[0] == "DIRECTION" && l.tokens.size() == 2) {
            try {
                dir = parse_direction(l.tokens[1]);
            } catch (const Error&) {
                bad(l.number, "direction is folding or unfolding");
            }
        } else if (l.tokens[0] == "STEP" && (l.tokens.size() == 2 || l.tokens.size() == 3)) {
            int count = l.tokens.size() == 3 ? to_int(l, 2) : 1;
            if (count < 1) bad(l.number, "step count must be positive");
            std::string file = (base / l.tokens[1]).string();
            auto it = cache.find(file);
            if (it == cache.end()) it = cache.emplace(file, std::make_shared<const GraphMorphism>(load_morphism(file))).first;
            for (int k = 0; k < count; ++k) steps.push_back(it->second);
        } else {
            bad(l.number, "expected DIRECTION or STEP");
        }
    }
    if (!dir) fail(ErrorKind::Malformed, "sequence file has no DIRECTION");
    if (steps.empty()) fail(ErrorKind::Malformed, "sequence file has no STEP");
    return FoldingSequence::build(*dir, steps);
}

std::string save_sequence(const FoldingSequence& seq, const std::string& dir, const std::string& name) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorKind::IO, "cannot create " + dir);
    std::map<const GraphMorphism*, std::string> files;
    std::ostringstream out;
    out << "DIRECTION " << to_string(seq.direction()) << '\n';
    for (int pos = 0; pos < seq.length();) {
        const GraphMorphism* f = seq.step_ptr(pos).get();
        int run = 1;
        while (pos + run < seq.length() && seq.step_ptr(pos + run).get() == f) ++run;
        auto it = files.find(f);
        if (it == files.end()) {
            std::string file = name + "_step" + std::to_string(files.size() + 1) + ".morph";
            write_file((std::filesystem::path(dir) / file).string(), format_morphism(*f));
            it = files.emplace(f, file).first;
        }
        out << "STEP " << it->second;
        if (run > 1) out << ' ' << run;
        out << '\n';
        pos += run;
    }
    std::string path = (std::filesystem::path(dir) / (name + ".seq")).string();
    write_file(path, out.str());
    return path;
}

}  // namespace fsq
