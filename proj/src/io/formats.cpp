#include "blockset/formats.hpp"

#include <fstream>
#include <sstream>

namespace blockset::io {

ParseError::ParseError(int line_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}

namespace {

struct Line {
    int number;
    std::string text;
};

// Non-empty lines that are not comments. Keeps blank lines when asked, since
// a blank hyperedge line is an error rather than padding.
std::vector<Line> content_lines(const std::string& text, bool keep_blank) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string s;
    int no = 0;
    while (std::getline(in, s)) {
        ++no;
        if (!s.empty() && s.back() == '\r') s.pop_back();
        const auto first = s.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (keep_blank) out.push_back({no, ""});
            continue;
        }
        if (s[first] == 'c' && (first + 1 == s.size() || s[first + 1] == ' ' || s[first + 1] == '\t')) continue;
        out.push_back({no, s.substr(first)});
    }
    return out;
}

std::vector<long long> parse_ints(const Line& l, std::size_t skip_tokens) {
    std::istringstream in(l.text);
    std::string tok;
    std::vector<long long> out;
    std::size_t i = 0;
    while (in >> tok) {
        if (i++ < skip_tokens) continue;
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(l.number, "expected an integer, got '" + tok + "'");
        }
    }
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

Vertex vertex_id(long long raw, int n, int line) {
    if (raw < 1 || raw > n) throw ParseError(line, "vertex " + std::to_string(raw) + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(raw - 1);
}

}  // namespace

Graph parse_graph(const std::string& text, std::vector<std::string>* warnings) {
    auto lines = content_lines(text, false);
    if (lines.empty()) throw ParseError(0, "missing 'p edge' header");
    const auto head = tokens(lines[0].text);
    if (head.size() != 4 || head[0] != "p" || head[1] != "edge") throw ParseError(lines[0].number, "malformed header, expected 'p edge <n> <m>'");
    const auto nm = parse_ints(lines[0], 2);
    if (nm[0] < 0 || nm[1] < 0) throw ParseError(lines[0].number, "negative count in header");
    if (nm[0] > kMaxVertices) throw CapacityError("graph has more than 128 vertices");
    const int n = static_cast<int>(nm[0]);
    Graph g(n);
    long long edges = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto t = tokens(lines[i].text);
        if (t[0] != "e") throw ParseError(lines[i].number, "expected an 'e <u> <v>' line");
        const auto uv = parse_ints(lines[i], 1);
        if (uv.size() != 2) throw ParseError(lines[i].number, "edge line needs two endpoints");
        const Vertex u = vertex_id(uv[0], n, lines[i].number);
        const Vertex v = vertex_id(uv[1], n, lines[i].number);
        if (u == v) throw ParseError(lines[i].number, "loop at vertex " + std::to_string(u + 1));
        ++edges;
        if (!g.add_edge(u, v) && warnings)
            warnings->push_back("line " + std::to_string(lines[i].number) + ": duplicate edge {" + std::to_string(u + 1) +
                                "," + std::to_string(v + 1) + "} ignored");
    }
    if (edges != nm[1] && warnings)
        warnings->push_back("header announces " + std::to_string(nm[1]) + " edges, found " + std::to_string(edges));
    return g;
}

std::string print_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Hypergraph parse_hypergraph(const std::string& text) {
    auto lines = content_lines(text, true);
    std::size_t first = 0;
    while (first < lines.size() && lines[first].text.empty()) ++first;
    if (first == lines.size()) throw ParseError(0, "missing 'p hs' header");
    const auto head = tokens(lines[first].text);
    if (head.size() != 4 || head[0] != "p" || head[1] != "hs") throw ParseError(lines[first].number, "malformed header, expected 'p hs <n> <m>'");
    const auto nm = parse_ints(lines[first], 2);
    if (nm[0] < 0 || nm[1] < 0) throw ParseError(lines[first].number, "negative count in header");
    if (nm[0] > kMaxVertices) throw CapacityError("hypergraph has more than 128 vertices");
    const int n = static_cast<int>(nm[0]);
    // Trailing blank lines are padding; interior ones are empty edges.
    std::size_t last = lines.size();
    while (last > first + 1 && lines[last - 1].text.empty()) --last;
    Hypergraph h(n);
    for (std::size_t i = first + 1; i < last; ++i) {
        if (lines[i].text.empty()) throw ParseError(lines[i].number, "empty hyperedge");
        VertexSet e;
        for (long long raw : parse_ints(lines[i], 0)) e.insert(vertex_id(raw, n, lines[i].number));
        h.add_edge(e);
    }
    if (h.num_edges() != nm[1])
        throw ParseError(lines[first].number, "header announces " + std::to_string(nm[1]) + " hyperedges, found " +
                                                  std::to_string(h.num_edges()));
    return h;
}

std::string print_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "p hs " << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (const auto& e : h.edges()) {
        bool first = true;
        e.for_each([&](Vertex v) {
            out << (first ? "" : " ") << v + 1;
            first = false;
        });
        out << '\n';
    }
    return out.str();
}

TreeDecomposition parse_td(const std::string& text, int* n_out) {
    auto lines = content_lines(text, false);
    if (lines.empty()) throw ParseError(0, "missing 's td' header");
    const auto head = tokens(lines[0].text);
    if (head.size() != 5 || head[0] != "s" || head[1] != "td") throw ParseError(lines[0].number, "malformed header, expected 's td <bags> <width+1> <n>'");
    const auto hv = parse_ints(lines[0], 2);
    if (hv[0] < 0 || hv[1] < 0 || hv[2] < 0) throw ParseError(lines[0].number, "negative count in header");
    const int nb = static_cast<int>(hv[0]);
    const int n = static_cast<int>(hv[2]);
    if (n > kMaxVertices) throw CapacityError("decomposition has more than 128 vertices");
    TreeDecomposition d;
    d.bags.assign(nb, VertexSet{});
    d.declared_width = static_cast<int>(hv[1]) - 1;
    std::vector<char> seen(nb, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto t = tokens(lines[i].text);
        if (t[0] == "b") {
            const auto vals = parse_ints(lines[i], 1);
            if (vals.empty() || vals[0] < 1 || vals[0] > nb) throw ParseError(lines[i].number, "bag index out of range");
            const int b = static_cast<int>(vals[0] - 1);
            if (seen[b]) throw ParseError(lines[i].number, "bag " + std::to_string(b + 1) + " listed twice");
            seen[b] = 1;
            for (std::size_t k = 1; k < vals.size(); ++k) d.bags[b].insert(vertex_id(vals[k], n, lines[i].number));
        } else {
            const auto ab = parse_ints(lines[i], 0);
            if (ab.size() != 2) throw ParseError(lines[i].number, "tree edge needs two bag indices");
            if (ab[0] < 1 || ab[0] > nb || ab[1] < 1 || ab[1] > nb) throw ParseError(lines[i].number, "tree edge references a missing bag");
            d.tree_edges.emplace_back(static_cast<int>(ab[0] - 1), static_cast<int>(ab[1] - 1));
        }
    }
    for (int b = 0; b < nb; ++b)
        if (!seen[b]) throw ParseError(lines[0].number, "bag " + std::to_string(b + 1) + " is never listed");
    if (n_out) *n_out = n;
    return d;
}

std::string print_td(const TreeDecomposition& d, int n) {
    std::ostringstream out;
    out << "s td " << d.bags.size() << ' ' << d.width() + 1 << ' ' << n << '\n';
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
        out << "b " << i + 1;
        d.bags[i].for_each([&](Vertex v) { out << ' ' << v + 1; });
        out << '\n';
    }
    for (auto [a, b] : d.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_hypergraph(const std::string& text) {
    for (const auto& l : content_lines(text, false)) {
        const auto t = tokens(l.text);
        if (t.size() >= 2 && t[0] == "p") return t[1] == "hs";
    }
    return false;
}

}  // namespace blockset::io
