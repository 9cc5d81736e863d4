#include "euler/io.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <set>
#include <sstream>

namespace euler {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) fields.push_back(tok);
    return fields;
}

long long parse_number(const std::string& tok, int line, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

int parse_vertex(const std::string& tok, int n, int line, const char* what) {
    long long v = parse_number(tok, line, what);
    if (v < 1 || v > n)
        throw ParseError(line, std::string(what) + " " + tok + " out of range 1.." + std::to_string(n));
    return static_cast<int>(v);
}

} // namespace

Graph parse_graph(std::istream& in, std::vector<PartAssignment>* parts) {
    int lineno = 0;
    bool have_header = false;
    Orientation orientation = Orientation::undirected;
    int n = 0;
    long long m = 0;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        const std::string& kind = fields[0];
        if (kind == "c") continue;

        if (kind == "p") {
            if (have_header) throw ParseError(lineno, "repeated p line");
            if (fields.size() != 5 || fields[1] != "euler")
                throw ParseError(lineno, "expected 'p euler <undirected|directed> <n> <m>'");
            if (fields[2] == "undirected") {
                orientation = Orientation::undirected;
            } else if (fields[2] == "directed") {
                orientation = Orientation::directed;
            } else {
                throw ParseError(lineno, "orientation must be 'undirected' or 'directed'");
            }
            long long nn = parse_number(fields[3], lineno, "vertex count");
            m = parse_number(fields[4], lineno, "edge count");
            if (nn < 0 || nn > std::numeric_limits<int>::max())
                throw ParseError(lineno, "vertex count out of range");
            if (m < 0) throw ParseError(lineno, "edge count out of range");
            n = static_cast<int>(nn);
            have_header = true;
            continue;
        }

        if (kind == "e" || kind == "a") {
            if (!have_header) throw ParseError(lineno, "edge before p line");
            const bool directed = (orientation == Orientation::directed);
            if (kind == "e" && directed)
                throw ParseError(lineno, "directed graph uses 'a' lines");
            if (kind == "a" && !directed)
                throw ParseError(lineno, "undirected graph uses 'e' lines");
            if (static_cast<long long>(edges.size()) == m)
                throw ParseError(lineno, "more edge lines than declared");
            if (fields.size() != 3) throw ParseError(lineno, "expected two endpoints");
            int u = parse_vertex(fields[1], n, lineno, "endpoint");
            int v = parse_vertex(fields[2], n, lineno, "endpoint");
            if (u == v) throw ParseError(lineno, "self-loop rejected");
            std::pair<int, int> key(u, v);
            if (!directed && key.first > key.second) std::swap(key.first, key.second);
            if (!seen.insert(key).second) throw ParseError(lineno, "repeated edge");
            edges.emplace_back(u, v);
            continue;
        }

        if (kind == "t") {
            if (!have_header) throw ParseError(lineno, "t line before p line");
            if (parts == nullptr) throw ParseError(lineno, "t lines not allowed here");
            if (fields.size() != 3) throw ParseError(lineno, "expected 't <part> <vertex>'");
            long long part = parse_number(fields[1], lineno, "part index");
            if (part < 1 || part > std::numeric_limits<int>::max())
                throw ParseError(lineno, "part index out of range");
            int v = parse_vertex(fields[2], n, lineno, "vertex");
            parts->push_back({static_cast<int>(part), v});
            continue;
        }

        throw ParseError(lineno, "unknown line type '" + kind + "'");
    }

    if (!have_header) throw ParseError(0, "missing p line");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(0, "expected " + std::to_string(m) + " edge lines, found " +
                                std::to_string(edges.size()));
    return Graph(n, orientation, edges);
}

Graph parse_graph(const std::string& text, std::vector<PartAssignment>* parts) {
    std::istringstream in(text);
    return parse_graph(in, parts);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p euler " << (g.directed() ? "directed" : "undirected") << ' ' << g.vertex_count()
        << ' ' << g.edge_count() << '\n';
    const char* kind = g.directed() ? "a " : "e ";
    for (const Edge& e : g.edges()) out << kind << e.tail << ' ' << e.head << '\n';
    return out.str();
}

} // namespace euler
