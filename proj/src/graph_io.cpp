#include "contraction/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace contraction {

namespace {

// Next line with comments stripped and at least one token, or false at EOF.
bool next_data_line(std::istream& in, std::istringstream& out) {
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) {
            out = std::istringstream(line);
            return true;
        }
    }
    return false;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::istringstream ls;
    if (!next_data_line(in, ls)) throw std::invalid_argument("edge list: empty input");
    long long n, m;
    if (!(ls >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: bad header, expected 'n m'");
    if (n == 0) throw std::invalid_argument("edge list: graph must have at least one vertex");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, ls)) throw std::invalid_argument("edge list: fewer edges than declared");
        long long u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("edge list: bad edge line");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge list: vertex id out of range");
        if (u == v) throw std::invalid_argument("edge list: self-loop rejected");
        if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw std::invalid_argument("edge list: duplicate edge rejected");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace contraction
