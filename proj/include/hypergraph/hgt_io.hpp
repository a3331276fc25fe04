#ifndef HYPERGRAPH_HGT_IO_HPP
#define HYPERGRAPH_HGT_IO_HPP

#include <hypergraph/hypergraph.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace hypergraph {

// HGT v1 text format.
//   line 1: `n m`
//   next m lines: space-separated ascending vertex indices, 0-based
//   `#` begins a comment line; comments and blank lines are skipped on parse
// serialize(parse(x)) == x for normalized inputs.

inline std::string serialize_hgt(const Hypergraph& h) {
    std::ostringstream out;
    out << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

inline Hypergraph parse_hgt(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto next_data_line = [&](std::string& out_line) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;      // blank
            if (line[pos] == '#') continue;              // comment
            out_line = line;
            return true;
        }
        return false;
    };

    std::string data;
    if (!next_data_line(data)) throw ParseError("missing header line");
    long long n = -1, m = -1;
    {
        std::istringstream hs(data);
        if (!(hs >> n >> m) || n < 0 || m < 0) {
            throw ParseError("bad header at line " + std::to_string(lineno));
        }
        std::string extra;
        if (hs >> extra) {
            throw ParseError("trailing tokens in header at line " + std::to_string(lineno));
        }
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(data)) {
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        }
        std::istringstream es(data);
        Edge e;
        long long v;
        while (es >> v) {
            if (v < 0) throw ParseError("negative vertex at line " + std::to_string(lineno));
            e.push_back(static_cast<Vertex>(v));
        }
        if (!es.eof()) throw ParseError("bad token at line " + std::to_string(lineno));
        edges.push_back(std::move(e));
    }
    if (next_data_line(data)) {
        throw ParseError("unexpected content at line " + std::to_string(lineno));
    }
    return Hypergraph::from_edge_list(static_cast<Vertex>(n), std::move(edges));
}

inline Hypergraph read_hgt(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_hgt(buf.str());
}

inline void write_hgt(const std::string& path, const Hypergraph& h) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    f << serialize_hgt(h);
}

} // namespace hypergraph

#endif // HYPERGRAPH_HGT_IO_HPP
