#include "pin/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "pin/errors.hpp"

namespace pin {

GraphFile parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int m = -1;
    TerminalSet seekers;
    std::vector<EdgeEntry> edges;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank or comment-only

        if (!header_seen) {
            if (first != "m") throw ParseError("expected header 'm <count> A <members>'", lineno);
            std::string a_marker;
            if (!(ls >> m) || m < 2) throw ParseError("invalid terminal count", lineno);
            if (!(ls >> a_marker) || a_marker != "A")
                throw ParseError("expected 'A' after terminal count", lineno);
            int v;
            while (ls >> v) {
                if (v < 1 || v > m) throw ParseError("set member out of range", lineno);
                seekers.insert(v);
            }
            if (!ls.eof()) throw ParseError("trailing garbage in header", lineno);
            if (seekers.size() < 2) throw ParseError("set A needs at least 2 members", lineno);
            header_seen = true;
            continue;
        }

        EdgeEntry e;
        std::istringstream es(line);
        if (!(es >> e.i >> e.j >> e.multiplicity))
            throw ParseError("expected 'i j multiplicity'", lineno);
        std::string rest;
        if (es >> rest) throw ParseError("trailing garbage after edge entry", lineno);
        if (e.i == e.j) throw ParseError("self-loop entry", lineno);
        if (e.i < 1 || e.i > m || e.j < 1 || e.j > m)
            throw ParseError("edge endpoint out of range", lineno);
        if (e.multiplicity < 0) throw ParseError("negative multiplicity", lineno);
        edges.push_back(e);
    }
    if (!header_seen) throw ParseError("missing header line", lineno == 0 ? 1 : lineno);
    return GraphFile{Multigraph::validate(m, edges), seekers};
}

GraphFile parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

GraphFile parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string serialize_graph(const GraphFile& gf) {
    std::ostringstream out;
    out << "m " << gf.graph.terminal_count() << " A";
    for (int v : gf.seekers) out << " " << v;
    out << "\n";
    for (auto [i, j] : gf.graph.support_pairs())
        out << i << " " << j << " " << gf.graph.multiplicity(i, j) << "\n";
    return out.str();
}

} // namespace pin
