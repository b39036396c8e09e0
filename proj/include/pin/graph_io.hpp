#ifndef PIN_GRAPH_IO_HPP
#define PIN_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "pin/multigraph.hpp"

namespace pin {

struct GraphFile {
    Multigraph graph;
    TerminalSet seekers; // A
};

// Text format:
//   # comment
//   m <count> A <space-separated members>
//   i j e_ij          (one line per pair with positive multiplicity)
// Throws ParseError with the offending line number.
GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_string(const std::string& text);
GraphFile parse_graph_file(const std::string& path);

std::string serialize_graph(const GraphFile& gf);

} // namespace pin

#endif
