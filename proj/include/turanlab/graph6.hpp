#pragma once

// graph6 encoding (B. McKay's format): a size header followed by the upper
// triangle of the adjacency matrix in column order, six bits per printable
// byte offset by 63. Only the one-byte (n <= 62) and four-byte (n <= 64 here)
// size headers are reachable with the 64-vertex cap.

#include "turanlab/graph.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace turanlab {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
// '\n' / "\r\n" are accepted; anything else malformed throws Graph6Error.
Graph parse_graph6(std::string_view text);

// Encodes the given labelling (not an isomorphism-canonical form).
std::string write_graph6(const Graph& g);

// Reads every non-empty line of a graph6 stream. Errors carry the line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace turanlab
