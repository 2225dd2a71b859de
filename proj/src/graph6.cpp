#include "turanlab/graph6.hpp"

namespace turanlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
        throw Graph6Error("byte 0x" + std::to_string(u) + " is outside the graph6 range 63..126");
    return u - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (text.ends_with('\n')) text.remove_suffix(1);
    if (text.ends_with('\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("empty graph6 string");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = decode_byte(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw Graph6Error("eight-byte size header exceeds the 64-vertex limit");
        if (text.size() < 4) throw Graph6Error("truncated four-byte size header");
        n = (long{decode_byte(text[1])} << 12) | (long{decode_byte(text[2])} << 6) | decode_byte(text[3]);
        if (n < 63) throw Graph6Error("four-byte size header used for n < 63");
        pos = 4;
    }
    if (n > kMaxVertices)
        throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds the 64-vertex limit");

    const int order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos < bytes) throw Graph6Error("truncated adjacency data");
    if (text.size() - pos > bytes) throw Graph6Error("trailing bytes after adjacency data");

    GraphBuilder b(order);
    std::size_t k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int group = decode_byte(text[pos + k / 6]);
            if ((group >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    // padding bits must be zero
    for (; k < bytes * 6; ++k)
        if ((decode_byte(text[pos + k / 6]) >> (5 - k % 6)) & 1)
            throw Graph6Error("non-zero padding bits");
    return b.build();
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxVertices) throw Graph6Error("graph too large for graph6 encoding");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return graphs;
}

}  // namespace turanlab
