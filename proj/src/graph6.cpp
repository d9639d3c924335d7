#include <string>
#include <vector>

#include "stardecomp/graph.hpp"

// graph6: 6-bit chunks offset by 63, adjacency bits in upper-triangle column
// order. Short form for n <= 62, '~' plus three bytes for n < 2^18.

namespace stardecomp {

namespace {

constexpr int kOffset = 63;
constexpr long long kLongLimit = 1LL << 18;

int data_byte(const std::string& s, size_t i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw MalformedGraph6("byte outside graph6 range");
    return c - kOffset;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                          s.back() == '\t'))
        s.pop_back();
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    if (s.empty()) throw MalformedGraph6("empty graph6 line");

    size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw UnsupportedSize("graph6 orders >= 2^18 are not supported");
        if (s.size() < 4) throw MalformedGraph6("truncated long-form order");
        n = (static_cast<long long>(data_byte(s, 1)) << 12) |
            (static_cast<long long>(data_byte(s, 2)) << 6) |
            static_cast<long long>(data_byte(s, 3));
        pos = 4;
    } else {
        n = data_byte(s, 0);
        pos = 1;
    }

    long long nbits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((nbits + 5) / 6);
    if (s.size() - pos != need) throw MalformedGraph6("wrong number of data bytes");

    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int chunk = data_byte(s, pos + static_cast<size_t>(bit / 6));
            if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    if (g.n >= kLongLimit) throw UnsupportedSize("graph6 orders >= 2^18 are not supported");
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + kOffset));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + kOffset));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + kOffset));
        out.push_back(static_cast<char>((g.n & 63) + kOffset));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kOffset));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
    return out;
}

}  // namespace stardecomp
