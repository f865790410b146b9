#include "semitotal/graph6.hpp"

#include <vector>

#include "semitotal/errors.hpp"

namespace semitotal {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
// Larger graphs are representable in graph6 but far beyond anything this
// library can hold as a dense distance table.
constexpr long long kMaxOrder = 1 << 16;

int sextet(std::string_view text, std::size_t offset) {
    if (offset >= text.size()) throw Graph6Error("truncated graph6 data", offset);
    unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 range 63..126", offset);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.starts_with(kHeader)) pos = kHeader.size();
    if (text.ends_with('\n')) text.remove_suffix(1);
    if (pos >= text.size()) throw Graph6Error("empty graph6 input", pos);

    long long n = 0;
    if (text[pos] != '~') {
        n = sextet(text, pos);
        pos += 1;
    } else if (pos + 1 < text.size() && text[pos + 1] != '~') {
        for (int k = 1; k <= 3; ++k) n = (n << 6) | sextet(text, pos + static_cast<std::size_t>(k));
        if (n < 63) throw Graph6Error("non-minimal 4-byte length header", pos);
        pos += 4;
    } else {
        for (int k = 2; k <= 7; ++k) n = (n << 6) | sextet(text, pos + static_cast<std::size_t>(k));
        if (n < 258048) throw Graph6Error("non-minimal 8-byte length header", pos);
        pos += 8;
    }
    if (n < 1) throw Graph6Error("graph must have at least one vertex", 0);
    if (n > kMaxOrder) throw Graph6Error("graph order " + std::to_string(n) + " exceeds supported maximum", 0);

    const int order = static_cast<int>(n);
    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != body)
        throw Graph6Error("expected " + std::to_string(body) + " body bytes, found " + std::to_string(text.size() - pos),
                          text.size() < pos + body ? text.size() : pos + body);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t at = pos + static_cast<std::size_t>(bit / 6);
            if ((sextet(text, at) >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    if (bit % 6 != 0) {
        std::size_t last = pos + body - 1;
        int pad_mask = (1 << (6 - bit % 6)) - 1;
        if (sextet(text, last) & pad_mask) throw Graph6Error("nonzero padding bits", last);
    }
    return Graph::from_edge_list(order, edges);
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kBias);
    } else if (n <= 258047) {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kBias);
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kBias);
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + kBias);
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + kBias);
    return out;
}

}  // namespace semitotal
