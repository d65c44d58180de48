#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "htgraph/graph.hpp"

namespace htg {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Short header n+63 for n <= 62, otherwise '~' followed by three 6-bit groups.
// Adjacency bits run down the upper triangle column by column:
// x(0,1), x(0,2), x(1,2), x(0,3), ...
inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        const auto col = g.neighbors(j);
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (bits::has(col, i) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

inline Graph decode_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw Graph6Error("graph6: empty input");
    auto byte = [&](std::size_t i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6Error("graph6: byte " + std::to_string(i) + " outside 63..126");
        return c - 63;
    };
    std::size_t pos = 0;
    long n = 0;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw Graph6Error("graph6: order exceeds 64");
        if (text.size() < 4) throw Graph6Error("graph6: truncated long-form header");
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        if (n < 63) throw Graph6Error("graph6: long-form header used for order below 63");
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    if (n == 0) throw Graph6Error("graph6: order 0 is not supported");
    if (n > kMaxOrder) throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds 64");

    const long nbits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos < body) throw Graph6Error("graph6: body too short");
    if (text.size() - pos > body) throw Graph6Error("graph6: trailing bytes after body");

    std::vector<Graph::Row> rows(static_cast<std::size_t>(n), 0);
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int group = byte(pos + static_cast<std::size_t>(k / 6));
            if ((group >> (5 - k % 6)) & 1) {
                rows[i] |= bits::bit(j);
                rows[j] |= bits::bit(i);
            }
        }
    if (nbits % 6 != 0) {
        const int last = byte(pos + body - 1);
        const int pad = static_cast<int>(6 - nbits % 6);
        if (last & ((1 << pad) - 1)) throw Graph6Error("graph6: non-zero padding bits");
    }
    return Graph::from_rows(static_cast<int>(n), rows);
}

}  // namespace htg
