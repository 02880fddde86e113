#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace turanreg {

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void append_order(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

}  // namespace detail

/// Standard graph6: order prefix, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, offset 63.
inline std::string graph6_encode(const Graph& g) {
    const auto n = g.order();
    std::string out;
    detail::append_order(out, n);
    int acc = 0, nbits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("graph6: empty string");
    for (char c : text)
        if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside 63..126");

    auto val = [&](std::size_t i) { return static_cast<std::size_t>(text[i] - 63); };
    std::size_t n = 0, pos = 0;
    if (text[0] != '~') {
        n = val(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw Graph6Error("graph6: truncated order");
        n = (val(1) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        if (text.size() < 8) throw Graph6Error("graph6: truncated order");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
        pos = 8;
    }
    if (n > kMaxOrder) throw Graph6Error("graph6: unsupported order " + std::to_string(n));

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Graph6Error("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                          std::to_string(text.size() - pos));

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            auto b = val(pos + k / 6);
            if ((b >> (5 - k % 6)) & 1U) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero in canonical graph6.
    if (bits % 6 != 0) {
        auto last = val(text.size() - 1);
        if (last & ((1U << (6 - bits % 6)) - 1)) throw Graph6Error("graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace turanreg
