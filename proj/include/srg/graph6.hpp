#pragma once

// graph6 codec, byte-compatible with nauty's format: optional ">>graph6<<"
// header, size field N(n), then the upper triangle in column order packed
// six bits per printable byte.

#include "error.hpp"
#include "graph.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srg {

namespace detail {

inline constexpr std::string_view graph6_header = ">>graph6<<";

inline std::uint8_t graph6_value(char c, std::size_t position)
{
    auto byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126)
        throw Error(ErrorKind::BadChar, "byte " + std::to_string(byte) + " at offset " + std::to_string(position));
    return static_cast<std::uint8_t>(byte - 63);
}

} // namespace detail

inline Graph parse_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.starts_with(detail::graph6_header))
        text.remove_prefix(detail::graph6_header.size());
    if (text.empty())
        throw Error(ErrorKind::BadLength, "empty graph6 string");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto chunk = [&]() -> std::uint64_t {
        if (pos >= text.size())
            throw Error(ErrorKind::BadLength, "truncated size field");
        auto v = detail::graph6_value(text[pos], pos);
        ++pos;
        return v;
    };

    if (static_cast<unsigned char>(text[0]) != 126) {
        n = chunk();
    }
    else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
        pos = 2;
        for (int i = 0; i < 6; ++i)
            n = (n << 6) | chunk();
    }
    else {
        pos = 1;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | chunk();
    }

    if (n > max_graph_order)
        throw Error(ErrorKind::UnsupportedSize, std::to_string(n) + " vertices exceeds the supported order");

    std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::uint64_t body_bytes = (bits + 5) / 6;
    if (text.size() - pos != body_bytes)
        throw Error(ErrorKind::BadLength,
            "expected " + std::to_string(body_bytes) + " body bytes for n=" + std::to_string(n) + ", got "
                + std::to_string(text.size() - pos));

    Graph g(static_cast<std::size_t>(n));
    std::uint64_t bit = 0;
    std::uint8_t current = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0)
                current = detail::graph6_value(text[pos + bit / 6], pos + bit / 6);
            if ((current >> (5 - bit % 6)) & 1u)
                g.add_edge(i, j);
        }
    }
    return g;
}

inline std::string encode_graph6(const Graph & g)
{
    std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    }
    else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }

    unsigned value = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

/// One parsed line of a graph6 file; `error` is set instead of `graph` when
/// the line failed to decode.
struct Graph6Line {
    std::size_t line_number = 0;
    std::string text;
    std::optional<Graph> graph;
    std::optional<Error> error;
};

/// Reads every non-empty line. Parse failures are collected per line rather
/// than aborting the whole file.
inline std::vector<Graph6Line> read_graph6_lines(std::istream & in)
{
    std::vector<Graph6Line> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        Graph6Line entry;
        entry.line_number = number;
        entry.text = line;
        try {
            entry.graph = parse_graph6(line);
        }
        catch (const Error & e) {
            entry.error = e;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace srg
