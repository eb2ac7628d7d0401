#include "resolvent/io.hpp"

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "resolvent/error.hpp"

namespace resolvent {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Exactly two unsigned integers separated by blanks.
std::optional<std::pair<std::uint64_t, std::uint64_t>> two_numbers(std::string_view s)
{
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    const char* p = s.data();
    const char* end = s.data() + s.size();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == end || (*r1.ptr != ' ' && *r1.ptr != '\t'))
        return std::nullopt;
    p = r1.ptr;
    while (p != end && (*p == ' ' || *p == '\t'))
        ++p;
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{} || r2.ptr != end)
        return std::nullopt;
    return std::pair{a, b};
}

}  // namespace

Graph parse_graph(std::string_view text)
{
    std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t last_line = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        const auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        last_line = line_no;
        auto pair = two_numbers(line);
        if (!pair)
            throw ParseError(line_no, header ? "expected \"u v\"" : "expected header \"n m\"");
        if (!header) {
            header = pair;
            continue;
        }
        if (edges.size() == header->second)
            throw ParseError(line_no, "more edges than the header declares");
        const auto [u, v] = *pair;
        if (u >= header->first || v >= header->first)
            throw ParseError(line_no, "vertex index out of range");
        if (u == v)
            throw ParseError(line_no, "self-loop");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!header)
        throw ParseError(line_no == 0 ? 1 : line_no, "missing header \"n m\"");
    if (edges.size() != header->second)
        throw ParseError(last_line, "header declares " + std::to_string(header->second) + " edges, found " +
                                        std::to_string(edges.size()));
    return build_graph(header->first, edges);
}

std::string serialize_graph(const Graph& g)
{
    const auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string export_dot(const Graph& g)
{
    std::string out = "graph {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace resolvent
