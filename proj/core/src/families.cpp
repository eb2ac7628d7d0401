#include "resolvent/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <random>
#include <set>

#include "resolvent/error.hpp"

namespace resolvent {

namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why)
{
    throw Error(ErrorCode::bad_params, "family spec '" + std::string(text) + "': " + why);
}

int parse_int(std::string_view whole, std::string_view digits)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        bad(whole, "expected an integer, got '" + std::string(digits) + "'");
    return value;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n)
{
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    const auto rem = (max % n + 1) % n;  // 2^64 mod n
    while (true) {
        auto x = rng();
        if (x <= max - rem)
            return x % n;
    }
}

std::uint64_t parse_seed(std::string_view whole, std::string_view opt)
{
    if (opt.substr(0, 5) != "seed=")
        bad(whole, "expected seed=N");
    auto digits = opt.substr(5);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        bad(whole, "bad seed '" + std::string(digits) + "'");
    return value;
}

void require(bool ok, const FamilySpec& spec, const char* why)
{
    if (!ok)
        throw Error(ErrorCode::bad_params, to_string(spec) + ": " + why);
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text)
{
    FamilySpec spec;
    auto colon = text.find(':');
    auto head = text.substr(0, colon);
    auto rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (head == "petersen" && rest.empty()) {
        spec.family = Family::petersen;
        return spec;
    }
    if (head == "star" || head == "subdivstar" || head == "mobius") {
        spec.family = head == "star" ? Family::star : head == "mobius" ? Family::mobius_ladder : Family::subdivided_star;
        spec.params.push_back(parse_int(text, rest));
        return spec;
    }
    if (head == "tree") {
        spec.family = Family::random_tree;
        auto sep = rest.find(':');
        spec.params.push_back(parse_int(text, rest.substr(0, sep)));
        if (sep != std::string_view::npos)
            spec.seed = parse_seed(text, rest.substr(sep + 1));
        return spec;
    }
    if (head == "gnp") {
        spec.family = Family::random_connected;
        auto first = rest.find(':');
        auto second = first == std::string_view::npos ? first : rest.find(':', first + 1);
        if (second == std::string_view::npos)
            bad(text, "expected gnp:<order>:<percent>:seed=N");
        spec.params.push_back(parse_int(text, rest.substr(0, first)));
        spec.params.push_back(parse_int(text, rest.substr(first + 1, second - first - 1)));
        spec.seed = parse_seed(text, rest.substr(second + 1));
        return spec;
    }
    if (!rest.empty() || head.size() < 2)
        bad(text, "unknown family");
    auto body = head.substr(1);
    switch (head[0]) {
    case 'K': {
        auto comma = body.find(',');
        if (comma == std::string_view::npos) {
            spec.family = Family::complete;
            spec.params.push_back(parse_int(text, body));
        } else {
            spec.family = Family::complete_bipartite;
            spec.params.push_back(parse_int(text, body.substr(0, comma)));
            spec.params.push_back(parse_int(text, body.substr(comma + 1)));
        }
        return spec;
    }
    case 'P': spec.family = Family::path; break;
    case 'C': spec.family = Family::cycle; break;
    case 'N': spec.family = Family::edgeless; break;
    default: bad(text, "unknown family");
    }
    spec.params.push_back(parse_int(text, body));
    return spec;
}

std::string to_string(const FamilySpec& spec)
{
    auto p = [&](std::size_t i) { return i < spec.params.size() ? std::to_string(spec.params[i]) : std::string("?"); };
    switch (spec.family) {
    case Family::complete: return "K" + p(0);
    case Family::path: return "P" + p(0);
    case Family::cycle: return "C" + p(0);
    case Family::complete_bipartite: return "K" + p(0) + "," + p(1);
    case Family::edgeless: return "N" + p(0);
    case Family::star: return "star:" + p(0);
    case Family::subdivided_star: return "subdivstar:" + p(0);
    case Family::petersen: return "petersen";
    case Family::mobius_ladder: return "mobius:" + p(0);
    case Family::random_tree: return "tree:" + p(0) + ":seed=" + std::to_string(spec.seed.value_or(0));
    case Family::random_connected:
        return "gnp:" + p(0) + ":" + p(1) + ":seed=" + std::to_string(spec.seed.value_or(0));
    }
    return "?";
}

Graph make_family(const FamilySpec& spec)
{
    auto arity = [&](std::size_t k) { require(spec.params.size() == k, spec, "wrong parameter count"); };
    auto param = [&](std::size_t i) { return static_cast<std::size_t>(std::max(spec.params[i], 0)); };
    switch (spec.family) {
    case Family::complete:
        arity(1);
        require(spec.params[0] >= 1, spec, "complete graph needs n >= 1");
        return complete_graph(param(0));
    case Family::path:
        arity(1);
        require(spec.params[0] >= 1, spec, "path needs n >= 1");
        return path_graph(param(0));
    case Family::cycle:
        arity(1);
        require(spec.params[0] >= 3, spec, "cycle needs n >= 3");
        return cycle_graph(param(0));
    case Family::complete_bipartite:
        arity(2);
        require(spec.params[0] >= 1 && spec.params[1] >= 1, spec, "complete bipartite needs r, t >= 1");
        return complete_bipartite_graph(param(0), param(1));
    case Family::edgeless:
        arity(1);
        require(spec.params[0] >= 1, spec, "edgeless graph needs n >= 1");
        return edgeless_graph(param(0));
    case Family::star:
        arity(1);
        require(spec.params[0] >= 1, spec, "star needs at least one leaf");
        return star_graph(param(0));
    case Family::subdivided_star:
        arity(1);
        require(spec.params[0] >= 2, spec, "subdivided star needs at least two legs");
        return subdivided_star(param(0));
    case Family::petersen:
        arity(0);
        return petersen_graph();
    case Family::mobius_ladder:
        arity(1);
        require(spec.params[0] >= 4 && spec.params[0] % 2 == 0, spec, "Moebius ladder needs even n >= 4");
        return mobius_ladder(param(0));
    case Family::random_tree:
        arity(1);
        require(spec.params[0] >= 2, spec, "random tree needs order >= 2");
        return random_tree(param(0), spec.seed.value_or(0));
    case Family::random_connected:
        arity(2);
        require(spec.params[0] >= 1, spec, "random connected graph needs order >= 1");
        require(spec.params[1] >= 0 && spec.params[1] <= 100, spec, "edge percentage must be in 0..100");
        return random_connected_graph(param(0), static_cast<unsigned>(param(1)), spec.seed.value_or(0));
    }
    throw Error(ErrorCode::bad_params, "unknown family");
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(v - 1, v);
    return build_graph(n, edges);
}

Graph cycle_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return build_graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t r, std::size_t t)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < r; ++u)
        for (Vertex v = 0; v < t; ++v)
            edges.emplace_back(u, static_cast<Vertex>(r + v));
    return build_graph(r + t, edges);
}

Graph edgeless_graph(std::size_t n)
{
    return build_graph(n, {});
}

Graph star_graph(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return build_graph(leaves + 1, edges);
}

Graph subdivided_star(std::size_t legs)
{
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= legs; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, static_cast<Vertex>(legs + i));
    }
    return build_graph(2 * legs + 1, edges);
}

Graph petersen_graph()
{
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return build_graph(10, edges);
}

Graph mobius_ladder(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    for (Vertex v = 0; v < n / 2; ++v)
        edges.emplace_back(v, static_cast<Vertex>(v + n / 2));
    return build_graph(n, edges);
}

Graph decode_pruefer(std::span<const Vertex> sequence)
{
    const auto n = sequence.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (auto s : sequence) {
        if (s >= n)
            throw Error(ErrorCode::index_out_of_range, "Pruefer symbol out of range");
        ++degree[s];
    }
    std::set<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);
    std::vector<Edge> edges;
    for (auto s : sequence) {
        auto leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1)
            leaves.insert(s);
    }
    auto last = leaves.begin();
    edges.emplace_back(*last, *std::next(last));
    return build_graph(n, edges);
}

Graph random_tree(std::size_t order, std::uint64_t seed)
{
    if (order < 2)
        throw Error(ErrorCode::bad_params, "random tree needs order >= 2");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> sequence(order - 2);
    for (auto& s : sequence)
        s = static_cast<Vertex>(bounded(rng, order));
    return decode_pruefer(sequence);
}

Graph random_connected_graph(std::size_t order, unsigned percent, std::uint64_t seed)
{
    if (order == 0 || percent > 100)
        throw Error(ErrorCode::bad_params, "random connected graph needs order >= 1 and percent <= 100");
    auto edges = order >= 2 ? random_tree(order, seed).edges() : std::vector<Edge>{};
    std::set<Edge> present(edges.begin(), edges.end());
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v)
            if (bounded(rng, 100) < percent && !present.contains({u, v}))
                edges.emplace_back(u, v);
    return build_graph(order, edges);
}

FamilySpec random_2mmf_tree_spec(std::size_t min_order, std::size_t max_order, std::uint64_t seed)
{
    if (min_order < 4 || max_order < min_order)
        throw Error(ErrorCode::bad_params, "2MMF trees need 4 <= min_order <= max_order");
    std::mt19937_64 rng(seed);
    while (true) {
        FamilySpec spec{Family::random_tree, {static_cast<int>(min_order + bounded(rng, max_order - min_order + 1))},
                        rng()};
        auto t = make_family(spec);
        // Trees are 2MMF exactly when no support vertex carries two leaves.
        std::vector<int> leaves(t.order(), 0);
        bool ok = true;
        for (Vertex v = 0; v < t.order() && ok; ++v)
            if (t.degree(v) == 1)
                ok = ++leaves[t.neighbors(v)[0]] == 1;
        if (ok)
            return spec;
    }
}

}  // namespace resolvent
