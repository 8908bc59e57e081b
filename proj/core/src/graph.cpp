#include "stanley/graph.hpp"

#include "stanley/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace stanley {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n)
{
    if (n < 0 || n > kMaxVariables)
        throw PreconditionError("vertex count " + std::to_string(n) + " out of range");
    adjacency_.assign(static_cast<std::size_t>(n), 0);
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} has an endpoint outside 1.." + std::to_string(n));
        if (u == v)
            throw PreconditionError("loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw PreconditionError("duplicate edge {" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + "}");
    for (const auto& [u, v] : edges) {
        adjacency_[static_cast<std::size_t>(u - 1)] |= Mask{1} << (v - 1);
        adjacency_[static_cast<std::size_t>(v - 1)] |= Mask{1} << (u - 1);
    }
    edges_ = std::move(edges);
}

bool Graph::adjacent(int u, int v) const noexcept
{
    if (u < 1 || u > n_ || v < 1 || v > n_)
        return false;
    return (adjacency_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1U;
}

bool Graph::is_complete() const noexcept
{
    return edges_.size() == static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
}

std::optional<GraphFamily> parse_graph_family(std::string_view name)
{
    if (name == "complete")
        return GraphFamily::complete;
    if (name == "cycle")
        return GraphFamily::cycle;
    if (name == "path")
        return GraphFamily::path;
    if (name == "discrete")
        return GraphFamily::discrete;
    return std::nullopt;
}

std::string_view to_string(GraphFamily family)
{
    switch (family) {
    case GraphFamily::complete:
        return "complete";
    case GraphFamily::cycle:
        return "cycle";
    case GraphFamily::path:
        return "path";
    case GraphFamily::discrete:
        return "discrete";
    }
    return "?";
}

Graph make_graph(GraphFamily family, int n)
{
    if (n < 1)
        throw PreconditionError("graph families need n >= 1");
    std::vector<Edge> edges;
    switch (family) {
    case GraphFamily::complete:
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                edges.emplace_back(u, v);
        break;
    case GraphFamily::cycle:
        if (n < 3)
            throw PreconditionError("a cycle needs n >= 3");
        for (int u = 1; u < n; ++u)
            edges.emplace_back(u, u + 1);
        edges.emplace_back(1, n);
        break;
    case GraphFamily::path:
        for (int u = 1; u < n; ++u)
            edges.emplace_back(u, u + 1);
        break;
    case GraphFamily::discrete:
        break;
    }
    return Graph(n, std::move(edges));
}

namespace {

// Colour refinement; returns the final colour (dense rank) of each vertex.
std::vector<int> refine_colours(const Graph& g)
{
    const int n = g.n();
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        colour[static_cast<std::size_t>(v - 1)] = std::popcount(g.neighbours(v));
    for (int round = 0; round <= n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v - 1)];
            s.first = colour[static_cast<std::size_t>(v - 1)];
            for (Mask b = g.neighbours(v); b != 0; b &= b - 1)
                s.second.push_back(colour[static_cast<std::size_t>(std::countr_zero(b))]);
            std::sort(s.second.begin(), s.second.end());
        }
        std::set<std::pair<int, std::vector<int>>> distinct(sig.begin(), sig.end());
        std::map<std::pair<int, std::vector<int>>, int> rank;
        int r = 0;
        for (const auto& s : distinct)
            rank[s] = r++;
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
        const bool stable = std::set<int>(colour.begin(), colour.end()).size() == distinct.size();
        colour = std::move(next);
        if (stable)
            break;
    }
    return colour;
}

// Upper-triangle adjacency code for the ordering `order` (position -> vertex),
// most significant bit first.
Mask adjacency_code(const Graph& g, const std::vector<int>& order)
{
    Mask code = 0;
    const int n = g.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            code = (code << 1) | (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? 1U : 0U);
    return code;
}

struct CanonicalSearch {
    const Graph& graph;
    std::vector<std::vector<int>> cells;
    std::vector<int> order;
    Mask best_code = 0;
    std::vector<int> best_order;
    bool have_best = false;

    void run(std::size_t cell)
    {
        if (cell == cells.size()) {
            Mask code = adjacency_code(graph, order);
            if (!have_best || code > best_code) {
                best_code = code;
                best_order = order;
                have_best = true;
            }
            return;
        }
        auto members = cells[cell];
        std::sort(members.begin(), members.end());
        const std::size_t base = order.size();
        do {
            order.resize(base);
            order.insert(order.end(), members.begin(), members.end());
            run(cell + 1);
        } while (std::next_permutation(members.begin(), members.end()));
        order.resize(base);
    }
};

std::pair<Mask, std::vector<int>> canonical_order(const Graph& graph)
{
    const int n = graph.n();
    if (n > kMaxCanonicalVertices)
        throw ResourceLimitError("canonical labelling supports at most " + std::to_string(kMaxCanonicalVertices) +
                                 " vertices");
    auto colour = refine_colours(graph);
    int colours = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    CanonicalSearch search{graph, {}, {}, 0, {}, false};
    search.cells.resize(static_cast<std::size_t>(colours));
    for (int v = 1; v <= n; ++v)
        search.cells[static_cast<std::size_t>(colour[static_cast<std::size_t>(v - 1)])].push_back(v);
    search.run(0);
    return {search.best_code, search.best_order};
}

} // namespace

Graph canonical_form(const Graph& graph)
{
    auto [code, order] = canonical_order(graph);
    std::vector<int> position(static_cast<std::size_t>(graph.n()) + 1);
    for (std::size_t i = 0; i < order.size(); ++i)
        position[static_cast<std::size_t>(order[i])] = static_cast<int>(i) + 1;
    std::vector<Edge> edges;
    for (const auto& [u, v] : graph.edges())
        edges.emplace_back(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
    return Graph(graph.n(), std::move(edges));
}

std::string graph_key(const Graph& graph)
{
    auto [code, order] = canonical_order(graph);
    static constexpr char digits[] = "0123456789abcdef";
    const int bits = graph.n() * (graph.n() - 1) / 2;
    const int hex_len = std::max(1, (bits + 3) / 4);
    std::string hex(static_cast<std::size_t>(hex_len), '0');
    for (int i = hex_len - 1; i >= 0; --i) {
        hex[static_cast<std::size_t>(i)] = digits[code & 0xF];
        code >>= 4;
    }
    return "g" + std::to_string(graph.n()) + "-" + hex;
}

std::vector<Graph> all_graphs(int n, bool dedup)
{
    if (n < 1 || n > 7)
        throw ResourceLimitError("all_graphs supports 1 <= n <= 7");
    std::vector<Edge> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            slots.emplace_back(u, v);
    const Mask count = Mask{1} << slots.size();
    std::vector<std::pair<std::string, Graph>> keyed;
    std::set<std::string> seen;
    for (Mask pattern = 0; pattern < count; ++pattern) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((pattern >> i) & 1U)
                edges.push_back(slots[i]);
        Graph g(n, std::move(edges));
        if (!dedup) {
            keyed.emplace_back(graph_key(g), std::move(g));
            continue;
        }
        std::string key = graph_key(g);
        if (seen.insert(key).second)
            keyed.emplace_back(std::move(key), canonical_form(g));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto& [key, g] : keyed)
        out.push_back(std::move(g));
    return out;
}

} // namespace stanley
