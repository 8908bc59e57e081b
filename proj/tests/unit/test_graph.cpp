#include "stanley/error.hpp"
#include "stanley/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace stanley;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]);
    return Graph(g.n(), edges);
}

Graph random_graph(std::mt19937_64& rng, int n)
{
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() % 2)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Isomorphism by trying every bijection; only for small n.
bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.n() != b.n() || a.edges().size() != b.edges().size())
        return false;
    std::vector<int> perm(static_cast<std::size_t>(a.n()));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (relabel(a, perm) == b)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST(Graph, NormalizesEdges)
{
    const Graph g(4, {{3, 1}, {2, 4}, {1, 2}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}}));
    EXPECT_TRUE(g.adjacent(3, 1));
    EXPECT_FALSE(g.adjacent(3, 4));
    EXPECT_EQ(g.neighbours(1), 0b110U);
}

TEST(Graph, RejectsMalformedInput)
{
    EXPECT_THROW(Graph(3, {{1, 1}}), PreconditionError);
    EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), PreconditionError);
    EXPECT_THROW(Graph(3, {{1, 4}}), PreconditionError);
    EXPECT_THROW(Graph(-1, {}), PreconditionError);
}

TEST(Graph, Families)
{
    EXPECT_TRUE(make_graph(GraphFamily::complete, 5).is_complete());
    EXPECT_EQ(make_graph(GraphFamily::complete, 5).edges().size(), 10U);
    EXPECT_EQ(make_graph(GraphFamily::cycle, 4).edges(), (std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
    EXPECT_EQ(make_graph(GraphFamily::path, 5).edges().size(), 4U);
    EXPECT_TRUE(make_graph(GraphFamily::discrete, 3).edges().empty());
    EXPECT_TRUE(make_graph(GraphFamily::discrete, 1).is_complete());
    EXPECT_THROW(make_graph(GraphFamily::cycle, 2), PreconditionError);
    EXPECT_EQ(parse_graph_family("path"), GraphFamily::path);
    EXPECT_EQ(parse_graph_family("tree"), std::nullopt);
    EXPECT_EQ(to_string(GraphFamily::discrete), "discrete");
}

TEST(CanonicalForm, InvariantUnderRelabelling)
{
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = random_graph(rng, n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(g, perm);
        EXPECT_EQ(canonical_form(g), canonical_form(h));
        EXPECT_EQ(graph_key(g), graph_key(h));
        EXPECT_TRUE(isomorphic(g, canonical_form(g)) || n > 7);
    }
}

TEST(CanonicalForm, SeparatesNonIsomorphicGraphs)
{
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Graph a = random_graph(rng, n), b = random_graph(rng, n);
        EXPECT_EQ(graph_key(a) == graph_key(b), isomorphic(a, b));
    }
}

TEST(CanonicalForm, VertexLimit)
{
    EXPECT_NO_THROW(graph_key(make_graph(GraphFamily::path, kMaxCanonicalVertices)));
    EXPECT_THROW(graph_key(make_graph(GraphFamily::path, kMaxCanonicalVertices + 1)), ResourceLimitError);
}

TEST(AllGraphs, CountsOfUnlabelledGraphs)
{
    // Number of graphs on n unlabelled vertices, n = 1..6.
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        const auto graphs = all_graphs(n);
        EXPECT_EQ(graphs.size(), expected[static_cast<std::size_t>(n - 1)]) << "n=" << n;
        std::set<std::string> keys;
        for (const auto& g : graphs)
            keys.insert(graph_key(g));
        EXPECT_EQ(keys.size(), graphs.size());
        EXPECT_TRUE(std::is_sorted(graphs.begin(), graphs.end(),
                                   [](const Graph& a, const Graph& b) { return graph_key(a) < graph_key(b); }));
    }
    EXPECT_EQ(all_graphs(4, false).size(), 64U);
    EXPECT_THROW(all_graphs(8), ResourceLimitError);
}
