#include <gtest/gtest.h>

#include "orl/bitset.hpp"
#include "orl/graph.hpp"
#include "orl/ogf.hpp"
#include "orl/rng.hpp"
#include "test_util.hpp"

using namespace orl;

TEST(Bitset, SetCountAndIterate) {
  Bitset b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.count(), 3u);
  EXPECT_EQ(b.indices(), (std::vector<std::size_t>{0, 64, 129}));
  EXPECT_EQ(b.find_next(0), 64u);
  Bitset c = ~b;
  EXPECT_EQ(c.count(), 127u);
  EXPECT_EQ(c.count_and(b), 0u);
  b.reset_through(64);
  EXPECT_EQ(b.indices(), (std::vector<std::size_t>{129}));
}

TEST(Graph, ComplementOfSingleEdge) {
  auto g = OrderedGraph::from_edges(3, {{0, 1}});
  auto c = complement(g);
  EXPECT_EQ(c.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
}

TEST(Graph, ComplementIsInvolution) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto g = test::random_graph(8, 0.4, s);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Graph, ComplementOfCompleteIsEmpty) {
  auto c = complement(OrderedGraph::complete(5));
  EXPECT_EQ(c.n(), 5u);
  EXPECT_EQ(c.edge_count(), 0u);
}

TEST(Graph, InducedSubgraphRelabels) {
  auto g = test::path_graph(4);
  auto s = induced_subgraph(g, VertexSet{0, 2, 3});
  EXPECT_EQ(s.graph.n(), 3u);
  EXPECT_EQ(s.graph.edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(s.to_host, (std::vector<Vertex>{0, 2, 3}));

  auto all = induced_subgraph(g, VertexSet::range(0, 4));
  EXPECT_EQ(all.graph, g);
  EXPECT_EQ(induced_subgraph(g, VertexSet{}).graph.n(), 0u);
  EXPECT_THROW(induced_subgraph(g, VertexSet{7}), InputError);
}

TEST(Graph, Neighborhoods) {
  auto g = test::path_graph(3);
  EXPECT_EQ(neighborhood(g, VertexSet{1}, NeighborhoodMode::open), (VertexSet{0, 2}));
  EXPECT_EQ(neighborhood(g, VertexSet{1}, NeighborhoodMode::closed), (VertexSet{0, 1, 2}));
  EXPECT_TRUE(neighborhood(g, VertexSet{}, NeighborhoodMode::open).empty());
  EXPECT_TRUE(neighborhood(g, VertexSet{}, NeighborhoodMode::closed).empty());
}

TEST(Graph, ForwardNeighborhood) {
  auto p = test::path_graph(3);
  EXPECT_EQ(forward_neighborhood(p, 0), (VertexSet{1}));
  EXPECT_TRUE(forward_neighborhood(p, 2).empty());
  auto g = OrderedGraph::from_edges(3, {{0, 2}, {1, 2}});
  EXPECT_EQ(forward_neighborhood(g, 1), (VertexSet{2}));
  EXPECT_EQ(forward_neighborhood(OrderedGraph::complete(4), 1), (VertexSet{2, 3}));
}

TEST(Graph, MaxDegree) {
  EXPECT_EQ(max_degree(test::star_graph(4)), 4u);
  EXPECT_EQ(max_degree(OrderedGraph(6)), 0u);
  EXPECT_EQ(max_degree(test::cycle_graph(6)), 2u);
  EXPECT_EQ(max_degree(OrderedGraph(0)), 0u);
}

TEST(Graph, RejectsBadEdges) {
  OrderedGraph g(3);
  EXPECT_THROW(g.add_edge(1, 1), InputError);
  EXPECT_THROW(g.add_edge(0, 3), InputError);
}

TEST(Graph, BipartiteSplit) {
  EXPECT_THROW(BipartiteOrderedGraph::from_split(OrderedGraph::from_edges(4, {{0, 1}}), 2), InputError);
  auto g = OrderedGraph::from_edges(4, {{0, 2}, {1, 3}});
  auto h = BipartiteOrderedGraph::from_split(g, 2);
  EXPECT_EQ(h.a_size(), 2u);
  EXPECT_EQ(h.b_size(), 2u);
  EXPECT_TRUE(h.adjacent(0, 0));
  EXPECT_TRUE(h.adjacent(1, 1));
  EXPECT_FALSE(h.adjacent(0, 1));
  EXPECT_EQ(h.edge_count(), 2u);
}

TEST(Ogf, RoundTrip) {
  auto g = test::random_graph(12, 0.3, 5);
  auto text = ogf::to_string(g, {"hello"});
  EXPECT_EQ(text.rfind("# hello\n", 0), 0u);
  EXPECT_EQ(ogf::parse(text), g);
}

TEST(Ogf, RejectsMalformed) {
  EXPECT_THROW(ogf::parse(""), InputError);
  EXPECT_THROW(ogf::parse("3 1\n1 0\n"), InputError);
  EXPECT_THROW(ogf::parse("3 2\n0 1\n"), InputError);
  EXPECT_THROW(ogf::parse("3 2\n0 1\n0 1\n"), InputError);
  EXPECT_THROW(ogf::parse("3 1\n0 x\n"), InputError);
  EXPECT_THROW(ogf::parse("3 1\n0 1 2\n"), InputError);
  EXPECT_THROW(ogf::read_file("/nonexistent/graph.ogf"), InputError);
  EXPECT_EQ(ogf::parse("# c\n2 1\n  # c2\n0 1\n").edge_count(), 1u);
}

TEST(Rng, DeterministicAndSplit) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
  Rng x = Rng(42).split("x"), y = Rng(42).split("y");
  EXPECT_NE(x.next(), y.next());
  Rng c(1);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(c.below(7), 7u);
}
