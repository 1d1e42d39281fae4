#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coloring.hpp"
#include "graph.hpp"

using namespace burling;

namespace {

Graph cycle(int n) {
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_edge("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
    return g;
}

Graph complete(int n) {
    Graph g;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
    return g;
}

}  // namespace

TEST_CASE("underlying graph of a single arc") {
    OrientedGraph g;
    g.add_arc("a", "b");
    Graph h = underlying_graph(g);
    CHECK(h.edges == std::set<Edge>{{"a", "b"}});

    OrientedGraph empty;
    CHECK(underlying_graph(empty).vertices.empty());
}

TEST_CASE("oriented C4 from the bipartite presentation") {
    // two sources entering the pair {p, b}
    OrientedGraph g;
    g.add_arc("a", "p");
    g.add_arc("a", "b");
    g.add_arc("a2", "p");
    g.add_arc("a2", "b");
    Graph h = underlying_graph(g);
    CHECK(h.edges.size() == 4);
    CHECK(is_triangle_free(h));
    CHECK_FALSE(has_directed_cycle(g));
}

TEST_CASE("triangle detection") {
    CHECK_FALSE(is_triangle_free(complete(3)));
    CHECK(is_triangle_free(cycle(4)));
    CHECK(is_triangle_free(cycle(5)));
}

TEST_CASE("directed cycles") {
    OrientedGraph g;
    g.add_arc("a", "b");
    CHECK_FALSE(has_directed_cycle(g));
    g.add_arc("b", "a");
    CHECK(has_directed_cycle(g));

    OrientedGraph path;
    path.add_arc("a", "b");
    path.add_arc("b", "c");
    path.add_arc("a", "c");
    CHECK_FALSE(has_directed_cycle(path));
}

TEST_CASE("induced subgraph") {
    Graph g = cycle(4);
    CHECK(induced_subgraph(g, g.vertices) == g);
    CHECK(induced_subgraph(g, {}).vertices.empty());
    Graph h = induced_subgraph(g, {"v0", "v1"});
    CHECK(h.edges.size() == 1);
    CHECK_THROWS_AS((void)induced_subgraph(g, {"zz"}), std::invalid_argument);
}

TEST_CASE("chromatic number on small graphs") {
    Graph k1;
    k1.add_vertex("a");
    auto r = chromatic_number(k1);
    CHECK(r.decided);
    CHECK(r.chi == 1);

    r = chromatic_number(cycle(5));
    CHECK(r.decided);
    CHECK(r.chi == 3);

    r = chromatic_number(cycle(6));
    CHECK(r.decided);
    CHECK(r.chi == 2);

    r = chromatic_number(complete(4));
    CHECK(r.decided);
    CHECK(r.chi == 4);
}

TEST_CASE("chromatic search respects its budget") {
    auto r = chromatic_number(complete(9), 3);
    CHECK_FALSE(r.decided);
}

TEST_CASE("k-colorability is monotone under induced subgraphs") {
    Graph g = complete(4);
    Graph h = induced_subgraph(g, {"v0", "v1", "v2"});
    auto rg = chromatic_number(g), rh = chromatic_number(h);
    CHECK(rh.chi <= rg.chi);
}

TEST_CASE("labeled equality vs isomorphism") {
    Graph g = cycle(4);
    CHECK(graphs_equal_labeled(g, g));
    CHECK(are_isomorphic_small(g, g) == Tri::Yes);

    Graph star;  // K_{1,3} has the same size but a different degree sequence
    star.add_edge("c", "x");
    star.add_edge("c", "y");
    star.add_edge("c", "z");
    star.add_vertex("w");
    CHECK_FALSE(graphs_equal_labeled(g, star));
    CHECK(are_isomorphic_small(g, star) == Tri::No);

    Graph relabeled;
    relabeled.add_edge("p", "q");
    relabeled.add_edge("q", "r");
    relabeled.add_edge("r", "s");
    relabeled.add_edge("s", "p");
    CHECK_FALSE(graphs_equal_labeled(g, relabeled));
    CHECK(are_isomorphic_small(g, relabeled) == Tri::Yes);
}

TEST_CASE("isomorphism budget exhaustion is reported") {
    // two large random-ish regular graphs force heavy search under budget 1
    Graph a = cycle(12), b = cycle(12);
    CHECK(are_isomorphic_small(a, b, 1) == Tri::Undecided);
}
