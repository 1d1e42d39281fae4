#ifndef BURLING_GRAPH_HPP
#define BURLING_GRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace burling {

using VertexId = std::string;
using Edge = std::pair<VertexId, VertexId>;  // normalized: first < second
using Arc = std::pair<VertexId, VertexId>;   // ordered (from, to)

inline Edge make_edge(const VertexId& a, const VertexId& b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Non-oriented graph, no loops.
struct Graph {
    std::set<VertexId> vertices;
    std::set<Edge> edges;

    void add_vertex(const VertexId& v) { vertices.insert(v); }
    void add_edge(const VertexId& a, const VertexId& b);
    bool has_edge(const VertexId& a, const VertexId& b) const {
        return edges.count(make_edge(a, b)) > 0;
    }
    bool operator==(const Graph& o) const = default;
};

// Oriented graph: arcs are ordered pairs of distinct vertices.
struct OrientedGraph {
    std::set<VertexId> vertices;
    std::set<Arc> arcs;

    void add_vertex(const VertexId& v) { vertices.insert(v); }
    void add_arc(const VertexId& from, const VertexId& to);
    bool has_arc(const VertexId& from, const VertexId& to) const {
        return arcs.count({from, to}) > 0;
    }
    bool operator==(const OrientedGraph& o) const = default;
};

// Total color assignment, color indices are non-negative.
using Coloring = std::map<VertexId, int>;

Graph underlying_graph(const OrientedGraph& g);

bool is_triangle_free(const Graph& g);

// Directed cycle of any length >= 1 never occurs in an OrientedGraph
// (arcs join distinct vertices and at most one direction is stored), so this
// detects cycles of length >= 2.
bool has_directed_cycle(const OrientedGraph& g);

Graph induced_subgraph(const Graph& g, const std::set<VertexId>& keep);
OrientedGraph induced_subgraph(const OrientedGraph& g, const std::set<VertexId>& keep);

bool is_proper_coloring(const Graph& g, const Coloring& col);
int distinct_colors(const Coloring& col, const std::vector<VertexId>& verts);

bool graphs_equal_labeled(const Graph& a, const Graph& b);
bool graphs_equal_labeled(const OrientedGraph& a, const OrientedGraph& b);

enum class Tri { Yes, No, Undecided };

// Backtracking isomorphism test with degree pruning; budget counts search
// nodes. Undecided when the budget runs out.
Tri are_isomorphic_small(const Graph& a, const Graph& b, long long budget = 1'000'000);

}  // namespace burling

#endif
