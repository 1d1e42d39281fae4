#include "graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace burling {

void Graph::add_edge(const VertexId& a, const VertexId& b) {
    if (a == b) throw std::invalid_argument("self-edge: " + a);
    vertices.insert(a);
    vertices.insert(b);
    edges.insert(make_edge(a, b));
}

void OrientedGraph::add_arc(const VertexId& from, const VertexId& to) {
    if (from == to) throw std::invalid_argument("loop arc: " + from);
    vertices.insert(from);
    vertices.insert(to);
    arcs.insert({from, to});
}

Graph underlying_graph(const OrientedGraph& g) {
    Graph h;
    h.vertices = g.vertices;
    for (const auto& [u, v] : g.arcs) h.edges.insert(make_edge(u, v));
    return h;
}

namespace {

// id -> dense index plus adjacency lists, shared by several algorithms
struct Indexed {
    std::vector<VertexId> ids;
    std::map<VertexId, int> index;
    std::vector<std::vector<int>> adj;
};

Indexed index_graph(const Graph& g) {
    Indexed ix;
    ix.ids.assign(g.vertices.begin(), g.vertices.end());
    for (int i = 0; i < (int)ix.ids.size(); ++i) ix.index[ix.ids[i]] = i;
    ix.adj.resize(ix.ids.size());
    for (const auto& [a, b] : g.edges) {
        int u = ix.index.at(a), v = ix.index.at(b);
        ix.adj[u].push_back(v);
        ix.adj[v].push_back(u);
    }
    for (auto& l : ix.adj) std::sort(l.begin(), l.end());
    return ix;
}

}  // namespace

bool is_triangle_free(const Graph& g) {
    Indexed ix = index_graph(g);
    int n = ix.ids.size();
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v : ix.adj[u]) m[u][v] = 1;
    for (int u = 0; u < n; ++u)
        for (int v : ix.adj[u]) {
            if (v <= u) continue;
            for (int w : ix.adj[v])
                if (w > v && m[u][w]) return false;
        }
    return true;
}

bool has_directed_cycle(const OrientedGraph& g) {
    std::map<VertexId, std::vector<VertexId>> out;
    for (const auto& [u, v] : g.arcs) out[u].push_back(v);
    std::map<VertexId, int> state;  // 0 new, 1 on stack, 2 done
    std::function<bool(const VertexId&)> dfs = [&](const VertexId& u) {
        state[u] = 1;
        for (const auto& v : out[u]) {
            int s = state.count(v) ? state[v] : 0;
            if (s == 1) return true;
            if (s == 0 && dfs(v)) return true;
        }
        state[u] = 2;
        return false;
    };
    for (const auto& v : g.vertices)
        if ((state.count(v) ? state[v] : 0) == 0 && dfs(v)) return true;
    return false;
}

Graph induced_subgraph(const Graph& g, const std::set<VertexId>& keep) {
    for (const auto& v : keep)
        if (!g.vertices.count(v)) throw std::invalid_argument("unknown vertex: " + v);
    Graph h;
    h.vertices = keep;
    for (const auto& e : g.edges)
        if (keep.count(e.first) && keep.count(e.second)) h.edges.insert(e);
    return h;
}

OrientedGraph induced_subgraph(const OrientedGraph& g, const std::set<VertexId>& keep) {
    for (const auto& v : keep)
        if (!g.vertices.count(v)) throw std::invalid_argument("unknown vertex: " + v);
    OrientedGraph h;
    h.vertices = keep;
    for (const auto& a : g.arcs)
        if (keep.count(a.first) && keep.count(a.second)) h.arcs.insert(a);
    return h;
}

bool is_proper_coloring(const Graph& g, const Coloring& col) {
    for (const auto& v : g.vertices)
        if (!col.count(v)) return false;
    for (const auto& [a, b] : g.edges)
        if (col.at(a) == col.at(b)) return false;
    return true;
}

int distinct_colors(const Coloring& col, const std::vector<VertexId>& verts) {
    std::set<int> cs;
    for (const auto& v : verts) cs.insert(col.at(v));
    return (int)cs.size();
}

bool graphs_equal_labeled(const Graph& a, const Graph& b) { return a == b; }
bool graphs_equal_labeled(const OrientedGraph& a, const OrientedGraph& b) { return a == b; }

Tri are_isomorphic_small(const Graph& a, const Graph& b, long long budget) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size())
        return Tri::No;
    Indexed ia = index_graph(a), ib = index_graph(b);
    int n = ia.ids.size();
    if (n == 0) return Tri::Yes;

    std::vector<int> dega(n), degb(n);
    for (int i = 0; i < n; ++i) dega[i] = ia.adj[i].size();
    for (int i = 0; i < n; ++i) degb[i] = ib.adj[i].size();
    {
        auto sa = dega, sb = degb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return Tri::No;
    }

    // order a-vertices by decreasing degree for earlier pruning
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return dega[x] > dega[y]; });

    std::vector<std::vector<char>> ma(n, std::vector<char>(n, 0)), mb = ma;
    for (int u = 0; u < n; ++u)
        for (int v : ia.adj[u]) ma[u][v] = 1;
    for (int u = 0; u < n; ++u)
        for (int v : ib.adj[u]) mb[u][v] = 1;

    std::vector<int> map_ab(n, -1), used(n, 0);
    long long nodes = 0;
    bool exhausted = false;

    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == n) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        int u = order[pos];
        for (int w = 0; w < n; ++w) {
            if (used[w] || degb[w] != dega[u]) continue;
            bool ok = true;
            for (int q = 0; q < pos && ok; ++q) {
                int u2 = order[q];
                if (ma[u][u2] != mb[w][map_ab[u2]]) ok = false;
            }
            if (!ok) continue;
            map_ab[u] = w;
            used[w] = 1;
            if (rec(pos + 1)) return true;
            if (exhausted) return false;
            used[w] = 0;
            map_ab[u] = -1;
        }
        return false;
    };
    if (rec(0)) return Tri::Yes;
    return exhausted ? Tri::Undecided : Tri::No;
}

}  // namespace burling
