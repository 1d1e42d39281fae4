#include "coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace burling {

namespace {

struct Csp {
    int n = 0, k = 0;
    std::vector<std::vector<int>> adj;
    std::vector<uint64_t> avail;  // bitmask of usable colors per vertex
    std::vector<int> color;       // -1 while unassigned
    long long budget = 0, nodes = 0;
    bool exhausted = false;

    int popcount(uint64_t m) const { return __builtin_popcountll(m); }

    // assign and forward-check; trail records vertices whose masks changed
    bool assign(int v, int c, std::vector<std::pair<int, uint64_t>>& trail) {
        color[v] = c;
        for (int u : adj[v]) {
            if (color[u] != -1) continue;
            uint64_t m = avail[u];
            if (m & (1ull << c)) {
                trail.push_back({u, m});
                avail[u] = m & ~(1ull << c);
                if (avail[u] == 0) return false;
            }
        }
        return true;
    }

    void undo(int v, const std::vector<std::pair<int, uint64_t>>& trail) {
        color[v] = -1;
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) avail[it->first] = it->second;
    }

    bool solve(int assigned) {
        if (assigned == n) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        // MRV: fewest available colors; ties by degree then index
        int best = -1, bestCnt = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            int c = popcount(avail[v]);
            if (c < bestCnt || (c == bestCnt && best != -1 && adj[v].size() > adj[best].size())) {
                best = v;
                bestCnt = c;
            }
            if (bestCnt == 1) break;
        }
        int v = best;
        // symmetry breaking: a fresh color index may be opened only once
        int maxUsed = -1;
        for (int u = 0; u < n; ++u)
            if (color[u] > maxUsed) maxUsed = color[u];
        uint64_t m = avail[v];
        while (m) {
            int c = __builtin_ctzll(m);
            m &= m - 1;
            if (c > maxUsed + 1) break;
            std::vector<std::pair<int, uint64_t>> trail;
            if (assign(v, c, trail) && solve(assigned + 1)) return true;
            undo(v, trail);
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

Tri k_colorable(const Graph& g, int k, long long budget, Coloring* witness,
                long long* nodes_used) {
    if (k < 1) return g.vertices.empty() ? Tri::Yes : Tri::No;
    if (k > 62) k = 62;  // more colors than any desk-scale instance needs
    std::vector<VertexId> ids(g.vertices.begin(), g.vertices.end());
    std::map<VertexId, int> index;
    for (int i = 0; i < (int)ids.size(); ++i) index[ids[i]] = i;

    Csp csp;
    csp.n = ids.size();
    csp.k = k;
    csp.adj.resize(csp.n);
    for (const auto& [a, b] : g.edges) {
        csp.adj[index[a]].push_back(index[b]);
        csp.adj[index[b]].push_back(index[a]);
    }
    csp.avail.assign(csp.n, (k >= 64 ? ~0ull : (1ull << k) - 1));
    csp.color.assign(csp.n, -1);
    csp.budget = budget;

    bool found = csp.n == 0 ? true : csp.solve(0);
    if (nodes_used) *nodes_used = csp.nodes;
    if (found) {
        if (witness) {
            witness->clear();
            for (int i = 0; i < csp.n; ++i) (*witness)[ids[i]] = csp.color[i];
        }
        return Tri::Yes;
    }
    return csp.exhausted ? Tri::Undecided : Tri::No;
}

ChromaticResult chromatic_number(const Graph& g, long long budget) {
    ChromaticResult r;
    if (g.vertices.empty()) {
        r.decided = true;
        r.chi = 0;
        return r;
    }
    long long remaining = budget;
    for (int k = 1; k <= (int)g.vertices.size(); ++k) {
        long long used = 0;
        Tri t = k_colorable(g, k, remaining, nullptr, &used);
        r.nodes_used += used;
        remaining -= used;
        if (t == Tri::Yes) {
            r.decided = true;
            r.chi = k;
            return r;
        }
        if (t == Tri::Undecided || remaining <= 0) return r;  // undecided at budget
        r.best_lower = k + 1;
    }
    return r;
}

}  // namespace burling
