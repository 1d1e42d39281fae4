#ifndef BURLING_TEST_HELPERS_HPP
#define BURLING_TEST_HELPERS_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "tree.hpp"

namespace burling::testing {

// Random valid Burling tree with n nodes; deterministic in the seed.
inline BurlingTree random_tree(std::mt19937_64& rng, int n) {
    BurlingTree t;
    t.add_root("n0");
    for (int i = 1; i < n; ++i) {
        int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
        bool leaf = t.nodes[p].children.empty();
        // the first child of a vertex becomes its last-born
        t.add_child(p, "n" + std::to_string(i), leaf);
    }
    // random choose branches for non-last-born non-root vertices
    for (int v = 1; v < n; ++v) {
        if (t.is_lastborn(v)) continue;
        int p = t.nodes[v].parent;
        int lb = t.nodes[p].lastborn;
        if (lb == -1) continue;
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) continue;  // keep empty
        std::vector<int> branch{lb};
        int cur = lb;
        while (!t.nodes[cur].children.empty() &&
               std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
            const auto& ch = t.nodes[cur].children;
            cur = ch[std::uniform_int_distribution<int>(0, (int)ch.size() - 1)(rng)];
            branch.push_back(cur);
        }
        t.nodes[v].choose = branch;
    }
    return t;
}

inline DerivedSelection random_selection(std::mt19937_64& rng, int n, double keep = 0.7) {
    DerivedSelection sel;
    sel.tree = random_tree(rng, n);
    std::bernoulli_distribution pick(keep);
    for (const auto& nd : sel.tree.nodes)
        if (pick(rng)) sel.selected.insert(nd.id);
    return sel;
}

// Random tree whose choose branches descend through last-borns with at most
// one final sidestep, the shape the tree sequence itself produces. (Only the
// final element of a branch may carry its own choose function; the segment
// embedding supports exactly these presentations.)
inline BurlingTree random_tree_tail(std::mt19937_64& rng, int n) {
    BurlingTree t;
    t.add_root("n0");
    for (int i = 1; i < n; ++i) {
        int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
        bool leaf = t.nodes[p].children.empty();
        t.add_child(p, "n" + std::to_string(i), leaf);
    }
    // decide first which vertices will carry a branch, so terminal
    // sidesteps can avoid landing on another choosing vertex
    std::vector<char> chooser(n, 0);
    for (int v = 1; v < n; ++v) {
        if (t.is_lastborn(v)) continue;
        if (t.nodes[t.nodes[v].parent].lastborn == -1) continue;
        chooser[v] = std::uniform_int_distribution<int>(0, 2)(rng) != 0;
    }
    for (int v = 1; v < n; ++v) {
        if (!chooser[v]) continue;
        int lb = t.nodes[t.nodes[v].parent].lastborn;
        std::vector<int> branch{lb};
        int cur = lb;
        // follow last-borns, then optionally one terminal sidestep onto a
        // non-choosing vertex
        while (t.nodes[cur].lastborn != -1 &&
               std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
            cur = t.nodes[cur].lastborn;
            branch.push_back(cur);
        }
        const auto& ch = t.nodes[cur].children;
        if (!ch.empty() && std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
            int side = ch[std::uniform_int_distribution<int>(0, (int)ch.size() - 1)(rng)];
            if (side != t.nodes[cur].lastborn && !chooser[side]) branch.push_back(side);
        }
        t.nodes[v].choose = branch;
    }
    return t;
}

inline DerivedSelection random_selection_tail(std::mt19937_64& rng, int n, double keep = 0.7) {
    DerivedSelection sel;
    sel.tree = random_tree_tail(rng, n);
    std::bernoulli_distribution pick(keep);
    for (const auto& nd : sel.tree.nodes)
        if (pick(rng)) sel.selected.insert(nd.id);
    return sel;
}

}  // namespace burling::testing

#endif
