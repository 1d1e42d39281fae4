#ifndef BURLING_TREE_HPP
#define BURLING_TREE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"

namespace burling {

struct TreeNode {
    std::string id;
    int parent = -1;            // node index, -1 at the root
    std::vector<int> children;  // insertion order
    int lastborn = -1;          // index of the last-born child, -1 for leaves
    std::vector<int> choose;    // branch vertex indexes, top-down; empty allowed
};

// Rooted tree with last-born map and choose function (T, r, l, c).
struct BurlingTree {
    std::vector<TreeNode> nodes;
    int root = -1;
    std::map<std::string, int> index;

    int add_root(const std::string& id);
    // Appends a child; when as_lastborn is set the child becomes l(parent).
    int add_child(int parent, const std::string& id, bool as_lastborn);
    int idx(const std::string& id) const;
    bool has(const std::string& id) const { return index.count(id) > 0; }
    const TreeNode& node(const std::string& id) const { return nodes[idx(id)]; }

    bool is_lastborn(int v) const {
        int p = nodes[v].parent;
        return p >= 0 && nodes[p].lastborn == v;
    }
    int depth(int v) const;
    bool is_ancestor(int a, int v) const;  // a == v counts
    // non-last-borns in insertion order, last-born last
    std::vector<int> children_lastborn_last(int v) const;
    std::string fresh_id(const std::string& base);
};

struct DerivedSelection {
    BurlingTree tree;
    std::set<VertexId> selected;
};

struct Violation {
    std::string clause;
    std::string detail;
};

std::vector<Violation> validate_tree(const BurlingTree& t);
void require_valid(const BurlingTree& t);

OrientedGraph fully_derive(const BurlingTree& t);
OrientedGraph derive(const DerivedSelection& sel);

std::set<VertexId> top_left_vertices(const DerivedSelection& sel);

// Sliding b into the edge (u, l(u)); b must be a non-last-born child of u.
BurlingTree slide(const BurlingTree& t, const std::string& b, const std::string& u);

// Lemma-style normalization: root unselected, binary non-leaves, no selected
// last-born; the derived oriented graph on the selection is preserved.
DerivedSelection normalize(const DerivedSelection& sel);

struct ScorePair {
    std::map<VertexId, long long> score;
    std::map<VertexId, long long> antiscore;
};

// DFS numbering with priority to last-borns, root gets 1 (also the interval
// numbering used by the box lifting).
std::map<VertexId, long long> dfs_lastborn_numbering(const BurlingTree& t);

// score = -(DFS numbering, last-borns first); antiscore = -(DFS numbering,
// non-last-borns first). Both orderings satisfy: u proper descendant of v
// => score(u) < score(v) and antiscore(u) < antiscore(v); arc (u,v) =>
// score(u) < score(v) and antiscore(u) > antiscore(v).
ScorePair score_antiscore(const BurlingTree& t);

bool is_extension(const BurlingTree& t, const BurlingTree& tp,
                  const std::map<std::string, std::string>& phi);

// Backtracking search for an extension injection of t into tp.
std::optional<std::map<std::string, std::string>> find_extension(
    const BurlingTree& t, const BurlingTree& tp, long long budget = 5'000'000);

}  // namespace burling

#endif
