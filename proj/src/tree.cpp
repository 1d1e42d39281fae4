#include "tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace burling {

int BurlingTree::add_root(const std::string& id) {
    if (root != -1) throw std::invalid_argument("tree already has a root");
    if (index.count(id)) throw std::invalid_argument("duplicate node id: " + id);
    TreeNode n;
    n.id = id;
    nodes.push_back(n);
    root = nodes.size() - 1;
    index[id] = root;
    return root;
}

int BurlingTree::add_child(int parent, const std::string& id, bool as_lastborn) {
    if (parent < 0 || parent >= (int)nodes.size())
        throw std::invalid_argument("bad parent index");
    if (index.count(id)) throw std::invalid_argument("duplicate node id: " + id);
    TreeNode n;
    n.id = id;
    n.parent = parent;
    nodes.push_back(n);
    int v = nodes.size() - 1;
    index[id] = v;
    nodes[parent].children.push_back(v);
    if (as_lastborn) nodes[parent].lastborn = v;
    return v;
}

int BurlingTree::idx(const std::string& id) const {
    auto it = index.find(id);
    if (it == index.end()) throw std::invalid_argument("unknown node id: " + id);
    return it->second;
}

int BurlingTree::depth(int v) const {
    int d = 0;
    while (nodes[v].parent != -1) {
        v = nodes[v].parent;
        ++d;
    }
    return d;
}

bool BurlingTree::is_ancestor(int a, int v) const {
    while (v != -1) {
        if (v == a) return true;
        v = nodes[v].parent;
    }
    return false;
}

std::vector<int> BurlingTree::children_lastborn_last(int v) const {
    std::vector<int> out;
    for (int c : nodes[v].children)
        if (c != nodes[v].lastborn) out.push_back(c);
    if (nodes[v].lastborn != -1) out.push_back(nodes[v].lastborn);
    return out;
}

std::string BurlingTree::fresh_id(const std::string& base) {
    for (int n = 1;; ++n) {
        std::string cand = base + "#" + std::to_string(n);
        if (!index.count(cand)) return cand;
    }
}

std::vector<Violation> validate_tree(const BurlingTree& t) {
    std::vector<Violation> out;
    if (t.root < 0 || t.root >= (int)t.nodes.size()) {
        out.push_back({"tree", "missing root"});
        return out;
    }
    int n = t.nodes.size();
    // parent links must reach the root without cycles
    for (int v = 0; v < n; ++v) {
        int steps = 0, u = v;
        while (u != -1 && steps <= n) {
            u = t.nodes[u].parent;
            ++steps;
        }
        if (steps > n) {
            out.push_back({"tree", "parent cycle at node " + t.nodes[v].id});
            return out;
        }
    }
    for (int v = 0; v < n; ++v) {
        const TreeNode& nd = t.nodes[v];
        if (v == t.root) {
            if (nd.parent != -1) out.push_back({"tree", "root has a parent"});
        } else if (nd.parent == -1) {
            out.push_back({"tree", "second root: " + nd.id});
        }
        for (int c : nd.children)
            if (t.nodes[c].parent != v)
                out.push_back({"tree", "child/parent mismatch at " + nd.id});
        if (!nd.children.empty()) {
            if (nd.lastborn == -1)
                out.push_back({"lastborn", "non-leaf without last-born: " + nd.id});
            else if (std::find(nd.children.begin(), nd.children.end(), nd.lastborn) ==
                     nd.children.end())
                out.push_back({"lastborn", "last-born is not a child of " + nd.id});
        } else if (nd.lastborn != -1) {
            out.push_back({"lastborn", "leaf with last-born: " + nd.id});
        }
    }
    for (int v = 0; v < n; ++v) {
        const TreeNode& nd = t.nodes[v];
        bool lb = t.is_lastborn(v);
        if (v == t.root || lb) {
            if (!nd.choose.empty())
                out.push_back({"choose", "choose must be empty at " + nd.id +
                                             (v == t.root ? " (root)" : " (last-born)")});
            continue;
        }
        if (nd.choose.empty()) continue;
        int p = nd.parent;
        int start = t.nodes[p].lastborn;
        if (nd.choose.front() != start)
            out.push_back({"choose", "choose path must start at last-born of parent of " + nd.id});
        for (size_t i = 0; i + 1 < nd.choose.size(); ++i)
            if (t.nodes[nd.choose[i + 1]].parent != nd.choose[i])
                out.push_back({"choose", "choose path of " + nd.id + " is not a branch"});
    }
    return out;
}

void require_valid(const BurlingTree& t) {
    auto v = validate_tree(t);
    if (!v.empty()) throw std::invalid_argument("invalid Burling tree: " + v.front().detail);
}

OrientedGraph fully_derive(const BurlingTree& t) {
    require_valid(t);
    OrientedGraph g;
    for (const auto& nd : t.nodes) g.add_vertex(nd.id);
    for (const auto& nd : t.nodes)
        for (int v : nd.choose) g.add_arc(nd.id, t.nodes[v].id);
    return g;
}

OrientedGraph derive(const DerivedSelection& sel) {
    for (const auto& id : sel.selected)
        if (!sel.tree.has(id))
            throw std::invalid_argument("selection not a subset of nodes: " + id);
    return induced_subgraph(fully_derive(sel.tree), sel.selected);
}

std::set<VertexId> top_left_vertices(const DerivedSelection& sel) {
    if (sel.selected.empty()) throw std::invalid_argument("empty selection");
    const BurlingTree& t = sel.tree;
    int mind = 1 << 30;
    std::vector<int> vs;
    for (const auto& id : sel.selected) {
        int v = t.idx(id);
        int d = t.depth(v);
        if (d < mind) {
            mind = d;
            vs.clear();
        }
        if (d == mind) vs.push_back(v);
    }
    std::set<VertexId> out;
    for (int v : vs)
        if (!t.is_lastborn(v) || vs.size() == 1) out.insert(t.nodes[v].id);
    return out;
}

namespace {

// rebuilds a tree from scratch preserving ids/structure (used by transforms)
BurlingTree copy_tree(const BurlingTree& t) { return t; }

void insert_before_in_choose(BurlingTree& t, int target, int inserted) {
    for (auto& nd : t.nodes) {
        auto it = std::find(nd.choose.begin(), nd.choose.end(), target);
        if (it != nd.choose.end()) nd.choose.insert(it, inserted);
    }
}

}  // namespace

BurlingTree slide(const BurlingTree& t, const std::string& b_id, const std::string& u_id) {
    require_valid(t);
    BurlingTree r = copy_tree(t);
    int u = r.idx(u_id);
    if (r.nodes[u].lastborn == -1) throw std::invalid_argument("slide: u has no last-born");
    int v = r.nodes[u].lastborn;
    int b = r.idx(b_id);
    if (r.nodes[b].parent != u || b == v)
        throw std::invalid_argument("slide: b must be a non-last-born child of u");

    TreeNode w;
    w.id = r.fresh_id(u_id);
    w.parent = u;
    r.nodes.push_back(w);
    int wi = r.nodes.size() - 1;
    r.index[r.nodes[wi].id] = wi;

    auto& uc = r.nodes[u].children;
    uc.erase(std::remove(uc.begin(), uc.end(), v), uc.end());
    uc.erase(std::remove(uc.begin(), uc.end(), b), uc.end());
    uc.push_back(wi);
    r.nodes[u].lastborn = wi;

    r.nodes[wi].children = {b, v};
    r.nodes[wi].lastborn = v;
    r.nodes[b].parent = wi;
    r.nodes[v].parent = wi;

    // c'(z) = c(z) u {w} when v or b lies on the branch of z; b itself keeps
    // its branch, which still starts at the moved last-born v
    for (int z = 0; z < (int)r.nodes.size(); ++z) {
        if (z == b) continue;
        auto& c = r.nodes[z].choose;
        auto it = std::find(c.begin(), c.end(), v);
        if (it == c.end()) it = std::find(c.begin(), c.end(), b);
        if (it != c.end()) c.insert(it, wi);
    }
    require_valid(r);
    return r;
}

DerivedSelection normalize(const DerivedSelection& sel) {
    require_valid(sel.tree);
    DerivedSelection out{sel.tree, sel.selected};
    BurlingTree& t = out.tree;

    // first transformation: fresh root above a selected root
    if (out.selected.count(t.nodes[t.root].id)) {
        int old = t.root;
        TreeNode r;
        r.id = t.fresh_id(t.nodes[old].id);
        t.nodes.push_back(r);
        int ri = t.nodes.size() - 1;
        t.index[t.nodes[ri].id] = ri;
        t.nodes[ri].children = {old};
        t.nodes[ri].lastborn = old;
        t.nodes[old].parent = ri;
        t.root = ri;
    }

    // second transformation: pad single-child vertices with a fresh leaf
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < (int)t.nodes.size(); ++v) {
            if (t.nodes[v].children.size() == 1) {
                t.add_child(v, t.fresh_id(t.nodes[v].id), false);
                changed = true;
            }
        }
    }

    // third transformation: slide extra children until all vertices are binary
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < (int)t.nodes.size(); ++v) {
            if (t.nodes[v].children.size() >= 3) {
                int b = -1;
                for (int c : t.nodes[v].children)
                    if (c != t.nodes[v].lastborn) {
                        b = c;
                        break;
                    }
                BurlingTree slid = slide(t, t.nodes[b].id, t.nodes[v].id);
                t = slid;
                changed = true;
                break;
            }
        }
    }

    // fourth transformation: turn selected last-borns into non-last-borns
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < (int)t.nodes.size(); ++v) {
            if (!t.is_lastborn(v) || !out.selected.count(t.nodes[v].id)) continue;
            int u = t.nodes[v].parent;
            TreeNode w;
            w.id = t.fresh_id(t.nodes[u].id);
            t.nodes.push_back(w);
            int wi = t.nodes.size() - 1;
            t.index[t.nodes[wi].id] = wi;
            int xi = -1;
            {
                TreeNode x;
                x.id = t.fresh_id(t.nodes[wi].id);
                t.nodes.push_back(x);
                xi = t.nodes.size() - 1;
                t.index[t.nodes[xi].id] = xi;
            }
            auto& uc = t.nodes[u].children;
            std::replace(uc.begin(), uc.end(), v, wi);
            t.nodes[u].lastborn = wi;
            t.nodes[wi].parent = u;
            t.nodes[wi].children = {v, xi};
            t.nodes[wi].lastborn = xi;
            t.nodes[v].parent = wi;
            t.nodes[xi].parent = wi;
            insert_before_in_choose(t, v, wi);
            changed = true;
            break;
        }
    }

    require_valid(t);
    return out;
}

namespace {

void dfs_number(const BurlingTree& t, int v, bool lastborn_first, long long& counter,
                std::map<VertexId, long long>& out) {
    out[t.nodes[v].id] = ++counter;
    std::vector<int> order;
    const TreeNode& nd = t.nodes[v];
    if (lastborn_first) {
        if (nd.lastborn != -1) order.push_back(nd.lastborn);
        for (int c : nd.children)
            if (c != nd.lastborn) order.push_back(c);
    } else {
        for (int c : nd.children)
            if (c != nd.lastborn) order.push_back(c);
        if (nd.lastborn != -1) order.push_back(nd.lastborn);
    }
    for (int c : order) dfs_number(t, c, lastborn_first, counter, out);
}

}  // namespace

std::map<VertexId, long long> dfs_lastborn_numbering(const BurlingTree& t) {
    require_valid(t);
    std::map<VertexId, long long> f;
    long long counter = 0;
    dfs_number(t, t.root, true, counter, f);
    return f;
}

ScorePair score_antiscore(const BurlingTree& t) {
    require_valid(t);
    ScorePair sp;
    {
        auto f = dfs_lastborn_numbering(t);
        for (auto& [id, x] : f) sp.score[id] = -x;
    }
    {
        std::map<VertexId, long long> f;
        long long counter = 0;
        dfs_number(t, t.root, false, counter, f);
        for (auto& [id, x] : f) sp.antiscore[id] = -x;
    }
    return sp;
}

bool is_extension(const BurlingTree& t, const BurlingTree& tp,
                  const std::map<std::string, std::string>& phi) {
    // total and injective
    std::set<std::string> image;
    for (const auto& nd : t.nodes) {
        auto it = phi.find(nd.id);
        if (it == phi.end() || !tp.has(it->second)) return false;
        if (!image.insert(it->second).second) return false;
    }
    auto ph = [&](int v) { return tp.idx(phi.at(t.nodes[v].id)); };
    // (i) root to root
    if (ph(t.root) != tp.root) return false;
    // (ii) ancestors preserved
    for (int v = 0; v < (int)t.nodes.size(); ++v)
        for (int a = t.nodes[v].parent; a != -1; a = t.nodes[a].parent)
            if (!tp.is_ancestor(ph(a), ph(v))) return false;
    // (iii) last-borns preserved
    for (int v = 0; v < (int)t.nodes.size(); ++v)
        if (t.is_lastborn(v) && !tp.is_lastborn(ph(v))) return false;
    // (iv) phi(c(v)) = c'(phi(v)) restricted to the image
    for (int v = 0; v < (int)t.nodes.size(); ++v) {
        std::set<int> lhs;
        for (int x : t.nodes[v].choose) lhs.insert(ph(x));
        std::set<int> rhs;
        for (int y : tp.nodes[ph(v)].choose)
            if (image.count(tp.nodes[y].id)) rhs.insert(y);
        if (lhs != rhs) return false;
    }
    return true;
}

std::optional<std::map<std::string, std::string>> find_extension(const BurlingTree& t,
                                                                 const BurlingTree& tp,
                                                                 long long budget) {
    require_valid(t);
    require_valid(tp);
    int n = t.nodes.size(), m = tp.nodes.size();
    if (n > m) return std::nullopt;

    // BFS order of t so parents are assigned before children
    std::vector<int> order;
    {
        std::vector<int> q{t.root};
        for (size_t i = 0; i < q.size(); ++i) {
            order.push_back(q[i]);
            for (int c : t.nodes[q[i]].children) q.push_back(c);
        }
    }
    std::vector<int> assign(n, -1);
    std::vector<char> used(m, 0);
    long long nodes = 0;
    bool exhausted = false;

    // choose-membership matrices for incremental pruning
    auto in_choose = [](const BurlingTree& tr, int u, int v) {
        const auto& c = tr.nodes[u].choose;
        return std::find(c.begin(), c.end(), v) != c.end();
    };

    std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
        if (pos == order.size()) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        int v = order[pos];
        std::vector<int> cands;
        if (v == t.root) {
            cands.push_back(tp.root);
        } else {
            int pimg = assign[t.nodes[v].parent];
            // proper descendants of the parent's image, in index order
            for (int w = 0; w < m; ++w)
                if (!used[w] && w != pimg && tp.is_ancestor(pimg, w)) cands.push_back(w);
        }
        for (int w : cands) {
            if (t.is_lastborn(v) && !tp.is_lastborn(w)) continue;
            bool ok = true;
            for (size_t q = 0; q < pos && ok; ++q) {
                int u = order[q], wu = assign[u];
                if (in_choose(t, u, v) != in_choose(tp, wu, w)) ok = false;
                if (ok && in_choose(t, v, u) != in_choose(tp, w, wu)) ok = false;
            }
            if (!ok) continue;
            assign[v] = w;
            used[w] = 1;
            if (rec(pos + 1)) return true;
            used[w] = 0;
            assign[v] = -1;
            if (exhausted) return false;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;

    std::map<std::string, std::string> phi;
    for (int v = 0; v < n; ++v) phi[t.nodes[v].id] = tp.nodes[assign[v]].id;
    if (!is_extension(t, tp, phi)) return std::nullopt;
    return phi;
}

}  // namespace burling
