#include "abstract.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace burling {

namespace {

bool rel(const std::set<std::pair<std::string, std::string>>& r, const std::string& a,
         const std::string& b) {
    return r.count({a, b}) > 0;
}

bool has_cycle(const std::vector<std::string>& elems,
               const std::set<std::pair<std::string, std::string>>& r) {
    std::map<std::string, int> state;
    std::function<bool(const std::string&)> dfs = [&](const std::string& u) {
        state[u] = 1;
        for (const auto& v : elems) {
            if (!rel(r, u, v)) continue;
            int s = state.count(v) ? state[v] : 0;
            if (s == 1) return true;
            if (s == 0 && dfs(v)) return true;
        }
        state[u] = 2;
        return false;
    };
    for (const auto& v : elems)
        if ((state.count(v) ? state[v] : 0) == 0 && dfs(v)) return true;
    return false;
}

}  // namespace

std::vector<Violation> validate_axioms(const BurlingSetRel& s) {
    std::vector<Violation> out;
    if (s.elements.empty()) {
        out.push_back({"empty-set", "a Burling set is non-empty"});
        return out;
    }
    std::set<std::string> known(s.elements.begin(), s.elements.end());
    for (const auto& r : {s.desc, s.adj})
        for (const auto& [a, b] : r)
            if (!known.count(a) || !known.count(b))
                out.push_back({"unknown-element", a + " " + b});
    if (!out.empty()) return out;

    const auto& E = s.elements;
    // strict partial order laws for desc
    for (const auto& [a, b] : s.desc)
        if (a == b || rel(s.desc, b, a))
            out.push_back({"desc-not-asymmetric", a + " vs " + b});
    for (const auto& [a, b] : s.desc)
        for (const auto& c : E)
            if (rel(s.desc, b, c) && !rel(s.desc, a, c))
                out.push_back({"desc-not-transitive", a + " < " + b + " < " + c});
    // adj has no directed cycles (length one and two included)
    if (has_cycle(E, s.adj)) out.push_back({"adj-cycle", "adj has a directed cycle"});

    auto axiom = [&](const char* name, const std::string& w) { out.push_back({name, w}); };
    for (const auto& x : E)
        for (const auto& y : E)
            for (const auto& z : E) {
                // (i) x<y and x<z  =>  y,z comparable
                if (y != z && y < z && rel(s.desc, x, y) && rel(s.desc, x, z) &&
                    !rel(s.desc, y, z) && !rel(s.desc, z, y))
                    axiom("axiom-i", x + " < " + y + ", " + x + " < " + z);
                // (ii) x->y and x->z  =>  y,z comparable
                if (y != z && y < z && rel(s.adj, x, y) && rel(s.adj, x, z) &&
                    !rel(s.desc, y, z) && !rel(s.desc, z, y))
                    axiom("axiom-ii", x + " -> " + y + ", " + x + " -> " + z);
                // (iii) x->y and x<z  =>  y<z  (z = y rejects x->y with x<y)
                if (rel(s.adj, x, y) && rel(s.desc, x, z) && !rel(s.desc, y, z))
                    axiom("axiom-iii", x + " -> " + y + ", " + x + " < " + z);
                // (iv) x->y and y<z  =>  x->z or x<z  (z = x rejects x->y with y<x)
                if (rel(s.adj, x, y) && rel(s.desc, y, z) && !rel(s.adj, x, z) &&
                    !rel(s.desc, x, z))
                    axiom("axiom-iv", x + " -> " + y + ", " + y + " < " + z);
            }
    return out;
}

void require_valid(const BurlingSetRel& s) {
    auto v = validate_axioms(s);
    if (!v.empty())
        throw std::invalid_argument("invalid Burling set: " + v.front().clause + " (" +
                                    v.front().detail + ")");
}

BurlingSetRel from_tree(const BurlingTree& t) {
    require_valid(t);
    BurlingSetRel s;
    for (const auto& nd : t.nodes) s.elements.push_back(nd.id);
    for (int v = 0; v < (int)t.nodes.size(); ++v) {
        for (int a = t.nodes[v].parent; a != -1; a = t.nodes[a].parent)
            s.desc.insert({t.nodes[v].id, t.nodes[a].id});
        for (int c : t.nodes[v].choose) s.adj.insert({t.nodes[v].id, t.nodes[c].id});
    }
    return s;
}

OrientedGraph gr(const BurlingSetRel& s) {
    require_valid(s);
    OrientedGraph g;
    for (const auto& e : s.elements) g.add_vertex(e);
    for (const auto& [a, b] : s.adj) g.add_arc(a, b);
    return g;
}

std::string minimal_element(const BurlingSetRel& s) {
    std::vector<std::string> mins;
    for (const auto& v : s.elements) {
        bool minimal = true;
        for (const auto& u : s.elements)
            if (u != v && (rel(s.adj, u, v) || rel(s.desc, u, v))) minimal = false;
        if (minimal) mins.push_back(v);
    }
    if (mins.empty()) throw std::logic_error("no minimal element (relation has a cycle)");
    return *std::min_element(mins.begin(), mins.end());
}

std::vector<std::string> chain_of(const BurlingSetRel& s, const std::string& x) {
    std::vector<std::string> targets, ancestors;
    for (const auto& y : s.elements) {
        if (rel(s.adj, x, y)) targets.push_back(y);
        if (rel(s.desc, x, y)) ancestors.push_back(y);
    }
    auto chain_sort = [&](std::vector<std::string>& v, const char* what) {
        std::sort(v.begin(), v.end(), [&](const std::string& a, const std::string& b) {
            if (rel(s.desc, a, b)) return true;
            if (rel(s.desc, b, a)) return false;
            throw std::logic_error(std::string("elements of ") + what +
                                   " are not desc-comparable: " + a + ", " + b);
        });
    };
    if (targets.size() > 1) chain_sort(targets, "[x->]");
    if (ancestors.size() > 1) chain_sort(ancestors, "[x<]");
    if (!targets.empty() && !ancestors.empty() && !rel(s.desc, targets.back(), ancestors.front()))
        throw std::logic_error("chain break between [x->] and [x<]");
    std::vector<std::string> out = targets;
    out.insert(out.end(), ancestors.begin(), ancestors.end());
    // total order check over the whole chain
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (!rel(s.desc, out[i], out[i + 1])) throw std::logic_error("chain not totally ordered");
    return out;
}

namespace {

// Per-family layout: members hang as non-last-born children off an auxiliary
// spine of last-born links, ordered so that every element appears above its
// top adj-target; branches then read straight off the spine.
struct Reconstructor {
    const BurlingSetRel& s;
    BurlingTree t;
    std::map<std::string, int> elem_node;  // element -> node index
    int aux_counter = 0;

    explicit Reconstructor(const BurlingSetRel& s_) : s(s_) {}

    std::string aux_id() {
        for (;;) {
            std::string id = "aux#" + std::to_string(++aux_counter);
            if (!t.index.count(id) && !s.has_elem(id)) return id;
        }
    }

    // closest desc-ancestor (the desc-minimal element of [x<]), "" for roots
    std::string dparent(const std::string& x) const {
        std::string best;
        for (const auto& y : s.elements) {
            if (!rel(s.desc, x, y)) continue;
            if (best.empty() || rel(s.desc, y, best)) best = y;
        }
        return best;
    }

    // desc-maximal target of x, "" when x has none
    std::string anchor(const std::string& x) const {
        std::string best;
        for (const auto& y : s.elements) {
            if (!rel(s.adj, x, y)) continue;
            if (best.empty() || rel(s.desc, best, y)) best = y;
        }
        return best;
    }

    // members of one family ordered so that adj-sources precede their anchors
    std::vector<std::string> family_order(const std::vector<std::string>& members) const {
        std::set<std::string> in_family(members.begin(), members.end());
        std::map<std::string, std::vector<std::string>> sources;  // anchor -> sources
        std::vector<std::string> roots;
        for (const auto& m : members) {
            std::string a = anchor(m);
            if (!a.empty() && in_family.count(a))
                sources[a].push_back(m);
            else
                roots.push_back(m);
        }
        std::sort(roots.begin(), roots.end());
        for (auto& [k, v] : sources) std::sort(v.begin(), v.end());
        // post-order lists sources before their anchor, top of spine first
        std::vector<std::string> order;
        std::function<void(const std::string&)> post = [&](const std::string& m) {
            for (const auto& src : sources[m]) post(src);
            order.push_back(m);
        };
        for (const auto& r : roots) post(r);
        return order;
    }

    void build_family(int parent_node, const std::vector<std::string>& members) {
        if (members.empty()) return;
        auto order = family_order(members);
        int prev = parent_node;
        for (const auto& m : order) {
            int q = t.add_child(prev, aux_id(), true);  // spine node, last-born link
            int mn = t.add_child(q, m, false);
            elem_node[m] = mn;
            prev = q;
        }
        t.add_child(prev, aux_id(), true);  // terminal stub keeps the spine valid
        for (const auto& m : order) {
            std::vector<std::string> kids;
            for (const auto& x : s.elements)
                if (dparent(x) == m) kids.push_back(x);
            build_family(elem_node[m], kids);
        }
    }

    void assign_choose() {
        for (const auto& x : s.elements) {
            std::vector<std::string> targets;
            for (const auto& y : s.elements)
                if (rel(s.adj, x, y)) targets.push_back(y);
            if (targets.empty()) continue;
            // lowest target = desc-minimal
            std::string bottom = targets.front();
            for (const auto& y : targets)
                if (rel(s.desc, y, bottom)) bottom = y;
            int xn = elem_node.at(x);
            int start = t.nodes[t.nodes[xn].parent].lastborn;
            // branch from the last-born sibling of x down to the lowest target
            std::vector<int> path;
            int v = elem_node.at(bottom);
            while (v != -1 && v != start) {
                path.push_back(v);
                v = t.nodes[v].parent;
            }
            if (v != start) throw std::logic_error("reconstruction: branch start mismatch");
            path.push_back(start);
            std::reverse(path.begin(), path.end());
            t.nodes[xn].choose = path;
        }
    }
};

}  // namespace

ReconstructedTree to_burling_tree(const BurlingSetRel& s) {
    require_valid(s);
    ReconstructedTree out;
    if (s.elements.size() == 1) {
        out.tree.add_root(s.elements.front());
        out.embedding[s.elements.front()] = s.elements.front();
        return out;
    }
    Reconstructor rc(s);
    rc.t.add_root(rc.aux_id());
    std::vector<std::string> roots;
    for (const auto& x : s.elements)
        if (rc.dparent(x).empty()) roots.push_back(x);
    rc.build_family(rc.t.root, roots);
    rc.assign_choose();
    require_valid(rc.t);
    out.tree = rc.t;
    for (const auto& x : s.elements) out.embedding[x] = x;
    return out;
}

}  // namespace burling
