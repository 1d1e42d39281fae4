#include "sequence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace burling {

namespace {

std::string copy_prefix(int i) { return "c" + std::to_string(i) + "."; }

std::string apex_id(int i, int j) { return "x" + std::to_string(i) + ":" + std::to_string(j); }

std::vector<VertexId> with_prefix(const std::string& pre, const std::vector<VertexId>& ids) {
    std::vector<VertexId> out;
    out.reserve(ids.size());
    for (const auto& v : ids) out.push_back(pre + v);
    return out;
}

void check_k(int k) {
    if (k < 1 || k > kSequenceCap)
        throw std::invalid_argument("k out of range (1.." + std::to_string(kSequenceCap) + ")");
}

}  // namespace

SequencePair next_b(const SequencePair& p) {
    SequencePair q;
    q.k = p.k + 1;
    const int s = p.stable_family.size();

    // (i) main copy
    for (const auto& v : p.graph.vertices) q.graph.add_vertex("m." + v);
    for (const auto& [a, b] : p.graph.edges) q.graph.add_edge("m." + a, "m." + b);
    // (ii) one copy per stable set
    for (int i = 0; i < s; ++i) {
        const std::string pre = copy_prefix(i);
        for (const auto& v : p.graph.vertices) q.graph.add_vertex(pre + v);
        for (const auto& [a, b] : p.graph.edges) q.graph.add_edge(pre + a, pre + b);
    }
    // (iii) apex vertices complete to Q
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            const std::string ap = apex_id(i, j);
            q.graph.add_vertex(ap);
            for (const auto& v : p.stable_family[j]) q.graph.add_edge(ap, copy_prefix(i) + v);
        }
    // (v) new family: S u Q and S u {v_{S,Q}}
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            auto su = with_prefix("m.", p.stable_family[i]);
            auto q1 = su;
            auto cq = with_prefix(copy_prefix(i), p.stable_family[j]);
            q1.insert(q1.end(), cq.begin(), cq.end());
            q.stable_family.push_back(q1);
            auto q2 = su;
            q2.push_back(apex_id(i, j));
            q.stable_family.push_back(q2);
        }
    return q;
}

SequencePair burling_sequence(int k) {
    check_k(k);
    SequencePair p;
    p.k = 1;
    p.graph.add_vertex("r");
    p.stable_family = {{"r"}};
    for (int i = 2; i <= k; ++i) p = next_b(p);
    return p;
}

namespace {

// deep copy of src into dst below `attach`, with ids prefixed; the copy's
// root is identified with `attach` (which must already carry the prefixed id)
void graft_copy(BurlingTree& dst, int attach, const BurlingTree& src, const std::string& pre) {
    std::vector<int> image(src.nodes.size(), -1);
    image[src.root] = attach;
    // nodes of src are stored parents-first by construction
    for (int v = 0; v < (int)src.nodes.size(); ++v) {
        if (v == src.root) continue;
        const TreeNode& nd = src.nodes[v];
        int pi = image[nd.parent];
        image[v] = dst.add_child(pi, pre + nd.id, src.nodes[nd.parent].lastborn == v);
    }
    for (int v = 0; v < (int)src.nodes.size(); ++v)
        for (int c : src.nodes[v].choose)
            dst.nodes[image[v]].choose.push_back(image[c]);
}

}  // namespace

TreeSequenceEntry next_t(const TreeSequenceEntry& e) {
    TreeSequenceEntry r;
    r.k = e.k + 1;
    const BurlingTree& T = e.tree;
    const int s = e.principal_set.size();

    // (i) main copy
    BurlingTree& t = r.tree;
    t.add_root("m." + T.nodes[T.root].id);
    graft_copy(t, t.root, T, "m.");

    // (ii) pend l_P to each leaf and put a copy of T on it
    for (int i = 0; i < s; ++i) {
        const auto& branch = e.principal_set[i];
        int leaf = t.idx("m." + branch.back());
        const std::string pre = copy_prefix(i);
        int lp = t.add_child(leaf, pre + T.nodes[T.root].id, true);
        graft_copy(t, lp, T, pre);
        // (iii)+(iv) new leaves l_{P,Q} with choose = Q in the copy
        for (int j = 0; j < s; ++j) {
            int lpq = t.add_child(leaf, apex_id(i, j), false);
            for (const auto& qid : e.principal_set[j])
                t.nodes[lpq].choose.push_back(t.idx(pre + qid));
        }
    }
    // principal branches of the result, aligned with the stable family order
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            auto pu = with_prefix("m.", e.principal_set[i]);
            auto b1 = pu;
            auto cq = with_prefix(copy_prefix(i), e.principal_set[j]);
            b1.insert(b1.end(), cq.begin(), cq.end());
            r.principal_set.push_back(b1);
            auto b2 = pu;
            b2.push_back(apex_id(i, j));
            r.principal_set.push_back(b2);
        }
    require_valid(r.tree);
    return r;
}

TreeSequenceEntry tree_sequence(int k) {
    check_k(k);
    TreeSequenceEntry e;
    e.k = 1;
    e.tree.add_root("r");
    e.principal_set = {{"r"}};
    for (int i = 2; i <= k; ++i) e = next_t(e);
    return e;
}

bool verify_correspondence(int k) {
    SequencePair p = burling_sequence(k);
    TreeSequenceEntry e = tree_sequence(k);
    Graph derived = underlying_graph(fully_derive(e.tree));
    if (!graphs_equal_labeled(derived, p.graph)) return false;
    if (p.stable_family.size() != e.principal_set.size()) return false;
    for (size_t i = 0; i < p.stable_family.size(); ++i) {
        std::set<VertexId> a(p.stable_family[i].begin(), p.stable_family[i].end());
        std::set<VertexId> b(e.principal_set[i].begin(), e.principal_set[i].end());
        if (a != b) return false;
    }
    return true;
}

namespace {

struct WitnessResult {
    int index;                      // position in the level's family order
    std::vector<VertexId> members;  // ids at the current level
};

int family_size(int k) {
    int s = 1;
    for (int i = 2; i <= k; ++i) s = 2 * s * s;
    return s;
}

Coloring strip_prefix(const Coloring& col, const std::string& pre) {
    Coloring out;
    for (const auto& [id, c] : col)
        if (id.rfind(pre, 0) == 0) out[id.substr(pre.size())] = c;
    return out;
}

WitnessResult witness_rec(int k, const Coloring& col) {
    if (k == 1) return {0, {"r"}};
    const int s = family_size(k - 1);
    WitnessResult S = witness_rec(k - 1, strip_prefix(col, "m."));
    const int i = S.index;
    WitnessResult Q = witness_rec(k - 1, strip_prefix(col, copy_prefix(i)));
    const int j = Q.index;

    std::vector<VertexId> su = with_prefix("m.", S.members);
    std::vector<VertexId> cand_q = su;
    auto cq = with_prefix(copy_prefix(i), Q.members);
    cand_q.insert(cand_q.end(), cq.begin(), cq.end());
    std::vector<VertexId> cand_v = su;
    cand_v.push_back(apex_id(i, j));

    int colors_v = distinct_colors(col, cand_v);
    int colors_q = distinct_colors(col, cand_q);
    // ties prefer S u {v_{S,Q}}
    if (colors_v >= colors_q) return {2 * (i * s + j) + 1, cand_v};
    return {2 * (i * s + j) + 0, cand_q};
}

}  // namespace

std::vector<VertexId> witness_stable_set(const SequencePair& p, const Coloring& col) {
    if (!is_proper_coloring(p.graph, col))
        throw std::invalid_argument("witness_stable_set: improper coloring");
    WitnessResult w = witness_rec(p.k, col);
    // sanity: the result is the family member at the reported index
    std::set<VertexId> got(w.members.begin(), w.members.end());
    std::set<VertexId> expect(p.stable_family[w.index].begin(), p.stable_family[w.index].end());
    if (got != expect) throw std::logic_error("witness index mismatch");
    return p.stable_family[w.index];
}

std::optional<std::pair<int, std::map<std::string, std::string>>> find_extension_index(
    const BurlingTree& t, int k_max, long long budget) {
    for (int k = 1; k <= std::min(k_max, kSequenceCap); ++k) {
        TreeSequenceEntry e = tree_sequence(k);
        auto phi = find_extension(t, e.tree, budget);
        if (phi) return std::make_pair(k, *phi);
    }
    return std::nullopt;
}

}  // namespace burling
