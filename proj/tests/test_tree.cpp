#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abstract.hpp"
#include "helpers.hpp"
#include "sequence.hpp"
#include "tree.hpp"

using namespace burling;
using burling::testing::random_selection;
using burling::testing::random_tree;

namespace {

// the square presentation: c(a) = c(a2) = {p, b}
DerivedSelection square_tree() {
    DerivedSelection sel;
    BurlingTree& t = sel.tree;
    int r = t.add_root("r");
    int p = t.add_child(r, "p", true);
    t.add_child(r, "a", false);
    t.add_child(r, "a2", false);
    int b = t.add_child(p, "b", true);
    t.nodes[t.idx("a")].choose = {p, b};
    t.nodes[t.idx("a2")].choose = {p, b};
    sel.selected = {"a", "a2", "p", "b"};
    return sel;
}

// six-cycle with shadow spine: selected {a, a2, x, w, y, m}
DerivedSelection c6_tree() {
    DerivedSelection sel;
    BurlingTree& t = sel.tree;
    int r = t.add_root("r");
    int s = t.add_child(r, "s", true);
    t.add_child(r, "a", false);
    t.add_child(r, "a2", false);
    int x = t.add_child(s, "x", true);
    int n = t.add_child(x, "n", true);
    int w = t.add_child(x, "w", false);
    int y = t.add_child(x, "y", false);
    int m = t.add_child(n, "m", true);
    t.nodes[t.idx("a")].choose = {s, x, w};
    t.nodes[t.idx("a2")].choose = {s, x, y};
    t.nodes[w].choose = {n, m};
    t.nodes[y].choose = {n, m};
    sel.selected = {"a", "a2", "x", "w", "y", "m"};
    return sel;
}

}  // namespace

TEST_CASE("validate accepts the square tree and a single node") {
    BurlingTree one;
    one.add_root("only");
    CHECK(validate_tree(one).empty());
    CHECK(validate_tree(square_tree().tree).empty());
}

TEST_CASE("validate rejects a choose path that skips the last-born") {
    DerivedSelection sel = square_tree();
    BurlingTree t = sel.tree;
    // make a's branch start at its sibling a2 instead of the last-born p
    t.nodes[t.idx("a")].choose = {t.idx("a2")};
    auto v = validate_tree(t);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().clause == "choose");
}

TEST_CASE("fully derived graph of the square tree is an oriented C4") {
    OrientedGraph g = fully_derive(square_tree().tree);
    CHECK(g.vertices.size() == 5);
    CHECK(g.arcs == std::set<Arc>{{"a", "p"}, {"a", "b"}, {"a2", "p"}, {"a2", "b"}});

    BurlingTree one;
    one.add_root("only");
    OrientedGraph h = fully_derive(one);
    CHECK(h.vertices.size() == 1);
    CHECK(h.arcs.empty());
}

TEST_CASE("derive restricts to the selection") {
    DerivedSelection sel = square_tree();
    OrientedGraph g = derive(sel);
    CHECK(g.vertices.size() == 4);
    CHECK(underlying_graph(g).edges.size() == 4);

    sel.selected.clear();
    CHECK(derive(sel).vertices.empty());

    DerivedSelection all = square_tree();
    all.selected = {"r", "p", "b", "a", "a2"};
    CHECK(derive(all) == fully_derive(all.tree));
}

TEST_CASE("the c6 presentation really is a six-cycle") {
    OrientedGraph g = derive(c6_tree());
    Graph h = underlying_graph(g);
    CHECK(h.vertices.size() == 6);
    CHECK(h.edges.size() == 6);
    for (const auto& v : h.vertices) {
        int deg = 0;
        for (const auto& e : h.edges) deg += (e.first == v || e.second == v);
        CHECK(deg == 2);
    }
    CHECK(is_triangle_free(h));
    CHECK_FALSE(has_directed_cycle(g));
}

TEST_CASE("top-left vertices of the square") {
    DerivedSelection sel = square_tree();
    auto tl = top_left_vertices(sel);
    CHECK(tl == std::set<VertexId>{"a", "a2"});

    DerivedSelection single = square_tree();
    single.selected = {"b"};
    CHECK(top_left_vertices(single) == std::set<VertexId>{"b"});

    DerivedSelection none = square_tree();
    none.selected = {};
    CHECK_THROWS_AS((void)top_left_vertices(none), std::invalid_argument);
}

TEST_CASE("top-left vertices are sources with stable neighborhoods") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 60; ++it) {
        DerivedSelection sel = random_selection(rng, 18);
        if (sel.selected.empty()) continue;
        OrientedGraph g = derive(sel);
        Graph h = underlying_graph(g);
        for (const auto& v : top_left_vertices(sel)) {
            std::set<VertexId> nbrs;
            for (const auto& [u, w] : g.arcs) {
                CHECK(w != v);  // a source has no in-arcs
                if (u == v) nbrs.insert(w);
            }
            for (const auto& x : nbrs)
                for (const auto& y : nbrs)
                    if (x < y) CHECK_FALSE(h.has_edge(x, y));
        }
    }
}

TEST_CASE("derived graphs have no directed cycles and no triangles") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 80; ++it) {
        BurlingTree t = random_tree(rng, 20);
        OrientedGraph g = fully_derive(t);
        CHECK_FALSE(has_directed_cycle(g));
        CHECK(is_triangle_free(underlying_graph(g)));
    }
}

TEST_CASE("branches restricted to the selection are stable sets") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 40; ++it) {
        DerivedSelection sel = random_selection(rng, 16);
        Graph h = underlying_graph(derive(sel));
        const BurlingTree& t = sel.tree;
        // every root-to-leaf path
        for (int v = 0; v < (int)t.nodes.size(); ++v) {
            if (!t.nodes[v].children.empty()) continue;
            std::vector<VertexId> path;
            for (int u = v; u != -1; u = t.nodes[u].parent)
                if (sel.selected.count(t.nodes[u].id)) path.push_back(t.nodes[u].id);
            for (size_t i = 0; i < path.size(); ++i)
                for (size_t j = i + 1; j < path.size(); ++j)
                    CHECK_FALSE(h.has_edge(path[i], path[j]));
        }
    }
}

TEST_CASE("slide keeps the derived graph and reshapes the tree") {
    // u with children {v = lastborn, a, b}; after slide(b, u): {a, w}
    BurlingTree t;
    int u = t.add_root("u");
    t.add_child(u, "v", true);
    t.add_child(u, "a", false);
    t.add_child(u, "b", false);
    t.nodes[t.idx("a")].choose = {t.idx("v")};
    t.nodes[t.idx("b")].choose = {t.idx("v")};

    BurlingTree t2 = slide(t, "b", "u");
    CHECK(t2.nodes.size() == 5);
    CHECK(t2.nodes[t2.idx("u")].children.size() == 2);
    CHECK(validate_tree(t2).empty());

    DerivedSelection before{t, {"a", "b", "v"}};
    DerivedSelection after{t2, {"a", "b", "v"}};
    CHECK(derive(before) == derive(after));

    // a 3-node tree grows to 4 nodes
    BurlingTree small;
    int r = small.add_root("r");
    small.add_child(r, "lb", true);
    small.add_child(r, "b", false);
    BurlingTree grown = slide(small, "b", "r");
    CHECK(grown.nodes.size() == 4);

    CHECK_THROWS_AS((void)slide(small, "lb", "r"), std::invalid_argument);
}

TEST_CASE("normalize establishes the three properties and keeps the graph") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 60; ++it) {
        DerivedSelection sel = random_selection(rng, 14);
        DerivedSelection norm = normalize(sel);
        CHECK(validate_tree(norm.tree).empty());
        // (i) root unselected
        CHECK_FALSE(norm.selected.count(norm.tree.nodes[norm.tree.root].id));
        for (int v = 0; v < (int)norm.tree.nodes.size(); ++v) {
            // (ii) binary non-leaves
            size_t c = norm.tree.nodes[v].children.size();
            CHECK((c == 0 || c == 2));
            // (iii) no selected last-born
            if (norm.tree.is_lastborn(v))
                CHECK_FALSE(norm.selected.count(norm.tree.nodes[v].id));
        }
        CHECK(derive(norm) == derive(sel));
        // idempotent on the contract
        DerivedSelection again = normalize(norm);
        CHECK(derive(again) == derive(sel));
    }
}

TEST_CASE("normalize lifts a selected root") {
    DerivedSelection sel;
    sel.tree.add_root("r");
    sel.selected = {"r"};
    DerivedSelection norm = normalize(sel);
    CHECK(norm.tree.nodes.size() > 1);
    CHECK_FALSE(norm.selected.count(norm.tree.nodes[norm.tree.root].id));
    CHECK(derive(norm) == derive(sel));
}

TEST_CASE("score and antiscore orderings") {
    BurlingTree one;
    one.add_root("only");
    ScorePair sp = score_antiscore(one);
    CHECK(sp.score["only"] == -1);
    CHECK(sp.antiscore["only"] == -1);

    std::mt19937_64 rng(19);
    for (int it = 0; it < 60; ++it) {
        BurlingTree t = random_tree(rng, 15);
        ScorePair s = score_antiscore(t);
        // proper descendant: both increase upward
        for (int v = 0; v < (int)t.nodes.size(); ++v)
            for (int a = t.nodes[v].parent; a != -1; a = t.nodes[a].parent) {
                CHECK(s.score[t.nodes[v].id] < s.score[t.nodes[a].id]);
                CHECK(s.antiscore[t.nodes[v].id] < s.antiscore[t.nodes[a].id]);
            }
        // arcs: score increases, antiscore decreases
        for (const auto& [u, v] : fully_derive(t).arcs) {
            CHECK(s.score[u] < s.score[v]);
            CHECK(s.antiscore[u] > s.antiscore[v]);
        }
    }
}

TEST_CASE("extension recognition") {
    TreeSequenceEntry t2 = tree_sequence(2);
    std::map<std::string, std::string> id;
    for (const auto& n : t2.tree.nodes) id[n.id] = n.id;
    CHECK(is_extension(t2.tree, t2.tree, id));

    // 3-node tree with c(u) = {lastborn}: T_2 extends it
    BurlingTree small;
    int r = small.add_root("sr");
    small.add_child(r, "slb", true);
    small.add_child(r, "su", false);
    small.nodes[small.idx("su")].choose = {small.idx("slb")};
    auto found = find_extension_index(small, 4);
    REQUIRE(found.has_value());
    CHECK(found->first == 2);
    CHECK(is_extension(small, tree_sequence(found->first).tree, found->second));

    // with c(u) empty the earliest host is T_3
    BurlingTree empt;
    r = empt.add_root("er");
    empt.add_child(r, "elb", true);
    empt.add_child(r, "eu", false);
    auto found2 = find_extension_index(empt, 4);
    REQUIRE(found2.has_value());
    CHECK(found2->first == 3);
    CHECK(is_extension(empt, tree_sequence(found2->first).tree, found2->second));

    // the natural injection into T_2 violates property (iv): the image of eu
    // chooses the last-born while eu chooses nothing
    std::map<std::string, std::string> bad{{"er", "r"}, {"elb", "c0.r"}, {"eu", "x0:0"}};
    CHECK_FALSE(is_extension(empt, tree_sequence(2).tree, bad));
}
