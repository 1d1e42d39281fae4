#include "fixtures.hpp"

#include <stdexcept>

namespace burling {

namespace {

Frame fr(const char* id, int x1, int y1, int x2, int y2) {
    return Frame{id, Rat(x1), Rat(y1), Rat(x2), Rat(y2)};
}

// Wheel: a six-cycle outer-a-w-mid-y-b-outer with hub adjacent to the
// alternating triple {a, b, mid}. The nested pair w < hub crossed by mid
// breaks strictness.
Scene wheel_scene() {
    Scene s;
    s.kind = SceneKind::Frames;
    s.frames = {
        fr("outer", 0, 0, 100, 100),  // container for the whole gadget
        fr("mid", 5, 10, 40, 90),     // entered by w, y and the hub
        fr("hub", 10, 15, 65, 85),    // pokes mid; a and b poke it
        fr("w", 15, 20, 55, 50),      // pokes mid, sits inside hub
        fr("y", 20, 55, 50, 82),      // pokes mid, sits inside hub
        fr("a", 45, 25, 110, 30),     // pokes w, hub and outer
        fr("b", 42, 60, 105, 65),     // pokes y, hub and outer
    };
    return s;
}

Graph wheel_graph() {
    Graph g;
    for (const char* e : {"outer", "mid", "hub", "w", "y", "a", "b"}) g.add_vertex(e);
    g.add_edge("a", "outer");
    g.add_edge("a", "w");
    g.add_edge("w", "mid");
    g.add_edge("mid", "y");
    g.add_edge("y", "b");
    g.add_edge("b", "outer");
    g.add_edge("hub", "a");
    g.add_edge("hub", "b");
    g.add_edge("hub", "mid");
    return g;
}

// Necklace: the same six-cycle with three bead frames, each picking up one
// non-adjacent pair of the cycle. The bead inside y that pokes mid breaks
// strictness.
Scene necklace_scene() {
    Scene s;
    s.kind = SceneKind::Frames;
    s.frames = {
        fr("outer", 0, 0, 100, 100),
        fr("mid", 5, 10, 40, 90),
        fr("w", 15, 20, 55, 50),
        fr("y", 20, 55, 50, 82),
        fr("a", 45, 25, 110, 30),
        fr("b", 42, 60, 105, 65),
        fr("bead1", 2, 8, 80, 92),    // caught by the two long pokers a, b
        fr("bead2", 12, 18, 35, 84),  // caught by w and y inside mid
        fr("bead3", 37, 59, 46, 66),  // inside y, pokes mid, caught by b
    };
    return s;
}

Graph necklace_graph() {
    Graph g;
    for (const char* e :
         {"outer", "mid", "w", "y", "a", "b", "bead1", "bead2", "bead3"})
        g.add_vertex(e);
    g.add_edge("a", "outer");
    g.add_edge("a", "w");
    g.add_edge("w", "mid");
    g.add_edge("mid", "y");
    g.add_edge("y", "b");
    g.add_edge("b", "outer");
    g.add_edge("bead1", "a");
    g.add_edge("bead1", "b");
    g.add_edge("bead2", "w");
    g.add_edge("bead2", "y");
    g.add_edge("bead3", "mid");
    g.add_edge("bead3", "b");
    return g;
}

// Subdivision of K5 on branch frames {X, A, U, B, W}: the pentagon
// X-A-U-B-W-X is drawn with direct contacts and each diagonal is subdivided
// once. The joiner "saw" between the pokes of A and W cannot keep its left
// side clean; clause (iii) necessarily fails there.
Scene k5_scene() {
    Scene s;
    s.kind = SceneKind::Frames;
    s.frames = {
        fr("X", 0, 0, 300, 200),
        fr("U", 10, 10, 100, 190),
        fr("sab", 15, 15, 60, 140),    // subdivides the diagonal A-B
        fr("B", 20, 20, 150, 120),
        fr("A", 25, 130, 400, 135),
        fr("sxu", 70, 150, 310, 155),  // subdivides the diagonal X-U
        fr("suw", 80, 95, 130, 118),   // subdivides the diagonal U-W
        fr("W", 110, 100, 340, 115),
        fr("sxb", 105, 30, 320, 35),   // subdivides the diagonal X-B
        fr("saw", 330, 90, 360, 160),  // subdivides the diagonal A-W
    };
    return s;
}

Graph k5_graph() {
    Graph g;
    for (const char* e : {"X", "A", "U", "B", "W", "sxu", "sxb", "sab", "suw", "saw"})
        g.add_vertex(e);
    g.add_edge("X", "A");
    g.add_edge("A", "U");
    g.add_edge("U", "B");
    g.add_edge("B", "W");
    g.add_edge("W", "X");
    g.add_edge("sxu", "X");
    g.add_edge("sxu", "U");
    g.add_edge("sxb", "X");
    g.add_edge("sxb", "B");
    g.add_edge("sab", "A");
    g.add_edge("sab", "B");
    g.add_edge("suw", "U");
    g.add_edge("suw", "W");
    g.add_edge("saw", "A");
    g.add_edge("saw", "W");
    return g;
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"wheel", "necklace", "k5-subdivision"};
}

Scene fixture_scene(const std::string& name) {
    if (name == "wheel") return wheel_scene();
    if (name == "necklace") return necklace_scene();
    if (name == "k5-subdivision") return k5_scene();
    throw std::invalid_argument("unknown fixture: " + name);
}

Graph fixture_graph(const std::string& name) {
    if (name == "wheel") return wheel_graph();
    if (name == "necklace") return necklace_graph();
    if (name == "k5-subdivision") return k5_graph();
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace burling
