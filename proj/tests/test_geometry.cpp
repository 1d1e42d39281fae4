#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geometry.hpp"
#include "helpers.hpp"

using namespace burling;
using burling::testing::random_selection;
using burling::testing::random_selection_tail;

namespace {

Frame fr(const char* id, int x1, int y1, int x2, int y2) {
    return Frame{id, Rat(x1), Rat(y1), Rat(x2), Rat(y2)};
}

Segment sg(const char* id, int x1, int y1, int x2, int y2) {
    return Segment{id, Rat(x1), Rat(y1), Rat(x2), Rat(y2)};
}

bool has_clause(const std::vector<Violation>& vs, const std::string& clause) {
    for (const auto& v : vs)
        if (v.clause == clause) return true;
    return false;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_str(parse_rat("3/6")) == "1/2");
    CHECK(rat_str(parse_rat("7")) == "7");
    CHECK(rat_str(parse_rat("-4/2")) == "-2");
    CHECK_THROWS_AS((void)parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_rat("1/0"), std::invalid_argument);
}

TEST_CASE("frame predicates on the canonical pair") {
    // A enters B
    Frame B = fr("B", 0, 0, 10, 10);
    Frame A = fr("A", 4, 3, 14, 7);
    CHECK(frame_enters(A, B));
    CHECK_FALSE(frame_enters(B, A));
    CHECK(frames_intersect(A, B));
    CHECK_FALSE(frame_inside(A, B));

    Frame C = fr("C", 1, 1, 3, 4);
    CHECK(frame_inside(C, B));
    CHECK_FALSE(frames_intersect(C, B));

    Frame D = fr("D", 20, 20, 30, 30);
    CHECK_FALSE(frames_intersect(A, D));
}

TEST_CASE("restricted validator accepts disjoint frames and the entering pair") {
    CHECK(validate_restricted_frames({fr("a", 0, 0, 2, 2), fr("b", 5, 5, 8, 8)}).empty());
    CHECK(validate_restricted_frames({fr("B", 0, 0, 10, 10), fr("A", 4, 3, 14, 7)}).empty());
}

TEST_CASE("restricted validator names the broken clause") {
    // left side crossing
    auto v = validate_restricted_frames({fr("B", 0, 0, 10, 10), fr("A", 4, 3, 8, 12)});
    CHECK(has_clause(v, "frame-iii"));
    // right side entering only the top
    v = validate_restricted_frames({fr("B", 0, 0, 10, 10), fr("A", -5, 5, 5, 15)});
    CHECK((has_clause(v, "frame-iv") || has_clause(v, "frame-iii")));
    // corner contact
    v = validate_restricted_frames({fr("B", 0, 0, 10, 10), fr("A", 10, 10, 14, 14)});
    CHECK(has_clause(v, "frame-ii"));
    // a frame buried in the intersection of two entering frames
    v = validate_restricted_frames({fr("B", 0, 0, 100, 100), fr("A", 40, 30, 140, 70),
                                    fr("C", 50, 40, 60, 50)});
    CHECK(has_clause(v, "frame-v"));
    // triangle
    v = validate_restricted_frames({fr("a", 0, 0, 100, 100), fr("b", 10, 20, 120, 80),
                                    fr("c", 20, 30, 140, 60)});
    CHECK(has_clause(v, "frame-i"));
}

TEST_CASE("strict validator rejects the forbidden nested-crossing pattern") {
    // A inside B; C enters A but pokes out of B as well... keep C entering
    // both: allowed
    std::vector<Frame> ok = {fr("B", 0, 0, 100, 100), fr("A", 10, 10, 60, 90),
                             fr("C", 20, 30, 120, 70)};
    CHECK(validate_strict_frames(ok).empty());

    // A inside B, C crosses A and B but enters only А: forbidden
    std::vector<Frame> bad = {fr("B", 0, 0, 100, 100), fr("hub", 5, 5, 70, 95),
                              fr("w", 10, 10, 60, 50), fr("m", -20, 2, 40, 98)};
    // w inside hub; m is entered by hub and w (m's right side crosses both)
    auto v = validate_strict_frames(bad);
    CHECK_FALSE(v.empty());
}

TEST_CASE("frame relations of an entering pair and the scores") {
    std::vector<Frame> fs = {fr("B", 0, 0, 10, 10), fr("A", 4, 3, 14, 7)};
    BurlingSetRel s = frame_relations(fs);
    CHECK(s.adj == std::set<std::pair<std::string, std::string>>{{"A", "B"}});
    CHECK(s.desc.empty());
    auto sc = frame_scores(fs);
    CHECK(sc["A"].first < sc["B"].first);    // score
    CHECK(sc["A"].second > sc["B"].second);  // antiscore

    auto sc1 = frame_scores({fr("u", 0, 0, 1, 1)});
    CHECK(sc1["u"].first == 1);
    CHECK(sc1["u"].second == 1);
}

TEST_CASE("segment predicates") {
    Segment l = sg("l", 0, 0, 10, 10);
    Segment k = sg("k", -5, 4, 20, 6);  // flat, crosses l
    CHECK(segments_intersect(l, k));
    CHECK(k.slope() < l.slope());

    Segment m = sg("m", -8, 2, -2, 8);  // inside T(l)
    CHECK(segment_in_territory(m, l));
    CHECK_FALSE(segments_intersect(m, l));
    CHECK(point_in_territory(Rat(-1), Rat(5), l));
    CHECK_FALSE(point_in_territory(Rat(6), Rat(5), l));
    CHECK(point_on_segment(Rat(5), Rat(5), l));
    CHECK_FALSE(point_on_segment(Rat(11), Rat(11), l));
}

TEST_CASE("strict segment validator") {
    CHECK(validate_strict_segments({sg("l", 0, 0, 10, 10)}).empty());
    // canonical crossing pair
    CHECK(validate_strict_segments({sg("l", 0, 0, 10, 10), sg("k", -5, 4, 20, 6)}).empty());
    // negative slope
    CHECK(has_clause(validate_strict_segments({sg("b", 0, 10, 10, 0)}), "seg-i"));
    // endpoint on another segment
    CHECK(has_clause(
        validate_strict_segments({sg("l", 0, 0, 10, 10), sg("e", 5, 5, 20, 7)}), "seg-ii"));
    // partial territory entry
    CHECK(has_clause(validate_strict_segments(
                         {sg("l", 0, 0, 10, 10), sg("m", -5, 2, -1, 20)}),
                     "seg-iv"));
    // the forbidden structure: k crosses the nested pair (l, m) while being
    // steeper than l
    auto v = validate_strict_segments({sg("l", 0, 0, 100, 100), sg("m", 12, 13, 16, 80),
                                       sg("k", 5, 2, 40, 90)});
    CHECK(has_clause(v, "seg-vii"));
}

TEST_CASE("segment relations and scores on the crossing pair") {
    std::vector<Segment> ls = {sg("l", 0, 0, 10, 10), sg("k", -5, 4, 20, 6)};
    BurlingSetRel s = segment_relations(ls);
    CHECK(s.adj == std::set<std::pair<std::string, std::string>>{{"k", "l"}});
    auto sc = segment_scores(ls);
    CHECK(sc["k"].first < sc["l"].first);
    CHECK(sc["k"].second > sc["l"].second);

    // disjoint, non-nested pair has no relations
    BurlingSetRel s2 = segment_relations({sg("a", 0, 0, 1, 1), sg("b", 50, 50, 51, 51)});
    CHECK(s2.adj.empty());
    CHECK(s2.desc.empty());
}

TEST_CASE("box intersection") {
    Box a{"a", Rat(0), Rat(0), Rat(10), Rat(10), Rat(0), Rat(5)};
    Box b{"b", Rat(5), Rat(5), Rat(15), Rat(15), Rat(5), Rat(9)};
    CHECK(boxes_intersect(a, b));  // closed z intervals touch at 5
    Box c{"c", Rat(5), Rat(5), Rat(15), Rat(15), Rat(6), Rat(9)};
    CHECK_FALSE(boxes_intersect(a, c));
    Box d{"d", Rat(10), Rat(0), Rat(20), Rat(10), Rat(0), Rat(5)};
    CHECK_FALSE(boxes_intersect(a, d));  // open xy overlap required
}

TEST_CASE("frame embedding on the square and a singleton") {
    DerivedSelection one;
    one.tree.add_root("r");
    one.tree.add_child(0, "v", true);
    one.selected = {"v"};
    auto fs = embed_tree_as_frames(one);
    CHECK(fs.size() == 1);
    CHECK(validate_strict_frames(fs).empty());

    // oriented C4 via two siblings choosing the same nested pair
    DerivedSelection sq;
    BurlingTree& t = sq.tree;
    int r = t.add_root("r");
    int p = t.add_child(r, "p", true);
    t.add_child(r, "a", false);
    t.add_child(r, "a2", false);
    int b = t.add_child(p, "b", true);
    t.nodes[t.idx("a")].choose = {p, b};
    t.nodes[t.idx("a2")].choose = {p, b};
    sq.selected = {"a", "a2", "p", "b"};

    auto frames = embed_tree_as_frames(sq);
    CHECK(frames.size() == 4);
    CHECK(validate_strict_frames(frames).empty());
    Scene sc;
    sc.kind = SceneKind::Frames;
    sc.frames = frames;
    CHECK(intersection_graph(sc).oriented == derive(sq));
}

TEST_CASE("random selections embed as strict frames reproducing the graph") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 50; ++it) {
        DerivedSelection sel = random_selection(rng, 12);
        auto frames = embed_tree_as_frames(sel);
        CHECK(validate_strict_frames(frames).empty());
        Scene sc;
        sc.kind = SceneKind::Frames;
        sc.frames = frames;
        CHECK(intersection_graph(sc).oriented == derive(sel));
    }
}

TEST_CASE("random selections embed as strict segments reproducing the graph") {
    std::mt19937_64 rng(78);
    for (int it = 0; it < 50; ++it) {
        DerivedSelection sel = random_selection_tail(rng, 12);
        auto segs = embed_tree_as_segments(sel);
        CHECK(validate_strict_segments(segs).empty());
        Scene sc;
        sc.kind = SceneKind::Segments;
        sc.segments = segs;
        CHECK(intersection_graph(sc).oriented == derive(sel));
    }
}

TEST_CASE("compatible intervals nest under enters and split under inside") {
    std::mt19937_64 rng(79);
    for (int it = 0; it < 25; ++it) {
        DerivedSelection sel = random_selection(rng, 10);
        auto frames = embed_tree_as_frames(sel);
        if (frames.empty()) continue;
        auto iv = compatible_intervals(frames);
        for (const auto& a : frames)
            for (const auto& b : frames) {
                if (a.id == b.id) continue;
                auto [a1, a2] = iv.at(a.id);
                auto [b1, b2] = iv.at(b.id);
                if (frame_enters(a, b)) {
                    CHECK(a1 <= b1);
                    CHECK(b2 <= a2);
                    CHECK((a1 < b1 || b2 < a2));
                }
                if (frame_inside(a, b)) CHECK((a2 < b1 || b2 < a1));
            }
        // the box lifting preserves pairwise intersection
        auto boxes = frames_to_boxes(frames, iv);
        for (size_t i = 0; i < frames.size(); ++i)
            for (size_t j = i + 1; j < frames.size(); ++j)
                CHECK(frames_intersect(frames[i], frames[j]) ==
                      boxes_intersect(boxes[i], boxes[j]));
    }
    auto iv1 = compatible_intervals({fr("solo", 0, 0, 5, 5)});
    CHECK(iv1.at("solo") == std::pair<long long, long long>{1, 2});
}

TEST_CASE("svg output is byte-stable and marks violations") {
    Scene sc;
    sc.kind = SceneKind::Frames;
    sc.frames = {fr("B", 0, 0, 10, 10), fr("A", 4, 3, 14, 7)};
    std::string a = scene_to_svg(sc, {});
    std::string b = scene_to_svg(sc, {});
    CHECK(a == b);
    CHECK(a.find("<rect") != std::string::npos);
    std::string c = scene_to_svg(sc, {"A"});
    CHECK(c.find("red") != std::string::npos);
}
