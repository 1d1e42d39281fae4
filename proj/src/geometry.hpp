#ifndef BURLING_GEOMETRY_HPP
#define BURLING_GEOMETRY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abstract.hpp"
#include "graph.hpp"
#include "tree.hpp"

namespace burling {

using Rat = boost::multiprecision::cpp_rational;

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

// Boundary of the axis-aligned rectangle [x1,x2] x [y1,y2].
struct Frame {
    std::string id;
    Rat x1, y1, x2, y2;
    Rat score() const { return y2 - y1; }     // vertical length
    Rat antiscore() const { return x2; }      // rightmost coordinate
};

// Closed segment from (x1,y1) to (x2,y2) with x1 < x2 and positive slope.
struct Segment {
    std::string id;
    Rat x1, y1, x2, y2;
    Rat slope() const { return (y2 - y1) / (x2 - x1); }
    Rat score() const { return y2 - y1; }     // |Yspan|
    Rat antiscore() const { return x2; }      // max of Xspan
};

// Open base rectangle times the closed interval [z1,z2].
struct Box {
    std::string id;
    Rat x1, y1, x2, y2, z1, z2;
};

enum class SceneKind { Frames, Segments, Boxes };

struct Scene {
    SceneKind kind = SceneKind::Frames;
    std::vector<Frame> frames;
    std::vector<Segment> segments;
    std::vector<Box> boxes;
};

// --- frame predicates -------------------------------------------------
bool frame_inside(const Frame& a, const Frame& b);   // a strictly in b's open region
bool frame_enters(const Frame& a, const Frame& b);   // the unique crossing pattern
bool frames_intersect(const Frame& a, const Frame& b);  // boundaries meet

// clause names: frame-wf, frame-i .. frame-v, frame-strict
std::vector<Violation> validate_restricted_frames(const std::vector<Frame>& fs);
std::vector<Violation> validate_strict_frames(const std::vector<Frame>& fs);

BurlingSetRel frame_relations(const std::vector<Frame>& fs);
std::map<std::string, std::pair<Rat, Rat>> frame_scores(const std::vector<Frame>& fs);

// --- segment predicates -----------------------------------------------
bool segments_intersect(const Segment& a, const Segment& b);
bool point_on_segment(const Rat& px, const Rat& py, const Segment& s);
bool point_in_territory(const Rat& px, const Rat& py, const Segment& s);  // closed
bool segment_in_territory(const Segment& m, const Segment& l);
bool segment_meets_territory(const Segment& m, const Segment& l);
bool territory_subset(const Segment& l, const Segment& m);  // T(l) subset of T(m)

// clause names: seg-wf, seg-i .. seg-vii
std::vector<Violation> validate_strict_segments(const std::vector<Segment>& ls);

BurlingSetRel segment_relations(const std::vector<Segment>& ls);
std::map<std::string, std::pair<Rat, Rat>> segment_scores(const std::vector<Segment>& ls);

// --- boxes --------------------------------------------------------------
bool boxes_intersect(const Box& a, const Box& b);
std::vector<Violation> validate_boxes(const std::vector<Box>& bs);

// DFS interval assignment realizing the box lifting; frame ids map to
// closed integer intervals [lo, hi].
std::map<std::string, std::pair<long long, long long>> compatible_intervals(
    const std::vector<Frame>& fs);

std::vector<Box> frames_to_boxes(const std::vector<Frame>& fs,
                                 const std::map<std::string, std::pair<long long, long long>>& iv);

// --- intersection graphs -----------------------------------------------
struct SceneGraphs {
    Graph graph;
    OrientedGraph oriented;  // frames and segments only
    bool has_orientation = false;
};
SceneGraphs intersection_graph(const Scene& scene);

// --- embeddings (in embed.cpp) -------------------------------------------
std::vector<Frame> embed_tree_as_frames(const DerivedSelection& sel);
std::vector<Segment> embed_tree_as_segments(const DerivedSelection& sel);

// --- svg (in svg.cpp) -----------------------------------------------------
std::string scene_to_svg(const Scene& scene, const std::set<std::string>& violating);

}  // namespace burling

#endif
