#include "geometry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace burling {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    if (denominator(r) == 1)
        os << numerator(r);
    else
        os << numerator(r) << "/" << denominator(r);
    return os.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

// --- frames ----------------------------------------------------------------

bool frame_inside(const Frame& a, const Frame& b) {
    return b.x1 < a.x1 && a.x2 < b.x2 && b.y1 < a.y1 && a.y2 < b.y2;
}

bool frame_enters(const Frame& a, const Frame& b) {
    return b.x1 < a.x1 && a.x1 < b.x2 && b.x2 < a.x2 && b.y1 < a.y1 && a.y2 < b.y2;
}

bool frames_intersect(const Frame& a, const Frame& b) {
    bool closed_overlap = !(a.x2 < b.x1 || b.x2 < a.x1 || a.y2 < b.y1 || b.y2 < a.y1);
    return closed_overlap && !frame_inside(a, b) && !frame_inside(b, a);
}

namespace {

struct Seg2 {  // axis-aligned closed segment
    Rat x1, y1, x2, y2;
    bool vertical() const { return x1 == x2; }
};

Seg2 left_side(const Frame& f) { return {f.x1, f.y1, f.x1, f.y2}; }
Seg2 right_side(const Frame& f) { return {f.x2, f.y1, f.x2, f.y2}; }
Seg2 top_side(const Frame& f) { return {f.x1, f.y2, f.x2, f.y2}; }
Seg2 bottom_side(const Frame& f) { return {f.x1, f.y1, f.x2, f.y1}; }

bool in_closed(const Rat& lo, const Rat& v, const Rat& hi) { return lo <= v && v <= hi; }

bool axis_segments_meet(const Seg2& a, const Seg2& b) {
    if (a.vertical() == b.vertical()) {
        // parallel: meet only when collinear with overlapping ranges
        if (a.vertical())
            return a.x1 == b.x1 && !(a.y2 < b.y1 || b.y2 < a.y1);
        return a.y1 == b.y1 && !(a.x2 < b.x1 || b.x2 < a.x1);
    }
    const Seg2& v = a.vertical() ? a : b;
    const Seg2& h = a.vertical() ? b : a;
    return in_closed(h.x1, v.x1, h.x2) && in_closed(v.y1, h.y1, v.y2);
}

bool segment_meets_frame(const Seg2& s, const Frame& f) {
    return axis_segments_meet(s, left_side(f)) || axis_segments_meet(s, right_side(f)) ||
           axis_segments_meet(s, top_side(f)) || axis_segments_meet(s, bottom_side(f));
}

bool point_on_frame(const Rat& x, const Rat& y, const Frame& f) {
    bool on_v = (x == f.x1 || x == f.x2) && in_closed(f.y1, y, f.y2);
    bool on_h = (y == f.y1 || y == f.y2) && in_closed(f.x1, x, f.x2);
    return on_v || on_h;
}

std::vector<Violation> check_frames_wellformed(const std::vector<Frame>& fs) {
    std::vector<Violation> out;
    std::set<std::string> seen;
    for (const auto& f : fs) {
        if (!seen.insert(f.id).second) out.push_back({"frame-wf", "duplicate id " + f.id});
        if (!(f.x1 < f.x2 && f.y1 < f.y2))
            out.push_back({"frame-wf", "degenerate frame " + f.id});
    }
    return out;
}

}  // namespace

std::vector<Violation> validate_restricted_frames(const std::vector<Frame>& fs) {
    std::vector<Violation> out = check_frames_wellformed(fs);
    if (!out.empty()) return out;
    const int n = fs.size();

    // (i) no three pairwise intersecting frames
    std::vector<std::vector<char>> meet(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            meet[i][j] = meet[j][i] = frames_intersect(fs[i], fs[j]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (meet[i][j] && meet[i][k] && meet[j][k])
                    out.push_back(
                        {"frame-i", fs[i].id + " " + fs[j].id + " " + fs[k].id});

    // (ii) corners of a frame touch no other frame
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Frame& a = fs[i];
            const Rat xs[2] = {a.x1, a.x2}, ys[2] = {a.y1, a.y2};
            for (const Rat& x : xs)
                for (const Rat& y : ys)
                    if (point_on_frame(x, y, fs[j]))
                        out.push_back({"frame-ii", "corner of " + a.id + " on " + fs[j].id});
        }

    // (iii) left sides are clean
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && segment_meets_frame(left_side(fs[i]), fs[j]))
                out.push_back({"frame-iii", "left side of " + fs[i].id + " meets " + fs[j].id});

    // (iv) a right side meeting a frame crosses both its top and bottom
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Seg2 rs = right_side(fs[i]);
            if (!segment_meets_frame(rs, fs[j])) continue;
            if (!(axis_segments_meet(rs, top_side(fs[j])) &&
                  axis_segments_meet(rs, bottom_side(fs[j]))))
                out.push_back({"frame-iv", "right side of " + fs[i].id + " into " + fs[j].id});
        }

    // (v) no frame inside the intersection of two intersecting frames
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!meet[i][j]) continue;
            Rat ix1 = std::max(fs[i].x1, fs[j].x1), ix2 = std::min(fs[i].x2, fs[j].x2);
            Rat iy1 = std::max(fs[i].y1, fs[j].y1), iy2 = std::min(fs[i].y2, fs[j].y2);
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (ix1 < fs[k].x1 && fs[k].x2 < ix2 && iy1 < fs[k].y1 && fs[k].y2 < iy2)
                    out.push_back({"frame-v", fs[k].id + " inside " + fs[i].id + " cap " +
                                                  fs[j].id});
            }
        }
    return out;
}

std::vector<Violation> validate_strict_frames(const std::vector<Frame>& fs) {
    std::vector<Violation> out = validate_restricted_frames(fs);
    const int n = fs.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !frame_inside(fs[a], fs[b])) continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (frames_intersect(fs[c], fs[a]) && frames_intersect(fs[c], fs[b]) &&
                    !(frame_enters(fs[c], fs[a]) && frame_enters(fs[c], fs[b])))
                    out.push_back({"frame-strict",
                                   fs[a].id + " inside " + fs[b].id + ", " + fs[c].id +
                                       " crosses both"});
            }
        }
    return out;
}

BurlingSetRel frame_relations(const std::vector<Frame>& fs) {
    auto v = validate_strict_frames(fs);
    if (!v.empty())
        throw std::invalid_argument("frame_relations: scene not strict: " + v.front().clause);
    BurlingSetRel s;
    for (const auto& f : fs) s.elements.push_back(f.id);
    for (const auto& a : fs)
        for (const auto& b : fs) {
            if (a.id == b.id) continue;
            if (frame_inside(a, b)) s.desc.insert({a.id, b.id});
            if (frames_intersect(a, b)) {
                if (frame_enters(a, b))
                    s.adj.insert({a.id, b.id});
                else if (!frame_enters(b, a))
                    throw std::logic_error("restricted scene with a non-enters crossing");
            }
        }
    return s;
}

std::map<std::string, std::pair<Rat, Rat>> frame_scores(const std::vector<Frame>& fs) {
    std::map<std::string, std::pair<Rat, Rat>> out;
    for (const auto& f : fs) out[f.id] = {f.score(), f.antiscore()};
    return out;
}

// --- segments ---------------------------------------------------------------

namespace {

int sgn(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

// orientation of (p,q,r)
int orient(const Rat& px, const Rat& py, const Rat& qx, const Rat& qy, const Rat& rx,
           const Rat& ry) {
    return sgn((qx - px) * (ry - py) - (qy - py) * (rx - px));
}

}  // namespace

bool point_on_segment(const Rat& px, const Rat& py, const Segment& s) {
    if (orient(s.x1, s.y1, s.x2, s.y2, px, py) != 0) return false;
    return in_closed(s.x1, px, s.x2) && in_closed(s.y1, py, s.y2);
}

bool segments_intersect(const Segment& a, const Segment& b) {
    int o1 = orient(a.x1, a.y1, a.x2, a.y2, b.x1, b.y1);
    int o2 = orient(a.x1, a.y1, a.x2, a.y2, b.x2, b.y2);
    int o3 = orient(b.x1, b.y1, b.x2, b.y2, a.x1, a.y1);
    int o4 = orient(b.x1, b.y1, b.x2, b.y2, a.x2, a.y2);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
    // boundary contacts (flagged elsewhere as violations) still intersect
    if (o1 == 0 && point_on_segment(b.x1, b.y1, a)) return true;
    if (o2 == 0 && point_on_segment(b.x2, b.y2, a)) return true;
    if (o3 == 0 && point_on_segment(a.x1, a.y1, b)) return true;
    if (o4 == 0 && point_on_segment(a.x2, a.y2, b)) return true;
    return false;
}

bool point_in_territory(const Rat& px, const Rat& py, const Segment& s) {
    if (!(s.y1 <= py && py <= s.y2)) return false;
    // y >= slope*x + b  <=>  (py - y1)*(x2 - x1) >= (px - x1)*(y2 - y1)
    return (py - s.y1) * (s.x2 - s.x1) >= (px - s.x1) * (s.y2 - s.y1);
}

bool segment_in_territory(const Segment& m, const Segment& l) {
    return point_in_territory(m.x1, m.y1, l) && point_in_territory(m.x2, m.y2, l);
}

bool segment_meets_territory(const Segment& m, const Segment& l) {
    // The territory is convex with boundary l plus two leftward rays;
    // a segment meets it iff an endpoint lies inside or it crosses the
    // boundary.
    if (point_in_territory(m.x1, m.y1, l) || point_in_territory(m.x2, m.y2, l)) return true;
    if (segments_intersect(m, l)) return true;
    // crossing of the horizontal ray {y = c, x <= x0}
    auto crosses_ray = [&](const Rat& c, const Rat& x0) {
        if (!(m.y1 <= c && c <= m.y2)) return false;
        Rat xc = m.x1 + (c - m.y1) * (m.x2 - m.x1) / (m.y2 - m.y1);
        return xc <= x0;
    };
    return crosses_ray(l.y1, l.x1) || crosses_ray(l.y2, l.x2);
}

bool territory_subset(const Segment& l, const Segment& m) {
    // T(l) subset of T(m): Yspan(l) inside Yspan(m) and l's boundary line lies
    // left of m's at both ends of Yspan(l).
    if (!(m.y1 <= l.y1 && l.y2 <= m.y2)) return false;
    auto line_x = [](const Segment& s, const Rat& y) {
        return s.x1 + (y - s.y1) * (s.x2 - s.x1) / (s.y2 - s.y1);
    };
    return line_x(l, l.y1) <= line_x(m, l.y1) && line_x(l, l.y2) <= line_x(m, l.y2);
}

std::vector<Violation> validate_strict_segments(const std::vector<Segment>& ls) {
    std::vector<Violation> out;
    std::set<std::string> seen;
    for (const auto& s : ls) {
        if (!seen.insert(s.id).second) out.push_back({"seg-wf", "duplicate id " + s.id});
        if (!(s.x1 < s.x2)) out.push_back({"seg-wf", "needs x1 < x2: " + s.id});
    }
    if (!out.empty()) return out;
    const int n = ls.size();

    // (i) positive slopes
    for (const auto& s : ls)
        if (!(s.y1 < s.y2)) out.push_back({"seg-i", "non-positive slope: " + s.id});
    if (!out.empty()) return out;

    // (ii) no endpoint on another segment
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (point_on_segment(ls[i].x1, ls[i].y1, ls[j]) ||
                point_on_segment(ls[i].x2, ls[i].y2, ls[j]))
                out.push_back({"seg-ii", "endpoint of " + ls[i].id + " on " + ls[j].id});
        }

    std::vector<std::vector<char>> meet(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            meet[i][j] = meet[j][i] = segments_intersect(ls[i], ls[j]);

    // (iii) triangle-free
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (meet[i][j] && meet[i][k] && meet[j][k])
                    out.push_back({"seg-iii", ls[i].id + " " + ls[j].id + " " + ls[k].id});

    // (iv) one point in a territory pulls the whole disjoint segment in,
    //      with strict Yspan nesting
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || meet[i][j]) continue;
            const Segment &l = ls[i], &m = ls[j];
            if (!segment_meets_territory(m, l)) continue;
            bool yspan_proper =
                l.y1 <= m.y1 && m.y2 <= l.y2 && (l.y1 < m.y1 || m.y2 < l.y2);
            if (!segment_in_territory(m, l))
                out.push_back({"seg-iv", ls[j].id + " partially in territory of " + ls[i].id});
            else if (!yspan_proper)
                out.push_back(
                    {"seg-iv", "Yspan of " + m.id + " not properly inside " + l.id});
        }

    // (v) nothing inside the territory intersection of a crossing pair
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!meet[i][j]) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (segment_in_territory(ls[k], ls[i]) && segment_in_territory(ls[k], ls[j]))
                    out.push_back({"seg-v", ls[k].id + " inside T(" + ls[i].id + ") cap T(" +
                                                ls[j].id + ")"});
            }
        }

    // (vi) crossing pair: flatter one has nested Yspan and wider Xspan
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i >= j || !meet[i][j]) continue;
            const Segment* k = &ls[i];
            const Segment* l = &ls[j];
            if (k->slope() == l->slope()) {
                out.push_back({"seg-vi", "equal slopes: " + k->id + " " + l->id});
                continue;
            }
            if (k->slope() > l->slope()) std::swap(k, l);
            bool ys_proper =
                l->y1 <= k->y1 && k->y2 <= l->y2 && (l->y1 < k->y1 || k->y2 < l->y2);
            bool xs_proper = k->x1 <= l->x1 && l->x2 < k->x2;  // strict max required
            if (!ys_proper)
                out.push_back({"seg-vi", "Yspan(" + k->id + ") not properly in Yspan(" +
                                             l->id + ")"});
            if (!xs_proper)
                out.push_back({"seg-vi", "Xspan(" + l->id + ") not properly in Xspan(" +
                                             k->id + ")"});
        }

    // (vii) a segment crossing a territory-nested disjoint pair must be
    //       flatter than both
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || meet[i][j]) continue;
            if (!segment_in_territory(ls[j], ls[i])) continue;  // j inside T(i)
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (meet[k][i] && meet[k][j] &&
                    !(ls[k].slope() < ls[i].slope() && ls[k].slope() < ls[j].slope()))
                    out.push_back({"seg-vii", ls[k].id + " crosses nested pair " + ls[i].id +
                                                  ", " + ls[j].id});
            }
        }
    return out;
}

BurlingSetRel segment_relations(const std::vector<Segment>& ls) {
    auto v = validate_strict_segments(ls);
    if (!v.empty())
        throw std::invalid_argument("segment_relations: scene not strict: " + v.front().clause);
    // internal consistency: territories of disjoint overlapping pairs nest
    for (const auto& l : ls)
        for (const auto& m : ls) {
            if (l.id == m.id || segments_intersect(l, m)) continue;
            bool overlap = !(l.y2 < m.y1 || m.y2 < l.y1);
            if (!overlap) continue;
            // overlapping y-spans: territories meet iff one boundary is left
            // of the other somewhere; nesting must then hold
            if (segment_in_territory(l, m) || segment_in_territory(m, l)) continue;
            if (segment_meets_territory(l, m) || segment_meets_territory(m, l)) {
                if (!territory_subset(l, m) && !territory_subset(m, l))
                    throw std::logic_error("territory nesting failed for " + l.id + ", " + m.id);
            }
        }
    BurlingSetRel s;
    for (const auto& l : ls) s.elements.push_back(l.id);
    for (const auto& l : ls)
        for (const auto& k : ls) {
            if (l.id == k.id) continue;
            if (!segments_intersect(l, k) && segment_in_territory(l, k))
                s.desc.insert({l.id, k.id});
            if (segments_intersect(l, k) && l.slope() < k.slope()) s.adj.insert({l.id, k.id});
        }
    return s;
}

std::map<std::string, std::pair<Rat, Rat>> segment_scores(const std::vector<Segment>& ls) {
    std::map<std::string, std::pair<Rat, Rat>> out;
    for (const auto& s : ls) out[s.id] = {s.score(), s.antiscore()};
    return out;
}

// --- boxes -------------------------------------------------------------------

bool boxes_intersect(const Box& a, const Box& b) {
    bool open_xy = a.x1 < b.x2 && b.x1 < a.x2 && a.y1 < b.y2 && b.y1 < a.y2;
    bool closed_z = !(a.z2 < b.z1 || b.z2 < a.z1);
    return open_xy && closed_z;
}

std::vector<Violation> validate_boxes(const std::vector<Box>& bs) {
    std::vector<Violation> out;
    std::set<std::string> seen;
    for (const auto& b : bs) {
        if (!seen.insert(b.id).second) out.push_back({"box-wf", "duplicate id " + b.id});
        if (!(b.x1 < b.x2 && b.y1 < b.y2)) out.push_back({"box-wf", "degenerate base " + b.id});
        if (b.z2 < b.z1) out.push_back({"box-wf", "empty interval " + b.id});
    }
    return out;
}

std::map<std::string, std::pair<long long, long long>> compatible_intervals(
    const std::vector<Frame>& fs) {
    BurlingSetRel rel = frame_relations(fs);
    ReconstructedTree rec = to_burling_tree(rel);
    DerivedSelection sel{rec.tree, {}};
    for (const auto& [e, node] : rec.embedding) sel.selected.insert(node);
    DerivedSelection norm = normalize(sel);
    auto f = dfs_lastborn_numbering(norm.tree);

    std::map<std::string, std::pair<long long, long long>> out;
    if (fs.size() == 1) {
        out[fs.front().id] = {1, 2};
        return out;
    }
    for (const auto& fr : fs) {
        int v = norm.tree.idx(fr.id);
        int p = norm.tree.nodes[v].parent;
        if (p == -1 || norm.tree.is_lastborn(v))
            throw std::logic_error("interval assignment: element is root or last-born");
        int u = norm.tree.nodes[p].lastborn;
        out[fr.id] = {f.at(norm.tree.nodes[u].id), f.at(norm.tree.nodes[v].id)};
    }
    return out;
}

std::vector<Box> frames_to_boxes(
    const std::vector<Frame>& fs,
    const std::map<std::string, std::pair<long long, long long>>& iv) {
    // compatibility: A enters B nests I_B properly inside I_A; A inside B
    // makes the intervals disjoint
    for (const auto& a : fs)
        for (const auto& b : fs) {
            if (a.id == b.id) continue;
            auto [a1, a2] = iv.at(a.id);
            auto [b1, b2] = iv.at(b.id);
            bool b_in_a = a1 <= b1 && b2 <= a2 && (a1 < b1 || b2 < a2);
            if (frame_enters(a, b) && !b_in_a)
                throw std::invalid_argument("incompatible intervals for " + a.id + ", " + b.id);
            if (frame_inside(a, b) && !(a2 < b1 || b2 < a1))
                throw std::invalid_argument("incompatible intervals for " + a.id + ", " + b.id);
        }
    std::vector<Box> out;
    for (const auto& f : fs) {
        auto [z1, z2] = iv.at(f.id);
        out.push_back({f.id, f.x1, f.y1, f.x2, f.y2, Rat(z1), Rat(z2)});
    }
    return out;
}

SceneGraphs intersection_graph(const Scene& scene) {
    SceneGraphs out;
    switch (scene.kind) {
        case SceneKind::Frames: {
            out.has_orientation = true;
            for (const auto& f : scene.frames) {
                out.graph.add_vertex(f.id);
                out.oriented.add_vertex(f.id);
            }
            for (const auto& a : scene.frames)
                for (const auto& b : scene.frames) {
                    if (a.id >= b.id) continue;
                    if (!frames_intersect(a, b)) continue;
                    out.graph.add_edge(a.id, b.id);
                    if (frame_enters(a, b))
                        out.oriented.add_arc(a.id, b.id);
                    else if (frame_enters(b, a))
                        out.oriented.add_arc(b.id, a.id);
                    else
                        throw std::logic_error("crossing without an enters orientation: " +
                                               a.id + ", " + b.id);
                }
            break;
        }
        case SceneKind::Segments: {
            out.has_orientation = true;
            for (const auto& s : scene.segments) {
                out.graph.add_vertex(s.id);
                out.oriented.add_vertex(s.id);
            }
            for (const auto& a : scene.segments)
                for (const auto& b : scene.segments) {
                    if (a.id >= b.id) continue;
                    if (!segments_intersect(a, b)) continue;
                    out.graph.add_edge(a.id, b.id);
                    if (a.slope() < b.slope())
                        out.oriented.add_arc(a.id, b.id);
                    else if (b.slope() < a.slope())
                        out.oriented.add_arc(b.id, a.id);
                    else
                        throw std::logic_error("crossing with equal slopes: " + a.id + ", " +
                                               b.id);
                }
            break;
        }
        case SceneKind::Boxes: {
            for (const auto& b : scene.boxes) out.graph.add_vertex(b.id);
            for (const auto& a : scene.boxes)
                for (const auto& b : scene.boxes)
                    if (a.id < b.id && boxes_intersect(a, b)) out.graph.add_edge(a.id, b.id);
            break;
        }
    }
    return out;
}

}  // namespace burling
