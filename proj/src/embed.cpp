#include <deque>
#include <stdexcept>

#include "geometry.hpp"

namespace burling {

// Both embeddings walk the normalized tree top-down. Every tree node owns a
// content region; the two child subtrees get x-disjoint, y-disjoint slots
// inside it. A selected non-last-born child with selected choose-targets
// becomes a "probe": its object starts inside the innermost target (whose
// recursion assigns it an exclusive thin y-band and an anchor x) and pokes
// rightward past every target into the child's own slot. Band exclusivity is
// what keeps unrelated objects apart.

namespace {

struct Probe {
    int owner = -1;             // node index of the probing vertex
    std::vector<int> path;      // the choose branch of the owner
    size_t pos = 0;             // path[pos] is the node being visited
    int last_target = -1;       // deepest selected node on the path
    bool resolved = false;
    Rat anchor_x, band_lo, band_hi;
    // segment embedding: region reserved for the owner's subtree
    Rat content_xlo, content_xhi, content_ylo, content_yhi;
};

struct Region {
    Rat xlo, xhi, ylo, yhi;
    Rat w() const { return xhi - xlo; }
    Rat h() const { return yhi - ylo; }
};

struct EmbedderBase {
    const BurlingTree& t;
    const std::set<VertexId>& selected;
    std::deque<Probe> probes;

    EmbedderBase(const BurlingTree& t_, const std::set<VertexId>& sel_)
        : t(t_), selected(sel_) {}

    bool sel(int v) const { return selected.count(t.nodes[v].id) > 0; }

    int last_selected_on(const std::vector<int>& path) const {
        int last = -1;
        for (int v : path)
            if (sel(v)) last = v;
        return last;
    }

    // splits [lo,hi] into n equal slices and returns slice i
    static std::pair<Rat, Rat> slice(const Rat& lo, const Rat& hi, int n, int i) {
        Rat step = (hi - lo) / n;
        return {lo + step * i, lo + step * (i + 1)};
    }
};

// ---------------------------------------------------------------- frames

struct FrameEmbedder : EmbedderBase {
    std::vector<Frame> out;

    using EmbedderBase::EmbedderBase;

    void walk(int v, Region r, std::vector<Probe*> here) {
        std::vector<Probe*> enders;
        std::map<int, std::vector<Probe*>> adv;  // child -> advancing probes
        for (Probe* p : here) {
            if (p->path[p->pos] != v) throw std::logic_error("probe lost its path");
            if (p->last_target == v) {
                enders.push_back(p);
            } else {
                p->pos++;
                if (p->pos >= p->path.size())
                    throw std::logic_error("probe ran past its last target");
                adv[p->path[p->pos]].push_back(p);
            }
        }

        const int ne = enders.size();
        // y layout: one slice per ender, then the children slice
        for (int i = 0; i < ne; ++i) {
            auto [slo, shi] = slice(r.ylo, r.yhi, ne + 1, i);
            Rat q = (shi - slo) / 4;
            enders[i]->band_lo = slo + q;
            enders[i]->band_hi = shi - q;
            // anchor strip on the right of the content, staggered
            Rat alo = r.xlo + r.w() * 17 / 20;
            enders[i]->anchor_x = alo + (r.xhi - alo) * (i + 1) / (ne + 2);
            enders[i]->resolved = true;
        }
        auto [mlo, mhi] = slice(r.ylo, r.yhi, ne + 1, ne);

        const TreeNode& nd = t.nodes[v];
        if (nd.children.empty()) {
            if (!adv.empty()) throw std::logic_error("probe path descends past a leaf");
            return;
        }
        if (nd.children.size() != 2) throw std::logic_error("embedding expects a binary tree");
        int w0 = nd.lastborn;
        int w1 = nd.children[0] == w0 ? nd.children[1] : nd.children[0];
        if (sel(w0)) throw std::logic_error("embedding expects unselected last-borns");

        // x slots: last-born subtree left, sibling right, anchors rightmost
        Rat x0a = r.xlo, x0b = r.xlo + r.w() * 2 / 5;
        Rat x1a = r.xlo + r.w() * 1 / 2, x1b = r.xlo + r.w() * 4 / 5;
        // y split of the children slice keeps the subtrees band-disjoint
        auto [y0lo, y0hi] = slice(mlo, mhi, 2, 1);
        auto [y1lo, y1hi] = slice(mlo, mhi, 2, 0);

        Probe* w1_probe = nullptr;
        if (sel(w1)) {
            int lt = last_selected_on(t.nodes[w1].choose);
            if (lt != -1) {
                if (t.nodes[w1].choose.front() != w0)
                    throw std::logic_error("choose branch must start at the last-born");
                probes.push_back(Probe{w1, t.nodes[w1].choose, 0, lt});
                w1_probe = &probes.back();
                adv[w0].push_back(w1_probe);
            }
        }

        walk(w0, Region{x0a, x0b, y0lo, y0hi}, adv.count(w0) ? adv[w0] : std::vector<Probe*>{});

        Region r1{x1a, x1b, y1lo, y1hi};
        if (sel(w1)) {
            Frame f;
            f.id = t.nodes[w1].id;
            Probe* mine = w1_probe;
            if (mine && !mine->resolved) throw std::logic_error("unresolved probe");
            if (mine) {
                f.x1 = mine->anchor_x;
                f.x2 = x1b;
                f.y1 = mine->band_lo;
                f.y2 = mine->band_hi;
                // content sits in the sibling slot, right of every target
                Rat gx = (x1b - x1a) / 8, gy = (f.y2 - f.y1) / 8;
                r1 = Region{x1a + gx, f.x2 - gx, f.y1 + gy, f.y2 - gy};
            } else {
                Rat gx = (x1b - x1a) / 20, gy = (y1hi - y1lo) / 20;
                f = Frame{f.id, x1a + gx, y1lo + gy, x1b - gx, y1hi - gy};
                Rat cx = (f.x2 - f.x1) / 8, cy = (f.y2 - f.y1) / 8;
                r1 = Region{f.x1 + cx, f.x2 - cx, f.y1 + cy, f.y2 - cy};
            }
            out.push_back(f);
        }
        walk(w1, r1, adv.count(w1) ? adv[w1] : std::vector<Probe*>{});
    }
};

// --------------------------------------------------------------- segments
//
// Selected vertices sit at the right edge of their region, subtree content
// strictly inside their territory. A probing vertex becomes a flat segment:
// its band is carved in a dedicated zone of its deepest target's region, its
// anchor in a strip left of the target's segment, and its own subtree gets a
// separate slice of that region so it never lands in the intersection of two
// crossed territories. Branches are expected to run through last-borns and
// end on a non-choosing vertex (the shape the tree sequence produces);
// other presentations are rejected.

struct SegmentEmbedder : EmbedderBase {
    std::vector<Segment> out;

    struct EnderSpec {
        Rat ax_lo, ax_hi;  // anchor strip for probes ending here
        Rat ay_lo, ay_hi;  // band zone for those probes
        Rat cap;           // right end for their content regions
        bool usable = false;
    };

    using EmbedderBase::EmbedderBase;

    void walk(int v, Region r, EnderSpec spec, std::vector<Probe*> here) {
        std::vector<Probe*> enders;
        std::map<int, std::vector<Probe*>> adv;
        for (Probe* p : here) {
            if (p->path[p->pos] != v) throw std::logic_error("probe lost its path");
            if (p->last_target == v) {
                enders.push_back(p);
            } else {
                p->pos++;
                if (p->pos >= p->path.size())
                    throw std::logic_error("probe ran past its last target");
                adv[p->path[p->pos]].push_back(p);
            }
        }

        const int ne = enders.size();
        if (ne > 0 && !spec.usable)
            throw std::invalid_argument(
                "segment embedding: a choose branch ends at the choosing vertex " +
                t.nodes[v].id);
        // one content slice per ender plus the slice for the children
        for (int i = 0; i < ne; ++i) {
            auto [blo, bhi] = slice(spec.ay_lo, spec.ay_hi, ne, i);
            Rat q = (bhi - blo) / 4;
            enders[i]->band_lo = blo + q;
            enders[i]->band_hi = bhi - q;
            enders[i]->anchor_x =
                spec.ax_lo + (spec.ax_hi - spec.ax_lo) * (i + 1) / (ne + 2);
            auto [clo, chi] = slice(r.ylo, r.yhi, ne + 1, i);
            Rat cq = (chi - clo) / 8;
            enders[i]->content_xlo = r.xlo;
            enders[i]->content_xhi = spec.cap;
            enders[i]->content_ylo = clo + cq;
            enders[i]->content_yhi = chi - cq;
            enders[i]->resolved = true;
        }
        auto [mlo, mhi] = slice(r.ylo, r.yhi, ne + 1, ne);

        const TreeNode& nd = t.nodes[v];
        if (nd.children.empty()) {
            if (!adv.empty()) throw std::logic_error("probe path descends past a leaf");
            return;
        }
        if (nd.children.size() != 2) throw std::logic_error("embedding expects a binary tree");
        int w0 = nd.lastborn;
        int w1 = nd.children[0] == w0 ? nd.children[1] : nd.children[0];
        if (sel(w0)) throw std::logic_error("embedding expects unselected last-borns");

        Rat x0a = r.xlo, x0b = r.xlo + r.w() * 2 / 5;
        Rat x1a = r.xlo + r.w() * 1 / 2, x1b = r.xlo + r.w() * 4 / 5;
        auto [y0lo, y0hi] = slice(mlo, mhi, 2, 1);
        auto [y1lo, y1hi] = slice(mlo, mhi, 2, 0);

        Probe* w1_probe = nullptr;
        if (sel(w1)) {
            int lt = last_selected_on(t.nodes[w1].choose);
            if (lt != -1) {
                if (t.nodes[w1].choose.front() != w0)
                    throw std::logic_error("choose branch must start at the last-born");
                probes.push_back(Probe{w1, t.nodes[w1].choose, 0, lt});
                w1_probe = &probes.back();
                adv[w0].push_back(w1_probe);
            }
        }

        walk(w0, Region{x0a, x0b, y0lo, y0hi}, EnderSpec{},
             adv.count(w0) ? adv[w0] : std::vector<Probe*>{});

        if (sel(w1)) {
            Segment s;
            s.id = t.nodes[w1].id;
            if (w1_probe) {
                if (!w1_probe->resolved) throw std::logic_error("unresolved probe");
                if (adv.count(w1) && !adv[w1].empty())
                    throw std::invalid_argument(
                        "segment embedding: a choose branch runs through the choosing "
                        "vertex " + s.id);
                s.x1 = w1_probe->anchor_x;
                s.y1 = w1_probe->band_lo;
                s.x2 = x1b;
                s.y2 = w1_probe->band_hi;
                out.push_back(s);
                // subtree in its reserved slice of the target's region; no
                // probe may end at a choosing vertex
                Region r1{w1_probe->content_xlo, w1_probe->content_xhi,
                          w1_probe->content_ylo, w1_probe->content_yhi};
                walk(w1, r1, EnderSpec{}, {});
            } else {
                Rat gx = (x1b - x1a) / 20, gy = (y1hi - y1lo) / 20;
                s.x1 = x1b - (x1b - x1a) / 6;
                s.x2 = x1b - gx;
                s.y1 = y1lo + gy;
                s.y2 = y1hi - gy;
                out.push_back(s);
                // content left of the segment: bottom two thirds for the
                // subtree, top third holds bands of incoming probes
                Rat cx_hi = s.x1 - gx;
                Rat cy_lo = s.y1 + gy, cy_hi = s.y2 - gy;
                Rat ender_split = cy_lo + (cy_hi - cy_lo) * 2 / 3;
                EnderSpec sub;
                sub.ax_lo = x1a + (cx_hi - x1a) * 8 / 10;
                sub.ax_hi = cx_hi;
                sub.ay_lo = ender_split;
                sub.ay_hi = cy_hi;
                sub.cap = sub.ax_lo - gx;
                sub.usable = true;
                walk(w1, Region{x1a, cx_hi, cy_lo, ender_split}, sub,
                     adv.count(w1) ? adv[w1] : std::vector<Probe*>{});
            }
        } else {
            walk(w1, Region{x1a, x1b, y1lo, y1hi}, EnderSpec{},
                 adv.count(w1) ? adv[w1] : std::vector<Probe*>{});
        }
    }
};

}  // namespace

std::vector<Frame> embed_tree_as_frames(const DerivedSelection& sel0) {
    DerivedSelection sel = normalize(sel0);
    if (sel.selected.empty()) return {};
    FrameEmbedder e(sel.tree, sel.selected);
    e.walk(sel.tree.root, Region{Rat(0), Rat(1000), Rat(0), Rat(1000)}, {});
    return e.out;
}

std::vector<Segment> embed_tree_as_segments(const DerivedSelection& sel0) {
    DerivedSelection sel = normalize(sel0);
    if (sel.selected.empty()) return {};
    SegmentEmbedder e(sel.tree, sel.selected);
    e.walk(sel.tree.root, Region{Rat(0), Rat(1000), Rat(0), Rat(1000)},
           SegmentEmbedder::EnderSpec{}, {});
    return e.out;
}

}  // namespace burling
