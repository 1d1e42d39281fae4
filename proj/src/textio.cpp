#include "textio.hpp"

#include <sstream>
#include <stdexcept>

namespace burling {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] void bad(int lineno, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
}

template <typename Fn>
void each_line(const std::string& text, Fn fn) {
    std::istringstream is(text);
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tok = tokens(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        fn(no, tok);
    }
}

}  // namespace

bool valid_vertex_id(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '.' || c == ':' || c == '-' || c == '#';
        if (!ok) return false;
    }
    return true;
}

GraphFile parse_graph_text(const std::string& text) {
    GraphFile out;
    each_line(text, [&](int no, const std::vector<std::string>& tok) {
        auto need_id = [&](const std::string& id) {
            if (!valid_vertex_id(id)) bad(no, "bad vertex id: " + id);
            return id;
        };
        if (tok[0] == "v" && tok.size() == 2) {
            out.graph.add_vertex(need_id(tok[1]));
            out.oriented.add_vertex(tok[1]);
        } else if (tok[0] == "e" && tok.size() == 3) {
            out.graph.add_edge(need_id(tok[1]), need_id(tok[2]));
        } else if (tok[0] == "a" && tok.size() == 3) {
            out.has_arcs = true;
            out.oriented.add_arc(need_id(tok[1]), need_id(tok[2]));
            out.graph.add_edge(tok[1], tok[2]);
        } else if (tok[0] == "S" && tok.size() >= 2) {
            std::vector<VertexId> s;
            for (size_t i = 1; i < tok.size(); ++i) s.push_back(need_id(tok[i]));
            out.stable_sets.push_back(s);
        } else {
            bad(no, "unrecognized graph line");
        }
    });
    return out;
}

std::string write_graph_text(const Graph& g,
                             const std::vector<std::vector<VertexId>>& stable_sets) {
    std::ostringstream os;
    for (const auto& v : g.vertices) os << "v " << v << "\n";
    for (const auto& [a, b] : g.edges) os << "e " << a << " " << b << "\n";
    for (const auto& s : stable_sets) {
        os << "S";
        for (const auto& v : s) os << " " << v;
        os << "\n";
    }
    return os.str();
}

std::string write_graph_text(const OrientedGraph& g) {
    std::ostringstream os;
    for (const auto& v : g.vertices) os << "v " << v << "\n";
    for (const auto& [a, b] : g.arcs) os << "a " << a << " " << b << "\n";
    return os.str();
}

DerivedSelection parse_tree_text(const std::string& text) {
    struct Raw {
        std::string id, parent, choose;
        bool lastborn = false;
    };
    std::vector<Raw> raws;
    std::vector<std::string> selects;
    each_line(text, [&](int no, const std::vector<std::string>& tok) {
        if (tok[0] == "node") {
            if (tok.size() != 5) bad(no, "node line needs 4 fields");
            Raw r;
            r.id = tok[1];
            for (size_t i = 2; i < 5; ++i) {
                auto kv = split(tok[i], '=');
                if (kv.size() != 2) bad(no, "bad field " + tok[i]);
                if (kv[0] == "parent")
                    r.parent = kv[1];
                else if (kv[0] == "lastborn")
                    r.lastborn = (kv[1] == "yes");
                else if (kv[0] == "choose")
                    r.choose = kv[1];
                else
                    bad(no, "unknown field " + kv[0]);
            }
            raws.push_back(r);
        } else if (tok[0] == "select" && tok.size() == 2) {
            selects.push_back(tok[1]);
        } else {
            bad(no, "unrecognized tree line");
        }
    });

    DerivedSelection out;
    BurlingTree& t = out.tree;
    // two passes so parents may appear after children
    for (const auto& r : raws) {
        TreeNode n;
        n.id = r.id;
        if (t.index.count(r.id)) throw std::invalid_argument("duplicate node id: " + r.id);
        t.index[r.id] = t.nodes.size();
        t.nodes.push_back(n);
    }
    for (const auto& r : raws) {
        int v = t.idx(r.id);
        if (r.parent == "-") {
            if (t.root != -1) throw std::invalid_argument("two roots in tree file");
            t.root = v;
        } else {
            int p = t.idx(r.parent);
            t.nodes[v].parent = p;
            t.nodes[p].children.push_back(v);
            if (r.lastborn) t.nodes[p].lastborn = v;
        }
        if (r.choose != "-" && !r.choose.empty())
            for (const auto& cid : split(r.choose, ','))
                t.nodes[v].choose.push_back(t.idx(cid));
    }
    if (t.root == -1) throw std::invalid_argument("tree file has no root");
    for (const auto& s : selects) out.selected.insert(t.nodes[t.idx(s)].id);
    return out;
}

std::string write_tree_text(const DerivedSelection& sel) {
    const BurlingTree& t = sel.tree;
    std::ostringstream os;
    for (size_t v = 0; v < t.nodes.size(); ++v) {
        const TreeNode& n = t.nodes[v];
        os << "node " << n.id << " parent=";
        os << (n.parent == -1 ? "-" : t.nodes[n.parent].id);
        os << " lastborn=" << (t.is_lastborn(v) ? "yes" : "no");
        os << " choose=";
        if (n.choose.empty()) {
            os << "-";
        } else {
            for (size_t i = 0; i < n.choose.size(); ++i)
                os << (i ? "," : "") << t.nodes[n.choose[i]].id;
        }
        os << "\n";
    }
    for (const auto& s : sel.selected) os << "select " << s << "\n";
    return os.str();
}

BurlingSetRel parse_relation_text(const std::string& text) {
    BurlingSetRel s;
    each_line(text, [&](int no, const std::vector<std::string>& tok) {
        if (tok[0] == "elem" && tok.size() == 2) {
            s.add_elem(tok[1]);
        } else if (tok[0] == "desc" && tok.size() == 3) {
            s.add_elem(tok[1]);
            s.add_elem(tok[2]);
            s.desc.insert({tok[1], tok[2]});
        } else if (tok[0] == "adj" && tok.size() == 3) {
            s.add_elem(tok[1]);
            s.add_elem(tok[2]);
            s.adj.insert({tok[1], tok[2]});
        } else {
            bad(no, "unrecognized relation line");
        }
    });
    return s;
}

std::string write_relation_text(const BurlingSetRel& s) {
    std::ostringstream os;
    for (const auto& e : s.elements) os << "elem " << e << "\n";
    for (const auto& [a, b] : s.desc) os << "desc " << a << " " << b << "\n";
    for (const auto& [a, b] : s.adj) os << "adj " << a << " " << b << "\n";
    return os.str();
}

Scene parse_scene_text(const std::string& text) {
    Scene scene;
    bool kind_set = false;
    auto set_kind = [&](SceneKind k, int no) {
        if (!kind_set) {
            scene.kind = k;
            kind_set = true;
        } else if (scene.kind != k) {
            bad(no, "mixed scene kinds");
        }
    };
    each_line(text, [&](int no, const std::vector<std::string>& tok) {
        if (tok[0] == "frame" && tok.size() == 6) {
            set_kind(SceneKind::Frames, no);
            scene.frames.push_back({tok[1], parse_rat(tok[2]), parse_rat(tok[3]),
                                    parse_rat(tok[4]), parse_rat(tok[5])});
        } else if (tok[0] == "seg" && tok.size() == 6) {
            set_kind(SceneKind::Segments, no);
            scene.segments.push_back({tok[1], parse_rat(tok[2]), parse_rat(tok[3]),
                                      parse_rat(tok[4]), parse_rat(tok[5])});
        } else if (tok[0] == "box" && tok.size() == 8) {
            set_kind(SceneKind::Boxes, no);
            scene.boxes.push_back({tok[1], parse_rat(tok[2]), parse_rat(tok[3]),
                                   parse_rat(tok[4]), parse_rat(tok[5]), parse_rat(tok[6]),
                                   parse_rat(tok[7])});
        } else {
            bad(no, "unrecognized scene line");
        }
    });
    return scene;
}

std::string write_scene_text(const Scene& scene) {
    std::ostringstream os;
    for (const auto& f : scene.frames)
        os << "frame " << f.id << " " << rat_str(f.x1) << " " << rat_str(f.y1) << " "
           << rat_str(f.x2) << " " << rat_str(f.y2) << "\n";
    for (const auto& s : scene.segments)
        os << "seg " << s.id << " " << rat_str(s.x1) << " " << rat_str(s.y1) << " "
           << rat_str(s.x2) << " " << rat_str(s.y2) << "\n";
    for (const auto& b : scene.boxes)
        os << "box " << b.id << " " << rat_str(b.x1) << " " << rat_str(b.y1) << " "
           << rat_str(b.x2) << " " << rat_str(b.y2) << " " << rat_str(b.z1) << " "
           << rat_str(b.z2) << "\n";
    return os.str();
}

Coloring parse_coloring_text(const std::string& text) {
    Coloring col;
    each_line(text, [&](int no, const std::vector<std::string>& tok) {
        if (tok[0] == "c" && tok.size() == 3) {
            try {
                col[tok[1]] = std::stoi(tok[2]);
            } catch (const std::exception&) {
                bad(no, "bad color index");
            }
        } else {
            bad(no, "unrecognized coloring line");
        }
    });
    return col;
}

}  // namespace burling
