#ifndef BURLING_TEXTIO_HPP
#define BURLING_TEXTIO_HPP

#include <string>
#include <vector>

#include "abstract.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "sequence.hpp"
#include "tree.hpp"

namespace burling {

// Line formats:
//   graph:    v <id> | e <a> <b> | a <from> <to> | S <id> <id> ...
//   tree:     node <id> parent=<id|-> lastborn=<yes|no> choose=<id,...|->
//             select <id>
//   relation: elem <id> | desc <a> <b> | adj <a> <b>
//   scene:    frame <id> x1 y1 x2 y2 | seg <id> x1 y1 x2 y2
//             box <id> x1 y1 x2 y2 z1 z2      (rationals as p/q)
//   coloring: c <id> <color>
// Blank lines and lines starting with '#' are ignored.

struct GraphFile {
    Graph graph;
    OrientedGraph oriented;
    bool has_arcs = false;
    std::vector<std::vector<VertexId>> stable_sets;
};

GraphFile parse_graph_text(const std::string& text);
std::string write_graph_text(const Graph& g,
                             const std::vector<std::vector<VertexId>>& stable_sets = {});
std::string write_graph_text(const OrientedGraph& g);

DerivedSelection parse_tree_text(const std::string& text);
std::string write_tree_text(const DerivedSelection& sel);

BurlingSetRel parse_relation_text(const std::string& text);
std::string write_relation_text(const BurlingSetRel& s);

Scene parse_scene_text(const std::string& text);
std::string write_scene_text(const Scene& scene);

Coloring parse_coloring_text(const std::string& text);

bool valid_vertex_id(const std::string& id);

}  // namespace burling

#endif
