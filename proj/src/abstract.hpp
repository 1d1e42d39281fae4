#ifndef BURLING_ABSTRACT_HPP
#define BURLING_ABSTRACT_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "tree.hpp"

namespace burling {

// Finite set with a strict partial order (desc) and an acyclic relation (adj)
// subject to the four Burling-set axioms.
struct BurlingSetRel {
    std::vector<std::string> elements;  // insertion order kept for io
    std::set<std::pair<std::string, std::string>> desc;  // (x,y) means x < y
    std::set<std::pair<std::string, std::string>> adj;   // (x,y) means x -> y

    bool has_elem(const std::string& e) const {
        for (const auto& x : elements)
            if (x == e) return true;
        return false;
    }
    void add_elem(const std::string& e) {
        if (!has_elem(e)) elements.push_back(e);
    }
};

// Violations name the broken law: "empty-set", "unknown-element",
// "desc-not-asymmetric", "desc-not-transitive", "adj-cycle",
// "axiom-i" .. "axiom-iv".
std::vector<Violation> validate_axioms(const BurlingSetRel& s);
void require_valid(const BurlingSetRel& s);

BurlingSetRel from_tree(const BurlingTree& t);

OrientedGraph gr(const BurlingSetRel& s);

// Minimal element of adj u desc, smallest id among the minimal ones.
std::string minimal_element(const BurlingSetRel& s);

// [x->] then [x<] in their unique chain order.
std::vector<std::string> chain_of(const BurlingSetRel& s, const std::string& x);

struct ReconstructedTree {
    BurlingTree tree;
    std::map<std::string, std::string> embedding;  // element -> node id (identity here)
};

// Constructive realization: a Burling tree whose induced relations on the
// embedded elements reproduce (desc, adj) exactly.
ReconstructedTree to_burling_tree(const BurlingSetRel& s);

}  // namespace burling

#endif
