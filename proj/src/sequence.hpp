#ifndef BURLING_SEQUENCE_HPP
#define BURLING_SEQUENCE_HPP

#include <optional>
#include <vector>

#include "graph.hpp"
#include "tree.hpp"

namespace burling {

// G_k together with its stable-set family; family order is
// lexicographic by provenance: index 2*(i*s + j) + t where i indexes S,
// j indexes Q in the copy for S, and t = 0 for S u Q, 1 for S u {v_{S,Q}}.
struct SequencePair {
    int k = 1;
    Graph graph;
    std::vector<std::vector<VertexId>> stable_family;
};

struct TreeSequenceEntry {
    int k = 1;
    BurlingTree tree;
    std::vector<std::vector<VertexId>> principal_set;  // same order as stable_family
};

inline constexpr int kSequenceCap = 5;  // |V(G_6)| explodes

SequencePair next_b(const SequencePair& p);
SequencePair burling_sequence(int k);

TreeSequenceEntry next_t(const TreeSequenceEntry& e);
TreeSequenceEntry tree_sequence(int k);

// Lemma: G_k is fully derived from T_k and P_k = S_k, as labeled objects.
bool verify_correspondence(int k);

// Returns a member of the stable family carrying >= k distinct colors,
// following the recursive argument of the chromatic lower-bound proof.
std::vector<VertexId> witness_stable_set(const SequencePair& p, const Coloring& col);

// Smallest k <= k_max such that T_k extends t; nullopt is inconclusive.
std::optional<std::pair<int, std::map<std::string, std::string>>> find_extension_index(
    const BurlingTree& t, int k_max, long long budget = 5'000'000);

}  // namespace burling

#endif
