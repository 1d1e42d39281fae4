#ifndef BURLING_COLORING_HPP
#define BURLING_COLORING_HPP

#include <optional>

#include "graph.hpp"

namespace burling {

struct ChromaticResult {
    bool decided = false;
    int chi = -1;             // exact value when decided
    int best_lower = 1;       // k such that non-(k-1)-colorability was proved
    long long nodes_used = 0;
};

// Exhaustive k-colorability search (MRV branching with forward checking).
// budget counts branch nodes; Undecided when exhausted.
Tri k_colorable(const Graph& g, int k, long long budget,
                Coloring* witness = nullptr, long long* nodes_used = nullptr);

// Exact chromatic number by iterated k-colorability, k = 1, 2, ...
// Never reports a wrong number: when the budget runs out the result is
// undecided and best_lower records the largest proved lower bound.
ChromaticResult chromatic_number(const Graph& g, long long budget = 50'000'000);

}  // namespace burling

#endif
