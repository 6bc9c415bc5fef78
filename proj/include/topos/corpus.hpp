#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "topos/graph.hpp"

namespace topos {

/// (source, target, label) with nodes as indices; unlabelled arcs use label 0.
using ArcTriple = std::tuple<std::size_t, std::size_t, std::size_t>;

/// Isomorphism-invariant key: the lexicographically smallest sorted arc list
/// over all relabellings of the nodes. Exhaustive over node permutations, so
/// only for small graphs.
std::vector<ArcTriple> canonical_arcs(std::size_t nodes,
                                      const std::vector<ArcTriple>& arcs);

/// Every finite graph with at most max_nodes nodes and max_arcs arcs, one per
/// isomorphism class, ordered by (node count, arc count, canonical arc list).
/// Nodes are named v0, v1, ... and arcs e0, e1, ...
std::vector<FiniteGraph> graph_corpus(std::size_t max_nodes, std::size_t max_arcs);

}  // namespace topos
