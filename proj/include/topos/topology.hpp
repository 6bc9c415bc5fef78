#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "topos/classifier.hpp"
#include "topos/graph.hpp"
#include "topos/hom.hpp"

namespace topos {

enum class TopologyKind { kIdentity, kTop, kDoubleNegation, kClosed };

std::string_view topology_name(TopologyKind kind);

/// A Lawvere-Tierney topology on Ω, named by matching its table against the
/// four topologies the graph topos admits.
struct Topology {
  GraphMorphism endo;
  TopologyKind kind;

  std::string_view name() const { return topology_name(kind); }
  TruthValue operator()(TruthValue v) const { return apply(endo, v); }
};

/// Values at 0_N, N, 0_A, s, t, (s t), A in that order.
using TruthTable = std::array<TruthValue, 7>;

TruthTable table_of(const GraphMorphism& endo);
/// The hard-coded table of each known topology.
TruthTable known_table(TopologyKind kind);
GraphMorphism endo_from_table(const TruthTable& table);

/// True iff j∘⊤ = ⊤, j∘j = j and j∘∧ = ∧∘(j×j). Invalid graph morphisms are
/// not topologies. Raises GraphError unless dom = cod = Ω.
bool is_topology(const GraphMorphism& j);

/// Filters all of Hom(Ω, Ω) by is_topology.
std::vector<Topology> enumerate_topologies();

Topology identity_topology();
/// ⊤∘!: Ω -> 1 -> Ω.
Topology top_topology();
/// ¬∘¬, composed from the constructed negation.
Topology double_negation();
Topology closed_topology();
Topology make_topology(TopologyKind kind);

/// Subobject classified by j∘χ.
Subobject closure(const Subobject& sub, const GraphMorphism& j);
Subobject closure(const Subobject& sub, const Topology& j);

bool is_dense(const Subobject& sub, const Topology& j);
bool is_dense(const Subobject& sub, const GraphMorphism& j);

/// Intersection of all dense subobjects. Closure preserves intersections,
/// so this is itself dense: an element belongs to it iff the largest
/// subobject omitting that element is not dense.
Subobject minimum_dense(const FiniteGraph& g, const Topology& j);

/// Separated / sheaf predicates via the known characterizations:
///   ¬¬      separated iff no parallel arcs, sheaf iff exactly one arc per
///           ordered pair of nodes (loops included)
///   closed  separated iff at most one node, sheaf iff exactly one node
///   id      every graph is a sheaf
///   top     separated iff subterminal, sheaf iff isomorphic to 1
bool is_separated(const FiniteGraph& g, const Topology& j);
bool is_sheaf(const FiniteGraph& g, const Topology& j);

struct SeparationReport {
  bool separated = true;
  bool complete = true;
  std::size_t corpus_size = 0;
  /// Number of (Y, dense S, f: S -> X) triples examined.
  std::size_t probes = 0;
  std::string separation_witness;
  std::string completeness_witness;
};

/// Checks separation and completeness of x directly against the definition:
/// for each Y in the corpus, each j-dense S of Y and each f: S -> X, count the
/// g: Y -> X extending f. The answer is relative to the corpus.
SeparationReport definitional_separation_oracle(
    const FiniteGraph& x, const GraphMorphism& j,
    const std::vector<FiniteGraph>& corpus, const HomOptions& options = {});

/// For ¬¬-sheaves G, H: |Hom(G, H)| == |H(N)|^|G(N)|. Raises GraphError if
/// either graph is not a ¬¬-sheaf.
bool sheaf_category_equivalence_check(const FiniteGraph& g, const FiniteGraph& h,
                                      const HomOptions& options = {});

}  // namespace topos
