#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "topos/graph.hpp"
#include "topos/limits.hpp"

namespace topos {

/// The seven truth values of the graph topos. Node-stage values are the two
/// subobjects of N, arc-stage values the five subobjects of A. The numeric
/// order within each stage is the node/arc index inside omega().
enum class TruthValue {
  kNodeFalse,  // 0_N
  kNodeTrue,   // N
  kArcNone,    // 0_A
  kArcSource,  // s: only the source node
  kArcTarget,  // t: only the target node
  kArcEnds,    // (s t): both nodes, no arc
  kArcFull,    // A
};

inline constexpr std::array<TruthValue, 2> kNodeTruths = {
    TruthValue::kNodeFalse, TruthValue::kNodeTrue};
inline constexpr std::array<TruthValue, 5> kArcTruths = {
    TruthValue::kArcNone, TruthValue::kArcSource, TruthValue::kArcTarget,
    TruthValue::kArcEnds, TruthValue::kArcFull};

bool is_node_stage(TruthValue v);
/// Identifier inside omega(): 0_N, N, 0_A, s, t, st, A.
std::string_view truth_id(TruthValue v);
/// Display name: as truth_id, except "(s t)".
std::string_view truth_name(TruthValue v);
std::optional<TruthValue> truth_from_name(std::string_view name);

/// Index of a truth value inside omega() (node index or arc index).
std::size_t omega_index(TruthValue v);
TruthValue node_truth(std::size_t node);
TruthValue arc_truth(std::size_t arc);

/// The truth order: 0_N < N, and 0_A < s, t < (s t) < A with s, t
/// incomparable.
bool truth_leq(TruthValue a, TruthValue b);

/// Ω, constructed from its definition: nodes are the subobjects of N, arcs
/// the subobjects of A, endpoints given by restriction along s, t: N -> A.
const GraphRef& omega();
/// The hard-coded 2-node, 5-arc fixture the construction must reproduce.
FiniteGraph omega_fixture();

/// ⊤: 1 -> Ω, sending the node to N and the loop to A.
GraphMorphism true_arrow();
/// ⊥: 1 -> Ω, the characteristic map of 0 -> 1.
GraphMorphism false_arrow();

/// χ: ambient -> Ω by the five classifying rules.
GraphMorphism characteristic(const Subobject& sub);
/// Nodes sent to N and arcs sent to A.
Subobject subobject_from_characteristic(const GraphMorphism& chi);

/// ∧: Ω×Ω -> Ω, the characteristic map of <⊤,⊤>: 1 -> Ω×Ω.
const GraphMorphism& conjunction();
/// ¬: Ω -> Ω, the characteristic map of ⊥: 1 -> Ω.
const GraphMorphism& negation();
const Product& omega_squared();

/// Table lookups on the constructed connectives.
TruthValue apply_and(TruthValue a, TruthValue b);
TruthValue apply_not(TruthValue a);
/// Value of an endomorphism Ω -> Ω at a truth value.
TruthValue apply(const GraphMorphism& endo, TruthValue v);

std::size_t count_subobjects(const FiniteGraph& g);

}  // namespace topos
