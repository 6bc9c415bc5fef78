#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "topos/graph.hpp"
#include "topos/hom.hpp"
#include "topos/topology.hpp"

namespace topos {

/// A finite nonempty set of labels, in declaration order.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<std::size_t> find(const std::string& symbol) const;

  friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
    return lhs.symbols_ == rhs.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// The one-node graph "*" whose arcs are the symbols.
FiniteGraph alphabet_graph(const Alphabet& sigma);

/// An object of the slice over the alphabet graph: a graph plus a label per
/// arc (indices into the alphabet).
class LabelledGraph {
 public:
  LabelledGraph(GraphRef graph, Alphabet alphabet, std::vector<std::size_t> labels);
  LabelledGraph(const FiniteGraph& graph, Alphabet alphabet,
                std::vector<std::size_t> labels);
  /// Labels given by symbol name, one per arc in arc order.
  static LabelledGraph with_symbols(const FiniteGraph& graph, Alphabet alphabet,
                                    const std::vector<std::string>& labels);

  const FiniteGraph& graph() const { return *graph_; }
  const GraphRef& graph_ref() const { return graph_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t label(std::size_t arc) const { return labels_[arc]; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  const std::string& label_symbol(std::size_t arc) const {
    return alphabet_.symbol(labels_[arc]);
  }

  /// The structure map G -> Σ.
  GraphMorphism labelling() const;

  friend bool operator==(const LabelledGraph& lhs, const LabelledGraph& rhs);

 private:
  GraphRef graph_;
  Alphabet alphabet_;
  std::vector<std::size_t> labels_;
};

/// Reads a morphism G -> Σ as a labelled graph.
LabelledGraph from_slice_object(const GraphMorphism& structure, const Alphabet& sigma);

/// The terminal object of the slice: Σ labelled by itself.
LabelledGraph slice_terminal(const Alphabet& sigma);

bool validate_slice_morphism(const GraphMorphism& f, const LabelledGraph& l,
                             const LabelledGraph& m);

/// Label-preserving graph morphisms L -> M in enumeration order.
std::vector<GraphMorphism> enumerate_slice_homs(const LabelledGraph& l,
                                                const LabelledGraph& m,
                                                const HomOptions& options = {});

/// No two distinct arcs share (source, target, label).
bool is_transition_system(const LabelledGraph& l);

/// Σ×Ω labelled by the first projection.
LabelledGraph slice_classifier(const Alphabet& sigma);
/// ⊤ in the slice: Σ -> Σ×Ω, node to (*, N), symbol α to (α, A).
GraphMorphism slice_true(const Alphabet& sigma);
/// The slice characteristic map L -> Σ×Ω of a subobject of L's graph.
GraphMorphism slice_characteristic(const LabelledGraph& l, const Subobject& sub);
/// Subobject of L's graph classified by a slice morphism into Σ×Ω.
Subobject slice_subobject_from_characteristic(const GraphMorphism& chi,
                                              const Alphabet& sigma);
/// Closure in the slice: classify by (id_Σ × j) ∘ χ.
Subobject slice_closure(const LabelledGraph& l, const Subobject& sub,
                        const Topology& j);

/// Separated for the labelwise double negation topology; equal to
/// is_transition_system.
bool is_separated_ts(const LabelledGraph& l);

/// The definitional check of ¬¬-separation/completeness in the slice,
/// relative to a corpus of labelled probe graphs over the same alphabet.
SeparationReport slice_separation_oracle(const LabelledGraph& x,
                                         const std::vector<LabelledGraph>& corpus,
                                         const HomOptions& options = {});

/// Product in the slice (pullback over Σ): node pairs, and pairs of equally
/// labelled arcs.
LabelledGraph slice_product(const LabelledGraph& l, const LabelledGraph& m);

/// Characterization: m is mono and its image is an induced subgraph. Raises
/// GraphError if m is not a mono slice morphism.
bool is_strong_mono(const GraphMorphism& m, const LabelledGraph& s,
                    const LabelledGraph& x);

/// An epimorphism in the category of transition systems: a slice morphism
/// that is surjective on nodes.
bool is_ts_epi(const GraphMorphism& e);

struct DiagonalReport {
  bool strong = true;
  std::size_t squares = 0;
  std::string witness;
};

struct LabelledEpi {
  LabelledGraph source;
  LabelledGraph target;
  GraphMorphism map;
};

/// Diagonal fill-in: for each epi e: X' -> Y' between objects of the square
/// corpus and each commuting square m∘f = g∘e, a diagonal d with m∘d = g
/// must exist. Since m is mono, f is determined by g and d exists iff g
/// factors through m.
DiagonalReport strong_mono_by_diagonals(const GraphMorphism& m,
                                        const LabelledGraph& s,
                                        const LabelledGraph& x,
                                        const std::vector<LabelledEpi>& epis,
                                        const HomOptions& options = {});

/// Epis (is_ts_epi) between all ordered pairs of transition systems in the
/// corpus.
std::vector<LabelledEpi> enumerate_ts_epis(const std::vector<LabelledGraph>& corpus,
                                           const HomOptions& options = {});

/// The labelled subgraph picked out by a subobject of l's graph.
LabelledGraph restrict_to(const LabelledGraph& l, const Subobject& sub);

/// One labelled graph per labelled isomorphism class with at most max_nodes
/// nodes and max_arcs arcs.
std::vector<LabelledGraph> labelled_corpus(const Alphabet& sigma,
                                           std::size_t max_nodes,
                                           std::size_t max_arcs);

/// δ: Σ × X -> 2^X, with delta[symbol][state] the sorted target set.
struct Automaton {
  std::vector<std::string> states;
  Alphabet alphabet;
  std::vector<std::vector<std::set<std::size_t>>> delta;

  Automaton(std::vector<std::string> states, Alphabet alphabet);
  void add(std::size_t symbol, std::size_t from, std::size_t to);

  friend bool operator==(const Automaton& lhs, const Automaton& rhs);
};

/// One arc "x-α->y" per y ∈ δ(α, x).
LabelledGraph automaton_to_lts(const Automaton& a);
/// Rejects graphs that are not transition systems.
Automaton lts_to_automaton(const LabelledGraph& l);

/// f(δ(α, x)) ⊆ δ'(α, f(x)) for every α, x.
bool is_automaton_morphism(const std::vector<std::size_t>& state_map,
                           const Automaton& from, const Automaton& to);
/// The unique labelled graph morphism over a node map into a transition
/// system, if one exists.
std::optional<GraphMorphism> extend_node_map(const std::vector<std::size_t>& node_map,
                                              const LabelledGraph& from,
                                              const LabelledGraph& to);

}  // namespace topos
