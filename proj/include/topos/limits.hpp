#pragma once

#include <cstddef>

#include "topos/graph.hpp"

namespace topos {

// Finite (co)limits, computed separately on nodes and on arcs.
//
// Identifier scheme:
//   product        node/arc "(x,y)"; pair (i, j) sits at index i*|rhs| + j
//   coproduct      "inl:x" / "inr:y"; left summand first
//   coequalizer    the smallest identifier of each class
//   pullback       the product identifiers of the retained pairs

FiniteGraph initial_graph();
/// One node "*" with one loop "loop".
FiniteGraph terminal_graph();

/// The unique morphism G -> 1.
GraphMorphism to_terminal(const GraphRef& g);
GraphMorphism to_terminal(const FiniteGraph& g);
/// The unique morphism 0 -> G.
GraphMorphism from_initial(const GraphRef& g);

struct Product {
  GraphRef graph;
  GraphMorphism proj1;
  GraphMorphism proj2;

  std::size_t node_index(std::size_t left, std::size_t right) const {
    return left * proj2.cod().node_count() + right;
  }
  std::size_t arc_index(std::size_t left, std::size_t right) const {
    return left * proj2.cod().arc_count() + right;
  }
};

Product product(const GraphRef& g, const GraphRef& h);
Product product(const FiniteGraph& g, const FiniteGraph& h);

/// <f, g>: W -> G×H for f: W -> G, g: W -> H.
GraphMorphism pairing(const Product& p, const GraphMorphism& f,
                      const GraphMorphism& g);
/// f×g: dom(f)×dom(g) -> cod(f)×cod(g) between the given products.
GraphMorphism product_map(const Product& source, const Product& target,
                          const GraphMorphism& f, const GraphMorphism& g);

struct Coproduct {
  GraphRef graph;
  GraphMorphism inj1;
  GraphMorphism inj2;
};

Coproduct coproduct(const GraphRef& g, const GraphRef& h);
Coproduct coproduct(const FiniteGraph& g, const FiniteGraph& h);

/// [f, g]: G+H -> W for f: G -> W, g: H -> W.
GraphMorphism copairing(const Coproduct& c, const GraphMorphism& f,
                        const GraphMorphism& g);

/// Nodes and arcs of dom on which f and g agree.
Subobject equalizer(const GraphMorphism& f, const GraphMorphism& g);

struct Quotient {
  GraphRef graph;
  GraphMorphism map;
};

/// Quotient of cod by the equivalence generated by f(x) ~ g(x).
Quotient coequalizer(const GraphMorphism& f, const GraphMorphism& g);

struct Pullback {
  GraphRef graph;
  GraphMorphism proj1;
  GraphMorphism proj2;
};

/// Pullback of f: X -> Z and g: Y -> Z.
Pullback pullback(const GraphMorphism& f, const GraphMorphism& g);

struct Pushout {
  GraphRef graph;
  GraphMorphism inj1;
  GraphMorphism inj2;
};

/// Pushout of f: Z -> X and g: Z -> Y.
Pushout pushout(const GraphMorphism& f, const GraphMorphism& g);

}  // namespace topos
