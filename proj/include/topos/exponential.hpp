#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "topos/graph.hpp"
#include "topos/hom.hpp"
#include "topos/limits.hpp"

namespace topos {

/// A×G: two copies of G's nodes (first copy at indices [0, n), second at
/// [n, 2n)), one arc per arc of G running from the first copy of its source
/// to the second copy of its target. Identifiers match product(A, G).
FiniteGraph twisted_product_with_arc(const FiniteGraph& g);

/// H^G together with the meaning of each node and arc.
///
/// Nodes are all functions G(N) -> H(N), listed in mixed-radix order (the
/// function at index i sends node k of G to digit k of i, most significant
/// digit first). Arcs are all morphisms A×G -> H in enumeration order; an
/// arc's source (target) is the restriction of its morphism to the first
/// (second) copy of G(N).
struct ExponentialGraph {
  GraphRef base;      // H
  GraphRef exponent;  // G
  GraphRef twisted;   // A×G
  GraphRef graph;     // H^G
  std::vector<std::vector<std::size_t>> node_meaning;
  std::vector<GraphMorphism> arc_meaning;

  std::size_t node_of(const std::vector<std::size_t>& function) const;
  std::size_t arc_of(const GraphMorphism& relaxed) const;

 private:
  friend ExponentialGraph exponential(const GraphRef&, const GraphRef&,
                                      const HomOptions&);
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>,
           std::size_t>
      arc_lookup_;
};

/// H^G. Both the node count |H(N)|^|G(N)| and the arc enumeration are
/// subject to options.cap.
ExponentialGraph exponential(const GraphRef& g, const GraphRef& h,
                             const HomOptions& options = {});
ExponentialGraph exponential(const FiniteGraph& g, const FiniteGraph& h,
                             const HomOptions& options = {});

/// The counit H^G × G -> H, with its domain product.
struct Evaluation {
  Product domain;
  GraphMorphism map;
};

Evaluation eval(const ExponentialGraph& expo);

/// f: F×G -> H  |->  F -> H^G. The domain of f must be product(F, G) with
/// G = expo.exponent and cod(f) = expo.base.
GraphMorphism curry(const GraphMorphism& f, const Product& domain,
                    const ExponentialGraph& expo);

/// Inverse of curry: g: F -> H^G  |->  F×G -> H over the given product.
GraphMorphism uncurry(const GraphMorphism& g, const Product& domain,
                      const ExponentialGraph& expo);

/// The morphism G -> H represented by a self-loop arc of H^G.
GraphMorphism loop_morphism(const ExponentialGraph& expo, std::size_t arc);

}  // namespace topos
