#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace topos {

/// Raised when an input violates a domain invariant (dangling endpoint,
/// non-parallel pair, non-mono where a mono is required, ...).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a search would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ArcDecl {
  std::string id;
  std::string source;
  std::string target;
};

/// A finite directed multigraph: node set, arc set, and total source/target
/// assignments. Identifiers are opaque strings, unique within the graph
/// across both sorts. Internally everything is index based; indices follow
/// declaration order.
class FiniteGraph {
 public:
  FiniteGraph() = default;

  /// Validated construction from identifiers and index-based endpoints.
  FiniteGraph(std::vector<std::string> nodes, std::vector<std::string> arcs,
              std::vector<std::size_t> source, std::vector<std::size_t> target);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  bool empty() const { return nodes_.empty(); }

  const std::string& node_id(std::size_t n) const { return nodes_.at(n); }
  const std::string& arc_id(std::size_t a) const { return arcs_.at(a); }
  const std::vector<std::string>& node_ids() const { return nodes_; }
  const std::vector<std::string>& arc_ids() const { return arcs_; }

  std::size_t source(std::size_t a) const { return src_[a]; }
  std::size_t target(std::size_t a) const { return tgt_[a]; }
  const std::vector<std::size_t>& sources() const { return src_; }
  const std::vector<std::size_t>& targets() const { return tgt_; }

  std::optional<std::size_t> find_node(const std::string& id) const;
  std::optional<std::size_t> find_arc(const std::string& id) const;
  /// Throwing lookups.
  std::size_t node(const std::string& id) const;
  std::size_t arc(const std::string& id) const;

  /// Equality of labelled structure: same identifier sets and the same
  /// endpoints per arc identifier. Declaration order is irrelevant.
  friend bool operator==(const FiniteGraph& lhs, const FiniteGraph& rhs);

 private:
  std::vector<std::string> nodes_;
  std::vector<std::string> arcs_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> tgt_;
  std::unordered_map<std::string, std::size_t> node_index_;
  std::unordered_map<std::string, std::size_t> arc_index_;
};

using GraphRef = std::shared_ptr<const FiniteGraph>;

inline GraphRef share(FiniteGraph g) {
  return std::make_shared<const FiniteGraph>(std::move(g));
}

/// Identifier-based construction. A dangling endpoint raises a GraphError
/// naming the offending arc.
FiniteGraph make_graph(std::vector<std::string> nodes,
                       std::vector<std::string> arcs,
                       const std::map<std::string, std::string>& src,
                       const std::map<std::string, std::string>& tgt);
FiniteGraph make_graph(std::vector<std::string> nodes,
                       const std::vector<ArcDecl>& arcs);

/// The representable N: a single node named "N".
FiniteGraph node_graph();
/// The representable A: nodes "s", "t" and one arc "A" from s to t.
FiniteGraph arc_graph();

/// A pair of maps (nodes, arcs) between two graphs. Construction only checks
/// that the maps are total and in range; naturality is checked by
/// validate_morphism so that invalid candidates can be represented and
/// diagnosed.
class GraphMorphism {
 public:
  GraphMorphism(GraphRef dom, GraphRef cod, std::vector<std::size_t> node_map,
                std::vector<std::size_t> arc_map);
  GraphMorphism(const FiniteGraph& dom, const FiniteGraph& cod,
                std::vector<std::size_t> node_map,
                std::vector<std::size_t> arc_map);

  const FiniteGraph& dom() const { return *dom_; }
  const FiniteGraph& cod() const { return *cod_; }
  const GraphRef& dom_ref() const { return dom_; }
  const GraphRef& cod_ref() const { return cod_; }

  std::size_t node(std::size_t n) const { return node_map_[n]; }
  std::size_t arc(std::size_t a) const { return arc_map_[a]; }
  const std::vector<std::size_t>& node_map() const { return node_map_; }
  const std::vector<std::size_t>& arc_map() const { return arc_map_; }

  friend bool operator==(const GraphMorphism& lhs, const GraphMorphism& rhs);

 private:
  GraphRef dom_;
  GraphRef cod_;
  std::vector<std::size_t> node_map_;
  std::vector<std::size_t> arc_map_;
};

struct MorphismCheck {
  bool valid = true;
  /// One entry per arc whose source or target is not preserved.
  std::vector<std::string> violations;
  explicit operator bool() const { return valid; }
};

MorphismCheck validate_morphism(const GraphMorphism& f);

GraphMorphism identity(const FiniteGraph& g);
GraphMorphism identity(const GraphRef& g);

/// `first` followed by `second`; requires cod(first) == dom(second).
GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second);

bool is_mono(const GraphMorphism& f);
bool is_epi(const GraphMorphism& f);
bool is_iso(const GraphMorphism& f);

/// A subgraph stored canonically as node and arc masks over an ambient graph.
/// Every arc in the mask has both endpoints in the mask.
class Subobject {
 public:
  Subobject(GraphRef ambient, std::vector<bool> nodes, std::vector<bool> arcs);
  Subobject(const FiniteGraph& ambient, std::vector<bool> nodes,
            std::vector<bool> arcs);

  static Subobject full(const GraphRef& ambient);
  static Subobject full(const FiniteGraph& ambient);
  static Subobject none(const GraphRef& ambient);
  static Subobject none(const FiniteGraph& ambient);
  /// From a mixed list of node and arc identifiers. Endpoint closure is
  /// checked, not inferred.
  static Subobject from_ids(const FiniteGraph& ambient,
                            const std::vector<std::string>& ids);

  const FiniteGraph& ambient() const { return *ambient_; }
  const GraphRef& ambient_ref() const { return ambient_; }
  bool has_node(std::size_t n) const { return nodes_[n]; }
  bool has_arc(std::size_t a) const { return arcs_[a]; }
  const std::vector<bool>& node_mask() const { return nodes_; }
  const std::vector<bool>& arc_mask() const { return arcs_; }
  std::size_t node_count() const;
  std::size_t arc_count() const;

  bool is_full() const;
  bool is_empty() const;
  bool subset_of(const Subobject& other) const;

  /// The subgraph itself, with the ambient identifiers.
  FiniteGraph to_graph() const;
  /// The inclusion to_graph() -> ambient.
  GraphMorphism inclusion() const;

  /// Sorted-by-index listing of the member identifiers, nodes first.
  std::vector<std::string> member_ids() const;

  friend bool operator==(const Subobject& lhs, const Subobject& rhs);

 private:
  GraphRef ambient_;
  std::vector<bool> nodes_;
  std::vector<bool> arcs_;
};

Subobject intersection(const Subobject& lhs, const Subobject& rhs);

/// Image of a mono; raises GraphError when m is not mono.
Subobject canonical_subobject(const GraphMorphism& m);
/// Image of an arbitrary morphism (always a subgraph of the codomain).
Subobject image(const GraphMorphism& f);
/// Inverse image of a subobject of cod(f) along f.
Subobject preimage(const Subobject& sub, const GraphMorphism& f);

/// All subobjects of g in a deterministic order: node subsets in binary
/// counting order, then admissible arc subsets in binary counting order.
std::vector<Subobject> enumerate_subobjects(const FiniteGraph& g);

struct IsoResult {
  bool isomorphic = false;
  std::optional<GraphMorphism> witness;
  explicit operator bool() const { return isomorphic; }
};

/// Backtracking isomorphism search with degree-signature pruning.
IsoResult are_isomorphic(const FiniteGraph& g, const FiniteGraph& h);

std::string describe(const GraphMorphism& f);

}  // namespace topos
