#include "topos/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <tuple>

namespace topos {

FiniteGraph::FiniteGraph(std::vector<std::string> nodes,
                         std::vector<std::string> arcs,
                         std::vector<std::size_t> source,
                         std::vector<std::size_t> target)
    : nodes_(std::move(nodes)),
      arcs_(std::move(arcs)),
      src_(std::move(source)),
      tgt_(std::move(target)) {
  if (src_.size() != arcs_.size() || tgt_.size() != arcs_.size()) {
    throw GraphError("source/target assignments must cover every arc");
  }
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (!node_index_.emplace(nodes_[n], n).second) {
      throw GraphError("duplicate node identifier '" + nodes_[n] + "'");
    }
  }
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    if (node_index_.count(arcs_[a]) != 0 ||
        !arc_index_.emplace(arcs_[a], a).second) {
      throw GraphError("duplicate identifier '" + arcs_[a] + "'");
    }
    if (src_[a] >= nodes_.size() || tgt_[a] >= nodes_.size()) {
      throw GraphError("arc '" + arcs_[a] + "' has a dangling endpoint");
    }
  }
}

std::optional<std::size_t> FiniteGraph::find_node(const std::string& id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteGraph::find_arc(const std::string& id) const {
  auto it = arc_index_.find(id);
  if (it == arc_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGraph::node(const std::string& id) const {
  if (auto n = find_node(id)) return *n;
  throw GraphError("unknown node '" + id + "'");
}

std::size_t FiniteGraph::arc(const std::string& id) const {
  if (auto a = find_arc(id)) return *a;
  throw GraphError("unknown arc '" + id + "'");
}

bool operator==(const FiniteGraph& lhs, const FiniteGraph& rhs) {
  if (lhs.node_count() != rhs.node_count() ||
      lhs.arc_count() != rhs.arc_count()) {
    return false;
  }
  for (const auto& id : lhs.nodes_) {
    if (!rhs.find_node(id)) return false;
  }
  for (std::size_t a = 0; a < lhs.arc_count(); ++a) {
    auto b = rhs.find_arc(lhs.arcs_[a]);
    if (!b) return false;
    if (lhs.node_id(lhs.src_[a]) != rhs.node_id(rhs.src_[*b]) ||
        lhs.node_id(lhs.tgt_[a]) != rhs.node_id(rhs.tgt_[*b])) {
      return false;
    }
  }
  return true;
}

FiniteGraph make_graph(std::vector<std::string> nodes,
                       std::vector<std::string> arcs,
                       const std::map<std::string, std::string>& src,
                       const std::map<std::string, std::string>& tgt) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t n = 0; n < nodes.size(); ++n) index.emplace(nodes[n], n);
  std::vector<std::size_t> s(arcs.size()), t(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    auto si = src.find(arcs[a]);
    auto ti = tgt.find(arcs[a]);
    if (si == src.end() || ti == tgt.end()) {
      throw GraphError("arc '" + arcs[a] + "' has no source or target");
    }
    auto sn = index.find(si->second);
    auto tn = index.find(ti->second);
    if (sn == index.end() || tn == index.end()) {
      throw GraphError("arc '" + arcs[a] + "' has a dangling endpoint");
    }
    s[a] = sn->second;
    t[a] = tn->second;
  }
  for (const auto& [arc, _] : src) {
    if (std::find(arcs.begin(), arcs.end(), arc) == arcs.end()) {
      throw GraphError("source assigned to undeclared arc '" + arc + "'");
    }
  }
  for (const auto& [arc, _] : tgt) {
    if (std::find(arcs.begin(), arcs.end(), arc) == arcs.end()) {
      throw GraphError("target assigned to undeclared arc '" + arc + "'");
    }
  }
  return FiniteGraph(std::move(nodes), std::move(arcs), std::move(s),
                     std::move(t));
}

FiniteGraph make_graph(std::vector<std::string> nodes,
                       const std::vector<ArcDecl>& arcs) {
  std::vector<std::string> ids;
  std::map<std::string, std::string> src, tgt;
  for (const auto& a : arcs) {
    if (src.count(a.id) != 0) {
      throw GraphError("duplicate identifier '" + a.id + "'");
    }
    ids.push_back(a.id);
    src[a.id] = a.source;
    tgt[a.id] = a.target;
  }
  return make_graph(std::move(nodes), std::move(ids), src, tgt);
}

FiniteGraph node_graph() { return FiniteGraph({"N"}, {}, {}, {}); }

FiniteGraph arc_graph() { return FiniteGraph({"s", "t"}, {"A"}, {0}, {1}); }

// ---------------------------------------------------------------------------

GraphMorphism::GraphMorphism(GraphRef dom, GraphRef cod,
                             std::vector<std::size_t> node_map,
                             std::vector<std::size_t> arc_map)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      node_map_(std::move(node_map)),
      arc_map_(std::move(arc_map)) {
  if (node_map_.size() != dom_->node_count() ||
      arc_map_.size() != dom_->arc_count()) {
    throw GraphError("morphism maps must be total on the domain");
  }
  for (auto n : node_map_) {
    if (n >= cod_->node_count()) throw GraphError("node map out of range");
  }
  for (auto a : arc_map_) {
    if (a >= cod_->arc_count()) throw GraphError("arc map out of range");
  }
}

GraphMorphism::GraphMorphism(const FiniteGraph& dom, const FiniteGraph& cod,
                             std::vector<std::size_t> node_map,
                             std::vector<std::size_t> arc_map)
    : GraphMorphism(share(dom), share(cod), std::move(node_map),
                    std::move(arc_map)) {}

namespace {

bool same_graph(const GraphRef& a, const GraphRef& b) {
  return a == b || *a == *b;
}

bool same_layout(const FiniteGraph& a, const FiniteGraph& b) {
  return a.node_ids() == b.node_ids() && a.arc_ids() == b.arc_ids();
}

}  // namespace

bool operator==(const GraphMorphism& lhs, const GraphMorphism& rhs) {
  if (!same_graph(lhs.dom_, rhs.dom_) || !same_graph(lhs.cod_, rhs.cod_)) {
    return false;
  }
  if ((lhs.dom_ == rhs.dom_ || same_layout(*lhs.dom_, *rhs.dom_)) &&
      (lhs.cod_ == rhs.cod_ || same_layout(*lhs.cod_, *rhs.cod_))) {
    return lhs.node_map_ == rhs.node_map_ && lhs.arc_map_ == rhs.arc_map_;
  }
  // Equal graphs declared in different orders: compare through identifiers.
  const auto& d = *lhs.dom_;
  for (std::size_t n = 0; n < d.node_count(); ++n) {
    std::size_t m = rhs.dom_->node(d.node_id(n));
    if (lhs.cod_->node_id(lhs.node_map_[n]) !=
        rhs.cod_->node_id(rhs.node_map_[m])) {
      return false;
    }
  }
  for (std::size_t a = 0; a < d.arc_count(); ++a) {
    std::size_t b = rhs.dom_->arc(d.arc_id(a));
    if (lhs.cod_->arc_id(lhs.arc_map_[a]) != rhs.cod_->arc_id(rhs.arc_map_[b])) {
      return false;
    }
  }
  return true;
}

MorphismCheck validate_morphism(const GraphMorphism& f) {
  MorphismCheck check;
  const auto& d = f.dom();
  const auto& c = f.cod();
  for (std::size_t a = 0; a < d.arc_count(); ++a) {
    std::size_t image = f.arc(a);
    bool src_ok = f.node(d.source(a)) == c.source(image);
    bool tgt_ok = f.node(d.target(a)) == c.target(image);
    if (!src_ok || !tgt_ok) {
      check.valid = false;
      std::string what = !src_ok && !tgt_ok ? "source and target"
                         : !src_ok          ? "source"
                                            : "target";
      check.violations.push_back("arc '" + d.arc_id(a) + "' -> '" +
                                 c.arc_id(image) + "' does not preserve " +
                                 what);
    }
  }
  return check;
}

GraphMorphism identity(const GraphRef& g) {
  std::vector<std::size_t> nodes(g->node_count()), arcs(g->arc_count());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = i;
  for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i] = i;
  return GraphMorphism(g, g, std::move(nodes), std::move(arcs));
}

GraphMorphism identity(const FiniteGraph& g) { return identity(share(g)); }

GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second) {
  if (!same_graph(first.cod_ref(), second.dom_ref())) {
    throw GraphError("cannot compose: codomain and domain differ");
  }
  const auto& mid_first = first.cod();
  const auto& mid_second = second.dom();
  bool aligned = first.cod_ref() == second.dom_ref() ||
                 same_layout(mid_first, mid_second);
  std::vector<std::size_t> nodes(first.dom().node_count());
  std::vector<std::size_t> arcs(first.dom().arc_count());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    std::size_t m = first.node(n);
    if (!aligned) m = mid_second.node(mid_first.node_id(m));
    nodes[n] = second.node(m);
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    std::size_t b = first.arc(a);
    if (!aligned) b = mid_second.arc(mid_first.arc_id(b));
    arcs[a] = second.arc(b);
  }
  return GraphMorphism(first.dom_ref(), second.cod_ref(), std::move(nodes),
                       std::move(arcs));
}

namespace {

bool injective(const std::vector<std::size_t>& map, std::size_t range) {
  std::vector<bool> seen(range, false);
  for (auto x : map) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool surjective(const std::vector<std::size_t>& map, std::size_t range) {
  std::vector<bool> seen(range, false);
  std::size_t hit = 0;
  for (auto x : map) {
    if (!seen[x]) {
      seen[x] = true;
      ++hit;
    }
  }
  return hit == range;
}

}  // namespace

bool is_mono(const GraphMorphism& f) {
  return injective(f.node_map(), f.cod().node_count()) &&
         injective(f.arc_map(), f.cod().arc_count());
}

bool is_epi(const GraphMorphism& f) {
  return surjective(f.node_map(), f.cod().node_count()) &&
         surjective(f.arc_map(), f.cod().arc_count());
}

bool is_iso(const GraphMorphism& f) { return is_mono(f) && is_epi(f); }

// ---------------------------------------------------------------------------

Subobject::Subobject(GraphRef ambient, std::vector<bool> nodes,
                     std::vector<bool> arcs)
    : ambient_(std::move(ambient)), nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
  if (nodes_.size() != ambient_->node_count() ||
      arcs_.size() != ambient_->arc_count()) {
    throw GraphError("subobject masks must match the ambient graph");
  }
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    if (arcs_[a] && (!nodes_[ambient_->source(a)] || !nodes_[ambient_->target(a)])) {
      throw GraphError("arc '" + ambient_->arc_id(a) +
                       "' is in the subobject but one of its endpoints is not");
    }
  }
}

Subobject::Subobject(const FiniteGraph& ambient, std::vector<bool> nodes,
                     std::vector<bool> arcs)
    : Subobject(share(ambient), std::move(nodes), std::move(arcs)) {}

Subobject Subobject::full(const GraphRef& ambient) {
  return Subobject(ambient, std::vector<bool>(ambient->node_count(), true),
                   std::vector<bool>(ambient->arc_count(), true));
}

Subobject Subobject::full(const FiniteGraph& ambient) { return full(share(ambient)); }

Subobject Subobject::none(const GraphRef& ambient) {
  return Subobject(ambient, std::vector<bool>(ambient->node_count(), false),
                   std::vector<bool>(ambient->arc_count(), false));
}

Subobject Subobject::none(const FiniteGraph& ambient) { return none(share(ambient)); }

Subobject Subobject::from_ids(const FiniteGraph& ambient,
                              const std::vector<std::string>& ids) {
  std::vector<bool> nodes(ambient.node_count(), false);
  std::vector<bool> arcs(ambient.arc_count(), false);
  for (const auto& id : ids) {
    if (auto n = ambient.find_node(id)) {
      nodes[*n] = true;
    } else if (auto a = ambient.find_arc(id)) {
      arcs[*a] = true;
    } else {
      throw GraphError("unknown identifier '" + id + "' in subobject");
    }
  }
  return Subobject(ambient, std::move(nodes), std::move(arcs));
}

std::size_t Subobject::node_count() const {
  return static_cast<std::size_t>(std::count(nodes_.begin(), nodes_.end(), true));
}

std::size_t Subobject::arc_count() const {
  return static_cast<std::size_t>(std::count(arcs_.begin(), arcs_.end(), true));
}

bool Subobject::is_full() const {
  return node_count() == nodes_.size() && arc_count() == arcs_.size();
}

bool Subobject::is_empty() const { return node_count() == 0; }

bool Subobject::subset_of(const Subobject& other) const {
  if (!same_graph(ambient_, other.ambient_)) {
    throw GraphError("subobjects of different graphs are not comparable");
  }
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (nodes_[n] && !other.nodes_[n]) return false;
  }
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    if (arcs_[a] && !other.arcs_[a]) return false;
  }
  return true;
}

FiniteGraph Subobject::to_graph() const {
  std::vector<std::string> nodes, arcs;
  std::vector<std::size_t> position(nodes_.size(), 0), src, tgt;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (!nodes_[n]) continue;
    position[n] = nodes.size();
    nodes.push_back(ambient_->node_id(n));
  }
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    if (!arcs_[a]) continue;
    arcs.push_back(ambient_->arc_id(a));
    src.push_back(position[ambient_->source(a)]);
    tgt.push_back(position[ambient_->target(a)]);
  }
  return FiniteGraph(std::move(nodes), std::move(arcs), std::move(src),
                     std::move(tgt));
}

GraphMorphism Subobject::inclusion() const {
  std::vector<std::size_t> nodes, arcs;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (nodes_[n]) nodes.push_back(n);
  }
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    if (arcs_[a]) arcs.push_back(a);
  }
  return GraphMorphism(share(to_graph()), ambient_, std::move(nodes),
                       std::move(arcs));
}

std::vector<std::string> Subobject::member_ids() const {
  std::vector<std::string> ids;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (nodes_[n]) ids.push_back(ambient_->node_id(n));
  }
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    if (arcs_[a]) ids.push_back(ambient_->arc_id(a));
  }
  return ids;
}

bool operator==(const Subobject& lhs, const Subobject& rhs) {
  if (!same_graph(lhs.ambient_, rhs.ambient_)) return false;
  if (lhs.ambient_ == rhs.ambient_ ||
      same_layout(*lhs.ambient_, *rhs.ambient_)) {
    return lhs.nodes_ == rhs.nodes_ && lhs.arcs_ == rhs.arcs_;
  }
  auto a = lhs.member_ids();
  auto b = rhs.member_ids();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Subobject intersection(const Subobject& lhs, const Subobject& rhs) {
  if (!same_graph(lhs.ambient_ref(), rhs.ambient_ref())) {
    throw GraphError("subobjects of different graphs");
  }
  std::vector<bool> nodes(lhs.node_mask().size()), arcs(lhs.arc_mask().size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    nodes[n] = lhs.has_node(n) && rhs.has_node(n);
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    arcs[a] = lhs.has_arc(a) && rhs.has_arc(a);
  }
  return Subobject(lhs.ambient_ref(), std::move(nodes), std::move(arcs));
}

Subobject image(const GraphMorphism& f) {
  std::vector<bool> nodes(f.cod().node_count(), false);
  std::vector<bool> arcs(f.cod().arc_count(), false);
  for (auto n : f.node_map()) nodes[n] = true;
  for (auto a : f.arc_map()) arcs[a] = true;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    // Invalid morphisms can still be imaged; keep the result a subgraph.
    if (arcs[a]) {
      nodes[f.cod().source(a)] = true;
      nodes[f.cod().target(a)] = true;
    }
  }
  return Subobject(f.cod_ref(), std::move(nodes), std::move(arcs));
}

Subobject canonical_subobject(const GraphMorphism& m) {
  if (!is_mono(m)) {
    throw GraphError("canonical_subobject requires a monomorphism");
  }
  return image(m);
}

Subobject preimage(const Subobject& sub, const GraphMorphism& f) {
  if (!same_graph(sub.ambient_ref(), f.cod_ref())) {
    throw GraphError("preimage: subobject is not over the codomain");
  }
  std::vector<bool> nodes(f.dom().node_count()), arcs(f.dom().arc_count());
  for (std::size_t n = 0; n < nodes.size(); ++n) nodes[n] = sub.has_node(f.node(n));
  for (std::size_t a = 0; a < arcs.size(); ++a) arcs[a] = sub.has_arc(f.arc(a));
  return Subobject(f.dom_ref(), std::move(nodes), std::move(arcs));
}

std::vector<Subobject> enumerate_subobjects(const FiniteGraph& g) {
  auto ref = share(g);
  const std::size_t n = g.node_count();
  if (n >= 24 || g.arc_count() >= 24) {
    throw CapExceeded("subobject enumeration limited to graphs below 24 nodes and arcs");
  }
  std::vector<Subobject> result;
  for (std::uint64_t node_bits = 0; node_bits < (std::uint64_t{1} << n); ++node_bits) {
    std::vector<bool> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = (node_bits >> i) & 1U;
    std::vector<std::size_t> admissible;
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      if (nodes[g.source(a)] && nodes[g.target(a)]) admissible.push_back(a);
    }
    for (std::uint64_t arc_bits = 0; arc_bits < (std::uint64_t{1} << admissible.size());
         ++arc_bits) {
      std::vector<bool> arcs(g.arc_count(), false);
      for (std::size_t i = 0; i < admissible.size(); ++i) {
        arcs[admissible[i]] = (arc_bits >> i) & 1U;
      }
      result.emplace_back(ref, nodes, std::move(arcs));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

using Multiplicity = std::vector<std::vector<std::size_t>>;

Multiplicity multiplicities(const FiniteGraph& g) {
  Multiplicity m(g.node_count(), std::vector<std::size_t>(g.node_count(), 0));
  for (std::size_t a = 0; a < g.arc_count(); ++a) ++m[g.source(a)][g.target(a)];
  return m;
}

using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FiniteGraph& g) {
  std::vector<Signature> sig(g.node_count(), {0, 0, 0});
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    ++std::get<0>(sig[g.source(a)]);
    ++std::get<1>(sig[g.target(a)]);
    if (g.source(a) == g.target(a)) ++std::get<2>(sig[g.source(a)]);
  }
  return sig;
}

}  // namespace

IsoResult are_isomorphic(const FiniteGraph& g, const FiniteGraph& h) {
  if (g.node_count() != h.node_count() || g.arc_count() != h.arc_count()) {
    return {};
  }
  auto gs = signatures(g);
  auto hs = signatures(h);
  {
    auto a = gs, b = hs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return {};
  }
  const auto gm = multiplicities(g);
  const auto hm = multiplicities(h);
  const std::size_t n = g.node_count();
  std::vector<std::size_t> map(n, 0);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t u) -> bool {
    if (u == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || gs[u] != hs[v]) continue;
      map[u] = v;
      bool ok = true;
      for (std::size_t w = 0; w <= u && ok; ++w) {
        ok = gm[u][w] == hm[v][map[w]] && gm[w][u] == hm[map[w]][v];
      }
      if (!ok) continue;
      used[v] = true;
      if (extend(u + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (!extend(0)) return {};

  // Pair up arcs bucket by bucket.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> buckets;
  for (std::size_t b = 0; b < h.arc_count(); ++b) {
    buckets[{h.source(b), h.target(b)}].push_back(b);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> taken;
  std::vector<std::size_t> arcs(g.arc_count());
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    std::pair<std::size_t, std::size_t> key{map[g.source(a)], map[g.target(a)]};
    arcs[a] = buckets[key][taken[key]++];
  }
  IsoResult result;
  result.isomorphic = true;
  result.witness.emplace(g, h, std::move(map), std::move(arcs));
  return result;
}

std::string describe(const GraphMorphism& f) {
  std::ostringstream out;
  const auto& d = f.dom();
  const auto& c = f.cod();
  out << "{";
  for (std::size_t n = 0; n < d.node_count(); ++n) {
    out << (n ? ", " : "") << d.node_id(n) << "->" << c.node_id(f.node(n));
  }
  out << " |";
  for (std::size_t a = 0; a < d.arc_count(); ++a) {
    out << (a ? ", " : " ") << d.arc_id(a) << "->" << c.arc_id(f.arc(a));
  }
  out << "}";
  return out.str();
}

}  // namespace topos
