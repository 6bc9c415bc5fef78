#include "topos/limits.hpp"

#include <map>
#include <numeric>

namespace topos {

FiniteGraph initial_graph() { return FiniteGraph({}, {}, {}, {}); }

FiniteGraph terminal_graph() { return FiniteGraph({"*"}, {"loop"}, {0}, {0}); }

GraphMorphism to_terminal(const GraphRef& g) {
  return GraphMorphism(g, share(terminal_graph()),
                       std::vector<std::size_t>(g->node_count(), 0),
                       std::vector<std::size_t>(g->arc_count(), 0));
}

GraphMorphism to_terminal(const FiniteGraph& g) { return to_terminal(share(g)); }

GraphMorphism from_initial(const GraphRef& g) {
  return GraphMorphism(share(initial_graph()), g, {}, {});
}

namespace {

std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

Product product(const GraphRef& g, const GraphRef& h) {
  std::vector<std::string> nodes, arcs;
  std::vector<std::size_t> src, tgt, p1n, p2n, p1a, p2a;
  for (std::size_t x = 0; x < g->node_count(); ++x) {
    for (std::size_t y = 0; y < h->node_count(); ++y) {
      nodes.push_back(pair_id(g->node_id(x), h->node_id(y)));
      p1n.push_back(x);
      p2n.push_back(y);
    }
  }
  const std::size_t width = h->node_count();
  for (std::size_t a = 0; a < g->arc_count(); ++a) {
    for (std::size_t b = 0; b < h->arc_count(); ++b) {
      arcs.push_back(pair_id(g->arc_id(a), h->arc_id(b)));
      src.push_back(g->source(a) * width + h->source(b));
      tgt.push_back(g->target(a) * width + h->target(b));
      p1a.push_back(a);
      p2a.push_back(b);
    }
  }
  auto graph = share(FiniteGraph(std::move(nodes), std::move(arcs),
                                 std::move(src), std::move(tgt)));
  return Product{graph, GraphMorphism(graph, g, std::move(p1n), std::move(p1a)),
                 GraphMorphism(graph, h, std::move(p2n), std::move(p2a))};
}

Product product(const FiniteGraph& g, const FiniteGraph& h) {
  return product(share(g), share(h));
}

GraphMorphism pairing(const Product& p, const GraphMorphism& f,
                      const GraphMorphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == p.proj1.cod()) ||
      !(g.cod() == p.proj2.cod())) {
    throw GraphError("pairing: morphisms do not match the product");
  }
  std::vector<std::size_t> nodes(f.dom().node_count()), arcs(f.dom().arc_count());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    nodes[n] = p.node_index(f.node(n), g.node(n));
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    arcs[a] = p.arc_index(f.arc(a), g.arc(a));
  }
  return GraphMorphism(f.dom_ref(), p.graph, std::move(nodes), std::move(arcs));
}

GraphMorphism product_map(const Product& source, const Product& target,
                          const GraphMorphism& f, const GraphMorphism& g) {
  return pairing(target, compose(source.proj1, f), compose(source.proj2, g));
}

Coproduct coproduct(const GraphRef& g, const GraphRef& h) {
  std::vector<std::string> nodes, arcs;
  std::vector<std::size_t> src, tgt;
  for (const auto& id : g->node_ids()) nodes.push_back("inl:" + id);
  for (const auto& id : h->node_ids()) nodes.push_back("inr:" + id);
  const std::size_t offset = g->node_count();
  for (std::size_t a = 0; a < g->arc_count(); ++a) {
    arcs.push_back("inl:" + g->arc_id(a));
    src.push_back(g->source(a));
    tgt.push_back(g->target(a));
  }
  for (std::size_t b = 0; b < h->arc_count(); ++b) {
    arcs.push_back("inr:" + h->arc_id(b));
    src.push_back(offset + h->source(b));
    tgt.push_back(offset + h->target(b));
  }
  auto graph = share(FiniteGraph(std::move(nodes), std::move(arcs),
                                 std::move(src), std::move(tgt)));
  std::vector<std::size_t> n1(g->node_count()), a1(g->arc_count());
  std::vector<std::size_t> n2(h->node_count()), a2(h->arc_count());
  std::iota(n1.begin(), n1.end(), 0);
  std::iota(a1.begin(), a1.end(), 0);
  std::iota(n2.begin(), n2.end(), offset);
  std::iota(a2.begin(), a2.end(), g->arc_count());
  return Coproduct{graph, GraphMorphism(g, graph, n1, a1),
                   GraphMorphism(h, graph, n2, a2)};
}

Coproduct coproduct(const FiniteGraph& g, const FiniteGraph& h) {
  return coproduct(share(g), share(h));
}

GraphMorphism copairing(const Coproduct& c, const GraphMorphism& f,
                        const GraphMorphism& g) {
  if (!(f.cod() == g.cod()) || !(f.dom() == c.inj1.dom()) ||
      !(g.dom() == c.inj2.dom())) {
    throw GraphError("copairing: morphisms do not match the coproduct");
  }
  std::vector<std::size_t> nodes = f.node_map();
  std::vector<std::size_t> arcs = f.arc_map();
  nodes.insert(nodes.end(), g.node_map().begin(), g.node_map().end());
  arcs.insert(arcs.end(), g.arc_map().begin(), g.arc_map().end());
  return GraphMorphism(c.graph, f.cod_ref(), std::move(nodes), std::move(arcs));
}

namespace {

void require_parallel(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw GraphError("morphisms are not parallel");
  }
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

// Class numbering in order of first occurrence, and the smallest identifier
// of each class.
struct Classes {
  std::vector<std::size_t> of;
  std::vector<std::string> names;
};

Classes classes(UnionFind& uf, const std::vector<std::string>& ids) {
  Classes c;
  c.of.resize(ids.size());
  std::map<std::size_t, std::size_t> root_to_class;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto [it, fresh] = root_to_class.emplace(uf.find(i), c.names.size());
    if (fresh) {
      c.names.push_back(ids[i]);
    } else if (ids[i] < c.names[it->second]) {
      c.names[it->second] = ids[i];
    }
    c.of[i] = it->second;
  }
  return c;
}

}  // namespace

Subobject equalizer(const GraphMorphism& f, const GraphMorphism& g) {
  require_parallel(f, g);
  std::vector<bool> nodes(f.dom().node_count()), arcs(f.dom().arc_count());
  for (std::size_t n = 0; n < nodes.size(); ++n) nodes[n] = f.node(n) == g.node(n);
  for (std::size_t a = 0; a < arcs.size(); ++a) arcs[a] = f.arc(a) == g.arc(a);
  return Subobject(f.dom_ref(), std::move(nodes), std::move(arcs));
}

Quotient coequalizer(const GraphMorphism& f, const GraphMorphism& g) {
  require_parallel(f, g);
  const auto& cod = f.cod();
  UnionFind node_uf(cod.node_count()), arc_uf(cod.arc_count());
  for (std::size_t n = 0; n < f.dom().node_count(); ++n) {
    node_uf.unite(f.node(n), g.node(n));
  }
  for (std::size_t a = 0; a < f.dom().arc_count(); ++a) {
    arc_uf.unite(f.arc(a), g.arc(a));
  }
  auto node_classes = classes(node_uf, cod.node_ids());
  auto arc_classes = classes(arc_uf, cod.arc_ids());
  std::vector<std::size_t> src(arc_classes.names.size()), tgt(arc_classes.names.size());
  for (std::size_t a = 0; a < cod.arc_count(); ++a) {
    // Well defined: identified arcs have identified endpoints by naturality.
    src[arc_classes.of[a]] = node_classes.of[cod.source(a)];
    tgt[arc_classes.of[a]] = node_classes.of[cod.target(a)];
  }
  auto graph = share(FiniteGraph(node_classes.names, arc_classes.names,
                                 std::move(src), std::move(tgt)));
  return Quotient{graph, GraphMorphism(f.cod_ref(), graph, node_classes.of,
                                       arc_classes.of)};
}

Pullback pullback(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.cod() == g.cod())) {
    throw GraphError("pullback requires a common codomain");
  }
  auto p = product(f.dom_ref(), g.dom_ref());
  auto eq = equalizer(compose(p.proj1, f), compose(p.proj2, g));
  auto incl = eq.inclusion();
  return Pullback{incl.dom_ref(), compose(incl, p.proj1), compose(incl, p.proj2)};
}

Pushout pushout(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.dom() == g.dom())) {
    throw GraphError("pushout requires a common domain");
  }
  auto c = coproduct(f.cod_ref(), g.cod_ref());
  auto q = coequalizer(compose(f, c.inj1), compose(g, c.inj2));
  return Pushout{q.graph, compose(c.inj1, q.map), compose(c.inj2, q.map)};
}

}  // namespace topos
