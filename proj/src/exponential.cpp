#include "topos/exponential.hpp"

#include <cmath>
#include <sstream>

namespace topos {

FiniteGraph twisted_product_with_arc(const FiniteGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::string> nodes;
  nodes.reserve(2 * n);
  for (const auto& id : g.node_ids()) nodes.push_back("(s," + id + ")");
  for (const auto& id : g.node_ids()) nodes.push_back("(t," + id + ")");
  std::vector<std::string> arcs;
  std::vector<std::size_t> src, tgt;
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    arcs.push_back("(A," + g.arc_id(a) + ")");
    src.push_back(g.source(a));
    tgt.push_back(n + g.target(a));
  }
  return FiniteGraph(std::move(nodes), std::move(arcs), std::move(src),
                     std::move(tgt));
}

namespace {

std::string assignment(const FiniteGraph& g, const FiniteGraph& h,
                       const std::vector<std::size_t>& nodes,
                       std::size_t offset) {
  std::string out;
  for (std::size_t x = 0; x < g.node_count(); ++x) {
    if (x) out += ',';
    out += g.node_id(x) + ":" + h.node_id(nodes[offset + x]);
  }
  return out;
}

}  // namespace

std::size_t ExponentialGraph::node_of(const std::vector<std::size_t>& function) const {
  std::size_t index = 0;
  const std::size_t radix = base->node_count();
  for (auto digit : function) index = index * radix + digit;
  return index;
}

std::size_t ExponentialGraph::arc_of(const GraphMorphism& relaxed) const {
  auto it = arc_lookup_.find({relaxed.node_map(), relaxed.arc_map()});
  if (it == arc_lookup_.end()) {
    throw GraphError("morphism is not an arc of the exponential");
  }
  return it->second;
}

ExponentialGraph exponential(const GraphRef& g, const GraphRef& h,
                             const HomOptions& options) {
  const std::size_t n = g->node_count();
  const double node_total = std::pow(static_cast<double>(h->node_count()),
                                     static_cast<double>(n));
  if (!(node_total <= options.cap)) {
    std::ostringstream msg;
    msg << "exponential refused: " << node_total << " nodes exceed cap "
        << options.cap;
    throw CapExceeded(msg.str());
  }

  ExponentialGraph expo;
  expo.base = h;
  expo.exponent = g;
  expo.twisted = share(twisted_product_with_arc(*g));

  std::vector<std::string> node_ids;
  const auto total = static_cast<std::size_t>(node_total);
  for (std::size_t i = 0; i < total; ++i) {
    std::vector<std::size_t> function(n);
    std::size_t rest = i;
    for (std::size_t k = n; k-- > 0;) {
      function[k] = rest % h->node_count();
      rest /= h->node_count();
    }
    node_ids.push_back("[" + assignment(*g, *h, function, 0) + "]");
    expo.node_meaning.push_back(std::move(function));
  }

  std::vector<std::string> arc_ids;
  std::vector<std::size_t> src, tgt;
  expo.arc_meaning = enumerate_homs(expo.twisted, h, options);
  for (std::size_t k = 0; k < expo.arc_meaning.size(); ++k) {
    const auto& phi = expo.arc_meaning[k];
    const auto& nodes = phi.node_map();
    std::vector<std::size_t> first(nodes.begin(), nodes.begin() + n);
    std::vector<std::size_t> second(nodes.begin() + n, nodes.end());
    src.push_back(expo.node_of(first));
    tgt.push_back(expo.node_of(second));
    std::string id = "<" + assignment(*g, *h, nodes, 0) + "|" +
                     assignment(*g, *h, nodes, n) + "|";
    for (std::size_t a = 0; a < g->arc_count(); ++a) {
      if (a) id += ',';
      id += g->arc_id(a) + ":" + h->arc_id(phi.arc(a));
    }
    arc_ids.push_back(id + ">");
    expo.arc_lookup_.emplace(std::make_pair(phi.node_map(), phi.arc_map()), k);
  }
  expo.graph = share(FiniteGraph(std::move(node_ids), std::move(arc_ids),
                                 std::move(src), std::move(tgt)));
  return expo;
}

ExponentialGraph exponential(const FiniteGraph& g, const FiniteGraph& h,
                             const HomOptions& options) {
  return exponential(share(g), share(h), options);
}

Evaluation eval(const ExponentialGraph& expo) {
  auto domain = product(expo.graph, expo.exponent);
  const auto& g = *expo.exponent;
  std::vector<std::size_t> nodes, arcs;
  for (std::size_t i = 0; i < expo.graph->node_count(); ++i) {
    for (std::size_t x = 0; x < g.node_count(); ++x) {
      nodes.push_back(expo.node_meaning[i][x]);
    }
  }
  for (std::size_t k = 0; k < expo.graph->arc_count(); ++k) {
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      arcs.push_back(expo.arc_meaning[k].arc(a));
    }
  }
  GraphMorphism map(domain.graph, expo.base, std::move(nodes), std::move(arcs));
  return Evaluation{std::move(domain), std::move(map)};
}

namespace {

void check_curry_shape(const Product& domain, const ExponentialGraph& expo) {
  if (!(domain.proj2.cod() == *expo.exponent)) {
    throw GraphError("curry: product's second factor is not the exponent");
  }
}

}  // namespace

GraphMorphism curry(const GraphMorphism& f, const Product& domain,
                    const ExponentialGraph& expo) {
  check_curry_shape(domain, expo);
  if (!(f.dom() == *domain.graph) || !(f.cod() == *expo.base)) {
    throw GraphError("curry: morphism does not have shape F×G -> H");
  }
  const auto& fgraph = domain.proj1.cod();
  const auto& g = *expo.exponent;
  const std::size_t n = g.node_count();
  std::vector<std::size_t> nodes(fgraph.node_count()), arcs(fgraph.arc_count());
  for (std::size_t u = 0; u < fgraph.node_count(); ++u) {
    std::vector<std::size_t> function(n);
    for (std::size_t x = 0; x < n; ++x) function[x] = f.node(domain.node_index(u, x));
    nodes[u] = expo.node_of(function);
  }
  for (std::size_t e = 0; e < fgraph.arc_count(); ++e) {
    std::vector<std::size_t> relaxed_nodes(2 * n), relaxed_arcs(g.arc_count());
    for (std::size_t x = 0; x < n; ++x) {
      relaxed_nodes[x] = f.node(domain.node_index(fgraph.source(e), x));
      relaxed_nodes[n + x] = f.node(domain.node_index(fgraph.target(e), x));
    }
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      relaxed_arcs[a] = f.arc(domain.arc_index(e, a));
    }
    arcs[e] = expo.arc_of(GraphMorphism(expo.twisted, expo.base,
                                        std::move(relaxed_nodes),
                                        std::move(relaxed_arcs)));
  }
  return GraphMorphism(domain.proj1.cod_ref(), expo.graph, std::move(nodes),
                       std::move(arcs));
}

GraphMorphism uncurry(const GraphMorphism& g, const Product& domain,
                      const ExponentialGraph& expo) {
  check_curry_shape(domain, expo);
  if (!(g.dom() == domain.proj1.cod()) || !(g.cod() == *expo.graph)) {
    throw GraphError("uncurry: morphism does not have shape F -> H^G");
  }
  const auto& exponent = *expo.exponent;
  std::vector<std::size_t> nodes, arcs;
  for (std::size_t u = 0; u < g.dom().node_count(); ++u) {
    for (std::size_t x = 0; x < exponent.node_count(); ++x) {
      nodes.push_back(expo.node_meaning[g.node(u)][x]);
    }
  }
  for (std::size_t e = 0; e < g.dom().arc_count(); ++e) {
    for (std::size_t a = 0; a < exponent.arc_count(); ++a) {
      arcs.push_back(expo.arc_meaning[g.arc(e)].arc(a));
    }
  }
  return GraphMorphism(domain.graph, expo.base, std::move(nodes), std::move(arcs));
}

GraphMorphism loop_morphism(const ExponentialGraph& expo, std::size_t arc) {
  const auto& graph = *expo.graph;
  if (graph.source(arc) != graph.target(arc)) {
    throw GraphError("arc '" + graph.arc_id(arc) + "' of the exponential is not a self-loop");
  }
  const auto& phi = expo.arc_meaning[arc];
  return GraphMorphism(expo.exponent, expo.base,
                       expo.node_meaning[graph.source(arc)], phi.arc_map());
}

}  // namespace topos
