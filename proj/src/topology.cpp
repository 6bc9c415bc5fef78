#include "topos/topology.hpp"

#include <cmath>
#include <map>

#include "topos/limits.hpp"

namespace topos {

std::string_view topology_name(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kIdentity:
      return "identity";
    case TopologyKind::kTop:
      return "top";
    case TopologyKind::kDoubleNegation:
      return "double_negation";
    case TopologyKind::kClosed:
      return "closed";
  }
  return "?";
}

namespace {

constexpr std::array<TruthValue, 7> kAll = {
    TruthValue::kNodeFalse, TruthValue::kNodeTrue, TruthValue::kArcNone,
    TruthValue::kArcSource, TruthValue::kArcTarget, TruthValue::kArcEnds,
    TruthValue::kArcFull};

void require_endo(const GraphMorphism& j) {
  if (!(j.dom() == *omega()) || !(j.cod() == *omega())) {
    throw GraphError("expected a morphism Ω -> Ω");
  }
}

}  // namespace

TruthTable table_of(const GraphMorphism& endo) {
  require_endo(endo);
  TruthTable table{};
  for (std::size_t i = 0; i < kAll.size(); ++i) table[i] = apply(endo, kAll[i]);
  return table;
}

TruthTable known_table(TopologyKind kind) {
  using T = TruthValue;
  switch (kind) {
    case TopologyKind::kIdentity:
      return kAll;
    case TopologyKind::kTop:
      return {T::kNodeTrue, T::kNodeTrue, T::kArcFull, T::kArcFull,
              T::kArcFull, T::kArcFull, T::kArcFull};
    case TopologyKind::kDoubleNegation:
      return {T::kNodeFalse, T::kNodeTrue, T::kArcNone, T::kArcSource,
              T::kArcTarget, T::kArcFull, T::kArcFull};
    case TopologyKind::kClosed:
      return {T::kNodeTrue, T::kNodeTrue, T::kArcEnds, T::kArcEnds,
              T::kArcEnds, T::kArcEnds, T::kArcFull};
  }
  throw GraphError("unknown topology kind");
}

GraphMorphism endo_from_table(const TruthTable& table) {
  std::vector<std::size_t> nodes(2), arcs(5);
  for (std::size_t i = 0; i < kAll.size(); ++i) {
    if (is_node_stage(kAll[i]) != is_node_stage(table[i])) {
      throw GraphError("truth table mixes node and arc stages");
    }
    (is_node_stage(kAll[i]) ? nodes[i] : arcs[i - 2]) = omega_index(table[i]);
  }
  return GraphMorphism(omega(), omega(), std::move(nodes), std::move(arcs));
}

bool is_topology(const GraphMorphism& j) {
  require_endo(j);
  if (!validate_morphism(j)) return false;
  if (!(compose(true_arrow(), j) == true_arrow())) return false;
  if (!(compose(j, j) == j)) return false;
  const auto& sq = omega_squared();
  return compose(conjunction(), j) ==
         compose(product_map(sq, sq, j, j), conjunction());
}

namespace {

TopologyKind identify(const GraphMorphism& j) {
  auto table = table_of(j);
  for (auto kind : {TopologyKind::kIdentity, TopologyKind::kTop,
                    TopologyKind::kDoubleNegation, TopologyKind::kClosed}) {
    if (table == known_table(kind)) return kind;
  }
  throw GraphError("topology matches none of the four known tables");
}

}  // namespace

std::vector<Topology> enumerate_topologies() {
  std::vector<Topology> result;
  for_each_hom(omega(), omega(), [&](const GraphMorphism& j) {
    if (is_topology(j)) result.push_back(Topology{j, identify(j)});
    return true;
  });
  return result;
}

Topology identity_topology() {
  return Topology{identity(omega()), TopologyKind::kIdentity};
}

Topology top_topology() {
  return Topology{compose(to_terminal(omega()), true_arrow()), TopologyKind::kTop};
}

Topology double_negation() {
  return Topology{compose(negation(), negation()), TopologyKind::kDoubleNegation};
}

Topology closed_topology() {
  return Topology{endo_from_table(known_table(TopologyKind::kClosed)),
                  TopologyKind::kClosed};
}

Topology make_topology(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kIdentity:
      return identity_topology();
    case TopologyKind::kTop:
      return top_topology();
    case TopologyKind::kDoubleNegation:
      return double_negation();
    case TopologyKind::kClosed:
      return closed_topology();
  }
  throw GraphError("unknown topology kind");
}

Subobject closure(const Subobject& sub, const GraphMorphism& j) {
  require_endo(j);
  return subobject_from_characteristic(compose(characteristic(sub), j));
}

Subobject closure(const Subobject& sub, const Topology& j) {
  return closure(sub, j.endo);
}

bool is_dense(const Subobject& sub, const GraphMorphism& j) {
  return closure(sub, j).is_full();
}

bool is_dense(const Subobject& sub, const Topology& j) {
  return is_dense(sub, j.endo);
}

Subobject minimum_dense(const FiniteGraph& g, const Topology& j) {
  auto ambient = share(g);
  std::vector<bool> nodes(g.node_count(), false), arcs(g.arc_count(), false);
  for (std::size_t x = 0; x < g.node_count(); ++x) {
    std::vector<bool> keep_nodes(g.node_count(), true);
    std::vector<bool> keep_arcs(g.arc_count(), true);
    keep_nodes[x] = false;
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      if (g.source(a) == x || g.target(a) == x) keep_arcs[a] = false;
    }
    nodes[x] = !is_dense(Subobject(ambient, keep_nodes, keep_arcs), j);
  }
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    std::vector<bool> keep_arcs(g.arc_count(), true);
    keep_arcs[a] = false;
    arcs[a] = !is_dense(
        Subobject(ambient, std::vector<bool>(g.node_count(), true), keep_arcs), j);
  }
  return Subobject(ambient, std::move(nodes), std::move(arcs));
}

namespace {

std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_counts(
    const FiniteGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
  for (std::size_t a = 0; a < g.arc_count(); ++a) ++counts[{g.source(a), g.target(a)}];
  return counts;
}

}  // namespace

bool is_separated(const FiniteGraph& g, const Topology& j) {
  switch (j.kind) {
    case TopologyKind::kIdentity:
      return true;
    case TopologyKind::kTop:
      return g.node_count() <= 1 && g.arc_count() <= 1;
    case TopologyKind::kDoubleNegation:
      for (const auto& [pair, count] : pair_counts(g)) {
        if (count > 1) return false;
      }
      return true;
    case TopologyKind::kClosed:
      return g.node_count() <= 1;
  }
  return false;
}

bool is_sheaf(const FiniteGraph& g, const Topology& j) {
  switch (j.kind) {
    case TopologyKind::kIdentity:
      return true;
    case TopologyKind::kTop:
      return g.node_count() == 1 && g.arc_count() == 1;
    case TopologyKind::kDoubleNegation: {
      auto counts = pair_counts(g);
      if (counts.size() != g.node_count() * g.node_count()) return false;
      for (const auto& [pair, count] : counts) {
        if (count != 1) return false;
      }
      return true;
    }
    case TopologyKind::kClosed:
      return g.node_count() == 1;
  }
  return false;
}

SeparationReport definitional_separation_oracle(
    const FiniteGraph& x, const GraphMorphism& j,
    const std::vector<FiniteGraph>& corpus, const HomOptions& options) {
  require_endo(j);
  SeparationReport report;
  report.corpus_size = corpus.size();
  auto target = share(x);
  for (const auto& y : corpus) {
    auto probe = share(y);
    auto extensions = enumerate_homs(probe, target, options);
    for (const auto& s : enumerate_subobjects(y)) {
      if (!is_dense(s, j)) continue;
      std::map<std::vector<std::size_t>, std::size_t> restrictions;
      for (const auto& g : extensions) {
        std::vector<std::size_t> key;
        for (std::size_t n = 0; n < y.node_count(); ++n) {
          if (s.has_node(n)) key.push_back(g.node(n));
        }
        for (std::size_t a = 0; a < y.arc_count(); ++a) {
          if (s.has_arc(a)) key.push_back(g.arc(a));
        }
        ++restrictions[key];
      }
      std::size_t partial = count_homs(s.to_graph(), x, options);
      report.probes += partial;
      for (const auto& [key, count] : restrictions) {
        if (count > 1 && report.separated) {
          report.separated = false;
          report.separation_witness = "a map from a dense subobject of a " +
                                      std::to_string(y.node_count()) + "-node, " +
                                      std::to_string(y.arc_count()) +
                                      "-arc graph has " + std::to_string(count) +
                                      " extensions";
        }
      }
      if (restrictions.size() < partial && report.complete) {
        report.complete = false;
        report.completeness_witness =
            "a map from a dense subobject of a " + std::to_string(y.node_count()) +
            "-node, " + std::to_string(y.arc_count()) + "-arc graph has no extension";
      }
    }
  }
  return report;
}

bool sheaf_category_equivalence_check(const FiniteGraph& g, const FiniteGraph& h,
                                      const HomOptions& options) {
  auto nn = double_negation();
  if (!is_sheaf(g, nn) || !is_sheaf(h, nn)) {
    throw GraphError("sheaf_category_equivalence_check requires ¬¬-sheaves");
  }
  double expected = std::pow(static_cast<double>(h.node_count()),
                             static_cast<double>(g.node_count()));
  return static_cast<double>(count_homs(g, h, options)) == expected;
}

}  // namespace topos
