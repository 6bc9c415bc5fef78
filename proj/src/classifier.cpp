#include "topos/classifier.hpp"

#include <cstdint>

namespace topos {

namespace {

constexpr std::array<std::string_view, 7> kIds = {"0_N", "N", "0_A", "s",
                                                  "t", "st", "A"};
constexpr std::array<std::string_view, 7> kNames = {"0_N", "N", "0_A", "s",
                                                    "t", "(s t)", "A"};

std::size_t ordinal(TruthValue v) { return static_cast<std::size_t>(v); }

// Which truth value a subobject of the representable A is.
TruthValue classify_arc_subobject(const Subobject& sub) {
  const auto& a = sub.ambient();
  bool src = sub.has_node(a.node("s"));
  bool tgt = sub.has_node(a.node("t"));
  if (sub.has_arc(a.arc("A"))) return TruthValue::kArcFull;
  if (src && tgt) return TruthValue::kArcEnds;
  if (src) return TruthValue::kArcSource;
  if (tgt) return TruthValue::kArcTarget;
  return TruthValue::kArcNone;
}

TruthValue classify_node_subobject(const Subobject& sub) {
  return sub.is_full() ? TruthValue::kNodeTrue : TruthValue::kNodeFalse;
}

FiniteGraph build_omega() {
  auto n = share(node_graph());
  auto a = share(arc_graph());
  // s, t: N -> A
  GraphMorphism s(n, a, {a->node("s")}, {});
  GraphMorphism t(n, a, {a->node("t")}, {});

  std::vector<std::string> nodes(2), arcs(5);
  std::vector<bool> node_seen(2, false), arc_seen(5, false);
  for (const auto& sub : enumerate_subobjects(*n)) {
    auto v = classify_node_subobject(sub);
    std::size_t slot = omega_index(v);
    if (node_seen[slot]) throw GraphError("Ω construction: repeated node value");
    node_seen[slot] = true;
    nodes[slot] = std::string(truth_id(v));
  }
  std::vector<std::size_t> src(5), tgt(5);
  for (const auto& sub : enumerate_subobjects(*a)) {
    auto v = classify_arc_subobject(sub);
    std::size_t slot = omega_index(v);
    if (arc_seen[slot]) throw GraphError("Ω construction: repeated arc value");
    arc_seen[slot] = true;
    arcs[slot] = std::string(truth_id(v));
    src[slot] = omega_index(classify_node_subobject(preimage(sub, s)));
    tgt[slot] = omega_index(classify_node_subobject(preimage(sub, t)));
  }
  for (bool seen : node_seen) {
    if (!seen) throw GraphError("Ω construction: missing node value");
  }
  for (bool seen : arc_seen) {
    if (!seen) throw GraphError("Ω construction: missing arc value");
  }
  return FiniteGraph(std::move(nodes), std::move(arcs), std::move(src),
                     std::move(tgt));
}

void require_omega_codomain(const GraphMorphism& f) {
  if (!(f.cod() == *omega())) throw GraphError("codomain is not Ω");
}

}  // namespace

bool is_node_stage(TruthValue v) { return ordinal(v) < 2; }

std::string_view truth_id(TruthValue v) { return kIds[ordinal(v)]; }

std::string_view truth_name(TruthValue v) { return kNames[ordinal(v)]; }

std::optional<TruthValue> truth_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kIds.size(); ++i) {
    if (kIds[i] == name || kNames[i] == name) return static_cast<TruthValue>(i);
  }
  return std::nullopt;
}

std::size_t omega_index(TruthValue v) {
  return is_node_stage(v) ? ordinal(v) : ordinal(v) - 2;
}

TruthValue node_truth(std::size_t node) {
  if (node >= 2) throw GraphError("Ω has two nodes");
  return static_cast<TruthValue>(node);
}

TruthValue arc_truth(std::size_t arc) {
  if (arc >= 5) throw GraphError("Ω has five arcs");
  return static_cast<TruthValue>(arc + 2);
}

bool truth_leq(TruthValue a, TruthValue b) {
  if (is_node_stage(a) != is_node_stage(b)) {
    throw GraphError("truth values of different stages are not comparable");
  }
  if (a == b) return true;
  switch (a) {
    case TruthValue::kNodeFalse:
      return true;
    case TruthValue::kArcNone:
      return true;
    case TruthValue::kArcSource:
    case TruthValue::kArcTarget:
      return b == TruthValue::kArcEnds || b == TruthValue::kArcFull;
    case TruthValue::kArcEnds:
      return b == TruthValue::kArcFull;
    default:
      return false;
  }
}

const GraphRef& omega() {
  static const GraphRef instance = share(build_omega());
  return instance;
}

FiniteGraph omega_fixture() {
  return make_graph({"0_N", "N"}, {{"0_A", "0_N", "0_N"},
                                   {"s", "N", "0_N"},
                                   {"t", "0_N", "N"},
                                   {"st", "N", "N"},
                                   {"A", "N", "N"}});
}

GraphMorphism true_arrow() {
  return GraphMorphism(share(terminal_graph()), omega(),
                       {omega_index(TruthValue::kNodeTrue)},
                       {omega_index(TruthValue::kArcFull)});
}

GraphMorphism false_arrow() {
  return characteristic(Subobject::none(terminal_graph()));
}

GraphMorphism characteristic(const Subobject& sub) {
  const auto& g = sub.ambient();
  std::vector<std::size_t> nodes(g.node_count()), arcs(g.arc_count());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    nodes[n] = omega_index(sub.has_node(n) ? TruthValue::kNodeTrue
                                           : TruthValue::kNodeFalse);
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    bool src = sub.has_node(g.source(a));
    bool tgt = sub.has_node(g.target(a));
    TruthValue v;
    if (sub.has_arc(a)) {
      v = TruthValue::kArcFull;
    } else if (src && tgt) {
      v = TruthValue::kArcEnds;
    } else if (src) {
      v = TruthValue::kArcSource;
    } else if (tgt) {
      v = TruthValue::kArcTarget;
    } else {
      v = TruthValue::kArcNone;
    }
    arcs[a] = omega_index(v);
  }
  return GraphMorphism(sub.ambient_ref(), omega(), std::move(nodes), std::move(arcs));
}

Subobject subobject_from_characteristic(const GraphMorphism& chi) {
  require_omega_codomain(chi);
  std::vector<bool> nodes(chi.dom().node_count()), arcs(chi.dom().arc_count());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    nodes[n] = node_truth(chi.node(n)) == TruthValue::kNodeTrue;
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    arcs[a] = arc_truth(chi.arc(a)) == TruthValue::kArcFull;
  }
  return Subobject(chi.dom_ref(), std::move(nodes), std::move(arcs));
}

const Product& omega_squared() {
  static const Product instance = product(omega(), omega());
  return instance;
}

const GraphMorphism& conjunction() {
  static const GraphMorphism instance = [] {
    const auto& sq = omega_squared();
    auto diagonal_true = pairing(sq, true_arrow(), true_arrow());
    return characteristic(canonical_subobject(diagonal_true));
  }();
  return instance;
}

const GraphMorphism& negation() {
  static const GraphMorphism instance =
      characteristic(canonical_subobject(false_arrow()));
  return instance;
}

TruthValue apply(const GraphMorphism& endo, TruthValue v) {
  std::size_t i = omega_index(v);
  return is_node_stage(v) ? node_truth(endo.node(i)) : arc_truth(endo.arc(i));
}

TruthValue apply_and(TruthValue a, TruthValue b) {
  if (is_node_stage(a) != is_node_stage(b)) {
    throw GraphError("conjunction of truth values of different stages");
  }
  const auto& sq = omega_squared();
  const auto& wedge = conjunction();
  if (is_node_stage(a)) {
    return node_truth(wedge.node(sq.node_index(omega_index(a), omega_index(b))));
  }
  return arc_truth(wedge.arc(sq.arc_index(omega_index(a), omega_index(b))));
}

TruthValue apply_not(TruthValue a) { return apply(negation(), a); }

std::size_t count_subobjects(const FiniteGraph& g) {
  const std::size_t n = g.node_count();
  if (n > 30) throw CapExceeded("subobject count limited to 30 nodes");
  std::size_t total = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::size_t inside = 0;
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      if (((bits >> g.source(a)) & 1U) && ((bits >> g.target(a)) & 1U)) ++inside;
    }
    if (inside >= 63) throw CapExceeded("subobject count overflows");
    total += std::size_t{1} << inside;
  }
  return total;
}

}  // namespace topos
