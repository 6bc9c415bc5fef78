#include "topos/slice.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "topos/classifier.hpp"
#include "topos/corpus.hpp"
#include "topos/limits.hpp"

namespace topos {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw GraphError("an alphabet must be nonempty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!index_.emplace(symbols_[i], i).second) {
      throw GraphError("duplicate symbol '" + symbols_[i] + "'");
    }
  }
}

std::optional<std::size_t> Alphabet::find(const std::string& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteGraph alphabet_graph(const Alphabet& sigma) {
  return FiniteGraph({"*"}, sigma.symbols(),
                     std::vector<std::size_t>(sigma.size(), 0),
                     std::vector<std::size_t>(sigma.size(), 0));
}

LabelledGraph::LabelledGraph(GraphRef graph, Alphabet alphabet,
                             std::vector<std::size_t> labels)
    : graph_(std::move(graph)), alphabet_(std::move(alphabet)), labels_(std::move(labels)) {
  if (labels_.size() != graph_->arc_count()) {
    throw GraphError("every arc needs exactly one label");
  }
  for (std::size_t a = 0; a < labels_.size(); ++a) {
    if (labels_[a] >= alphabet_.size()) {
      throw GraphError("arc '" + graph_->arc_id(a) + "' has an unknown label");
    }
  }
}

LabelledGraph::LabelledGraph(const FiniteGraph& graph, Alphabet alphabet,
                             std::vector<std::size_t> labels)
    : LabelledGraph(share(graph), std::move(alphabet), std::move(labels)) {}

LabelledGraph LabelledGraph::with_symbols(const FiniteGraph& graph, Alphabet alphabet,
                                          const std::vector<std::string>& labels) {
  std::vector<std::size_t> idx;
  for (const auto& symbol : labels) {
    auto i = alphabet.find(symbol);
    if (!i) throw GraphError("unknown label '" + symbol + "'");
    idx.push_back(*i);
  }
  return LabelledGraph(graph, std::move(alphabet), std::move(idx));
}

GraphMorphism LabelledGraph::labelling() const {
  return GraphMorphism(graph_, share(alphabet_graph(alphabet_)),
                       std::vector<std::size_t>(graph_->node_count(), 0), labels_);
}

bool operator==(const LabelledGraph& lhs, const LabelledGraph& rhs) {
  if (!(lhs.alphabet_ == rhs.alphabet_) || !(*lhs.graph_ == *rhs.graph_)) {
    return false;
  }
  for (std::size_t a = 0; a < lhs.graph_->arc_count(); ++a) {
    std::size_t b = rhs.graph_->arc(lhs.graph_->arc_id(a));
    if (lhs.labels_[a] != rhs.labels_[b]) return false;
  }
  return true;
}

LabelledGraph from_slice_object(const GraphMorphism& structure, const Alphabet& sigma) {
  if (!(structure.cod() == alphabet_graph(sigma)) || !validate_morphism(structure)) {
    throw GraphError("not a morphism into the alphabet graph");
  }
  std::vector<std::size_t> labels(structure.dom().arc_count());
  for (std::size_t a = 0; a < labels.size(); ++a) {
    labels[a] = *sigma.find(structure.cod().arc_id(structure.arc(a)));
  }
  return LabelledGraph(structure.dom_ref(), sigma, std::move(labels));
}

LabelledGraph slice_terminal(const Alphabet& sigma) {
  std::vector<std::size_t> labels(sigma.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
  return LabelledGraph(alphabet_graph(sigma), sigma, std::move(labels));
}

bool validate_slice_morphism(const GraphMorphism& f, const LabelledGraph& l,
                             const LabelledGraph& m) {
  if (!(f.dom() == l.graph()) || !(f.cod() == m.graph()) ||
      !(l.alphabet() == m.alphabet())) {
    return false;
  }
  if (!validate_morphism(f)) return false;
  for (std::size_t a = 0; a < l.graph().arc_count(); ++a) {
    if (l.label(a) != m.label(f.arc(a))) return false;
  }
  return true;
}

std::vector<GraphMorphism> enumerate_slice_homs(const LabelledGraph& l,
                                                const LabelledGraph& m,
                                                const HomOptions& options) {
  if (!(l.alphabet() == m.alphabet())) {
    throw GraphError("labelled graphs over different alphabets");
  }
  HomOptions labelled = options;
  labelled.arc_filter = [&](std::size_t a, std::size_t b) {
    return l.label(a) == m.label(b) && (!options.arc_filter || options.arc_filter(a, b));
  };
  return enumerate_homs(l.graph_ref(), m.graph_ref(), labelled);
}

bool is_transition_system(const LabelledGraph& l) {
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  const auto& g = l.graph();
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    if (!seen.emplace(g.source(a), g.target(a), l.label(a)).second) return false;
  }
  return true;
}

LabelledGraph slice_classifier(const Alphabet& sigma) {
  auto p = product(share(alphabet_graph(sigma)), omega());
  return LabelledGraph(p.graph, sigma, p.proj1.arc_map());
}

GraphMorphism slice_true(const Alphabet& sigma) {
  auto p = product(share(alphabet_graph(sigma)), omega());
  std::vector<std::size_t> arcs(sigma.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    arcs[i] = p.arc_index(i, omega_index(TruthValue::kArcFull));
  }
  return GraphMorphism(p.proj1.cod_ref(), p.graph,
                       {p.node_index(0, omega_index(TruthValue::kNodeTrue))},
                       std::move(arcs));
}

GraphMorphism slice_characteristic(const LabelledGraph& l, const Subobject& sub) {
  if (!(sub.ambient() == l.graph())) {
    throw GraphError("subobject is not over the labelled graph");
  }
  auto p = product(share(alphabet_graph(l.alphabet())), omega());
  auto chi = characteristic(sub);
  std::vector<std::size_t> nodes(l.graph().node_count()), arcs(l.graph().arc_count());
  for (std::size_t n = 0; n < nodes.size(); ++n) nodes[n] = p.node_index(0, chi.node(n));
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    arcs[a] = p.arc_index(l.label(a), chi.arc(a));
  }
  return GraphMorphism(l.graph_ref(), p.graph, std::move(nodes), std::move(arcs));
}

Subobject slice_subobject_from_characteristic(const GraphMorphism& chi,
                                              const Alphabet& sigma) {
  auto p = product(share(alphabet_graph(sigma)), omega());
  if (!(chi.cod() == *p.graph)) throw GraphError("codomain is not Σ×Ω");
  // Compose with the second projection and read off the plain subobject.
  GraphMorphism to_omega(chi.dom_ref(), omega(),
                         [&] {
                           std::vector<std::size_t> v;
                           for (auto n : chi.node_map()) v.push_back(p.proj2.node(n));
                           return v;
                         }(),
                         [&] {
                           std::vector<std::size_t> v;
                           for (auto a : chi.arc_map()) v.push_back(p.proj2.arc(a));
                           return v;
                         }());
  return subobject_from_characteristic(to_omega);
}

Subobject slice_closure(const LabelledGraph& l, const Subobject& sub,
                        const Topology& j) {
  auto p = product(share(alphabet_graph(l.alphabet())), omega());
  auto labelwise = product_map(p, p, identity(p.proj1.cod_ref()), j.endo);
  auto chi = slice_characteristic(l, sub);
  // Re-anchor chi on p.graph so the composite lines up index for index.
  GraphMorphism anchored(chi.dom_ref(), p.graph, chi.node_map(), chi.arc_map());
  return slice_subobject_from_characteristic(compose(anchored, labelwise),
                                             l.alphabet());
}

bool is_separated_ts(const LabelledGraph& l) { return is_transition_system(l); }

LabelledGraph restrict_to(const LabelledGraph& l, const Subobject& sub) {
  if (!(sub.ambient() == l.graph())) {
    throw GraphError("subobject is not over the labelled graph");
  }
  std::vector<std::size_t> labels;
  for (std::size_t a = 0; a < l.graph().arc_count(); ++a) {
    if (sub.has_arc(a)) labels.push_back(l.label(a));
  }
  return LabelledGraph(sub.to_graph(), l.alphabet(), std::move(labels));
}

SeparationReport slice_separation_oracle(const LabelledGraph& x,
                                         const std::vector<LabelledGraph>& corpus,
                                         const HomOptions& options) {
  SeparationReport report;
  report.corpus_size = corpus.size();
  const auto nn = double_negation();
  for (const auto& y : corpus) {
    auto extensions = enumerate_slice_homs(y, x, options);
    for (const auto& s : enumerate_subobjects(y.graph())) {
      if (!slice_closure(y, s, nn).is_full()) continue;
      std::map<std::vector<std::size_t>, std::size_t> restrictions;
      for (const auto& g : extensions) {
        std::vector<std::size_t> key;
        for (std::size_t n = 0; n < y.graph().node_count(); ++n) {
          if (s.has_node(n)) key.push_back(g.node(n));
        }
        for (std::size_t a = 0; a < y.graph().arc_count(); ++a) {
          if (s.has_arc(a)) key.push_back(g.arc(a));
        }
        ++restrictions[key];
      }
      std::size_t partial = enumerate_slice_homs(restrict_to(y, s), x, options).size();
      report.probes += partial;
      for (const auto& [key, count] : restrictions) {
        if (count > 1 && report.separated) {
          report.separated = false;
          report.separation_witness =
              "a labelled map from a dense subobject has " + std::to_string(count) +
              " extensions";
        }
      }
      if (restrictions.size() < partial && report.complete) {
        report.complete = false;
        report.completeness_witness =
            "a labelled map from a dense subobject has no extension";
      }
    }
  }
  return report;
}

LabelledGraph slice_product(const LabelledGraph& l, const LabelledGraph& m) {
  if (!(l.alphabet() == m.alphabet())) {
    throw GraphError("slice product needs a common alphabet");
  }
  auto pb = pullback(l.labelling(), m.labelling());
  std::vector<std::size_t> labels(pb.graph->arc_count());
  for (std::size_t a = 0; a < labels.size(); ++a) labels[a] = l.label(pb.proj1.arc(a));
  return LabelledGraph(pb.graph, l.alphabet(), std::move(labels));
}

namespace {

void require_mono_slice(const GraphMorphism& m, const LabelledGraph& s,
                        const LabelledGraph& x) {
  if (!validate_slice_morphism(m, s, x) || !is_mono(m)) {
    throw GraphError("expected a label-preserving monomorphism");
  }
}

bool lands_in(const GraphMorphism& f, const Subobject& sub) {
  for (auto n : f.node_map()) {
    if (!sub.has_node(n)) return false;
  }
  for (auto a : f.arc_map()) {
    if (!sub.has_arc(a)) return false;
  }
  return true;
}

}  // namespace

bool is_strong_mono(const GraphMorphism& m, const LabelledGraph& s,
                    const LabelledGraph& x) {
  require_mono_slice(m, s, x);
  auto img = image(m);
  const auto& g = x.graph();
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    if (img.has_node(g.source(a)) && img.has_node(g.target(a)) && !img.has_arc(a)) {
      return false;
    }
  }
  return true;
}

bool is_ts_epi(const GraphMorphism& e) {
  std::vector<bool> hit(e.cod().node_count(), false);
  for (auto n : e.node_map()) hit[n] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<LabelledEpi> enumerate_ts_epis(const std::vector<LabelledGraph>& corpus,
                                           const HomOptions& options) {
  std::vector<LabelledEpi> epis;
  for (const auto& from : corpus) {
    if (!is_transition_system(from)) continue;
    for (const auto& to : corpus) {
      if (!is_transition_system(to) || !(from.alphabet() == to.alphabet())) continue;
      for (const auto& e : enumerate_slice_homs(from, to, options)) {
        if (is_ts_epi(e)) epis.push_back(LabelledEpi{from, to, e});
      }
    }
  }
  return epis;
}

DiagonalReport strong_mono_by_diagonals(const GraphMorphism& m,
                                        const LabelledGraph& s,
                                        const LabelledGraph& x,
                                        const std::vector<LabelledEpi>& epis,
                                        const HomOptions& options) {
  require_mono_slice(m, s, x);
  DiagonalReport report;
  auto img = image(m);
  // Hom(Y', X) depends only on Y'; cache by target identity.
  std::map<const FiniteGraph*, std::vector<GraphMorphism>> cache;
  for (const auto& epi : epis) {
    auto [it, fresh] = cache.try_emplace(&epi.target.graph());
    if (fresh) it->second = enumerate_slice_homs(epi.target, x, options);
    for (const auto& g : it->second) {
      GraphMorphism g_anchored(epi.map.cod_ref(), g.cod_ref(), g.node_map(), g.arc_map());
      if (!lands_in(compose(epi.map, g_anchored), img)) continue;  // no square
      ++report.squares;
      if (!lands_in(g, img) && report.strong) {
        report.strong = false;
        report.witness = "square through " + describe(epi.map) + " and " +
                         describe(g) + " has no diagonal";
      }
    }
  }
  return report;
}

std::vector<LabelledGraph> labelled_corpus(const Alphabet& sigma, std::size_t max_nodes,
                                           std::size_t max_arcs) {
  std::set<std::tuple<std::size_t, std::size_t, std::vector<ArcTriple>>> keys;
  const std::size_t k = sigma.size();
  for (const auto& g : graph_corpus(max_nodes, max_arcs)) {
    const std::size_t m = g.arc_count();
    std::size_t labellings = 1;
    for (std::size_t i = 0; i < m; ++i) labellings *= k;
    for (std::size_t code = 0; code < labellings; ++code) {
      std::vector<ArcTriple> arcs;
      std::size_t rest = code;
      for (std::size_t a = 0; a < m; ++a) {
        arcs.emplace_back(g.source(a), g.target(a), rest % k);
        rest /= k;
      }
      keys.emplace(g.node_count(), m, canonical_arcs(g.node_count(), arcs));
    }
  }
  std::vector<LabelledGraph> corpus;
  for (const auto& [n, m, arcs] : keys) {
    std::vector<std::string> nodes, ids;
    std::vector<std::size_t> src, tgt, labels;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back("v" + std::to_string(i));
    for (const auto& [u, v, l] : arcs) {
      ids.push_back("e" + std::to_string(ids.size()));
      src.push_back(u);
      tgt.push_back(v);
      labels.push_back(l);
    }
    corpus.emplace_back(FiniteGraph(std::move(nodes), std::move(ids), std::move(src),
                                    std::move(tgt)),
                        sigma, std::move(labels));
  }
  return corpus;
}

// ---------------------------------------------------------------------------

Automaton::Automaton(std::vector<std::string> states_in, Alphabet alphabet_in)
    : states(std::move(states_in)),
      alphabet(std::move(alphabet_in)),
      delta(alphabet.size(), std::vector<std::set<std::size_t>>(states.size())) {
  std::set<std::string> unique(states.begin(), states.end());
  if (unique.size() != states.size()) throw GraphError("duplicate state");
}

void Automaton::add(std::size_t symbol, std::size_t from, std::size_t to) {
  if (symbol >= alphabet.size() || from >= states.size() || to >= states.size()) {
    throw GraphError("transition out of range");
  }
  delta[symbol][from].insert(to);
}

bool operator==(const Automaton& lhs, const Automaton& rhs) {
  return lhs.states == rhs.states && lhs.alphabet == rhs.alphabet &&
         lhs.delta == rhs.delta;
}

LabelledGraph automaton_to_lts(const Automaton& a) {
  std::vector<std::string> arcs;
  std::vector<std::size_t> src, tgt, labels;
  for (std::size_t x = 0; x < a.states.size(); ++x) {
    for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
      for (auto y : a.delta[sym][x]) {
        arcs.push_back(a.states[x] + "-" + a.alphabet.symbol(sym) + "->" + a.states[y]);
        src.push_back(x);
        tgt.push_back(y);
        labels.push_back(sym);
      }
    }
  }
  return LabelledGraph(FiniteGraph(a.states, std::move(arcs), std::move(src),
                                   std::move(tgt)),
                       a.alphabet, std::move(labels));
}

Automaton lts_to_automaton(const LabelledGraph& l) {
  const auto& g = l.graph();
  Automaton a(g.node_ids(), l.alphabet());
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    auto& targets = a.delta[l.label(e)][g.source(e)];
    if (!targets.insert(g.target(e)).second) {
      throw GraphError("not a transition system: parallel arcs labelled '" +
                       l.label_symbol(e) + "' from '" + g.node_id(g.source(e)) +
                       "' to '" + g.node_id(g.target(e)) + "'");
    }
  }
  return a;
}

bool is_automaton_morphism(const std::vector<std::size_t>& state_map,
                           const Automaton& from, const Automaton& to) {
  if (state_map.size() != from.states.size() || !(from.alphabet == to.alphabet)) {
    throw GraphError("state map does not match the automata");
  }
  for (std::size_t sym = 0; sym < from.alphabet.size(); ++sym) {
    for (std::size_t x = 0; x < from.states.size(); ++x) {
      const auto& allowed = to.delta[sym][state_map[x]];
      for (auto y : from.delta[sym][x]) {
        if (allowed.count(state_map[y]) == 0) return false;
      }
    }
  }
  return true;
}

std::optional<GraphMorphism> extend_node_map(const std::vector<std::size_t>& node_map,
                                              const LabelledGraph& from,
                                              const LabelledGraph& to) {
  if (!is_transition_system(to)) {
    throw GraphError("extend_node_map requires a transition system codomain");
  }
  if (node_map.size() != from.graph().node_count()) {
    throw GraphError("node map does not cover the domain");
  }
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> arcs_of;
  const auto& h = to.graph();
  for (std::size_t b = 0; b < h.arc_count(); ++b) {
    arcs_of[{h.source(b), h.target(b), to.label(b)}] = b;
  }
  const auto& g = from.graph();
  std::vector<std::size_t> arcs(g.arc_count());
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    auto it = arcs_of.find({node_map[g.source(a)], node_map[g.target(a)], from.label(a)});
    if (it == arcs_of.end()) return std::nullopt;
    arcs[a] = it->second;
  }
  return GraphMorphism(from.graph_ref(), to.graph_ref(), node_map, std::move(arcs));
}

}  // namespace topos
