#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "topos/classifier.hpp"
#include "topos/hom.hpp"
#include "topos/limits.hpp"
#include "topos/slice.hpp"

using namespace topos;

namespace {

Alphabet ab() { return Alphabet({"alpha", "beta"}); }

LabelledGraph labelled(std::vector<std::string> nodes, std::vector<ArcDecl> arcs,
                       std::vector<std::string> labels, Alphabet sigma = ab()) {
  return LabelledGraph::with_symbols(make_graph(std::move(nodes), arcs), std::move(sigma),
                                     labels);
}

// Slice inclusion of a subobject, typed against restrict_to.
GraphMorphism inclusion_of(const LabelledGraph& x, const Subobject& sub,
                           const LabelledGraph& part) {
  auto inc = sub.inclusion();
  return GraphMorphism(part.graph_ref(), x.graph_ref(), inc.node_map(), inc.arc_map());
}

}  // namespace

TEST_CASE("alphabet") {
  CHECK_THROWS_AS(Alphabet({}), GraphError);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), GraphError);
  auto g = alphabet_graph(ab());
  CHECK(g.node_count() == 1);
  CHECK(g.arc_count() == 2);
}

TEST_CASE("slice morphisms") {
  auto par = labelled({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}}, {"alpha", "alpha"});
  auto one = labelled({"x", "y"}, {{"a", "x", "y"}}, {"alpha"});
  auto other = labelled({"x", "y"}, {{"a", "x", "y"}}, {"beta"});
  CHECK(validate_slice_morphism(identity(par.graph_ref()), par, par));
  GraphMorphism collapse(par.graph_ref(), one.graph_ref(), {0, 1}, {0, 0});
  CHECK(validate_slice_morphism(collapse, par, one));
  GraphMorphism relabel(one.graph_ref(), other.graph_ref(), {0, 1}, {0});
  CHECK_FALSE(validate_slice_morphism(relabel, one, other));
  CHECK(enumerate_slice_homs(one, other).empty());
  CHECK(enumerate_slice_homs(par, one).size() == 1);
  CHECK(enumerate_slice_homs(one, par).size() == 2);
}

TEST_CASE("slice objects and the terminal") {
  auto l = labelled({"x"}, {{"a", "x", "x"}, {"b", "x", "x"}}, {"alpha", "beta"});
  CHECK(from_slice_object(l.labelling(), ab()) == l);
  auto term = slice_terminal(ab());
  for (const auto& x : labelled_corpus(ab(), 2, 2)) {
    CHECK(enumerate_slice_homs(x, term).size() == 1);
  }
}

TEST_CASE("transition systems") {
  CHECK_FALSE(is_transition_system(
      labelled({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}}, {"alpha", "alpha"})));
  CHECK(is_transition_system(
      labelled({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}}, {"alpha", "beta"})));
  CHECK(is_transition_system(labelled({}, {}, {})));
  for (const auto& l : labelled_corpus(ab(), 3, 3)) {
    CHECK(is_transition_system(l) == oracle::no_parallel_equal_labels(l));
  }
}

TEST_CASE("slice classifier") {
  auto two = slice_classifier(ab());
  CHECK(two.graph().node_count() == 2);
  CHECK(two.graph().arc_count() == 10);
  auto unit = Alphabet({"a"});
  auto one = slice_classifier(unit);
  CHECK(are_isomorphic(one.graph(), *omega()));
  CHECK(validate_slice_morphism(slice_true(ab()), slice_terminal(ab()), two));
}

TEST_CASE("slice classifier law") {
  auto omega_sigma = slice_classifier(ab());
  for (const auto& l : labelled_corpus(ab(), 2, 2)) {
    auto homs = enumerate_slice_homs(l, omega_sigma);
    CHECK(homs.size() == count_subobjects(l.graph()));
    for (const auto& s : enumerate_subobjects(l.graph())) {
      auto chi = slice_characteristic(l, s);
      CHECK(validate_slice_morphism(chi, l, omega_sigma));
      CHECK(slice_subobject_from_characteristic(chi, ab()) == s);
      std::size_t matches = 0;
      for (const auto& h : homs) {
        if (slice_subobject_from_characteristic(h, ab()) == s) {
          ++matches;
          CHECK(h == chi);
        }
      }
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("slice closure is labelwise induced") {
  for (const auto& l : labelled_corpus(ab(), 3, 2)) {
    for (const auto& s : enumerate_subobjects(l.graph())) {
      CHECK(slice_closure(l, s, double_negation()) == oracle::induced(s));
      CHECK(slice_closure(l, s, closed_topology()) == oracle::spanning(s));
    }
  }
}

TEST_CASE("separated objects are the transition systems") {
  auto probes = labelled_corpus(ab(), 2, 2);
  for (const auto& l : labelled_corpus(ab(), 3, 2)) {
    auto report = slice_separation_oracle(l, probes);
    CHECK(is_separated_ts(l) == report.separated);
    CHECK(is_separated_ts(l) == is_transition_system(l));
  }
}

TEST_CASE("unit alphabet degenerates to graphs") {
  Alphabet unit({"a"});
  for (const auto& l : labelled_corpus(unit, 3, 3)) {
    CHECK(is_separated_ts(l) == is_separated(l.graph(), double_negation()));
  }
}

TEST_CASE("slice product") {
  auto arc_a = labelled({"x", "y"}, {{"e", "x", "y"}}, {"alpha"});
  auto arc_b = labelled({"x", "y"}, {{"e", "x", "y"}}, {"beta"});
  auto p = slice_product(arc_a, arc_b);
  CHECK(p.graph().node_count() == 4);
  CHECK(p.graph().arc_count() == 0);
  auto with_term = slice_product(arc_a, slice_terminal(ab()));
  CHECK(are_isomorphic(with_term.graph(), arc_a.graph()));
  CHECK_THROWS_AS(slice_product(arc_a, slice_terminal(Alphabet({"gamma"}))), GraphError);
  auto corpus = labelled_corpus(ab(), 2, 2);
  for (const auto& l : corpus) {
    for (const auto& m : corpus) {
      auto lm = slice_product(l, m);
      if (is_transition_system(l) && is_transition_system(m)) {
        CHECK(is_transition_system(lm));
      }
      for (const auto& w : labelled_corpus(ab(), 1, 1)) {
        CHECK(enumerate_slice_homs(w, lm).size() ==
              enumerate_slice_homs(w, l).size() * enumerate_slice_homs(w, m).size());
      }
    }
  }
}

TEST_CASE("subobjects of transition systems are transition systems") {
  for (const auto& l : labelled_corpus(ab(), 3, 3)) {
    if (!is_transition_system(l)) continue;
    for (const auto& s : enumerate_subobjects(l.graph())) {
      CHECK(is_transition_system(restrict_to(l, s)));
    }
  }
}

TEST_CASE("strong monos") {
  auto x = labelled({"x", "y"}, {{"f", "x", "y"}, {"g", "y", "x"}}, {"alpha", "beta"});
  auto check = [&](std::vector<std::string> ids) {
    auto sub = Subobject::from_ids(x.graph(), ids);
    auto part = restrict_to(x, sub);
    return is_strong_mono(inclusion_of(x, sub, part), part, x);
  };
  CHECK(check({"x"}));
  CHECK(check({"x", "y", "f", "g"}));
  CHECK_FALSE(check({"x", "y", "f"}));
  CHECK_FALSE(check({"x", "y"}));
  auto collapse_target = labelled({"x"}, {{"l", "x", "x"}}, {"alpha"});
  auto two = labelled({"p", "q"}, {}, {});
  GraphMorphism not_mono(two.graph_ref(), collapse_target.graph_ref(), {0, 0}, {});
  CHECK_THROWS_AS(is_strong_mono(not_mono, two, collapse_target), GraphError);
}

TEST_CASE("counterexample square has no diagonal") {
  auto sigma = Alphabet({"alpha"});
  auto arc = labelled({"s", "t"}, {{"A", "s", "t"}}, {"alpha"}, sigma);
  auto ends = labelled({"inl:N", "inr:N"}, {}, {}, sigma);
  GraphMorphism e(ends.graph_ref(), arc.graph_ref(), {0, 1}, {});
  CHECK(is_ts_epi(e));
  CHECK_FALSE(is_epi(e));
  auto sub = Subobject::from_ids(arc.graph(), {"s", "t"});
  auto part = restrict_to(arc, sub);
  auto m = inclusion_of(arc, sub, part);
  CHECK(enumerate_slice_homs(arc, part).empty());
  auto report = strong_mono_by_diagonals(m, part, arc, {LabelledEpi{ends, arc, e}});
  CHECK_FALSE(report.strong);
  CHECK(report.squares == 1);
}

TEST_CASE("strong mono characterization agrees with diagonal fill-in") {
  auto epis = enumerate_ts_epis(labelled_corpus(ab(), 2, 2));
  CHECK(!epis.empty());
  std::size_t cases = 0;
  for (const auto& x : labelled_corpus(ab(), 3, 2)) {
    if (!is_transition_system(x)) continue;
    for (const auto& sub : enumerate_subobjects(x.graph())) {
      auto part = restrict_to(x, sub);
      auto m = inclusion_of(x, sub, part);
      CHECK(is_strong_mono(m, part, x) == strong_mono_by_diagonals(m, part, x, epis).strong);
      ++cases;
    }
  }
  CHECK(cases > 100);
}

TEST_CASE("automata") {
  Automaton empty({"p", "q"}, ab());
  CHECK(automaton_to_lts(empty).graph().arc_count() == 0);
  Automaton a({"x", "y"}, ab());
  a.add(0, 0, 0);
  a.add(0, 0, 1);
  auto l = automaton_to_lts(a);
  CHECK(l.graph().arc_count() == 2);
  CHECK(l.graph().arc_id(1) == "x-alpha->y");
  CHECK(lts_to_automaton(l) == a);
  auto par = labelled({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}}, {"alpha", "alpha"});
  CHECK_THROWS_AS(lts_to_automaton(par), GraphError);
}

TEST_CASE("automaton morphisms correspond to labelled graph morphisms") {
  std::mt19937 rng(7);
  auto random_automaton = [&](std::size_t states) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < states; ++i) names.push_back("q" + std::to_string(i));
    Automaton a(names, ab());
    std::bernoulli_distribution coin(0.3);
    for (std::size_t sym = 0; sym < 2; ++sym) {
      for (std::size_t x = 0; x < states; ++x) {
        for (std::size_t y = 0; y < states; ++y) {
          if (coin(rng)) a.add(sym, x, y);
        }
      }
    }
    return a;
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto from = random_automaton(2);
    auto to = random_automaton(3);
    auto lf = automaton_to_lts(from), lt = automaton_to_lts(to);
    std::set<std::vector<std::size_t>> via_graphs;
    for (const auto& f : enumerate_slice_homs(lf, lt)) via_graphs.insert(f.node_map());
    for (std::size_t code = 0; code < 9; ++code) {
      std::vector<std::size_t> map{code / 3, code % 3};
      bool aut = is_automaton_morphism(map, from, to);
      auto ext = extend_node_map(map, lf, lt);
      CHECK(aut == ext.has_value());
      CHECK(aut == (via_graphs.count(map) == 1));
      if (ext) CHECK(validate_slice_morphism(*ext, lf, lt));
    }
  }
}
