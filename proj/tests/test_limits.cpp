#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "topos/corpus.hpp"
#include "topos/hom.hpp"
#include "topos/limits.hpp"

using namespace topos;

namespace {

std::vector<FiniteGraph> small() { return graph_corpus(2, 2); }

std::vector<FiniteGraph> probes() { return graph_corpus(2, 1); }

}  // namespace

TEST_CASE("initial and terminal") {
  CHECK(initial_graph().node_count() == 0);
  auto one = terminal_graph();
  CHECK(one.node_count() == 1);
  CHECK(one.arc_count() == 1);
  for (const auto& g : graph_corpus(3, 3)) {
    CHECK(count_homs(g, one) == 1);
    CHECK(count_homs(initial_graph(), g) == 1);
    CHECK(validate_morphism(to_terminal(g)));
  }
}

TEST_CASE("product examples") {
  auto nn = product(node_graph(), node_graph());
  CHECK(nn.graph->node_count() == 1);
  CHECK(nn.graph->arc_count() == 0);
  auto aa = product(arc_graph(), arc_graph());
  CHECK(aa.graph->node_count() == 4);
  CHECK(aa.graph->arc_count() == 1);
  CHECK(aa.graph->arc_id(0) == "(A,A)");
  CHECK(aa.graph->node_id(aa.graph->source(0)) == "(s,s)");
  CHECK(aa.graph->node_id(aa.graph->target(0)) == "(t,t)");
  auto a1 = product(arc_graph(), terminal_graph());
  CHECK(are_isomorphic(*a1.graph, arc_graph()));
}

TEST_CASE("product universal property by counting") {
  for (const auto& g : small()) {
    for (const auto& h : small()) {
      auto p = product(g, h);
      CHECK(validate_morphism(p.proj1));
      CHECK(validate_morphism(p.proj2));
      for (const auto& w : probes()) {
        CHECK(count_homs(w, *p.graph) == count_homs(w, g) * count_homs(w, h));
      }
    }
  }
}

TEST_CASE("pairing is the unique mediating map") {
  auto g = arc_graph();
  auto h = make_graph({"x", "y"}, {{"a", "x", "y"}, {"b", "y", "x"}});
  auto p = product(g, h);
  auto w = share(arc_graph());
  for (const auto& f1 : enumerate_homs(w, p.proj1.cod_ref())) {
    for (const auto& f2 : enumerate_homs(w, p.proj2.cod_ref())) {
      auto u = pairing(p, f1, f2);
      CHECK(validate_morphism(u));
      CHECK(compose(u, p.proj1) == f1);
      CHECK(compose(u, p.proj2) == f2);
    }
  }
}

TEST_CASE("coproduct universal property by counting") {
  for (const auto& g : small()) {
    for (const auto& h : small()) {
      auto c = coproduct(g, h);
      CHECK(c.graph->node_count() == g.node_count() + h.node_count());
      for (const auto& w : probes()) {
        CHECK(count_homs(*c.graph, w) == count_homs(g, w) * count_homs(h, w));
      }
    }
  }
  auto nn = coproduct(node_graph(), node_graph());
  CHECK(nn.graph->node_ids() == std::vector<std::string>{"inl:N", "inr:N"});
}

TEST_CASE("copairing") {
  auto n = share(node_graph());
  auto a = share(arc_graph());
  auto c = coproduct(n, n);
  GraphMorphism to_s(n, a, {0}, {}), to_t(n, a, {1}, {});
  auto e = copairing(c, to_s, to_t);
  CHECK(compose(c.inj1, e) == to_s);
  CHECK(compose(c.inj2, e) == to_t);
  CHECK(is_mono(e));
  CHECK_FALSE(is_epi(e));
}

TEST_CASE("equalizer and coequalizer of source and target") {
  auto n = share(node_graph());
  auto a = share(arc_graph());
  GraphMorphism s(n, a, {0}, {}), t(n, a, {1}, {});
  auto eq = equalizer(s, t);
  CHECK(eq.is_empty());
  auto q = coequalizer(s, t);
  CHECK(q.graph->node_count() == 1);
  CHECK(q.graph->arc_count() == 1);
  CHECK(are_isomorphic(*q.graph, terminal_graph()));
  CHECK(q.graph->node_id(0) == "s");
  CHECK_THROWS_AS(equalizer(s, identity(a)), GraphError);
}

TEST_CASE("equalizer and coequalizer universal properties by counting") {
  for (const auto& x : small()) {
    for (const auto& y : small()) {
      auto homs = enumerate_homs(x, y);
      for (std::size_t i = 0; i < homs.size(); ++i) {
        for (std::size_t j = i; j < homs.size() && j < i + 3; ++j) {
          const auto& f = homs[i];
          const auto& g = homs[j];
          auto eq = equalizer(f, g).to_graph();
          auto q = coequalizer(f, g);
          CHECK(compose(f, q.map) == compose(g, q.map));
          for (const auto& w : probes()) {
            std::size_t into = 0;
            for (const auto& u : enumerate_homs(share(w), f.dom_ref())) {
              if (compose(u, f) == compose(u, g)) ++into;
            }
            CHECK(count_homs(w, eq) == into);
            std::size_t out = 0;
            for (const auto& u : enumerate_homs(f.cod_ref(), share(w))) {
              if (compose(f, u) == compose(g, u)) ++out;
            }
            CHECK(count_homs(*q.graph, w) == out);
          }
        }
      }
    }
  }
}

TEST_CASE("pullback and pushout by counting") {
  auto one = share(terminal_graph());
  auto a = share(arc_graph());
  auto n = share(node_graph());
  GraphMorphism f = to_terminal(a);
  GraphMorphism g = to_terminal(a);
  auto pb = pullback(f, g);
  CHECK(are_isomorphic(*pb.graph, *product(a, a).graph));
  for (const auto& w : probes()) {
    std::size_t cones = 0;
    for (const auto& u : enumerate_homs(share(w), a)) {
      for (const auto& v : enumerate_homs(share(w), a)) {
        if (compose(u, f) == compose(v, g)) ++cones;
      }
    }
    CHECK(count_homs(w, *pb.graph) == cones);
  }
  // Gluing two arcs along a node gives a path of length two.
  GraphMorphism to_t(n, a, {1}, {}), to_s(n, a, {0}, {});
  auto po = pushout(to_t, to_s);
  CHECK(po.graph->node_count() == 3);
  CHECK(po.graph->arc_count() == 2);
  CHECK(compose(to_t, po.inj1) == compose(to_s, po.inj2));
  for (const auto& w : probes()) {
    std::size_t cocones = 0;
    for (const auto& u : enumerate_homs(a, share(w))) {
      for (const auto& v : enumerate_homs(a, share(w))) {
        if (compose(to_t, u) == compose(to_s, v)) ++cocones;
      }
    }
    CHECK(count_homs(*po.graph, w) == cocones);
  }
}

TEST_CASE("product_map") {
  auto a = share(arc_graph());
  auto p = product(a, a);
  auto f = product_map(p, p, identity(a), identity(a));
  CHECK(f == identity(p.graph));
}
