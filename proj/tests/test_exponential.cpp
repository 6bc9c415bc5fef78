#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "topos/corpus.hpp"
#include "topos/exponential.hpp"
#include "topos/hom.hpp"
#include "topos/limits.hpp"

using namespace topos;

TEST_CASE("twisted product is A×G") {
  for (const auto& g : graph_corpus(2, 2)) {
    auto tw = twisted_product_with_arc(g);
    CHECK(tw == *product(arc_graph(), g).graph);
  }
}

TEST_CASE("A^N is the complete graph with loops on two nodes") {
  auto expo = exponential(node_graph(), arc_graph());
  CHECK(expo.graph->node_count() == 2);
  CHECK(expo.graph->arc_count() == 4);
  CHECK(oracle::one_arc_per_pair(*expo.graph));
  CHECK(are_isomorphic(*expo.graph, oracle::complete_with_loops(2)));
}

TEST_CASE("small exponentials") {
  SUBCASE("H^0 is terminal") {
    auto expo = exponential(initial_graph(), arc_graph());
    CHECK(are_isomorphic(*expo.graph, terminal_graph()));
  }
  SUBCASE("H^1 is H") {
    auto h = make_graph({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}, {"c", "y", "y"}});
    auto expo = exponential(terminal_graph(), h);
    CHECK(are_isomorphic(*expo.graph, h));
  }
  SUBCASE("1^G is 1") {
    auto expo = exponential(oracle::complete_with_loops(2), terminal_graph());
    CHECK(are_isomorphic(*expo.graph, terminal_graph()));
  }
  SUBCASE("A^A") {
    // Nodes: the 4 node functions; arcs: morphisms A×A -> A.
    auto expo = exponential(arc_graph(), arc_graph());
    CHECK(expo.graph->node_count() == 4);
    CHECK(expo.graph->arc_count() == count_homs(*product(arc_graph(), arc_graph()).graph,
                                                arc_graph()));
    CHECK(count_homs(terminal_graph(), *expo.graph) == 1);
  }
}

TEST_CASE("node meaning is mixed radix") {
  auto g = make_graph({"p", "q"}, {});
  auto h = make_graph({"x", "y", "z"}, {});
  auto expo = exponential(g, h);
  REQUIRE(expo.graph->node_count() == 9);
  CHECK(expo.node_meaning[5] == std::vector<std::size_t>{1, 2});
  CHECK(expo.graph->node_id(5) == "[p:y,q:z]");
  CHECK(expo.node_of({2, 0}) == 6);
}

TEST_CASE("global elements of H^G are morphisms G -> H") {
  auto corpus = graph_corpus(3, 3);
  for (const auto& g : graph_corpus(2, 2)) {
    for (const auto& h : corpus) {
      auto expo = exponential(g, h);
      CHECK(count_homs(terminal_graph(), *expo.graph) == count_homs(g, h));
      // Loops at a node are exactly the morphisms with that node map.
      std::size_t loops = 0;
      for (std::size_t a = 0; a < expo.graph->arc_count(); ++a) {
        if (expo.graph->source(a) != expo.graph->target(a)) continue;
        ++loops;
        CHECK(validate_morphism(loop_morphism(expo, a)));
      }
      CHECK(loops == count_homs(g, h));
    }
  }
}

TEST_CASE("curry and uncurry are mutually inverse") {
  auto corpus = graph_corpus(2, 2);
  std::size_t maps = 0;
  for (const auto& f : graph_corpus(2, 1)) {
    for (const auto& g : corpus) {
      for (const auto& h : corpus) {
        auto expo = exponential(g, h);
        auto domain = product(share(f), expo.exponent);
        auto ev = eval(expo);
        CHECK(validate_morphism(ev.map));
        auto left = enumerate_homs(domain.graph, expo.base);
        auto right = enumerate_homs(domain.proj1.cod_ref(), expo.graph);
        CHECK(left.size() == right.size());
        for (const auto& k : left) {
          auto c = curry(k, domain, expo);
          CHECK(validate_morphism(c));
          CHECK(uncurry(c, domain, expo) == k);
          // k = ev ∘ (curry(k) × id)
          auto lifted = product_map(domain, ev.domain, c, identity(expo.exponent));
          CHECK(compose(lifted, ev.map) == k);
          ++maps;
        }
        for (const auto& c : right) CHECK(curry(uncurry(c, domain, expo), domain, expo) == c);
      }
    }
  }
  CHECK(maps > 0);
}

TEST_CASE("shape errors") {
  auto expo = exponential(arc_graph(), arc_graph());
  auto wrong = product(node_graph(), node_graph());
  auto k = to_terminal(wrong.graph);
  CHECK_THROWS_AS(curry(k, wrong, expo), GraphError);
  CHECK_THROWS_AS(loop_morphism(expo, [&] {
                    for (std::size_t a = 0; a < expo.graph->arc_count(); ++a) {
                      if (expo.graph->source(a) != expo.graph->target(a)) return a;
                    }
                    return std::size_t{0};
                  }()),
                  GraphError);
}

TEST_CASE("cap applies to exponentials") {
  HomOptions tiny;
  tiny.cap = 8;
  CHECK_THROWS_AS(exponential(oracle::complete_with_loops(3), oracle::complete_with_loops(3),
                              tiny),
                  CapExceeded);
}
