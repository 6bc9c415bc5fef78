#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include "oracles.hpp"
#include "topos/classifier.hpp"
#include "topos/corpus.hpp"
#include "topos/hom.hpp"

using namespace topos;
using T = TruthValue;

TEST_CASE("omega matches the fixture") {
  const auto& w = *omega();
  CHECK(w == omega_fixture());
  CHECK(w.node_count() == 2);
  CHECK(w.arc_count() == 5);
  auto ends = [&](const char* arc) {
    auto a = w.arc(arc);
    return std::make_pair(w.node_id(w.source(a)), w.node_id(w.target(a)));
  };
  CHECK(ends("0_A") == std::make_pair(std::string("0_N"), std::string("0_N")));
  CHECK(ends("s") == std::make_pair(std::string("N"), std::string("0_N")));
  CHECK(ends("t") == std::make_pair(std::string("0_N"), std::string("N")));
  CHECK(ends("st") == std::make_pair(std::string("N"), std::string("N")));
  CHECK(ends("A") == std::make_pair(std::string("N"), std::string("N")));
}

TEST_CASE("truth value names") {
  CHECK(truth_name(T::kArcEnds) == "(s t)");
  CHECK(truth_id(T::kArcEnds) == "st");
  for (auto v : {T::kNodeFalse, T::kNodeTrue, T::kArcNone, T::kArcSource, T::kArcTarget,
                 T::kArcEnds, T::kArcFull}) {
    CHECK(truth_from_name(truth_name(v)) == v);
  }
  CHECK_FALSE(truth_from_name("bogus").has_value());
}

TEST_CASE("truth order") {
  CHECK(truth_leq(T::kArcNone, T::kArcSource));
  CHECK(truth_leq(T::kArcSource, T::kArcEnds));
  CHECK(truth_leq(T::kArcEnds, T::kArcFull));
  CHECK_FALSE(truth_leq(T::kArcSource, T::kArcTarget));
  CHECK_FALSE(truth_leq(T::kArcTarget, T::kArcSource));
  CHECK_THROWS_AS(truth_leq(T::kNodeTrue, T::kArcFull), GraphError);
  // The order is inclusion of the classified subobjects of A.
  for (auto a : kArcTruths) {
    for (auto b : kArcTruths) {
      auto sa = oracle::arc_truth_members(a), sb = oracle::arc_truth_members(b);
      bool included = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
      CHECK(truth_leq(a, b) == included);
    }
  }
}

TEST_CASE("characteristic rules on a path") {
  auto g = make_graph({"x", "y"}, {{"a", "x", "y"}});
  auto chi = [&](std::vector<std::string> ids) {
    return characteristic(Subobject::from_ids(g, ids));
  };
  auto at_arc = [](const GraphMorphism& f) { return arc_truth(f.arc(0)); };
  CHECK(at_arc(chi({})) == T::kArcNone);
  CHECK(at_arc(chi({"x"})) == T::kArcSource);
  CHECK(at_arc(chi({"y"})) == T::kArcTarget);
  CHECK(at_arc(chi({"x", "y"})) == T::kArcEnds);
  CHECK(at_arc(chi({"x", "y", "a"})) == T::kArcFull);
  CHECK(node_truth(chi({"x"}).node(0)) == T::kNodeTrue);
  CHECK(node_truth(chi({"x"}).node(1)) == T::kNodeFalse);
}

TEST_CASE("classifier law over the corpus") {
  for (const auto& gx : graph_corpus(3, 2)) {
    auto g = share(gx);
    auto homs = enumerate_homs(g, omega());
    CHECK(homs.size() == count_subobjects(gx));
    for (const auto& s : enumerate_subobjects(gx)) {
      auto chi = characteristic(s);
      CHECK(validate_morphism(chi));
      CHECK(oracle::pull_back_true(chi) == s);
      CHECK(subobject_from_characteristic(chi) == s);
      std::size_t matches = 0;
      for (const auto& h : homs) {
        if (oracle::pull_back_true(h) == s) {
          ++matches;
          CHECK(h == chi);
        }
      }
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("true and false") {
  CHECK(node_truth(true_arrow().node(0)) == T::kNodeTrue);
  CHECK(arc_truth(true_arrow().arc(0)) == T::kArcFull);
  CHECK(node_truth(false_arrow().node(0)) == T::kNodeFalse);
  CHECK(arc_truth(false_arrow().arc(0)) == T::kArcNone);
  CHECK(oracle::pull_back_true(false_arrow()).is_empty());
}

TEST_CASE("connectives") {
  CHECK(apply_and(T::kArcSource, T::kArcTarget) == T::kArcNone);
  CHECK(apply_and(T::kArcEnds, T::kArcSource) == T::kArcSource);
  CHECK(apply_not(T::kArcNone) == T::kArcFull);
  CHECK(apply_not(T::kArcFull) == T::kArcNone);
  CHECK(apply_not(T::kArcEnds) == T::kArcNone);
  CHECK(apply_not(T::kArcSource) == T::kArcTarget);
  CHECK(apply_not(T::kArcTarget) == T::kArcSource);
  CHECK(apply_not(T::kNodeTrue) == T::kNodeFalse);
  CHECK(apply_not(T::kNodeFalse) == T::kNodeTrue);
  CHECK(validate_morphism(conjunction()));
  CHECK(validate_morphism(negation()));
}

TEST_CASE("conjunction is intersection of classified subobjects") {
  for (auto a : kArcTruths) {
    for (auto b : kArcTruths) {
      auto sa = oracle::arc_truth_members(a), sb = oracle::arc_truth_members(b);
      std::set<std::string> both;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::inserter(both, both.begin()));
      CHECK(oracle::arc_truth_members(apply_and(a, b)) == both);
    }
  }
  CHECK(apply_and(T::kNodeTrue, T::kNodeTrue) == T::kNodeTrue);
  CHECK(apply_and(T::kNodeTrue, T::kNodeFalse) == T::kNodeFalse);
}

TEST_CASE("negation is the unique classifier of false") {
  auto falsity = image(false_arrow());
  std::size_t matches = 0;
  for (const auto& h : enumerate_homs(omega(), omega())) {
    if (oracle::pull_back_true(h) == falsity) {
      ++matches;
      CHECK(h == negation());
    }
  }
  CHECK(matches == 1);
}

TEST_CASE("count_subobjects") {
  CHECK(count_subobjects(initial_graph()) == 1);
  CHECK(count_subobjects(node_graph()) == 2);
  CHECK(count_subobjects(arc_graph()) == 5);
  CHECK(count_subobjects(terminal_graph()) == 3);
  CHECK_THROWS_AS(count_subobjects(oracle::complete_with_loops(31)), CapExceeded);
}
