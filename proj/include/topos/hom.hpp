#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "topos/graph.hpp"

namespace topos {

/// Default bound on |H(N)|^|G(N)| * |H(A)|^|G(A)| before an enumeration is
/// refused.
inline constexpr double kDefaultHomCap = 1e7;

struct HomOptions {
  double cap = kDefaultHomCap;
  /// Optional extra constraint on arc assignments (dom arc, cod arc). Used by
  /// the slice category to enforce label preservation.
  std::function<bool(std::size_t, std::size_t)> arc_filter;
};

/// The unpruned candidate count |H(N)|^|G(N)| * |H(A)|^|G(A)| (may be inf).
double hom_candidate_bound(const FiniteGraph& g, const FiniteGraph& h);

/// Visits every morphism G -> H in lexicographic order of (node map, arc
/// map). The visitor returns false to stop early. Throws CapExceeded when the
/// candidate bound exceeds options.cap.
void for_each_hom(const GraphRef& g, const GraphRef& h,
                  const std::function<bool(const GraphMorphism&)>& visit,
                  const HomOptions& options = {});

std::vector<GraphMorphism> enumerate_homs(const FiniteGraph& g,
                                          const FiniteGraph& h,
                                          const HomOptions& options = {});
std::vector<GraphMorphism> enumerate_homs(const GraphRef& g, const GraphRef& h,
                                          const HomOptions& options = {});

std::size_t count_homs(const FiniteGraph& g, const FiniteGraph& h,
                       const HomOptions& options = {});

/// Decides f == g using only probes by the representables: f and g agree
/// iff f∘h == g∘h for every h: N -> dom and every h: A -> dom.
bool generators_check(const GraphMorphism& f, const GraphMorphism& g);

}  // namespace topos
