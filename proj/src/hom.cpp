#include "topos/hom.hpp"

#include <cmath>
#include <sstream>

namespace topos {

double hom_candidate_bound(const FiniteGraph& g, const FiniteGraph& h) {
  return std::pow(static_cast<double>(h.node_count()),
                  static_cast<double>(g.node_count())) *
         std::pow(static_cast<double>(h.arc_count()),
                  static_cast<double>(g.arc_count()));
}

namespace {

class HomSearch {
 public:
  HomSearch(const GraphRef& g, const GraphRef& h, const HomOptions& options,
            const std::function<bool(const GraphMorphism&)>& visit)
      : g_(g), h_(h), options_(options), visit_(visit),
        nodes_(g->node_count(), 0), arcs_(g->arc_count(), 0),
        closing_(g->node_count()),
        buckets_(h->node_count(), std::vector<std::vector<std::size_t>>(h->node_count())) {
    for (std::size_t b = 0; b < h->arc_count(); ++b) {
      buckets_[h->source(b)][h->target(b)].push_back(b);
    }
    for (std::size_t a = 0; a < g->arc_count(); ++a) {
      closing_[std::max(g->source(a), g->target(a))].push_back(a);
    }
  }

  void run() { assign_node(0); }

 private:
  bool has_candidate(std::size_t a) const {
    const auto& bucket = buckets_[nodes_[g_->source(a)]][nodes_[g_->target(a)]];
    if (!options_.arc_filter) return !bucket.empty();
    for (auto b : bucket) {
      if (options_.arc_filter(a, b)) return true;
    }
    return false;
  }

  void assign_node(std::size_t u) {
    if (stopped_) return;
    if (u == nodes_.size()) {
      assign_arc(0);
      return;
    }
    for (std::size_t v = 0; v < h_->node_count() && !stopped_; ++v) {
      nodes_[u] = v;
      bool ok = true;
      for (auto a : closing_[u]) {
        if (!has_candidate(a)) {
          ok = false;
          break;
        }
      }
      if (ok) assign_node(u + 1);
    }
  }

  void assign_arc(std::size_t a) {
    if (stopped_) return;
    if (a == arcs_.size()) {
      if (!visit_(GraphMorphism(g_, h_, nodes_, arcs_))) stopped_ = true;
      return;
    }
    const auto& bucket = buckets_[nodes_[g_->source(a)]][nodes_[g_->target(a)]];
    for (auto b : bucket) {
      if (stopped_) return;
      if (options_.arc_filter && !options_.arc_filter(a, b)) continue;
      arcs_[a] = b;
      assign_arc(a + 1);
    }
  }

  const GraphRef& g_;
  const GraphRef& h_;
  const HomOptions& options_;
  const std::function<bool(const GraphMorphism&)>& visit_;
  std::vector<std::size_t> nodes_;
  std::vector<std::size_t> arcs_;
  // Arcs of G whose later endpoint (by index) is the given node.
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<std::vector<std::vector<std::size_t>>> buckets_;
  bool stopped_ = false;
};

}  // namespace

void for_each_hom(const GraphRef& g, const GraphRef& h,
                  const std::function<bool(const GraphMorphism&)>& visit,
                  const HomOptions& options) {
  double bound = hom_candidate_bound(*g, *h);
  if (!(bound <= options.cap)) {
    std::ostringstream msg;
    msg << "hom enumeration refused: candidate bound " << bound
        << " exceeds cap " << options.cap;
    throw CapExceeded(msg.str());
  }
  HomSearch(g, h, options, visit).run();
}

std::vector<GraphMorphism> enumerate_homs(const GraphRef& g, const GraphRef& h,
                                          const HomOptions& options) {
  std::vector<GraphMorphism> result;
  for_each_hom(
      g, h,
      [&](const GraphMorphism& f) {
        result.push_back(f);
        return true;
      },
      options);
  return result;
}

std::vector<GraphMorphism> enumerate_homs(const FiniteGraph& g,
                                          const FiniteGraph& h,
                                          const HomOptions& options) {
  return enumerate_homs(share(g), share(h), options);
}

std::size_t count_homs(const FiniteGraph& g, const FiniteGraph& h,
                       const HomOptions& options) {
  std::size_t count = 0;
  for_each_hom(
      share(g), share(h),
      [&](const GraphMorphism&) {
        ++count;
        return true;
      },
      options);
  return count;
}

bool generators_check(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw GraphError("generators_check requires parallel morphisms");
  }
  for (const auto& probe : {node_graph(), arc_graph()}) {
    bool differ = false;
    for_each_hom(share(probe), f.dom_ref(), [&](const GraphMorphism& h) {
      differ = !(compose(h, f) == compose(h, g));
      return !differ;
    });
    if (differ) return false;
  }
  return true;
}

}  // namespace topos
