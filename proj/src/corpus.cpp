#include "topos/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace topos {

std::vector<ArcTriple> canonical_arcs(std::size_t nodes,
                                      const std::vector<ArcTriple>& arcs) {
  if (nodes > 8) throw CapExceeded("canonical form limited to 8 nodes");
  std::vector<std::size_t> perm(nodes);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ArcTriple> best;
  bool first = true;
  do {
    std::vector<ArcTriple> relabelled;
    relabelled.reserve(arcs.size());
    for (const auto& [u, v, l] : arcs) relabelled.emplace_back(perm[u], perm[v], l);
    std::sort(relabelled.begin(), relabelled.end());
    if (first || relabelled < best) {
      best = std::move(relabelled);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

// Nondecreasing sequences of length k over [0, range).
void multisets(std::size_t range, std::size_t k, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  std::size_t start = cur.empty() ? 0 : cur.back();
  for (std::size_t i = start; i < range; ++i) {
    cur.push_back(i);
    multisets(range, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FiniteGraph> graph_corpus(std::size_t max_nodes, std::size_t max_arcs) {
  std::vector<FiniteGraph> corpus;
  for (std::size_t n = 0; n <= max_nodes; ++n) {
    for (std::size_t m = 0; m <= max_arcs; ++m) {
      if (n == 0 && m > 0) continue;
      std::vector<std::vector<std::size_t>> choices;
      std::vector<std::size_t> cur;
      multisets(n * n, m, cur, choices);
      std::set<std::vector<ArcTriple>> seen;
      for (const auto& choice : choices) {
        std::vector<ArcTriple> arcs;
        for (auto pair : choice) arcs.emplace_back(pair / n, pair % n, 0);
        seen.insert(canonical_arcs(n, arcs));
      }
      for (const auto& key : seen) {
        std::vector<std::string> nodes, ids;
        std::vector<std::size_t> src, tgt;
        for (std::size_t i = 0; i < n; ++i) nodes.push_back("v" + std::to_string(i));
        for (const auto& [u, v, l] : key) {
          ids.push_back("e" + std::to_string(ids.size()));
          src.push_back(u);
          tgt.push_back(v);
        }
        corpus.emplace_back(std::move(nodes), std::move(ids), std::move(src),
                            std::move(tgt));
      }
    }
  }
  return corpus;
}

}  // namespace topos
