#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "splitstar/cycle.hpp"
#include "splitstar/error.hpp"
#include "splitstar/permutation.hpp"
#include "splitstar/topology.hpp"

namespace splitstar {

// Deterministic backtracking over a small induced subgraph (at most 32
// vertices).  Neighbor expansion follows the topology module's neighbor
// order, so identical inputs always search identically.
struct SmallGraph {
  std::vector<Perm> verts;
  std::vector<std::vector<int>> nbrs;
  std::unordered_map<std::uint64_t, int> ids;

  static SmallGraph from(std::vector<Perm> vs) {
    SmallGraph g;
    g.verts = std::move(vs);
    if (g.verts.size() > 32)
      fail(ErrorCode::InternalError, "induced graph too large for search");
    for (int i = 0; i < static_cast<int>(g.verts.size()); ++i)
      g.ids[pack_key(g.verts[i])] = i;
    g.nbrs.resize(g.verts.size());
    for (int i = 0; i < static_cast<int>(g.verts.size()); ++i)
      for (auto& [q, k] : neighbors(g.verts[i])) {
        auto it = g.ids.find(pack_key(q));
        if (it != g.ids.end()) g.nbrs[i].push_back(it->second);
      }
    return g;
  }

  int id(const Perm& p) const {
    auto it = ids.find(pack_key(p));
    return it == ids.end() ? -1 : it->second;
  }
  int size() const { return static_cast<int>(verts.size()); }
};

namespace smallsearch {

inline bool dfs_ham_path(const SmallGraph& g, int last, int target,
                         std::uint32_t visited, std::vector<int>& order) {
  if (static_cast<int>(order.size()) == g.size()) return last == target;
  for (int nb : g.nbrs[last]) {
    if (visited & (1u << nb)) continue;
    if (nb == target && static_cast<int>(order.size()) + 1 != g.size())
      continue;
    order.push_back(nb);
    if (dfs_ham_path(g, nb, target, visited | (1u << nb), order)) return true;
    order.pop_back();
  }
  return false;
}

inline bool dfs_ham_cycle(const SmallGraph& g, int last, int anchor,
                          std::uint32_t visited, std::vector<int>& order) {
  if (static_cast<int>(order.size()) == g.size()) {
    for (int nb : g.nbrs[last])
      if (nb == anchor) return true;
    return false;
  }
  for (int nb : g.nbrs[last]) {
    if (visited & (1u << nb)) continue;
    order.push_back(nb);
    if (dfs_ham_cycle(g, nb, anchor, visited | (1u << nb), order)) return true;
    order.pop_back();
  }
  return false;
}

}  // namespace smallsearch

// Hamiltonian path from a to b covering every vertex of g.
inline std::optional<Path> small_ham_path(const SmallGraph& g, const Perm& a,
                                          const Perm& b) {
  int ia = g.id(a), ib = g.id(b);
  if (ia < 0 || ib < 0 || ia == ib) return std::nullopt;
  std::vector<int> order{ia};
  order.reserve(g.size());
  if (!smallsearch::dfs_ham_path(g, ia, ib, 1u << ia, order))
    return std::nullopt;
  Path p;
  for (int i : order) p.vertices.push_back(g.verts[i]);
  return p;
}

// Hamiltonian cycle of g containing the edge (a, b).
inline std::optional<Cycle> small_ham_cycle_through_edge(const SmallGraph& g,
                                                         const Perm& a,
                                                         const Perm& b) {
  auto p = small_ham_path(g, b, a);
  if (!p) return std::nullopt;
  return Cycle{std::move(p->vertices)};
}

// First Hamiltonian cycle of g, anchored at vertex 0.
inline std::optional<Cycle> small_ham_cycle(const SmallGraph& g) {
  if (g.size() < 3) return std::nullopt;
  std::vector<int> order{0};
  order.reserve(g.size());
  if (!smallsearch::dfs_ham_cycle(g, 0, 0, 1u, order)) return std::nullopt;
  Cycle c;
  for (int i : order) c.vertices.push_back(g.verts[i]);
  return c;
}

}  // namespace splitstar
