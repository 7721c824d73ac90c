#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "splitstar/cycle.hpp"
#include "splitstar/hamilton.hpp"
#include "splitstar/permutation.hpp"
#include "splitstar/topology.hpp"
#include "splitstar/verify.hpp"

// Cycles that cover a chosen set of whole subnetworks plus a pinned vertex
// or edge, and the selection of prefix-disjoint representatives from a
// two-cycle cover.  These are the expansion steps the cover constructor
// uses to grow a small cycle by whole subnetworks at a time.

namespace splitstar {

// The set T of additional subnetwork labels to absorb, beyond the two that
// the anchor's first symbols dictate.
struct SubnetSelection {
  int n;
  std::vector<SubnetId> extra;
};

namespace selection_detail {

// Range / duplicate / exclusion checks; returns T sorted ascending.
inline std::vector<SubnetId> checked_extra(const SubnetSelection& T, int n,
                                           std::initializer_list<int> banned) {
  if (T.n != n)
    fail(ErrorCode::DimensionMismatch,
         "selection dimension does not match the request");
  std::vector<SubnetId> extra(T.extra.begin(), T.extra.end());
  std::sort(extra.begin(), extra.end());
  for (std::size_t t = 0; t < extra.size(); ++t) {
    if (extra[t] < 1 || extra[t] > n)
      fail(ErrorCode::BadSelection, "selection label " +
                                        std::to_string(extra[t]) +
                                        " outside [1, " + std::to_string(n) +
                                        "]");
    if (t > 0 && extra[t] == extra[t - 1])
      fail(ErrorCode::BadSelection,
           "selection label " + std::to_string(extra[t]) + " repeats");
    for (int b : banned)
      if (extra[t] == b)
        fail(ErrorCode::BadSelection,
             "selection label " + std::to_string(extra[t]) +
                 " collides with an anchored subnetwork");
  }
  return extra;
}

}  // namespace selection_detail

// Cycle on all vertices of the subnetworks of u's first two symbols, plus
// the subnetworks listed in T, plus u itself.  u's cycle neighbors are its
// two position-n images.
inline Cycle cycle_subnets_plus_vertex(int n, const Perm& u,
                                       const SubnetSelection& T) {
  if (u.n != n)
    fail(ErrorCode::DimensionMismatch,
         "vertex dimension does not match the request");
  if (n < 4)
    fail(ErrorCode::DimensionTooSmall, "selection cycles need dimension >= 4");
  int x1 = u.first(), x2 = u.second(), xn = u.last();
  std::vector<SubnetId> extra =
      selection_detail::checked_extra(T, n, {x1, x2, xn});
  std::vector<SubnetId> order{x1};
  order.insert(order.end(), extra.begin(), extra.end());
  order.push_back(x2);
  auto seg = ham_detail::build_chain(n, order, apply_s(u, n, false),
                                     apply_s(u, n, true), std::nullopt);
  if (!seg)
    fail(ErrorCode::InternalError, "no chain for the vertex-anchored cycle");
  Cycle out;
  out.vertices.reserve(seg->vertices.size() + 1);
  out.vertices.push_back(u);
  out.vertices.insert(out.vertices.end(), seg->vertices.begin(),
                      seg->vertices.end());
  return out;
}

// Cycle through the intra-subnetwork edge e = (u, v) on all vertices of
// the subnetworks of u's first two symbols plus those in T, plus u and v.
// For v = u.(1,2) and v = u s_k^- both anchors lower themselves by the
// position-n minus move; for v = u s_k^+ both use the plus move and the
// ride runs in the opposite rotation.
inline Cycle cycle_subnets_plus_edge(int n, const Edge& e,
                                     const SubnetSelection& T) {
  if (e.a.n != n)
    fail(ErrorCode::DimensionMismatch,
         "edge dimension does not match the request");
  if (n < 4)
    fail(ErrorCode::DimensionTooSmall, "selection cycles need dimension >= 4");
  EdgeKind k = e.kind();
  if (k.type != GenType::Swap12 && k.index == n)
    fail(ErrorCode::NotIntraSubnetwork,
         "anchor edge must stay inside one subnetwork");
  const Perm& u = e.a;
  const Perm& v = e.b;
  int x1 = u.first(), x2 = u.second();
  int j = subnetwork_of(u);
  std::vector<SubnetId> extra =
      selection_detail::checked_extra(T, n, {x1, x2, j});
  bool plus = k.type == GenType::SPlus;
  std::vector<SubnetId> order{plus ? x2 : x1};
  order.insert(order.end(), extra.begin(), extra.end());
  order.push_back(plus ? x1 : x2);
  auto seg =
      ham_detail::build_chain(n, order, apply_s(u, n, plus),
                              apply_s(v, n, plus), std::nullopt);
  if (!seg)
    fail(ErrorCode::InternalError, "no chain for the edge-anchored cycle");
  Cycle out;
  out.vertices.reserve(seg->vertices.size() + 2);
  out.vertices.push_back(u);
  out.vertices.insert(out.vertices.end(), seg->vertices.begin(),
                      seg->vertices.end());
  out.vertices.push_back(v);  // wrap edge (v, u) = e
  return out;
}

// From a two-cycle cover of the whole graph, pick w in c1 and z in c2
// whose first two symbols are four pairwise distinct values; smallest such
// pair by (rank(w), rank(z)).
inline std::pair<Perm, Perm> prefix_disjoint_pair(const Cycle& c1,
                                                  const Cycle& c2) {
  if (c1.vertices.empty() || c2.vertices.empty())
    fail(ErrorCode::NotADcc, "cover cycle is empty");
  int n = c1.vertices.front().n;
  for (const Cycle* c : {&c1, &c2})
    for (const Perm& p : c->vertices)
      if (p.n != n) fail(ErrorCode::NotADcc, "mixed dimensions in the cover");
  if (c1.length() + c2.length() !=
      static_cast<int>(factorial(n)))
    fail(ErrorCode::NotADcc, "cover sizes do not sum to the vertex count");
  std::set<std::uint64_t> seen;
  for (const Cycle* c : {&c1, &c2})
    for (const Perm& p : c->vertices) seen.insert(pack_key(p));
  if (seen.size() != factorial(n))
    fail(ErrorCode::NotADcc, "cover cycles overlap");
  for (const Cycle* c : {&c1, &c2}) {
    auto rep = validate_cycle(std::nullopt, *c);
    if (!rep.ok) fail(ErrorCode::NotADcc, "cover part is not a cycle");
  }
  if (n < 4)
    fail(ErrorCode::DimensionTooSmall,
         "prefix-disjoint pairs need dimension >= 4");
  // Every unordered symbol pair occurs as some vertex prefix: the scan
  // below relies on it, so verify rather than assume.
  std::set<std::pair<int, int>> prefixes;
  for (const Cycle* c : {&c1, &c2})
    for (const Perm& p : c->vertices)
      prefixes.insert(std::minmax<int>(p.first(), p.second()));
  if (prefixes.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
    fail(ErrorCode::InternalError, "prefix pair family incomplete");
  auto by_rank = [](const Cycle& c) {
    std::vector<Perm> v = c.vertices;
    std::sort(v.begin(), v.end(), [](const Perm& a, const Perm& b) {
      return rank_of(a) < rank_of(b);
    });
    return v;
  };
  std::vector<Perm> left = by_rank(c1);
  std::vector<Perm> right = by_rank(c2);
  for (const Perm& w : left)
    for (const Perm& z : right) {
      int a1 = w.first(), a2 = w.second();
      int b1 = z.first(), b2 = z.second();
      if (a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2) return {w, z};
    }
  fail(ErrorCode::InternalError, "no prefix-disjoint pair in the cover");
}

}  // namespace splitstar
