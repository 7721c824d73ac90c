#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "splitstar/base_tables.hpp"
#include "splitstar/cover.hpp"
#include "splitstar/cycle.hpp"
#include "splitstar/error.hpp"
#include "splitstar/hamilton.hpp"
#include "splitstar/permutation.hpp"
#include "splitstar/subnet_cycles.hpp"
#include "splitstar/topology.hpp"
#include "splitstar/verify.hpp"

namespace splitstar {

// Which band of [3, N!/2] a length falls in.  Block s covers
// [3 + (s-1)m, sm + 2] with m = (N-1)!: band 1 is the wide range up to
// sm - 3, bands 2..6 are the residues sm-2, sm-1, sm, sm+1, sm+2.
struct CaseSplit {
  int sub = 0;
  int s = 0;
};

inline CaseSplit case_select(int n_plus_1, std::uint64_t ell) {
  int N = n_plus_1;
  if (N < 5)
    fail(ErrorCode::DimensionTooSmall, "band selection starts at dimension 5");
  std::uint64_t half = factorial(N) / 2;
  if (ell < 3 || ell > half)
    fail(ErrorCode::BadLength, "length " + std::to_string(ell) +
                                   " outside [3, " + std::to_string(half) +
                                   "]");
  std::uint64_t m = factorial(N - 1);
  int smax = (N + 1) / 2;
  CaseSplit hit;
  int matches = 0;
  for (int s = 1; s <= smax; ++s) {
    std::uint64_t top = static_cast<std::uint64_t>(s) * m;
    std::uint64_t lo = 3 + (static_cast<std::uint64_t>(s) - 1) * m;
    auto consider = [&](int sub, bool in) {
      if (!in) return;
      hit = {sub, s};
      ++matches;
    };
    consider(1, ell >= lo && ell + 3 <= top);
    consider(2, ell == top - 2);
    consider(3, ell == top - 1);
    consider(4, ell == top);
    consider(5, ell == top + 1);
    consider(6, ell == top + 2);
  }
  if (matches != 1)
    fail(ErrorCode::InternalError,
         "length bands fail to partition at " + std::to_string(ell));
  return hit;
}

namespace dcc_detail {

inline bool holds(const std::vector<SubnetId>& set, SubnetId l) {
  return std::find(set.begin(), set.end(), l) != set.end();
}

inline std::vector<SubnetId> labels_minus(int N,
                                          const std::vector<SubnetId>& out) {
  std::vector<SubnetId> r;
  for (int l = 1; l <= N; ++l)
    if (!holds(out, l)) r.push_back(l);
  return r;
}

// The `count` smallest labels of [1, N] outside `banned`.
inline std::vector<SubnetId> smallest_labels(
    int N, int count, const std::vector<SubnetId>& banned) {
  std::vector<SubnetId> r;
  for (int l = 1; l <= N && static_cast<int>(r.size()) < count; ++l)
    if (!holds(banned, l)) r.push_back(l);
  if (static_cast<int>(r.size()) != count)
    fail(ErrorCode::InternalError, "not enough subnetwork labels");
  return r;
}

inline std::vector<SubnetId> join_labels(std::vector<SubnetId> a,
                                         const std::vector<SubnetId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Cycle relabel_cycle(const Perm& sigma, const Cycle& c) {
  Cycle out;
  out.vertices.reserve(c.vertices.size());
  for (const Perm& x : c.vertices) out.vertices.push_back(relabel(sigma, x));
  return out;
}

inline std::vector<Perm> by_rank(const std::vector<Perm>& vs) {
  std::vector<Perm> order = vs;
  std::sort(order.begin(), order.end(), [](const Perm& a, const Perm& b) {
    return rank_of(a) < rank_of(b);
  });
  return order;
}

// r-th vertex of a subnetwork, ordered by the rank of the lowered word.
inline Perm subnet_vertex(int N, SubnetId i, std::uint64_t r) {
  return lift_into_subnet(unrank_perm(r, N - 1), i, N);
}

// Word (a, b, ascending rest, last).
inline Perm word_with_prefix(int N, SubnetId last, int a, int b) {
  Perm p;
  p.n = static_cast<std::uint8_t>(N);
  int pos = 0;
  p.s[pos++] = static_cast<std::uint8_t>(a);
  p.s[pos++] = static_cast<std::uint8_t>(b);
  for (int t = 1; t <= N; ++t)
    if (t != last && t != a && t != b)
      p.s[pos++] = static_cast<std::uint8_t>(t);
  p.s[pos] = static_cast<std::uint8_t>(last);
  return p;
}

// x's in-subnetwork partner: the 12-swap image unless that is the vertex
// to avoid, else the position-3 plus rotation.
inline Perm swap_partner(const Perm& x, const Perm& avoid) {
  Perm cand = apply_swap12(x);
  if (cand == avoid) cand = apply_s(x, 3, true);
  return cand;
}

// The coupled option of e landing in subnetwork t.
inline CoupledEdge option_into(const Edge& e, SubnetId t) {
  for (const CoupledEdge& o : coupled_pair_edge(e))
    if (o.subnet == t) return o;
  fail(ErrorCode::InternalError,
       "no coupled option lands in subnetwork " + std::to_string(t));
}

// Hamiltonian cycle of the named subnetworks through an anchor edge.
inline Cycle cluster_cycle(int N, std::vector<SubnetId> labels,
                           const Edge& e) {
  std::sort(labels.begin(), labels.end());
  return cluster_ham_cycle_through_edge(Cluster{N, labels}, e);
}

// Expansion ring over the subnetworks sigma anchored at vertex x; sigma
// must contain both of x's first two symbols.
inline Cycle subnets_plus_vertex_over(int N, const Perm& x,
                                      const std::vector<SubnetId>& sigma) {
  std::vector<SubnetId> extra;
  bool sa = false, sb = false;
  for (SubnetId l : sigma) {
    if (l == x.first()) { sa = true; continue; }
    if (l == x.second()) { sb = true; continue; }
    extra.push_back(l);
  }
  if (!sa || !sb)
    fail(ErrorCode::InternalError,
         "anchor entry subnetworks missing from the selection");
  return cycle_subnets_plus_vertex(N, x, SubnetSelection{N, extra});
}

// Same for an anchor edge; the entry subnetworks are the first two
// symbols of e.a regardless of the edge kind.
inline Cycle subnets_plus_edge_over(int N, const Edge& e,
                                    const std::vector<SubnetId>& sigma) {
  std::vector<SubnetId> extra;
  bool sa = false, sb = false;
  for (SubnetId l : sigma) {
    if (l == e.a.first()) { sa = true; continue; }
    if (l == e.a.second()) { sb = true; continue; }
    extra.push_back(l);
  }
  if (!sa || !sb)
    fail(ErrorCode::InternalError,
         "anchor entry subnetworks missing from the selection");
  return cycle_subnets_plus_edge(N, e, SubnetSelection{N, extra});
}

// [x, x1] stitched onto the host across the coupled edge ce: the result
// is <x, x1, ce.b, ..., ce.a> riding the host between the coupled
// endpoints.  Works in both directions: host may hold ce with (x, x1)
// foreign, or hold (x, x1) as its own edge with ce the foreign pair.
inline Cycle splice_pair(const Perm& x, const Perm& x1, const Cycle& host,
                         const Edge& ce) {
  Path p = open_at_edge(host, ce.b, ce.a);
  Cycle out;
  out.vertices.reserve(p.vertices.size() + 2);
  out.vertices.push_back(x);
  out.vertices.push_back(x1);
  out.vertices.insert(out.vertices.end(), p.vertices.begin(),
                      p.vertices.end());
  return out;
}

// Cycle over subnetwork i minus the adjacent pair {a, b}, through the
// prescribed edge e, built one dimension down and lifted back.
inline Cycle subnet_minus_pair_through(int N, SubnetId i, const Perm& a,
                                       const Perm& b, const Edge& e) {
  Cycle low = ham_cycle_minus_pair_through_edge(
      N - 1, drop_last_relabel(a), drop_last_relabel(b),
      Edge(drop_last_relabel(e.a), drop_last_relabel(e.b)));
  return ham_detail::lift_cycle(low, i, N);
}

// A cycle edge whose coupled image lands in an allowed subnetwork:
// vertices by rank, successor before predecessor, option order.
struct BridgeChoice {
  Perm x;
  Perm x1;
  CoupledEdge opt;
};

inline BridgeChoice find_bridge(const Cycle& c,
                                const std::vector<SubnetId>& allowed,
                                const std::vector<Perm>& excluded) {
  auto banned = [&](const Perm& p) {
    return std::find(excluded.begin(), excluded.end(), p) != excluded.end();
  };
  for (const Perm& x : by_rank(c.vertices)) {
    if (banned(x)) continue;
    for (const Perm& x1 : {successor(c, x), predecessor(c, x)}) {
      if (banned(x1)) continue;
      for (const CoupledEdge& o : coupled_pair_edge(Edge(x, x1)))
        if (holds(allowed, o.subnet)) return {x, x1, o};
    }
  }
  fail(ErrorCode::InternalError,
       "no cycle edge couples into the allowed subnetworks");
}

inline Cycle merge_via_bridge(const Cycle& c, const BridgeChoice& b,
                              const Cycle& other) {
  return merge_cycles(c, b.x, b.x1, other, b.opt.edge.a, b.opt.edge.b);
}

// A cycle edge whose entry subnetworks lie inside sigma, endpoints
// outside `excluded`; oriented (vertex, cycle neighbor).
inline Edge find_anchor_edge(const Cycle& c,
                             const std::vector<SubnetId>& sigma,
                             const std::vector<Perm>& excluded) {
  auto banned = [&](const Perm& p) {
    return std::find(excluded.begin(), excluded.end(), p) != excluded.end();
  };
  for (const Perm& x : by_rank(c.vertices)) {
    if (banned(x)) continue;
    if (!holds(sigma, x.first()) || !holds(sigma, x.second())) continue;
    for (const Perm& x1 : {successor(c, x), predecessor(c, x)}) {
      if (banned(x1)) continue;
      return Edge(x, x1);
    }
  }
  fail(ErrorCode::InternalError,
       "no cycle edge enters the allowed subnetworks");
}

// Split into a cycle one longer than a subnetwork and its complement.
// The short cycle is subnetwork 1 minus c plus a coupled pair borrowed
// from a foreign subnetwork p.  The long cycle starts at c, sweeps c's
// first-symbol subnetwork, rides the p-remainder between the borrowed
// pair's old neighbors, and chains the remaining subnetworks back to c
// through its second symbol.
inline DccCover lone_extra_split(int N, const Perm& c) {
  Cycle inner = ham_cycle_minus_vertex(Scope::subnet(N, 1), c);
  int cf = c.first(), cs = c.second();
  Perm v1 = apply_s(c, N, false);
  Perm v2 = apply_s(c, N, true);
  for (const Perm& x : by_rank(inner.vertices)) {
    for (const Perm& x1 : {successor(inner, x), predecessor(inner, x)}) {
      for (const CoupledEdge& opt : coupled_pair_edge(Edge(x, x1))) {
        SubnetId p = opt.subnet;
        if (p == cf || p == cs) continue;
        Cycle rest = ham_cycle_minus_edge_pair(Scope::subnet(N, p),
                                               opt.edge.a, opt.edge.b);
        for (const Perm& z : by_rank(rest.vertices)) {
          for (const Perm& z1 : {successor(rest, z), predecessor(rest, z)}) {
            bool plus_into;
            if (z1.first() == cf) plus_into = false;
            else if (z1.second() == cf) plus_into = true;
            else continue;
            Perm u1 = apply_s(z1, N, plus_into);
            if (u1 == v1) continue;
            for (bool sb : {false, true}) {
              SubnetId q = sb ? z.second() : z.first();
              if (q == 1 || q == cf || q == cs || q == p) continue;
              Perm uj = apply_s(z, N, sb);
              std::vector<SubnetId> chain_order{q};
              for (SubnetId l : labels_minus(N, {1, cf, cs, p, q}))
                chain_order.push_back(l);
              chain_order.push_back(cs);
              auto tail = ham_detail::build_chain(N, chain_order, uj, v2,
                                                  std::nullopt);
              if (!tail) continue;
              Cycle c1 = splice_pair(opt.edge.a, opt.edge.b, inner,
                                     Edge(x, x1));
              Path sweep = ham_path(Scope::subnet(N, cf), v1, u1);
              Path mid = open_at_edge(rest, z1, z);
              Cycle c2;
              c2.vertices.reserve(1 + sweep.vertices.size() +
                                  mid.vertices.size() +
                                  tail->vertices.size());
              c2.vertices.push_back(c);
              c2.vertices.insert(c2.vertices.end(), sweep.vertices.begin(),
                                 sweep.vertices.end());
              c2.vertices.insert(c2.vertices.end(), mid.vertices.begin(),
                                 mid.vertices.end());
              c2.vertices.insert(c2.vertices.end(), tail->vertices.begin(),
                                 tail->vertices.end());
              return {c1, c2};
            }
          }
        }
      }
    }
  }
  fail(ErrorCode::InternalError, "no split with a single extra vertex");
}

inline DccCover construct_at(int n, const Perm& u, const Perm& v,
                             std::uint64_t ell, CaseTrace& trace);

// Either orientation: a cover whose first cycle holds `a` with length
// `len` for any len in [3, n! - 3].
inline DccCover any_length(int n, const Perm& a, const Perm& b,
                           std::uint64_t len, CaseTrace& trace) {
  std::uint64_t total = factorial(n);
  if (len <= total / 2) return construct_at(n, a, b, len, trace);
  DccCover sw = construct_at(n, b, a, total - len, trace);
  return {sw.c2, sw.c1};
}

// The normalized instance: u is the descending word of [N], v is any
// other vertex, 3 <= ell <= N!/2.
inline DccCover construct_normalized(int N, const Perm& v, std::uint64_t ell,
                                     CaseTrace& trace) {
  const Perm u = reverse_identity_perm(N);
  const std::uint64_t m = factorial(N - 1);
  const SubnetId i = v.last();
  const int top = i == 1 ? 1 : 2;
  CaseSplit pick = case_select(N, ell);
  const int s = pick.s;
  trace.push_back({N, top, pick.sub, s});

  if (top == 1) {
    const int y1 = v.first(), y2 = v.second();
    switch (pick.sub) {
      case 1: {
        // Recurse inside subnetwork 1, then absorb the other
        // subnetworks: all of them into the long cycle when s = 1, else
        // split between the two cycles at a prefix-disjoint vertex pair.
        std::uint64_t lp = ell - static_cast<std::uint64_t>(s - 1) * m;
        DccCover low = any_length(N - 1, drop_last_relabel(u),
                                  drop_last_relabel(v), lp, trace);
        Cycle c1 = ham_detail::lift_cycle(low.c1, 1, N);
        Cycle c2 = ham_detail::lift_cycle(low.c2, 1, N);
        if (s == 1) {
          Perm n1 = successor(c2, v);
          if (n1 == u) n1 = predecessor(c2, v);
          Cycle ring =
              subnets_plus_edge_over(N, Edge(v, n1), labels_minus(N, {1}));
          return {c1, merge_sharing_edge(c2, ring, v, n1)};
        }
        auto [wl, zl] = prefix_disjoint_pair(low.c1, low.c2);
        Perm w = lift_into_subnet(wl, 1, N);
        Perm z = lift_into_subnet(zl, 1, N);
        Perm w1 = successor(c1, w);
        Perm z1 = successor(c2, z);
        CoupledEdge ow = coupled_pair_edge(Edge(w, w1)).front();
        CoupledEdge oz = coupled_pair_edge(Edge(z, z1)).front();
        std::vector<SubnetId> k1 = join_labels(
            {ow.subnet},
            smallest_labels(N, s - 2, {1, ow.subnet, oz.subnet}));
        std::vector<SubnetId> k2 = labels_minus(N, join_labels({1}, k1));
        return {merge_cycles(c1, w, w1, cluster_cycle(N, k1, ow.edge),
                             ow.edge.a, ow.edge.b),
                merge_cycles(c2, z, z1, cluster_cycle(N, k2, oz.edge),
                             oz.edge.a, oz.edge.b)};
      }
      case 2: {
        // Short cycle: subnetwork 1 minus the pair {v, v1}, extended
        // through a cluster when s >= 2.  Long cycle: v and v1 spliced
        // onto a cluster ride through their coupled pair.
        Perm p1 = swap_partner(v, u);
        CoupledEdge ov = option_into(Edge(v, p1), y1);
        std::vector<SubnetId> sig2 =
            join_labels({y1}, smallest_labels(N, N - s - 1, {1, y1}));
        Cycle c2 =
            splice_pair(v, p1, cluster_cycle(N, sig2, ov.edge), ov.edge);
        if (s == 1)
          return {ham_cycle_minus_edge_pair(Scope::subnet(N, 1), v, p1), c2};
        std::vector<SubnetId> k1 = labels_minus(N, join_labels({1}, sig2));
        std::uint64_t r = 0;
        Perm w, w1;
        for (;; ++r) {
          w = subnet_vertex(N, 1, r);
          w1 = apply_swap12(w);
          if (w == v || w == p1 || w1 == v || w1 == p1) continue;
          if (!holds(k1, w.first())) continue;
          break;
        }
        CoupledEdge ow = option_into(Edge(w, w1), w.first());
        Cycle inner = subnet_minus_pair_through(N, 1, v, p1, Edge(w, w1));
        return {merge_cycles(inner, w, w1, cluster_cycle(N, k1, ow.edge),
                             ow.edge.a, ow.edge.b),
                c2};
      }
      case 3: {
        // Short cycle: subnetwork 1 minus v, bridged into a cluster when
        // s >= 2.  Long cycle: v expanded over the remaining
        // subnetworks.
        Cycle inner = ham_cycle_minus_vertex(Scope::subnet(N, 1), v);
        if (s == 1)
          return {inner, subnets_plus_vertex_over(N, v, labels_minus(N, {1}))};
        BridgeChoice b = find_bridge(inner, labels_minus(N, {1, y1, y2}), {});
        std::vector<SubnetId> sig2 = join_labels(
            {y1, y2},
            smallest_labels(N, N - s - 2, {1, y1, y2, b.opt.subnet}));
        std::vector<SubnetId> k1 = labels_minus(N, join_labels({1}, sig2));
        return {merge_via_bridge(inner, b, cluster_cycle(N, k1, b.opt.edge)),
                subnets_plus_vertex_over(N, v, sig2)};
      }
      case 4: {
        // Both cycles trade a pair across the v.first() boundary: the
        // short cycle avoids {v, v1} but borrows w's coupled pair; the
        // long cycle avoids that pair but picks up {v, v1}.
        Perm p1 = swap_partner(v, u);
        Perm w = apply_s(v, 4, true);
        Perm w1 = apply_swap12(w);
        CoupledEdge ov = option_into(Edge(v, p1), y1);
        CoupledEdge ow = option_into(Edge(w, w1), y1);
        Cycle innerA = subnet_minus_pair_through(N, 1, v, p1, Edge(w, w1));
        Cycle innerB = subnet_minus_pair_through(N, y1, ow.edge.a, ow.edge.b,
                                                 ov.edge);
        Cycle c1 = splice_pair(ow.edge.a, ow.edge.b, innerA, Edge(w, w1));
        Cycle partner = splice_pair(v, p1, innerB, ov.edge);
        if (s == 1) {
          Edge a2 = find_anchor_edge(innerB, labels_minus(N, {1, y1}),
                                     {ov.edge.a, ov.edge.b});
          Cycle ring = subnets_plus_edge_over(N, a2, labels_minus(N, {1, y1}));
          return {c1, merge_sharing_edge(partner, ring, a2.a, a2.b)};
        }
        BridgeChoice b1 = find_bridge(c1, labels_minus(N, {1, y1}),
                                      {w, w1, ow.edge.a, ow.edge.b});
        std::vector<SubnetId> k1 = join_labels(
            {b1.opt.subnet},
            smallest_labels(N, s - 2, {1, y1, b1.opt.subnet}));
        std::vector<SubnetId> k2 =
            labels_minus(N, join_labels({1, y1}, k1));
        BridgeChoice b2 =
            find_bridge(partner, k2, {v, p1, ov.edge.a, ov.edge.b});
        return {merge_via_bridge(c1, b1, cluster_cycle(N, k1, b1.opt.edge)),
                merge_via_bridge(partner, b2,
                                 cluster_cycle(N, k2, b2.opt.edge))};
      }
      case 5: {
        if (s == 1) return lone_extra_split(N, v);
        // Short cycle: u expanded over its own entry subnetworks plus
        // fillers.  Long cycle: subnetwork 1 minus u, bridged into the
        // leftover cluster.
        std::vector<SubnetId> sig1 = join_labels(
            {N, N - 1}, smallest_labels(N, s - 2, {1, N, N - 1}));
        Cycle c1 = subnets_plus_vertex_over(N, u, sig1);
        Cycle inner = ham_cycle_minus_vertex(Scope::subnet(N, 1), u);
        std::vector<SubnetId> k2 = labels_minus(N, join_labels({1}, sig1));
        BridgeChoice b = find_bridge(inner, k2, {});
        return {c1,
                merge_via_bridge(inner, b, cluster_cycle(N, k2, b.opt.edge))};
      }
      case 6: {
        // Short cycle: {u, u1} spliced onto a cluster ride through their
        // coupled pair.  Long cycle: subnetwork 1 minus {u, u1} merged
        // with the leftover cluster.
        Perm q1 = swap_partner(u, v);
        CoupledEdge ou = option_into(Edge(u, q1), u.first());
        std::vector<SubnetId> k1 =
            join_labels({N}, smallest_labels(N, s - 1, {1, N}));
        Cycle c1 =
            splice_pair(u, q1, cluster_cycle(N, k1, ou.edge), ou.edge);
        std::vector<SubnetId> k2 = labels_minus(N, join_labels({1}, k1));
        std::uint64_t r = 0;
        Perm z, z1;
        for (;; ++r) {
          z = subnet_vertex(N, 1, r);
          z1 = apply_swap12(z);
          if (z == u || z == q1 || z1 == u || z1 == q1) continue;
          if (!holds(k2, z.first())) continue;
          break;
        }
        CoupledEdge oz = option_into(Edge(z, z1), z.first());
        Cycle inner = subnet_minus_pair_through(N, 1, u, q1, Edge(z, z1));
        return {c1, merge_cycles(inner, z, z1, cluster_cycle(N, k2, oz.edge),
                                 oz.edge.a, oz.edge.b)};
      }
    }
  } else {
    switch (pick.sub) {
      case 1: {
        if (s == 1) {
          // Recurse inside subnetwork 1 around the pair {u, u.(1,2)};
          // the long cycle swallows every other subnetwork (v's among
          // them) through an edge at u's partner.
          Perm q1 = apply_swap12(u);
          DccCover low = any_length(N - 1, drop_last_relabel(u),
                                    drop_last_relabel(q1), ell, trace);
          Cycle c1 = ham_detail::lift_cycle(low.c1, 1, N);
          Cycle c2 = ham_detail::lift_cycle(low.c2, 1, N);
          Perm t = successor(c2, q1);
          Cycle ring =
              subnets_plus_edge_over(N, Edge(q1, t), labels_minus(N, {1}));
          return {c1, merge_sharing_edge(c2, ring, q1, t)};
        }
        // Recurse inside a neutral subnetwork j around two words whose
        // prefixes steer the exits: w leads with 1 (short cycle reaches
        // u's subnetwork), z leads with i (long cycle reaches v's).
        SubnetId j = smallest_labels(N, 1, {1, i})[0];
        SubnetId a1 = smallest_labels(N, 1, {1, i, j})[0];
        SubnetId b1 = smallest_labels(N, 1, {1, a1, i, j})[0];
        Perm w = word_with_prefix(N, j, 1, a1);
        Perm z = word_with_prefix(N, j, i, b1);
        std::uint64_t lp = ell - static_cast<std::uint64_t>(s - 1) * m;
        DccCover low = any_length(N - 1, drop_last_relabel(w),
                                  drop_last_relabel(z), lp, trace);
        Cycle a0 = ham_detail::lift_cycle(low.c1, j, N);
        Cycle b0 = ham_detail::lift_cycle(low.c2, j, N);
        std::vector<SubnetId> k1 =
            join_labels({1}, smallest_labels(N, s - 2, {1, i, j, b1}));
        std::vector<SubnetId> sig2 = labels_minus(N, join_labels({j}, k1));
        // The w-side bridge must land in subnetwork 1; when both cycle
        // edges at w rotate the wrong way, swapping symbols 1 and a1
        // turns them around.
        for (int use_sigma = 0; use_sigma <= 1; ++use_sigma) {
          Perm sg = use_sigma ? transposition_perm(N, 1, a1)
                              : identity_perm(N);
          Cycle ca = use_sigma ? relabel_cycle(sg, a0) : a0;
          Cycle cb = use_sigma ? relabel_cycle(sg, b0) : b0;
          Perm ws = relabel(sg, w);
          Perm zs = relabel(sg, z);
          for (const Perm& w1 : {successor(ca, ws), predecessor(ca, ws)}) {
            const CoupledEdge* into1 = nullptr;
            auto opts = coupled_pair_edge(Edge(ws, w1));
            for (const CoupledEdge& o : opts)
              if (o.subnet == 1) into1 = &o;
            if (!into1) continue;
            Edge ze(zs, successor(cb, zs));
            Cycle ring = subnets_plus_edge_over(N, ze, sig2);
            return {merge_cycles(ca, ws, w1,
                                 cluster_cycle(N, k1, into1->edge),
                                 into1->edge.a, into1->edge.b),
                    merge_sharing_edge(cb, ring, ze.a, ze.b)};
          }
        }
        fail(ErrorCode::InternalError, "no bridge into subnetwork 1");
      }
      case 2: {
        // Anchor pair {w, w.(1,2)} in subnetwork 1 with w leading by i:
        // the long cycle splices the pair onto a cluster ride through
        // v's subnetwork; the short cycle is subnetwork 1 minus the
        // pair, cluster-extended when s >= 2.
        std::uint64_t r = 0;
        Perm w, z;
        for (;; ++r) {
          w = subnet_vertex(N, 1, r);
          if (w.first() != i || w == u) continue;
          z = apply_swap12(w);
          if (z == u) continue;
          break;
        }
        CoupledEdge ow = option_into(Edge(w, z), i);
        std::vector<SubnetId> sig2 =
            join_labels({i}, smallest_labels(N, N - s - 1, {1, i}));
        Cycle c2 =
            splice_pair(w, z, cluster_cycle(N, sig2, ow.edge), ow.edge);
        if (s == 1)
          return {ham_cycle_minus_edge_pair(Scope::subnet(N, 1), w, z), c2};
        std::vector<SubnetId> k1 = labels_minus(N, join_labels({1}, sig2));
        std::uint64_t r2 = 0;
        Perm w1, z1;
        for (;; ++r2) {
          w1 = subnet_vertex(N, 1, r2);
          z1 = apply_swap12(w1);
          if (w1 == w || w1 == z || z1 == w || z1 == z) continue;
          if (!holds(k1, w1.first())) continue;
          break;
        }
        CoupledEdge o1 = option_into(Edge(w1, z1), w1.first());
        Cycle inner = subnet_minus_pair_through(N, 1, w, z, Edge(w1, z1));
        return {merge_cycles(inner, w1, z1, cluster_cycle(N, k1, o1.edge),
                             o1.edge.a, o1.edge.b),
                c2};
      }
      case 3: {
        // Delete a subnetwork-1 vertex leading by i; it anchors the long
        // cycle's expansion ring while the rest of subnetwork 1 (with u)
        // forms the short cycle, cluster-bridged when s >= 2.
        std::uint64_t r = 0;
        Perm q1;
        for (;; ++r) {
          q1 = subnet_vertex(N, 1, r);
          if (q1.first() == i && q1 != u) break;
        }
        int a1 = q1.second();
        Cycle inner = ham_cycle_minus_vertex(Scope::subnet(N, 1), q1);
        if (s == 1)
          return {inner,
                  subnets_plus_vertex_over(N, q1, labels_minus(N, {1}))};
        BridgeChoice b = find_bridge(inner, labels_minus(N, {1, i, a1}), {});
        std::vector<SubnetId> sig2 = join_labels(
            {i, a1},
            smallest_labels(N, N - s - 2, {1, i, a1, b.opt.subnet}));
        std::vector<SubnetId> k1 = labels_minus(N, join_labels({1}, sig2));
        return {merge_via_bridge(inner, b, cluster_cycle(N, k1, b.opt.edge)),
                subnets_plus_vertex_over(N, q1, sig2)};
      }
      case 4: {
        // Two pure cluster rides: one through u's swap edge, one through
        // v's, splitting the subnetworks s against N - s.
        Perm q1 = apply_swap12(u);
        std::vector<SubnetId> k1 =
            join_labels({1}, smallest_labels(N, s - 1, {1, i}));
        std::vector<SubnetId> k2 = labels_minus(N, k1);
        return {cluster_cycle(N, k1, Edge(u, q1)),
                cluster_cycle(N, k2, Edge(v, apply_swap12(v)))};
      }
      case 5: {
        if (s == 1) {
          std::uint64_t r = 0;
          Perm c;
          for (;; ++r) {
            c = subnet_vertex(N, 1, r);
            if (c.first() == i && c != u) break;
          }
          return lone_extra_split(N, c);
        }
        // Anchor w in a neutral subnetwork leads with 1: the short cycle
        // expands w over subnetwork 1 (with u) plus fillers; the long
        // cycle is w's subnetwork minus w merged with the leftover ring.
        SubnetId a1 = smallest_labels(N, 1, {1, i})[0];
        std::uint64_t r = 0;
        Perm w;
        for (;; ++r) {
          w = subnet_vertex(N, a1, r);
          if (w.first() == 1 && w.second() != i) break;
        }
        std::vector<SubnetId> sig1 = join_labels(
            {1, w.second()},
            smallest_labels(N, s - 2, {1, a1, i, w.second()}));
        Cycle c1 = subnets_plus_vertex_over(N, w, sig1);
        Cycle inner = ham_cycle_minus_vertex(Scope::subnet(N, a1), w);
        std::vector<SubnetId> sig2 = labels_minus(N, join_labels({a1}, sig1));
        Edge ze = find_anchor_edge(inner, sig2, {});
        Cycle ring = subnets_plus_edge_over(N, ze, sig2);
        return {c1, merge_sharing_edge(inner, ring, ze.a, ze.b)};
      }
      case 6: {
        // Short cycle: cluster ride through a subnetwork-1 swap pair,
        // detoured through the pair's coupled image.  Long cycle: the
        // image's subnetwork minus that image, cluster-merged through an
        // i-leading pair.
        SubnetId a1 = smallest_labels(N, 1, {1, i})[0];
        std::uint64_t r = 0;
        Perm w;
        for (;; ++r) {
          w = subnet_vertex(N, 1, r);
          if (w.first() == a1) break;
        }
        Perm w1 = apply_swap12(w);
        std::vector<SubnetId> k1 =
            join_labels({1}, smallest_labels(N, s - 1, {1, i, a1}));
        Cycle host = cluster_cycle(N, k1, Edge(w, w1));
        CoupledEdge ow = option_into(Edge(w, w1), a1);
        Cycle c1 = splice_pair(ow.edge.a, ow.edge.b, host, Edge(w, w1));
        std::vector<SubnetId> k2 = labels_minus(N, join_labels({a1}, k1));
        std::uint64_t r2 = 0;
        Perm z, z1;
        for (;; ++r2) {
          z = subnet_vertex(N, a1, r2);
          if (z.first() != i) continue;
          z1 = apply_swap12(z);
          if (z == ow.edge.a || z == ow.edge.b || z1 == ow.edge.a ||
              z1 == ow.edge.b)
            continue;
          break;
        }
        CoupledEdge oz = option_into(Edge(z, z1), i);
        Cycle inner =
            subnet_minus_pair_through(N, a1, ow.edge.a, ow.edge.b,
                                      Edge(z, z1));
        return {c1, merge_cycles(inner, z, z1,
                                 cluster_cycle(N, k2, oz.edge), oz.edge.a,
                                 oz.edge.b)};
      }
    }
  }
  fail(ErrorCode::InternalError, "unhandled length band");
}

inline DccCover construct_at(int n, const Perm& u, const Perm& v,
                             std::uint64_t ell, CaseTrace& trace) {
  if (n == 4) {
    trace.push_back({4, 0, 0, 0});
    Perm sigma = inverse_of(u);
    DccCover low = base_lookup(relabel(sigma, u), relabel(sigma, v), ell);
    return {relabel_cycle(u, low.c1), relabel_cycle(u, low.c2)};
  }
  Perm sigma = compose(reverse_identity_perm(n), inverse_of(u));
  DccCover norm =
      construct_normalized(n, relabel(sigma, v), ell, trace);
  Perm back = compose(u, reverse_identity_perm(n));
  return {relabel_cycle(back, norm.c1), relabel_cycle(back, norm.c2)};
}

}  // namespace dcc_detail

// Two vertex-disjoint cycles covering all n! vertices, of lengths ell
// (holding u) and n! - ell (holding v); the trace records each recursion
// step.  Both cycles are rotated to start at their anchored vertex.
inline std::pair<DccCover, CaseTrace> dcc_construct(const DccRequest& req) {
  if (req.n < 4)
    fail(ErrorCode::DimensionTooSmall, "covers start at dimension 4");
  if (req.u.n != req.n || req.v.n != req.n)
    fail(ErrorCode::DimensionMismatch,
         "vertex dimensions disagree with the request");
  if (req.u == req.v)
    fail(ErrorCode::SameVertex, "the two vertices must differ");
  std::uint64_t half = factorial(req.n) / 2;
  if (req.ell < 3 || req.ell > half)
    fail(ErrorCode::BadLength, "length " + std::to_string(req.ell) +
                                   " outside [3, " + std::to_string(half) +
                                   "]");
  CaseTrace trace;
  DccCover cover =
      dcc_detail::construct_at(req.n, req.u, req.v, req.ell, trace);
  cover.c1 = rotate_to(cover.c1, req.u);
  cover.c2 = rotate_to(cover.c2, req.v);
  return {std::move(cover), std::move(trace)};
}

// Sweep driver: fixes u to the identity and runs dcc_construct plus the
// structural validator over every (v, ell) or a seeded sample.
struct SweepPolicy {
  bool full = true;
  int count = 0;
  std::uint32_t seed = 0;
  int jobs = 1;

  static SweepPolicy Full() { return {true, 0, 0}; }
  static SweepPolicy Sample(int count, std::uint32_t seed) {
    return {false, count, seed};
  }
};

struct SweepFailure {
  Perm v;
  std::uint64_t ell = 0;
  std::string message;
};

struct SweepReport {
  int n = 0;
  std::uint64_t attempted = 0;
  std::uint64_t passed = 0;
  std::vector<SweepFailure> failures;

  bool ok() const { return attempted > 0 && failures.empty(); }
};

inline SweepReport pancyclicity_sweep(int n, const SweepPolicy& policy) {
  if (n < 4)
    fail(ErrorCode::DimensionTooSmall, "sweeps start at dimension 4");
  std::uint64_t total = factorial(n), half = total / 2;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> instances;
  if (policy.full) {
    instances.reserve((total - 1) * (half - 2));
    for (std::uint64_t r = 1; r < total; ++r)
      for (std::uint64_t ell = 3; ell <= half; ++ell)
        instances.emplace_back(r, ell);
  } else {
    std::mt19937 rng(policy.seed);
    instances.reserve(policy.count);
    for (int t = 0; t < policy.count; ++t) {
      std::uint64_t r = 1 + rng() % (total - 1);
      std::uint64_t ell = 3 + rng() % (half - 2);
      instances.emplace_back(r, ell);
    }
  }
  Perm u = identity_perm(n);
  SweepReport rep;
  rep.n = n;
  rep.attempted = instances.size();

  // Instances are independent; chunks stay contiguous so the failure list
  // comes out in the same order regardless of the job count.
  auto run_range = [&](std::size_t lo, std::size_t hi, SweepReport& part) {
    for (std::size_t t = lo; t < hi; ++t) {
      auto [r, ell] = instances[t];
      Perm v = unrank_perm(r, n);
      try {
        auto [cover, trace] = dcc_construct({n, u, v, ell});
        (void)trace;
        ValidationReport check = validate_dcc(n, cover, u, v, ell);
        if (!check.ok) {
          std::string why = "invalid cover";
          if (!check.violations.empty())
            why = std::string(to_string(check.violations.front().first)) +
                  ": " + check.violations.front().second;
          part.failures.push_back({v, ell, why});
          continue;
        }
        ++part.passed;
      } catch (const std::exception& e) {
        part.failures.push_back({v, ell, e.what()});
      }
    }
  };

  std::size_t jobs = static_cast<std::size_t>(std::max(1, policy.jobs));
  jobs = std::min(jobs, std::max<std::size_t>(1, instances.size()));
  if (jobs == 1) {
    SweepReport part;
    run_range(0, instances.size(), part);
    rep.passed = part.passed;
    rep.failures = std::move(part.failures);
    return rep;
  }
  std::vector<SweepReport> parts(jobs);
  std::vector<std::thread> pool;
  std::size_t chunk = (instances.size() + jobs - 1) / jobs;
  for (std::size_t j = 0; j < jobs; ++j) {
    std::size_t lo = std::min(j * chunk, instances.size());
    std::size_t hi = std::min(lo + chunk, instances.size());
    pool.emplace_back(run_range, lo, hi, std::ref(parts[j]));
  }
  for (std::thread& th : pool) th.join();
  for (SweepReport& part : parts) {
    rep.passed += part.passed;
    for (SweepFailure& f : part.failures)
      rep.failures.push_back(std::move(f));
  }
  return rep;
}

}  // namespace splitstar
