#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "splitstar/cycle.hpp"
#include "splitstar/error.hpp"
#include "splitstar/permutation.hpp"
#include "splitstar/smallgraph.hpp"
#include "splitstar/topology.hpp"

namespace splitstar {

// A Hamiltonian cycle bundled with one prescribed cross edge it contains.
struct MarkedCycle {
  Edge marked;
  Cycle cycle;
};

namespace ham_detail {

inline Path whole_path(int n, const Perm& a, const Perm& b);
inline Cycle whole_minus_vertex(int n, const Perm& u);

inline Perm reduce_perm(const Perm& p) { return drop_last_relabel(p); }

inline Edge reduce_edge(const Edge& e) {
  return Edge(reduce_perm(e.a), reduce_perm(e.b));
}

inline Path lift_path(const Path& p, SubnetId i, int n) {
  Path out;
  out.vertices.reserve(p.vertices.size());
  for (const Perm& x : p.vertices)
    out.vertices.push_back(lift_into_subnet(x, i, n));
  return out;
}

inline Cycle lift_cycle(const Cycle& c, SubnetId i, int n) {
  Cycle out;
  out.vertices.reserve(c.vertices.size());
  for (const Perm& x : c.vertices)
    out.vertices.push_back(lift_into_subnet(x, i, n));
  return out;
}

// Subnetwork reached by the position-n generator from x.
inline SubnetId landing(const Perm& x, bool plus) {
  return plus ? x.second() : x.first();
}

inline bool edge_touches(const Edge& e, const Perm& x) {
  return e.a == x || e.b == x;
}

inline std::vector<SubnetId> labels_excluding(
    int n, std::initializer_list<SubnetId> excl) {
  std::vector<SubnetId> out;
  for (int t = 1; t <= n; ++t) {
    bool skip = false;
    for (SubnetId x : excl)
      if (x == t) skip = true;
    if (!skip) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Base dimensions.  Dimension 3 is searched directly on its 6 vertices.
// Dimension 4 keeps one table per query shape, normalized by the symbol
// relabeling that maps the query onto the identity; the tables are built
// once on first use.

inline const SmallGraph& base3_graph() {
  static const SmallGraph g = [] {
    std::vector<Perm> vs;
    for (std::uint64_t r = 0; r < 6; ++r) vs.push_back(unrank_perm(r, 3));
    return SmallGraph::from(vs);
  }();
  return g;
}

struct Dim4Tables {
  std::unordered_map<std::uint64_t, Path> paths;     // identity -> key vertex
  Cycle no_identity;                                 // avoids the identity
  std::unordered_map<std::uint64_t, Cycle> no_pair;  // avoids {identity, key}
};

inline const Dim4Tables& dim4() {
  static const Dim4Tables tables = [] {
    Dim4Tables d;
    std::vector<Perm> all;
    for (std::uint64_t r = 0; r < 24; ++r) all.push_back(unrank_perm(r, 4));
    SmallGraph g = SmallGraph::from(all);
    Perm id = identity_perm(4);
    for (const Perm& t : all) {
      if (t == id) continue;
      auto p = small_ham_path(g, id, t);
      if (!p) fail(ErrorCode::InternalError, "dimension-4 path table gap");
      d.paths.emplace(pack_key(t), std::move(*p));
    }
    {
      std::vector<Perm> vs;
      for (const Perm& x : all)
        if (x != id) vs.push_back(x);
      auto c = small_ham_cycle(SmallGraph::from(vs));
      if (!c) fail(ErrorCode::InternalError, "dimension-4 deleted-vertex gap");
      d.no_identity = std::move(*c);
    }
    for (auto& [q, k] : neighbors(id)) {
      std::vector<Perm> vs;
      for (const Perm& x : all)
        if (x != id && x != q) vs.push_back(x);
      auto c = small_ham_cycle(SmallGraph::from(vs));
      if (!c) fail(ErrorCode::InternalError, "dimension-4 deleted-pair gap");
      d.no_pair.emplace(pack_key(q), std::move(*c));
    }
    return d;
  }();
  return tables;
}

// ---------------------------------------------------------------------------
// Chains: ride through a sequence of subnetworks, one Hamiltonian path
// segment per subnetwork, stitched by position-n edges.  Exits are the
// lexicographically smallest eligible (vertex, minus-before-plus) choice.

struct ForcedLink {
  int pos;  // exit of order[pos] and entry of order[pos + 1] are prescribed
  Perm exit_v;
  Perm entry_v;
};

inline Path subnet_path(int n, SubnetId i, const Perm& a, const Perm& b) {
  return lift_path(whole_path(n - 1, reduce_perm(a), reduce_perm(b)), i, n);
}

inline std::optional<Path> build_chain(int n,
                                       const std::vector<SubnetId>& order,
                                       const Perm& entry, const Perm& last,
                                       const std::optional<ForcedLink>& forced) {
  int k = static_cast<int>(order.size());
  if (k == 0) return std::nullopt;
  if (subnetwork_of(entry) != order.front() ||
      subnetwork_of(last) != order.back())
    fail(ErrorCode::InternalError, "chain endpoints off their subnetworks");
  std::uint64_t per = factorial(n - 1);
  Path out;
  out.vertices.reserve(k * per);
  Perm cur = entry;
  for (int t = 0; t < k; ++t) {
    Perm exit_v{};
    Perm next_entry{};
    if (t == k - 1) {
      if (cur == last) return std::nullopt;
      exit_v = last;
    } else if (forced && forced->pos == t) {
      if (cur == forced->exit_v) return std::nullopt;
      exit_v = forced->exit_v;
      next_entry = forced->entry_v;
    } else {
      bool found = false;
      for (std::uint64_t r = 0; r < per && !found; ++r) {
        Perm x = lift_into_subnet(unrank_perm(r, n - 1), order[t], n);
        if (x == cur) continue;
        for (bool plus : {false, true}) {
          if (landing(x, plus) != order[t + 1]) continue;
          Perm y = apply_s(x, n, plus);
          if (t + 1 == k - 1 && y == last) continue;
          if (forced && forced->pos == t + 1 && y == forced->exit_v) continue;
          exit_v = x;
          next_entry = y;
          found = true;
          break;
        }
      }
      if (!found) return std::nullopt;
    }
    Path seg = subnet_path(n, order[t], cur, exit_v);
    out.vertices.insert(out.vertices.end(), seg.vertices.begin(),
                        seg.vertices.end());
    cur = next_entry;
  }
  return out;
}

inline Path whole_path(int n, const Perm& a, const Perm& b) {
  if (a == b) fail(ErrorCode::SameEndpoints, "path endpoints coincide");
  if (n == 3) {
    auto p = small_ham_path(base3_graph(), a, b);
    if (!p) fail(ErrorCode::InternalError, "dimension-3 path search failed");
    return *p;
  }
  if (n == 4) {
    const Dim4Tables& d = dim4();
    Perm t = compose(inverse_of(a), b);
    const Path& base = d.paths.at(pack_key(t));
    Path out;
    out.vertices.reserve(base.vertices.size());
    for (const Perm& x : base.vertices) out.vertices.push_back(compose(a, x));
    return out;
  }
  SubnetId sa = subnetwork_of(a), sb = subnetwork_of(b);
  if (sa != sb) {
    std::vector<SubnetId> order{sa};
    for (SubnetId t : labels_excluding(n, {sa, sb})) order.push_back(t);
    order.push_back(sb);
    auto p = build_chain(n, order, a, b, std::nullopt);
    if (!p) fail(ErrorCode::InternalError, "cross-subnetwork chain failed");
    return *p;
  }
  // Same subnetwork: route inside it, then splice a tour of the other
  // subnetworks into one edge of that route.
  Path p0 = subnet_path(n, sa, a, b);
  for (std::size_t i = 0; i + 1 < p0.vertices.size(); ++i) {
    const Perm& p = p0.vertices[i];
    const Perm& q = p0.vertices[i + 1];
    for (bool sp : {false, true})
      for (bool sq : {false, true}) {
        SubnetId lp = landing(p, sp), lq = landing(q, sq);
        if (lp == lq) continue;
        std::vector<SubnetId> ring{lp};
        for (SubnetId t : labels_excluding(n, {sa, lp, lq}))
          ring.push_back(t);
        ring.push_back(lq);
        auto seg = build_chain(n, ring, apply_s(p, n, sp), apply_s(q, n, sq),
                               std::nullopt);
        if (!seg) continue;
        Path out;
        out.vertices.assign(p0.vertices.begin(),
                            p0.vertices.begin() + i + 1);
        out.vertices.insert(out.vertices.end(), seg->vertices.begin(),
                            seg->vertices.end());
        out.vertices.insert(out.vertices.end(),
                            p0.vertices.begin() + i + 1, p0.vertices.end());
        return out;
      }
  }
  fail(ErrorCode::InternalError, "no splice point for same-subnetwork path");
}

inline Cycle whole_cycle_through_edge(int n, const Perm& a, const Perm& b) {
  return close_path(whole_path(n, b, a));
}

inline Cycle subnet_cycle_through_edge(int n, SubnetId i, const Perm& a,
                                       const Perm& b) {
  return lift_cycle(whole_cycle_through_edge(n - 1, reduce_perm(a),
                                             reduce_perm(b)),
                    i, n);
}

// Replace one breakable edge (p, q) of c by p -> tour of the subnetworks in
// R -> q.  Edges listed in keep are never broken.
inline std::optional<Cycle> splice_subnet_tour(int n, const Cycle& c,
                                               const std::vector<SubnetId>& R,
                                               const std::vector<Edge>& keep) {
  if (R.empty()) return c;
  auto kept = [&](const Perm& p, const Perm& q) {
    for (const Edge& e : keep)
      if ((e.a == p && e.b == q) || (e.a == q && e.b == p)) return true;
    return false;
  };
  auto in_r = [&](SubnetId t) {
    return std::find(R.begin(), R.end(), t) != R.end();
  };
  int m = c.length();
  for (int i = 0; i < m; ++i)
    for (int dir = 0; dir < 2; ++dir) {
      const Perm& p = c.vertices[dir ? (i + 1) % m : i];
      const Perm& q = c.vertices[dir ? i : (i + 1) % m];
      if (kept(p, q)) continue;
      for (bool sp : {false, true})
        for (bool sq : {false, true}) {
          SubnetId lp = landing(p, sp), lq = landing(q, sq);
          if (!in_r(lp) || !in_r(lq)) continue;
          Perm pp = apply_s(p, n, sp), qq = apply_s(q, n, sq);
          std::optional<Path> seg;
          if (R.size() == 1) {
            if (lp != lq || pp == qq) continue;
            seg = build_chain(n, {lp}, pp, qq, std::nullopt);
          } else {
            if (lp == lq) continue;
            std::vector<SubnetId> ring{lp};
            for (SubnetId t : R)
              if (t != lp && t != lq) ring.push_back(t);
            ring.push_back(lq);
            seg = build_chain(n, ring, pp, qq, std::nullopt);
          }
          if (!seg) continue;
          Cycle out;
          out.vertices = open_at_edge(c, q, p).vertices;  // q .. p
          out.vertices.insert(out.vertices.end(), seg->vertices.begin(),
                              seg->vertices.end());
          return out;  // closing edge (seg back, q)
        }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Whole-graph cycles avoiding one vertex or one adjacent pair.

inline Cycle whole_minus_vertex(int n, const Perm& u) {
  if (n == 3) {
    std::vector<Perm> vs;
    for (std::uint64_t r = 0; r < 6; ++r) {
      Perm x = unrank_perm(r, 3);
      if (x != u) vs.push_back(x);
    }
    auto c = small_ham_cycle(SmallGraph::from(vs));
    if (!c) fail(ErrorCode::InternalError, "dimension-3 deleted-vertex gap");
    return *c;
  }
  if (n == 4) {
    const Dim4Tables& d = dim4();
    Cycle out;
    out.vertices.reserve(23);
    for (const Perm& x : d.no_identity.vertices)
      out.vertices.push_back(compose(u, x));
    return out;
  }
  SubnetId j = subnetwork_of(u);
  Cycle cj = lift_cycle(whole_minus_vertex(n - 1, reduce_perm(u)), j, n);
  auto out = splice_subnet_tour(n, cj, labels_excluding(n, {j}), {});
  if (!out)
    fail(ErrorCode::InternalError, "no splice for deleted-vertex cycle");
  return *out;
}

// Both ends of the removed cross edge lose their subnetwork's ring slot:
// open the two deleted-vertex cycles and stitch them into one tour.
inline Cycle cross_pair_ring(int n, const Perm& u, const Perm& v) {
  SubnetId t1 = subnetwork_of(u), t2 = subnetwork_of(v);
  Cycle cu = lift_cycle(whole_minus_vertex(n - 1, reduce_perm(u)), t1, n);
  Cycle cv = lift_cycle(whole_minus_vertex(n - 1, reduce_perm(v)), t2, n);
  int m = cu.length();
  for (int i = 0; i < m; ++i)
    for (int dir = 0; dir < 2; ++dir) {
      const Perm& p = cu.vertices[dir ? (i + 1) % m : i];
      const Perm& q = cu.vertices[dir ? i : (i + 1) % m];
      for (bool sq : {false, true}) {
        if (landing(q, sq) != t2) continue;
        Perm r = apply_s(q, n, sq);
        if (r == v) continue;
        for (const Perm& s : {successor(cv, r), predecessor(cv, r)}) {
          for (bool ss : {false, true}) {
            SubnetId t3 = landing(s, ss);
            if (t3 == t1) continue;
            for (bool sp : {false, true}) {
              SubnetId tn = landing(p, sp);
              if (tn == t2 || tn == t3) continue;
              std::vector<SubnetId> ring{t3};
              for (SubnetId t : labels_excluding(n, {t1, t2, t3, tn}))
                ring.push_back(t);
              ring.push_back(tn);
              auto seg = build_chain(n, ring, apply_s(s, n, ss),
                                     apply_s(p, n, sp), std::nullopt);
              if (!seg) continue;
              Cycle out;
              out.vertices = open_at_edge(cu, p, q).vertices;  // p .. q
              Path mid = open_at_edge(cv, r, s);               // r .. s
              out.vertices.insert(out.vertices.end(), mid.vertices.begin(),
                                  mid.vertices.end());
              out.vertices.insert(out.vertices.end(), seg->vertices.begin(),
                                  seg->vertices.end());
              return out;  // closing edge (seg back, p)
            }
          }
        }
      }
    }
  fail(ErrorCode::InternalError, "no ring assembly for removed cross pair");
}

inline Cycle whole_minus_pair(int n, const Perm& u, const Perm& v) {
  EdgeKind k = edge_kind(u, v);
  if (n == 3) {
    if (k.type != GenType::Swap12)
      fail(ErrorCode::DimensionTooSmall,
           "no cycle avoids an i-edge pair in dimension 3");
    std::vector<Perm> vs;
    for (std::uint64_t r = 0; r < 6; ++r) {
      Perm x = unrank_perm(r, 3);
      if (x != u && x != v) vs.push_back(x);
    }
    auto c = small_ham_cycle(SmallGraph::from(vs));
    if (!c) fail(ErrorCode::InternalError, "dimension-3 deleted-pair gap");
    return *c;
  }
  if (n == 4) {
    const Dim4Tables& d = dim4();
    Perm pi = compose(inverse_of(u), v);
    const Cycle& base = d.no_pair.at(pack_key(pi));
    Cycle out;
    out.vertices.reserve(22);
    for (const Perm& x : base.vertices) out.vertices.push_back(compose(u, x));
    return out;
  }
  if (k.type != GenType::Swap12 && k.index == u.n)
    return cross_pair_ring(n, u, v);
  SubnetId j = subnetwork_of(u);
  Cycle cj = lift_cycle(whole_minus_pair(n - 1, reduce_perm(u),
                                         reduce_perm(v)),
                        j, n);
  auto out = splice_subnet_tour(n, cj, labels_excluding(n, {j}), {});
  if (!out) fail(ErrorCode::InternalError, "no splice for deleted-pair cycle");
  return *out;
}

}  // namespace ham_detail

// ---------------------------------------------------------------------------
// Public constructions.  Scopes must be the whole graph or one subnetwork;
// a subnetwork scope is solved one dimension down through the order-
// preserving relabeling and lifted back.

namespace ham_detail {

inline void check_plain_scope(const Scope& scope, int min_eff_dim) {
  if (!scope.is_whole() && !scope.is_single_subnet())
    fail(ErrorCode::OutOfScope,
         "scope must be the whole graph or a single subnetwork");
  int eff = scope.is_whole() ? scope.n() : scope.n() - 1;
  if (eff < min_eff_dim)
    fail(ErrorCode::DimensionTooSmall,
         "scope dimension " + std::to_string(eff) + " below " +
             std::to_string(min_eff_dim));
}

}  // namespace ham_detail

// Hamiltonian path of the scope from a to b.
inline Path ham_path(const Scope& scope, const Perm& a, const Perm& b) {
  ham_detail::check_plain_scope(scope, 3);
  if (!scope.contains(a) || !scope.contains(b))
    fail(ErrorCode::OutOfScope, "path endpoint outside the scope");
  if (a == b) fail(ErrorCode::SameEndpoints, "path endpoints coincide");
  if (scope.is_whole()) return ham_detail::whole_path(scope.n(), a, b);
  SubnetId i = scope.cluster.labels.front();
  return ham_detail::lift_path(
      ham_detail::whole_path(scope.n() - 1, drop_last_relabel(a),
                             drop_last_relabel(b)),
      i, scope.n());
}

// Hamiltonian cycle of the scope containing the edge e.
inline Cycle ham_cycle_through_edge(const Scope& scope, const Edge& e) {
  ham_detail::check_plain_scope(scope, 3);
  if (!scope.contains(e.a) || !scope.contains(e.b))
    fail(ErrorCode::OutOfScope, "edge endpoint outside the scope");
  return close_path(ham_path(scope, e.b, e.a));
}

// Cycle through every vertex of the scope except u.
inline Cycle ham_cycle_minus_vertex(const Scope& scope, const Perm& u) {
  ham_detail::check_plain_scope(scope, 3);
  if (!scope.contains(u))
    fail(ErrorCode::OutOfScope, "deleted vertex outside the scope");
  if (scope.is_whole()) return ham_detail::whole_minus_vertex(scope.n(), u);
  SubnetId i = scope.cluster.labels.front();
  return ham_detail::lift_cycle(
      ham_detail::whole_minus_vertex(scope.n() - 1, drop_last_relabel(u)), i,
      scope.n());
}

// Cycle through every vertex of the scope except the adjacent pair {u, v}.
inline Cycle ham_cycle_minus_edge_pair(const Scope& scope, const Perm& u,
                                       const Perm& v) {
  ham_detail::check_plain_scope(scope, 3);
  if (!scope.contains(u) || !scope.contains(v))
    fail(ErrorCode::OutOfScope, "deleted pair outside the scope");
  (void)edge_kind(u, v);  // NotAdjacent when {u, v} is not an edge
  if (scope.is_whole()) return ham_detail::whole_minus_pair(scope.n(), u, v);
  SubnetId i = scope.cluster.labels.front();
  return ham_detail::lift_cycle(
      ham_detail::whole_minus_pair(scope.n() - 1, drop_last_relabel(u),
                                   drop_last_relabel(v)),
      i, scope.n());
}

// ---------------------------------------------------------------------------
// Hamiltonian cycles of the whole graph through e and one of two prescribed
// cross edges led by the symbol q.

namespace ham_detail {

// Word (first, second, ascending interior, last).
inline Perm marked_word(int n, int first, int second, int last) {
  Perm w;
  w.n = static_cast<std::uint8_t>(n);
  w.s[0] = static_cast<std::uint8_t>(first);
  w.s[1] = static_cast<std::uint8_t>(second);
  w.s[n - 1] = static_cast<std::uint8_t>(last);
  int j = 2;
  for (int t = 1; t <= n; ++t) {
    if (t == first || t == second || t == last) continue;
    w.s[j++] = static_cast<std::uint8_t>(t);
  }
  return w;
}

// Assemble: subnetwork part sp (u0 .. v0), then a ride over every other
// subnetwork from v0's landing to fin, carrying the connector pair so the
// prescribed cross edge appears between its two subnetworks A and B.
inline std::optional<Cycle> two_edges_assemble(int n, SubnetId i, int A, int B,
                                               const Perm& exitA,
                                               const Perm& entryB,
                                               const Path& sp, bool sv,
                                               const Perm& fin) {
  const Perm& v0 = sp.vertices.back();
  SubnetId lv = landing(v0, sv);
  SubnetId lu = subnetwork_of(fin);
  if (lv == lu) return std::nullopt;
  Perm entry = apply_s(v0, n, sv);
  for (int orient = 0; orient < 2; ++orient) {
    int ca = orient ? B : A;  // connector traversed ca -> cb
    int cb = orient ? A : B;
    const Perm& cexit = orient ? entryB : exitA;
    const Perm& centry = orient ? exitA : entryB;
    if (lu == ca || lv == cb) continue;
    if (lv == ca && lu == cb) continue;
    std::vector<SubnetId> ring;
    if (lv == ca) {
      ring.push_back(ca);
      ring.push_back(cb);
      for (SubnetId t : labels_excluding(n, {i, ca, cb, lu}))
        ring.push_back(t);
      ring.push_back(lu);
    } else if (lu == cb) {
      ring.push_back(lv);
      for (SubnetId t : labels_excluding(n, {i, lv, ca, cb}))
        ring.push_back(t);
      ring.push_back(ca);
      ring.push_back(cb);
    } else {
      ring.push_back(lv);
      for (SubnetId t : labels_excluding(n, {i, lv, ca, cb, lu}))
        ring.push_back(t);
      ring.push_back(ca);
      ring.push_back(cb);
      ring.push_back(lu);
    }
    int cpos = 0;
    while (ring[cpos] != ca) ++cpos;
    auto seg =
        build_chain(n, ring, entry, fin, ForcedLink{cpos, cexit, centry});
    if (!seg) continue;
    Cycle out;
    out.vertices = sp.vertices;
    out.vertices.insert(out.vertices.end(), seg->vertices.begin(),
                        seg->vertices.end());
    return out;  // closing edge (fin, u0)
  }
  return std::nullopt;
}

inline Cycle two_edges_intra(int n, const Edge& e, int A, int B,
                             const Perm& exitA, const Perm& entryB) {
  SubnetId i = subnetwork_of(e.a);
  Cycle ci = subnet_cycle_through_edge(n, i, e.a, e.b);
  int m = ci.length();
  for (int idx = 0; idx < m; ++idx)
    for (int dir = 0; dir < 2; ++dir) {
      const Perm& u0 = ci.vertices[dir ? (idx + 1) % m : idx];
      const Perm& v0 = ci.vertices[dir ? idx : (idx + 1) % m];
      if ((u0 == e.a && v0 == e.b) || (u0 == e.b && v0 == e.a)) continue;
      Path sp = open_at_edge(ci, u0, v0);  // u0 .. v0, e survives
      for (bool su : {false, true})
        for (bool sv : {false, true}) {
          auto c = two_edges_assemble(n, i, A, B, exitA, entryB, sp, sv,
                                      apply_s(u0, n, su));
          if (c) return *c;
        }
    }
  fail(ErrorCode::InternalError, "no ride for the prescribed-edge cycle");
}

inline Cycle two_edges_cross(int n, const Edge& e, int A, int B,
                             const Perm& exitA, const Perm& entryB) {
  Perm u0 = e.a, fin = e.b;
  if (apply_s(e.b, n, false) == e.a) {
    u0 = e.b;
    fin = e.a;
  }
  SubnetId i = subnetwork_of(u0);
  SubnetId lu = subnetwork_of(fin);
  std::uint64_t per = factorial(n - 1);
  for (std::uint64_t r = 0; r < per; ++r) {
    Perm v0 = lift_into_subnet(unrank_perm(r, n - 1), i, n);
    if (v0 == u0) continue;
    for (bool sv : {false, true}) {
      SubnetId lv = landing(v0, sv);
      if (lv == lu) continue;
      bool fwd = !(lu == A || lv == B || (lv == A && lu == B));
      bool rev = !(lu == B || lv == A || (lv == B && lu == A));
      if (!fwd && !rev) continue;
      Path sp = subnet_path(n, i, u0, v0);
      auto c = two_edges_assemble(n, i, A, B, exitA, entryB, sp, sv, fin);
      if (c) return *c;  // closing edge (fin, u0) = e
    }
  }
  fail(ErrorCode::InternalError, "no ride for the prescribed cross edge");
}

}  // namespace ham_detail

// Two candidate cross edges led by the symbol q, each packaged with a
// Hamiltonian cycle of the whole graph containing both it and e.  The k-th
// candidate (w, z) has w's first symbol q and z = w applied to the
// position-n plus generator.
inline std::array<MarkedCycle, 2> ham_cycle_two_edges(int n, const Edge& e,
                                                      int q) {
  if (e.a.n != n)
    fail(ErrorCode::DimensionMismatch,
         "edge dimension does not match the request");
  if (q < 1 || q > n)
    fail(ErrorCode::BadSymbol,
         "lead symbol " + std::to_string(q) + " outside [1, " +
             std::to_string(n) + "]");
  if (n < 4)
    fail(ErrorCode::DimensionTooSmall,
         "prescribed-edge cycles need dimension >= 4");
  EdgeKind k = e.kind();
  bool cross = k.type != GenType::Swap12 && k.index == n;
  SubnetId i;
  int avoid = 0;
  if (cross) {
    Perm u0 = apply_s(e.a, n, false) == e.b ? e.a : e.b;
    i = subnetwork_of(u0);
    // The ride closes through e into the subnetwork of u0's first symbol;
    // when q = i the canonical words could land on e's far endpoint there,
    // so keep the marked pair out of that subnetwork.
    if (q == i) avoid = u0.first();
  } else {
    i = subnetwork_of(e.a);
  }
  int A = 0, B = 0;
  for (int t = 1; t <= n; ++t) {
    if (t == i || t == q || t == avoid) continue;
    if (!A)
      A = t;
    else {
      B = t;
      break;
    }
  }
  Perm w1 = ham_detail::marked_word(n, q, B, A);  // in subnetwork A
  Perm z1 = apply_s(w1, n, true);                 // in subnetwork B
  Perm w2 = ham_detail::marked_word(n, q, A, B);  // in subnetwork B
  Perm z2 = apply_s(w2, n, true);                 // in subnetwork A
  std::array<MarkedCycle, 2> out{MarkedCycle{Edge(w1, z1), Cycle{}},
                                 MarkedCycle{Edge(w2, z2), Cycle{}}};
  for (int opt = 0; opt < 2; ++opt) {
    const Perm& exitA = opt == 0 ? w1 : z2;
    const Perm& entryB = opt == 0 ? z1 : w2;
    out[opt].cycle =
        cross ? ham_detail::two_edges_cross(n, e, A, B, exitA, entryB)
              : ham_detail::two_edges_intra(n, e, A, B, exitA, entryB);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hamiltonian cycle of a cluster through an edge of one of its
// subnetworks.

namespace ham_detail {

inline std::array<MarkedCycle, 2> subnet_two_edges(int n, SubnetId i,
                                                   const Edge& e,
                                                   SubnetId next) {
  auto red = ham_cycle_two_edges(n - 1, reduce_edge(e),
                                 reduce_symbol(next, i));
  std::array<MarkedCycle, 2> out{
      MarkedCycle{Edge(lift_into_subnet(red[0].marked.a, i, n),
                       lift_into_subnet(red[0].marked.b, i, n)),
                  lift_cycle(red[0].cycle, i, n)},
      MarkedCycle{Edge(lift_into_subnet(red[1].marked.a, i, n),
                       lift_into_subnet(red[1].marked.b, i, n)),
                  lift_cycle(red[1].cycle, i, n)}};
  return out;
}

}  // namespace ham_detail

inline Cycle cluster_ham_cycle_through_edge(const Cluster& cluster,
                                            const Edge& e) {
  check_cluster(cluster);
  int n = cluster.n;
  if (e.a.n != n)
    fail(ErrorCode::DimensionMismatch,
         "edge dimension does not match the cluster");
  if (subnetwork_of(e.a) != subnetwork_of(e.b))
    fail(ErrorCode::NotIntraSubnetwork,
         "edge " + format_edge(e) + " crosses subnetworks");
  SubnetId ie = subnetwork_of(e.a);
  if (!cluster_contains(cluster, ie))
    fail(ErrorCode::OutOfScope, "edge's subnetwork outside the cluster");
  int k = static_cast<int>(cluster.labels.size());
  if (k == 1)
    return ham_detail::subnet_cycle_through_edge(n, ie, e.a, e.b);
  if (n == 4) {
    // Small enough to search directly.
    SmallGraph g = SmallGraph::from(vertices_of(cluster));
    auto c = small_ham_cycle_through_edge(g, e.a, e.b);
    if (!c)
      fail(ErrorCode::InternalError, "no dimension-4 cluster cycle found");
    return *c;
  }
  std::vector<SubnetId> order{ie};
  for (SubnetId l : cluster.labels)
    if (l != ie) order.push_back(l);
  auto opts = ham_detail::subnet_two_edges(n, ie, e, order[1]);
  const MarkedCycle* cur = &opts[0];
  if (same_undirected(cur->marked, e)) cur = &opts[1];
  Cycle acc = cur->cycle;
  Edge marked = cur->marked;
  for (int t = 1; t < k; ++t) {
    Edge ce = coupled_pair_edge(marked).front().edge;  // in order[t]
    if (t + 1 < k) {
      auto nxt = ham_detail::subnet_two_edges(n, order[t], ce, order[t + 1]);
      const MarkedCycle* sel = &nxt[0];
      if (same_undirected(sel->marked, ce)) sel = &nxt[1];
      acc = merge_cycles(acc, marked.a, marked.b, sel->cycle, ce.a, ce.b);
      marked = sel->marked;
    } else {
      Cycle last = ham_detail::subnet_cycle_through_edge(n, order[t], ce.a,
                                                         ce.b);
      acc = merge_cycles(acc, marked.a, marked.b, last, ce.a, ce.b);
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Hamiltonian cycle avoiding an adjacent pair {u, v} while containing a
// prescribed edge e.  v must be u's 12-neighbor or its 3+ neighbor.  The
// instance is normalized so u becomes the descending word (in subnetwork 1)
// and solved by recursion over e's position.

namespace ham_detail {

inline Cycle avoid_pair_through(int n, int form, const Edge& e);

// Base families: cycles on the dimension-4 graph minus the normalized pair,
// together covering every remaining edge.
struct AvoidPairBase {
  std::vector<Cycle> family;
};

inline const std::array<AvoidPairBase, 2>& avoid_pair_bases() {
  static const std::array<AvoidPairBase, 2> bases = [] {
    std::array<AvoidPairBase, 2> out;
    Perm u = reverse_identity_perm(4);
    std::array<Perm, 2> forms{apply_swap12(u), apply_s(u, 3, true)};
    for (int f = 0; f < 2; ++f) {
      std::vector<Perm> keep;
      for (std::uint64_t r = 0; r < 24; ++r) {
        Perm x = unrank_perm(r, 4);
        if (x != u && x != forms[f]) keep.push_back(x);
      }
      SmallGraph g = SmallGraph::from(keep);
      std::vector<Cycle>& fam = out[f].family;
      auto covered = [&fam](const Perm& a, const Perm& b) {
        for (const Cycle& c : fam)
          if (has_cycle_edge(c, a, b)) return true;
        return false;
      };
      for (int ia = 0; ia < g.size(); ++ia)
        for (int ib : g.nbrs[ia]) {
          if (ib < ia) continue;
          if (covered(g.verts[ia], g.verts[ib])) continue;
          auto c = small_ham_cycle_through_edge(g, g.verts[ia], g.verts[ib]);
          if (!c)
            fail(ErrorCode::InternalError, "uncoverable edge in base family");
          fam.push_back(std::move(*c));
        }
    }
    return out;
  }();
  return bases;
}

inline Cycle avoid_pair_base_cycle(int form, const Edge& e) {
  for (const Cycle& c : avoid_pair_bases()[form].family)
    if (has_cycle_edge(c, e.a, e.b)) return c;
  fail(ErrorCode::InternalError, "edge missing from base family");
}

inline bool near_removed(const Perm& U, const Perm& V, SubnetId t) {
  return t == U.first() || t == U.second() || t == V.first() ||
         t == V.second();
}

// e inside subnetwork 1: recurse there, then expand through a second cycle
// edge's coupled pair into a tour of the other subnetworks.
inline Cycle ap_intra_anchor(int n, int form, const Edge& e) {
  Cycle c1 = lift_cycle(avoid_pair_through(n - 1, form, reduce_edge(e)), 1, n);
  int m = c1.length();
  for (int idx = 0; idx < m; ++idx) {
    Edge pick(c1.vertices[idx], c1.vertices[(idx + 1) % m]);
    if (same_undirected(pick, e)) continue;
    CoupledEdge cp = coupled_pair_edge(pick).front();
    Cluster cl{n, {}};
    cl.labels.push_back(cp.subnet);
    for (SubnetId t : labels_excluding(n, {1, cp.subnet}))
      cl.labels.push_back(t);
    Cycle c2 = cluster_ham_cycle_through_edge(cl, cp.edge);
    return merge_cycles(c1, pick.a, pick.b, c2, cp.edge.a, cp.edge.b);
  }
  fail(ErrorCode::InternalError, "no expansion edge in anchor cycle");
}

// e crosses from subnetwork 1: pick an inside companion edge whose coupled
// pair-edge starts exactly at e's outside endpoint.
inline Cycle ap_cross_anchor(int n, int form, const Edge& e, const Perm& U,
                             const Perm& V) {
  Perm w = subnetwork_of(e.a) == 1 ? e.a : e.b;
  Perm z = subnetwork_of(e.a) == 1 ? e.b : e.a;
  bool sigma_plus = apply_s(w, n, true) == z;
  std::vector<Perm> cands{apply_swap12(w)};
  for (int j = 3; j <= n - 1; ++j)
    cands.push_back(apply_s(w, j, !sigma_plus));
  for (const Perm& w1 : cands) {
    if (w1 == U || w1 == V) continue;
    for (const CoupledEdge& opt : coupled_pair_edge(Edge(w, w1))) {
      if (opt.edge.a != z) continue;
      Cycle c1 = lift_cycle(
          avoid_pair_through(n - 1, form,
                             Edge(reduce_perm(w), reduce_perm(w1))),
          1, n);
      Cluster cl{n, {}};
      cl.labels.push_back(opt.subnet);
      for (SubnetId t : labels_excluding(n, {1, opt.subnet}))
        cl.labels.push_back(t);
      Cycle c2 = cluster_ham_cycle_through_edge(cl, opt.edge);
      return merge_cycles(c1, w, w1, c2, opt.edge.a, opt.edge.b);
    }
  }
  fail(ErrorCode::InternalError, "no companion edge beside the cross edge");
}

// e inside subnetwork i != 1, solved over the cluster C (which contains 1
// and i): ride i through e, hop to a junction subnetwork, hop into
// subnetwork 1 away from the removed pair, detour over any leftovers.
inline Cycle ap_worker(int n, int form, const std::vector<SubnetId>& C,
                       const Edge& e, const Perm& U, const Perm& V) {
  SubnetId i = subnetwork_of(e.a);
  if (C.size() == 2) {
    auto opts = subnet_two_edges(n, i, e, 1);
    for (int k = 0; k < 2; ++k) {
      const MarkedCycle& mc = opts[k];
      if (same_undirected(mc.marked, e)) continue;
      Edge ce = coupled_pair_edge(mc.marked).front().edge;  // in subnet 1
      if (edge_touches(ce, U) || edge_touches(ce, V)) continue;
      Cycle c1 = lift_cycle(avoid_pair_through(n - 1, form, reduce_edge(ce)),
                            1, n);
      return merge_cycles(mc.cycle, mc.marked.a, mc.marked.b, c1, ce.a, ce.b);
    }
    fail(ErrorCode::InternalError, "two-subnetwork ride blocked");
  }
  std::vector<SubnetId> rest;
  for (SubnetId t : C)
    if (t != 1 && t != i) rest.push_back(t);
  std::sort(rest.begin(), rest.end());
  SubnetId j = rest.front();
  for (SubnetId t : rest)
    if (!near_removed(U, V, t)) {
      j = t;
      break;
    }
  std::vector<SubnetId> extra;
  for (SubnetId t : rest)
    if (t != j) extra.push_back(t);
  auto opts1 = subnet_two_edges(n, i, e, j);
  for (int k1 = 0; k1 < 2; ++k1) {
    const MarkedCycle& mc1 = opts1[k1];
    if (same_undirected(mc1.marked, e)) continue;
    Cycle c1 = mc1.cycle;
    if (!extra.empty()) {
      auto spliced = splice_subnet_tour(n, c1, extra, {e, mc1.marked});
      if (!spliced) continue;
      c1 = *spliced;
    }
    Edge ce1 = coupled_pair_edge(mc1.marked).front().edge;  // in j
    auto opts2 = subnet_two_edges(n, j, ce1, 1);
    for (int k2 = 0; k2 < 2; ++k2) {
      const MarkedCycle& mc2 = opts2[k2];
      if (same_undirected(mc2.marked, ce1)) continue;
      Edge ce2 = coupled_pair_edge(mc2.marked).front().edge;  // in 1
      if (edge_touches(ce2, U) || edge_touches(ce2, V)) continue;
      Cycle cr = lift_cycle(avoid_pair_through(n - 1, form, reduce_edge(ce2)),
                            1, n);
      Cycle acc = merge_cycles(c1, mc1.marked.a, mc1.marked.b, mc2.cycle,
                               ce1.a, ce1.b);
      acc = merge_cycles(acc, mc2.marked.a, mc2.marked.b, cr, ce2.a, ce2.b);
      return acc;
    }
  }
  fail(ErrorCode::InternalError, "junction ride blocked");
}

// e crosses two non-anchor subnetworks: bridge over the 4-cycle formed with
// the 12-neighbors of both endpoints.
inline Cycle ap_outside_cross(int n, int form, const Edge& e, const Perm& U,
                              const Perm& V) {
  const Perm& w = e.a;
  const Perm& z = e.b;
  SubnetId i = subnetwork_of(w), jz = subnetwork_of(z);
  Perm w12 = apply_swap12(w), z12 = apply_swap12(z);
  SubnetId t = 0;
  for (int cand = 1; cand <= n; ++cand) {
    if (cand == 1 || cand == i || cand == jz) continue;
    if (near_removed(U, V, cand)) continue;
    t = cand;
    break;
  }
  std::vector<SubnetId> cm{1, i};
  if (t) cm.push_back(t);
  Cycle cmain = ap_worker(n, form, cm, Edge(w, w12), U, V);
  Cluster restc{n, {jz}};
  for (SubnetId l : labels_excluding(n, {1, i, jz})) {
    if (t && l == t) continue;
    restc.labels.push_back(l);
  }
  Cycle crest = cluster_ham_cycle_through_edge(restc, Edge(z, z12));
  return merge_cycles(cmain, w, w12, crest, z, z12);
}

inline Cycle avoid_pair_through(int n, int form, const Edge& e) {
  if (n == 4) return avoid_pair_base_cycle(form, e);
  Perm U = reverse_identity_perm(n);
  Perm V = form == 0 ? apply_swap12(U) : apply_s(U, 3, true);
  SubnetId sa = subnetwork_of(e.a), sb = subnetwork_of(e.b);
  if (sa == 1 && sb == 1) return ap_intra_anchor(n, form, e);
  if (sa == 1 || sb == 1) return ap_cross_anchor(n, form, e, U, V);
  if (sa == sb) {
    std::vector<SubnetId> all;
    for (int l = 1; l <= n; ++l) all.push_back(l);
    return ap_worker(n, form, all, e, U, V);
  }
  return ap_outside_cross(n, form, e, U, V);
}

}  // namespace ham_detail

// Hamiltonian cycle of S_n^2 minus {u, v} containing the edge e.  v must be
// u's 12-neighbor or its 3+ neighbor; e must not touch the removed pair.
inline Cycle ham_cycle_minus_pair_through_edge(int n, const Perm& u,
                                               const Perm& v, const Edge& e) {
  if (u.n != n || v.n != n || e.a.n != n)
    fail(ErrorCode::DimensionMismatch,
         "arguments disagree with the requested dimension");
  if (n < 4)
    fail(ErrorCode::DimensionTooSmall,
         "pair-avoiding prescribed-edge cycles need dimension >= 4");
  int form;
  if (v == apply_swap12(u))
    form = 0;
  else if (v == apply_s(u, 3, true))
    form = 1;
  else
    fail(ErrorCode::BadPair,
         "v must be the 12-neighbor or the 3+ neighbor of u");
  if (ham_detail::edge_touches(e, u) || ham_detail::edge_touches(e, v))
    fail(ErrorCode::EdgeTouchesRemoved,
         "prescribed edge touches the removed pair");
  Perm sigma = compose(reverse_identity_perm(n), inverse_of(u));
  Cycle norm = ham_detail::avoid_pair_through(n, form, relabel_edge(sigma, e));
  Perm back = inverse_of(sigma);
  Cycle out;
  out.vertices.reserve(norm.vertices.size());
  for (const Perm& x : norm.vertices) out.vertices.push_back(relabel(back, x));
  return out;
}

}  // namespace splitstar
