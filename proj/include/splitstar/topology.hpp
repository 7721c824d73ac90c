#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "splitstar/error.hpp"
#include "splitstar/permutation.hpp"

namespace splitstar {

// The split-star network S_n^2 on all n! permutations of [n].  Vertex
// u = x_1 x_2 ... x_n is adjacent to:
//   - u with positions 1,2 swapped                (a 12-edge),
//   - us_i^- : positions (1,2,i) get (x_2,x_i,x_1) (an i-edge, 3 <= i <= n),
//   - us_i^+ : positions (1,2,i) get (x_i,x_1,x_2) (an i-edge).
// Degree is 2n-3.  The graph stays implicit; neighbors are computed on
// demand.

enum class GenType : std::uint8_t { Swap12 = 0, SMinus = 1, SPlus = 2 };

struct EdgeKind {
  GenType type = GenType::Swap12;
  std::uint8_t index = 0;  // i for SMinus/SPlus, 0 for Swap12

  friend auto operator<=>(const EdgeKind&, const EdgeKind&) = default;
};

inline EdgeKind kind_swap12() { return EdgeKind{GenType::Swap12, 0}; }
inline EdgeKind kind_minus(int i) {
  return EdgeKind{GenType::SMinus, static_cast<std::uint8_t>(i)};
}
inline EdgeKind kind_plus(int i) {
  return EdgeKind{GenType::SPlus, static_cast<std::uint8_t>(i)};
}

inline std::string format_kind(const EdgeKind& k) {
  switch (k.type) {
    case GenType::Swap12: return "12";
    case GenType::SMinus: return "s" + std::to_string(k.index) + "-";
    case GenType::SPlus: return "s" + std::to_string(k.index) + "+";
  }
  return "?";
}

inline Perm apply_swap12(const Perm& u) {
  Perm v = u;
  std::swap(v.s[0], v.s[1]);
  return v;
}

inline Perm apply_s(const Perm& u, int i, bool plus) {
  if (i < 3 || i > u.n)
    fail(ErrorCode::BadIndex, "generator index " + std::to_string(i) +
                                  " outside [3, " + std::to_string(u.n) + "]");
  Perm v = u;
  if (plus) {
    v.s[0] = u.s[i - 1];
    v.s[1] = u.s[0];
    v.s[i - 1] = u.s[1];
  } else {
    v.s[0] = u.s[1];
    v.s[1] = u.s[i - 1];
    v.s[i - 1] = u.s[0];
  }
  return v;
}

inline Perm apply_kind(const Perm& u, const EdgeKind& k) {
  switch (k.type) {
    case GenType::Swap12: return apply_swap12(u);
    case GenType::SMinus: return apply_s(u, k.index, false);
    case GenType::SPlus: return apply_s(u, k.index, true);
  }
  fail(ErrorCode::InternalError, "bad EdgeKind");
}

// Deterministic order: Swap12 first, then i ascending with minus before plus.
inline std::vector<std::pair<Perm, EdgeKind>> neighbors(const Perm& u) {
  std::vector<std::pair<Perm, EdgeKind>> out;
  out.reserve(2 * u.n - 3);
  out.emplace_back(apply_swap12(u), kind_swap12());
  for (int i = 3; i <= u.n; ++i) {
    out.emplace_back(apply_s(u, i, false), kind_minus(i));
    out.emplace_back(apply_s(u, i, true), kind_plus(i));
  }
  return out;
}

inline bool are_adjacent(const Perm& u, const Perm& v) {
  if (u == v) return false;
  if (apply_swap12(u) == v) return true;
  for (int i = 3; i <= u.n; ++i)
    if (apply_s(u, i, false) == v || apply_s(u, i, true) == v) return true;
  return false;
}

inline EdgeKind edge_kind(const Perm& u, const Perm& v) {
  if (u.n == v.n && u != v) {
    if (apply_swap12(u) == v) return kind_swap12();
    for (int i = 3; i <= u.n; ++i) {
      if (apply_s(u, i, false) == v) return kind_minus(i);
      if (apply_s(u, i, true) == v) return kind_plus(i);
    }
  }
  fail(ErrorCode::NotAdjacent,
       format_perm(u) + " and " + format_perm(v) + " are not adjacent");
}

using SubnetId = int;

// Membership: the subnetwork of u is its last symbol.
inline SubnetId subnetwork_of(const Perm& u) { return u.last(); }

// Adjacency is validated on construction.
struct Edge {
  Perm a;
  Perm b;

  Edge(const Perm& a_, const Perm& b_) : a(a_), b(b_) { (void)edge_kind(a, b); }

  EdgeKind kind() const { return edge_kind(a, b); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline bool same_undirected(const Edge& e, const Edge& f) {
  return (e.a == f.a && e.b == f.b) || (e.a == f.b && e.b == f.a);
}

inline std::string format_edge(const Edge& e) {
  return "(" + format_perm(e.a) + ", " + format_perm(e.b) + ")";
}

struct CoupledEdge {
  Edge edge;
  SubnetId subnet;
};

// For an edge e = (u, v) inside one subnetwork, a coupled pair-edge is an
// edge (u', v') of a single *other* subnetwork with u' adjacent to u and
// v' adjacent to v through position-n generators, so <u, u', v', v> is a
// 4-cycle.  A 12-edge has two options (one through u's first symbol, one
// through its second, in that order); an i-edge has exactly one.
inline std::vector<CoupledEdge> coupled_pair_edge(const Edge& e) {
  const Perm& u = e.a;
  const Perm& v = e.b;
  if (subnetwork_of(u) != subnetwork_of(v))
    fail(ErrorCode::NotIntraSubnetwork,
         "edge " + format_edge(e) + " crosses subnetworks");
  int n = u.n;
  EdgeKind k = edge_kind(u, v);
  std::vector<CoupledEdge> out;
  if (k.type == GenType::Swap12) {
    out.push_back({Edge(apply_s(u, n, false), apply_s(v, n, true)), u.first()});
    out.push_back({Edge(apply_s(u, n, true), apply_s(v, n, false)), u.second()});
  } else if (k.type == GenType::SPlus) {
    out.push_back({Edge(apply_s(u, n, false), apply_s(v, n, true)), u.first()});
  } else {
    out.push_back({Edge(apply_s(u, n, true), apply_s(v, n, false)), u.second()});
  }
  return out;
}

// Symbol relabeling x -> sigma(x) applied to every symbol of u.  This is a
// graph automorphism and preserves EdgeKind.
inline Perm relabel(const Perm& sigma, const Perm& u) {
  if (sigma.n != u.n)
    fail(ErrorCode::DimensionMismatch,
         "relabel of dimension " + std::to_string(u.n) + " by sigma of " +
             std::to_string(sigma.n));
  return compose(sigma, u);
}

inline Edge relabel_edge(const Perm& sigma, const Edge& e) {
  return Edge(relabel(sigma, e.a), relabel(sigma, e.b));
}

// A cluster is an ordered set of distinct subnetwork labels of S_n^2.
struct Cluster {
  int n = 0;
  std::vector<SubnetId> labels;
};

inline void check_cluster(const Cluster& c) {
  if (c.labels.empty())
    fail(ErrorCode::BadSelection, "cluster has no labels");
  std::uint32_t seen = 0;
  for (SubnetId i : c.labels) {
    if (i < 1 || i > c.n)
      fail(ErrorCode::BadSelection, "cluster label " + std::to_string(i) +
                                        " outside [1, " + std::to_string(c.n) +
                                        "]");
    if (seen & (1u << i))
      fail(ErrorCode::BadSelection,
           "cluster label " + std::to_string(i) + " repeats");
    seen |= 1u << i;
  }
}

inline bool cluster_contains(const Cluster& c, SubnetId i) {
  for (SubnetId l : c.labels)
    if (l == i) return true;
  return false;
}

// Order-preserving reduction of one subnetwork onto the next dimension
// down: drop the last symbol and map the rest onto [1, n-1].
inline int reduce_symbol(int t, int dropped) { return t < dropped ? t : t - 1; }
inline int lift_symbol(int v, int dropped) { return v < dropped ? v : v + 1; }

inline Perm drop_last_relabel(const Perm& u) {
  int dropped = u.last();
  Perm q;
  q.n = static_cast<std::uint8_t>(u.n - 1);
  for (int j = 0; j + 1 < u.n; ++j)
    q.s[j] = static_cast<std::uint8_t>(reduce_symbol(u.s[j], dropped));
  return q;
}

inline Perm lift_into_subnet(const Perm& q, SubnetId i, int n) {
  Perm u;
  u.n = static_cast<std::uint8_t>(n);
  for (int j = 0; j + 1 < n; ++j)
    u.s[j] = static_cast<std::uint8_t>(lift_symbol(q.s[j], i));
  u.s[n - 1] = static_cast<std::uint8_t>(i);
  return u;
}

// All vertices of the cluster: labels in the given order, each subnetwork
// enumerated in lexicographic order of its reduced form.
inline std::vector<Perm> vertices_of(const Cluster& c) {
  check_cluster(c);
  std::uint64_t per = factorial(c.n - 1);
  std::vector<Perm> out;
  out.reserve(c.labels.size() * per);
  for (SubnetId i : c.labels)
    for (std::uint64_t r = 0; r < per; ++r)
      out.push_back(lift_into_subnet(unrank_perm(r, c.n - 1), i, c.n));
  return out;
}

inline Cluster full_cluster(int n) {
  Cluster c;
  c.n = n;
  for (int i = 1; i <= n; ++i) c.labels.push_back(i);
  return c;
}

}  // namespace splitstar
