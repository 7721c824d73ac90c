#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "splitstar/error.hpp"
#include "splitstar/permutation.hpp"
#include "splitstar/topology.hpp"

namespace splitstar {

// Open walks and closed walks as plain vertex sequences.  A Cycle's closing
// edge (last -> first) is implicit.  Constructions promise simplicity and
// adjacency; the verify module is the gate that checks them.
struct Path {
  std::vector<Perm> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
};

struct Cycle {
  std::vector<Perm> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
};

// The induced subgraph a construction works in: the whole graph, one
// subnetwork, or a general cluster of subnetworks.
struct Scope {
  Cluster cluster;

  static Scope whole(int n) { return Scope{full_cluster(n)}; }
  static Scope subnet(int n, SubnetId i) { return Scope{Cluster{n, {i}}}; }
  static Scope of(Cluster c) { return Scope{std::move(c)}; }

  int n() const { return cluster.n; }
  bool is_whole() const {
    return static_cast<int>(cluster.labels.size()) == cluster.n;
  }
  bool is_single_subnet() const { return cluster.labels.size() == 1; }
  bool contains(const Perm& p) const {
    return p.n == cluster.n && cluster_contains(cluster, subnetwork_of(p));
  }
  std::uint64_t vertex_count() const {
    return cluster.labels.size() * factorial(cluster.n - 1);
  }
  std::vector<Perm> vertices() const { return vertices_of(cluster); }
};

inline int find_index(const Cycle& c, const Perm& v) {
  for (int i = 0; i < c.length(); ++i)
    if (c.vertices[i] == v) return i;
  return -1;
}

inline bool cycle_contains(const Cycle& c, const Perm& v) {
  return find_index(c, v) >= 0;
}

inline Perm successor(const Cycle& c, const Perm& v) {
  int i = find_index(c, v);
  if (i < 0) fail(ErrorCode::InternalError, format_perm(v) + " not on cycle");
  return c.vertices[(i + 1) % c.length()];
}

inline Perm predecessor(const Cycle& c, const Perm& v) {
  int i = find_index(c, v);
  if (i < 0) fail(ErrorCode::InternalError, format_perm(v) + " not on cycle");
  return c.vertices[(i + c.length() - 1) % c.length()];
}

inline bool has_cycle_edge(const Cycle& c, const Perm& a, const Perm& b) {
  int i = find_index(c, a);
  if (i < 0) return false;
  int k = c.length();
  return c.vertices[(i + 1) % k] == b || c.vertices[(i + k - 1) % k] == b;
}

inline std::vector<std::pair<Perm, Perm>> cycle_edges(const Cycle& c) {
  std::vector<std::pair<Perm, Perm>> out;
  int k = c.length();
  out.reserve(k);
  for (int i = 0; i < k; ++i)
    out.emplace_back(c.vertices[i], c.vertices[(i + 1) % k]);
  return out;
}

inline Cycle rotate_to(const Cycle& c, const Perm& start) {
  int i = find_index(c, start);
  if (i < 0)
    fail(ErrorCode::InternalError, format_perm(start) + " not on cycle");
  Cycle out;
  out.vertices.reserve(c.length());
  for (int j = 0; j < c.length(); ++j)
    out.vertices.push_back(c.vertices[(i + j) % c.length()]);
  return out;
}

inline Path reverse_path(Path p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

// All vertices of c as a path from a to b, using every cycle edge except
// {a, b}; requires {a, b} to be a cycle edge of c.
inline Path open_at_edge(const Cycle& c, const Perm& a, const Perm& b) {
  int ia = find_index(c, a);
  int k = c.length();
  if (ia < 0 || !has_cycle_edge(c, a, b))
    fail(ErrorCode::InternalError,
         "no cycle edge (" + format_perm(a) + ", " + format_perm(b) + ")");
  Path out;
  out.vertices.reserve(k);
  int step = (c.vertices[(ia + 1) % k] == b) ? k - 1 : 1;  // walk away from b
  int i = ia;
  for (int t = 0; t < k; ++t) {
    out.vertices.push_back(c.vertices[i]);
    i = (i + step) % k;
  }
  return out;
}

// Walk along the cycle from `from` to `to` inclusive, in the chosen
// direction (forward = stored order).
inline Path arc_along(const Cycle& c, const Perm& from, const Perm& to,
                      bool forward) {
  int i = find_index(c, from);
  int j = find_index(c, to);
  int k = c.length();
  if (i < 0 || j < 0)
    fail(ErrorCode::InternalError, "arc endpoints not on cycle");
  Path out;
  int step = forward ? 1 : k - 1;
  for (int t = 0; t < k; ++t) {
    out.vertices.push_back(c.vertices[i]);
    if (i == j) return out;
    i = (i + step) % k;
  }
  fail(ErrorCode::InternalError, "arc walk failed");
}

// Replace cycle edge {w, z} of c1 and {w2, z2} of c2 by the cross edges
// (w, w2) and (z, z2).  The caller guarantees those cross adjacencies and
// vertex-disjointness of the two cycles.
inline Cycle merge_cycles(const Cycle& c1, const Perm& w, const Perm& z,
                          const Cycle& c2, const Perm& w2, const Perm& z2) {
  Path p1 = open_at_edge(c1, z, w);   // z .. w
  Path p2 = open_at_edge(c2, w2, z2); // w2 .. z2
  Cycle out;
  out.vertices.reserve(p1.length() + p2.length());
  out.vertices.insert(out.vertices.end(), p1.vertices.begin(), p1.vertices.end());
  out.vertices.insert(out.vertices.end(), p2.vertices.begin(), p2.vertices.end());
  return out;  // closing edge (z2, z)
}

// Union of two cycles that share exactly the edge {a, b} and nothing else;
// the shared edge dissolves.
inline Cycle merge_sharing_edge(const Cycle& c1, const Cycle& c2, const Perm& a,
                                const Perm& b) {
  Path p1 = open_at_edge(c1, b, a);  // b .. a
  Path p2 = open_at_edge(c2, a, b);  // a .. b
  Cycle out;
  out.vertices.reserve(p1.length() + p2.length() - 2);
  out.vertices.insert(out.vertices.end(), p1.vertices.begin(), p1.vertices.end());
  out.vertices.insert(out.vertices.end(), p2.vertices.begin() + 1,
                      p2.vertices.end() - 1);
  return out;
}

inline Cycle close_path(const Path& p) { return Cycle{p.vertices}; }

}  // namespace splitstar
