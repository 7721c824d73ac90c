#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "splitstar/cover.hpp"
#include "splitstar/cycle.hpp"
#include "splitstar/error.hpp"
#include "splitstar/permutation.hpp"
#include "splitstar/topology.hpp"

namespace splitstar {

enum class Violation {
  NonAdjacentStep,
  RepeatedVertex,
  WrongLength,
  CoverageGap,
  CoverageOverlap,
  MembershipMiss,
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::NonAdjacentStep: return "NonAdjacentStep";
    case Violation::RepeatedVertex: return "RepeatedVertex";
    case Violation::WrongLength: return "WrongLength";
    case Violation::CoverageGap: return "CoverageGap";
    case Violation::CoverageOverlap: return "CoverageOverlap";
    case Violation::MembershipMiss: return "MembershipMiss";
  }
  return "Unknown";
}

struct ValidationReport {
  bool ok = true;
  std::vector<std::pair<Violation, std::string>> violations;

  void add(Violation code, std::string detail) {
    ok = false;
    violations.emplace_back(code, std::move(detail));
  }
};

namespace detail {

inline void check_sequence(ValidationReport& rep,
                           const std::vector<Perm>& vs, bool closed) {
  std::unordered_set<std::uint64_t> seen;
  for (const Perm& p : vs)
    if (!seen.insert(pack_key(p)).second)
      rep.add(Violation::RepeatedVertex, "repeated " + format_perm(p));
  int k = static_cast<int>(vs.size());
  int last = closed ? k : k - 1;
  for (int i = 0; i < last; ++i) {
    const Perm& a = vs[i];
    const Perm& b = vs[(i + 1) % k];
    if (!are_adjacent(a, b))
      rep.add(Violation::NonAdjacentStep,
              "step (" + format_perm(a) + ", " + format_perm(b) + ")");
  }
}

inline void check_scope_coverage(ValidationReport& rep, const Scope& scope,
                                 const std::vector<Perm>& vs,
                                 const std::vector<Perm>& forbidden) {
  std::unordered_set<std::uint64_t> in_cycle;
  for (const Perm& p : vs) {
    in_cycle.insert(pack_key(p));
    if (!scope.contains(p))
      rep.add(Violation::CoverageOverlap, "outside scope " + format_perm(p));
  }
  std::unordered_set<std::uint64_t> excluded;
  for (const Perm& p : forbidden) excluded.insert(pack_key(p));
  for (const Perm& p : scope.vertices()) {
    if (excluded.count(pack_key(p))) continue;
    if (!in_cycle.count(pack_key(p)))
      rep.add(Violation::CoverageGap, "missing " + format_perm(p));
  }
}

}  // namespace detail

// Structural cycle check: simplicity, step adjacency, required/forbidden
// memberships, and exact scope coverage when a scope is given.
inline ValidationReport validate_cycle(
    const std::optional<Scope>& scope, const Cycle& c,
    const std::vector<Perm>& required_vertices = {},
    const std::vector<Perm>& forbidden_vertices = {},
    const std::vector<std::pair<Perm, Perm>>& required_edges = {}) {
  ValidationReport rep;
  if (c.length() < 3) {
    rep.add(Violation::WrongLength,
            "length " + std::to_string(c.length()) + " < 3");
    return rep;
  }
  detail::check_sequence(rep, c.vertices, true);
  for (const Perm& p : required_vertices)
    if (!cycle_contains(c, p))
      rep.add(Violation::MembershipMiss, "missing " + format_perm(p));
  for (const Perm& p : forbidden_vertices)
    if (cycle_contains(c, p))
      rep.add(Violation::CoverageOverlap,
              "forbidden " + format_perm(p) + " present");
  for (const auto& [a, b] : required_edges)
    if (!has_cycle_edge(c, a, b))
      rep.add(Violation::MembershipMiss,
              "missing edge (" + format_perm(a) + ", " + format_perm(b) + ")");
  if (scope) detail::check_scope_coverage(rep, *scope, c.vertices, forbidden_vertices);
  return rep;
}

// Same checks for an open path, with pinned endpoints.
inline ValidationReport validate_path(
    const std::optional<Scope>& scope, const Path& p, const Perm& from,
    const Perm& to, const std::vector<Perm>& forbidden_vertices = {}) {
  ValidationReport rep;
  if (p.length() < 1) {
    rep.add(Violation::WrongLength, "empty path");
    return rep;
  }
  detail::check_sequence(rep, p.vertices, false);
  if (p.vertices.front() != from)
    rep.add(Violation::MembershipMiss,
            "path starts at " + format_perm(p.vertices.front()) + " not " +
                format_perm(from));
  if (p.vertices.back() != to)
    rep.add(Violation::MembershipMiss,
            "path ends at " + format_perm(p.vertices.back()) + " not " +
                format_perm(to));
  if (scope) detail::check_scope_coverage(rep, *scope, p.vertices, forbidden_vertices);
  return rep;
}

// Full cover check: both cycles sound, disjoint, jointly covering all n!
// vertices, lengths (ell, n!-ell), u on c1 and v on c2.
inline ValidationReport validate_dcc(int n, const DccCover& cover,
                                     const Perm& u, const Perm& v,
                                     std::uint64_t ell) {
  ValidationReport rep;
  for (const Cycle* c : {&cover.c1, &cover.c2}) {
    if (c->length() < 3)
      rep.add(Violation::WrongLength,
              "cycle length " + std::to_string(c->length()) + " < 3");
    else
      detail::check_sequence(rep, c->vertices, true);
  }
  if (static_cast<std::uint64_t>(cover.c1.length()) != ell)
    rep.add(Violation::WrongLength,
            "c1 length " + std::to_string(cover.c1.length()) + " != " +
                std::to_string(ell));
  if (static_cast<std::uint64_t>(cover.c2.length()) != factorial(n) - ell)
    rep.add(Violation::WrongLength,
            "c2 length " + std::to_string(cover.c2.length()) + " != " +
                std::to_string(factorial(n) - ell));
  std::unordered_set<std::uint64_t> keys;
  for (const Perm& p : cover.c1.vertices) keys.insert(pack_key(p));
  for (const Perm& p : cover.c2.vertices)
    if (!keys.insert(pack_key(p)).second)
      rep.add(Violation::CoverageOverlap, "shared " + format_perm(p));
  if (keys.size() != factorial(n)) {
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      Perm p = unrank_perm(r, n);
      if (!keys.count(pack_key(p))) {
        rep.add(Violation::CoverageGap, "missing " + format_perm(p));
        break;
      }
    }
  }
  if (!cycle_contains(cover.c1, u))
    rep.add(Violation::MembershipMiss, format_perm(u) + " not on c1");
  if (!cycle_contains(cover.c2, v))
    rep.add(Violation::MembershipMiss, format_perm(v) + " not on c2");
  return rep;
}

// Does the family of cycles use every edge of the scope (ends not
// forbidden) at least once?
inline ValidationReport edge_cover_check(
    const std::vector<Cycle>& family, const Scope& scope,
    const std::vector<Perm>& forbidden_vertices = {}) {
  ValidationReport rep;
  std::set<std::pair<std::uint64_t, std::uint64_t>> covered;
  for (const Cycle& c : family) {
    for (auto& [a, b] : cycle_edges(c)) {
      std::uint64_t ka = pack_key(a), kb = pack_key(b);
      covered.insert({std::min(ka, kb), std::max(ka, kb)});
    }
  }
  std::unordered_set<std::uint64_t> excluded;
  for (const Perm& p : forbidden_vertices) excluded.insert(pack_key(p));
  for (const Perm& a : scope.vertices()) {
    if (excluded.count(pack_key(a))) continue;
    for (auto& [b, kind] : neighbors(a)) {
      if (!scope.contains(b) || excluded.count(pack_key(b))) continue;
      std::uint64_t ka = pack_key(a), kb = pack_key(b);
      if (ka > kb) continue;
      if (!covered.count({ka, kb}))
        rep.add(Violation::CoverageGap,
                "edge (" + format_perm(a) + ", " + format_perm(b) +
                    ") uncovered");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive ground-truth search at n = 4.  Deliberately rebuilt from the
// generator rules without calling the topology module, so a defect there
// cannot leak into the oracle.

namespace oracle {

inline const std::array<std::uint32_t, 24>& adjacency4() {
  static const std::array<std::uint32_t, 24> table = [] {
    std::array<std::uint32_t, 24> adj{};
    for (int r = 0; r < 24; ++r) {
      Perm p = unrank_perm(r, 4);
      auto add = [&](const Perm& q) {
        adj[r] |= 1u << rank_of(q);
      };
      {
        Perm q = p;  // swap the first two positions
        q.s[0] = p.s[1];
        q.s[1] = p.s[0];
        add(q);
      }
      for (int i = 3; i <= 4; ++i) {
        Perm q = p;  // positions (1,2,i) receive (x_2, x_i, x_1)
        q.s[0] = p.s[1];
        q.s[1] = p.s[i - 1];
        q.s[i - 1] = p.s[0];
        add(q);
        Perm w = p;  // positions (1,2,i) receive (x_i, x_1, x_2)
        w.s[0] = p.s[i - 1];
        w.s[1] = p.s[0];
        w.s[i - 1] = p.s[1];
        add(w);
      }
    }
    return adj;
  }();
  return table;
}

constexpr std::uint32_t kAll24 = 0x00FFFFFFu;

// Enumerate simple cycles of exactly target_len vertices through start in
// ascending-rank order, one direction each; stop when cb returns true.
template <class CB>
inline bool dfs_cycle(const std::array<std::uint32_t, 24>& adj, int start,
                      int target_len, std::uint32_t forbidden,
                      std::array<std::uint8_t, 24>& path, int depth,
                      std::uint32_t used, CB&& cb) {
  int last = path[depth - 1];
  if (depth == target_len) {
    if (((adj[last] >> start) & 1u) && path[1] < path[depth - 1])
      return cb(path, used);
    return false;
  }
  std::uint32_t cand = adj[last] & ~used & ~forbidden;
  while (cand) {
    int nxt = std::countr_zero(cand);
    cand &= cand - 1;
    path[depth] = static_cast<std::uint8_t>(nxt);
    if (dfs_cycle(adj, start, target_len, forbidden, path, depth + 1,
                  used | (1u << nxt), cb))
      return true;
  }
  return false;
}

// First Hamiltonian cycle of the induced subgraph on `mask`, in the same
// deterministic order; empty if none.
inline std::optional<std::vector<int>> ham_cycle_on(
    const std::array<std::uint32_t, 24>& adj, std::uint32_t mask) {
  int count = std::popcount(mask);
  if (count < 3) return std::nullopt;
  int start = std::countr_zero(mask);
  std::array<std::uint8_t, 24> path{};
  path[0] = static_cast<std::uint8_t>(start);
  std::optional<std::vector<int>> found;
  dfs_cycle(adj, start, count, ~mask, path, 1, 1u << start,
            [&](const std::array<std::uint8_t, 24>& p, std::uint32_t) {
              found.emplace(p.begin(), p.begin() + count);
              return true;
            });
  return found;
}

}  // namespace oracle

// Exhaustive backtracking at n = 4: first, ell-cycles through u avoiding v
// in deterministic order; for each, test whether the complement carries a
// Hamiltonian cycle (which necessarily holds v).  First hit wins.
inline std::optional<DccCover> brute_force_dcc(const Perm& u, const Perm& v,
                                               std::uint64_t ell) {
  if (u.n != 4 || v.n != 4)
    fail(ErrorCode::UnsupportedDimension,
         "ground-truth search only at dimension 4");
  if (u == v) return std::nullopt;
  if (ell < 3 || ell > 21) return std::nullopt;
  const auto& adj = oracle::adjacency4();
  int su = static_cast<int>(rank_of(u));
  int sv = static_cast<int>(rank_of(v));
  std::array<std::uint8_t, 24> path{};
  path[0] = static_cast<std::uint8_t>(su);
  std::optional<DccCover> result;
  oracle::dfs_cycle(
      adj, su, static_cast<int>(ell), 1u << sv, path, 1, 1u << su,
      [&](const std::array<std::uint8_t, 24>& p, std::uint32_t used) {
        auto hc = oracle::ham_cycle_on(adj, oracle::kAll24 & ~used);
        if (!hc) return false;
        DccCover cover;
        for (std::uint64_t i = 0; i < ell; ++i)
          cover.c1.vertices.push_back(unrank_perm(p[i], 4));
        for (int r : *hc) cover.c2.vertices.push_back(unrank_perm(r, 4));
        cover.c2 = rotate_to(cover.c2, v);
        result = std::move(cover);
        return true;
      });
  return result;
}

}  // namespace splitstar
