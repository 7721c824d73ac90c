#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "splitstar/hamilton.hpp"
#include "splitstar/verify.hpp"

using namespace splitstar;

namespace {

Perm P(const std::string& s) {
  return parse_perm(s, static_cast<int>(s.size()));
}

std::string why(const ValidationReport& rep) {
  std::string out;
  for (auto& [code, detail] : rep.violations) {
    out += std::string(to_string(code)) + ": " + detail + "; ";
  }
  return out;
}

template <class F>
ErrorCode thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an Error");
}

std::vector<std::pair<Perm, Perm>> all_edges(int n) {
  std::vector<std::pair<Perm, Perm>> out;
  for (std::uint64_t r = 0; r < factorial(n); ++r) {
    Perm a = unrank_perm(r, n);
    for (auto& [b, k] : neighbors(a))
      if (rank_of(a) < rank_of(b)) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

TEST_CASE("hamiltonian paths join every requested pair") {
  SECTION("dimension 3, all ordered pairs") {
    Scope s = Scope::whole(3);
    auto vs = s.vertices();
    for (const Perm& a : vs)
      for (const Perm& b : vs) {
        if (a == b) continue;
        Path p = ham_path(s, a, b);
        auto rep = validate_path(s, p, a, b);
        INFO(format_perm(a) << " -> " << format_perm(b) << " " << why(rep));
        REQUIRE(rep.ok);
      }
  }

  SECTION("dimension 4, all ordered pairs") {
    Scope s = Scope::whole(4);
    auto vs = s.vertices();
    for (const Perm& a : vs)
      for (const Perm& b : vs) {
        if (a == b) continue;
        Path p = ham_path(s, a, b);
        auto rep = validate_path(s, p, a, b);
        INFO(format_perm(a) << " -> " << format_perm(b) << " " << why(rep));
        REQUIRE(rep.ok);
      }
  }

  SECTION("subnetwork scope solves one dimension down") {
    Scope s = Scope::subnet(5, 5);
    Path p = ham_path(s, P("12345"), P("21345"));
    CHECK(p.length() == 24);
    auto rep = validate_path(s, p, P("12345"), P("21345"));
    INFO(why(rep));
    CHECK(rep.ok);
  }

  SECTION("dimension 5, cross and same-subnetwork endpoints") {
    Scope s = Scope::whole(5);
    for (auto& [a, b] : std::vector<std::pair<Perm, Perm>>{
             {P("12345"), P("54321")},
             {P("12345"), P("21345")},
             {P("23451"), P("13254")},
             {P("54321"), P("45321")}}) {
      Path p = ham_path(s, a, b);
      CHECK(p.length() == 120);
      auto rep = validate_path(s, p, a, b);
      INFO(format_perm(a) << " -> " << format_perm(b) << " " << why(rep));
      REQUIRE(rep.ok);
    }
  }

  SECTION("dimension 6 spot check") {
    Scope s = Scope::whole(6);
    Path p = ham_path(s, P("123456"), P("654321"));
    CHECK(p.length() == 720);
    auto rep = validate_path(s, p, P("123456"), P("654321"));
    INFO(why(rep));
    REQUIRE(rep.ok);
  }

  SECTION("bad requests") {
    CHECK(thrown_code([] {
            ham_path(Scope::whole(4), P("1234"), P("1234"));
          }) == ErrorCode::SameEndpoints);
    CHECK(thrown_code([] {
            ham_path(Scope::subnet(4, 4), P("1234"), P("1243"));
          }) == ErrorCode::OutOfScope);
    CHECK(thrown_code([] {
            ham_path(Scope::of(Cluster{4, {1, 2}}), P("2341"), P("3412"));
          }) == ErrorCode::OutOfScope);
  }
}

TEST_CASE("cycles through a prescribed edge") {
  SECTION("every edge of the dimension-4 graph") {
    Scope s = Scope::whole(4);
    for (auto& [a, b] : all_edges(4)) {
      Cycle c = ham_cycle_through_edge(s, Edge(a, b));
      CHECK(c.length() == 24);
      auto rep = validate_cycle(s, c, {}, {}, {{a, b}});
      INFO(format_edge(Edge(a, b)) << " " << why(rep));
      REQUIRE(rep.ok);
    }
  }

  SECTION("subnetwork scope") {
    Scope s = Scope::subnet(4, 4);
    Cycle c = ham_cycle_through_edge(s, Edge(P("1234"), P("3124")));
    CHECK(c.length() == 6);
    auto rep = validate_cycle(s, c, {}, {}, {{P("1234"), P("3124")}});
    INFO(why(rep));
    CHECK(rep.ok);
  }

  SECTION("dimension 5, intra and cross edges") {
    Scope s = Scope::whole(5);
    for (auto& [a, b] : std::vector<std::pair<Perm, Perm>>{
             {P("12345"), P("21345")}, {P("12345"), P("25341")}}) {
      Cycle c = ham_cycle_through_edge(s, Edge(a, b));
      CHECK(c.length() == 120);
      auto rep = validate_cycle(s, c, {}, {}, {{a, b}});
      INFO(format_edge(Edge(a, b)) << " " << why(rep));
      REQUIRE(rep.ok);
    }
  }
}

TEST_CASE("cycles avoiding one vertex") {
  SECTION("dimension 3, every vertex") {
    Scope s = Scope::whole(3);
    for (const Perm& u : s.vertices()) {
      Cycle c = ham_cycle_minus_vertex(s, u);
      CHECK(c.length() == 5);
      auto rep = validate_cycle(s, c, {}, {u});
      INFO(format_perm(u) << " " << why(rep));
      REQUIRE(rep.ok);
    }
  }

  SECTION("dimension 4, every vertex") {
    Scope s = Scope::whole(4);
    for (const Perm& u : s.vertices()) {
      Cycle c = ham_cycle_minus_vertex(s, u);
      CHECK(c.length() == 23);
      auto rep = validate_cycle(s, c, {}, {u});
      INFO(format_perm(u) << " " << why(rep));
      REQUIRE(rep.ok);
    }
  }

  SECTION("subnetwork scope") {
    Scope s = Scope::subnet(5, 1);
    Cycle c = ham_cycle_minus_vertex(s, P("23451"));
    CHECK(c.length() == 23);
    auto rep = validate_cycle(s, c, {}, {P("23451")});
    INFO(why(rep));
    CHECK(rep.ok);
  }

  SECTION("dimension 5 whole graph") {
    Scope s = Scope::whole(5);
    for (const Perm& u : {P("12345"), P("54321"), P("13254")}) {
      Cycle c = ham_cycle_minus_vertex(s, u);
      CHECK(c.length() == 119);
      auto rep = validate_cycle(s, c, {}, {u});
      INFO(format_perm(u) << " " << why(rep));
      REQUIRE(rep.ok);
    }
  }

  SECTION("dimension 6 spot check") {
    Scope s = Scope::whole(6);
    Cycle c = ham_cycle_minus_vertex(s, P("251634"));
    CHECK(c.length() == 719);
    auto rep = validate_cycle(s, c, {}, {P("251634")});
    INFO(why(rep));
    REQUIRE(rep.ok);
  }

  SECTION("vertex must sit inside the scope") {
    CHECK(thrown_code([] {
            ham_cycle_minus_vertex(Scope::subnet(5, 1), P("12345"));
          }) == ErrorCode::OutOfScope);
  }
}

TEST_CASE("cycles avoiding an adjacent pair") {
  SECTION("dimension 3: 12-edges work, i-edges cannot") {
    Scope s = Scope::whole(3);
    Cycle c = ham_cycle_minus_edge_pair(s, P("123"), P("213"));
    CHECK(c.length() == 4);
    auto rep = validate_cycle(s, c, {}, {P("123"), P("213")});
    INFO(why(rep));
    CHECK(rep.ok);
    CHECK(thrown_code([] {
            ham_cycle_minus_edge_pair(Scope::whole(3), P("123"), P("231"));
          }) == ErrorCode::DimensionTooSmall);
  }

  SECTION("dimension 4, every edge") {
    Scope s = Scope::whole(4);
    for (auto& [u, v] : all_edges(4)) {
      Cycle c = ham_cycle_minus_edge_pair(s, u, v);
      CHECK(c.length() == 22);
      auto rep = validate_cycle(s, c, {}, {u, v});
      INFO(format_perm(u) << "," << format_perm(v) << " " << why(rep));
      REQUIRE(rep.ok);
    }
  }

  SECTION("dimension 5, one edge of every kind") {
    Scope s = Scope::whole(5);
    Perm u = P("12345");
    for (auto& [q, k] : neighbors(u)) {
      Cycle c = ham_cycle_minus_edge_pair(s, u, q);
      CHECK(c.length() == 118);
      auto rep = validate_cycle(s, c, {}, {u, q});
      INFO(format_kind(k) << " " << why(rep));
      REQUIRE(rep.ok);
    }
  }

  SECTION("dimension 6 cross pair") {
    Scope s = Scope::whole(6);
    Perm u = P("312645");
    Perm v = apply_s(u, 6, true);
    Cycle c = ham_cycle_minus_edge_pair(s, u, v);
    CHECK(c.length() == 718);
    auto rep = validate_cycle(s, c, {}, {u, v});
    INFO(why(rep));
    REQUIRE(rep.ok);
  }

  SECTION("pair must be adjacent") {
    CHECK(thrown_code([] {
            ham_cycle_minus_edge_pair(Scope::whole(4), P("1234"), P("1243"));
          }) == ErrorCode::NotAdjacent);
  }
}

namespace {

void check_two_edges(int n, const Edge& e, int q) {
  auto out = ham_cycle_two_edges(n, e, q);
  Scope s = Scope::whole(n);
  CHECK(!same_undirected(out[0].marked, out[1].marked));
  for (int opt = 0; opt < 2; ++opt) {
    const Edge& m = out[opt].marked;
    CHECK(static_cast<int>(m.a.first()) == q);
    CHECK(apply_s(m.a, n, true) == m.b);
    auto rep = validate_cycle(s, out[opt].cycle, {}, {},
                              {{e.a, e.b}, {m.a, m.b}});
    INFO("e=" << format_edge(e) << " q=" << q << " opt=" << opt << " "
              << why(rep));
    REQUIRE(rep.ok);
  }
}

}  // namespace

TEST_CASE("cycles through an edge and a led cross edge") {
  SECTION("dimension 4, every edge and lead symbol") {
    for (auto& [a, b] : all_edges(4))
      for (int q = 1; q <= 4; ++q) check_two_edges(4, Edge(a, b), q);
  }

  SECTION("dimension 5 samples") {
    for (int q = 1; q <= 5; ++q) {
      check_two_edges(5, Edge(P("12345"), P("21345")), q);  // intra
      check_two_edges(5, Edge(P("12345"), P("25341")), q);  // cross
    }
    check_two_edges(5, Edge(P("23451"), P("32451")), 3);
  }

  SECTION("bad lead symbol") {
    CHECK(thrown_code([] {
            ham_cycle_two_edges(4, Edge(P("1234"), P("2134")), 5);
          }) == ErrorCode::BadSymbol);
  }
}

TEST_CASE("cluster cycles through an edge") {
  SECTION("single-label cluster") {
    Cluster cl{5, {1}};
    Edge e(P("23451"), P("32451"));
    Cycle c = cluster_ham_cycle_through_edge(cl, e);
    CHECK(c.length() == 24);
    auto rep = validate_cycle(Scope::of(cl), c, {}, {}, {{e.a, e.b}});
    INFO(why(rep));
    CHECK(rep.ok);
  }

  SECTION("two labels, every edge of the first subnetwork") {
    Cluster cl{5, {1, 2}};
    std::uint64_t per = factorial(4);
    for (std::uint64_t r = 0; r < per; ++r) {
      Perm a = lift_into_subnet(unrank_perm(r, 4), 1, 5);
      for (auto& [b, k] : neighbors(a)) {
        if (subnetwork_of(b) != 1 || rank_of(a) >= rank_of(b)) continue;
        Edge e(a, b);
        Cycle c = cluster_ham_cycle_through_edge(cl, e);
        CHECK(c.length() == 48);
        auto rep = validate_cycle(Scope::of(cl), c, {}, {}, {{a, b}});
        INFO(format_edge(e) << " " << why(rep));
        REQUIRE(rep.ok);
      }
    }
  }

  SECTION("three labels in given order") {
    Cluster cl{5, {2, 4, 5}};
    Edge e(P("12354"), P("21354"));
    Cycle c = cluster_ham_cycle_through_edge(cl, e);
    CHECK(c.length() == 72);
    auto rep = validate_cycle(Scope::of(cl), c, {}, {}, {{e.a, e.b}});
    INFO(why(rep));
    CHECK(rep.ok);
  }

  SECTION("all labels") {
    Cluster cl = full_cluster(5);
    Edge e(P("12345"), P("21345"));
    Cycle c = cluster_ham_cycle_through_edge(cl, e);
    CHECK(c.length() == 120);
    auto rep = validate_cycle(Scope::of(cl), c, {}, {}, {{e.a, e.b}});
    INFO(why(rep));
    CHECK(rep.ok);
  }

  SECTION("dimension 4 clusters by direct search") {
    Cluster two{4, {1, 2}};
    Edge e(P("2341"), P("3241"));
    Cycle c = cluster_ham_cycle_through_edge(two, e);
    CHECK(c.length() == 12);
    auto rep = validate_cycle(Scope::of(two), c, {}, {}, {{e.a, e.b}});
    INFO(why(rep));
    CHECK(rep.ok);

    Cluster three{4, {3, 1, 4}};
    Edge f(P("1243"), P("2143"));
    Cycle c3 = cluster_ham_cycle_through_edge(three, f);
    CHECK(c3.length() == 18);
    auto rep3 = validate_cycle(Scope::of(three), c3, {}, {}, {{f.a, f.b}});
    INFO(why(rep3));
    CHECK(rep3.ok);
  }

  SECTION("bad requests") {
    CHECK(thrown_code([] {
            cluster_ham_cycle_through_edge(Cluster{5, {1, 2}},
                                           Edge(P("12345"), P("25341")));
          }) == ErrorCode::NotIntraSubnetwork);
    CHECK(thrown_code([] {
            cluster_ham_cycle_through_edge(Cluster{5, {2, 3}},
                                           Edge(P("23451"), P("32451")));
          }) == ErrorCode::OutOfScope);
  }
}

TEST_CASE("pair-avoiding cycles through a prescribed edge") {
  SECTION("dimension 4: both removed-pair forms, every remaining edge") {
    Perm u = P("4321");
    for (const Perm& v : {apply_swap12(u), apply_s(u, 3, true)}) {
      Scope s = Scope::whole(4);
      std::vector<Cycle> family;
      int edges = 0;
      for (auto& [a, b] : all_edges(4)) {
        if (a == u || a == v || b == u || b == v) continue;
        ++edges;
        Cycle c = ham_cycle_minus_pair_through_edge(4, u, v, Edge(a, b));
        CHECK(c.length() == 22);
        auto rep = validate_cycle(s, c, {}, {u, v}, {{a, b}});
        INFO(format_perm(v) << " e=(" << format_perm(a) << ","
                            << format_perm(b) << ") " << why(rep));
        REQUIRE(rep.ok);
        bool fresh = true;
        for (const Cycle& f : family)
          if (f.vertices == c.vertices) fresh = false;
        if (fresh) family.push_back(c);
      }
      CHECK(edges == 51);
      // the distinct answers form an edge cover of the trimmed graph
      auto cover = edge_cover_check(family, s, {u, v});
      INFO(why(cover));
      CHECK(cover.ok);
    }
  }

  SECTION("dimension 5: every edge, 12-neighbor form") {
    Perm u = P("54321");
    Perm v = apply_swap12(u);
    Scope s = Scope::whole(5);
    int done = 0;
    for (auto& [a, b] : all_edges(5)) {
      if (a == u || a == v || b == u || b == v) continue;
      Cycle c = ham_cycle_minus_pair_through_edge(5, u, v, Edge(a, b));
      CHECK(c.length() == 118);
      auto rep = validate_cycle(s, c, {}, {u, v}, {{a, b}});
      INFO("e=(" << format_perm(a) << "," << format_perm(b) << ") "
                 << why(rep));
      REQUIRE(rep.ok);
      ++done;
    }
    CHECK(done == 407);
  }

  SECTION("dimension 5: every edge, 3+ neighbor form") {
    Perm u = P("54321");
    Perm v = apply_s(u, 3, true);
    Scope s = Scope::whole(5);
    int done = 0;
    for (auto& [a, b] : all_edges(5)) {
      if (a == u || a == v || b == u || b == v) continue;
      Cycle c = ham_cycle_minus_pair_through_edge(5, u, v, Edge(a, b));
      CHECK(c.length() == 118);
      auto rep = validate_cycle(s, c, {}, {u, v}, {{a, b}});
      INFO("e=(" << format_perm(a) << "," << format_perm(b) << ") "
                 << why(rep));
      REQUIRE(rep.ok);
      ++done;
    }
    CHECK(done == 407);
  }

  SECTION("relabeled instances") {
    Perm u = P("12345");
    Perm v = P("21345");
    Cycle c = ham_cycle_minus_pair_through_edge(5, u, v,
                                                Edge(P("34125"), P("43125")));
    CHECK(c.length() == 118);
    auto rep = validate_cycle(Scope::whole(5), c, {}, {u, v},
                              {{P("34125"), P("43125")}});
    INFO(why(rep));
    REQUIRE(rep.ok);
  }

  SECTION("bad requests") {
    CHECK(thrown_code([] {
            ham_cycle_minus_pair_through_edge(
                4, P("4321"), apply_s(P("4321"), 4, true),
                Edge(P("1234"), P("2134")));
          }) == ErrorCode::BadPair);
    CHECK(thrown_code([] {
            ham_cycle_minus_pair_through_edge(
                4, P("4321"), P("3421"), Edge(P("4321"), P("3241")));
          }) == ErrorCode::EdgeTouchesRemoved);
  }
}
