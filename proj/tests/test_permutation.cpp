#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>
#include <random>

#include "splitstar/permutation.hpp"

using namespace splitstar;

namespace {

Perm from_vec(const std::vector<int>& v) {
  Perm p;
  p.n = static_cast<std::uint8_t>(v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    p.s[j] = static_cast<std::uint8_t>(v[j]);
  return p;
}

// Independent lexicographic enumeration, used as the ranking oracle.
std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  for (int j = 0; j < n; ++j) v[j] = j + 1;
  std::vector<Perm> out;
  do {
    out.push_back(from_vec(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

template <class F>
ErrorCode thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a splitstar::Error");
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("parse accepts digit and comma forms") {
  REQUIRE(parse_perm("1234", 4) == identity_perm(4));
  REQUIRE(parse_perm("4321", 4) == reverse_identity_perm(4));
  REQUIRE(format_perm(parse_perm("2431", 4)) == "2431");

  Perm q = parse_perm("10,9,8,7,6,5,4,3,2,1,11,12", 12);
  REQUIRE(q.s[0] == 10);
  REQUIRE(q.s[11] == 12);
  REQUIRE(format_perm(q) == "10,9,8,7,6,5,4,3,2,1,11,12");
}

TEST_CASE("parse rejects malformed input") {
  REQUIRE(thrown_code([] { parse_perm("1224", 4); }) == ErrorCode::NotABijection);
  REQUIRE(thrown_code([] { parse_perm("123", 4); }) == ErrorCode::BadLength);
  REQUIRE(thrown_code([] { parse_perm("12345", 4); }) == ErrorCode::BadLength);
  REQUIRE(thrown_code([] { parse_perm("12a4", 4); }) == ErrorCode::BadToken);
  REQUIRE(thrown_code([] { parse_perm("1254", 4); }) == ErrorCode::BadToken);
  REQUIRE(thrown_code([] { parse_perm("1,2,3", 12); }) == ErrorCode::BadLength);
  REQUIRE(thrown_code([] { parse_perm("1,2,x,4,5,6,7,8,9,10,11,12", 12); }) ==
          ErrorCode::BadToken);
}

TEST_CASE("rank and unrank follow lexicographic enumeration") {
  for (int n : {3, 4, 5}) {
    auto ps = all_perms(n);
    REQUIRE(ps.size() == factorial(n));
    for (std::size_t r = 0; r < ps.size(); ++r) {
      REQUIRE(rank_of(ps[r]) == r);
      REQUIRE(unrank_perm(r, n) == ps[r]);
      REQUIRE(parse_perm(format_perm(ps[r]), n) == ps[r]);
    }
  }
  REQUIRE(rank_of(parse_perm("4321", 4)) == 23);
  REQUIRE(rank_of(parse_perm("1243", 4)) == 1);
  REQUIRE(unrank_perm(0, 4) == identity_perm(4));
  REQUIRE(unrank_perm(23, 4) == parse_perm("4321", 4));
  REQUIRE(thrown_code([] { unrank_perm(24, 4); }) == ErrorCode::OutOfRange);
}

TEST_CASE("round trips at sampled larger dimensions") {
  std::mt19937 rng(12345);
  for (int n : {6, 7, 8, 10, 12}) {
    for (int t = 0; t < 200; ++t) {
      std::uint64_t r = rng() % factorial(n);
      Perm p = unrank_perm(r, n);
      REQUIRE(rank_of(p) == r);
      REQUIRE(parse_perm(format_perm(p), n) == p);
    }
  }
}

TEST_CASE("compose applies right argument first") {
  // With sigma on the left, compose relabels the symbols of the right
  // argument: here sigma swaps 1 and 3, so 2143 becomes 2341.
  Perm sigma = parse_perm("3214", 4);
  REQUIRE(compose(sigma, parse_perm("2143", 4)) == parse_perm("2341", 4));
  REQUIRE(compose(sigma, parse_perm("2134", 4)) == parse_perm("2314", 4));
  REQUIRE(transposition_perm(4, 1, 3) == sigma);
}

TEST_CASE("compose and inverse algebra") {
  Perm swap12 = parse_perm("2134", 4);
  REQUIRE(inverse_of(swap12) == swap12);
  REQUIRE(compose(swap12, swap12) == identity_perm(4));

  std::mt19937 rng(777);
  for (int t = 0; t < 1000; ++t) {
    int n = 3 + static_cast<int>(rng() % 6);
    Perm a = unrank_perm(rng() % factorial(n), n);
    Perm b = unrank_perm(rng() % factorial(n), n);
    Perm c = unrank_perm(rng() % factorial(n), n);
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    REQUIRE(compose(a, inverse_of(a)) == identity_perm(n));
    REQUIRE(compose(inverse_of(a), a) == identity_perm(n));
    REQUIRE(inverse_of(inverse_of(b)) == b);
  }
  REQUIRE(thrown_code([] {
            compose(identity_perm(3), identity_perm(4));
          }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("packed keys are distinct within a dimension") {
  for (int n : {4, 5}) {
    std::set<std::uint64_t> keys;
    for (const Perm& p : all_perms(n)) keys.insert(pack_key(p));
    REQUIRE(keys.size() == factorial(n));
  }
}
