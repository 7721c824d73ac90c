#pragma once

#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "splitstar/error.hpp"

namespace splitstar {

inline constexpr int kMaxN = 16;

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Permutation of [n] with fixed capacity.  s[0..n-1] holds the symbols
// (the word x_1 x_2 ... x_n, so position j of the word is s[j-1]); slots
// past n stay zero, which makes the defaulted comparison lexicographic
// within one dimension.
struct Perm {
  std::array<std::uint8_t, kMaxN> s{};
  std::uint8_t n = 0;

  int dim() const { return n; }
  int first() const { return s[0]; }
  int second() const { return s[1]; }
  int last() const { return s[n - 1]; }

  friend auto operator<=>(const Perm&, const Perm&) = default;
};

inline Perm identity_perm(int n) {
  Perm p;
  p.n = static_cast<std::uint8_t>(n);
  for (int j = 0; j < n; ++j) p.s[j] = static_cast<std::uint8_t>(j + 1);
  return p;
}

inline Perm reverse_identity_perm(int n) {
  Perm p;
  p.n = static_cast<std::uint8_t>(n);
  for (int j = 0; j < n; ++j) p.s[j] = static_cast<std::uint8_t>(n - j);
  return p;
}

// Symbol transposition x <-> y as a permutation (for relabeling maps).
inline Perm transposition_perm(int n, int x, int y) {
  Perm p = identity_perm(n);
  p.s[x - 1] = static_cast<std::uint8_t>(y);
  p.s[y - 1] = static_cast<std::uint8_t>(x);
  return p;
}

inline void check_dim(int n) {
  if (n < 1 || n > kMaxN)
    fail(ErrorCode::OutOfRange,
         "dimension " + std::to_string(n) + " outside [1, " +
             std::to_string(kMaxN) + "]");
}

// Text form: digit string for n <= 9, comma-separated integers for n >= 10.
inline Perm parse_perm(const std::string& text, int n) {
  check_dim(n);
  std::vector<int> vals;
  vals.reserve(n);
  if (n <= 9) {
    if (static_cast<int>(text.size()) != n)
      fail(ErrorCode::BadLength, "expected " + std::to_string(n) +
                                     " digits, got \"" + text + "\"");
    for (char c : text) {
      if (c < '1' || c > '9')
        fail(ErrorCode::BadToken, "not a symbol digit: '" + std::string(1, c) +
                                      "' in \"" + text + "\"");
      vals.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string tok = text.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      int v = 0;
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || end != tok.data() + tok.size())
        fail(ErrorCode::BadToken, "not an integer: \"" + tok + "\"");
      vals.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (static_cast<int>(vals.size()) != n)
      fail(ErrorCode::BadLength, "expected " + std::to_string(n) +
                                     " comma-separated symbols, got " +
                                     std::to_string(vals.size()));
  }
  std::array<bool, kMaxN + 1> seen{};
  Perm p;
  p.n = static_cast<std::uint8_t>(n);
  for (int j = 0; j < n; ++j) {
    int v = vals[j];
    if (v < 1 || v > n)
      fail(ErrorCode::BadToken,
           "symbol " + std::to_string(v) + " outside [1, " + std::to_string(n) +
               "]");
    if (seen[v])
      fail(ErrorCode::NotABijection, "symbol " + std::to_string(v) +
                                         " repeats in \"" + text + "\"");
    seen[v] = true;
    p.s[j] = static_cast<std::uint8_t>(v);
  }
  return p;
}

inline std::string format_perm(const Perm& p) {
  std::string out;
  if (p.n <= 9) {
    for (int j = 0; j < p.n; ++j) out.push_back(static_cast<char>('0' + p.s[j]));
  } else {
    for (int j = 0; j < p.n; ++j) {
      if (j) out.push_back(',');
      out += std::to_string(p.s[j]);
    }
  }
  return out;
}

// Lexicographic rank via the Lehmer code.
inline std::uint64_t rank_of(const Perm& p) {
  std::uint64_t r = 0;
  for (int i = 0; i < p.n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < p.n; ++j) smaller += p.s[j] < p.s[i];
    r = r * static_cast<std::uint64_t>(p.n - i) +
        static_cast<std::uint64_t>(smaller);
  }
  return r;
}

inline Perm unrank_perm(std::uint64_t r, int n) {
  check_dim(n);
  if (r >= factorial(n))
    fail(ErrorCode::OutOfRange, "rank " + std::to_string(r) + " >= " +
                                    std::to_string(n) + "!");
  std::array<std::uint8_t, kMaxN> avail{};
  for (int j = 0; j < n; ++j) avail[j] = static_cast<std::uint8_t>(j + 1);
  Perm p;
  p.n = static_cast<std::uint8_t>(n);
  int left = n;
  for (int i = 0; i < n; ++i) {
    std::uint64_t f = factorial(n - 1 - i);
    int idx = static_cast<int>(r / f);
    r %= f;
    p.s[i] = avail[idx];
    for (int j = idx; j + 1 < left; ++j) avail[j] = avail[j + 1];
    --left;
  }
  return p;
}

// Convention: apply b first, then a, i.e. compose(a, b).s[j] = a.s[b.s[j]-1].
// With a = sigma this is exactly "replace each symbol x of b by sigma(x)".
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.n != b.n)
    fail(ErrorCode::DimensionMismatch,
         "compose of dimensions " + std::to_string(a.n) + " and " +
             std::to_string(b.n));
  Perm c;
  c.n = a.n;
  for (int j = 0; j < a.n; ++j) c.s[j] = a.s[b.s[j] - 1];
  return c;
}

inline Perm inverse_of(const Perm& a) {
  Perm inv;
  inv.n = a.n;
  for (int j = 0; j < a.n; ++j) inv.s[a.s[j] - 1] = static_cast<std::uint8_t>(j + 1);
  return inv;
}

// Dense 4-bit packing, unique within one dimension (not across dimensions).
inline std::uint64_t pack_key(const Perm& p) {
  std::uint64_t k = 0;
  for (int j = 0; j < p.n; ++j)
    k |= static_cast<std::uint64_t>(p.s[j] - 1) << (4 * j);
  return k;
}

}  // namespace splitstar
