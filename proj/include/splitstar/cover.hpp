#pragma once

#include <string>
#include <vector>

#include "splitstar/cycle.hpp"
#include "splitstar/permutation.hpp"

namespace splitstar {

// Request: split the n! vertices into two disjoint cycles of lengths ell
// and n! - ell, with u on the first and v on the second.
struct DccRequest {
  int n = 0;
  Perm u;
  Perm v;
  std::uint64_t ell = 0;
};

// Normalized cover: c1 is always the cycle holding u (length ell), c2 the
// cycle holding v (length n! - ell).
struct DccCover {
  Cycle c1;
  Cycle c2;
};

// Which construction branch produced a cover.  dim is the dimension the
// branch ran at; top/sub identify the branch; s the length band index.
// dim = 4 with top = 0 marks the table-backed base.
struct CaseTag {
  int dim = 0;
  int top = 0;
  int sub = 0;
  int s = 0;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

inline std::string format_case_tag(const CaseTag& t) {
  if (t.top == 0) return "n=" + std::to_string(t.dim) + ":base";
  return "n=" + std::to_string(t.dim) + ":" + std::to_string(t.top) + "." +
         std::to_string(t.sub) + ":s=" + std::to_string(t.s);
}

using CaseTrace = std::vector<CaseTag>;

}  // namespace splitstar
