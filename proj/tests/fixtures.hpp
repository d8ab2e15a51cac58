#pragma once

// Worked examples as data, plus hand-traced edge sets. Coordinates are
// (row, column), 1-based; 0 and n+1 denote the outside of the grid.

#include <cstdlib>
#include <utility>
#include <vector>

#include "asmloops/core.hpp"
#include "asmloops/loops.hpp"

namespace fixtures {

using asmloops::IntMatrix;
using asmloops::LatticeVertex;

inline const std::vector<IntMatrix> kInvFourAsms = {
    {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}},
    {{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 1, -1, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}},
    {{0, 1, 0, 0, 0}, {1, -1, 1, 0, 0}, {0, 1, -1, 1, 0}, {0, 0, 1, -1, 1}, {0, 0, 0, 1, 0}},
    {{0, 0, 0, 0, 1}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}},
};

inline const std::vector<IntMatrix> kInvFourIslands = {
    {{1, 1, 0, 0}, {1, 2, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}},
    {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}},
    {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
    {{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}},
};

inline const std::vector<int> kInvFourLoopCounts = {2, 1, 1, 1};

inline const IntMatrix kSharedVertexAsm = {
    {1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 1, -1, 0, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}};
inline const IntMatrix kNestedPathsAsm = {
    {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {1, -1, 0, 1, 0}, {0, 1, 0, 0, 0}};

inline const IntMatrix kIslandA = {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
inline const IntMatrix kIslandB = {{1, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 1, 1}, {0, 1, 1, 1}};

inline const IntMatrix kHeightA = {{0, 1, 2, 3, 4, 5}, {1, 0, 1, 2, 3, 4},
                                    {2, 1, 2, 1, 2, 3}, {3, 2, 1, 2, 3, 2},
                                    {4, 3, 2, 1, 2, 1}, {5, 4, 3, 2, 1, 0}};
// h[2][3] corrected to 3.
inline const IntMatrix kHeightB = {{0, 1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 4},
                                     {2, 3, 4, 3, 4, 3}, {3, 4, 3, 2, 3, 2},
                                     {4, 3, 4, 3, 2, 1}, {5, 4, 3, 2, 1, 0}};
// As printed.
inline const IntMatrix kHeightBBadStep = {{0, 1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 4},
                                            {2, 3, 4, 1, 4, 3}, {3, 4, 3, 2, 3, 2},
                                            {4, 3, 4, 3, 2, 1}, {5, 4, 3, 2, 1, 0}};

inline const IntMatrix kSkewIsland5 = {{1, 1, 1, 1}, {1, 2, 2, 1}, {1, 2, 2, 1}, {1, 1, 1, 1}};

// Single loop of semilength 3 with a pinch at (2,2).
inline const IntMatrix kPinchedLoop = {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}};

inline const IntMatrix kContributionLoop = {{1, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 0},
                                 {0, 0, 1, 1, 1, 1}, {0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 0, 1}};

inline IntMatrix osculating_pair() {
  IntMatrix m = kContributionLoop;
  m[3][3] = 2;
  return m;
}

inline const IntMatrix kThreeLoops = {{1, 1, 1, 0, 0, 0}, {1, 2, 1, 1, 0, 0}, {1, 1, 2, 1, 0, 0},
                                {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 2, 1}, {0, 0, 0, 1, 1, 1}};

inline IntMatrix three_loops_widened() {
  IntMatrix m = kThreeLoops;
  m[2] = {1, 2, 2, 1, 0, 0};
  return m;
}

using Polyline = std::vector<LatticeVertex>;

// Expands axis-parallel corner lists into unit steps.
inline std::vector<LatticeVertex> expand(const Polyline& p) {
  std::vector<LatticeVertex> out{p.front()};
  for (std::size_t k = 1; k < p.size(); ++k) {
    LatticeVertex v = out.back();
    const LatticeVertex w = p[k];
    while (v != w) {
      v.i += (w.i > v.i) - (w.i < v.i);
      v.j += (w.j > v.j) - (w.j < v.j);
      out.push_back(v);
    }
  }
  return out;
}

// Closed loop from its corners; the first corner is not repeated.
inline asmloops::Cycle cycle(Polyline corners) {
  corners.push_back(corners.front());
  auto c = expand(corners);
  c.pop_back();
  return c;
}

inline asmloops::EdgeColoring coloring(int n, const std::vector<Polyline>& lines) {
  asmloops::EdgeColoring e(n);
  for (const auto& p : lines) {
    const auto v = expand(p);
    for (std::size_t k = 1; k < v.size(); ++k) {
      const LatticeVertex a = std::min(v[k - 1], v[k]), b = std::max(v[k - 1], v[k]);
      if (a.i == b.i) {
        e.set_east(a.i, a.j, true);
      } else {
        e.set_south(a.i, a.j, true);
      }
    }
  }
  return e;
}

// Dark edges of the identity and skew-identity loop configurations, n = 5.
inline const std::vector<Polyline> kPhi0Lines = {
    {{0, 1}, {1, 1}, {2, 1}, {2, 0}},
    {{0, 3}, {1, 3}, {1, 2}, {3, 2}, {3, 1}, {4, 1}, {4, 0}},
    {{0, 5}, {1, 5}, {1, 4}, {2, 4}, {2, 3}, {4, 3}, {4, 2}, {5, 2}, {5, 1}, {6, 1}},
    {{2, 6}, {2, 5}, {3, 5}, {3, 4}, {5, 4}, {5, 3}, {6, 3}},
    {{6, 5}, {4, 5}, {4, 6}},
};
inline constexpr int kPhi0DarkSegments = 30;

inline const std::vector<Polyline> kPhi1Lines = {
    {{4, 0}, {4, 1}, {6, 1}},
    {{2, 0}, {2, 1}, {3, 1}, {3, 2}, {5, 2}, {5, 3}, {6, 3}},
    {{0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {4, 3}, {4, 4}, {5, 4}, {5, 5}, {6, 5}},
    {{0, 3}, {1, 3}, {1, 4}, {3, 4}, {3, 5}, {4, 5}, {4, 6}},
    {{0, 5}, {2, 5}, {2, 6}},
};

// Alternating paths on phi0 leading to the two matrices above.
inline const std::vector<asmloops::Cycle> kSharedVertexPaths = {
    cycle({{2, 2}, {2, 3}, {3, 3}, {3, 2}}),
    cycle({{3, 3}, {3, 5}, {5, 5}, {5, 4}, {4, 4}, {4, 3}}),
};
inline const std::vector<asmloops::Cycle> kNestedPaths = {
    cycle({{2, 2}, {2, 3}, {3, 3}, {3, 2}}),
    cycle({{1, 1}, {1, 5}, {5, 5}, {5, 2}, {4, 2}, {4, 1}}),
};

}  // namespace fixtures
