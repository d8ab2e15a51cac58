#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "asmloops/core.hpp"
#include "asmloops/loops.hpp"

namespace asmloops {

// Sum of A[i][j] * A[i'][j'] over i > i', j < j'.
long inv_direct(const Asm& a);
Asm reflect_diagonal(const Asm& a);

// (#ud) - (#du) over consecutive letters; w must start with u and end with d.
int word_eval(std::string_view w);

// Nonzero entries strictly above and strictly right of v.
std::vector<LatticeVertex> contribution_zone(const Asm& a, LatticeVertex v);
// Throws ZeroVertex when A[v] = 0.
long contribution(const Asm& a, LatticeVertex v);

// Sum of corner heights along a Dyck word read as a southwest boundary:
// ud corners count +height, du corners -height.
int corner_height_sum(const DyckWord& w);

int inv_loop(const Loop& g);
int c_swb(const BoundarySet& bs, std::size_t index);
int c_neb(const BoundarySet& bs, std::size_t index);

struct LoopReport {
  LatticeVertex start;
  int semilength = 0;
  int nesting = 0;
  int diagonal = 0;     // |O|
  int diagonal_sw = 0;  // |O_sw|
  int c_swb = 0;
  int c_neb = 0;
  // The same two quantities summed vertex by vertex over the matrix.
  long c_swb_direct = 0;
  long c_neb_direct = 0;
  int diag_ones = 0;
  int inv_loop = 0;
};

struct ContributionReport {
  int n = 0;
  std::vector<LoopReport> loops;
  int k = 0;  // off-diagonal osculations
  int diagonal_ones = 0;
  int diagonal_one_nesting = 0;       // sum of nesting over diagonal ones
  long diagonal_one_contribution = 0;  // their contributions, summed directly
  long sum_inv_loops = 0;
  long sum_contributions = 0;  // sum over loops of c_swb + c_neb
  long inv = 0;                // sum_inv_loops - k
};

std::pair<long, ContributionReport> inv_theorem(const DyckIsland& d);

}  // namespace asmloops
