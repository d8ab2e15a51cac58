#include "asmloops/inversion.hpp"

#include <algorithm>
#include <string>

#include "asmloops/biject.hpp"

namespace asmloops {

long inv_direct(const Asm& a) {
  const int n = a.size();
  long total = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (a.at(i, j) == 0) continue;
      for (int i2 = 1; i2 < i; ++i2) {
        for (int j2 = j + 1; j2 <= n; ++j2) total += a.at(i, j) * a.at(i2, j2);
      }
    }
  }
  return total;
}

Asm reflect_diagonal(const Asm& a) {
  const int n = a.size();
  Grid<int> t(n, n, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) t(i, j) = a.at(j, i);
  }
  return Asm::unchecked(n, std::move(t));
}

int word_eval(std::string_view w) {
  if (w.size() < 2 || w.front() != 'u' || w.back() != 'd') {
    throw Error(ErrorKind::BadEndpoints,
                "word must start with u and end with d: '" + std::string(w) + "'");
  }
  int value = 0;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] == 'u' && w[k + 1] == 'd') ++value;
    if (w[k] == 'd' && w[k + 1] == 'u') --value;
  }
  return value;
}

std::vector<LatticeVertex> contribution_zone(const Asm& a, LatticeVertex v) {
  std::vector<LatticeVertex> zone;
  for (int i = 1; i < v.i; ++i) {
    for (int j = v.j + 1; j <= a.size(); ++j) {
      if (a.at(i, j) != 0) zone.push_back({i, j});
    }
  }
  return zone;
}

namespace {

long contribution_or_zero(const Asm& a, LatticeVertex v) {
  const int av = a.at(v.i, v.j);
  if (av == 0) return 0;
  long sum = 0;
  for (const auto& w : contribution_zone(a, v)) sum += av * a.at(w.i, w.j);
  return sum;
}

}  // namespace

long contribution(const Asm& a, LatticeVertex v) {
  if (a.at(v.i, v.j) == 0) {
    throw Error(ErrorKind::ZeroVertex, "entry (" + std::to_string(v.i) + "," +
                                           std::to_string(v.j) + ") is zero");
  }
  return contribution_or_zero(a, v);
}

int corner_height_sum(const DyckWord& w) {
  const std::string& s = w.letters();
  int height = 0;
  int sum = 0;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    height += s[k] == 'u' ? 1 : -1;
    if (s[k] == 'u' && s[k + 1] == 'd') sum += height;
    if (s[k] == 'd' && s[k + 1] == 'u') sum -= height;
  }
  return sum;
}

int inv_loop(const Loop& g) { return g.semilength() + diag_ones_of_loop(g); }

int c_swb(const BoundarySet& bs, std::size_t index) {
  const int nest = nesting_of_loop(bs, index);
  const int sw = static_cast<int>(bs.diagonal.at(index).sw.size());
  return bs.loops.at(index).semilength() + nest * (1 + sw);
}

int c_neb(const BoundarySet& bs, std::size_t index) {
  const int nest = nesting_of_loop(bs, index);
  const auto& ds = bs.diagonal.at(index);
  const int ne_only = static_cast<int>(ds.all.size() - ds.sw.size());
  return nest * (1 + ne_only);
}

std::pair<long, ContributionReport> inv_theorem(const DyckIsland& d) {
  const BoundarySet bs = extract_boundaries(d);
  const Asm a = island_to_asm_direct(d);
  ContributionReport r;
  r.n = d.size();
  r.k = off_diagonal_osculations(bs);
  for (std::size_t k = 0; k < bs.loops.size(); ++k) {
    const Loop& g = bs.loops[k];
    LoopReport lr;
    lr.start = g.start();
    lr.semilength = g.semilength();
    lr.nesting = nesting_of_loop(bs, k);
    lr.diagonal = static_cast<int>(bs.diagonal[k].all.size());
    lr.diagonal_sw = static_cast<int>(bs.diagonal[k].sw.size());
    lr.c_swb = c_swb(bs, k);
    lr.c_neb = c_neb(bs, k);
    // Vertices on both halves count towards the northeast boundary.
    for (const auto& v : g.neb_path) lr.c_neb_direct += contribution_or_zero(a, v);
    for (const auto& v : g.swb_path) {
      if (!g.on_neb(v)) lr.c_swb_direct += contribution_or_zero(a, v);
    }
    lr.diag_ones = diag_ones_of_loop(g);
    lr.inv_loop = lr.semilength + lr.diag_ones;
    r.sum_inv_loops += lr.inv_loop;
    r.sum_contributions += lr.c_swb + lr.c_neb;
    r.loops.push_back(lr);
  }
  for (int t = 1; t <= d.size(); ++t) {
    if (a.at(t, t) != 1) continue;
    ++r.diagonal_ones;
    r.diagonal_one_nesting += nesting_of_point(bs, {t, t});
    r.diagonal_one_contribution += contribution_or_zero(a, {t, t});
  }
  r.inv = r.sum_inv_loops - r.k;
  return {r.inv, std::move(r)};
}

}  // namespace asmloops
