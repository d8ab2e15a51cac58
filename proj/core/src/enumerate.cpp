#include "asmloops/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "asmloops/biject.hpp"
#include "asmloops/inversion.hpp"
#include "asmloops/loops.hpp"

namespace asmloops {

// ---------------------------------------------------------------- cursor

// Free cells are the interior entries h[i][j], 1 <= i, j < n, in row-major
// order; everything else is fixed by the border.
EnumerationCursor::EnumerationCursor(int n)
    : n_(n),
      cells_((n - 1) * (n - 1)),
      h_(n + 1, n + 1, 0),
      choice_(static_cast<std::size_t>(std::max(cells_, 0)), 0) {
  if (n < 1) throw Error(ErrorKind::BadShape, "size must be positive");
  const HeightFunction h0 = HeightFunction::minimal(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) h_(i, j) = h0.at(i, j);
  }
}

bool EnumerationCursor::fits(int k, int v) const {
  const int i = k / (n_ - 1) + 1;
  const int j = k % (n_ - 1) + 1;
  const int lo = i > j ? i - j : j - i;
  const int hi = std::min(i + j, 2 * n_ - i - j);
  if (v < lo || v > hi) return false;
  if (std::abs(v - h_(i, j - 1)) != 1) return false;
  if (j == n_ - 1 && std::abs(v - h_(i, n_)) != 1) return false;
  if (i == n_ - 1 && std::abs(v - h_(n_, j)) != 1) return false;
  return true;
}

std::optional<HeightFunction> EnumerationCursor::next() {
  if (done_) return std::nullopt;
  if (cells_ == 0) {
    done_ = true;
    ++yielded_;
    return HeightFunction::unchecked(n_, h_);
  }
  int k = 0;
  if (started_) {
    k = cells_ - 1;
    ++choice_[k];
  } else {
    started_ = true;
  }
  const int w = n_ - 1;
  for (;;) {
    if (choice_[k] >= 2) {
      choice_[k] = 0;
      if (--k < 0) {
        done_ = true;
        return std::nullopt;
      }
      ++choice_[k];
      continue;
    }
    const int i = k / w + 1;
    const int j = k % w + 1;
    const int v = h_(i - 1, j) + (choice_[k] == 0 ? -1 : 1);
    if (!fits(k, v)) {
      ++choice_[k];
      continue;
    }
    h_(i, j) = v;
    if (k == cells_ - 1) {
      ++yielded_;
      return HeightFunction::unchecked(n_, h_);
    }
    choice_[++k] = 0;
  }
}

std::vector<Asm> enumerate_asms(int n) {
  std::vector<Asm> out;
  for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

void for_each_asm(int n, const std::function<void(const Asm&)>& f) {
  EnumerationCursor cursor(n);
  while (auto h = cursor.next()) f(height_to_asm(*h));
}

// ---------------------------------------------------------------- lattice

namespace {

void same_size(const HeightFunction& a, const HeightFunction& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::SizeMismatch, "height functions of sizes " +
                                             std::to_string(a.size()) + " and " +
                                             std::to_string(b.size()));
  }
}

template <class Op>
HeightFunction entrywise(const HeightFunction& a, const HeightFunction& b, Op op) {
  same_size(a, b);
  const int n = a.size();
  Grid<int> h(n + 1, n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) h(i, j) = op(a.at(i, j), b.at(i, j));
  }
  return HeightFunction::unchecked(n, std::move(h));
}

}  // namespace

bool height_leq(const HeightFunction& a, const HeightFunction& b) {
  same_size(a, b);
  for (int i = 0; i <= a.size(); ++i) {
    for (int j = 0; j <= a.size(); ++j) {
      if (a.at(i, j) > b.at(i, j)) return false;
    }
  }
  return true;
}

HeightFunction height_meet(const HeightFunction& a, const HeightFunction& b) {
  return entrywise(a, b, [](int x, int y) { return std::min(x, y); });
}

HeightFunction height_join(const HeightFunction& a, const HeightFunction& b) {
  return entrywise(a, b, [](int x, int y) { return std::max(x, y); });
}

// ---------------------------------------------------------------- suites

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::RoundTrips: return "round-trips";
    case Suite::InvEquivalence: return "inv-equivalence";
    case Suite::Contributions: return "contributions";
    case Suite::Commuting: return "commuting";
    case Suite::Reflection: return "reflection";
  }
  return "?";
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : all_suites()) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  return {Suite::RoundTrips, Suite::InvEquivalence, Suite::Contributions,
          Suite::Commuting, Suite::Reflection};
}

namespace {

using Check = std::optional<std::string>;

Check round_trips(const Asm& a) {
  const int n = a.size();
  const HeightFunction h = asm_to_height(a);
  try {
    validate_height(h.rows());
  } catch (const Error&) {
    return "asm_to_height output is not a height function";
  }
  if (!(height_to_asm(h) == a)) return "height_to_asm(asm_to_height(a)) != a";
  if (!height_leq(HeightFunction::minimal(n), h) ||
      !height_leq(h, HeightFunction::maximal(n))) {
    return "height outside [h0, h_skew]";
  }
  const DyckIsland d = height_to_island(h);
  try {
    validate_island(n, d.rows());
  } catch (const Error&) {
    return "height_to_island output is not a Dyck island";
  }
  if (!(island_to_height(d) == h)) return "island_to_height(height_to_island(h)) != h";
  const Fpl f = asm_to_fpl(a);
  try {
    validate_fpl(f.codes());
  } catch (const Error&) {
    return "asm_to_fpl output is not a valid FPL";
  }
  if (!(fpl_to_asm(f) == a)) return "fpl_to_asm(asm_to_fpl(a)) != a";
  if (!(island_to_asm_direct(d) == a)) return "island_to_asm_direct(d) != a";
  if (!(fpl_to_island_via_paths(f) == d)) return "alternating paths do not give the island";
  return std::nullopt;
}

Check inv_equivalence(const Asm& a) {
  if (inv_theorem(asm_to_island(a)).first != inv_direct(a)) {
    return "inv_theorem != inv_direct";
  }
  return std::nullopt;
}

Check contributions(const Asm& a) {
  const DyckIsland d = asm_to_island(a);
  const BoundarySet bs = extract_boundaries(d);
  for (const auto& g : bs.loops) {
    if (corner_height_sum(g.swb) != g.semilength()) {
      return "alternating corner height sum != semilength";
    }
  }
  if (bs.loops.size() == 1) {
    const Loop& g = bs.loops.front();
    const std::string& w = g.swb.letters();
    for (std::size_t k = 1; k + 1 < g.swb_path.size(); ++k) {
      const LatticeVertex v = g.swb_path[k];
      const char x = w[k - 1], y = w[k];
      if (x == y) continue;
      const int av = a.at(v.i, v.j);
      if (v.on_diagonal()) {
        if (av != 0 && contribution(a, v) != 0) return "diagonal corner contributes";
        continue;
      }
      const int sign = x == 'u' ? 1 : -1;
      if (av != sign) return "swb corner entry has the wrong sign";
      if (contribution(a, v) != sign * v.height()) return "swb corner contribution != +-height";
    }
  }
  const auto [inv, r] = inv_theorem(d);
  if (r.k == 0) {
    for (const auto& lr : r.loops) {
      if (lr.c_swb != lr.c_swb_direct) return "C_swb formula != direct sum";
      if (lr.c_neb != lr.c_neb_direct) return "C_neb formula != direct sum";
    }
    if (r.diagonal_one_contribution != r.diagonal_one_nesting) {
      return "diagonal one contribution != nesting";
    }
    if (r.sum_contributions + r.diagonal_one_nesting != r.sum_inv_loops) {
      return "contribution identity fails";
    }
  }
  return std::nullopt;
}

Check commuting(const Asm& a) {
  const int n = a.size();
  const Fpl f = asm_to_fpl(a);
  const DyckIsland m = fpl_to_island_via_paths(f);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      const Box b{i, j};
      if (!(fpl_to_island_via_paths(plaquette_flip(f, b)) == update_at(m, b))) {
        return "M(f(phi)) != u(M(phi)) at box (" + std::to_string(i) + "," +
               std::to_string(j) + ")";
      }
    }
  }
  return std::nullopt;
}

Check reflection(const Asm& a) {
  const Asm t = reflect_diagonal(a);
  try {
    validate_asm(t.rows());
  } catch (const Error&) {
    return "transpose is not an ASM";
  }
  if (inv_direct(t) != inv_direct(a)) return "inv changes under reflection";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_item(Suite s, const Asm& a) {
  try {
    switch (s) {
      case Suite::RoundTrips: return round_trips(a);
      case Suite::InvEquivalence: return inv_equivalence(a);
      case Suite::Contributions: return contributions(a);
      case Suite::Commuting: return commuting(a);
      case Suite::Reflection: return reflection(a);
    }
  } catch (const Error& e) {
    return std::string("error: ") + e.what();
  }
  return std::nullopt;
}

std::vector<VerifyReport> verify_all(int n, const std::vector<Suite>& suites,
                                     const VerifyOptions& opts) {
  if (n < 1 || n > kMaxVerifySize) {
    throw Error(ErrorKind::BadShape, "verify supports 1 <= n <= " +
                                         std::to_string(kMaxVerifySize));
  }
  if (opts.shard_modulus < 1 || opts.shard_residue < 0 ||
      opts.shard_residue >= opts.shard_modulus) {
    throw Error(ErrorKind::BadShape, "invalid shard");
  }
  const std::vector<Asm> all = enumerate_asms(n);
  std::vector<std::size_t> picked;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (static_cast<int>(k % opts.shard_modulus) == opts.shard_residue) {
      picked.push_back(k);
    }
  }
  const int jobs = std::max(1, opts.jobs);
  std::vector<VerifyReport> reports;
  for (Suite s : suites) {
    const auto t0 = std::chrono::steady_clock::now();
    // Contiguous chunks; each keeps its earliest failures, merged by index.
    std::vector<std::vector<Failure>> found(jobs);
    auto work = [&](int w) {
      const std::size_t lo = picked.size() * w / jobs;
      const std::size_t hi = picked.size() * (w + 1) / jobs;
      for (std::size_t p = lo; p < hi && found[w].size() < opts.max_failures; ++p) {
        const Asm& a = all[picked[p]];
        if (auto why = check_item(s, a)) {
          found[w].push_back({picked[p], *why, a.rows()});
        }
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    VerifyReport r;
    r.suite = s;
    r.n = n;
    r.items = picked.size();
    for (auto& f : found) {
      for (auto& x : f) r.failures.push_back(std::move(x));
    }
    std::sort(r.failures.begin(), r.failures.end(),
              [](const Failure& x, const Failure& y) { return x.index < y.index; });
    if (r.failures.size() > opts.max_failures) r.failures.resize(opts.max_failures);
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace asmloops
