#include "asmloops/loops.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "asmloops/biject.hpp"

namespace asmloops {

namespace {

constexpr Direction kDirections[] = {Direction::North, Direction::East,
                                     Direction::South, Direction::West};

LatticeVertex step(LatticeVertex v, Direction d) {
  switch (d) {
    case Direction::North: return {v.i - 1, v.j};
    case Direction::East: return {v.i, v.j + 1};
    case Direction::South: return {v.i + 1, v.j};
    case Direction::West: return {v.i, v.j - 1};
  }
  return v;
}

Direction opposite(Direction d) {
  return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

Direction direction_between(LatticeVertex a, LatticeVertex b) {
  if (b.i == a.i - 1 && b.j == a.j) return Direction::North;
  if (b.i == a.i + 1 && b.j == a.j) return Direction::South;
  if (b.i == a.i && b.j == a.j + 1) return Direction::East;
  if (b.i == a.i && b.j == a.j - 1) return Direction::West;
  throw Error(ErrorKind::InternalError, "vertices are not adjacent");
}

std::string pos(LatticeVertex v) {
  return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

// Partner of `in` at a four-edge vertex. North-east pairing: N-E and W-S;
// otherwise N-W and E-S.
Direction partner(Direction in, bool north_east) {
  using D = Direction;
  if (north_east) {
    switch (in) {
      case D::North: return D::East;
      case D::East: return D::North;
      case D::West: return D::South;
      case D::South: return D::West;
    }
  }
  switch (in) {
    case D::North: return D::West;
    case D::West: return D::North;
    case D::East: return D::South;
    case D::South: return D::East;
  }
  return in;
}

template <class Pairing>
std::vector<Cycle> trace_cycles(const EdgeSet& edges, Pairing north_east) {
  const int n = edges.size();
  EdgeSet used(n);
  auto unused = [&](LatticeVertex v, Direction d) {
    return edges.has(v, d) && !used.has(v, d);
  };
  std::vector<Cycle> cycles;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const LatticeVertex start{i, j};
      while (std::any_of(std::begin(kDirections), std::end(kDirections),
                         [&](Direction d) { return unused(start, d); })) {
        // Row-major first vertex of an untraced cycle is its top-left corner.
        if (!unused(start, Direction::East) || !unused(start, Direction::South)) {
          throw Error(ErrorKind::InternalError,
                      "edge set is not a union of cycles at " + pos(start));
        }
        Cycle cycle{start};
        LatticeVertex cur = start;
        Direction dir = Direction::East;
        for (;;) {
          const LatticeVertex next = step(cur, dir);
          used.set(cur, next, true);
          cur = next;
          if (cur == start) break;
          cycle.push_back(cur);
          const Direction in = opposite(dir);
          const int deg = edges.degree(cur);
          if (deg == 2) {
            dir = in;
            for (Direction d : kDirections) {
              if (d != in && edges.has(cur, d)) dir = d;
            }
          } else if (deg == 4) {
            dir = partner(in, north_east(cur));
          } else {
            throw Error(ErrorKind::InternalError,
                        "odd vertex degree at " + pos(cur));
          }
          if (!unused(cur, dir)) {
            throw Error(ErrorKind::InternalError,
                        "tracing reused an edge at " + pos(cur));
          }
        }
        cycles.push_back(std::move(cycle));
      }
    }
  }
  return cycles;
}

Grid<std::uint8_t> interior_of(int n, const Cycle& c) {
  // Box (i, j) is inside iff an odd number of the cycle's vertical edges in
  // box row i lie at or left of column j.
  Grid<std::uint8_t> vertical(n, n, 1, 0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const LatticeVertex a = c[k];
    const LatticeVertex b = c[(k + 1) % c.size()];
    if (a.j == b.j) vertical(std::min(a.i, b.i), a.j) ^= 1;
  }
  Grid<std::uint8_t> inside(std::max(n - 1, 0), std::max(n - 1, 0), 1, 0);
  for (int i = 1; i < n; ++i) {
    int parity = 0;
    for (int j = 1; j < n; ++j) {
      parity ^= vertical(i, j);
      inside(i, j) = static_cast<std::uint8_t>(parity);
    }
  }
  return inside;
}

struct Split {
  std::vector<LatticeVertex> neb_path, swb_path;
  DyckWord neb, swb;
};

[[noreturn]] void crossing(const std::string& what) {
  throw Error(ErrorKind::DiagonalCrossing, what);
}

Split split_cycle(const Cycle& c) {
  if (c.size() < 4) crossing("loop too short");
  std::size_t q = 0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k].i + c[k].j > c[q].i + c[q].j) q = k;
  }
  if (!c.front().on_diagonal() || !c[q].on_diagonal()) {
    crossing("loop does not start and end on the diagonal");
  }
  Split s;
  s.neb_path.assign(c.begin(), c.begin() + static_cast<long>(q) + 1);
  s.swb_path.push_back(c.front());
  for (std::size_t k = c.size() - 1; k >= q; --k) {
    s.swb_path.push_back(c[k]);
    if (k == 0) break;
  }
  std::string neb, swb;
  for (std::size_t k = 0; k + 1 < s.neb_path.size(); ++k) {
    const LatticeVertex a = s.neb_path[k], b = s.neb_path[k + 1];
    if (b.j < b.i) crossing("northeast boundary below the diagonal at " + pos(b));
    const Direction d = direction_between(a, b);
    if (d == Direction::East) neb += 'u';
    else if (d == Direction::South) neb += 'd';
    else crossing("northeast boundary turns back at " + pos(a));
  }
  for (std::size_t k = 0; k + 1 < s.swb_path.size(); ++k) {
    const LatticeVertex a = s.swb_path[k], b = s.swb_path[k + 1];
    if (b.i < b.j) crossing("southwest boundary above the diagonal at " + pos(b));
    const Direction d = direction_between(a, b);
    if (d == Direction::South) swb += 'u';
    else if (d == Direction::East) swb += 'd';
    else crossing("southwest boundary turns back at " + pos(a));
  }
  if (!is_dyck_word(neb) || !is_dyck_word(swb) || neb.size() != swb.size()) {
    crossing("boundary halves are not Dyck paths of equal length");
  }
  s.neb = DyckWord::parse(neb);
  s.swb = DyckWord::parse(swb);
  return s;
}

bool contains(const std::vector<LatticeVertex>& path, LatticeVertex v) {
  return std::find(path.begin(), path.end(), v) != path.end();
}

}  // namespace

// ---------------------------------------------------------------- EdgeSet

EdgeSet::EdgeSet(int n)
    : n_(n), east_(n + 1, n + 1, 0, 0), south_(n + 1, n + 1, 0, 0) {}

bool EdgeSet::has(LatticeVertex v, Direction d) const {
  const LatticeVertex w = step(v, d);
  if (v.i < 1 || v.j < 1 || v.i > n_ || v.j > n_) return false;
  if (w.i < 1 || w.j < 1 || w.i > n_ || w.j > n_) return false;
  switch (d) {
    case Direction::North: return south(w.i, w.j);
    case Direction::South: return south(v.i, v.j);
    case Direction::West: return east(w.i, w.j);
    case Direction::East: return east(v.i, v.j);
  }
  return false;
}

void EdgeSet::set(LatticeVertex a, LatticeVertex b, bool on) {
  switch (direction_between(a, b)) {
    case Direction::North: set_south(b.i, b.j, on); break;
    case Direction::South: set_south(a.i, a.j, on); break;
    case Direction::West: set_east(b.i, b.j, on); break;
    case Direction::East: set_east(a.i, a.j, on); break;
  }
}

int EdgeSet::degree(LatticeVertex v) const {
  int deg = 0;
  for (Direction d : kDirections) deg += has(v, d) ? 1 : 0;
  return deg;
}

int EdgeSet::count() const {
  int c = 0;
  for (auto x : east_.data()) c += x;
  for (auto x : south_.data()) c += x;
  return c;
}

EdgeSet edges_of(int n, const std::vector<Cycle>& cycles) {
  EdgeSet e(n);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      e.set(c[k], c[(k + 1) % c.size()], true);
    }
  }
  return e;
}

// ---------------------------------------------------------------- Loop

bool Loop::on_loop(LatticeVertex v) const { return contains(vertices, v); }
bool Loop::on_neb(LatticeVertex v) const { return contains(neb_path, v); }
bool Loop::on_swb(LatticeVertex v) const { return contains(swb_path, v); }

bool Loop::encloses(LatticeVertex p) const {
  if (on_loop(p) || n < 2) return false;
  // Off the loop, all boxes around p lie on the same side.
  const int i = std::min(p.i, n - 1);
  const int j = std::min(p.j, n - 1);
  return encloses(Box{i, j});
}

// ---------------------------------------------------------------- boundaries

EdgeSet boundary_edges(const DyckIsland& d) {
  const int n = d.size();
  EdgeSet e(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < n; ++j) {
      // Separates box (i-1, j) above from box (i, j) below.
      e.set_east(i, j, d.padded(i - 1, j) != d.padded(i, j));
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      // Separates box (i, j-1) on the left from box (i, j) on the right.
      e.set_south(i, j, d.padded(i, j - 1) != d.padded(i, j));
    }
  }
  return e;
}

BoundarySet extract_boundaries(const DyckIsland& d) {
  const int n = d.size();
  BoundarySet bs;
  bs.n = n;
  for (Cycle& c : trace_cycles(boundary_edges(d), [](LatticeVertex) { return true; })) {
    Loop g;
    g.n = n;
    Split s = split_cycle(c);
    g.neb_path = std::move(s.neb_path);
    g.swb_path = std::move(s.swb_path);
    g.neb = std::move(s.neb);
    g.swb = std::move(s.swb);
    g.interior = interior_of(n, c);
    // The first edge runs east from the start, with the region below it.
    g.level = d.at(c.front().i, c.front().j);
    g.vertices = std::move(c);
    bs.loops.push_back(std::move(g));
  }
  std::map<LatticeVertex, std::vector<std::size_t>> owners;
  for (std::size_t k = 0; k < bs.loops.size(); ++k) {
    const Loop& g = bs.loops[k];
    DiagonalSets ds;
    for (const auto& v : g.vertices) {
      auto& o = owners[v];
      if (std::find(o.begin(), o.end(), k) == o.end()) o.push_back(k);
      if (v.on_diagonal() && v != g.start() && v != g.end() &&
          !contains(ds.all, v)) {
        ds.all.push_back(v);
        if (g.on_swb(v)) ds.sw.push_back(v);
      }
    }
    std::sort(ds.all.begin(), ds.all.end());
    std::sort(ds.sw.begin(), ds.sw.end());
    bs.diagonal.push_back(std::move(ds));
  }
  for (const auto& [v, o] : owners) {
    if (!v.on_diagonal() && o.size() >= 2) bs.off_diagonal_osculations.push_back(v);
  }
  return bs;
}

std::pair<DyckWord, DyckWord> split_neb_swb(const Loop& g) {
  Split s = split_cycle(g.vertices);
  return {std::move(s.neb), std::move(s.swb)};
}

int semilength(const Loop& g) { return g.semilength(); }

int nesting_of_loop(const BoundarySet& bs, std::size_t index) {
  const Loop& g = bs.loops.at(index);
  const Box inside{g.start().i, g.start().j};
  int count = 0;
  for (std::size_t k = 0; k < bs.loops.size(); ++k) {
    if (k != index && bs.loops[k].encloses(inside)) ++count;
  }
  return count;
}

int nesting_of_point(const BoundarySet& bs, LatticeVertex p) {
  int count = 0;
  for (const auto& g : bs.loops) count += g.encloses(p) ? 1 : 0;
  return count;
}

int off_diagonal_osculations(const BoundarySet& bs) {
  return static_cast<int>(bs.off_diagonal_osculations.size());
}

int diagonal_osculations(const Loop& g) {
  int count = 0;
  for (std::size_t k = 1; k + 1 < g.neb_path.size(); ++k) {
    const LatticeVertex v = g.neb_path[k];
    if (v.on_diagonal() && g.on_swb(v)) ++count;
  }
  return count;
}

DyckIsland standalone_island(const Loop& g) {
  Grid<int> boxes(g.n - 1, g.n - 1, 1);
  for (int i = 1; i < g.n; ++i) {
    for (int j = 1; j < g.n; ++j) boxes(i, j) = g.encloses(Box{i, j}) ? 1 : 0;
  }
  return DyckIsland::unchecked(g.n, std::move(boxes));
}

int diag_ones_of_loop(const Loop& g) {
  const Asm a = island_to_asm_direct(standalone_island(g));
  int count = 0;
  for (int t = 1; t <= g.n; ++t) {
    if (a.at(t, t) == 1 && g.encloses(LatticeVertex{t, t})) ++count;
  }
  return count;
}

// ---------------------------------------------------------------- FPL paths

AlternatingPath alternating_diff(const Fpl& phi, const Fpl& psi) {
  const int n = phi.size();
  if (psi.size() != n) throw Error(ErrorKind::SizeMismatch, "FPL sizes differ");
  const EdgeColoring a = phi.edges();
  const EdgeColoring b = psi.edges();
  EdgeSet diff(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < n; ++j) diff.set_east(i, j, a.east(i, j) != b.east(i, j));
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) diff.set_south(i, j, a.south(i, j) != b.south(i, j));
  }
  // North-east pairing alternates unless the reference vertex is a
  // west-south or east-north corner.
  auto north_east = [&](LatticeVertex v) {
    const VertexType t = psi.at(v.i, v.j);
    return t != VertexType::WestSouth && t != VertexType::EastNorth;
  };
  AlternatingPath p;
  p.n = n;
  p.loops = trace_cycles(diff, north_east);
  for (const auto& c : p.loops) {
    if (!is_alternating(phi, c) || !is_alternating(psi, c)) {
      throw Error(ErrorKind::NotAlternating,
                  "difference loop through " + pos(c.front()) +
                      " does not alternate");
    }
  }
  return p;
}

bool is_alternating(const Fpl& phi, const Cycle& loop) {
  if (loop.size() < 4 || loop.size() % 2 != 0) return false;
  const EdgeColoring e = phi.edges();
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const LatticeVertex a = loop[k];
    const LatticeVertex b = loop[(k + 1) % loop.size()];
    const LatticeVertex c = loop[(k + 2) % loop.size()];
    if (e.dark(a, direction_between(a, b)) == e.dark(b, direction_between(b, c))) {
      return false;
    }
  }
  return true;
}

Fpl flip_path(const Fpl& phi, const AlternatingPath& p) {
  EdgeColoring e = phi.edges();
  for (const auto& c : p.loops) {
    if (!is_alternating(phi, c)) continue;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const LatticeVertex a = c[k];
      const LatticeVertex b = c[(k + 1) % c.size()];
      if (a.i == b.i) {
        e.toggle_east(a.i, std::min(a.j, b.j));
      } else {
        e.toggle_south(std::min(a.i, b.i), a.j);
      }
    }
  }
  return Fpl::from_edges(e);
}

Cycle plaquette(Box b) {
  return {{b.i, b.j}, {b.i, b.j + 1}, {b.i + 1, b.j + 1}, {b.i + 1, b.j}};
}

Fpl plaquette_flip(const Fpl& phi, Box b) {
  return flip_path(phi, AlternatingPath{phi.size(), {plaquette(b)}});
}

// ---------------------------------------------------------------- updates

DyckIsland local_update(const DyckIsland& d, Box b, int delta) {
  const int c = d.at(b.i, b.j);
  const int up = d.padded(b.i - 1, b.j);
  const int down = d.padded(b.i + 1, b.j);
  const int left = d.padded(b.i, b.j - 1);
  const int right = d.padded(b.i, b.j + 1);
  // Neighbours towards the diagonal hold a + 1 off the diagonal; a is the
  // value of those facing away.
  int a;
  bool pattern;
  if (b.i == b.j) {
    a = up;
    pattern = down == a && left == a && right == a;
  } else if (b.i < b.j) {
    a = up;
    pattern = right == a && left == a + 1 && down == a + 1;
  } else {
    a = left;
    pattern = down == a && up == a + 1 && right == a + 1;
  }
  if (!pattern) return d;
  int next = c;
  if (delta == 1 && c == a) next = a + 1;
  if (delta == -1 && c == a + 1) next = a;
  if (next == c) return d;
  const int n = d.size();
  Grid<int> boxes(n - 1, n - 1, 1);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) boxes(i, j) = d.at(i, j);
  }
  boxes(b.i, b.j) = next;
  return DyckIsland::unchecked(n, std::move(boxes));
}

DyckIsland update_at(const DyckIsland& d, Box b) {
  DyckIsland up = local_update(d, b, 1);
  if (!(up == d)) return up;
  return local_update(d, b, -1);
}

DyckIsland island_from_cycles(int n, const std::vector<Cycle>& cycles) {
  Grid<int> boxes(n - 1, n - 1, 1, 0);
  for (const auto& c : cycles) {
    const Grid<std::uint8_t> inside = interior_of(n, c);
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) boxes(i, j) += inside(i, j);
    }
  }
  return DyckIsland::unchecked(n, std::move(boxes));
}

DyckIsland fpl_to_island_via_paths(const Fpl& phi) {
  const int n = phi.size();
  const AlternatingPath p = alternating_diff(phi, phi0(n));
  return validate_island(n, island_from_cycles(n, p.loops).rows());
}

std::vector<Box> plaquette_sequence(const Fpl& phi) {
  const int n = phi.size();
  std::vector<Box> peeled;
  Fpl cur = phi;
  DyckIsland d = fpl_to_island_via_paths(cur);
  while (!d.is_zero()) {
    bool progressed = false;
    for (int i = 1; i < n && !progressed; ++i) {
      for (int j = 1; j < n && !progressed; ++j) {
        DyckIsland lower = local_update(d, Box{i, j}, -1);
        if (lower == d) continue;
        cur = plaquette_flip(cur, Box{i, j});
        d = std::move(lower);
        peeled.push_back(Box{i, j});
        progressed = true;
      }
    }
    if (!progressed) {
      throw Error(ErrorKind::InternalError, "no removable box in a nonzero island");
    }
  }
  if (!(cur == phi0(n))) {
    throw Error(ErrorKind::InternalError, "peeling did not reach phi0");
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

}  // namespace asmloops
