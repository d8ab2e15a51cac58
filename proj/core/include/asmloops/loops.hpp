#pragma once

// Boundary loops of Dyck islands and alternating paths on fully packed loops.
//
// Both are traced by the same routine over a set of internal lattice edges.
// At a vertex carrying four edges the tracer pairs North with East and West
// with South. For boundary paths this merges loops that meet on the diagonal
// and keeps loops that meet off the diagonal osculating.

#include <cstdint>
#include <utility>
#include <vector>

#include "asmloops/core.hpp"

namespace asmloops {

// Internal edges of the n x n vertex lattice.
//   east(i, j): (i, j) -- (i, j+1), 1 <= i <= n, 1 <= j < n
//   south(i, j): (i, j) -- (i+1, j), 1 <= i < n, 1 <= j <= n
class EdgeSet {
 public:
  explicit EdgeSet(int n);

  int size() const { return n_; }
  bool east(int i, int j) const { return east_(i, j) != 0; }
  bool south(int i, int j) const { return south_(i, j) != 0; }
  void set_east(int i, int j, bool on) { east_(i, j) = on ? 1 : 0; }
  void set_south(int i, int j, bool on) { south_(i, j) = on ? 1 : 0; }
  // False for directions leaving the lattice.
  bool has(LatticeVertex v, Direction d) const;
  void set(LatticeVertex a, LatticeVertex b, bool on);
  int degree(LatticeVertex v) const;
  int count() const;
  bool empty() const { return count() == 0; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int n_;
  Grid<std::uint8_t> east_;
  Grid<std::uint8_t> south_;
};

using Cycle = std::vector<LatticeVertex>;

EdgeSet edges_of(int n, const std::vector<Cycle>& cycles);

struct Loop {
  int n = 0;
  // Box level c whose region {delta >= c} this loop bounds.
  int level = 0;
  // Closed walk starting at the top-left diagonal vertex, out along the
  // northeast boundary and back along the southwest one.
  Cycle vertices;
  // Both run from start() to end() inclusive.
  std::vector<LatticeVertex> neb_path;
  std::vector<LatticeVertex> swb_path;
  DyckWord neb;
  DyckWord swb;
  Grid<std::uint8_t> interior;  // boxes 1..n-1

  LatticeVertex start() const { return neb_path.front(); }
  LatticeVertex end() const { return neb_path.back(); }
  int semilength() const { return neb.semilength(); }
  bool encloses(Box b) const { return interior(b.i, b.j) != 0; }
  // Vertex strictly inside the loop (not on it).
  bool encloses(LatticeVertex p) const;
  bool on_loop(LatticeVertex v) const;
  bool on_neb(LatticeVertex v) const;
  bool on_swb(LatticeVertex v) const;
};

struct DiagonalSets {
  // Diagonal vertices of the loop other than its two endpoints.
  std::vector<LatticeVertex> all;
  // The subset lying on the southwest boundary.
  std::vector<LatticeVertex> sw;
};

struct BoundarySet {
  int n = 0;
  std::vector<Loop> loops;  // ordered by start vertex
  std::vector<LatticeVertex> off_diagonal_osculations;
  std::vector<DiagonalSets> diagonal;  // parallel to loops
};

BoundarySet extract_boundaries(const DyckIsland& d);
// Edges across which the island value changes.
EdgeSet boundary_edges(const DyckIsland& d);

// Throws DiagonalCrossing if the walk is not a pair of Dyck paths.
std::pair<DyckWord, DyckWord> split_neb_swb(const Loop& g);
int semilength(const Loop& g);

int nesting_of_loop(const BoundarySet& bs, std::size_t index);
int nesting_of_point(const BoundarySet& bs, LatticeVertex p);
int off_diagonal_osculations(const BoundarySet& bs);
// Diagonal vertices where the neb and swb of one loop meet.
int diagonal_osculations(const Loop& g);

// The island whose only boundary is g.
DyckIsland standalone_island(const Loop& g);
// Diagonal ones strictly inside g, in the matrix of standalone_island(g).
int diag_ones_of_loop(const Loop& g);

struct AlternatingPath {
  int n = 0;
  std::vector<Cycle> loops;
};

// Edges whose colour differs between phi and psi, split into loops that
// alternate in both.
AlternatingPath alternating_diff(const Fpl& phi, const Fpl& psi);
bool is_alternating(const Fpl& phi, const Cycle& loop);
// Toggles every loop of p that alternates in phi.
Fpl flip_path(const Fpl& phi, const AlternatingPath& p);
Cycle plaquette(Box b);
Fpl plaquette_flip(const Fpl& phi, Box b);

// delta = +1 or -1. Unchanged when the neighbourhood does not permit it.
DyckIsland local_update(const DyckIsland& d, Box b, int delta);
// Whichever of +1 / -1 is permitted at b, if any.
DyckIsland update_at(const DyckIsland& d, Box b);

// Box value = number of cycles enclosing the box.
DyckIsland island_from_cycles(int n, const std::vector<Cycle>& cycles);
// Forgets colours: alternating paths on phi0 read as boundary paths.
DyckIsland fpl_to_island_via_paths(const Fpl& phi);
// Boxes whose plaquette flips, applied in order to phi0, produce phi.
std::vector<Box> plaquette_sequence(const Fpl& phi);

}  // namespace asmloops
