#pragma once

// Core representations: alternating sign matrices, fully packed loops,
// height functions and Dyck islands, plus the lattice-coordinate types shared
// by every other module.
//
// Index conventions (used everywhere):
//   * ASM entries and FPL vertices are (i, j), 1 <= i, j <= n, row 1 at top.
//   * Height functions are indexed 0..n in both directions.
//   * Dyck-island boxes are (i, j), 1 <= i, j <= n-1. Box (i, j) is the
//     plaquette whose top-left corner is vertex (i, j); it pairs with the
//     interior height-function entry h[i][j].

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asmloops {

using IntMatrix = std::vector<std::vector<int>>;

enum class ErrorKind {
  BadShape,
  BadEntry,
  RowSum,
  ColSum,
  AlternationViolation,
  MonotonicityViolation,
  BorderValue,
  StepViolation,
  NotAHeightFunction,
  InvalidFpl,
  InconsistentSigns,
  NotADyckWord,
  DiagonalCrossing,
  NotAlternating,
  BadEndpoints,
  ZeroVertex,
  SizeMismatch,
  ParseError,
  UnknownKind,
  UnsupportedCombination,
  InternalError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Dense row-major matrix whose indices start at `origin` in both directions.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, int origin, T fill = T{})
      : rows_(rows), cols_(cols), origin_(origin),
        data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int origin() const { return origin_; }

  bool contains(int i, int j) const {
    return i >= origin_ && j >= origin_ && i < origin_ + rows_ &&
           j < origin_ + cols_;
  }
  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - origin_) * cols_ + (j - origin_);
  }

  int rows_ = 0;
  int cols_ = 0;
  int origin_ = 0;
  std::vector<T> data_;
};

struct LatticeVertex {
  int i = 0;
  int j = 0;

  int height() const { return i > j ? i - j : j - i; }
  bool on_diagonal() const { return i == j; }

  friend auto operator<=>(const LatticeVertex&, const LatticeVertex&) = default;
};

// A plaquette of the vertex lattice / box of a Dyck island.
struct Box {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

class Asm {
 public:
  static Asm identity(int n);
  static Asm skew_identity(int n);
  // Caller guarantees the alternating-sign invariants.
  static Asm unchecked(int n, Grid<int> entries);

  int size() const { return n_; }
  int at(int i, int j) const { return entries_(i, j); }
  IntMatrix rows() const;

  friend bool operator==(const Asm&, const Asm&) = default;

 private:
  Asm(int n, Grid<int> entries) : n_(n), entries_(std::move(entries)) {}
  int n_ = 0;
  Grid<int> entries_;
};

Asm validate_asm(const IntMatrix& raw);

enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

constexpr std::uint8_t bit(Direction d) {
  return static_cast<std::uint8_t>(1u << static_cast<unsigned>(d));
}

// The six admissible local configurations of two dark edges at a vertex.
// Types 1-4 are corners, 5 is a horizontal through-line, 6 a vertical one.
enum class VertexType : std::uint8_t {
  WestSouth = 1,
  EastNorth = 2,
  EastSouth = 3,
  WestNorth = 4,
  Horizontal = 5,
  Vertical = 6,
};

int code(VertexType t);
VertexType vertex_type_from_code(int code);  // throws BadEntry
std::uint8_t dark_mask(VertexType t);
// Inverse of dark_mask; throws InvalidFpl unless exactly two bits are set.
VertexType vertex_type_from_mask(std::uint8_t mask);
bool is_corner(VertexType t);

// Edge colors of an FPL including the 4n external edges.
//   east(i, j), 1 <= i <= n, 0 <= j <= n: edge between (i, j) and (i, j+1);
//     j = 0 and j = n are the external left/right edges of row i.
//   south(i, j), 0 <= i <= n, 1 <= j <= n: edge between (i, j) and (i+1, j);
//     i = 0 and i = n are the external top/bottom edges of column j.
class EdgeColoring {
 public:
  explicit EdgeColoring(int n);

  int size() const { return n_; }
  bool east(int i, int j) const { return east_(i, j) != 0; }
  bool south(int i, int j) const { return south_(i, j) != 0; }
  void set_east(int i, int j, bool dark) { east_(i, j) = dark ? 1 : 0; }
  void set_south(int i, int j, bool dark) { south_(i, j) = dark ? 1 : 0; }
  void toggle_east(int i, int j) { east_(i, j) ^= 1; }
  void toggle_south(int i, int j) { south_(i, j) ^= 1; }

  // Colour of the edge leaving vertex v in direction d.
  bool dark(LatticeVertex v, Direction d) const;
  std::uint8_t mask(LatticeVertex v) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int n_;
  Grid<std::uint8_t> east_;
  Grid<std::uint8_t> south_;
};

// Domain-wall boundary pattern: which external edges are dark.
bool dwbc_left_dark(int n, int i);
bool dwbc_right_dark(int n, int i);
bool dwbc_top_dark(int n, int j);
bool dwbc_bottom_dark(int n, int j);

class Fpl {
 public:
  // Validates six-vertex consistency and the domain-wall boundary.
  static Fpl from_edges(const EdgeColoring& edges);
  static Fpl unchecked(int n, Grid<VertexType> types);

  int size() const { return n_; }
  VertexType at(int i, int j) const { return types_(i, j); }
  EdgeColoring edges() const;
  IntMatrix codes() const;

  friend bool operator==(const Fpl&, const Fpl&) = default;

 private:
  Fpl(int n, Grid<VertexType> types) : n_(n), types_(std::move(types)) {}
  int n_ = 0;
  Grid<VertexType> types_;
};

Fpl validate_fpl(const IntMatrix& codes);
VertexType classify_vertex(const Fpl& fpl, LatticeVertex v);

class HeightFunction {
 public:
  static HeightFunction unchecked(int n, Grid<int> h);
  // Heights of the identity (global minimum) and skew identity (maximum).
  static HeightFunction minimal(int n);
  static HeightFunction maximal(int n);

  int size() const { return n_; }
  int at(int i, int j) const { return h_(i, j); }
  IntMatrix rows() const;

  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
  friend auto operator<=>(const HeightFunction& a, const HeightFunction& b) {
    return a.h_.data() <=> b.h_.data();
  }

 private:
  HeightFunction(int n, Grid<int> h) : n_(n), h_(std::move(h)) {}
  int n_ = 0;
  Grid<int> h_;
};

// Throws NotAHeightFunction.
HeightFunction validate_height(const IntMatrix& raw);

class DyckIsland {
 public:
  static DyckIsland zero(int n);
  static DyckIsland unchecked(int n, Grid<int> boxes);

  // Size of the paired ASM; the island itself is (n-1) x (n-1).
  int size() const { return n_; }
  int at(int i, int j) const { return boxes_(i, j); }
  // Box value with the implicit zero frame around the tableau.
  int padded(int i, int j) const {
    return boxes_.contains(i, j) ? boxes_(i, j) : 0;
  }
  IntMatrix rows() const;
  bool is_zero() const;

  friend bool operator==(const DyckIsland&, const DyckIsland&) = default;

 private:
  DyckIsland(int n, Grid<int> boxes) : n_(n), boxes_(std::move(boxes)) {}
  int n_ = 0;
  Grid<int> boxes_;
};

// `n` is the ASM size; `raw` must be (n-1) x (n-1).
DyckIsland validate_island(int n, const IntMatrix& raw);
// Infers n from the row count (n = rows + 1).
DyckIsland validate_island(const IntMatrix& raw);

class DyckWord {
 public:
  DyckWord() = default;
  // Throws NotADyckWord.
  static DyckWord parse(std::string_view letters);

  const std::string& letters() const { return letters_; }
  int semilength() const { return static_cast<int>(letters_.size() / 2); }

  friend bool operator==(const DyckWord&, const DyckWord&) = default;

 private:
  explicit DyckWord(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

bool is_dyck_word(std::string_view letters);

}  // namespace asmloops
