#include "asmloops/core.hpp"

#include <cstdlib>
#include <sstream>

namespace asmloops {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::BadEntry: return "BadEntry";
    case ErrorKind::RowSum: return "RowSum";
    case ErrorKind::ColSum: return "ColSum";
    case ErrorKind::AlternationViolation: return "AlternationViolation";
    case ErrorKind::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorKind::BorderValue: return "BorderValue";
    case ErrorKind::StepViolation: return "StepViolation";
    case ErrorKind::NotAHeightFunction: return "NotAHeightFunction";
    case ErrorKind::InvalidFpl: return "InvalidFpl";
    case ErrorKind::InconsistentSigns: return "InconsistentSigns";
    case ErrorKind::NotADyckWord: return "NotADyckWord";
    case ErrorKind::DiagonalCrossing: return "DiagonalCrossing";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::BadEndpoints: return "BadEndpoints";
    case ErrorKind::ZeroVertex: return "ZeroVertex";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

namespace {

std::string at_pos(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

template <class T>
IntMatrix to_rows(const Grid<T>& g) {
  IntMatrix out(g.rows(), std::vector<int>(g.cols()));
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      out[r][c] = static_cast<int>(g(r + g.origin(), c + g.origin()));
    }
  }
  return out;
}

void require_square(const IntMatrix& raw, std::size_t n, std::string_view what) {
  if (raw.size() != n) {
    throw Error(ErrorKind::BadShape, std::string(what) + " must have " +
                                         std::to_string(n) + " rows");
  }
  for (const auto& row : raw) {
    if (row.size() != n) {
      throw Error(ErrorKind::BadShape,
                  std::string(what) + " must be square");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- Asm

Asm Asm::identity(int n) {
  Grid<int> g(n, n, 1);
  for (int i = 1; i <= n; ++i) g(i, i) = 1;
  return Asm(n, std::move(g));
}

Asm Asm::skew_identity(int n) {
  Grid<int> g(n, n, 1);
  for (int i = 1; i <= n; ++i) g(i, n + 1 - i) = 1;
  return Asm(n, std::move(g));
}

Asm Asm::unchecked(int n, Grid<int> entries) { return Asm(n, std::move(entries)); }

IntMatrix Asm::rows() const { return to_rows(entries_); }

Asm validate_asm(const IntMatrix& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw Error(ErrorKind::BadShape, "empty matrix");
  require_square(raw, n, "ASM");
  Grid<int> g(n, n, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int v = raw[i - 1][j - 1];
      if (v < -1 || v > 1) {
        throw Error(ErrorKind::BadEntry, "entry " + at_pos(i, j) + " = " +
                                             std::to_string(v));
      }
      g(i, j) = v;
    }
  }
  for (int i = 1; i <= n; ++i) {
    int s = 0;
    for (int j = 1; j <= n; ++j) s += g(i, j);
    if (s != 1) {
      throw Error(ErrorKind::RowSum, "row " + std::to_string(i) + " sums to " +
                                         std::to_string(s));
    }
  }
  for (int j = 1; j <= n; ++j) {
    int s = 0;
    for (int i = 1; i <= n; ++i) s += g(i, j);
    if (s != 1) {
      throw Error(ErrorKind::ColSum, "column " + std::to_string(j) +
                                         " sums to " + std::to_string(s));
    }
  }
  // With total sum 1, alternation starting and ending at +1 is equivalent to
  // every partial sum lying in {0, 1}.
  for (int i = 1; i <= n; ++i) {
    int s = 0;
    for (int j = 1; j <= n; ++j) {
      s += g(i, j);
      if (s < 0 || s > 1) {
        throw Error(ErrorKind::AlternationViolation,
                    "row " + std::to_string(i) + " at " + at_pos(i, j));
      }
    }
  }
  for (int j = 1; j <= n; ++j) {
    int s = 0;
    for (int i = 1; i <= n; ++i) {
      s += g(i, j);
      if (s < 0 || s > 1) {
        throw Error(ErrorKind::AlternationViolation,
                    "column " + std::to_string(j) + " at " + at_pos(i, j));
      }
    }
  }
  return Asm::unchecked(n, std::move(g));
}

// ---------------------------------------------------------------- vertex types

int code(VertexType t) { return static_cast<int>(t); }

VertexType vertex_type_from_code(int c) {
  if (c < 1 || c > 6) {
    throw Error(ErrorKind::BadEntry, "vertex type " + std::to_string(c));
  }
  return static_cast<VertexType>(c);
}

std::uint8_t dark_mask(VertexType t) {
  using D = Direction;
  switch (t) {
    case VertexType::WestSouth: return bit(D::West) | bit(D::South);
    case VertexType::EastNorth: return bit(D::East) | bit(D::North);
    case VertexType::EastSouth: return bit(D::East) | bit(D::South);
    case VertexType::WestNorth: return bit(D::West) | bit(D::North);
    case VertexType::Horizontal: return bit(D::West) | bit(D::East);
    case VertexType::Vertical: return bit(D::North) | bit(D::South);
  }
  return 0;
}

VertexType vertex_type_from_mask(std::uint8_t mask) {
  for (int c = 1; c <= 6; ++c) {
    if (dark_mask(static_cast<VertexType>(c)) == mask) {
      return static_cast<VertexType>(c);
    }
  }
  throw Error(ErrorKind::InvalidFpl,
              "vertex without exactly two dark edges (mask " +
                  std::to_string(mask) + ")");
}

bool is_corner(VertexType t) { return code(t) <= 4; }

// ---------------------------------------------------------------- edges

// Both grids are (n+1) x (n+1) from origin 0; row 0 of east_ and column 0
// of south_ are unused.
EdgeColoring::EdgeColoring(int n)
    : n_(n), east_(n + 1, n + 1, 0), south_(n + 1, n + 1, 0) {}

bool EdgeColoring::dark(LatticeVertex v, Direction d) const {
  switch (d) {
    case Direction::North: return south(v.i - 1, v.j);
    case Direction::South: return south(v.i, v.j);
    case Direction::West: return east(v.i, v.j - 1);
    case Direction::East: return east(v.i, v.j);
  }
  return false;
}

std::uint8_t EdgeColoring::mask(LatticeVertex v) const {
  std::uint8_t m = 0;
  for (auto d : {Direction::North, Direction::East, Direction::South,
                 Direction::West}) {
    if (dark(v, d)) m |= bit(d);
  }
  return m;
}

bool dwbc_left_dark(int, int i) { return i % 2 == 0; }
bool dwbc_right_dark(int n, int i) { return (1 + i + n) % 2 == 0; }
bool dwbc_top_dark(int, int j) { return j % 2 == 1; }
bool dwbc_bottom_dark(int n, int j) { return (n + j) % 2 == 0; }

namespace {

void check_boundary(const EdgeColoring& e) {
  const int n = e.size();
  for (int i = 1; i <= n; ++i) {
    if (e.east(i, 0) != dwbc_left_dark(n, i) ||
        e.east(i, n) != dwbc_right_dark(n, i)) {
      throw Error(ErrorKind::InvalidFpl,
                  "domain-wall boundary violated in row " + std::to_string(i));
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (e.south(0, j) != dwbc_top_dark(n, j) ||
        e.south(n, j) != dwbc_bottom_dark(n, j)) {
      throw Error(ErrorKind::InvalidFpl,
                  "domain-wall boundary violated in column " +
                      std::to_string(j));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- Fpl

Fpl Fpl::unchecked(int n, Grid<VertexType> types) {
  return Fpl(n, std::move(types));
}

Fpl Fpl::from_edges(const EdgeColoring& edges) {
  const int n = edges.size();
  check_boundary(edges);
  Grid<VertexType> types(n, n, 1, VertexType::Vertical);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      types(i, j) = vertex_type_from_mask(edges.mask({i, j}));
    }
  }
  return Fpl(n, std::move(types));
}

EdgeColoring Fpl::edges() const {
  EdgeColoring e(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      const auto m = dark_mask(types_(i, j));
      if (m & bit(Direction::East)) e.set_east(i, j, true);
      if (m & bit(Direction::West)) e.set_east(i, j - 1, true);
      if (m & bit(Direction::South)) e.set_south(i, j, true);
      if (m & bit(Direction::North)) e.set_south(i - 1, j, true);
    }
  }
  return e;
}

IntMatrix Fpl::codes() const { return to_rows(types_); }

Fpl validate_fpl(const IntMatrix& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw Error(ErrorKind::BadShape, "empty FPL");
  require_square(raw, n, "FPL");
  Grid<VertexType> types(n, n, 1, VertexType::Vertical);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      types(i, j) = vertex_type_from_code(raw[i - 1][j - 1]);
    }
  }
  auto has = [&](int i, int j, Direction d) {
    return (dark_mask(types(i, j)) & bit(d)) != 0;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j < n && has(i, j, Direction::East) != has(i, j + 1, Direction::West)) {
        throw Error(ErrorKind::InvalidFpl, "vertices " + at_pos(i, j) + " and " +
                                               at_pos(i, j + 1) +
                                               " disagree on their edge");
      }
      if (i < n && has(i, j, Direction::South) != has(i + 1, j, Direction::North)) {
        throw Error(ErrorKind::InvalidFpl, "vertices " + at_pos(i, j) + " and " +
                                               at_pos(i + 1, j) +
                                               " disagree on their edge");
      }
    }
  }
  Fpl fpl = Fpl::unchecked(n, std::move(types));
  check_boundary(fpl.edges());
  return fpl;
}

VertexType classify_vertex(const Fpl& fpl, LatticeVertex v) {
  return vertex_type_from_mask(fpl.edges().mask(v));
}

// ---------------------------------------------------------------- heights

HeightFunction HeightFunction::unchecked(int n, Grid<int> h) {
  return HeightFunction(n, std::move(h));
}

HeightFunction HeightFunction::minimal(int n) {
  Grid<int> h(n + 1, n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) h(i, j) = i > j ? i - j : j - i;
  }
  return HeightFunction(n, std::move(h));
}

HeightFunction HeightFunction::maximal(int n) {
  Grid<int> h(n + 1, n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      h(i, j) = i + j <= n ? i + j : 2 * n - i - j;
    }
  }
  return HeightFunction(n, std::move(h));
}

IntMatrix HeightFunction::rows() const { return to_rows(h_); }

HeightFunction validate_height(const IntMatrix& raw) {
  const int n = static_cast<int>(raw.size()) - 1;
  if (n < 1) throw Error(ErrorKind::NotAHeightFunction, "need at least 2 rows");
  for (const auto& row : raw) {
    if (static_cast<int>(row.size()) != n + 1) {
      throw Error(ErrorKind::NotAHeightFunction, "matrix must be square");
    }
  }
  Grid<int> h(n + 1, n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) h(i, j) = raw[i][j];
  }
  for (int k = 0; k <= n; ++k) {
    if (h(0, k) != k || h(k, 0) != k || h(n, k) != n - k || h(k, n) != n - k) {
      throw Error(ErrorKind::NotAHeightFunction,
                  "border entries are fixed (index " + std::to_string(k) + ")");
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (j < n && std::abs(h(i, j) - h(i, j + 1)) != 1) {
        throw Error(ErrorKind::NotAHeightFunction,
                    "non-unit step right of " + at_pos(i, j));
      }
      if (i < n && std::abs(h(i, j) - h(i + 1, j)) != 1) {
        throw Error(ErrorKind::NotAHeightFunction,
                    "non-unit step below " + at_pos(i, j));
      }
    }
  }
  return HeightFunction::unchecked(n, std::move(h));
}

// ---------------------------------------------------------------- islands

DyckIsland DyckIsland::zero(int n) {
  return DyckIsland(n, Grid<int>(n - 1, n - 1, 1));
}

DyckIsland DyckIsland::unchecked(int n, Grid<int> boxes) {
  return DyckIsland(n, std::move(boxes));
}

IntMatrix DyckIsland::rows() const { return to_rows(boxes_); }

bool DyckIsland::is_zero() const {
  for (int v : boxes_.data()) {
    if (v != 0) return false;
  }
  return true;
}

DyckIsland validate_island(int n, const IntMatrix& raw) {
  if (n < 1) throw Error(ErrorKind::BadShape, "island size must be positive");
  const int m = n - 1;
  require_square(raw, m, "Dyck island");
  Grid<int> g(m, m, 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int v = raw[i - 1][j - 1];
      if (v < 0) {
        throw Error(ErrorKind::BadEntry, "negative box " + at_pos(i, j));
      }
      g(i, j) = v;
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const bool border = i == 1 || j == 1 || i == m || j == m;
      if (border && g(i, j) > 1) {
        throw Error(ErrorKind::BorderValue, "border box " + at_pos(i, j) +
                                                " = " + std::to_string(g(i, j)));
      }
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i < m && std::abs(g(i, j) - g(i + 1, j)) > 1) {
        throw Error(ErrorKind::StepViolation, "below " + at_pos(i, j));
      }
      if (j < m && std::abs(g(i, j) - g(i, j + 1)) > 1) {
        throw Error(ErrorKind::StepViolation, "right of " + at_pos(i, j));
      }
    }
  }
  // Weakly decreasing away from the diagonal: on or below it, moving down or
  // left never increases; on or above it, moving up or right never increases.
  // The local steps chain to the full wedge conditions.
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int v = g(i, j);
      bool ok = true;
      if (i >= j) {
        if (i < m && g(i + 1, j) > v) ok = false;
        if (j > 1 && g(i, j - 1) > v) ok = false;
      }
      if (i <= j) {
        if (i > 1 && g(i - 1, j) > v) ok = false;
        if (j < m && g(i, j + 1) > v) ok = false;
      }
      if (!ok) {
        throw Error(ErrorKind::MonotonicityViolation,
                    "box " + at_pos(i, j) + " is exceeded farther from the diagonal");
      }
    }
  }
  return DyckIsland::unchecked(n, std::move(g));
}

DyckIsland validate_island(const IntMatrix& raw) {
  return validate_island(static_cast<int>(raw.size()) + 1, raw);
}

// ---------------------------------------------------------------- words

bool is_dyck_word(std::string_view letters) {
  int depth = 0;
  for (char c : letters) {
    if (c == 'u') {
      ++depth;
    } else if (c == 'd') {
      if (--depth < 0) return false;
    } else {
      return false;
    }
  }
  return depth == 0;
}

DyckWord DyckWord::parse(std::string_view letters) {
  if (!is_dyck_word(letters)) {
    throw Error(ErrorKind::NotADyckWord, "'" + std::string(letters) + "'");
  }
  return DyckWord(std::string(letters));
}

}  // namespace asmloops
