#include "render.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "asmloops/loops.hpp"

namespace asmloops::render {

namespace {

// Canvas of single glyphs, each possibly multibyte.
class Canvas {
 public:
  Canvas(int rows, int cols) : cells_(rows, std::vector<std::string>(cols, " ")) {}
  void put(int r, int c, std::string g) { cells_[r][c] = std::move(g); }
  std::string str() const {
    std::string out;
    for (const auto& row : cells_) {
      std::string line;
      for (const auto& g : row) line += g;
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> cells_;
};

constexpr std::uint8_t N = bit(Direction::North), E = bit(Direction::East),
                       S = bit(Direction::South), W = bit(Direction::West);

std::string light_junction(std::uint8_t m) {
  switch (m) {
    case E | W: return "─";
    case N | S: return "│";
    case E | S: return "┌";
    case W | S: return "┐";
    case N | E: return "└";
    case N | W: return "┘";
    case N | E | S | W: return "┼";
  }
  return "+";
}

std::string heavy_junction(std::uint8_t m) {
  switch (m) {
    case E | W: return "━";
    case N | S: return "┃";
    case E | S: return "┏";
    case W | S: return "┓";
    case N | E: return "┗";
    case N | W: return "┛";
  }
  return "+";
}

std::string matrix_text(const IntMatrix& m) {
  std::size_t w = 1;
  for (const auto& row : m) {
    for (int x : row) w = std::max(w, std::to_string(x).size());
  }
  std::string out;
  for (const auto& row : m) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::string s = std::to_string(row[k]);
      if (k) line += ' ';
      line += std::string(w - s.size(), ' ') + s;
    }
    out += line + '\n';
  }
  return out;
}

std::string num(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

std::string line(double x1, double y1, double x2, double y2, const char* cls) {
  return "<line class=\"" + std::string(cls) + "\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) +
         "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) + "\"/>\n";
}

std::string header(double w, double h, const char* style) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
         num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n<style>" + style +
         "</style>\n";
}

}  // namespace

std::string ascii(const DyckIsland& d, const RenderSpec& spec) {
  const int n = d.size();
  const int m = n - 1;  // boxes per side
  Canvas c(2 * m + 1, 4 * m + 1);
  const EdgeSet e = boundary_edges(d);
  std::set<LatticeVertex> osc;
  if (spec.osculations && spec.boundaries) {
    const BoundarySet bs = extract_boundaries(d);
    osc.insert(bs.off_diagonal_osculations.begin(), bs.off_diagonal_osculations.end());
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int r = 2 * (i - 1), col = 4 * (j - 1);
      std::uint8_t mask = 0;
      if (spec.boundaries) {
        for (Direction dir : {Direction::North, Direction::East, Direction::South,
                              Direction::West}) {
          if (e.has({i, j}, dir)) mask |= bit(dir);
        }
      }
      if (osc.count({i, j})) {
        c.put(r, col, "*");
      } else if (mask) {
        c.put(r, col, light_junction(mask));
      } else if (spec.grid) {
        c.put(r, col, "·");
      }
      if (spec.boundaries && j < n && e.east(i, j)) {
        for (int k = 1; k <= 3; ++k) c.put(r, col + k, "─");
      }
      if (spec.boundaries && i < n && e.south(i, j)) c.put(r + 1, col, "│");
      if (spec.entries && i < n && j < n) {
        c.put(r + 1, col + 2, std::to_string(d.at(i, j)));
      }
    }
  }
  return c.str();
}

std::string ascii(const Fpl& f, const RenderSpec& spec) {
  const int n = f.size();
  const EdgeColoring ec = f.edges();
  // Vertex (i, j) sits at row 2i-1, column 4j-2; external stubs fill the margin.
  Canvas c(2 * n + 1, 4 * n + 1);
  const bool dark = spec.dark_edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const int r = 2 * i - 1;
      const int lo = j == 0 ? 0 : 4 * j - 1, hi = j == n ? 4 * n : 4 * j + 1;
      if (dark && ec.east(i, j)) {
        for (int k = lo; k <= hi; ++k) c.put(r, k, "━");
      } else if (spec.grid) {
        c.put(r, (lo + hi) / 2, "·");
      }
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int col = 4 * j - 2;
      if (dark && ec.south(i, j)) {
        c.put(2 * i, col, "┃");
      } else if (spec.grid) {
        c.put(2 * i, col, "·");
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      c.put(2 * i - 1, 4 * j - 2, dark ? heavy_junction(dark_mask(f.at(i, j))) : "o");
    }
  }
  return c.str();
}

std::string ascii(const Asm& a) { return matrix_text(a.rows()); }
std::string ascii(const HeightFunction& h) { return matrix_text(h.rows()); }

std::string svg(const DyckIsland& d, const RenderSpec& spec) {
  const int n = d.size();
  const double cs = spec.cell_size, mg = cs / 2;
  const double side = 2 * mg + cs * (n - 1);
  auto x = [&](int j) { return mg + cs * (j - 1); };
  auto y = [&](int i) { return mg + cs * (i - 1); };
  std::string out = header(side, side,
                           ".grid{stroke:#bbb;stroke-width:1}"
                           ".diag{stroke:#bbb;stroke-dasharray:4 4}"
                           ".boundary{stroke:#c00;stroke-width:3}"
                           ".osc{fill:#00c}"
                           "text{font-family:monospace;text-anchor:middle;"
                           "dominant-baseline:central}");
  if (spec.grid) {
    for (int k = 1; k <= n; ++k) {
      out += line(x(1), y(k), x(n), y(k), "grid");
      out += line(x(k), y(1), x(k), y(n), "grid");
    }
    out += line(x(1), y(1), x(n), y(n), "diag");
  }
  if (spec.entries) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        out += "<text x=\"" + num(x(j) + cs / 2) + "\" y=\"" + num(y(i) + cs / 2) + "\">" +
               std::to_string(d.at(i, j)) + "</text>\n";
      }
    }
  }
  if (spec.boundaries) {
    const EdgeSet e = boundary_edges(d);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (e.east(i, j)) out += line(x(j), y(i), x(j + 1), y(i), "boundary");
      }
    }
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (e.south(i, j)) out += line(x(j), y(i), x(j), y(i + 1), "boundary");
      }
    }
    if (spec.osculations) {
      for (const auto& v : extract_boundaries(d).off_diagonal_osculations) {
        out += "<circle class=\"osc\" cx=\"" + num(x(v.j)) + "\" cy=\"" + num(y(v.i)) +
               "\" r=\"" + num(cs / 8) + "\"/>\n";
      }
    }
  }
  return out + "</svg>\n";
}

std::string svg(const Fpl& f, const RenderSpec& spec) {
  const int n = f.size();
  const double cs = spec.cell_size;
  const double side = cs * (n + 1);
  const EdgeColoring ec = f.edges();
  // External edges run half a cell beyond the outer vertices.
  auto x = [&](int j) { return j == 0 ? cs / 2 : j == n + 1 ? side - cs / 2 : cs * j; };
  auto y = x;
  std::string out = header(side, side,
                           ".light{stroke:#ccc;stroke-width:1}"
                           ".dark{stroke:#000;stroke-width:4;stroke-linecap:round}");
  std::string light, dark;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const std::string s = line(x(j), y(i), x(j + 1), y(i), ec.east(i, j) ? "dark" : "light");
      (ec.east(i, j) ? dark : light) += s;
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const std::string s = line(x(j), y(i), x(j), y(i + 1), ec.south(i, j) ? "dark" : "light");
      (ec.south(i, j) ? dark : light) += s;
    }
  }
  if (spec.grid) out += light;
  if (spec.dark_edges) out += dark;
  return out + "</svg>\n";
}

std::string render(const Representation& r, const RenderSpec& spec) {
  if (spec.format == Format::Ascii) {
    return std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Asm> || std::is_same_v<T, HeightFunction>) {
            return ascii(x);
          } else {
            return ascii(x, spec);
          }
        },
        r);
  }
  switch (kind_of(r)) {
    case Kind::Island: return svg(std::get<DyckIsland>(r), spec);
    case Kind::Fpl: return svg(std::get<Fpl>(r), spec);
    default:
      throw Error(ErrorKind::UnsupportedCombination,
                  "no svg rendering for " + std::string(kind_name(kind_of(r))));
  }
}

}  // namespace asmloops::render
