#include "asmloops/biject.hpp"

#include <map>
#include <string>

#include "asmloops/loops.hpp"

namespace asmloops {

HeightFunction asm_to_height(const Asm& a) {
  const int n = a.size();
  Grid<int> h(n + 1, n + 1, 0);
  // corner[j] holds sum of A[1..i][1..j] while sweeping rows.
  std::vector<int> corner(n + 1, 0);
  for (int j = 0; j <= n; ++j) h(0, j) = j;
  for (int i = 1; i <= n; ++i) {
    int row = 0;
    h(i, 0) = i;
    for (int j = 1; j <= n; ++j) {
      row += a.at(i, j);
      corner[j] += row;
      h(i, j) = i + j - 2 * corner[j];
    }
  }
  return HeightFunction::unchecked(n, std::move(h));
}

Asm height_to_asm(const HeightFunction& h) {
  const int n = h.size();
  Grid<int> a(n, n, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int twice =
          h.at(i - 1, j) + h.at(i, j - 1) - h.at(i - 1, j - 1) - h.at(i, j);
      a(i, j) = twice / 2;
    }
  }
  return Asm::unchecked(n, std::move(a));
}

DyckIsland height_to_island(const HeightFunction& h) {
  const int n = h.size();
  Grid<int> d(n - 1, n - 1, 1);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      const int diff = h.at(i, j) - (i > j ? i - j : j - i);
      if (diff % 2 != 0 || diff < 0) {
        throw Error(ErrorKind::InternalError,
                    "height differs from the minimum by an odd amount at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      }
      d(i, j) = diff / 2;
    }
  }
  return DyckIsland::unchecked(n, std::move(d));
}

HeightFunction island_to_height(const DyckIsland& d) {
  const int n = d.size();
  Grid<int> h(n + 1, n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      h(i, j) = (i > j ? i - j : j - i) + 2 * d.padded(i, j);
    }
  }
  return HeightFunction::unchecked(n, std::move(h));
}

// Horizontal edge east of (i, j) is dark iff r + i + j is even, where r is
// the partial row sum through column j. Vertical edge south of (i, j) is dark
// iff c + i + j is odd, c the partial column sum through row i.
Fpl asm_to_fpl(const Asm& a) {
  const int n = a.size();
  EdgeColoring e(n);
  for (int i = 1; i <= n; ++i) {
    int r = 0;
    e.set_east(i, 0, (i % 2) == 0);
    for (int j = 1; j <= n; ++j) {
      r += a.at(i, j);
      e.set_east(i, j, (r + i + j) % 2 == 0);
    }
  }
  for (int j = 1; j <= n; ++j) {
    int c = 0;
    e.set_south(0, j, (j % 2) == 1);
    for (int i = 1; i <= n; ++i) {
      c += a.at(i, j);
      e.set_south(i, j, (c + i + j) % 2 == 1);
    }
  }
  return Fpl::from_edges(e);
}

Fpl phi0(int n) { return asm_to_fpl(Asm::identity(n)); }
Fpl phi1(int n) { return asm_to_fpl(Asm::skew_identity(n)); }

Asm fpl_to_asm(const Fpl& f) {
  const int n = f.size();
  IntMatrix raw(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) {
    int sign = 1;
    for (int j = 1; j <= n; ++j) {
      if (!is_corner(f.at(i, j))) {
        raw[i - 1][j - 1] = sign;
        sign = -sign;
      }
    }
  }
  try {
    return validate_asm(raw);
  } catch (const Error& err) {
    throw Error(ErrorKind::InconsistentSigns, err.what());
  }
}

namespace {

enum class Side { Neb, Swb };

struct Incidence {
  std::size_t loop;
  Side side;
  bool endpoint;
  char first = 0;  // letters before and after the vertex
  char second = 0;
};

void record_path(std::map<LatticeVertex, std::vector<Incidence>>& at,
                 std::size_t loop, Side side,
                 const std::vector<LatticeVertex>& path,
                 const std::string& word) {
  const std::size_t last = path.size() - 1;
  for (std::size_t k = 0; k <= last; ++k) {
    Incidence inc{loop, side, k == 0 || k == last};
    if (!inc.endpoint) {
      inc.first = word[k - 1];
      inc.second = word[k];
    }
    at[path[k]].push_back(inc);
  }
}

[[noreturn]] void unexpected(LatticeVertex v) {
  throw Error(ErrorKind::InternalError,
              "unexpected boundary configuration at (" + std::to_string(v.i) +
                  "," + std::to_string(v.j) + ")");
}

int read_diagonal(LatticeVertex v, const std::vector<Incidence>& incs) {
  const std::size_t loop = incs.front().loop;
  bool neb = false, swb = false, endpoint = false;
  for (const auto& inc : incs) {
    if (inc.loop != loop) unexpected(v);
    endpoint = endpoint || inc.endpoint;
    (inc.side == Side::Neb ? neb : swb) = true;
  }
  // Where a loop starts or ends it leaves the diagonal.
  if (endpoint) return 0;
  // Exception 2 when both halves pass through, exception 1 otherwise.
  return neb && swb ? -1 : 0;
}

int read_off_diagonal(LatticeVertex v, const std::vector<Incidence>& incs) {
  if (incs.size() == 1) {
    const auto& inc = incs.front();
    if (inc.endpoint) unexpected(v);
    if (inc.first == 'u' && inc.second == 'd') return 1;
    if (inc.first == 'd' && inc.second == 'u') return -1;
    return 0;
  }
  // Exception 3: two boundaries of different loops osculate here.
  if (incs.size() == 2 && incs[0].loop != incs[1].loop &&
      incs[0].side == incs[1].side) {
    return 0;
  }
  unexpected(v);
}

}  // namespace

Asm island_to_asm_direct(const DyckIsland& d) {
  const int n = d.size();
  const BoundarySet bs = extract_boundaries(d);
  std::map<LatticeVertex, std::vector<Incidence>> at;
  for (std::size_t k = 0; k < bs.loops.size(); ++k) {
    const Loop& g = bs.loops[k];
    record_path(at, k, Side::Neb, g.neb_path, g.neb.letters());
    record_path(at, k, Side::Swb, g.swb_path, g.swb.letters());
  }
  Grid<int> a(n, n, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const LatticeVertex v{i, j};
      auto it = at.find(v);
      if (it == at.end()) {
        // Untouched: the identity's value.
        a(i, j) = v.on_diagonal() ? 1 : 0;
      } else if (v.on_diagonal()) {
        a(i, j) = read_diagonal(v, it->second);
      } else {
        a(i, j) = read_off_diagonal(v, it->second);
      }
    }
  }
  return Asm::unchecked(n, std::move(a));
}

DyckIsland asm_to_island(const Asm& a) {
  return height_to_island(asm_to_height(a));
}

Asm island_to_asm(const DyckIsland& d) {
  return height_to_asm(island_to_height(d));
}

}  // namespace asmloops
