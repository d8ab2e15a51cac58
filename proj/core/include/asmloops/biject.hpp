#pragma once

#include "asmloops/core.hpp"

namespace asmloops {

HeightFunction asm_to_height(const Asm& a);
Asm height_to_asm(const HeightFunction& h);

DyckIsland height_to_island(const HeightFunction& h);
HeightFunction island_to_height(const DyckIsland& d);

Fpl asm_to_fpl(const Asm& a);
// FPLs of the identity and the skew identity.
Fpl phi0(int n);
Fpl phi1(int n);
// Signs of the through-line vertices are assigned by alternation along each
// row; throws InconsistentSigns if the columns then fail to alternate.
Asm fpl_to_asm(const Fpl& f);

// Reads the matrix straight off the boundary loops of the island.
Asm island_to_asm_direct(const DyckIsland& d);

// Shortcuts through the height function.
DyckIsland asm_to_island(const Asm& a);
Asm island_to_asm(const DyckIsland& d);

}  // namespace asmloops
