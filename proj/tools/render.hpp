#pragma once

#include <string>

#include "asmloops/core.hpp"
#include "asmloops/io.hpp"

namespace asmloops::render {

enum class Format { Ascii, Svg };

struct RenderSpec {
  Format format = Format::Ascii;
  int cell_size = 40;  // svg only
  bool grid = true;
  bool boundaries = true;
  bool entries = true;
  bool dark_edges = true;
  bool osculations = true;
};

// Island entries with boundary loops drawn in box-drawing characters.
std::string ascii(const DyckIsland& d, const RenderSpec& spec);
// Dark edges of the FPL, external edges included.
std::string ascii(const Fpl& f, const RenderSpec& spec);
std::string ascii(const Asm& a);
std::string ascii(const HeightFunction& h);

std::string svg(const DyckIsland& d, const RenderSpec& spec);
std::string svg(const Fpl& f, const RenderSpec& spec);

// Throws UnsupportedCombination for matrices and heights in svg.
std::string render(const Representation& r, const RenderSpec& spec);

}  // namespace asmloops::render
