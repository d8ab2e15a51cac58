#pragma once

// JSON interchange. Objects look like
//   {"kind":"asm","n":N,"entries":[[...]]}
//   {"kind":"fpl","n":N,"vertex_types":[[1..6]]}
//   {"kind":"height","n":N,"h":[[...]]}
//   {"kind":"island","n":N,"boxes":[[...]]}
// with arrays row-major, row 1 first.

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "asmloops/core.hpp"
#include "asmloops/enumerate.hpp"
#include "asmloops/inversion.hpp"
#include "asmloops/loops.hpp"

namespace asmloops {

enum class Kind { Asm, Fpl, Height, Island };

std::string_view kind_name(Kind k);
// Throws UnknownKind.
Kind parse_kind(std::string_view name);

using Representation = std::variant<Asm, Fpl, HeightFunction, DyckIsland>;

Kind kind_of(const Representation& r);
int size_of(const Representation& r);

// Throws ParseError for malformed JSON, UnknownKind for an unknown "kind",
// and the validator's own error for invalid contents.
Representation parse_representation(const nlohmann::json& j);
Representation parse_representation(std::string_view text);

nlohmann::json to_json(const Asm& a);
nlohmann::json to_json(const Fpl& f);
nlohmann::json to_json(const HeightFunction& h);
nlohmann::json to_json(const DyckIsland& d);
nlohmann::json to_json(const Representation& r);

Asm to_asm(const Representation& r);
Representation convert(const Representation& r, Kind to);

nlohmann::json to_json(const Loop& g);
nlohmann::json to_json(const BoundarySet& bs);
nlohmann::json to_json(const ContributionReport& r);
nlohmann::json to_json(const VerifyReport& r);

}  // namespace asmloops
