#include "asmloops/io.hpp"

#include <string>

#include "asmloops/biject.hpp"

namespace asmloops {

using nlohmann::json;

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Asm: return "asm";
    case Kind::Fpl: return "fpl";
    case Kind::Height: return "height";
    case Kind::Island: return "island";
  }
  return "?";
}

Kind parse_kind(std::string_view name) {
  for (Kind k : {Kind::Asm, Kind::Fpl, Kind::Height, Kind::Island}) {
    if (kind_name(k) == name) return k;
  }
  throw Error(ErrorKind::UnknownKind, "unknown kind '" + std::string(name) + "'");
}

Kind kind_of(const Representation& r) { return static_cast<Kind>(r.index()); }

int size_of(const Representation& r) {
  return std::visit([](const auto& x) { return x.size(); }, r);
}

namespace {

IntMatrix read_matrix(const json& j, const char* field) {
  if (!j.contains(field)) {
    throw Error(ErrorKind::ParseError, std::string("missing field '") + field + "'");
  }
  const json& m = j.at(field);
  if (!m.is_array()) {
    throw Error(ErrorKind::ParseError, std::string("'") + field + "' must be an array");
  }
  IntMatrix out;
  for (const json& row : m) {
    if (!row.is_array()) {
      throw Error(ErrorKind::ParseError, std::string("rows of '") + field +
                                             "' must be arrays");
    }
    std::vector<int> r;
    for (const json& x : row) {
      if (!x.is_number_integer()) {
        throw Error(ErrorKind::ParseError, std::string("entries of '") + field +
                                               "' must be integers");
      }
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

void check_n(const json& j, int n) {
  if (!j.contains("n")) return;
  if (!j.at("n").is_number_integer()) throw Error(ErrorKind::ParseError, "'n' must be an integer");
  if (j.at("n").get<int>() != n) {
    throw Error(ErrorKind::BadShape, "'n' is " + std::to_string(j.at("n").get<int>()) +
                                         " but the array implies " + std::to_string(n));
  }
}

json matrix(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

json vertex(LatticeVertex v) { return json::array({v.i, v.j}); }

json vertices(const std::vector<LatticeVertex>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vertex(v));
  return out;
}

}  // namespace

Representation parse_representation(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "expected a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw Error(ErrorKind::ParseError, "missing string field 'kind'");
  }
  switch (parse_kind(j.at("kind").get<std::string>())) {
    case Kind::Asm: {
      Asm a = validate_asm(read_matrix(j, "entries"));
      check_n(j, a.size());
      return a;
    }
    case Kind::Fpl: {
      Fpl f = validate_fpl(read_matrix(j, "vertex_types"));
      check_n(j, f.size());
      return f;
    }
    case Kind::Height: {
      HeightFunction h = validate_height(read_matrix(j, "h"));
      check_n(j, h.size());
      return h;
    }
    case Kind::Island: {
      const IntMatrix boxes = read_matrix(j, "boxes");
      // An empty island is ambiguous without n.
      int n = static_cast<int>(boxes.size()) + 1;
      if (j.contains("n")) {
        if (!j.at("n").is_number_integer()) {
          throw Error(ErrorKind::ParseError, "'n' must be an integer");
        }
        n = j.at("n").get<int>();
      }
      return validate_island(n, boxes);
    }
  }
  throw Error(ErrorKind::InternalError, "unreachable");
}

Representation parse_representation(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return parse_representation(j);
}

json to_json(const Asm& a) {
  return {{"kind", "asm"}, {"n", a.size()}, {"entries", matrix(a.rows())}};
}

json to_json(const Fpl& f) {
  return {{"kind", "fpl"}, {"n", f.size()}, {"vertex_types", matrix(f.codes())}};
}

json to_json(const HeightFunction& h) {
  return {{"kind", "height"}, {"n", h.size()}, {"h", matrix(h.rows())}};
}

json to_json(const DyckIsland& d) {
  return {{"kind", "island"}, {"n", d.size()}, {"boxes", matrix(d.rows())}};
}

json to_json(const Representation& r) {
  return std::visit([](const auto& x) { return to_json(x); }, r);
}

Asm to_asm(const Representation& r) {
  switch (kind_of(r)) {
    case Kind::Asm: return std::get<Asm>(r);
    case Kind::Fpl: return fpl_to_asm(std::get<Fpl>(r));
    case Kind::Height: return height_to_asm(std::get<HeightFunction>(r));
    case Kind::Island: return island_to_asm(std::get<DyckIsland>(r));
  }
  throw Error(ErrorKind::InternalError, "unreachable");
}

Representation convert(const Representation& r, Kind to) {
  if (kind_of(r) == to) return r;
  // Height <-> island never passes through the matrix.
  if (kind_of(r) == Kind::Height && to == Kind::Island) {
    return height_to_island(std::get<HeightFunction>(r));
  }
  if (kind_of(r) == Kind::Island && to == Kind::Height) {
    return island_to_height(std::get<DyckIsland>(r));
  }
  const Asm a = to_asm(r);
  switch (to) {
    case Kind::Asm: return a;
    case Kind::Fpl: return asm_to_fpl(a);
    case Kind::Height: return asm_to_height(a);
    case Kind::Island: return asm_to_island(a);
  }
  throw Error(ErrorKind::InternalError, "unreachable");
}

json to_json(const Loop& g) {
  return {{"vertices", vertices(g.vertices)},
          {"neb", g.neb.letters()},
          {"swb", g.swb.letters()},
          {"semilength", g.semilength()},
          {"level", g.level},
          {"diagonal_osculations", diagonal_osculations(g)}};
}

json to_json(const BoundarySet& bs) {
  json loops = json::array();
  for (std::size_t k = 0; k < bs.loops.size(); ++k) {
    json g = to_json(bs.loops[k]);
    g["nesting"] = nesting_of_loop(bs, k);
    loops.push_back(std::move(g));
  }
  return {{"n", bs.n},
          {"loops", std::move(loops)},
          {"off_diagonal_osculations", off_diagonal_osculations(bs)},
          {"osculation_vertices", vertices(bs.off_diagonal_osculations)}};
}

json to_json(const ContributionReport& r) {
  json loops = json::array();
  for (const auto& lr : r.loops) {
    loops.push_back({{"start", vertex(lr.start)},
                     {"semilength", lr.semilength},
                     {"nesting", lr.nesting},
                     {"diagonal", lr.diagonal},
                     {"diagonal_sw", lr.diagonal_sw},
                     {"c_swb", lr.c_swb},
                     {"c_neb", lr.c_neb},
                     {"c_swb_direct", lr.c_swb_direct},
                     {"c_neb_direct", lr.c_neb_direct},
                     {"diag_ones", lr.diag_ones},
                     {"inv_loop", lr.inv_loop}});
  }
  return {{"n", r.n},
          {"loops", std::move(loops)},
          {"k", r.k},
          {"diagonal_ones", r.diagonal_ones},
          {"diagonal_one_nesting", r.diagonal_one_nesting},
          {"diagonal_one_contribution", r.diagonal_one_contribution},
          {"sum_inv_loops", r.sum_inv_loops},
          {"sum_contributions", r.sum_contributions},
          {"inv", r.inv}};
}

json to_json(const VerifyReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"index", f.index},
                        {"check", f.check},
                        {"object", {{"kind", "asm"},
                                    {"n", r.n},
                                    {"entries", matrix(f.object)}}}});
  }
  return {{"suite", suite_name(r.suite)},
          {"n", r.n},
          {"items", r.items},
          {"failures", std::move(failures)},
          {"millis", r.millis}};
}

}  // namespace asmloops
