#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "asmloops/biject.hpp"
#include "asmloops/enumerate.hpp"
#include "asmloops/inversion.hpp"
#include "asmloops/io.hpp"
#include "asmloops/loops.hpp"
#include "render.hpp"

namespace asmloops::cli {

using nlohmann::json;

namespace {

struct Io {
  std::string in_path;
  std::string out_path;
};

void add_io(CLI::App* cmd, Io& io, bool with_input) {
  if (with_input) cmd->add_option("--in", io.in_path, "input JSON file (default stdin)");
  cmd->add_option("--out", io.out_path, "output file (default stdout)");
}

std::string read_input(const Io& io, std::istream& in) {
  std::string text;
  if (io.in_path.empty()) {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(io.in_path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open " + io.in_path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return text;
}

Representation load(const Io& io, std::istream& in) {
  const std::string text = read_input(io, in);
  return parse_representation(std::string_view(text));
}

// Runs body against the chosen output stream.
template <class F>
int with_output(const Io& io, std::ostream& out, F body) {
  if (io.out_path.empty()) return body(out);
  std::ofstream f(io.out_path);
  if (!f) throw Error(ErrorKind::ParseError, "cannot open " + io.out_path);
  return body(f);
}

int cmd_convert(const Io& io, const std::string& to, std::istream& in, std::ostream& out) {
  const Kind k = parse_kind(to);
  const Representation r = load(io, in);
  return with_output(io, out, [&](std::ostream& o) {
    o << to_json(convert(r, k)).dump() << '\n';
    return kOk;
  });
}

int cmd_decompose(const Io& io, std::istream& in, std::ostream& out) {
  const Representation r = load(io, in);
  const DyckIsland d = std::get<DyckIsland>(convert(r, Kind::Island));
  return with_output(io, out, [&](std::ostream& o) {
    o << to_json(extract_boundaries(d)).dump() << '\n';
    return kOk;
  });
}

int cmd_inv(const Io& io, const std::string& method, bool report, std::istream& in,
            std::ostream& out, std::ostream& err) {
  const Representation r = load(io, in);
  const bool direct = method != "loops", loops = method != "direct";
  json j = {{"method", method}};
  long dv = 0, lv = 0;
  if (direct) j["direct"] = dv = inv_direct(to_asm(r));
  if (loops) {
    auto [v, rep] = inv_theorem(std::get<DyckIsland>(convert(r, Kind::Island)));
    j["loops"] = lv = v;
    if (report) j["report"] = to_json(rep);
  }
  const bool agree = !(direct && loops) || dv == lv;
  const long value = direct ? dv : lv;
  if (agree) j["inv"] = value;
  return with_output(io, out, [&](std::ostream& o) {
    if (report || !agree) {
      o << j.dump() << '\n';
    } else {
      o << value << '\n';
    }
    if (!agree) {
      err << "error: methods disagree: direct " << dv << ", loops " << lv << '\n';
      return kMismatch;
    }
    return kOk;
  });
}

int cmd_enumerate(const Io& io, int n, bool count_only, const std::string& as,
                  std::ostream& out) {
  const Kind k = parse_kind(as);
  if (n < 1) throw Error(ErrorKind::BadShape, "size must be positive");
  return with_output(io, out, [&](std::ostream& o) {
    EnumerationCursor cursor(n);
    while (auto h = cursor.next()) {
      if (count_only) continue;
      o << to_json(convert(Representation(*h), k)).dump() << '\n';
    }
    if (count_only) o << cursor.yielded() << '\n';
    return kOk;
  });
}

int cmd_verify(const Io& io, int n, const std::vector<std::string>& names,
               const VerifyOptions& opts, std::ostream& out) {
  std::vector<Suite> suites;
  for (const auto& name : names) {
    if (name == "all") {
      for (Suite s : all_suites()) suites.push_back(s);
      continue;
    }
    auto s = parse_suite(name);
    if (!s) throw Error(ErrorKind::UnknownKind, "unknown suite '" + name + "'");
    suites.push_back(*s);
  }
  if (suites.empty()) suites = all_suites();
  const auto reports = verify_all(n, suites, opts);
  return with_output(io, out, [&](std::ostream& o) {
    bool ok = true;
    for (const auto& r : reports) {
      o << to_json(r).dump() << '\n';
      ok = ok && r.ok();
    }
    return ok ? kOk : kCounterexample;
  });
}

int cmd_render(const Io& io, const render::RenderSpec& spec, std::istream& in,
               std::ostream& out) {
  const Representation r = load(io, in);
  const std::string text = render::render(r, spec);
  return with_output(io, out, [&](std::ostream& o) {
    o << text;
    return kOk;
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Alternating sign matrices, fully packed loops and Dyck islands"};
  app.name("asmloops");
  app.require_subcommand(1);

  Io io;

  std::string to;
  auto* convert_cmd = app.add_subcommand("convert", "convert between representations");
  convert_cmd->add_option("--to", to, "asm, fpl, height or island")->required();
  add_io(convert_cmd, io, true);

  auto* decompose_cmd = app.add_subcommand("decompose", "boundary loops of the Dyck island");
  add_io(decompose_cmd, io, true);

  std::string method = "both";
  bool report = false;
  auto* inv_cmd = app.add_subcommand("inv", "inversion number");
  inv_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"direct", "loops", "both"}))
      ->capture_default_str();
  inv_cmd->add_flag("--report", report, "emit the per-loop report as JSON");
  add_io(inv_cmd, io, true);

  int n = 0;
  bool count_only = false;
  std::string as = "asm";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list all objects of size n");
  enumerate_cmd->add_option("n", n)->required();
  enumerate_cmd->add_flag("--count-only", count_only);
  enumerate_cmd->add_option("--as", as, "kind to emit")->capture_default_str();
  add_io(enumerate_cmd, io, false);

  std::vector<std::string> suites;
  VerifyOptions opts;
  std::string shard;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive checks over all ASMs of size n");
  verify_cmd->add_option("n", n)->required();
  verify_cmd->add_option("--suite", suites, "suite name or 'all' (repeatable)");
  verify_cmd->add_option("--jobs", opts.jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--shard", shard, "M:R, check indices congruent to R mod M");
  verify_cmd->add_option("--max-failures", opts.max_failures)->capture_default_str();
  add_io(verify_cmd, io, false);

  render::RenderSpec spec;
  std::string format = "ascii";
  auto* render_cmd = app.add_subcommand("render", "draw an island, FPL, ASM or height");
  render_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  render_cmd->add_option("--cell-size", spec.cell_size)->check(CLI::PositiveNumber);
  render_cmd->add_flag("!--no-grid", spec.grid);
  render_cmd->add_flag("!--no-boundaries", spec.boundaries);
  render_cmd->add_flag("!--no-entries", spec.entries);
  render_cmd->add_flag("!--no-dark-edges", spec.dark_edges);
  render_cmd->add_flag("!--no-osculations", spec.osculations);
  add_io(render_cmd, io, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0 through CLI11; everything else is a usage error.
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*convert_cmd) return cmd_convert(io, to, in, out);
    if (*decompose_cmd) return cmd_decompose(io, in, out);
    if (*inv_cmd) return cmd_inv(io, method, report, in, out, err);
    if (*enumerate_cmd) return cmd_enumerate(io, n, count_only, as, out);
    if (*verify_cmd) {
      if (!shard.empty()) {
        const auto colon = shard.find(':');
        try {
          if (colon == std::string::npos) throw std::invalid_argument(shard);
          opts.shard_modulus = std::stoi(shard.substr(0, colon));
          opts.shard_residue = std::stoi(shard.substr(colon + 1));
        } catch (const std::logic_error&) {
          throw Error(ErrorKind::ParseError, "--shard expects M:R");
        }
      }
      return cmd_verify(io, n, suites, opts, out);
    }
    if (*render_cmd) {
      spec.format = format == "svg" ? render::Format::Svg : render::Format::Ascii;
      return cmd_render(io, spec, in, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace asmloops::cli
