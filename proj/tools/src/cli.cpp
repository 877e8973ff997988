#include "fuchsian_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <fuchsian/document.hpp>
#include <fuchsian/render.hpp>
#include <fuchsian/topology.hpp>

namespace fuchsian::cli {

namespace {

using json = nlohmann::json;

// Largest tile set `tiles` will build before refusing.
constexpr double kMaxTiles = 2.0e6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

json condition_json(const VerificationReport::Condition& c) {
  json out{{"pass", c.pass}, {"witness_pair", nullptr}, {"witness_index", nullptr}};
  if (c.witness_pair) out["witness_pair"] = json::array({c.witness_pair->first, c.witness_pair->second});
  if (c.witness_index) out["witness_index"] = *c.witness_index;
  return out;
}

json pairs_json(const std::vector<IndexPair>& pairs) {
  json out = json::array();
  for (const IndexPair& p : pairs) out.push_back(json::array({p.first, p.second}));
  return out;
}

UpperPoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--point must be re,im (e.g. 3/2,1/24)");
  try {
    return UpperPoint(Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1)));
  } catch (const std::exception& err) {
    throw UsageError("bad --point '" + text + "': " + err.what());
  }
}

RenderSpec window_for(const SchottkyDescription& desc, const std::string& window, int width) {
  if (!window.empty()) {
    try {
      return RenderSpec::from_window(window, width);
    } catch (const std::exception& err) {
      throw UsageError(std::string("bad --window: ") + err.what());
    }
  }
  RenderSpec spec;
  spec.width_px = width;
  if (desc.empty()) return spec;
  Rational lo = desc.entries().front().lo;
  Rational hi = desc.entries().front().hi;
  Rational radius = 0;
  for (const SchottkyEntry& e : desc.entries()) {
    lo = std::min(lo, e.lo);
    hi = std::max(hi, e.hi);
    radius = std::max(radius, e.circle().radius);
  }
  const Rational pad = (hi - lo) / 10;
  spec.x_min = lo - pad;
  spec.x_max = hi + pad;
  spec.height = std::max((spec.x_max - spec.x_min) / 4, radius * Rational(6) / Rational(5));
  return spec;
}

GroupDocument load_file(const std::string& path) { return load_document(read_file(path)); }

int cmd_gen(const std::string& kind_name, unsigned level, unsigned depth, const std::string& out_path,
            std::ostream& out) {
  Kind kind;
  try {
    kind = kind_from_string(kind_name);
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
  if (kind != Kind::loch_ness && level == 0) throw UsageError("--level must be >= 1 for " + kind_name);
  if (kind == Kind::cantor && level > 16) throw UsageError("--level above 16 is too large for cantor");
  if (kind == Kind::blooming && level > 12) throw UsageError("--level above 12 is too large for blooming");
  write_output(out_path, save(make_document(kind, level, depth)), out);
  return ok;
}

int cmd_verify(const std::string& path, const std::string& report_path, std::ostream& out) {
  const GroupDocument doc = load_file(path);
  const VerificationReport report = verify(doc.description);
  if (!report_path.empty()) write_output(report_path, report_json(doc.description, report), out);
  out << "overall=" << (report.overall() ? "pass" : "fail");
  if (report.epsilon) out << " epsilon=" << report.epsilon->to_string();
  out << " pairs=" << doc.description.pair_count() << " tangencies=" << report.tangent_pairs.size()
      << " overlaps=" << report.overlap_pairs.size() << "\n";
  return report.overall() ? ok : failure;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const GroupDocument doc = load_file(path);
  out << to_string(signature(doc.description)) << "\n";
  return ok;
}

int cmd_reduce(const std::string& path, const std::string& point, std::size_t max_steps, std::ostream& out) {
  const UpperPoint z = parse_point(point);
  const GroupDocument doc = load_file(path);
  const Reduction r = reduce(doc.description, z, max_steps);
  out << "point=" << r.point.re.to_string() << "," << r.point.im.to_string() << " word=" << to_string(r.word)
      << " steps=" << r.word.size() << " converged=" << (r.converged ? "true" : "false") << "\n";
  return r.converged ? ok : failure;
}

int cmd_tiles(const std::string& path, std::size_t max_len, const std::string& svg_path, const std::string& window,
              int width, std::ostream& out) {
  const GroupDocument doc = load_file(path);
  const auto m = static_cast<double>(doc.description.size());
  double estimate = 1;
  for (std::size_t len = 1; len <= max_len; ++len) estimate += m * std::pow(std::max(m - 1, 1.0), len - 1);
  if (estimate > kMaxTiles) throw UsageError("--max-len " + std::to_string(max_len) + " yields too many tiles");
  const RenderSpec spec = window_for(doc.description, window, width);
  const auto tiles = tessellation_tiles(doc.description, max_len);
  std::vector<std::size_t> per_length(max_len + 1, 0);
  for (const Tile& t : tiles) ++per_length[t.word.size()];
  for (std::size_t len = 0; len <= max_len; ++len) out << "len=" << len << " tiles=" << per_length[len] << "\n";
  if (!svg_path.empty()) write_output(svg_path, render_svg(doc.description, tiles, spec), out);
  return ok;
}

int cmd_render(const std::string& path, const std::string& svg_path, const std::string& window, int width,
               std::ostream& out) {
  const GroupDocument doc = load_file(path);
  const RenderSpec spec = window_for(doc.description, window, width);
  write_output(svg_path, render_svg(doc.description, {}, spec), out);
  return ok;
}

}  // namespace

std::string report_json(const SchottkyDescription& desc, const VerificationReport& report) {
  json out;
  out["overall"] = report.overall();
  out["pair_count"] = desc.pair_count();
  out["epsilon"] = report.epsilon ? json(report.epsilon->to_string()) : json(nullptr);
  out["conditions"] = json{
      {"disjoint_closures", condition_json(report.cond1_disjoint_closures)},
      {"no_full_halfcircle", condition_json(report.cond2_no_full_halfcircle)},
      {"isometric_match", condition_json(report.cond3_isometric_match)},
      {"hyperbolic", condition_json(report.cond4_hyperbolic)},
      {"separation", condition_json(report.cond5_separation)},
  };
  out["tangent_pairs"] = pairs_json(report.tangent_pairs);
  out["overlap_pairs"] = pairs_json(report.overlap_pairs);
  return out.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schottky descriptions of Fuchsian groups for infinite-type surfaces", "fuchsian"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fuchsian 0.1.0");

  std::string kind;
  unsigned level = 0;
  unsigned depth = 0;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write the GroupDocument of a truncated family");
  gen->add_option("--kind", kind, "loch-ness, cantor or blooming")->required();
  gen->add_option("--level", level, "Truncation level (loch-ness: strips -N..N)")->required();
  gen->add_option("--depth", depth, "Satellite depth (blooming only)");
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  std::string doc_path;
  std::string report_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check the Schottky conditions; exit 1 on failure");
  verify_cmd->add_option("document", doc_path, "GroupDocument JSON")->required();
  verify_cmd->add_option("--report", report_path, "Write the report as JSON");

  auto* classify_cmd = app.add_subcommand("classify", "Print rank, boundary cycles, genus and Euler characteristic");
  classify_cmd->add_option("document", doc_path, "GroupDocument JSON")->required();

  std::string point;
  std::size_t max_steps = kDefaultMaxSteps;
  auto* reduce_cmd = app.add_subcommand("reduce", "Move a point into the fundamental domain");
  reduce_cmd->add_option("document", doc_path, "GroupDocument JSON")->required();
  reduce_cmd->add_option("--point", point, "re,im with rational parts, e.g. 3/2,1/24")->required();
  reduce_cmd->add_option("--max-steps", max_steps, "Step budget");

  std::size_t max_len = 1;
  std::string svg_path;
  std::string window;
  int width = 1000;
  auto* tiles_cmd = app.add_subcommand("tiles", "Enumerate tessellation tiles up to a word length");
  tiles_cmd->add_option("document", doc_path, "GroupDocument JSON")->required();
  tiles_cmd->add_option("--max-len", max_len, "Longest word")->required();
  tiles_cmd->add_option("--render", svg_path, "Write an SVG of the tiles");
  tiles_cmd->add_option("--window", window, "xmin:xmax:height");
  tiles_cmd->add_option("--width", width, "Image width in pixels")->check(CLI::PositiveNumber);

  auto* render_cmd = app.add_subcommand("render", "Draw the circles and fundamental domain as SVG");
  render_cmd->add_option("document", doc_path, "GroupDocument JSON")->required();
  render_cmd->add_option("--out", svg_path, "Output file (default: stdout)");
  render_cmd->add_option("--window", window, "xmin:xmax:height");
  render_cmd->add_option("--width", width, "Image width in pixels")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }

  try {
    if (gen->parsed()) return cmd_gen(kind, level, depth, out_path, out);
    if (verify_cmd->parsed()) return cmd_verify(doc_path, report_path, out);
    if (classify_cmd->parsed()) return cmd_classify(doc_path, out);
    if (reduce_cmd->parsed()) return cmd_reduce(doc_path, point, max_steps, out);
    if (tiles_cmd->parsed()) return cmd_tiles(doc_path, max_len, svg_path, window, width, out);
    if (render_cmd->parsed()) return cmd_render(doc_path, svg_path, window, width, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const DocumentError& e) {
    err << "invalid document (" << to_string(e.reason()) << ") at " << e.location() << ": " << e.what() << "\n";
    return failure;
  } catch (const TopologyError& e) {
    err << "topology: " << e.what() << "\n";
    return failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  return usage;
}

}  // namespace fuchsian::cli
