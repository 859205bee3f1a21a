// patchwork construct|analyze|render|verify
//
// Exit codes: 0 success, 1 internal error, 2 invalid parameters or problem
// file, 3 an exact check failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "patchwork/audits.hpp"
#include "patchwork/bounds.hpp"
#include "patchwork/problem_io.hpp"
#include "patchwork/render.hpp"
#include "patchwork/sampling.hpp"

using namespace patchwork;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kViolated = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

template <typename T>
std::string joined(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

std::string describe(const Ambient& a) {
  std::string s = to_string(a.kind);
  if (a.kind == AmbientKind::Projective) s += " " + std::to_string(a.degree);
  if (a.kind == AmbientKind::P1Power) s += " " + joined(a.multidegree);
  return s;
}

json point_json(const LatticePoint& p) { return std::vector<Coord>(p.coords().begin(), p.coords().end()); }

json bound_json(const BoundReport& r) {
  return {{"name", r.name},
          {"lhs", to_string(r.lhs)},
          {"rhs", to_string(r.rhs)},
          {"slack", to_string(r.slack())},
          {"verdict", to_string(r.verdict())}};
}

// ---- construct ----

struct ConstructArgs {
  std::string name, out;
  ConstructionParams params;
};

int cmd_construct(const ConstructArgs& a) {
  write_output(a.out, write_problem(construct(a.name, a.params)));
  return kOk;
}

// ---- analyze ----

struct AnalyzeArgs {
  std::string file;
  bool betti = false, chi = false, critical = false, totals = false, as_json = false;
  std::vector<std::size_t> bounds;
  std::string complex_out;
};

int cmd_analyze(AnalyzeArgs a) {
  const auto p = read_problem(read_input(a.file));
  const auto& tri = p.tri;
  if (!a.betti && !a.chi && !a.critical && !a.totals && a.bounds.empty()) a.betti = a.chi = true;

  json report;
  std::ostringstream table;
  bool violated = false;
  report["problem"] = {{"name", p.name},
                       {"dimension", tri.dim()},
                       {"vertices", tri.vertices().size()},
                       {"cells", tri.cells().size()},
                       {"ambient", describe(p.ambient)}};
  table << "problem      " << (p.name.empty() ? "(unnamed)" : p.name) << ", n = " << tri.dim() << ", "
        << tri.vertices().size() << " vertices, " << tri.cells().size() << " cells, " << describe(p.ambient) << '\n';
  if (!p.heights.empty()) {
    const bool convex = certify_convexity(tri, p.heights);
    report["heights_certified"] = convex;
    table << "convexity    " << (convex ? "certified" : "NOT certified") << '\n';
    violated = violated || !convex;
  }

  if (a.betti || a.chi) {
    const auto t = summarize(tri, p.signs, p.ambient);
    if (a.chi) {
      report["euler_characteristic"] = t.chi_faces;
      table << "chi          " << t.chi_faces << '\n';
    }
    if (a.betti) {
      report["betti"] = t.betti;
      report["components"] = t.components;
      table << "betti        " << joined(t.betti) << '\n' << "components   " << t.components << '\n';
    }
    report["consistent"] = t.consistent();
    table << "consistency  " << (t.consistent() ? "holds" : "VIOLATED") << '\n';
    violated = violated || !t.consistent();
    if (!a.complex_out.empty()) write_output(a.complex_out, write_complex(build(tri, p.signs, p.ambient)));
  }

  const bool need_origin = a.critical || a.totals || !a.bounds.empty();
  LatticePoint origin;
  if (need_origin) {
    origin = p.origin ? *p.origin : find_generic_origin(tri);
    if (!is_generic(tri, origin)) throw UsageError("origin " + to_string(origin) + " is not generic");
  }

  std::vector<BoundReport> reports;
  if (a.critical) {
    const auto h = index_histogram(tri, origin, p.signs);
    report["critical"] = {{"origin", point_json(origin)},
                          {"S", h.S},
                          {"S_bar", h.S_bar},
                          {"c_plus", h.c_plus},
                          {"c_minus", h.c_minus}};
    table << "origin       " << to_string(origin) << '\n'
          << "S            " << joined(h.S) << '\n'
          << "S_bar        " << joined(h.S_bar) << '\n'
          << "c_plus       " << joined(h.c_plus) << '\n'
          << "c_minus      " << joined(h.c_minus) << '\n';
    const auto b = betti_z2(build(tri, p.signs, p.ambient));
    for (auto& r : morse_bounds(h, &b)) reports.push_back(std::move(r));
  }
  for (auto k : a.bounds)
    for (auto& r : partial_sum_report(tri, p.signs, origin, k)) reports.push_back(std::move(r));
  if (a.totals)
    for (auto& r : totals_report(tri, p.signs, origin)) reports.push_back(std::move(r));
  if (!reports.empty()) {
    json rows = json::array();
    table << "bounds\n";
    for (const auto& r : reports) {
      rows.push_back(bound_json(r));
      table << "  " << std::left << std::setw(48) << r.name << ' ' << to_string(r.lhs) << " <= " << to_string(r.rhs)
            << "  [" << to_string(r.verdict()) << "]\n";
      violated = violated || r.verdict() == Verdict::Violated;
    }
    report["bounds"] = rows;
  }

  std::cout << (a.as_json ? report.dump(2) + "\n" : table.str());
  return violated ? kViolated : kOk;
}

// ---- render ----

struct RenderArgs {
  std::string file, out;
  bool svg = false, off = false, base_only = false;
};

int cmd_render(const RenderArgs& a) {
  const auto p = read_problem(read_input(a.file));
  const std::size_t n = p.tri.dim();
  if (a.svg && n != 2) throw UsageError("--svg needs n = 2, the problem has n = " + std::to_string(n));
  if (a.off && n != 3) throw UsageError("--off needs n = 3, the problem has n = " + std::to_string(n));
  write_output(a.out, a.svg ? render_svg(p.tri, p.signs, {.all_copies = !a.base_only})
                            : render_off(p.tri, p.signs, p.ambient));
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::vector<std::string> files;
  std::size_t random = 0;
  std::uint64_t seed = 1;
};

struct Tally {
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> audits;  // name -> (checked, violations)
  std::vector<std::string> failures;

  void add(const std::string& input, const AuditResult& r) {
    auto& [checked, violations] = audits[r.name];
    checked += r.checked;
    violations += r.violations;
    if (!r.holds()) failures.push_back(input + ": " + r.name + ": " + r.detail);
  }
};

void verify_one(Tally& tally, const std::string& label, const Triangulation& tri, const SignDistribution& signs,
                const Ambient& ambient, const std::optional<LatticePoint>& origin) {
  for (const auto& r : audit_suite(tri, signs, ambient, origin)) tally.add(label, r);
  const auto t = summarize(tri, signs, ambient);
  tally.add(label, AuditResult{"pipeline consistency", 1, t.consistent() ? 0u : 1u,
                               "chi " + std::to_string(t.chi_faces) + ", betti " + joined(t.betti)});
}

int cmd_verify(const VerifyArgs& a) {
  Tally tally;
  std::vector<std::pair<std::string, Construction>> inputs;
  for (std::size_t n = 2; n <= 3; ++n)
    for (Coord m : {2, 4}) inputs.emplace_back("", nested_spheres(n, m));
  for (Coord m : {2, 4}) inputs.emplace_back("", triangle_ovals(m));
  inputs.emplace_back("", cone_spheres(3, 4));
  inputs.emplace_back("", cube_block());
  inputs.emplace_back("", cube_tiling(1, 1, 2));
  for (auto& [label, c] : inputs) {
    label = c.name + " (" + std::to_string(c.tri.cells().size()) + " cells)";
    verify_one(tally, label, c.tri, c.signs, c.ambient, c.origin);
  }
  std::mt19937_64 rng(a.seed);
  for (std::size_t i = 0; i < a.random; ++i) {
    const std::size_t n = 2 + i % 2;
    const Coord m = 2 * (1 + static_cast<Coord>(i / 2 % 3));
    auto s = random_doubled(rng, n, m, i % 3 != 0);
    auto signs = random_signs(rng, s.tri.vertices().size());
    verify_one(tally, "random #" + std::to_string(i), s.tri, signs, Ambient::projective(m), std::nullopt);
  }
  for (const auto& f : a.files) {
    const auto p = read_problem(read_input(f));
    verify_one(tally, f, p.tri, p.signs, p.ambient, p.origin);
  }

  std::cout << inputs.size() + a.random + a.files.size() << " inputs\n";
  for (const auto& [name, cv] : tally.audits)
    std::cout << "  " << std::left << std::setw(36) << name << std::right << std::setw(10) << cv.first
              << " checked " << std::setw(6) << cv.second << " violations\n";
  for (const auto& f : tally.failures) std::cout << "FAIL " << f << '\n';
  return tally.failures.empty() ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorial patchworking"};
  app.name("patchwork");
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Write a built-in signed triangulation as JSON");
  construct_cmd->add_option("name", ca.name, "Identifier: " + joined(construction_names()))->required();
  construct_cmd->add_option("--n", ca.params.n, "Dimension");
  construct_cmd->add_option("--m", ca.params.m, "Degree");
  construct_cmd->add_option("--k", ca.params.k, "Block counts (one or three values)")->expected(1, 3);
  construct_cmd->add_option("-o,--output", ca.out, "Output file (default stdout)");

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Topology, critical points and bounds of a problem file");
  analyze_cmd->add_option("file", aa.file, "Problem file, or - for stdin")->required();
  analyze_cmd->add_flag("--betti", aa.betti, "Z/2 Betti numbers and components");
  analyze_cmd->add_flag("--chi", aa.chi, "Euler characteristic");
  analyze_cmd->add_flag("--critical", aa.critical, "Index histogram and Morse bounds");
  analyze_cmd->add_option("--bounds", aa.bounds, "Partial-sum bound reports for these k")->expected(1, -1);
  analyze_cmd->add_flag("--totals", aa.totals, "Total-count bound reports");
  analyze_cmd->add_flag("--json", aa.as_json, "Print the report as JSON");
  analyze_cmd->add_option("--complex", aa.complex_out, "Also write the cell complex as JSON");

  RenderArgs ra;
  auto* render_cmd = app.add_subcommand("render", "SVG (n = 2) or OFF mesh (n = 3)");
  render_cmd->add_option("file", ra.file, "Problem file, or - for stdin")->required();
  auto* svg = render_cmd->add_flag("--svg", ra.svg, "Plane drawing");
  auto* off = render_cmd->add_flag("--off", ra.off, "Mesh of the hypersurface");
  svg->excludes(off);
  render_cmd->add_flag("--base-only", ra.base_only, "SVG: draw only the positive quadrant");
  render_cmd->add_option("-o,--output", ra.out, "Output file (default stdout)");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run every audit on built-in inputs and the given files");
  verify_cmd->add_option("files", va.files, "Additional problem files");
  verify_cmd->add_option("--random", va.random, "Number of extra random inputs");
  verify_cmd->add_option("--seed", va.seed, "Seed for the random inputs");

  try {
    app.parse(argc, argv);
    if (render_cmd->parsed() && !ra.svg && !ra.off) throw UsageError("render needs --svg or --off");
    if (construct_cmd->parsed()) return cmd_construct(ca);
    if (analyze_cmd->parsed()) return cmd_analyze(aa);
    if (render_cmd->parsed()) return cmd_render(ra);
    return cmd_verify(va);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  } catch (const SchemaError& e) {
    std::cerr << "invalid problem: " << e.what() << '\n';
    return kInvalid;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
