#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cevian/morley.hpp"
#include "cevian/suite.hpp"
#include "cevian/svg.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kDegenerate = 3;

/// Config/flag errors that should exit with the usage code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cevian::Rat need_rational(const ordered_json& v, const std::string& field) {
  std::string text;
  if (v.is_string())
    text = v.get<std::string>();
  else if (v.is_number_integer())
    text = std::to_string(v.get<long long>());
  else
    throw UsageError("field '" + field + "' must be a rational string or integer");
  auto r = cevian::parse_rational(text);
  if (!r) throw UsageError("field '" + field + "': invalid rational '" + text + "'");
  return *r;
}

cevian::Rat need_rational(const std::string& text, const std::string& field) {
  auto r = cevian::parse_rational(text);
  if (!r) throw UsageError("field '" + field + "': invalid rational '" + text + "'");
  return *r;
}

ordered_json load_config(const std::string& path) {
  if (path.empty()) return ordered_json::object();
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw UsageError("config '" + path + "': " + e.what());
  }
}

cevian::ModeKind parse_mode(const std::string& s) {
  if (s == "isogonal") return cevian::ModeKind::Isogonal;
  if (s == "isotomic") return cevian::ModeKind::Isotomic;
  if (s == "free") return cevian::ModeKind::Free;
  throw UsageError("field 'mode': expected isogonal, isotomic or free, got '" + s + "'");
}

cevian::Flavor parse_flavor(const std::string& s) {
  if (s == "trace_random" || s == "trace") return cevian::Flavor::TraceRandom;
  if (s == "conic_first" || s == "conic-first") return cevian::Flavor::ConicFirst;
  throw UsageError("field 'flavor': expected trace_random or conic_first, got '" + s + "'");
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("CEVIAN_SEED");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end) throw UsageError("CEVIAN_SEED: invalid integer");
  return v;
}

/// Triangle from config field "triangle": three [x, y] rational pairs.
cevian::Triangle triangle_from(const ordered_json& cfg) {
  if (!cfg.contains("triangle")) throw UsageError("field 'triangle' is required");
  const auto& t = cfg["triangle"];
  if (!t.is_array() || t.size() != 3)
    throw UsageError("field 'triangle' must be three [x, y] pairs");
  std::array<cevian::Rat, 6> c;
  for (int i = 0; i < 3; ++i) {
    if (!t[i].is_array() || t[i].size() != 2)
      throw UsageError("field 'triangle' must be three [x, y] pairs");
    c[2 * i] = need_rational(t[i][0], "triangle");
    c[2 * i + 1] = need_rational(t[i][1], "triangle");
  }
  return cevian::Triangle(c[0], c[1], c[2], c[3], c[4], c[5]);
}

/// Trace set from a config field: three [u, v] rational pairs.
cevian::TraceSet traces_from(const ordered_json& cfg, const std::string& key) {
  if (!cfg.contains(key)) throw UsageError("field '" + key + "' is required");
  const auto& t = cfg[key];
  if (!t.is_array() || t.size() != 3)
    throw UsageError("field '" + key + "' must be three [u, v] pairs");
  std::array<cevian::Rat, 6> c;
  for (int i = 0; i < 3; ++i) {
    if (!t[i].is_array() || t[i].size() != 2)
      throw UsageError("field '" + key + "' must be three [u, v] pairs");
    c[2 * i] = need_rational(t[i][0], key);
    c[2 * i + 1] = need_rational(t[i][1], key);
  }
  return {cevian::Trace(c[0], c[1]), cevian::Trace(c[2], c[3]), cevian::Trace(c[4], c[5])};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  out << text;
}

ordered_json triple_json(const std::array<cevian::Int, 3>& t) {
  return ordered_json::array({t[0].get_str(), t[1].get_str(), t[2].get_str()});
}

ordered_json point_json(const cevian::ProjPoint& p) { return triple_json(p.triple()); }

ordered_json line_json(const cevian::ProjLine& l) { return triple_json(l.triple()); }

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// -- verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string config, output, mode, flavor;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int count = -1;
  long bound = 0;
};

int run_verify(const VerifyArgs& a) {
  ordered_json cfg = load_config(a.config);
  cevian::GeneratorSpec spec;
  if (a.seed_set)
    spec.seed = a.seed;
  else if (cfg.contains("seed"))
    spec.seed = cfg["seed"].get<std::uint64_t>();
  else if (auto e = env_seed())
    spec.seed = *e;
  if (a.count >= 0)
    spec.count = a.count;
  else if (cfg.contains("count"))
    spec.count = cfg["count"].get<int>();
  if (a.bound > 0)
    spec.bound = a.bound;
  else if (cfg.contains("bound"))
    spec.bound = cfg["bound"].get<long>();
  if (!a.mode.empty())
    spec.mode = parse_mode(a.mode);
  else if (cfg.contains("mode"))
    spec.mode = parse_mode(cfg["mode"].get<std::string>());
  if (!a.flavor.empty())
    spec.flavor = parse_flavor(a.flavor);
  else if (cfg.contains("flavor"))
    spec.flavor = parse_flavor(cfg["flavor"].get<std::string>());

  std::string out_path = a.output;
  if (out_path.empty() && cfg.contains("output")) out_path = cfg["output"].get<std::string>();

  auto report = cevian::run_suite(spec);
  write_output(out_path, report.serialize());
  return report.failures() == 0 ? kOk : kVerifyFail;
}

// -- construct ----------------------------------------------------------------

cevian::Configuration configuration_from(const ordered_json& cfg, const std::string& mode_flag) {
  cevian::Triangle tri = triangle_from(cfg);
  cevian::TraceSet traces = traces_from(cfg, "traces");
  cevian::ModeKind kind = cevian::ModeKind::Isogonal;
  if (!mode_flag.empty())
    kind = parse_mode(mode_flag);
  else if (cfg.contains("mode"))
    kind = parse_mode(cfg["mode"].get<std::string>());
  cevian::Mode mode = kind == cevian::ModeKind::Isogonal ? cevian::Mode::isogonal()
                      : kind == cevian::ModeKind::Isotomic
                          ? cevian::Mode::isotomic()
                          : cevian::Mode::free(traces_from(cfg, "second_traces"));
  return cevian::build_configuration(tri, traces, mode);
}

int run_construct(const std::string& config, const std::string& mode_flag,
                  const std::string& output) {
  ordered_json cfg = load_config(config);
  auto c = configuration_from(cfg, mode_flag);

  ordered_json doc;
  doc["mode"] = cevian::mode_name(c.mode);
  doc["triangle"] = {{"A", point_json(c.tri.A())}, {"B", point_json(c.tri.B())},
                     {"C", point_json(c.tri.C())}};
  doc["lines"] = {{"lA", line_json(c.lA)},   {"lA'", line_json(c.lAp)},
                  {"lB", line_json(c.lB)},   {"lB'", line_json(c.lBp)},
                  {"lC", line_json(c.lC)},   {"lC'", line_json(c.lCp)}};
  doc["hexagon"] = {{"X", point_json(c.X)},   {"Y", point_json(c.Y)},
                    {"Z", point_json(c.Z)},   {"X'", point_json(c.Xp)},
                    {"Y'", point_json(c.Yp)}, {"Z'", point_json(c.Zp)}};
  doc["traces"] = {{"A1", point_json(c.A1)},   {"B1", point_json(c.B1)},
                   {"C1", point_json(c.C1)},   {"A1'", point_json(c.A1p)},
                   {"B1'", point_json(c.B1p)}, {"C1'", point_json(c.C1p)}};
  doc["trace_barycentrics"] = {{"A1", triple_json(c.tA.triple())},
                               {"B1", triple_json(c.tB.triple())},
                               {"C1", triple_json(c.tC.triple())},
                               {"A1'", triple_json(c.tAp.triple())},
                               {"B1'", triple_json(c.tBp.triple())},
                               {"C1'", triple_json(c.tCp.triple())}};
  doc["centers"] = {{"R", point_json(c.R)}, {"R'", point_json(c.Rp)}, {"Q", point_json(c.Q)}};
  // the auxiliary loci collapse in symmetric configurations; report the
  // degeneracy instead of failing the whole construction
  try {
    auto feet = cevian::h_points(c);
    doc["feet"] = {{"HA", point_json(feet[0])},  {"HB", point_json(feet[1])},
                   {"HC", point_json(feet[2])},  {"HA'", point_json(feet[3])},
                   {"HB'", point_json(feet[4])}, {"HC'", point_json(feet[5])}};
  } catch (const cevian::GeometryError& e) {
    doc["feet"] = {{"degenerate", e.what()}};
  }
  try {
    auto d = cevian::derived_points(c);
    doc["derived"] = {{"A'", point_json(d.Ap)}, {"B'", point_json(d.Bp)},
                      {"C'", point_json(d.Cp)}, {"A2", point_json(d.A2)},
                      {"B2", point_json(d.B2)}, {"C2", point_json(d.C2)},
                      {"A3", point_json(d.A3)}, {"B3", point_json(d.B3)},
                      {"C3", point_json(d.C3)}};
  } catch (const cevian::GeometryError& e) {
    doc["derived"] = {{"degenerate", e.what()}};
  }
  write_output(output, doc.dump(2) + "\n");
  return kOk;
}

// -- family -------------------------------------------------------------------

int run_family(const std::string& config, std::vector<double> grid, bool grid_set,
               const std::string& output) {
  ordered_json cfg = load_config(config);
  // default triangle: the 3-4-5 right triangle
  cevian::Triangle tri = cfg.contains("triangle")
                             ? triangle_from(cfg)
                             : cevian::Triangle(cevian::Rat(0), cevian::Rat(0), cevian::Rat(4),
                                                cevian::Rat(0), cevian::Rat(0), cevian::Rat(3));
  if (!grid_set && cfg.contains("k_grid")) {
    grid = cfg["k_grid"].get<std::vector<double>>();
    grid_set = true;
  }
  if (!grid_set)
    for (int i = -19; i <= 19; ++i) grid.push_back(i * 0.05);
  for (double k : grid)
    if (!(k >= -1 && k <= 1)) throw UsageError("field 'k_grid': k outside [-1, 1]");

  // anchor values are always sampled
  for (double k : {-1.0, 0.0, 1.0 / 3, 0.5, 2.0 / 3, 1.0}) grid.push_back(k);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             grid.end());

  cevian::morley::NumTri nt({tri.A().cart_x().get_d(), tri.A().cart_y().get_d()},
                            {tri.B().cart_x().get_d(), tri.B().cart_y().get_d()},
                            {tri.C().cart_x().get_d(), tri.C().cart_y().get_d()});
  auto samples = cevian::morley::sample_curve(nt, grid);
  std::string out = "k,x,y,z,cartesian_x,cartesian_y\n";
  for (const auto& s : samples) {
    if (!s.point) {
      out += "# pole at k=" + g17(s.k) + "\n";
      continue;
    }
    const auto cart = s.point->cartesian(nt);
    out += g17(s.k) + "," + g17(s.point->x) + "," + g17(s.point->y) + "," + g17(s.point->z) +
           "," + g17(cart.x) + "," + g17(cart.y) + "\n";
  }
  write_output(output, out);
  return kOk;
}

// -- figure -------------------------------------------------------------------

int run_figure(const std::string& config, const std::string& mode_flag, int samples,
               const std::string& output) {
  ordered_json cfg = load_config(config);
  auto c = configuration_from(cfg, mode_flag);
  write_output(output, cevian::render_figure(c, samples));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cevian-hexagon constructions, theorem verification and figures"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the randomized theorem suite");
  verify->add_option("--config", va.config, "JSON config file");
  auto* seed_opt = verify->add_option("--seed", va.seed, "Generator seed");
  verify->add_option("--count", va.count, "Instances per statement");
  verify->add_option("--bound", va.bound, "Trace coefficient bound (>= 2)");
  verify->add_option("--mode", va.mode, "isogonal | isotomic | free");
  verify->add_option("--flavor", va.flavor, "trace_random | conic_first");
  verify->add_option("--output,-o", va.output, "Report path (default stdout)");

  std::string c_config, c_mode, c_output;
  auto* construct = app.add_subcommand("construct", "Emit all named objects of a configuration");
  construct->add_option("--config", c_config, "JSON config file")->required();
  construct->add_option("--mode", c_mode, "isogonal | isotomic | free");
  construct->add_option("--output,-o", c_output, "Document path (default stdout)");

  std::string f_config, f_output;
  std::vector<double> f_grid;
  auto* family = app.add_subcommand("family", "Sample the R(k) concurrence curve as CSV");
  family->add_option("--config", f_config, "JSON config file");
  auto* grid_opt = family->add_option("--k", f_grid, "Grid values in [-1, 1]");
  family->add_option("--output,-o", f_output, "CSV path (default stdout)");

  std::string g_config, g_mode, g_output;
  int g_samples = 256;
  auto* figure = app.add_subcommand("figure", "Render a configuration as SVG");
  figure->add_option("--config", g_config, "JSON config file")->required();
  figure->add_option("--mode", g_mode, "isogonal | isotomic | free");
  figure->add_option("--samples", g_samples, "Conic polyline samples (>= 256)");
  figure->add_option("--output,-o", g_output, "SVG path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  va.seed_set = seed_opt->count() > 0;
  try {
    if (verify->parsed()) return run_verify(va);
    if (construct->parsed()) return run_construct(c_config, c_mode, c_output);
    if (family->parsed()) return run_family(f_config, f_grid, grid_opt->count() > 0, f_output);
    if (figure->parsed())
      return run_figure(g_config, g_mode, std::max(g_samples, 256), g_output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cevian::GeometryError& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kDegenerate;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
