// Command-line front end: builds or loads a graph window, runs one of the
// analyses, and writes the JSON/CSV artifacts. Exit codes: 0 on success, 1 on
// usage or I/O errors, 2 when a derived mathematical check fails.

#include <CLI11.hpp>

#include "dirlap/cheeger.hpp"
#include "dirlap/generators.hpp"
#include "dirlap/graph_io.hpp"
#include "dirlap/metric.hpp"
#include "dirlap/operators.hpp"
#include "dirlap/report.hpp"
#include "dirlap/spectra.hpp"
#include "dirlap/validate.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace dirlap;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A derived check that should hold mathematically came out false.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input_path;
  std::string gen_kind;
  std::string output = ".";
  std::string gen_output = "-";  // gen writes a single file; "-" is stdout
  double tol_beta = 1e-12;
  std::uint64_t seed = 0;
  int radius = 8;
  int size = 12;
  double density = 0.3;
  int cycles = 4;
  double weight_min = 0.25;
  double weight_max = 4.0;
  std::string forward = "1";
  std::string backward = "0";
  int angles = 720;
  int n_max = 4;
  std::string k_schedule = "x4";
  int repro_radius = 64;
  int repro_n_max = 8;
};

GeneratorSpec make_spec(const RunConfig& c) {
  GeneratorSpec spec;
  if (!c.input_path.empty()) {
    spec.kind = GeneratorSpec::Kind::file;
    spec.path = c.input_path;
    return spec;
  }
  if (c.gen_kind.empty()) throw UsageError("need --input FILE or --gen KIND");
  if (c.gen_kind == "z-line")
    spec.kind = GeneratorSpec::Kind::z_line;
  else if (c.gen_kind == "directed-cycle")
    spec.kind = GeneratorSpec::Kind::directed_cycle;
  else if (c.gen_kind == "symmetric-random")
    spec.kind = GeneratorSpec::Kind::symmetric_random;
  else if (c.gen_kind == "circulation-random")
    spec.kind = GeneratorSpec::Kind::circulation_random;
  else
    throw UsageError("unknown generator kind: " + c.gen_kind);
  spec.radius = c.radius;
  spec.size = c.size;
  spec.seed = c.seed;
  spec.density = c.density;
  spec.cycles = c.cycles;
  if (c.weight_min <= 0 || c.weight_max < c.weight_min)
    throw UsageError("weight range must satisfy 0 < min <= max");
  spec.weight_range = {c.weight_min, c.weight_max};
  auto fw = parse_rational(c.forward);
  auto bw = parse_rational(c.backward);
  if (!fw || *fw < 0) throw UsageError("--forward must be a non-negative rational");
  if (!bw || *bw < 0) throw UsageError("--backward must be a non-negative rational");
  if (*fw + *bw == 0) throw UsageError("cycle weights cannot both be zero");
  spec.forward = *fw;
  spec.backward = *bw;
  return spec;
}

fs::path ensure_dir(const std::string& out) {
  fs::path dir(out.empty() ? "." : out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw UsageError("write failed: " + path.string());
}

template <class Fn>
void write_stream(const fs::path& path, Fn&& fill) {
  std::ostringstream buf;
  fill(buf);
  write_text(path, buf.str());
}

std::vector<int> interior_or_throw(const Graph& g) {
  std::vector<int> in = g.interior();
  if (in.empty()) throw UsageError("graph has no interior vertices");
  return in;
}

std::vector<int> levels_up_to(int n_max) {
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  std::vector<int> ns(n_max);
  for (int i = 0; i < n_max; ++i) ns[i] = i + 1;
  return ns;
}

// Accepted forms: "xM" for per-level rows n+1..M*n, or "A..B" for the fixed
// row A..B at every level (entries <= n are dropped).
std::vector<std::vector<int>> parse_k_schedule(const std::string& text,
                                               const std::vector<int>& ns) {
  auto is_int = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  std::vector<std::vector<int>> rows;
  if (text.size() >= 2 && text[0] == 'x' && is_int(text.substr(1))) {
    int mult = std::stoi(text.substr(1));
    if (mult < 2) throw UsageError("--k-schedule multiplier must be at least 2");
    for (int n : ns) {
      std::vector<int> row;
      for (int k = n + 1; k <= mult * n; ++k) row.push_back(k);
      rows.push_back(std::move(row));
    }
    return rows;
  }
  auto sep = text.find("..");
  if (sep != std::string::npos && is_int(text.substr(0, sep)) && is_int(text.substr(sep + 2))) {
    int lo = std::stoi(text.substr(0, sep));
    int hi = std::stoi(text.substr(sep + 2));
    for (int n : ns) {
      std::vector<int> row;
      for (int k = std::max(lo, n + 1); k <= hi; ++k) row.push_back(k);
      if (row.empty())
        throw UsageError("--k-schedule " + text + " leaves no k > n for n = " +
                         std::to_string(n));
      rows.push_back(std::move(row));
    }
    return rows;
  }
  throw UsageError("cannot parse --k-schedule '" + text + "' (expected xM or A..B)");
}

// Bound values like n/8 print with at least one decimal (1.0, 0.125).
std::string format_bound(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s(buf);
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

void cmd_validate(const RunConfig& c) {
  Graph g = make_spec(c).build();
  if (c.tol_beta < 0) throw UsageError("--tol-beta must be non-negative");
  ValidationReport r = validate(g, c.tol_beta);
  fs::path dir = ensure_dir(c.output);
  write_text(dir / "validation.json", validation_json(g, r));
  std::cout << "validation: " << g.size() << " vertices, " << g.edge_count()
            << " edges; beta_ok=" << (r.beta_ok ? "yes" : "no")
            << " (max deviation " << format_rational(r.beta_max_deviation_exact)
            << "), gamma = " << format_rational(r.gamma_constant_exact)
            << ", " << to_string(r.connectivity_class) << "\n";
  std::cout << "wrote " << (dir / "validation.json").string() << "\n";
}

void cmd_spectra(const RunConfig& c) {
  Graph g = make_spec(c).build();
  std::vector<int> interior = interior_or_throw(g);
  auto evs = eigenvalues(assemble(g, interior, OpKind::delta));
  fs::path dir = ensure_dir(c.output);
  write_stream(dir / "eigenvalues.csv", [&](std::ostream& out) {
    out << "re,im\n";
    for (auto z : evs)
      out << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
  });
  double min_re = evs.empty() ? 0 : evs.front().real();
  std::cout << "spectra: " << evs.size() << " eigenvalues of the Dirichlet Laplacian on "
            << interior.size() << " interior vertices\n";
  std::cout << "min_re = " << format_double(min_re) << "\n";
  try {
    double l1 = lambda1_symmetric(assemble(g, interior, OpKind::S));
    std::cout << "lambda1 = " << format_double(l1) << "\n";
  } catch (const GraphError& e) {
    std::cout << "lambda1 unavailable: " << e.what() << "\n";
  }
  std::cout << "wrote " << (dir / "eigenvalues.csv").string() << "\n";
}

void cmd_range(const RunConfig& c) {
  Graph g = make_spec(c).build();
  std::vector<int> interior = interior_or_throw(g);
  RangeSweep sweep = numerical_range_boundary(assemble(g, interior, OpKind::delta), c.angles);
  SectorReport sector = sector_fit(g, interior);
  fs::path dir = ensure_dir(c.output);
  write_stream(dir / "range.csv", [&](std::ostream& out) { write_range_csv(out, sweep); });
  write_text(dir / "sector.json", sector_json(sector, static_cast<int>(interior.size())));
  std::cout << "range: " << sweep.points.size() << " boundary points; sector vertex "
            << format_double(sector.vertex) << ", half-angle " << format_double(sector.half_angle)
            << (sector.sectorial ? " (sectorial)" : " (not sectorial)") << "\n";
  std::cout << "wrote " << (dir / "range.csv").string() << " and "
            << (dir / "sector.json").string() << "\n";
}

void cmd_cheeger(const RunConfig& c) {
  Graph g = make_spec(c).build();
  std::vector<int> omega = interior_or_throw(g);
  CheegerResult ch =
      static_cast<int>(omega.size()) <= 22 ? cheeger_exact(g, omega) : cheeger_heuristic(g, omega);
  SupRatio sup = m_sup(g, omega);
  CheegerInequality ineq = inequality_check(g, omega);
  fs::path dir = ensure_dir(c.output);
  write_text(dir / "cheeger.json",
             cheeger_json(g, static_cast<int>(omega.size()), ch, sup, ineq));
  std::cout << "cheeger: h = " << format_double(ch.h_d) << " (witness "
            << ch.witness.size() << " vertices), h_tilde = " << format_double(ch.h_tilde_d)
            << (ch.exact ? ", exact" : ", heuristic upper bounds") << "\n";
  std::cout << "two-sided estimate h^2/8 <= M nu <= M h/2: "
            << (ineq.holds ? "holds" : "VIOLATED") << "\n";
  std::cout << "wrote " << (dir / "cheeger.json").string() << "\n";
  if (!ineq.holds)
    throw CheckFailure("two-sided isoperimetric estimate violated on this graph");
}

void cmd_essgap(const RunConfig& c) {
  GeneratorSpec spec = make_spec(c);
  std::vector<int> ns = levels_up_to(c.n_max);
  auto schedule = parse_k_schedule(c.k_schedule, ns);
  EssSpectrumEstimate est = ess_spectrum_estimate(spec, ns, schedule);
  AbsReport abs = abs_condition(spec, ns, schedule);
  fs::path dir = ensure_dir(c.output);
  write_stream(dir / "essgap.csv", [&](std::ostream& out) { write_essgap_csv(out, est); });
  write_text(dir / "essgap.json", essgap_json(spec.describe(), est, &abs));
  for (std::size_t i = 0; i < ns.size(); ++i)
    std::cout << "n=" << ns[i] << " inner_limit=" << format_double(est.inner_limits[i])
              << " c_n=" << format_double(abs.c_n[i]) << " margin=" << format_double(abs.margin[i])
              << "\n";
  std::cout << "exterior-gap verdict: " << est.verdict
            << (est.window_saturated ? " (window saturated)" : "") << "\n";
  std::cout << "coercivity verdict: " << abs.verdict << "\n";
  std::cout << "wrote " << (dir / "essgap.csv").string() << " and "
            << (dir / "essgap.json").string() << "\n";
}

void cmd_gen(const RunConfig& c) {
  if (!c.input_path.empty()) throw UsageError("gen builds a graph; --input makes no sense here");
  Graph g = make_spec(c).build();
  if (c.gen_output == "-" || c.gen_output.empty()) {
    std::cout << serialize_graph(g);
    return;
  }
  fs::path path(c.gen_output);
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw UsageError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  write_text(path, serialize_graph(g));
  std::cout << "wrote " << path.string() << " (" << g.size() << " vertices, " << g.edge_count()
            << " edges)\n";
}

void cmd_repro(const RunConfig& c) {
  const int radius = c.repro_radius;
  const int n_max = c.repro_n_max;
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  if (radius < 2 * n_max + 2)
    throw UsageError("window radius " + std::to_string(radius) +
                     " too small for n-max " + std::to_string(n_max) +
                     " (need radius >= 2*n_max + 2)");
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::z_line;
  spec.radius = radius;
  Graph g = spec.build();
  fs::path dir = ensure_dir(c.output);
  std::vector<CheckItem> checks;
  auto note = [&](std::string name, bool pass, std::string detail) {
    std::cout << "check " << name << ": " << (pass ? "pass" : "FAIL") << " (" << detail << ")\n";
    checks.push_back({std::move(name), pass, std::move(detail)});
  };

  std::cout << "repro: cubic-weight integer line, window radius " << radius << ", levels 1.."
            << n_max << "\n";

  ValidationReport vr = validate(g, 1e-12);
  write_text(dir / "validation.json", validation_json(g, vr));
  note("beta balance exact", vr.beta_max_deviation_exact == 0,
       "max |beta+ - beta-| = " + format_rational(vr.beta_max_deviation_exact));
  note("gamma constant equals 1", vr.gamma_constant_exact == 1,
       "gamma = " + format_rational(vr.gamma_constant_exact));

  // Bottom eigenvalue of the symmetric Dirichlet restriction outside each ball,
  // against the linear lower bound n/8.
  std::vector<int> ns = levels_up_to(n_max);
  std::vector<int> dist = hop_distance_field(g, default_center(g));
  std::vector<double> l1s, bounds;
  bool lb_ok = true, inc_ok = true;
  for (int n : ns) {
    std::vector<int> subset;
    for (int v : g.interior())
      if (dist[v] >= n) subset.push_back(v);
    double l1 = lambda1_symmetric(assemble(g, subset, OpKind::S));
    double bound = n / 8.0;
    bool pass = l1 >= bound;
    lb_ok = lb_ok && pass;
    if (!l1s.empty() && l1 <= l1s.back()) inc_ok = false;
    std::cout << "lambda1(n=" << n << ") >= " << format_bound(bound) << " : "
              << (pass ? "pass" : "FAIL") << " (lambda1 = " << format_double(l1) << ")\n";
    l1s.push_back(l1);
    bounds.push_back(bound);
  }
  write_stream(dir / "lambda1_table.csv",
               [&](std::ostream& out) { write_lambda1_csv(out, ns, l1s, bounds); });
  checks.push_back({"lambda1 exceeds n/8", lb_ok, "levels 1.." + std::to_string(n_max)});
  note("lambda1 strictly increasing", inc_ok,
       "lambda1(1) = " + format_double(l1s.front()) + " .. lambda1(" + std::to_string(n_max) +
           ") = " + format_double(l1s.back()));

  TrendReport trend = h_infinity_trend(g, ns);
  write_stream(dir / "htilde_trend.csv",
               [&](std::ostream& out) { write_trend_csv(out, trend); });
  bool env_ok = true, dec_ok = true;
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    double n = ns[i];
    double envelope = 2 * (n * n * n + std::pow(2 * n + 1, 3)) /
                      ((n + 1) * (n * n * n + std::pow(n + 1, 3)));
    double ratio = trend.testset_ratio[i];
    if (!(ratio <= envelope)) env_ok = false;
    if (!(ratio < prev)) dec_ok = false;
    prev = ratio;
  }
  note("h-tilde test sets under envelope", env_ok && dec_ok,
       "last ratio " + format_double(trend.testset_ratio.back()) + ", slope " +
           format_double(trend.testset_exponent));

  SectorReport sector = sector_fit(g, g.interior(), -0.5);
  write_text(dir / "sector.json", sector_json(sector, static_cast<int>(g.interior().size())));
  bool sector_ok = sector.im_bound <= 0.5 + 1e-8 &&
                   sector.half_angle <= std::numbers::pi / 4 + 1e-6 && sector.sectorial;
  note("sector within quarter angle at -1/2", sector_ok,
       "im_bound = " + format_double(sector.im_bound) + ", half_angle = " +
           format_double(sector.half_angle));

  auto schedule = default_k_schedule(ns);
  EssSpectrumEstimate est = ess_spectrum_estimate(spec, ns, schedule);
  AbsReport abs = abs_condition(spec, ns, schedule);
  write_stream(dir / "essgap.csv", [&](std::ostream& out) { write_essgap_csv(out, est); });
  write_text(dir / "essgap.json", essgap_json(spec.describe(), est, &abs));
  bool margins_ok = true;
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < abs.margin.size(); ++i) {
    if (abs.margin[i] < -1e-9 * std::max(1.0, std::abs(abs.c_n[i]))) margins_ok = false;
    min_margin = std::min(min_margin, abs.margin[i]);
  }
  note("coercivity cells below lambda1", margins_ok && abs.verdict == "satisfied",
       "min margin " + format_double(min_margin) + ", verdict " + abs.verdict);
  note("exterior gap diverges", est.verdict == "diverges",
       "inner limits " + format_double(est.inner_limits.front()) + " -> " +
           format_double(est.inner_limits.back()));

  write_text(dir / "summary.json", repro_summary_json("z-line", radius, checks));
  bool all = true;
  for (const CheckItem& item : checks) all = all && item.pass;
  std::cout << "summary: " << (all ? "pass" : "fail") << "\n";
  std::cout << "wrote bundle to " << dir.string() << "\n";
  if (!all) {
    std::string names;
    for (const CheckItem& item : checks)
      if (!item.pass) names += (names.empty() ? "" : ", ") + item.name;
    throw CheckFailure("failed checks: " + names);
  }
}

void add_input_options(CLI::App* cmd, RunConfig& c) {
  auto* in = cmd->add_option("--input", c.input_path, "graph file to load");
  auto* gen = cmd->add_option("--gen", c.gen_kind, "generator kind")
                  ->check(CLI::IsMember(
                      {"z-line", "directed-cycle", "symmetric-random", "circulation-random"}));
  in->excludes(gen);
  gen->excludes(in);
  cmd->add_option("--radius", c.radius, "window radius (z-line)")->check(CLI::PositiveNumber);
  cmd->add_option("--size", c.size, "vertex count (cycle / random kinds)")
      ->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--density", c.density, "symmetric edge density (random kinds)")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--cycles", c.cycles, "circulation cycle count")->check(CLI::NonNegativeNumber);
  cmd->add_option("--forward", c.forward, "cycle forward weight (rational)");
  cmd->add_option("--backward", c.backward, "cycle backward weight (rational)");
  cmd->add_option("--weight-min", c.weight_min, "random weight lower bound");
  cmd->add_option("--weight-max", c.weight_max, "random weight upper bound");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"non-self-adjoint graph Laplacian toolkit"};
  app.require_subcommand(1);

  CLI::App* validate_cmd = app.add_subcommand("validate", "check weight assumptions");
  add_input_options(validate_cmd, c);
  validate_cmd->add_option("--out", c.output, "output directory");
  validate_cmd->add_option("--tol-beta", c.tol_beta, "balance tolerance")
      ->check(CLI::NonNegativeNumber);

  CLI::App* spectra_cmd = app.add_subcommand("spectra", "Dirichlet eigenvalues and lambda1");
  add_input_options(spectra_cmd, c);
  spectra_cmd->add_option("--out", c.output, "output directory");

  CLI::App* range_cmd = app.add_subcommand("range", "numerical range boundary and sector");
  add_input_options(range_cmd, c);
  range_cmd->add_option("--out", c.output, "output directory");
  range_cmd->add_option("--angles", c.angles, "sweep angle count")->check(CLI::Range(8, 1 << 20));

  CLI::App* cheeger_cmd = app.add_subcommand("cheeger", "isoperimetric constants on the interior");
  add_input_options(cheeger_cmd, c);
  cheeger_cmd->add_option("--out", c.output, "output directory");

  CLI::App* essgap_cmd = app.add_subcommand("essgap", "exterior spectral gap over a filtration");
  add_input_options(essgap_cmd, c);
  essgap_cmd->add_option("--out", c.output, "output directory");
  essgap_cmd->add_option("--n-max", c.n_max, "largest filtration level")->check(CLI::PositiveNumber);
  essgap_cmd->add_option("--k-schedule", c.k_schedule, "outer radii per level (xM or A..B)");

  CLI::App* repro_cmd =
      app.add_subcommand("repro-z", "reproduce the cubic-weight line results end to end");
  repro_cmd->add_option("--radius", c.repro_radius, "window radius")->check(CLI::PositiveNumber);
  repro_cmd->add_option("--n-max", c.repro_n_max, "largest filtration level")
      ->check(CLI::PositiveNumber);
  repro_cmd->add_option("--out", c.output, "output directory");

  CLI::App* gen_cmd = app.add_subcommand("gen", "write a generated graph file");
  add_input_options(gen_cmd, c);
  gen_cmd->add_option("--out", c.gen_output, "output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate_cmd->parsed()) cmd_validate(c);
    if (spectra_cmd->parsed()) cmd_spectra(c);
    if (range_cmd->parsed()) cmd_range(c);
    if (cheeger_cmd->parsed()) cmd_cheeger(c);
    if (essgap_cmd->parsed()) cmd_essgap(c);
    if (repro_cmd->parsed()) cmd_repro(c);
    if (gen_cmd->parsed()) cmd_gen(c);
    return 0;
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
