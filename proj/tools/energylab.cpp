// energylab command-line front end.
//
// Exit codes: 0 success (all criteria pass), 1 verification failure or
// runtime failure, 2 usage or parse error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "energylab/bounds.hpp"
#include "energylab/constructors.hpp"
#include "energylab/experiments.hpp"
#include "energylab/graph.hpp"
#include "energylab/random.hpp"
#include "energylab/spectral.hpp"
#include "energylab/transform.hpp"
#include "energylab/verify.hpp"

namespace el = energylab;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::uint64_t seed = 1;
  std::string out;
  std::string format;
  std::optional<double> tol;
  std::optional<std::size_t> trials, n, k;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

el::Graph read_graph(const std::string& path) {
  std::string text = read_input(path);
  // first non-empty line only
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return el::graph6_decode(line);
  }
  throw UsageError("no graph6 input");
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + ": '" + s + "'");
  }
}

void require_args(const std::vector<std::string>& args, std::size_t count, const std::string& usage) {
  if (args.size() != count) throw UsageError("expected: construct " + usage);
}

json sidecar(const el::Graph& g, const std::string& family, const json& params) {
  json j;
  j["schema"] = 1;
  j["family"] = family;
  j["params"] = params;
  j["n"] = g.order();
  j["m"] = g.size();
  const long k = g.regular_degree();
  if (k >= 0) j["k"] = k;
  return j;
}

int cmd_construct(const std::string& family, const std::vector<std::string>& args, const RunConfig& cfg) {
  auto arg = [&](std::size_t i, const char* what) { return parse_uint(args.at(i), what); };
  auto u32 = [&](std::size_t i, const char* what) {
    const auto v = arg(i, what);
    if (v > UINT32_MAX) throw UsageError(std::string(what) + " too large");
    return static_cast<std::uint32_t>(v);
  };
  el::Graph g(1);
  json params = json::object();
  if (family == "complete") {
    require_args(args, 1, "complete <n>");
    g = el::complete(arg(0, "n"));
    params["n"] = arg(0, "n");
  } else if (family == "matching") {
    require_args(args, 1, "matching <n>");
    g = el::perfect_matching(arg(0, "n"));
    params["n"] = arg(0, "n");
  } else if (family == "cycle") {
    require_args(args, 1, "cycle <n>");
    g = el::cycle(arg(0, "n"));
    params["n"] = arg(0, "n");
  } else if (family == "paley") {
    require_args(args, 1, "paley <p>");
    g = el::paley(u32(0, "p"));
    params["p"] = arg(0, "p");
  } else if (family == "symplectic" || family == "symplectic-complement") {
    require_args(args, 2, family + " <q> <m>");
    const auto q = u32(0, "q");
    const auto m = u32(1, "m");
    g = family == "symplectic" ? el::symplectic_graph(q, m) : el::symplectic_complement(q, m);
    params["q"] = q;
    params["m"] = m;
  } else if (family == "ahrens-szekeres") {
    require_args(args, 1, "ahrens-szekeres <q>");
    g = el::ahrens_szekeres(u32(0, "q"));
    params["q"] = arg(0, "q");
  } else if (family == "pg-incidence") {
    require_args(args, 1, "pg-incidence <q>");
    g = el::pg_incidence(u32(0, "q"));
    params["q"] = arg(0, "q");
  } else if (family == "random-regular") {
    require_args(args, 2, "random-regular <n> <k>");
    g = el::random_regular(arg(0, "n"), arg(1, "k"), cfg.seed);
    params["n"] = arg(0, "n");
    params["k"] = arg(1, "k");
    params["seed"] = cfg.seed;
  } else {
    throw UsageError("unknown family '" + family + "'");
  }

  const json meta = sidecar(g, family, params);
  if (cfg.format == "json") {
    emit(meta.dump(2), cfg.out);
    return 0;
  }
  if (cfg.format == "csv") throw UsageError("construct: csv output is not supported");
  emit(el::graph6_encode(g), cfg.out);
  if (!cfg.out.empty()) emit(meta.dump(2), cfg.out + ".json");
  return 0;
}

int cmd_energy(const std::string& input, const RunConfig& cfg) {
  const auto report = el::energy_report(read_graph(input));
  if (cfg.format == "csv")
    emit(el::energy_report_csv_header() + "\n" + el::to_csv_row(report), cfg.out);
  else if (cfg.format == "json" || cfg.format.empty())
    emit(el::to_json(report), cfg.out);
  else
    throw UsageError("energy: format must be json or csv");
  return 0;
}

json regularize_json(const el::RegularizeReport& r) {
  json j;
  j["input_deviation"] = r.input_deviation.str();
  j["edits"] = r.edits;
  j["max_degree"] = r.max_degree;
  j["min_degree"] = r.min_degree;
  json moves = json::array();
  for (const auto& m : r.moves)
    moves.push_back({{"removed", {m.removed.first, m.removed.second}}, {"added", {m.added.first, m.added.second}}});
  j["moves"] = std::move(moves);
  return j;
}

int cmd_regularize(const std::string& input, const RunConfig& cfg) {
  const auto g = read_graph(input);
  const auto [r, report] = el::regularize(g);
  if (cfg.format == "json") {
    json j;
    j["schema"] = 1;
    j["graph6"] = el::graph6_encode(r);
    j["energy_before"] = el::energy(g);
    j["energy_after"] = el::energy(r);
    j["report"] = regularize_json(report);
    emit(j.dump(2), cfg.out);
  } else {
    emit(el::graph6_encode(r), cfg.out);
  }
  return 0;
}

int cmd_extend(const std::string& input, const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("extend: --n is required");
  const auto h = read_graph(input);
  const auto [g, report] = el::extend_regular(h, *cfg.n);
  if (cfg.format == "json") {
    json j;
    j["schema"] = 1;
    j["graph6"] = el::graph6_encode(g);
    j["t"] = report.t;
    j["n"] = report.n;
    j["k"] = report.k;
    j["intermediate_deviation"] = report.intermediate_deviation;
    j["energy_h"] = report.energy_h;
    j["energy_g0"] = report.energy_g0;
    j["energy_g"] = report.energy_g;
    j["budget"] = report.budget;
    j["within_budget"] = report.within_budget;
    j["regularization"] = regularize_json(report.regularization);
    emit(j.dump(2), cfg.out);
  } else {
    emit(el::graph6_encode(g), cfg.out);
  }
  return 0;
}

int cmd_dense(std::size_t n, const RunConfig& cfg) {
  const auto [g, report] = el::theorem2_construct(n);
  if (cfg.format == "json") {
    json j;
    j["schema"] = 1;
    j["graph6"] = el::graph6_encode(g);
    j["n"] = report.n;
    j["prime"] = report.prime.p;
    j["prime_margin_threshold"] = report.prime.margin_threshold;
    j["prime_within_margin"] = report.prime.within_margin;
    j["k"] = report.k;
    j["energy"] = report.energy;
    j["threshold"] = report.threshold;
    j["exceeds"] = report.exceeds;
    emit(j.dump(2), cfg.out);
  } else {
    emit(el::graph6_encode(g), cfg.out);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
  el::VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.n = cfg.n;
  opts.k = cfg.k;
  opts.trials = cfg.trials;
  opts.tolerance = cfg.tol;

  std::vector<std::string> names;
  if (suite == "all") {
    names = el::suite_names();
  } else {
    const auto& known = el::suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) throw UsageError("unknown suite '" + suite + "'");
    names = {suite};
  }
  std::vector<el::SuiteResult> results;
  bool ok = true;
  for (const auto& name : names) {
    results.push_back(el::run_suite(name, opts));
    for (const auto& c : results.back().criteria)
      std::cerr << (c.passed ? "PASS " : "FAIL ") << name << ": " << c.name << "\n";
    ok = ok && results.back().passed();
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "suite,criterion,passed,measured,threshold\n";
    for (const auto& r : results)
      for (const auto& c : r.criteria)
        os << r.suite << ",\"" << c.name << "\"," << (c.passed ? 1 : 0) << ',' << c.measured << ',' << c.threshold
           << '\n';
    emit(os.str(), cfg.out);
  } else {
    emit(el::to_json(results), cfg.out);
  }
  return ok ? 0 : kExitFailure;
}

int cmd_esd(std::size_t n, std::size_t k, const RunConfig& cfg) {
  const std::size_t trials = cfg.trials.value_or(5);
  if (trials == 0) throw UsageError("esd: --trials must be >= 1");
  if ((n * k) % 2 != 0) throw UsageError("esd: n*k must be even");
  const auto r = el::run_esd(n, k, trials, cfg.seed);
  const int ki = static_cast<int>(k);
  const double scale = r.semicircle_scale();
  const auto& h = r.histogram;

  if (cfg.format == "json") {
    json j;
    j["schema"] = 1;
    j["n"] = n;
    j["k"] = k;
    j["trials"] = trials;
    j["seed"] = cfg.seed;
    j["energies"] = r.energies;
    j["mean_energy"] = r.mean_energy;
    j["mckay_energy_per_vertex"] = el::mckay_energy_const(ki);
    j["ks_mckay"] = r.ks_mckay;
    j["ks_mckay_samples"] = r.ks_mckay_exact;
    j["ks_semicircle"] = r.ks_semicircle;
    j["ks_semicircle_samples"] = r.ks_semicircle_exact;
    j["note"] = "one trivial eigenvalue k per trial is excluded from the Kesten-McKay comparison";
    json bins = json::array();
    for (std::size_t b = 0; b < h.counts.size(); ++b)
      bins.push_back({{"bin_lo", h.edges[b]}, {"bin_hi", h.edges[b + 1]}, {"count", h.counts[b]}});
    j["histogram"] = std::move(bins);
    emit(j.dump(2), cfg.out);
  } else if (cfg.format == "csv" || cfg.format.empty()) {
    std::ostringstream os;
    os.precision(12);
    os << "bin_lo,bin_hi,count,mckay_cdf,semicircle_cdf\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
      const double hi = h.edges[b + 1];
      os << h.edges[b] << ',' << hi << ',' << h.counts[b] << ',' << el::mckay_cdf(ki, hi) << ','
         << el::semicircle_cdf(hi * scale) << '\n';
    }
    emit(os.str(), cfg.out);
    std::cerr << "ks_mckay " << r.ks_mckay << " ks_semicircle " << r.ks_semicircle << " mean_energy " << r.mean_energy
              << "\n";
  } else {
    throw UsageError("esd: format must be json or csv");
  }
  return 0;
}

// Mean energy / n^{3/2} of G(n, p) over a grid of edge densities.
int cmd_sweep(std::size_t n, const RunConfig& cfg) {
  const std::size_t trials = cfg.trials.value_or(3);
  std::ostringstream os;
  os.precision(12);
  os << "p,mean_energy,energy_over_n32,sqrt_c_1mc\n";
  for (int step = 1; step <= 19; ++step) {
    const double p = step / 20.0;
    double total = 0.0;
    for (std::size_t t = 0; t < trials; ++t)
      total += el::energy(el::random_graph(n, p, el::derive_seed(cfg.seed, step * 1000 + t)));
    const double mean = total / static_cast<double>(trials);
    const double c = std::min(p, 1.0 - p);
    os << p << ',' << mean << ',' << mean / std::pow(static_cast<double>(n), 1.5) << ',' << std::sqrt(c * (1 - c))
       << '\n';
  }
  emit(os.str(), cfg.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"energylab: graph energy toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--out", cfg.out, "Output path (default stdout)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "graph6"}));
  app.add_option("--tol", cfg.tol, "Equality tolerance override");
  app.add_option("--trials", cfg.trials, "Trial count override");
  app.add_option("--n", cfg.n, "Order override");
  app.add_option("--k", cfg.k, "Degree override");
  app.fallthrough();

  std::string family;
  std::vector<std::string> params;
  auto* construct = app.add_subcommand("construct", "Build a graph family, write graph6");
  construct->add_option("family", family, "complete|matching|cycle|paley|symplectic|symplectic-complement|"
                                          "ahrens-szekeres|pg-incidence|random-regular")
      ->required();
  construct->add_option("params", params, "Family parameters");

  std::string input;
  auto* energy = app.add_subcommand("energy", "Energy report for a graph6 graph");
  energy->add_option("input", input, "graph6 file (default stdin)");
  auto* regularize = app.add_subcommand("regularize", "Edge-move a graph to near-regular");
  regularize->add_option("input", input, "graph6 file (default stdin)");
  auto* extend = app.add_subcommand("extend", "Extend a k-regular graph to order --n");
  extend->add_option("input", input, "graph6 file (default stdin)");

  std::size_t pos_n = 0, pos_k = 0;
  auto* dense = app.add_subcommand("dense-regular", "Paley-based dense regular graph of order n");
  dense->add_option("n", pos_n, "Order")->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite (or 'all')");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  auto* list = app.add_subcommand("suites", "List verification suites");

  auto* esd = app.add_subcommand("esd", "Empirical spectral distribution of random regular graphs");
  esd->add_option("n", pos_n, "Order")->required();
  esd->add_option("k", pos_k, "Degree")->required();

  auto* sweep = app.add_subcommand("sweep", "Energy of G(n,p) across densities (CSV)");
  sweep->add_option("n", pos_n, "Order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(family, params, cfg);
    if (*energy) return cmd_energy(input, cfg);
    if (*regularize) return cmd_regularize(input, cfg);
    if (*extend) return cmd_extend(input, cfg);
    if (*dense) return cmd_dense(pos_n, cfg);
    if (*verify) return cmd_verify(suite, cfg);
    if (*esd) return cmd_esd(pos_n, pos_k, cfg);
    if (*sweep) return cmd_sweep(pos_n, cfg);
    if (*list) {
      for (const auto& name : el::suite_names()) std::cout << name << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
