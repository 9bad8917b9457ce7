// polytf: command-line front end for the polynomial time-frequency toolkit.
//
// Subcommands: spectrum, psi, variance-sweep, quad, approx, uncertainty,
// uncertainty-witness.  Output is CSV (with a header row) or JSON, numbers
// formatted with the shortest representation that round-trips a double.
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polytf/approx.hpp"
#include "polytf/localization.hpp"
#include "polytf/quadrature.hpp"
#include "polytf/spectral.hpp"
#include "polytf/uncertainty.hpp"
#include "polytf/weights.hpp"

using nlohmann::json;
using namespace polytf;

namespace {

std::string fmt(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

struct CommonOpts {
  std::string family = "chebyshev1";
  double alpha = 0.0;
  double beta = 0.0;
  std::string config_path;
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 0;
};

void add_family_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--family", o.family,
                  "weight family: chebyshev1|chebyshev2|legendre|jacobi");
  cmd->add_option("--alpha", o.alpha, "jacobi exponent alpha (> -1)");
  cmd->add_option("--beta", o.beta, "jacobi exponent beta (> -1)");
  cmd->add_option("--config", o.config_path,
                  "JSON config with {\"family\":..., ...} overriding flags");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", o.output, "output path (default stdout)");
}

RecurrenceSource make_source(const CommonOpts& o) {
  std::string family = o.family;
  double alpha = o.alpha, beta = o.beta;
  std::vector<double> ca, cb;
  std::string tail = "error";
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw ParameterError("cannot open config " + o.config_path);
    json cfg = json::parse(in);
    if (cfg.contains("family")) family = cfg["family"].get<std::string>();
    if (cfg.contains("alpha")) alpha = cfg["alpha"].get<double>();
    if (cfg.contains("beta")) beta = cfg["beta"].get<double>();
    if (cfg.contains("a")) ca = cfg["a"].get<std::vector<double>>();
    if (cfg.contains("b")) cb = cfg["b"].get<std::vector<double>>();
    if (cfg.contains("tail")) tail = cfg["tail"].get<std::string>();
  }
  if (family == "chebyshev1") return RecurrenceSource::chebyshev1();
  if (family == "chebyshev2") return RecurrenceSource::chebyshev2();
  if (family == "legendre") return RecurrenceSource::legendre();
  if (family == "jacobi") return RecurrenceSource::jacobi(alpha, beta);
  if (family == "custom") {
    const auto t = tail == "constant" ? RecurrenceSource::Tail::Constant
                                      : RecurrenceSource::Tail::Error;
    return RecurrenceSource::custom(std::move(ca), std::move(cb), t);
  }
  throw ParameterError("unknown weight family \"" + family + "\"");
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw ParameterError("cannot open output " + o.output);
  out << text;
}

std::string csv_table(const std::string& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << header << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << row[i];
    os << "\n";
  }
  return os.str();
}

int thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("POLYTF_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw)
      hw = static_cast<unsigned>(cap);
  }
  return static_cast<int>(hw);
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const CommonOpts& o, int m, int n) {
  const RecurrenceSource src = make_source(o);
  const SlepianBasis basis = slepian_basis(src, m, n);
  if (o.format == "json") {
    json j{{"family", src.name()}, {"m", m}, {"n", n},
           {"eigenvalues", basis.eigenvalues}};
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (int k = 1; k <= basis.dim(); ++k)
    rows.push_back({std::to_string(k),
                    fmt(basis.eigenvalues[static_cast<size_t>(k - 1)])});
  emit(o, csv_table("k,x", rows));
  return 0;
}

// --------------------------------------------------------------------- psi

int run_psi(const CommonOpts& o, int m, int n, int k, int samples,
            const std::string& nodes_from) {
  const SlepianBasis basis = slepian_basis(make_source(o), m, n);
  std::vector<double> xs;
  if (!nodes_from.empty()) {
    std::ifstream in(nodes_from);
    if (!in) throw ParameterError("cannot open nodes file " + nodes_from);
    json j = json::parse(in);
    xs = j.at("nodes").get<std::vector<double>>();
  } else {
    if (samples < 2) throw ParameterError("--samples must be >= 2");
    xs.resize(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i)
      xs[static_cast<size_t>(i)] = -1.0 + 2.0 * i / (samples - 1);
  }
  const std::vector<double> psi = eval_psi_series_batch(basis, k, xs);
  if (o.format == "json") {
    json j{{"m", m}, {"n", n}, {"k", k}, {"x", xs}, {"psi", psi}};
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < xs.size(); ++i)
    rows.push_back({fmt(xs[i]), fmt(psi[i])});
  emit(o, csv_table("x,psi", rows));
  return 0;
}

// ---------------------------------------------------------- variance-sweep

int run_variance_sweep(const CommonOpts& o, int m, const std::string& n_csv,
                       const std::string& select) {
  std::vector<int> ns;
  std::stringstream ss(n_csv);
  for (std::string item; std::getline(ss, item, ',');)
    ns.push_back(std::stoi(item));
  if (ns.empty()) throw ParameterError("--n list is empty");
  KSelector sel = KSelector::All;
  if (select == "mid") sel = KSelector::Mid;
  else if (select == "extremes") sel = KSelector::Extremes;
  else if (select != "all") throw ParameterError("--select must be all|mid|extremes");

  const auto rows = variance_decay_sweep(make_source(o), m, ns, sel);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n}, {"k", r.k}, {"x", r.x}, {"var", r.var}});
    emit(o, json{{"rows", arr}}.dump(2) + "\n");
    return 0;
  }
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows)
    out.push_back({std::to_string(r.n), std::to_string(r.k), fmt(r.x),
                   fmt(r.var)});
  emit(o, csv_table("n,k,x,var", out));
  return 0;
}

// -------------------------------------------------------------------- quad

int run_quad(const CommonOpts& o, int nodes, int shift) {
  const QuadratureRule rule = gauss_rule(make_source(o), nodes, shift);
  if (o.format == "json") {
    json j{{"nodes", rule.nodes}, {"weights", rule.weights}};
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    rows.push_back({fmt(rule.nodes[i]), fmt(rule.weights[i])});
  emit(o, csv_table("node,weight", rows));
  return 0;
}

// ------------------------------------------------------------------ approx

int run_approx(const CommonOpts& o, int m, int n, const std::string& interval,
               const std::string& input) {
  double lo, hi;
  {
    std::stringstream ss(interval);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
      throw ParameterError("--interval must be lo,hi");
    lo = std::stod(a);
    hi = std::stod(b);
  }
  std::ifstream in(input);
  if (!in) throw ParameterError("cannot open coefficients file " + input);
  json jc = json::parse(in);
  FunctionRep f{make_source(o), jc.at("m0").get<int>(),
                jc.at("coeffs").get<std::vector<double>>()};

  const SlepianBasis basis = slepian_basis(f.source, m, n);
  const ReconstructionReport rep =
      reconstruct_on_interval(f, basis, Interval{lo, hi});

  json bounds = json::array();
  for (const auto& b : rep.bounds) {
    const char* kind = b.kind == BoundCheck::Kind::EndpointLeft
                           ? "endpoint-left"
                           : b.kind == BoundCheck::Kind::EndpointRight
                                 ? "endpoint-right"
                                 : "mean-centered";
    bounds.push_back(
        {{"kind", kind}, {"value", b.value}, {"satisfied", b.satisfied}});
  }
  json j{{"selected", rep.selected}, {"residual", rep.residual},
         {"eps", rep.eps},           {"var", rep.var},
         {"bounds", bounds}};
  emit(o, j.dump(2) + "\n");
  return 0;
}

// ------------------------------------------------------------- uncertainty

int run_uncertainty(const CommonOpts& o, int m, int n, int grid,
                    int random_trials) {
  const UncertaintyRegion region = uncertainty_region(make_source(o), m, n);
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  auto push = [&](double eps, double pi, RegionLabel label) {
    if (o.format == "json")
      jrows.push_back({{"eps", eps}, {"pi", pi}, {"label", to_string(label)}});
    else
      rows.push_back({fmt(eps), fmt(pi), to_string(label)});
  };

  if (random_trials > 0) {
    // deterministic per-trial seeding; POLYTF_THREADS caps the worker count
    const RecurrenceSource src = make_source(o);
    const int threads = std::min(thread_budget(), 8);
    std::vector<std::vector<std::tuple<double, double, RegionLabel>>> parts(
        static_cast<size_t>(threads));
    auto work = [&](int t) {
      auto& out = parts[static_cast<size_t>(t)];
      for (int i = t; i < random_trials; i += threads) {
        std::mt19937_64 rng(o.seed * 0x9e3779b97f4a7c15ULL + i);
        std::uniform_int_distribution<int> base_dist(0, 2 * n + 2);
        std::uniform_int_distribution<int> len_dist(1, 2 * (n - m) + 4);
        std::normal_distribution<double> coef;
        FunctionRep f{src, base_dist(rng),
                      std::vector<double>(static_cast<size_t>(len_dist(rng)))};
        for (double& c : f.coeffs) c = coef(rng);
        f = f.normalized();
        const double eps = epsilon(f);
        const double pi = window_mass(f, m, n);
        out.emplace_back(eps, pi, region.classify(eps, pi));
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();
    // reassemble in trial order for output determinism
    std::vector<std::tuple<double, double, RegionLabel>> all(
        static_cast<size_t>(random_trials));
    for (int t = 0; t < threads; ++t) {
      size_t j = 0;
      for (int i = t; i < random_trials; i += threads, ++j)
        all[static_cast<size_t>(i)] = parts[static_cast<size_t>(t)][j];
    }
    for (const auto& [e, p, l] : all) push(e, p, l);
  } else {
    if (grid < 2) throw ParameterError("--grid must be >= 2");
    for (int i = 0; i < grid; ++i) {
      const double eps = -1.0 + 2.0 * (i + 1) / (grid + 1);
      for (int j = 0; j < grid; ++j) {
        const double pi = static_cast<double>(j) / (grid - 1);
        push(eps, pi, region.classify(eps, pi));
      }
    }
  }

  if (o.format == "json") {
    emit(o, json{{"x_min", region.x_min}, {"x_max", region.x_max},
                 {"rows", jrows}}
                .dump(2) +
                "\n");
    return 0;
  }
  emit(o, csv_table("eps,pi,label", rows));
  return 0;
}

// ----------------------------------------------------- uncertainty-witness

int run_witness(const CommonOpts& o, int m, int n, double te, double tp) {
  const WitnessFunction w = attain_target(make_source(o), m, n, te, tp);
  json j{{"target", {{"eps", w.target_eps}, {"pi", w.target_pi}}},
         {"achieved", {{"eps", w.eps}, {"pi", w.pi}}},
         {"construction", w.construction},
         {"m0", w.f.m0},
         {"coeffs", w.f.coeffs}};
  emit(o, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthogonal-polynomial time-frequency analysis toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  int m = 0, n = 4, k = 1, samples = 1000, nodes = 5, shift = 0, grid = 40;
  int random_trials = 0;
  std::string n_csv = "16,32,64,128", select = "all", interval = "-0.2,0.6";
  std::string input, nodes_from;
  double target_eps = 0.0, target_pi = 0.5;

  auto* spectrum = app.add_subcommand("spectrum", "window eigenvalues");
  spectrum->add_option("--m", m);
  spectrum->add_option("--n", n);

  auto* psi = app.add_subcommand("psi", "sample an eigenfunction");
  psi->add_option("--m", m);
  psi->add_option("--n", n);
  psi->add_option("--k", k, "eigenfunction index, 1-based ascending");
  psi->add_option("--samples", samples, "uniform sample count on [-1,1]");
  psi->add_option("--nodes-from", nodes_from,
                  "JSON file with {\"nodes\":[...]} abscissae (e.g. quad output)");

  auto* vsweep = app.add_subcommand("variance-sweep",
                                    "eigenfunction variances across n");
  vsweep->add_option("--m", m);
  vsweep->add_option("--n", n_csv, "comma-separated n list");
  vsweep->add_option("--select", select, "rows to keep: all|mid|extremes");

  auto* quad = app.add_subcommand("quad", "Gauss quadrature rule");
  quad->add_option("--nodes", nodes);
  quad->add_option("--shift", shift, "associated-measure shift m");

  auto* approx = app.add_subcommand("approx",
                                    "reconstruction report on an interval");
  approx->add_option("--m", m);
  approx->add_option("--n", n);
  approx->add_option("--interval", interval, "lo,hi");
  approx->add_option("--input", input, "JSON {\"m0\":int,\"coeffs\":[...]}")
      ->required();

  auto* unc = app.add_subcommand("uncertainty",
                                 "classify the (eps,pi) rectangle");
  unc->add_option("--m", m);
  unc->add_option("--n", n);
  unc->add_option("--grid", grid, "grid resolution per axis");
  unc->add_option("--random-trials", random_trials,
                  "classify this many random normalized functions instead");

  auto* wit = app.add_subcommand("uncertainty-witness",
                                 "construct a function attaining a target");
  wit->add_option("--m", m);
  wit->add_option("--n", n);
  wit->add_option("--target-eps", target_eps)->required();
  wit->add_option("--target-pi", target_pi)->required();

  for (CLI::App* cmd : {spectrum, psi, vsweep, quad, approx, unc, wit}) {
    add_family_flags(cmd, o);
    add_output_flags(cmd, o);
    cmd->add_option("--seed", o.seed, "seed for randomized modes");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(o, m, n);
    if (psi->parsed()) return run_psi(o, m, n, k, samples, nodes_from);
    if (vsweep->parsed()) return run_variance_sweep(o, m, n_csv, select);
    if (quad->parsed()) return run_quad(o, nodes, shift);
    if (approx->parsed()) {
      if (o.format == "csv" && approx->count("--format") > 0)
        throw ParameterError("approx emits JSON only");
      return run_approx(o, m, n, interval, input);
    }
    if (unc->parsed()) return run_uncertainty(o, m, n, grid, random_trials);
    if (wit->parsed()) return run_witness(o, m, n, target_eps, target_pi);
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
