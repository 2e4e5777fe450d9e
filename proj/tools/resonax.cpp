#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "resonax/admissibility.hpp"
#include "resonax/bounds.hpp"
#include "resonax/compliance.hpp"
#include "resonax/enumerate.hpp"
#include "resonax/error.hpp"
#include "resonax/mc.hpp"
#include "resonax/resonance.hpp"
#include "resonax/serialize.hpp"
#include "resonax/verify/acceptance.hpp"

namespace {

using resonax::io::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string output;
  std::optional<std::uint64_t> seed;
  std::size_t count = resonax::kDefaultSampleCount;
  unsigned threads = 0;
  bool verbose = false;

  std::string rho, rhop, k, map, inverse, domain, image_domain, phi, psi, p, q;
  std::string kind = "auto";
  std::string task = "orthogonality";
  std::uint32_t max_degree = 3;
};

std::uint64_t resolve_seed(const Config& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("RESONAX_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("RESONAX_SEED is not an unsigned integer: ") + env);
    }
  }
  return resonax::kDefaultSeed;
}

// "@path" or an existing file name reads the file; anything else is inline JSON.
Json load_json(const std::string& text, const std::string& what) {
  if (text.empty()) throw UsageError("--" + what + " is required");
  std::string source = text;
  std::string origin = "--" + what;
  std::string path;
  if (text.front() == '@') {
    path = text.substr(1);
  } else if (text.front() != '[' && text.front() != '{') {
    std::ifstream probe(text);
    if (probe) path = text;
  }
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    source = ss.str();
    origin = path;
  }
  try {
    return Json::parse(source);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in " + origin + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

resonax::WeightMatrix load_matrix(const std::string& text, const std::string& what, Json& report) {
  auto v = resonax::io::parse_weight_matrix(load_json(text, what));
  for (const auto& w : v.warnings) {
    report["warnings"].push_back(what + ": " + w);
    std::cerr << "warning (" << what << "): " << w << "\n";
  }
  return std::move(v.matrix);
}

std::vector<std::int64_t> column_of(const resonax::WeightMatrix& a, const char* what) {
  if (a.r() != 1) throw resonax::InvalidInput(std::string(what) + ": quasi-circular bound needs a single column");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < a.n(); ++i) out.push_back(a(i, 0));
  return out;
}

int cmd_check(const Config& cfg, Json& out) {
  const auto a = load_matrix(cfg.rho, "rho", out);
  const auto cert = resonax::check_admissible(a);
  out["matrix"] = resonax::io::to_json(a);
  out["certificate"] = resonax::io::to_json(cert);
  out["verified"] = resonax::verify_certificate(a, cert);
  std::cerr << (cert.admissible() ? "admissible" : "inadmissible: invariant monomial found") << "\n";
  return cert.admissible() ? kExitPass : kExitFail;
}

int cmd_weight_space(const Config& cfg, Json& out) {
  const auto a = load_matrix(cfg.rho, "rho", out);
  const auto k = resonax::io::parse_character(load_json(cfg.k, "k"));
  const auto space = resonax::enumerate_weight_space(a, k);
  if (space) {
    out["weight_space"] = resonax::io::to_json(*space);
    std::cerr << "dim V_k = " << space->dimension() << ", degrees " << space->min_degree << ".."
              << space->max_degree << "\n";
  } else {
    out["weight_space"] = resonax::io::to_json(resonax::WeightSpace{k, {}, 0, 0});
    out["weight_space"]["empty"] = true;
    std::cerr << "V_k = 0\n";
  }
  return kExitPass;
}

int cmd_resonance(const Config& cfg, Json& out) {
  const auto a = load_matrix(cfg.rho, "rho", out);
  const auto report = resonax::resonance(a);
  out["resonance"] = resonax::io::to_json(report);
  std::cerr << "resonance order " << report.order << "\n";
  return kExitPass;
}

int cmd_quasi_resonance(const Config& cfg, Json& out) {
  const auto a = load_matrix(cfg.rho, "rho", out);
  const auto b = load_matrix(cfg.rhop, "rhop", out);
  const auto report = resonax::quasi_resonance(a, b);
  out["quasi_resonance"] = resonax::io::to_json(report);
  out["cartan"] = resonax::io::to_json(resonax::is_cartan_linear(a, b));
  std::cerr << "quasi-resonance order " << report.order << "\n";
  return kExitPass;
}

int cmd_bound(const Config& cfg, Json& out) {
  const auto a = load_matrix(cfg.rho, "rho", out);
  std::string kind = cfg.kind;
  if (kind == "auto") kind = cfg.rhop.empty() ? "nonneg" : "quasi-circular";
  if (kind == "nonneg") {
    const auto bound = resonax::nonneg_weight_bound(a);
    out["kind"] = kind;
    out["bound"] = resonax::io::to_json(bound);
    std::cerr << "coarse " << resonax::to_string(bound.global_bound) << ", exact " << bound.exact_global << "\n";
    return kExitPass;
  }
  if (kind != "quasi-circular") throw UsageError("--kind must be nonneg, quasi-circular or auto");
  const auto src = column_of(a, "rho");
  const auto dst = cfg.rhop.empty() ? src : column_of(load_matrix(cfg.rhop, "rhop", out), "rhop");
  const auto bound = resonax::quasi_circular_bound(src, dst);
  out["kind"] = kind;
  out["bound"] = resonax::io::to_json(bound);
  std::cerr << "coarse " << resonax::to_string(bound.coarse) << ", exact " << bound.exact << "\n";
  return kExitPass;
}

int cmd_verify_map(const Config& cfg, Json& out) {
  const auto a = load_matrix(cfg.rho, "rho", out);
  const auto b = load_matrix(cfg.rhop, "rhop", out);
  const auto f = resonax::io::parse_polymap(load_json(cfg.map, "map"), a.n());
  const auto report = resonax::check_compliance(f, a, b);
  out["compliance"] = resonax::io::to_json(report);
  std::cerr << (report.pass() ? "compliant (necessary conditions only)" : "not compliant") << "\n";
  return report.pass() ? kExitPass : kExitFail;
}

int cmd_mc(const Config& cfg, Json& out) {
  const std::uint64_t seed = resolve_seed(cfg);
  const resonax::ParallelOptions par{cfg.threads};
  const auto domain = resonax::io::parse_domain(load_json(cfg.domain, "domain"));
  const std::size_t n = domain.dimension();
  out["seed"] = seed;
  out["count"] = cfg.count;
  out["task"] = cfg.task;

  if (cfg.task == "orthogonality") {
    const auto a = load_matrix(cfg.rho, "rho", out);
    const auto r = resonax::check_orthogonality(domain, a, cfg.max_degree, seed, cfg.count, par);
    out["orthogonality"] = resonax::io::to_json(r);
    std::cerr << r.pairs.size() << " pairs, worst z " << r.worst_z << " vs threshold " << r.threshold << "\n";
    return r.pass() ? kExitPass : kExitFail;
  }
  if (cfg.task == "invariance") {
    const auto a = load_matrix(cfg.rho, "rho", out);
    const auto r = resonax::check_invariance(domain, a, seed, cfg.count, par);
    out["invariance"] = resonax::io::to_json(r);
    std::cerr << r.violations << " violations in " << r.checked << " rotated points\n";
    return r.pass() ? kExitPass : kExitFail;
  }
  if (cfg.task == "inner") {
    const auto p = resonax::io::parse_polynomial(load_json(cfg.p, "p"), n);
    const auto q = resonax::io::parse_polynomial(load_json(cfg.q, "q"), n);
    const auto est = resonax::mc_inner_product(domain, p, q, seed, cfg.count, par);
    out["estimate"] = resonax::io::to_json(est);
    std::cerr << "<p,q> = " << est.value << " +- (" << est.stderr_re << ", " << est.stderr_im << ")\n";
    return kExitPass;
  }
  if (cfg.task == "cov") {
    const auto f = resonax::io::parse_polymap(load_json(cfg.map, "map"), n);
    const auto g = resonax::io::parse_polymap(load_json(cfg.inverse, "inverse"), n);
    const auto target = cfg.image_domain.empty()
                            ? resonax::DomainSpec::shear_image(domain, f, g)
                            : resonax::io::parse_domain(load_json(cfg.image_domain, "image-domain"));
    const auto phi = resonax::io::parse_polynomial(load_json(cfg.phi, "phi"), n);
    const auto psi = resonax::io::parse_polynomial(load_json(cfg.psi, "psi"), n);
    const auto r = resonax::check_change_of_variables(f, g, domain, target, phi, psi, seed, cfg.count, par);
    out["change_of_variables"] = resonax::io::to_json(r);
    std::cerr << "lhs " << r.lhs.value << ", rhs " << r.rhs.value << (r.pass ? " agree" : " DISAGREE") << "\n";
    return r.pass ? kExitPass : kExitFail;
  }
  throw UsageError("--task must be orthogonality, cov, invariance or inner");
}

int cmd_reproduce(const Config& cfg, Json& out) {
  resonax::acceptance::Options opts;
  opts.seed = resolve_seed(cfg);
  opts.count = cfg.count;
  opts.parallel.workers = cfg.threads;
  bool all = true;
  Json rows = Json::array();
  resonax::acceptance::run_all(opts, [&](const resonax::acceptance::CriterionResult& r) {
    std::cerr << resonax::acceptance::format_line(r) << std::endl;
    all = all && r.pass;
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"pass", r.pass},
                    {"seconds", r.seconds},
                    {"time_limit", r.time_limit},
                    {"detail", r.detail}});
  });
  out["seed"] = opts.seed;
  out["count"] = opts.count;
  out["criteria"] = rows;
  out["pass"] = all;
  return all ? kExitPass : kExitFail;
}

void emit(const Config& cfg, const Json& out) {
  const std::string text = out.dump(2) + "\n";
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw UsageError("cannot write " + cfg.output);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resonance and quasi-resonance orders of torus actions, with Monte Carlo checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::uint64_t seed_flag = 0;

  app.add_option("-o,--output", cfg.output, "Write the JSON report to this file (default stdout)");
  auto* seed_opt = app.add_option("--seed", seed_flag, "RNG seed (default 42, or $RESONAX_SEED)");
  app.add_option("--count", cfg.count, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  app.add_flag("-v,--verbose", cfg.verbose, "Print the report to stderr as well");

  const std::string json_help = "inline JSON, @file, or a file path";
  auto* check = app.add_subcommand("check", "Admissibility with certificate");
  check->add_option("--rho", cfg.rho, "Weight matrix: " + json_help)->required();

  auto* ws = app.add_subcommand("weight-space", "Monomial basis of a weight space");
  ws->add_option("--rho", cfg.rho, "Weight matrix: " + json_help)->required();
  ws->add_option("--k", cfg.k, "Character as an integer array")->required();

  auto* res = app.add_subcommand("resonance", "Resonance sets and orders");
  res->add_option("--rho", cfg.rho, "Weight matrix: " + json_help)->required();

  auto* qres = app.add_subcommand("quasi-resonance", "Quasi-resonance sets and orders");
  qres->add_option("--rho", cfg.rho, "Source weight matrix: " + json_help)->required();
  qres->add_option("--rhop", cfg.rhop, "Target weight matrix: " + json_help)->required();

  auto* bound = app.add_subcommand("bound", "Coarse degree bound next to the exact order");
  bound->add_option("--rho", cfg.rho, "Source weight matrix: " + json_help)->required();
  bound->add_option("--rhop", cfg.rhop, "Target weights (quasi-circular)");
  bound->add_option("--kind", cfg.kind, "nonneg, quasi-circular or auto");

  auto* vm = app.add_subcommand("verify-map", "Necessary conditions on a polynomial map");
  vm->add_option("--map", cfg.map, "Polynomial map: " + json_help)->required();
  vm->add_option("--rho", cfg.rho, "Source weight matrix")->required();
  vm->add_option("--rhop", cfg.rhop, "Target weight matrix")->required();

  auto* mc = app.add_subcommand("mc", "Monte Carlo checks on a domain");
  mc->add_option("--task", cfg.task, "orthogonality, cov, invariance or inner");
  mc->add_option("--domain", cfg.domain, "Domain: " + json_help)->required();
  mc->add_option("--rho", cfg.rho, "Weight matrix (orthogonality, invariance)");
  mc->add_option("--max-degree", cfg.max_degree, "Maximum monomial degree (orthogonality)");
  mc->add_option("--map", cfg.map, "Map f (cov)");
  mc->add_option("--inverse", cfg.inverse, "Exact inverse of f (cov)");
  mc->add_option("--image-domain", cfg.image_domain, "Target domain (cov; default f(domain))");
  mc->add_option("--phi", cfg.phi, "Polynomial on the source (cov)");
  mc->add_option("--psi", cfg.psi, "Polynomial on the target (cov)");
  mc->add_option("--p", cfg.p, "First polynomial (inner)");
  mc->add_option("--q", cfg.q, "Second polynomial (inner)");

  auto* repro = app.add_subcommand("reproduce", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  if (seed_opt->count() > 0) cfg.seed = seed_flag;

  Json out = Json::object();
  int code = kExitPass;
  try {
    auto* sub = app.get_subcommands().front();
    out["command"] = sub->get_name();
    if (sub == check) code = cmd_check(cfg, out);
    else if (sub == ws) code = cmd_weight_space(cfg, out);
    else if (sub == res) code = cmd_resonance(cfg, out);
    else if (sub == qres) code = cmd_quasi_resonance(cfg, out);
    else if (sub == bound) code = cmd_bound(cfg, out);
    else if (sub == vm) code = cmd_verify_map(cfg, out);
    else if (sub == mc) code = cmd_mc(cfg, out);
    else if (sub == repro) code = cmd_reproduce(cfg, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resonax::InadmissibleError& e) {
    out["error"] = {{"type", "inadmissible"}, {"message", e.what()}};
    std::cerr << "inadmissible: " << e.what() << "\n";
    code = kExitFail;
  } catch (const resonax::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  out["exit_code"] = code;
  try {
    emit(cfg, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cfg.verbose && !cfg.output.empty()) std::cerr << out.dump(2) << "\n";
  return code;
}
