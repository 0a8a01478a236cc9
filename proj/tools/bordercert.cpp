#include <algorithm>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "bordercert/certify.hpp"
#include "json.hpp"

using namespace bordercert;

namespace {

enum Exit { kOk = 0, kArgument = 2, kInconclusive = 3, kInternal = 4 };

struct RunConfig {
  std::string signature;
  std::string shape;
  int trials = 3;
  std::uint64_t seed = 1;
  std::string field = "exact";
  std::uint64_t prime = Fp::kDefaultPrime;
  std::string json_path;
  bool no_timings = false;
  std::size_t budget = 20000;
  int threads = 0;
  int jobs = 0;
  bool full = false;
  std::string batch_file;
};

Signature resolve_signature(const RunConfig& cfg) {
  if (cfg.signature.empty() == cfg.shape.empty())
    throw ArgumentError("give exactly one of --signature and --shape");
  return cfg.signature.empty() ? parse_shape(cfg.shape) : parse_signature(cfg.signature);
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.json_path.empty() || cfg.json_path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(cfg.json_path);
  if (!out) throw ArgumentError("cannot write " + cfg.json_path);
  out << text << '\n';
}

std::uint64_t default_prime() {
  const char* env = std::getenv("BORDERCERT_PRIME");
  if (!env || !*env) return Fp::kDefaultPrime;
  std::uint64_t p = 0;
  try {
    std::size_t pos = 0;
    p = std::stoull(env, &pos);
    if (env[pos] != '\0') throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ArgumentError(std::string("BORDERCERT_PRIME is not an integer: '") + env + "'");
  }
  validate_prime(p);
  return p;
}

CertifyOptions certify_options(const RunConfig& cfg) {
  CertifyOptions o;
  o.trials = cfg.trials;
  o.seed = cfg.seed;
  o.field = parse_field(cfg.field);
  o.prime = cfg.prime;
  o.symbolic_budget = cfg.budget;
  o.threads = cfg.threads;
  return o;
}

int run_inspect(const RunConfig& cfg) {
  const auto oid = build_order_ideal(resolve_signature(cfg));
  if (cfg.json_path.empty())
    std::cout << inspect_text(oid);
  else
    write_output(cfg, inspect_json(oid));
  return kOk;
}

int run_modify(const RunConfig& cfg) {
  auto oid = std::make_shared<const OrderIdealData>(build_order_ideal(resolve_signature(cfg)));
  const auto gm = build_generic_modification(oid);
  std::cout << dump_targets(*oid, gm.targets);
  if (cfg.full) std::cout << render(gm.system);
  return kOk;
}

int run_verify(const RunConfig& cfg) {
  auto oid = std::make_shared<const OrderIdealData>(build_order_ideal(resolve_signature(cfg)));
  const auto gm = build_generic_modification(oid);
  const auto chk = is_border_basis(gm.system);
  std::cout << "border basis: " << (chk.ok ? "ok" : "FAILED") << " (" << chk.pairs_checked
            << " neighbor pairs, symbolic)\n";
  for (const auto& f : chk.failures)
    std::cout << "  S(b[" << f.pair.j1 << "], b[" << f.pair.j2 << "]) -> "
              << render_span(f.residue) << '\n';
  const auto point = random_point(*gm.registry, cfg.seed);
  const auto sysp = specialize_system_mod(gm.system, point, cfg.prime);
  for (int k = 1; k <= oid->n; ++k)
    std::cout << "x" << k << "^" << power_in_ideal(sysp, k) << " in I\n";
  return chk.ok ? kOk : kInconclusive;
}

int run_tangent(const RunConfig& cfg) {
  auto oid = std::make_shared<const OrderIdealData>(build_order_ideal(resolve_signature(cfg)));
  const auto gm = build_generic_modification(oid);
  const auto point = random_point(*gm.registry, cfg.seed);
  int dim = 0;
  std::string method = "prime";
  TangentSystemStats st;
  if (parse_field(cfg.field) == FieldMode::Exact) {
    const auto res = exact_tangent_dimension(gm, point, cfg.prime);
    dim = res.dimension;
    method = res.method;
    st = res.stats;
  } else {
    dim = tangent_dimension(specialize_system_mod(gm.system, point, cfg.prime), &st);
  }
  nlohmann::ordered_json j;
  j["signature"] = oid->signature.to_string();
  j["seed"] = cfg.seed;
  j["field"] = cfg.field;
  j["method"] = method;
  j["tangentDim"] = dim;
  j["dimU"] = dim_U(*oid);
  j["principalDim"] = static_cast<long>(oid->n) * oid->mu;
  j["pairs"] = st.pairs;
  j["rows"] = st.rows;
  j["columns"] = st.columns;
  j["rank"] = st.rank;
  write_output(cfg, j.dump());
  return kOk;
}

int run_certify(const RunConfig& cfg) {
  const auto rep = certify(resolve_signature(cfg), certify_options(cfg));
  write_output(cfg, report_json(rep, !cfg.no_timings));
  return rep.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
}

// One batch line: "n,r,s,delta,w", or "shape n,kappa,r,s".
std::pair<std::string, int> batch_entry(const std::string& line, const RunConfig& cfg) {
  nlohmann::ordered_json err;
  err["input"] = line;
  try {
    RunConfig one = cfg;
    one.signature.clear();
    one.shape.clear();
    if (line.rfind("shape", 0) == 0)
      one.shape = line.substr(5);
    else
      one.signature = line;
    one.shape.erase(0, one.shape.find_first_not_of(" \t"));
    auto opts = certify_options(one);
    opts.threads = 1;
    const auto rep = certify(resolve_signature(one), opts);
    return {report_json(rep, !cfg.no_timings),
            rep.verdict == Verdict::Inconclusive ? kInconclusive : kOk};
  } catch (const ArgumentError& e) {
    err["error"] = e.what();
    err["exitCode"] = static_cast<int>(kArgument);
    return {err.dump(), kArgument};
  } catch (const std::exception& e) {
    err["error"] = e.what();
    err["exitCode"] = static_cast<int>(kInternal);
    return {err.dump(), kInternal};
  }
}

int run_batch(const RunConfig& cfg) {
  std::ifstream in(cfg.batch_file);
  if (!in) throw ArgumentError("cannot read " + cfg.batch_file);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  std::ofstream file;
  const bool to_file = !cfg.json_path.empty() && cfg.json_path != "-";
  if (to_file) {
    file.open(cfg.json_path);
    if (!file) throw ArgumentError("cannot write " + cfg.json_path);
  }
  std::ostream& out = to_file ? static_cast<std::ostream&>(file) : std::cout;

  std::vector<std::optional<std::pair<std::string, int>>> done(lines.size());
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t k;
      {
        std::lock_guard lock(mu);
        if (next >= lines.size()) return;
        k = next++;
      }
      auto res = batch_entry(lines[k], cfg);
      {
        std::lock_guard lock(mu);
        done[k] = std::move(res);
      }
      cv.notify_all();
    }
  };
  int jobs = cfg.jobs > 0 ? cfg.jobs
                          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(lines.size())));
  std::vector<std::thread> pool;
  for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);

  int worst = kOk;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return done[k].has_value(); });
    out << done[k]->first << '\n' << std::flush;
    worst = std::max(worst, done[k]->second);
    done[k].reset();
  }
  for (auto& th : pool) th.join();
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Border bases of signature (n,r,s,delta,w) and elementary-component certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  RunConfig cfg;

  auto add_sig = [&](CLI::App* sub) {
    auto* sig = sub->add_option("--signature", cfg.signature, "n,r,s,delta,w");
    auto* shp = sub->add_option("--shape", cfg.shape, "n,kappa,r,s (lex-segment complement)");
    sig->excludes(shp);
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "specialization seed")->capture_default_str();
    sub->add_option("--field", cfg.field, "exact or prime")
        ->check(CLI::IsMember({"exact", "prime"}))
        ->capture_default_str();
    sub->add_option("--prime", cfg.prime, "prime modulus (default from BORDERCERT_PRIME)");
  };

  auto* inspect = app.add_subcommand("inspect", "order ideal, derived sets and dimensions");
  add_sig(inspect);
  inspect->add_option("--json", cfg.json_path, "write JSON to a file ('-' for stdout)");

  auto* modify = app.add_subcommand("modify", "print the target assignment");
  add_sig(modify);
  modify->add_flag("--full", cfg.full, "also print the modified system");

  auto* verify = app.add_subcommand("verify", "check the generic modification symbolically");
  add_sig(verify);
  add_field(verify);

  auto* tangent = app.add_subcommand("tangent", "tangent dimension at one specialization");
  add_sig(tangent);
  add_field(tangent);
  tangent->add_option("--json", cfg.json_path, "write JSON to a file ('-' for stdout)");

  auto add_certify = [&](CLI::App* sub) {
    add_field(sub);
    sub->add_option("--trials", cfg.trials, "number of specializations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--json", cfg.json_path, "write JSON to a file ('-' for stdout)");
    sub->add_flag("--no-timings", cfg.no_timings, "omit timings from the JSON");
    sub->add_option("--budget", cfg.budget, "tail-term budget for the symbolic check")
        ->capture_default_str();
  };
  auto* cert = app.add_subcommand("certify", "full pipeline and verdict");
  add_sig(cert);
  add_certify(cert);
  cert->add_option("--threads", cfg.threads, "trial threads (0: all cores)");

  auto* batch = app.add_subcommand("batch", "certify every signature of a file, JSON lines");
  batch->add_option("file", cfg.batch_file, "one signature per line, or 'shape n,kappa,r,s'")
      ->required();
  add_certify(batch);
  batch->add_option("--jobs", cfg.jobs, "worker count (0: all cores)");

  try {
    cfg.prime = default_prime();
    app.parse(argc, argv);
    validate_prime(cfg.prime);
    if (*inspect) return run_inspect(cfg);
    if (*modify) return run_modify(cfg);
    if (*verify) return run_verify(cfg);
    if (*tangent) return run_tangent(cfg);
    if (*cert) return run_certify(cfg);
    if (*batch) return run_batch(cfg);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kArgument;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kArgument;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
