#include "bordercert/certify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace bordercert {

using ordered_json = nlohmann::ordered_json;

std::string to_string(FieldMode f) { return f == FieldMode::Exact ? "exact" : "prime"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ElementaryCertified:
      return "ELEMENTARY_CERTIFIED";
    case Verdict::NonPrincipalOnly:
      return "NON_PRINCIPAL_ONLY";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

FieldMode parse_field(const std::string& text) {
  if (text == "exact") return FieldMode::Exact;
  if (text == "prime") return FieldMode::Prime;
  throw ArgumentError("field must be 'exact' or 'prime', got '" + text + "'");
}

Assignment random_point(const IndeterminateRegistry& reg, std::uint64_t seed) {
  // Drawn by hand rather than with uniform_int_distribution so that points
  // do not depend on the standard library implementation.
  std::mt19937_64 rng(seed);
  Assignment a(reg.size());
  for (int id = 0; id < reg.size(); ++id) {
    const auto v = static_cast<long>(rng() % 100);
    a.set(id, Rational(v < 50 ? v - 50 : v - 49));
  }
  return a;
}

const char* tool_version() { return "bordercert " BORDERCERT_VERSION; }

Verdict decide_verdict(long dim_u, long principal_dim, const std::vector<Trial>& trials,
                       bool verified) {
  if (!verified || trials.empty()) return Verdict::Inconclusive;
  int lo = trials.front().tangent_dim;
  bool exact = false;
  for (const auto& t : trials) {
    lo = std::min(lo, t.tangent_dim);
    exact = exact || t.field == FieldMode::Exact;
  }
  if (lo == dim_u) return exact ? Verdict::ElementaryCertified : Verdict::Inconclusive;
  if (lo < principal_dim) return Verdict::NonPrincipalOnly;
  return Verdict::Inconclusive;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t tail_terms(const BorderSystem<CoeffPoly>& sys) {
  std::size_t k = 0;
  for (const auto& t : sys.tails) k += t.size();
  return k;
}

template <class R>
void record_check(VerificationEvidence& ev, const BorderBasisCheck<R>& chk, const std::string& where) {
  ev.pairs_checked += chk.pairs_checked;
  if (chk.ok) return;
  ev.border_basis_ok = false;
  for (const auto& f : chk.failures)
    ev.failures.push_back(where + ": S(b[" + std::to_string(f.pair.j1) + "], b[" +
                          std::to_string(f.pair.j2) + "]) reduces to " + render_span(f.residue));
}

Trial run_trial(const GenericModification& gm, const CertifyOptions& opts, std::uint64_t seed) {
  const auto point = random_point(*gm.registry, seed);
  Trial t;
  t.seed = seed;
  t.field = opts.field;
  if (opts.field == FieldMode::Exact) {
    const auto res = exact_tangent_dimension(gm, point, opts.prime);
    t.tangent_dim = res.dimension;
    t.method = res.method;
  } else {
    t.tangent_dim = tangent_dimension(specialize_system_mod(gm.system, point, opts.prime));
    t.method = "prime";
  }
  return t;
}

}  // namespace

CertificationReport certify(const Signature& sig, const CertifyOptions& opts) {
  sig.validate();
  if (opts.trials < 1) throw ArgumentError("trials must be at least 1");
  validate_prime(opts.prime);
  const auto t_total = Clock::now();

  CertificationReport rep;
  rep.signature = sig;
  rep.tool_version = tool_version();

  auto t0 = Clock::now();
  auto oid = std::make_shared<const OrderIdealData>(build_order_ideal(sig));
  rep.mu = oid->mu;
  rep.hilbert = oid->hilbert;
  rep.ell = oid->ell;
  rep.tau = oid->tau;
  rep.gamma = oid->gamma;
  rep.eta = translation_frame(*oid).eta;
  rep.dim_u = dim_U(*oid);
  rep.principal_dim = static_cast<long>(sig.n) * oid->mu;
  rep.timings.emplace_back("orderIdeal", since(t0));

  t0 = Clock::now();
  const auto gm = build_generic_modification(oid);
  rep.timings.emplace_back("modification", since(t0));

  auto& ev = rep.verification;
  ev.border_basis_ok = true;
  t0 = Clock::now();
  if (tail_terms(gm.system) <= opts.symbolic_budget) {
    ev.border_basis_mode = "symbolic";
    record_check(ev, is_border_basis(gm.system), "generic");
  } else {
    ev.border_basis_mode = "specialized";
    for (int k = 0; k < 3; ++k) {
      const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(k);
      const auto point = random_point(*gm.registry, seed);
      record_check(ev, is_border_basis(specialize_system_mod(gm.system, point, opts.prime)),
                   "seed " + std::to_string(seed));
    }
  }
  rep.timings.emplace_back("borderBasis", since(t0));

  t0 = Clock::now();
  {
    const auto point = random_point(*gm.registry, opts.seed);
    const auto sysp = specialize_system_mod(gm.system, point, opts.prime);
    for (int k = 1; k <= sig.n; ++k) {
      try {
        ev.power_in_ideal.push_back(power_in_ideal(sysp, k));
      } catch (const SearchFailure& e) {
        ev.power_in_ideal.push_back(0);
        ev.failures.push_back(e.what());
      }
    }
  }
  rep.timings.emplace_back("powerInIdeal", since(t0));

  t0 = Clock::now();
  const bool verified = ev.border_basis_ok && ev.failures.empty();
  if (verified) {
    rep.trials.resize(opts.trials);
    std::vector<std::string> errors(opts.trials);
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int k; (k = next++) < opts.trials;) {
        try {
          rep.trials[k] = run_trial(gm, opts, opts.seed + static_cast<std::uint64_t>(k));
        } catch (const std::exception& e) {
          errors[k] = e.what();
        }
      }
    };
    int threads = opts.threads > 0 ? opts.threads
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, opts.trials);
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (!e.empty()) throw InternalError("trial failed: " + e);
  }
  rep.timings.emplace_back("tangent", since(t0));

  rep.verdict = decide_verdict(rep.dim_u, rep.principal_dim, rep.trials, verified);
  rep.timings.emplace_back("total", since(t_total));
  return rep;
}

namespace {

ordered_json signature_json(const Signature& s) {
  ordered_json j;
  j["n"] = s.n;
  j["r"] = s.r;
  j["s"] = s.s;
  j["delta"] = s.delta;
  j["w"] = s.w;
  return j;
}

ordered_json monomials_json(const std::vector<Monomial>& ms) {
  ordered_json j = ordered_json::array();
  for (const auto& m : ms) j.push_back(m.to_string());
  return j;
}

}  // namespace

std::string report_json(const CertificationReport& rep, bool include_timings) {
  ordered_json j;
  j["signature"] = signature_json(rep.signature);
  j["mu"] = rep.mu;
  j["hilbert"] = rep.hilbert;
  j["ell"] = rep.ell;
  j["tau"] = rep.tau;
  j["gamma"] = rep.gamma;
  j["eta"] = rep.eta;
  j["dimU"] = rep.dim_u;
  j["principalDim"] = rep.principal_dim;
  ordered_json trials = ordered_json::array();
  for (const auto& t : rep.trials) {
    ordered_json tj;
    tj["seed"] = t.seed;
    tj["tangentDim"] = t.tangent_dim;
    tj["field"] = to_string(t.field);
    tj["method"] = t.method;
    trials.push_back(tj);
  }
  j["trials"] = trials;
  ordered_json v;
  v["borderBasisMode"] = rep.verification.border_basis_mode;
  v["borderBasisOk"] = rep.verification.border_basis_ok;
  v["pairsChecked"] = rep.verification.pairs_checked;
  v["powerInIdeal"] = rep.verification.power_in_ideal;
  v["failures"] = rep.verification.failures;
  j["verification"] = v;
  j["verdict"] = to_string(rep.verdict);
  if (include_timings) {
    ordered_json tm;
    for (const auto& [k, secs] : rep.timings) tm[k] = secs;
    j["timings"] = tm;
  }
  j["toolVersion"] = rep.tool_version;
  return j.dump();
}

std::string inspect_json(const OrderIdealData& oid) {
  ordered_json j;
  j["signature"] = signature_json(oid.signature);
  j["mu"] = oid.mu;
  j["nu"] = oid.nu;
  j["hilbert"] = oid.hilbert;
  j["bEll"] = oid.b_ell.to_string();
  j["leading"] = monomials_json(oid.leading);
  j["trailing"] = monomials_json(oid.trailing);
  j["tarAll"] = monomials_json(oid.tar_all);
  j["tarPrime"] = monomials_json(oid.tar_prime);
  j["tarDoublePrime"] = monomials_json(oid.tar_double_prime);
  j["sL"] = monomials_json(oid.s_l);
  j["sD"] = monomials_json(oid.s_d);
  j["ell"] = oid.ell;
  j["tau"] = oid.tau;
  j["gamma"] = oid.gamma;
  j["eta"] = translation_frame(oid).eta;
  j["dimU"] = dim_U(oid);
  j["principalDim"] = static_cast<long>(oid.n) * oid.mu;
  return j.dump();
}

std::string inspect_text(const OrderIdealData& oid) {
  std::ostringstream os;
  auto list = [&](const char* name, const std::vector<Monomial>& ms) {
    os << name << " (" << ms.size() << "):";
    for (const auto& m : ms) os << ' ' << m.to_string();
    os << '\n';
  };
  os << "signature: " << oid.signature.to_string() << '\n';
  os << "hilbert:";
  for (int h : oid.hilbert) os << ' ' << h;
  os << "\nmu: " << oid.mu << "\nnu: " << oid.nu << "\nb_ell: " << oid.b_ell.to_string() << '\n';
  list("leading", oid.leading);
  list("trailing", oid.trailing);
  list("tar_prime", oid.tar_prime);
  list("tar_double_prime", oid.tar_double_prime);
  list("s_l", oid.s_l);
  list("s_d", oid.s_d);
  os << "ell: " << oid.ell << "\ntau: " << oid.tau << "\ngamma: " << oid.gamma
     << "\neta: " << translation_frame(oid).eta << "\ndim_U: " << dim_U(oid)
     << "\nprincipal_dim: " << static_cast<long>(oid.n) * oid.mu << '\n';
  return os.str();
}

}  // namespace bordercert
