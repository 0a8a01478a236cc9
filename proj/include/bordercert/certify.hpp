#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bordercert/modification.hpp"
#include "bordercert/tangent.hpp"

namespace bordercert {

enum class FieldMode { Exact, Prime };
enum class Verdict { ElementaryCertified, NonPrincipalOnly, Inconclusive };

std::string to_string(FieldMode f);  // "exact", "prime"
std::string to_string(Verdict v);    // "ELEMENTARY_CERTIFIED", ...
FieldMode parse_field(const std::string& text);

// Nonzero integers in [-50, 50], one per registry id, from mt19937_64(seed).
Assignment random_point(const IndeterminateRegistry& reg, std::uint64_t seed);

struct CertifyOptions {
  int trials = 3;
  std::uint64_t seed = 1;  // trial k uses seed + k
  FieldMode field = FieldMode::Exact;
  std::uint64_t prime = Fp::kDefaultPrime;
  // Symbolic border-basis check when the generic system has at most this
  // many nonzero tail terms; otherwise three specialized checks.
  std::size_t symbolic_budget = 20000;
  int threads = 0;  // 0: hardware concurrency
};

struct Trial {
  std::uint64_t seed = 0;
  int tangent_dim = 0;
  FieldMode field = FieldMode::Exact;
  std::string method;  // "certificate", "elimination", "prime"
};

struct VerificationEvidence {
  std::string border_basis_mode;  // "symbolic" or "specialized"
  bool border_basis_ok = false;
  std::size_t pairs_checked = 0;
  std::vector<int> power_in_ideal;  // per variable, at the first trial point
  std::vector<std::string> failures;
};

struct CertificationReport {
  Signature signature;
  int mu = 0;
  std::vector<int> hilbert;
  int ell = 0;
  int tau = 0;
  int gamma = 0;
  int eta = 0;
  long dim_u = 0;
  long principal_dim = 0;
  std::vector<Trial> trials;
  VerificationEvidence verification;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::pair<std::string, double>> timings;  // seconds
  std::string tool_version;
};

const char* tool_version();

Verdict decide_verdict(long dim_u, long principal_dim, const std::vector<Trial>& trials,
                       bool verified);

CertificationReport certify(const Signature& sig, const CertifyOptions& opts = {});

// Keys in a fixed order; timings omitted when include_timings is false.
std::string report_json(const CertificationReport& rep, bool include_timings = true);

// All derived sets and counts of the order ideal, no linear algebra.
std::string inspect_json(const OrderIdealData& oid);
std::string inspect_text(const OrderIdealData& oid);

}  // namespace bordercert
