#include "bordercert/monomial.hpp"

#include <sstream>

#include "bordercert/errors.hpp"

namespace bordercert {

namespace {

void check_ambient(int n) {
  if (n < 1 || n > Monomial::kMaxVars)
    throw ArgumentError("number of variables must be in [1, " +
                        std::to_string(Monomial::kMaxVars) + "], got " + std::to_string(n));
}

void check_same(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n())
    throw DimensionError("monomials over " + std::to_string(a.n()) + " and " +
                         std::to_string(b.n()) + " variables");
}

void check_var(const Monomial& m, int var) {
  if (var < 1 || var > m.n())
    throw ArgumentError("variable index " + std::to_string(var) + " out of range 1.." +
                        std::to_string(m.n()));
}

}  // namespace

Monomial::Monomial(int n) : n_(n) { check_ambient(n); }

Monomial::Monomial(int n, std::span<const int> exponents) : n_(n) {
  check_ambient(n);
  if (static_cast<int>(exponents.size()) != n)
    throw DimensionError("expected " + std::to_string(n) + " exponents, got " +
                         std::to_string(exponents.size()));
  for (int i = 0; i < n; ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xFFFF)
      throw ArgumentError("exponent out of range");
    exps_[i] = static_cast<Exponent>(exponents[i]);
    degree_ += exponents[i];
  }
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(static_cast<int>(exponents.size()),
               std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(int n, int var) {
  Monomial m(n);
  check_var(m, var);
  m.exps_[var - 1] = 1;
  m.degree_ = 1;
  return m;
}

int Monomial::var_degree(int var) const {
  check_var(*this, var);
  return exps_[var - 1];
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + n_);
}

std::size_t Monomial::hash() const {
  // FNV-1a over the used exponents.
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
  for (int i = 0; i < n_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (exps_[i] > 1) os << '^' << exps_[i];
  }
  return os.str();
}

std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  for (int i = 0; i < a.n(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_negdeglex(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Lex-greater precedes.
  return cmp_lex(b, a);
}

Monomial mul(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial r(a.n());
  for (int i = 0; i < a.n(); ++i) r.exps_[i] = static_cast<Monomial::Exponent>(a[i] + b[i]);
  r.degree_ = a.degree() + b.degree();
  return r;
}

std::optional<Monomial> try_div(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial r(a.n());
  for (int i = 0; i < a.n(); ++i) {
    if (a[i] < b[i]) return std::nullopt;
    r.exps_[i] = static_cast<Monomial::Exponent>(a[i] - b[i]);
  }
  r.degree_ = a.degree() - b.degree();
  return r;
}

Monomial times_var(const Monomial& m, int var) {
  check_var(m, var);
  Monomial r = m;
  ++r.exps_[var - 1];
  ++r.degree_;
  return r;
}

std::optional<Monomial> div_var(const Monomial& m, int var) {
  check_var(m, var);
  if (m.exps_[var - 1] == 0) return std::nullopt;
  Monomial r = m;
  --r.exps_[var - 1];
  --r.degree_;
  return r;
}

bool divides(const Monomial& d, const Monomial& m) {
  check_same(d, m);
  for (int i = 0; i < m.n(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

int var_degree(const Monomial& m, int var) { return m.var_degree(var); }

long long binomial(long long a, long long b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < b) return 0;  // includes C(u - 1, u) = 0 and negative tops with b >= 1
  long long result = 1;
  for (long long i = 1; i <= b; ++i) result = result * (a - b + i) / i;
  return result;
}

namespace {

// Append all monomials of degree d in variables [var, n] (1-based) to out,
// lex-descending, on top of the partial exponent vector.
void enumerate(int n, int var, int d, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == n) {
    exps[var - 1] = d;
    out.emplace_back(n, exps);
    exps[var - 1] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    exps[var - 1] = e;
    enumerate(n, var + 1, d - e, exps, out);
  }
  exps[var - 1] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of(int n, int k, int d) {
  check_ambient(n);
  if (k < 1 || k > n) throw ArgumentError("monomials_of: need 1 <= k <= n");
  if (d < 0) throw ArgumentError("monomials_of: negative degree");
  std::vector<Monomial> out;
  std::vector<int> exps(n, 0);
  enumerate(n, k, d, exps, out);
  return out;
}

void SegmentSpec::validate() const {
  check_ambient(n);
  if (k < 1 || k > n) throw ArgumentError("segment: need 1 <= k <= n");
  if (prefix.empty()) throw ArgumentError("segment: empty prefix exponent list");
  const int q = static_cast<int>(prefix.size()) - 1;
  if (k + q + 1 > n) throw ArgumentError("segment: prefix too long for the variables available");
  if (prefix[0] > d) throw ArgumentError("segment: e_0 exceeds the degree");
  for (int i = 0; i <= q; ++i) {
    if (prefix[i] < 0) throw ArgumentError("segment: negative prefix exponent");
    if (i > 0 && prefix[i] > prefix[i - 1])
      throw ArgumentError("segment: prefix exponents must be non-increasing");
  }
}

std::vector<Monomial> segment(const SegmentSpec& spec) {
  spec.validate();
  const int q = static_cast<int>(spec.prefix.size()) - 1;
  std::vector<int> p(spec.n, 0);
  p[spec.k - 1] = spec.d - spec.prefix[0];
  for (int i = 1; i <= q; ++i) p[spec.k - 1 + i] = spec.prefix[i - 1] - spec.prefix[i];
  const Monomial prefix(spec.n, p);
  std::vector<Monomial> out;
  for (const auto& tail : monomials_of(spec.n, spec.k + q + 1, spec.prefix[q]))
    out.push_back(mul(prefix, tail));
  return out;
}

}  // namespace bordercert
