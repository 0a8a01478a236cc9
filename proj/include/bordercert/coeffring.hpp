#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bordercert/errors.hpp"
#include "bordercert/orderideal.hpp"

namespace bordercert {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);  // "p/q", or "p" when integral
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Names and dense ids for C[i,j] (t_i in T, b_j in W) and theta[q].
// C ids come first, grouped by j (border order), then i (basis order).
class IndeterminateRegistry {
 public:
  explicit IndeterminateRegistry(const OrderIdealData& oid);
  // A registry with only theta[1..gamma]; used for standalone arithmetic.
  static std::shared_ptr<const IndeterminateRegistry> thetas_only(int gamma);

  int size() const { return static_cast<int>(names_.size()); }
  int num_distinguished() const { return num_c_; }
  int num_modification() const { return size() - num_c_; }

  // 0-based ids; -1 if (i, j) is not a C index.
  int c_id(int i, int j) const;
  int theta_id(int q) const;  // q is 1-based
  bool is_theta(int id) const { return id >= num_c_; }
  // (i, j) for a C id, or (q, 0) for a theta id.
  std::pair<int, int> decode(int id) const { return labels_.at(id); }
  const std::string& name(int id) const { return names_.at(id); }
  std::optional<int> find(const std::string& name) const;

 private:
  IndeterminateRegistry() = default;
  int num_c_ = 0;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> labels_;
  std::map<std::pair<int, int>, int> c_index_;
};

using RegistryPtr = std::shared_ptr<const IndeterminateRegistry>;

// A sparse polynomial with rational coefficients in registry indeterminates.
// Keys are sorted (id, exponent) lists. A polynomial without a registry is a
// constant and combines with anything.
class CoeffPoly {
 public:
  using Key = std::vector<std::pair<int, int>>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const;
  };
  using Terms = std::map<Key, Rational, KeyLess>;

  CoeffPoly() = default;
  CoeffPoly(long v) : CoeffPoly(Rational(v)) {}  // NOLINT
  CoeffPoly(const Rational& c);                 // NOLINT
  static CoeffPoly indeterminate(RegistryPtr reg, int id);

  const Terms& terms() const { return terms_; }
  const RegistryPtr& registry() const { return reg_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  Rational constant_term() const;

  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly& operator*=(const CoeffPoly& o);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator-(CoeffPoly a);
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b);

  // Partial derivative with respect to indeterminate id.
  CoeffPoly derivative(int id) const;

  std::string to_string() const;

  // Generic evaluation: value_of(id) -> R, lift(Rational) -> R.
  template <class R, class Value, class Lift>
  R evaluate(Value&& value_of, Lift&& lift) const;

 private:
  void adopt(const CoeffPoly& o);
  void add_term(const Key& k, const Rational& c);

  RegistryPtr reg_;
  Terms terms_;
};

inline bool is_zero(const CoeffPoly& p) { return p.is_zero(); }
inline Rational constant_term(const CoeffPoly& p) { return p.constant_term(); }

// Dense assignment over registry ids; missing entries are errors on use.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int size) : values_(size) {}
  int size() const { return static_cast<int>(values_.size()); }
  void set(int id, Rational v);
  bool has(int id) const { return id >= 0 && id < size() && values_[id].has_value(); }
  const Rational& get(int id) const;

 private:
  std::vector<std::optional<Rational>> values_;
};

Rational specialize(const CoeffPoly& p, const Assignment& a);

// a + b*eps with eps^2 = 0.
template <class R>
struct Dual {
  R value{};
  R slope{};

  Dual() = default;
  Dual(R v) : value(std::move(v)), slope(0) {}  // NOLINT
  Dual(R v, R d) : value(std::move(v)), slope(std::move(d)) {}

  Dual& operator+=(const Dual& o) {
    value += o.value;
    slope += o.slope;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    slope -= o.slope;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    R s = value * o.slope + slope * o.value;
    value *= o.value;
    slope = std::move(s);
    return *this;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator-(const Dual& a) { return Dual(-a.value, -a.slope); }
  friend bool operator==(const Dual& a, const Dual& b) {
    return a.value == b.value && a.slope == b.slope;
  }
};

template <class R>
bool is_zero(const Dual<R>& d) {
  return is_zero(d.value) && is_zero(d.slope);
}

using DualRational = Dual<Rational>;

// Residue modulo a prime. A residue with prime() == 0 is an unbound integer
// literal (the result of R(0) or R(1) in generic code) and adopts the prime
// of the first bound operand it meets.
class Fp {
 public:
  static constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

  Fp() = default;
  Fp(long v) : literal_(v) {}  // NOLINT
  Fp(std::int64_t v, std::uint64_t prime);
  // p/q mod prime; the denominator must be a unit.
  static Fp from_rational(const Rational& q, std::uint64_t prime);

  std::uint64_t prime() const { return prime_; }
  std::uint64_t value() const;  // residue in [0, prime)
  bool is_zero() const { return prime_ == 0 ? literal_ == 0 : value_ == 0; }
  Fp inverse() const;

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator-(const Fp& a);
  friend bool operator==(const Fp& a, const Fp& b);

 private:
  void bind(std::uint64_t prime);
  static std::uint64_t reduce_literal(std::int64_t v, std::uint64_t p);

  std::uint64_t prime_ = 0;
  std::uint64_t value_ = 0;
  std::int64_t literal_ = 0;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t p);
// Throws unless p is a prime above 2^31.
void validate_prime(std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

template <class R, class Value, class Lift>
R CoeffPoly::evaluate(Value&& value_of, Lift&& lift) const {
  R total(0);
  for (const auto& [key, c] : terms_) {
    R term = lift(c);
    for (const auto& [id, e] : key) {
      R v = value_of(id);
      for (int k = 0; k < e; ++k) term *= v;
    }
    total += term;
  }
  return total;
}

}  // namespace bordercert
