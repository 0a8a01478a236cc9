#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bordercert {

// A monomial x_1^{e_1} ... x_n^{e_n} over a fixed number of variables.
// Variables are addressed 1-based in the public API (x_1 is variable 1).
class Monomial {
 public:
  static constexpr int kMaxVars = 12;
  using Exponent = std::uint16_t;

  // The unit monomial in n variables.
  explicit Monomial(int n);
  Monomial(int n, std::span<const int> exponents);
  Monomial(std::initializer_list<int> exponents);

  static Monomial variable(int n, int var);

  int n() const { return n_; }
  int degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }

  // Exponent of x_var, 1 <= var <= n.
  int var_degree(int var) const;
  std::vector<int> exponents() const;

  // 0-based raw access for hot loops.
  int operator[](int idx) const { return exps_[idx]; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  int n_;
  int degree_ = 0;
  std::array<Exponent, kMaxVars> exps_{};

  friend Monomial mul(const Monomial&, const Monomial&);
  friend std::optional<Monomial> try_div(const Monomial&, const Monomial&);
  friend Monomial times_var(const Monomial&, int);
  friend std::optional<Monomial> div_var(const Monomial&, int);
};

// Lexicographic order with x_1 > x_2 > ... > x_n.
std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b);

// The listing order used everywhere: lower degree first, then lex-greater
// first. "less" means "precedes".
std::strong_ordering cmp_negdeglex(const Monomial& a, const Monomial& b);

struct NegDegLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_negdeglex(a, b) < 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

Monomial mul(const Monomial& a, const Monomial& b);
std::optional<Monomial> try_div(const Monomial& a, const Monomial& b);
Monomial times_var(const Monomial& m, int var);
std::optional<Monomial> div_var(const Monomial& m, int var);
bool divides(const Monomial& d, const Monomial& m);
int var_degree(const Monomial& m, int var);

// Binomial coefficient C(a, b) for b >= 0 with C(-1, 0) = 1 and
// C(u - 1, u) = 0 for u >= 1, matching the count of degree-b monomials
// in a - b + 1 variables.
long long binomial(long long a, long long b);

// All degree-d monomials in x_k, ..., x_n, in negdeglex order.
std::vector<Monomial> monomials_of(int n, int k, int d);

// Seg(n, k, d, (e_0, ..., e_q)): the degree-d monomials in x_k..x_n lying
// lex-between P * x_{k+q+1}^{e_q} and P * x_n^{e_q}, where
// P = x_k^{d-e_0} x_{k+1}^{e_0-e_1} ... x_{k+q}^{e_{q-1}-e_q}.
struct SegmentSpec {
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<int> prefix;  // e_0 >= e_1 >= ... >= e_q >= 0

  void validate() const;
};

std::vector<Monomial> segment(const SegmentSpec& spec);

}  // namespace bordercert

template <>
struct std::hash<bordercert::Monomial> {
  std::size_t operator()(const bordercert::Monomial& m) const { return m.hash(); }
};
