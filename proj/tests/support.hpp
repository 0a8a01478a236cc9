#pragma once

#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bordercert/certify.hpp"

namespace bctest {

using namespace bordercert;

// Valid signatures with n <= max_n, s <= max_s and mu * nu <= max_size.
inline std::vector<Signature> grid(int max_n, int max_s, long max_size) {
  std::vector<Signature> out;
  for (int n = 2; n <= max_n; ++n)
    for (int r = 2; r < max_s; ++r)
      for (int s = r + 1; s <= max_s; ++s)
        for (int delta = 1; delta < n; ++delta)
          for (int w = 0; w < r; ++w) {
            Signature sig{n, r, s, delta, w};
            auto oid = build_order_ideal(sig);
            if (static_cast<long>(oid.mu) * oid.nu <= max_size) out.push_back(sig);
          }
  return out;
}

inline std::shared_ptr<const OrderIdealData> oid_of(const std::string& sig) {
  return std::make_shared<const OrderIdealData>(build_order_ideal(parse_signature(sig)));
}

inline std::shared_ptr<const OrderIdealData> oid_of(const Signature& sig) {
  return std::make_shared<const OrderIdealData>(build_order_ideal(sig));
}

inline SpanElement<Rational> random_span(std::mt19937_64& rng, int n, int max_deg) {
  SpanElement<Rational> f;
  const int terms = 1 + static_cast<int>(rng() % 6);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(n, 0);
    const int d = static_cast<int>(rng() % (max_deg + 1));
    for (int x = 0; x < d; ++x) ++e[rng() % n];
    add_to(f, Monomial(n, e), Rational(static_cast<long>(rng() % 19) - 9));
  }
  return f;
}

using Matrix = std::vector<std::vector<Rational>>;

// Multiplication matrices of the quotient read off the border basis:
// column i of M_k holds the coordinates of x_k * t_i.
inline std::vector<Matrix> multiplication_matrices(const BorderSystem<Rational>& sys) {
  const auto& oid = *sys.oid;
  std::vector<Matrix> ms(oid.n + 1, Matrix(oid.mu, std::vector<Rational>(oid.mu)));
  for (int k = 1; k <= oid.n; ++k)
    for (int i = 1; i <= oid.mu; ++i) {
      const int slot = oid.times_var_slot(i, k);
      if (slot > 0) {
        ms[k][slot - 1][i - 1] = 1;
      } else {
        for (const auto& [ip, y] : sys.tail(-slot)) ms[k][ip - 1][i - 1] = y;
      }
    }
  return ms;
}

// Coordinates of f in the quotient basis: sum of c * m(M) applied to the
// coordinate vector of 1.
inline std::vector<Rational> quotient_coordinates(const std::vector<Matrix>& ms, const OrderIdealData& oid,
                                           const SpanElement<Rational>& f) {
  std::vector<Rational> total(oid.mu);
  const int one = oid.basis_index(Monomial(oid.n));
  for (const auto& [m, c] : f) {
    std::vector<Rational> v(oid.mu);
    v[one - 1] = 1;
    for (int k = 1; k <= oid.n; ++k)
      for (int e = 0; e < m.var_degree(k); ++e) {
        std::vector<Rational> w(oid.mu);
        for (int a = 0; a < oid.mu; ++a)
          for (int b = 0; b < oid.mu; ++b)
            if (sgn(ms[k][a][b]) != 0 && sgn(v[b]) != 0) w[a] += ms[k][a][b] * v[b];
        v = std::move(w);
      }
    for (int a = 0; a < oid.mu; ++a) total[a] += c * v[a];
  }
  return total;
}

inline std::vector<Rational> coordinates(const OrderIdealData& oid, const SpanElement<Rational>& f) {
  std::vector<Rational> v(oid.mu);
  for (const auto& [m, c] : f) {
    // A non-basis monomial lands nowhere, so the comparison fails.
    if (const int i = oid.basis_index(m)) v[i - 1] = c;
    else v.push_back(c);
  }
  return v;
}

struct PatternCheck {
  std::vector<std::string> violations;
  int exceptions = 0;  // the x_n-derivative entries described below
};

// Entrywise zero patterns of the coordinate tuples: C tuples are unit
// vectors, theta tuples live on S_L x T' and S_D x T, and each Z tuple has
// its key entry (1, or s+1 for x_n) alone in its column while every other
// Z key vanishes, except for a back-or-middle Z against a front key.
inline PatternCheck zero_patterns(const GenericModification& gm, const Assignment& point) {
  PatternCheck out;
  const auto& oid = *gm.system.oid;
  const auto coords = all_coordinates(gm);
  const auto tuples = all_coordinate_tuples(gm, point);
  auto fail = [&](const std::string& what) { out.violations.push_back(what); };
  if (static_cast<long>(coords.size()) != dim_U(oid)) fail("coordinate count differs from dim U");
  const auto frame = translation_frame(oid);
  std::vector<std::pair<Coordinate, std::pair<int, int>>> keys;
  for (const auto& c : coords)
    if (c.kind == Coordinate::Kind::Z) keys.push_back({c, key_component(oid, frame, c.a, c.b)});
  const std::set<Monomial, NegDegLexLess> tar_all(oid.tar_all.begin(), oid.tar_all.end());
  const std::set<Monomial, NegDegLexLess> tar_prime(oid.tar_prime.begin(), oid.tar_prime.end());
  const int delta = oid.signature.delta;

  for (std::size_t k = 0; k < coords.size(); ++k) {
    const auto& c = coords[k];
    const auto& t = tuples[k];
    auto at = [&](int i, int j) { return t[tangent_column(oid, i, j)]; };
    auto where = [&](int i, int j) {
      return c.name() + " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    switch (c.kind) {
      case Coordinate::Kind::C:
        for (int j = 1; j <= oid.nu; ++j)
          for (int i = 1; i <= oid.mu; ++i)
            if (at(i, j) != ((i == c.a && j == c.b) ? -1 : 0)) fail(where(i, j));
        break;
      case Coordinate::Kind::Theta:
        for (int j = 1; j <= oid.nu; ++j)
          for (int i = 1; i <= oid.mu; ++i) {
            if (sgn(at(i, j)) == 0) continue;
            const bool ok = (oid.in_s_l(j) && tar_prime.count(oid.t(i))) ||
                            (oid.in_s_d(j) && tar_all.count(oid.t(i)));
            if (!ok) fail(where(i, j));
          }
        break;
      case Coordinate::Kind::Z: {
        const auto [ki, kj] = key_component(oid, frame, c.a, c.b);
        if (at(ki, kj) != (c.a == oid.n ? oid.signature.s + 1 : 1)) fail(where(ki, kj) + " key");
        for (int i = 1; i <= oid.mu; ++i)
          if (i != ki && sgn(at(i, kj)) != 0) fail(where(i, kj));
        for (const auto& [other, key] : keys) {
          if (other == c || (c.a >= delta && other.a < delta)) continue;
          // d/dx_n of x_a' x_n^s is s x_a' x_n^(s-1); when that is a border
          // monomial its normal form can reach x_n^s. Only a' = delta with
          // w = r - 1 does this, and only below the diagonal (a = n > a').
          const Monomial hit = *div_var(frame.anchor.at(other.a), oid.n);
          if (c.a == oid.n && other.a != oid.n && !oid.in_basis(hit)) {
            if (other.a != delta || oid.signature.w != oid.signature.r - 1)
              fail(c.name() + " unexpected reduction at " + other.name());
            ++out.exceptions;
            continue;
          }
          if (sgn(at(key.first, key.second)) != 0) fail(c.name() + " at key of " + other.name());
        }
        break;
      }
    }
    if (c.kind != Coordinate::Kind::Z)
      for (const auto& [z, key] : keys)
        if (sgn(at(key.first, key.second)) != 0) fail(c.name() + " at key of " + z.name());
  }
  return out;
}

}  // namespace bctest
