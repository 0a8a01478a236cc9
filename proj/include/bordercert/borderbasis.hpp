#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <type_traits>
#include <string>
#include <unordered_map>
#include <vector>

#include "bordercert/coeffring.hpp"
#include "bordercert/orderideal.hpp"

namespace bordercert {

template <class R>
using SpanElement = std::map<Monomial, R, NegDegLexLess>;

template <class R>
void add_to(SpanElement<R>& f, const Monomial& m, const std::type_identity_t<R>& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = f.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) f.erase(it);
  }
}

template <class R>
SpanElement<R> scale_shift(const SpanElement<R>& f, const std::type_identity_t<R>& c, const Monomial& m) {
  SpanElement<R> out;
  if (is_zero(c)) return out;
  for (const auto& [mono, v] : f) add_to(out, mul(mono, m), v * c);
  return out;
}

// g_j = b_j - sum_i Y_ij t_i for every border index j.
template <class R>
struct BorderSystem {
  std::shared_ptr<const OrderIdealData> oid;
  std::vector<std::map<int, R>> tails;  // tails[j - 1]: basis index -> Y_ij

  BorderSystem() = default;
  explicit BorderSystem(std::shared_ptr<const OrderIdealData> o)
      : oid(std::move(o)), tails(oid->nu) {}

  const std::map<int, R>& tail(int j) const { return tails.at(j - 1); }
  std::map<int, R>& tail(int j) { return tails.at(j - 1); }

  void set(int i, int j, R v) {
    if (is_zero(v))
      tail(j).erase(i);
    else
      tail(j)[i] = std::move(v);
  }
  R coeff(int i, int j) const {
    auto& t = tail(j);
    auto it = t.find(i);
    return it == t.end() ? R(0) : it->second;
  }
  std::size_t tail_terms() const {
    std::size_t k = 0;
    for (auto& t : tails) k += t.size();
    return k;
  }
};

// Single substitution b_j -> sum_i Y_ij t_i; f must lie in Span(O u dO).
template <class R>
SpanElement<R> reduce_sweep(const SpanElement<R>& f, const BorderSystem<R>& sys) {
  const auto& oid = *sys.oid;
  SpanElement<R> out;
  for (const auto& [m, c] : f) {
    if (oid.in_basis(m)) {
      add_to(out, m, c);
      continue;
    }
    int j = oid.border_index(m);
    BORDERCERT_CHECK(j != 0, "monomial " + m.to_string() + " outside O and its border");
    for (const auto& [i, y] : sys.tail(j)) add_to(out, oid.t(i), c * y);
  }
  return out;
}

// Normal forms of monomials of arbitrary support. For m outside O u dO,
// m is written as x_g * m' with x_g the lex-greatest variable lowering the
// border index of m by one, and NF(m) = sweep(x_g * NF(m')). Memoized.
template <class R>
class NormalFormEngine {
 public:
  explicit NormalFormEngine(const BorderSystem<R>& sys) : sys_(sys), oid_(*sys.oid) {}

  // -1 for basis monomials, 0 on the border, else the minimal number of
  // variable divisions needed to reach the border.
  int index(const Monomial& m) {
    if (oid_.in_basis(m)) return -1;
    if (oid_.in_border(m)) return 0;
    if (auto it = index_.find(m); it != index_.end()) return it->second;
    int best = -1;
    for (int g = 1; g <= m.n(); ++g) {
      auto q = div_var(m, g);
      if (!q) continue;
      int k = index(*q);
      if (k >= 0 && (best < 0 || k + 1 < best)) best = k + 1;
    }
    BORDERCERT_CHECK(best > 0, "no border divisor for " + m.to_string());
    index_.emplace(m, best);
    return best;
  }

  const SpanElement<R>& normal_form(const Monomial& m) {
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    SpanElement<R> nf;
    const int k = index(m);
    if (k < 0) {
      nf.emplace(m, R(1));
    } else if (k == 0) {
      for (const auto& [i, y] : sys_.tail(oid_.border_index(m))) add_to(nf, oid_.t(i), y);
    } else {
      int g = 1;
      std::optional<Monomial> q;
      for (; g <= m.n(); ++g) {
        q = div_var(m, g);
        if (q && index(*q) == k - 1) break;
      }
      BORDERCERT_CHECK(g <= m.n(), "index does not decrease");
      const SpanElement<R> prev = normal_form(*q);
      SpanElement<R> shifted;
      const Monomial xg = Monomial::variable(m.n(), g);
      for (const auto& [mono, c] : prev) add_to(shifted, mul(mono, xg), c);
      nf = reduce_sweep(shifted, sys_);
    }
    return cache_.emplace(m, std::move(nf)).first->second;
  }

  SpanElement<R> reduce(const SpanElement<R>& f) {
    SpanElement<R> out;
    for (const auto& [m, c] : f) {
      if (oid_.in_basis(m)) {
        add_to(out, m, c);
        continue;
      }
      for (const auto& [t, v] : normal_form(m)) add_to(out, t, c * v);
    }
    return out;
  }

 private:
  const BorderSystem<R>& sys_;
  const OrderIdealData& oid_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
  std::unordered_map<Monomial, SpanElement<R>, MonomialHash> cache_;
};

template <class R>
bool supported_on_closure(const SpanElement<R>& f, const OrderIdealData& oid) {
  for (const auto& [m, c] : f)
    if (!oid.in_basis(m) && !oid.in_border(m)) return false;
  return true;
}

template <class R>
SpanElement<R> reduce(const SpanElement<R>& f, const BorderSystem<R>& sys) {
  if (supported_on_closure(f, *sys.oid)) return reduce_sweep(f, sys);
  NormalFormEngine<R> engine(sys);
  return engine.reduce(f);
}

// x_alpha g_j1 - x_beta g_j2 with the border terms cancelled (x_0 = 1).
template <class R>
SpanElement<R> s_polynomial(const BorderSystem<R>& sys, const NeighborPair& p) {
  const auto& oid = *sys.oid;
  if (p.j1 < 1 || p.j1 > oid.nu || p.j2 < 1 || p.j2 > oid.nu || p.alpha < 1 ||
      p.alpha > oid.n || p.beta < 0 || p.beta > oid.n)
    throw ArgumentError("s_polynomial: index out of range");
  const Monomial xa = Monomial::variable(oid.n, p.alpha);
  const Monomial xb = p.beta ? Monomial::variable(oid.n, p.beta) : Monomial(oid.n);
  if (!(mul(xa, oid.b(p.j1)) == mul(xb, oid.b(p.j2))) || p.alpha == p.beta)
    throw ArgumentError("s_polynomial: not a neighbor pair");
  SpanElement<R> out;
  for (const auto& [i, y] : sys.tail(p.j1)) add_to(out, mul(xa, oid.t(i)), -y);
  for (const auto& [i, y] : sys.tail(p.j2)) add_to(out, mul(xb, oid.t(i)), y);
  return out;
}

template <class R>
struct PairFailure {
  NeighborPair pair;
  SpanElement<R> residue;
};

template <class R>
struct BorderBasisCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::vector<PairFailure<R>> failures;
};

template <class R>
BorderBasisCheck<R> is_border_basis(const BorderSystem<R>& sys, std::size_t max_failures = 16) {
  BorderBasisCheck<R> res;
  for (const auto& p : neighbor_pairs(*sys.oid)) {
    ++res.pairs_checked;
    auto residue = reduce_sweep(s_polynomial(sys, p), sys);
    if (!residue.empty()) {
      res.ok = false;
      if (res.failures.size() < max_failures) res.failures.push_back({p, std::move(residue)});
    }
  }
  return res;
}

BorderSystem<CoeffPoly> generic_distinguished(std::shared_ptr<const OrderIdealData> oid,
                                              RegistryPtr reg);

BorderSystem<Rational> specialize_system(const BorderSystem<CoeffPoly>& sys, const Assignment& a);
BorderSystem<Fp> specialize_system_mod(const BorderSystem<CoeffPoly>& sys, const Assignment& a,
                                       std::uint64_t prime);

// Least e with x_k^e reducing to zero; throws SearchFailure past (s+1)*mu.
template <class R>
int power_in_ideal(const BorderSystem<R>& sys, int k) {
  const auto& oid = *sys.oid;
  if (k < 1 || k > oid.n) throw ArgumentError("power_in_ideal: variable out of range");
  const long bound = static_cast<long>(oid.signature.s + 1) * oid.mu;
  const Monomial xk = Monomial::variable(oid.n, k);
  SpanElement<R> v;
  v.emplace(Monomial(oid.n), R(1));
  for (long e = 1; e <= bound; ++e) {
    SpanElement<R> shifted;
    for (const auto& [m, c] : v) add_to(shifted, mul(m, xk), c);
    v = reduce_sweep(shifted, sys);
    if (v.empty()) return static_cast<int>(e);
  }
  throw SearchFailure("power_in_ideal: x" + std::to_string(k) + " not nilpotent within bound");
}

template <class R>
std::string coeff_string(const R& c);

template <>
inline std::string coeff_string(const CoeffPoly& c) {
  return c.to_string();
}
template <>
inline std::string coeff_string(const Rational& c) {
  return to_string(c);
}
template <>
inline std::string coeff_string(const Fp& c) {
  return std::to_string(c.value());
}

// "(c1)*m1 + (c2)*m2 + ...", or "0".
template <class R>
std::string render_span(const SpanElement<R>& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f) {
    if (!first) os << " + ";
    first = false;
    os << '(' << coeff_string(c) << ')';
    if (!m.is_unit()) os << '*' << m.to_string();
  }
  return os.str();
}

// One line per border monomial: "b[j]: <b_j> = <tail>".
template <class R>
std::string render(const BorderSystem<R>& sys) {
  std::ostringstream os;
  const auto& oid = *sys.oid;
  for (int j = 1; j <= oid.nu; ++j) {
    SpanElement<R> t;
    for (const auto& [i, y] : sys.tail(j)) t.emplace(oid.t(i), y);
    os << "b[" << j << "]: " << oid.b(j).to_string() << " = " << render_span(t) << '\n';
  }
  return os.str();
}

}  // namespace bordercert
