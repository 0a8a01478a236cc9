#include "bordercert/orderideal.hpp"

#include <algorithm>
#include <set>
#include <cctype>
#include <sstream>
#include <tuple>

#include "bordercert/errors.hpp"

namespace bordercert {

void Signature::validate() const {
  auto fail = [&](const std::string& why) {
    throw ArgumentError("invalid signature (" + to_string() + "): " + why);
  };
  if (n < 2) fail("need n >= 2");
  if (n > Monomial::kMaxVars) fail("n exceeds " + std::to_string(Monomial::kMaxVars));
  if (delta < 1 || delta >= n) fail("need 1 <= delta < n");
  if (r < 2) fail("need r >= 2");
  if (s <= r) fail("need s > r");
  if (w < 0 || w > r - 1) fail("need 0 <= w <= r - 1");
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << n << ',' << r << ',' << s << ',' << delta << ',' << w;
  return os.str();
}

namespace {

std::vector<int> parse_ints(const std::string& text, std::size_t count, const char* what) {
  std::vector<int> out;
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ArgumentError(std::string("cannot parse ") + what + " '" + text + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size())
      throw ArgumentError(std::string("cannot parse ") + what + " '" + text + "'");
    out.push_back(v);
  }
  if (out.size() != count)
    throw ArgumentError(std::string(what) + " needs " + std::to_string(count) +
                        " comma-separated integers, got '" + text + "'");
  return out;
}

}  // namespace

Signature parse_signature(const std::string& text) {
  auto v = parse_ints(text, 5, "signature");
  Signature sig{v[0], v[1], v[2], v[3], v[4]};
  sig.validate();
  return sig;
}

Signature shape_to_signature(int n, int kappa, int r, int s) {
  if (kappa < 1 || kappa >= n) throw ArgumentError("shape: need 1 <= kappa < n");
  if (r < 2) throw ArgumentError("shape: need r >= 2");
  if (s <= r) throw ArgumentError("shape: need s > r");
  Signature sig{n, r, s, n - kappa, r - 1};
  sig.validate();
  return sig;
}

Signature parse_shape(const std::string& text) {
  auto v = parse_ints(text, 4, "shape");
  return shape_to_signature(v[0], v[1], v[2], v[3]);
}

int OrderIdealData::basis_index(const Monomial& m) const {
  auto it = basis_idx_.find(m);
  return it == basis_idx_.end() ? 0 : it->second;
}

int OrderIdealData::border_index(const Monomial& m) const {
  auto it = border_idx_.find(m);
  return it == border_idx_.end() ? 0 : it->second;
}

namespace {

Monomial power(int n, int var, int e) {
  std::vector<int> ex(n, 0);
  ex[var - 1] = e;
  return Monomial(n, ex);
}

}  // namespace

OrderIdealData build_order_ideal(const Signature& sig) {
  sig.validate();
  OrderIdealData o;
  o.signature = sig;
  o.n = sig.n;
  const int n = sig.n, r = sig.r, s = sig.s, dl = sig.delta, w = sig.w;

  o.b_ell = mul(power(n, dl, r - w), power(n, n, w));

  for (int d = 0; d <= s; ++d) {
    int count = 0;
    if (d < r) {
      for (auto& m : monomials_of(n, 1, d)) o.basis.push_back(m), ++count;
    } else {
      const Monomial bound = mul(o.b_ell, power(n, n, d - r));
      for (auto& m : monomials_of(n, dl, d))
        if (cmp_lex(bound, m) > 0) o.basis.push_back(m), ++count;
    }
    o.hilbert.push_back(count);
  }
  o.mu = static_cast<int>(o.basis.size());
  for (int i = 0; i < o.mu; ++i) o.basis_idx_.emplace(o.basis[i], i + 1);

  std::set<Monomial, NegDegLexLess> border;
  for (const auto& t : o.basis)
    for (int a = 1; a <= n; ++a) {
      Monomial m = times_var(t, a);
      if (!o.basis_idx_.count(m)) border.insert(m);
    }
  o.border.assign(border.begin(), border.end());
  o.nu = static_cast<int>(o.border.size());
  for (int j = 0; j < o.nu; ++j) o.border_idx_.emplace(o.border[j], j + 1);

  o.mult_.assign(static_cast<std::size_t>(o.mu) * n, 0);
  for (int i = 1; i <= o.mu; ++i)
    for (int a = 1; a <= n; ++a) {
      Monomial m = times_var(o.t(i), a);
      int bi = o.basis_index(m);
      int slot = bi ? bi : -o.border_index(m);
      BORDERCERT_CHECK(slot != 0, "x_alpha * t_i is neither basis nor border");
      o.mult_[(i - 1) * n + (a - 1)] = slot;
    }

  o.leading_flag_.assign(o.nu, false);
  o.s_l_flag_.assign(o.nu, false);
  o.s_d_flag_.assign(o.nu, false);
  for (int j = 1; j <= o.nu; ++j) {
    const Monomial& b = o.b(j);
    bool front_free = true;
    for (int a = 1; a < dl; ++a)
      if (b.var_degree(a) > 0) front_free = false;
    if (b.degree() == r && cmp_lex(b, o.b_ell) >= 0) {
      o.leading.push_back(b);
      o.leading_flag_[j - 1] = true;
      if (front_free) {
        o.s_l.push_back(b);
        o.s_l_flag_[j - 1] = true;
      }
    }
    if (front_free && b.degree() > r && b.degree() <= s) {
      o.s_d.push_back(b);
      o.s_d_flag_[j - 1] = true;
    }
  }

  for (const auto& t : o.basis) {
    if (t.degree() == s) o.trailing.push_back(t);
    if (t.degree() >= r) o.tar_all.push_back(t);
    if (t.degree() >= r && t.degree() < s) {
      o.tar_prime.push_back(t);
      if (dl < n && t.var_degree(dl + 1) >= w) o.tar_double_prime.push_back(t);
    }
  }
  o.ell = static_cast<int>(o.leading.size());
  o.tau = static_cast<int>(o.trailing.size());
  o.gamma = static_cast<int>(o.tar_double_prime.size());

  BORDERCERT_CHECK(o.b(o.ell) == o.b_ell, "b_ell is not at border index ell");
  return o;
}

long long gamma_formula(const Signature& sig) {
  sig.validate();
  const long long n = sig.n, r = sig.r, s = sig.s, dl = sig.delta, w = sig.w;
  long long total = 0;
  for (long long d = r; d <= s - 1; ++d)
    for (long long e = d - (r - (w + 1)); e <= d; ++e)
      for (long long u = 0; u <= e - w; ++u) total += binomial(u + (n - dl - 1) - 1, u);
  return total;
}

std::vector<NeighborPair> neighbor_pairs(const OrderIdealData& oid) {
  std::vector<NeighborPair> out;
  const int n = oid.n;
  for (int j1 = 1; j1 <= oid.nu; ++j1) {
    for (int a = 1; a <= n; ++a) {
      const Monomial m = times_var(oid.b(j1), a);
      if (int j2 = oid.border_index(m)) out.push_back({j1, j2, a, 0});
      for (int b = 1; b <= n; ++b) {
        if (b == a) continue;
        auto q = div_var(m, b);
        if (!q) continue;
        int j2 = oid.border_index(*q);
        if (j2 > j1) out.push_back({j1, j2, a, b});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NeighborPair& x, const NeighborPair& y) {
    return std::tie(x.j1, x.j2, x.alpha, x.beta) < std::tie(y.j1, y.j2, y.alpha, y.beta);
  });
  return out;
}

std::vector<PathStep> across_street_path(const OrderIdealData& oid, const Monomial& from,
                                         const Monomial& to) {
  const auto& sig = oid.signature;
  const int n = sig.n, r = sig.r, dl = sig.delta;
  if (from.n() != n || to.n() != n) throw DimensionError("path endpoints over wrong ring");
  if (dl == n) throw ArgumentError("path: no back variables");
  const int s0 = from.var_degree(dl + 1);
  if (!(from == mul(power(n, dl, r - s0), power(n, dl + 1, s0))))
    throw ArgumentError("path: start " + from.to_string() +
                        " is not of the form x_delta^(r-e) x_(delta+1)^e");
  if (to.degree() != r) throw ArgumentError("path: target must have degree r");
  for (int a = 1; a < dl; ++a)
    if (to.var_degree(a) > 0) throw ArgumentError("path: target involves a front variable");
  // e_k = total exponent of x_{delta+k+1}..x_n in the target.
  std::vector<int> e(n - dl, 0);
  for (int k = 0; k < n - dl; ++k)
    for (int v = dl + k + 1; v <= n; ++v) e[k] += to.var_degree(v);
  if (e[0] < s0) throw ArgumentError("path: target " + to.to_string() + " not reachable");

  std::vector<PathStep> path;
  Monomial cur = from;
  auto step = [&](int alpha, int beta) {
    auto q = div_var(times_var(cur, alpha), beta);
    BORDERCERT_CHECK(q.has_value(), "path step not divisible");
    path.push_back({cur, *q, alpha, beta});
    cur = *q;
  };
  for (int i = 0; i < e[0] - s0; ++i) step(dl + 1, dl);
  for (int k = 1; k < n - dl; ++k)
    for (int i = 0; i < e[k]; ++i) step(dl + k + 1, dl + k);
  BORDERCERT_CHECK(cur == to, "path does not end at the target");
  return path;
}

TranslationFrame translation_frame(const OrderIdealData& oid) {
  const auto& sig = oid.signature;
  const int n = sig.n, r = sig.r, s = sig.s, dl = sig.delta;
  TranslationFrame f;
  std::set<Monomial, NegDegLexLess> tp(oid.tar_prime.begin(), oid.tar_prime.end());
  const Monomial xn_r1 = power(n, n, r - 1);
  std::vector<Monomial> front;
  for (int d = 0; d <= s - r; ++d)
    for (auto& m : monomials_of(n, dl, d)) {
      Monomial p = mul(m, xn_r1);
      if (d == 0 || tp.count(p)) front.push_back(m);
    }
  for (int a = 1; a <= n; ++a) {
    if (a < dl) {
      f.anchor.emplace(a, mul(Monomial::variable(n, a), xn_r1));
      f.delta_sets.emplace(a, front);
    } else {
      f.anchor.emplace(a, mul(Monomial::variable(n, a), power(n, n, s)));
      f.delta_sets.emplace(a, std::vector<Monomial>{Monomial(n)});
    }
  }
  f.eta = dl > 1 ? static_cast<int>(front.size()) : 0;
  return f;
}

}  // namespace bordercert
