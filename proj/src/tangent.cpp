#include "bordercert/tangent.hpp"

#include <map>
#include <set>

namespace bordercert {

namespace {

template <class Field>
typename Field::T neg(const Field& f, const typename Field::T& v) {
  return f.sub_mul(typename Field::T(0), typename Field::T(1), v);
}

template <class Field, class R, class Conv>
std::vector<SparseRow<Field>> build_rows(const BorderSystem<R>& sys, const Field& F, Conv conv,
                                         std::size_t* pair_count) {
  using T = typename Field::T;
  const auto& oid = *sys.oid;
  const int mu = oid.mu;

  std::vector<std::vector<std::pair<int, T>>> Y(oid.nu + 1);
  for (int j = 1; j <= oid.nu; ++j)
    for (const auto& [i, y] : sys.tail(j)) Y[j].emplace_back(i, conv(y));

  const T one(1);
  const auto pairs = neighbor_pairs(oid);
  if (pair_count) *pair_count = pairs.size();

  std::vector<SparseRow<Field>> out;
  std::set<SparseRow<Field>> seen;
  std::vector<std::map<int, T>> rows(mu + 1);

  auto add = [&](int ir, int col, const T& v) {
    if (F.is_zero(v)) return;
    auto [it, inserted] = rows[ir].try_emplace(col, v);
    if (!inserted) {
      it->second = F.add(it->second, v);
      if (F.is_zero(it->second)) rows[ir].erase(it);
    }
  };

  for (const auto& p : pairs) {
    for (auto& r : rows) r.clear();
    std::map<int, T> sk;
    struct Side {
      int j, var;
      bool positive;
    };
    for (const Side side : {Side{p.j1, p.alpha, true}, Side{p.j2, p.beta, false}}) {
      const T sign = side.positive ? one : neg(F, one);
      for (int i = 1; i <= mu; ++i) {
        const int col = tangent_column(oid, i, side.j);
        if (side.var == 0) {
          add(i, col, sign);
          continue;
        }
        const int slot = oid.times_var_slot(i, side.var);
        if (slot > 0) {
          add(slot, col, sign);
        } else {
          for (const auto& [ip, y] : Y[-slot]) add(ip, col, F.mul(sign, y));
        }
      }
      if (side.var == 0) continue;
      for (const auto& [i, y] : Y[side.j]) {
        const int slot = oid.times_var_slot(i, side.var);
        if (slot > 0) continue;
        auto [it, inserted] = sk.try_emplace(-slot, T(0));
        it->second = F.sub_mul(it->second, sign, y);
      }
    }
    for (const auto& [k, v] : sk) {
      if (F.is_zero(v)) continue;
      const T mv = neg(F, v);
      for (int i = 1; i <= mu; ++i) add(i, tangent_column(oid, i, k), mv);
    }
    for (int ir = 1; ir <= mu; ++ir) {
      if (rows[ir].empty()) continue;
      SparseRow<Field> row(rows[ir].begin(), rows[ir].end());
      const T inv = F.inv(row.back().second);
      for (auto& e : row) e.second = F.mul(e.second, inv);
      if (seen.insert(row).second) out.push_back(std::move(row));
    }
  }
  return out;
}

template <class Field>
int rank_of(const std::vector<SparseRow<Field>>& rows, int cols, const Field& F) {
  SparseEchelon<Field> ech(cols, F);
  for (const auto& r : rows) {
    ech.add_row(r);
    if (ech.rank() == cols) break;
  }
  return ech.rank();
}

template <class R, class Field>
int tangent_dimension_impl(const BorderSystem<R>& sys, const std::vector<SparseRow<Field>>& rows,
                           const Field& F, std::size_t pairs, TangentSystemStats* stats) {
  const auto& oid = *sys.oid;
  const int cols = oid.mu * oid.nu;
  const int rank = rank_of(rows, cols, F);
  if (stats) *stats = {pairs, rows.size(), static_cast<std::size_t>(cols), rank};
  const int dim = cols - rank;
  BORDERCERT_CHECK(dim >= dim_U(oid), "tangent dimension " + std::to_string(dim) +
                                          " below dim(U) = " + std::to_string(dim_U(oid)));
  return dim;
}

template <class R>
void require_border_basis(const BorderSystem<R>& sys) {
  if (!is_border_basis(sys, 1).ok)
    throw ArgumentError("tangent dimension requested for a system that is not a border basis");
}

}  // namespace

std::vector<SparseRow<RationalField>> tangent_equations(const BorderSystem<Rational>& sys) {
  return build_rows(sys, RationalField{}, [](const Rational& q) { return q; }, nullptr);
}

std::vector<SparseRow<ModpField>> tangent_equations(const BorderSystem<Fp>& sys) {
  std::uint64_t p = 0;
  for (const auto& t : sys.tails)
    for (const auto& [i, y] : t)
      if (y.prime() != 0) p = y.prime();
  if (p == 0) p = Fp::kDefaultPrime;
  return build_rows(sys, ModpField{p}, [p](const Fp& y) { return (y * Fp(1, p)).value(); },
                    nullptr);
}

int tangent_dimension(const BorderSystem<Rational>& sys, TangentSystemStats* stats) {
  require_border_basis(sys);
  std::size_t pairs = 0;
  const RationalField F;
  auto rows = build_rows(sys, F, [](const Rational& q) { return q; }, &pairs);
  return tangent_dimension_impl(sys, rows, F, pairs, stats);
}

int tangent_dimension(const BorderSystem<Fp>& sys, TangentSystemStats* stats) {
  require_border_basis(sys);
  std::uint64_t p = 0;
  for (const auto& t : sys.tails)
    for (const auto& [i, y] : t)
      if (y.prime() != 0) p = y.prime();
  if (p == 0) p = Fp::kDefaultPrime;
  std::size_t pairs = 0;
  const ModpField F{p};
  auto rows =
      build_rows(sys, F, [p](const Fp& y) { return (y * Fp(1, p)).value(); }, &pairs);
  return tangent_dimension_impl(sys, rows, F, pairs, stats);
}

long dim_U(const OrderIdealData& oid) {
  const auto& sig = oid.signature;
  const long eta = translation_frame(oid).eta;
  return static_cast<long>(oid.ell) * oid.tau + oid.gamma + (sig.delta - 1) * eta +
         (sig.n - sig.delta + 1);
}

std::string Coordinate::name() const {
  switch (kind) {
    case Kind::C:
      return "C[" + std::to_string(a) + "," + std::to_string(b) + "]";
    case Kind::Theta:
      return "theta[" + std::to_string(a) + "]";
    case Kind::Z:
      return "Z[" + std::to_string(a) + "," + std::to_string(b) + "]";
  }
  return "?";
}

std::vector<Coordinate> all_coordinates(const GenericModification& gm) {
  std::vector<Coordinate> out;
  const auto& reg = *gm.registry;
  for (int id = 0; id < reg.size(); ++id) {
    auto [a, b] = reg.decode(id);
    if (reg.is_theta(id))
      out.push_back({Coordinate::Kind::Theta, a, 0});
    else
      out.push_back({Coordinate::Kind::C, a, b});
  }
  const auto frame = translation_frame(*gm.oid);
  for (const auto& [alpha, ms] : frame.delta_sets) {
    for (int lambda = 1; lambda <= static_cast<int>(ms.size()); ++lambda)
      out.push_back({Coordinate::Kind::Z, alpha, lambda});
  }
  return out;
}

std::pair<int, int> key_component(const OrderIdealData& oid, const TranslationFrame& frame,
                                  int alpha, int lambda) {
  auto a = frame.anchor.find(alpha);
  if (a == frame.anchor.end()) throw ArgumentError("no anchor for variable " + std::to_string(alpha));
  const auto& ms = frame.delta_sets.at(alpha);
  if (lambda < 1 || lambda > static_cast<int>(ms.size()))
    throw ArgumentError("lambda out of range for Z[" + std::to_string(alpha) + "," +
                        std::to_string(lambda) + "]");
  const int j = oid.border_index(a->second);
  const Monomial t = mul(*div_var(a->second, alpha), ms[lambda - 1]);
  const int i = oid.basis_index(t);
  BORDERCERT_CHECK(i != 0 && j != 0, "key component outside O x dO");
  return {i, j};
}

namespace {

void check_point(const GenericModification& gm, const Assignment& point) {
  if (point.size() != gm.registry->size())
    throw ArgumentError("assignment does not match the indeterminate registry");
  for (int id = 0; id < point.size(); ++id)
    if (!point.has(id)) throw ArgumentError("assignment misses " + gm.registry->name(id));
}

// -dY_ij/dchi at the point, for chi a registry indeterminate.
TangentTuple registry_tuple(const GenericModification& gm, const Assignment& point, int chi_id) {
  const auto& oid = *gm.oid;
  TangentTuple tup(static_cast<std::size_t>(oid.mu) * oid.nu);
  for (int j = 1; j <= oid.nu; ++j)
    for (const auto& [i, y] : gm.system.tail(j)) {
      const DualRational v = y.evaluate<DualRational>(
          [&](int id) { return DualRational(point.get(id), Rational(id == chi_id ? 1 : 0)); },
          [](const Rational& c) { return DualRational(c); });
      tup[tangent_column(oid, i, j)] = -v.slope;
    }
  return tup;
}

// g_j(x_alpha + eps*m) to first order; only the eps-part is returned.
SpanElement<Rational> first_order_shift(const SpanElement<Rational>& g, int alpha,
                                        const Monomial& m) {
  SpanElement<DualRational> sub;
  const Monomial xa = Monomial::variable(m.n(), alpha);
  for (const auto& [mono, c] : g) {
    const int k = mono.var_degree(alpha);
    add_to(sub, mono, DualRational(c));
    if (k == 0) continue;
    // (x_alpha + eps m)^k = x_alpha^k + k eps x_alpha^(k-1) m
    add_to(sub, mul(*div_var(mono, alpha), m), DualRational(Rational(0), c * k));
  }
  SpanElement<Rational> eps;
  for (const auto& [mono, d] : sub) add_to(eps, mono, d.slope);
  return eps;
}

SpanElement<Rational> generator(const BorderSystem<Rational>& sys, int j) {
  SpanElement<Rational> g;
  add_to(g, sys.oid->b(j), Rational(1));
  for (const auto& [i, y] : sys.tail(j)) add_to(g, sys.oid->t(i), Rational(-y));
  return g;
}

TangentTuple z_tuple(const BorderSystem<Rational>& sysp, NormalFormEngine<Rational>& engine,
                     const TranslationFrame& frame, int alpha, int lambda, bool by_derivative) {
  const auto& oid = *sysp.oid;
  const auto& ms = frame.delta_sets.at(alpha);
  if (lambda < 1 || lambda > static_cast<int>(ms.size()))
    throw ArgumentError("unknown coordinate Z[" + std::to_string(alpha) + "," +
                        std::to_string(lambda) + "]");
  const Monomial& m = ms[lambda - 1];
  TangentTuple tup(static_cast<std::size_t>(oid.mu) * oid.nu);
  for (int j = 1; j <= oid.nu; ++j) {
    const auto g = generator(sysp, j);
    SpanElement<Rational> h;
    if (by_derivative) {
      for (const auto& [mono, c] : g) {
        const int k = mono.var_degree(alpha);
        if (k > 0) add_to(h, mul(*div_var(mono, alpha), m), Rational(c * k));
      }
    } else {
      h = first_order_shift(g, alpha, m);
    }
    for (const auto& [t, c] : engine.reduce(h)) tup[tangent_column(oid, oid.basis_index(t), j)] = c;
  }
  return tup;
}

}  // namespace

TangentTuple coordinate_tangent_tuple(const GenericModification& gm, const Assignment& point,
                                      const Coordinate& chi) {
  check_point(gm, point);
  const auto& reg = *gm.registry;
  switch (chi.kind) {
    case Coordinate::Kind::C: {
      const int id = reg.c_id(chi.a, chi.b);
      if (id < 0) throw ArgumentError("unknown coordinate " + chi.name());
      return registry_tuple(gm, point, id);
    }
    case Coordinate::Kind::Theta: {
      if (chi.a < 1 || chi.a > reg.num_modification())
        throw ArgumentError("unknown coordinate " + chi.name());
      return registry_tuple(gm, point, reg.theta_id(chi.a));
    }
    case Coordinate::Kind::Z: {
      if (chi.a < 1 || chi.a > gm.oid->n) throw ArgumentError("unknown coordinate " + chi.name());
      const auto sysp = specialize_system(gm.system, point);
      NormalFormEngine<Rational> engine(sysp);
      return z_tuple(sysp, engine, translation_frame(*gm.oid), chi.a, chi.b, false);
    }
  }
  throw ArgumentError("unknown coordinate kind");
}

TangentTuple z_tuple_by_derivative(const GenericModification& gm, const Assignment& point,
                                   int alpha, int lambda) {
  check_point(gm, point);
  const auto sysp = specialize_system(gm.system, point);
  NormalFormEngine<Rational> engine(sysp);
  return z_tuple(sysp, engine, translation_frame(*gm.oid), alpha, lambda, true);
}

std::vector<TangentTuple> all_coordinate_tuples(const GenericModification& gm,
                                                const Assignment& point) {
  check_point(gm, point);
  const auto sysp = specialize_system(gm.system, point);
  NormalFormEngine<Rational> engine(sysp);
  const auto frame = translation_frame(*gm.oid);
  std::vector<TangentTuple> out;
  for (const auto& chi : all_coordinates(gm)) {
    switch (chi.kind) {
      case Coordinate::Kind::C:
        out.push_back(registry_tuple(gm, point, gm.registry->c_id(chi.a, chi.b)));
        break;
      case Coordinate::Kind::Theta:
        out.push_back(registry_tuple(gm, point, gm.registry->theta_id(chi.a)));
        break;
      case Coordinate::Kind::Z:
        out.push_back(z_tuple(sysp, engine, frame, chi.a, chi.b, false));
        break;
    }
  }
  return out;
}

int independence_rank(const GenericModification& gm, const Assignment& point) {
  const auto tuples = all_coordinate_tuples(gm, point);
  const int cols = gm.oid->mu * gm.oid->nu;
  SparseEchelon<RationalField> ech(cols, RationalField{});
  for (const auto& t : tuples) {
    SparseRow<RationalField> row;
    for (int c = 0; c < cols; ++c)
      if (sgn(t[c]) != 0) row.emplace_back(c, t[c]);
    ech.add_row(row);
  }
  return ech.rank();
}

namespace {

// Row scaled to coprime integers, then reduced modulo p. Its rank modulo p
// is a lower bound for the rank over Q.
SparseRow<ModpField> integer_image(const std::vector<std::pair<int, Rational>>& row,
                                   std::uint64_t p) {
  Integer den = 1, num = 0;
  for (const auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& [c, v] : row) {
    ints.push_back(v.get_num() * (den / v.get_den()));
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), ints.back().get_mpz_t());
  }
  SparseRow<ModpField> out;
  for (std::size_t k = 0; k < row.size(); ++k) {
    const Integer q = ints[k] / num;
    const auto r = static_cast<std::uint64_t>(mpz_fdiv_ui(q.get_mpz_t(), p));
    if (r != 0) out.emplace_back(row[k].first, r);
  }
  return out;
}

bool solves(const std::vector<SparseRow<RationalField>>& rows, const TangentTuple& t) {
  for (const auto& row : rows) {
    Rational dot = 0;
    for (const auto& [c, v] : row) dot += v * t[c];
    if (sgn(dot) != 0) return false;
  }
  return true;
}

}  // namespace

ExactTangentResult exact_tangent_dimension(const GenericModification& gm, const Assignment& point,
                                           std::uint64_t prime) {
  validate_prime(prime);
  check_point(gm, point);
  const auto& oid = *gm.oid;
  const auto sysq = specialize_system(gm.system, point);
  require_border_basis(sysq);
  std::size_t pairs = 0;
  const RationalField Q;
  const auto rows = build_rows(sysq, Q, [](const Rational& q) { return q; }, &pairs);
  const int cols = oid.mu * oid.nu;
  const long du = dim_U(oid);

  ExactTangentResult res;
  const ModpField F{prime};
  SparseEchelon<ModpField> ech(cols, F);
  for (const auto& r : rows) ech.add_row(integer_image(r, prime));
  if (cols - ech.rank() == du) {
    bool ok = true;
    SparseEchelon<ModpField> tup_ech(cols, F);
    for (const auto& t : all_coordinate_tuples(gm, point)) {
      if (!solves(rows, t)) {
        ok = false;
        break;
      }
      std::vector<std::pair<int, Rational>> sparse;
      for (int c = 0; c < cols; ++c)
        if (sgn(t[c]) != 0) sparse.emplace_back(c, t[c]);
      tup_ech.add_row(integer_image(sparse, prime));
    }
    BORDERCERT_CHECK(ok, "a coordinate tuple fails the tangent equations");
    if (tup_ech.rank() == du) {
      res.dimension = static_cast<int>(du);
      res.method = "certificate";
      res.stats = {pairs, rows.size(), static_cast<std::size_t>(cols), ech.rank()};
      return res;
    }
  }
  res.dimension = tangent_dimension_impl(sysq, rows, Q, pairs, &res.stats);
  res.method = "elimination";
  return res;
}

bool satisfies_tangent_equations(const BorderSystem<Rational>& sys, const TangentTuple& tuple) {
  const auto& oid = *sys.oid;
  if (tuple.size() != static_cast<std::size_t>(oid.mu) * oid.nu)
    throw ArgumentError("tuple length does not match mu * nu");
  for (const auto& row : tangent_equations(sys)) {
    Rational dot = 0;
    for (const auto& [c, v] : row) dot += v * tuple[c];
    if (sgn(dot) != 0) return false;
  }
  return true;
}

}  // namespace bordercert
