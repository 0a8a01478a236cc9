#include "bordercert/modification.hpp"

#include <sstream>

namespace bordercert {

namespace {

Monomial power(int n, int var, int e) {
  std::vector<int> ex(n, 0);
  ex[var - 1] = e;
  return Monomial(n, ex);
}

// x_delta^(r-e) x_(delta+1)^e, the lex-maximal element of Seg(n, delta, r, (e)).
Monomial segment_head(const Signature& sig, int e) {
  return mul(power(sig.n, sig.delta, sig.r - e), power(sig.n, sig.delta + 1, e));
}

std::vector<Monomial> degree_r_segment(const Signature& sig, int e) {
  return segment(SegmentSpec{sig.n, sig.delta, sig.r, {e}});
}

// Fill tm for every monomial of Seg(n, delta, r, (e)) from the target of its head.
void propagate(const OrderIdealData& oid, int e, TargetMap& tm) {
  const Monomial head = segment_head(oid.signature, e);
  const int jh = oid.border_index(head);
  BORDERCERT_CHECK(jh != 0, "segment head is not a border monomial");
  const SpanElement<CoeffPoly> base = tm.count(jh) ? tm.at(jh) : SpanElement<CoeffPoly>{};
  for (const auto& m : degree_r_segment(oid.signature, e)) {
    if (m == head) continue;
    SpanElement<CoeffPoly> cur = base;
    for (const auto& st : across_street_path(oid, head, m)) cur = transport(cur, st.alpha, st.beta);
    for (const auto& [t, c] : cur)
      BORDERCERT_CHECK(oid.in_basis(t), "transported target leaves the basis: " + t.to_string());
    const int j = oid.border_index(m);
    BORDERCERT_CHECK(j != 0, "segment monomial is not a border monomial");
    if (!cur.empty()) tm[j] = std::move(cur);
  }
}

}  // namespace

SpanElement<CoeffPoly> transport(const SpanElement<CoeffPoly>& f, int alpha, int beta) {
  SpanElement<CoeffPoly> out;
  for (const auto& [m, c] : f) {
    auto q = div_var(times_var(m, alpha), beta);
    BORDERCERT_CHECK(q.has_value(), "inexact transport of " + m.to_string() + " by x" +
                                        std::to_string(alpha) + "/x" + std::to_string(beta));
    add_to(out, *q, c);
  }
  return out;
}

Step1Targets step1(const OrderIdealData& oid, const RegistryPtr& reg) {
  const auto& sig = oid.signature;
  Step1Targets out;
  const int jw = oid.border_index(segment_head(sig, sig.w));
  BORDERCERT_CHECK(jw != 0, "b_{j_w} is not a border monomial");
  SpanElement<CoeffPoly> init;
  for (int q = 1; q <= oid.gamma; ++q)
    add_to(init, oid.tar_double_prime[q - 1], CoeffPoly::indeterminate(reg, reg->theta_id(q)));
  if (!init.empty()) out.targets[jw] = std::move(init);
  propagate(oid, sig.w, out.targets);
  return out;
}

Monomial step2_factor(const OrderIdealData& oid, const Monomial& b) {
  const auto& sig = oid.signature;
  const int n = sig.n;
  auto rest = try_div(b, power(n, sig.delta, sig.r - sig.w));
  BORDERCERT_CHECK(rest.has_value(), "S_D monomial without x_delta^(r-w): " + b.to_string());
  // Lex-minimal divisor of the requested degree: take from x_n first.
  int need = b.degree() - sig.r;
  std::vector<int> ex(n, 0);
  for (int v = n; v > sig.delta && need > 0; --v) {
    int take = std::min(need, rest->var_degree(v));
    ex[v - 1] = take;
    need -= take;
  }
  BORDERCERT_CHECK(need == 0, "no back-variable factor for " + b.to_string());
  return Monomial(n, ex);
}

Step2Targets step2(const OrderIdealData& oid, const Step1Targets& tm) {
  const auto& sig = oid.signature;
  Step2Targets out{tm.targets};
  for (const auto& b : oid.s_d) {
    const Monomial mp = step2_factor(oid, b);
    const Monomial bp = *try_div(b, mp);
    BORDERCERT_CHECK(bp.var_degree(sig.delta) == sig.r - sig.w && bp.degree() == sig.r,
                     "Step 2 cofactor outside Seg(n, delta, r, (w))");
    const int jp = oid.border_index(bp);
    BORDERCERT_CHECK(jp != 0, "Step 2 cofactor is not a border monomial");
    auto it = tm.targets.find(jp);
    if (it == tm.targets.end()) continue;
    SpanElement<CoeffPoly> target;
    for (const auto& [t, c] : it->second) {
      Monomial m = mul(t, mp);
      if (m.degree() > sig.s) continue;
      BORDERCERT_CHECK(oid.in_basis(m), "Step 2 term is not a basis monomial: " + m.to_string());
      add_to(target, m, c);
    }
    if (!target.empty()) out.targets[oid.border_index(b)] = std::move(target);
  }
  return out;
}

BorderSystem<CoeffPoly> install_targets(BorderSystem<CoeffPoly> sys, const TargetMap& tm) {
  const auto& oid = *sys.oid;
  for (const auto& [j, f] : tm)
    for (const auto& [t, c] : f) {
      const int i = oid.basis_index(t);
      BORDERCERT_CHECK(i != 0, "target term outside the basis");
      sys.set(i, j, sys.coeff(i, j) - c);
    }
  return sys;
}

TargetMap step3(const OrderIdealData& oid, const Step2Targets& tm,
                const BorderSystem<CoeffPoly>& sys_so_far) {
  const auto& sig = oid.signature;
  TargetMap out = tm.targets;
  const Monomial xd = Monomial::variable(sig.n, sig.delta);
  for (int e = sig.w; e >= 1; --e) {
    const int jcur = oid.border_index(segment_head(sig, e));
    const int jnext = oid.border_index(segment_head(sig, e - 1));
    BORDERCERT_CHECK(jcur != 0 && jnext != 0, "segment heads are not border monomials");
    SpanElement<CoeffPoly> shifted;
    if (auto it = out.find(jcur); it != out.end())
      for (const auto& [t, c] : it->second) add_to(shifted, mul(t, xd), c);
    const SpanElement<CoeffPoly> red = reduce_sweep(shifted, sys_so_far);
    SpanElement<CoeffPoly> target;
    for (const auto& [t, c] : red) {
      auto q = div_var(t, sig.delta + 1);
      BORDERCERT_CHECK(q.has_value(), "Step 3 division by x_(delta+1) is inexact at " +
                                          t.to_string());
      BORDERCERT_CHECK(oid.in_basis(*q), "Step 3 quotient outside the basis");
      add_to(target, *q, c);
    }
    if (!target.empty()) out[jnext] = std::move(target);
    propagate(oid, e - 1, out);
  }
  return out;
}

GenericModification build_generic_modification(std::shared_ptr<const OrderIdealData> oid) {
  GenericModification g;
  g.oid = oid;
  g.registry = std::make_shared<IndeterminateRegistry>(*oid);
  auto base = generic_distinguished(oid, g.registry);
  const Step2Targets s2 = step2(*oid, step1(*oid, g.registry));
  const auto so_far = install_targets(base, s2.targets);
  g.targets = step3(*oid, s2, so_far);
  for (const auto& [j, f] : g.targets) {
    BORDERCERT_CHECK(oid->in_s_l(j) || oid->in_s_d(j), "target outside S_L and S_D");
    for (const auto& [t, c] : f)
      BORDERCERT_CHECK(sgn(c.constant_term()) == 0, "target coefficient with a constant term");
  }
  g.system = install_targets(std::move(base), g.targets);
  return g;
}

std::string dump_targets(const OrderIdealData& oid, const TargetMap& tm) {
  std::ostringstream os;
  for (int j = 1; j <= oid.nu; ++j) {
    if (!oid.in_s_l(j) && !oid.in_s_d(j)) continue;
    auto it = tm.find(j);
    os << "Upsilon(b[" << j << "]) = "
       << (it == tm.end() ? std::string("0") : render_span(it->second)) << '\n';
  }
  return os.str();
}

}  // namespace bordercert
