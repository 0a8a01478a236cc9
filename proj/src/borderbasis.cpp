#include "bordercert/borderbasis.hpp"

namespace bordercert {

BorderSystem<CoeffPoly> generic_distinguished(std::shared_ptr<const OrderIdealData> oid,
                                              RegistryPtr reg) {
  BorderSystem<CoeffPoly> sys(oid);
  for (int j = 1; j <= oid->nu; ++j) {
    if (!oid->is_leading(j)) continue;
    for (int i = 1; i <= oid->mu; ++i) {
      if (!oid->is_trailing(i)) continue;
      sys.set(i, j, CoeffPoly::indeterminate(reg, reg->c_id(i, j)));
    }
  }
  return sys;
}

BorderSystem<Rational> specialize_system(const BorderSystem<CoeffPoly>& sys, const Assignment& a) {
  BorderSystem<Rational> out(sys.oid);
  for (int j = 1; j <= sys.oid->nu; ++j)
    for (const auto& [i, y] : sys.tail(j)) out.set(i, j, specialize(y, a));
  return out;
}

BorderSystem<Fp> specialize_system_mod(const BorderSystem<CoeffPoly>& sys, const Assignment& a,
                                       std::uint64_t prime) {
  validate_prime(prime);
  BorderSystem<Fp> out(sys.oid);
  for (int j = 1; j <= sys.oid->nu; ++j)
    for (const auto& [i, y] : sys.tail(j)) out.set(i, j, Fp::from_rational(specialize(y, a), prime));
  return out;
}

}  // namespace bordercert
