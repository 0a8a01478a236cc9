#include <gtest/gtest.h>

#include <random>

#include "bordercert/coeffring.hpp"
#include "bordercert/errors.hpp"
#include "bordercert/orderideal.hpp"

using namespace bordercert;

namespace {

constexpr int kVars = 4;

// mpq_class(num, den) does not canonicalize.
Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct PolyGen {
  RegistryPtr reg = IndeterminateRegistry::thetas_only(kVars);
  std::mt19937_64 rng{12345};

  CoeffPoly var(int q) { return CoeffPoly::indeterminate(reg, reg->theta_id(q)); }

  CoeffPoly poly() {
    CoeffPoly p;
    const int terms = static_cast<int>(rng() % 5);
    for (int k = 0; k < terms; ++k) {
      CoeffPoly t(q(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)));
      const int deg = static_cast<int>(rng() % 3);
      for (int d = 0; d < deg; ++d) t *= var(1 + static_cast<int>(rng() % kVars));
      p += t;
    }
    return p;
  }

  Assignment point() {
    Assignment a(reg->size());
    for (int id = 0; id < reg->size(); ++id)
      a.set(id, q(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 4)));
    return a;
  }
};

}  // namespace

TEST(CoeffRing, RationalStrings) {
  EXPECT_EQ(to_string(q(3, 6)), "1/2");
  EXPECT_EQ(to_string(q(-4, 2)), "-2");
  EXPECT_EQ(to_string(q(5, -3)), "-5/3");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(CoeffRing, RingAxiomsOnRandomPolynomials) {
  PolyGen g;
  for (int k = 0; k < 100; ++k) {
    auto a = g.poly(), b = g.poly(), c = g.poly();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, CoeffPoly());
    EXPECT_EQ(a * CoeffPoly(1), a);
    EXPECT_TRUE((a * CoeffPoly(0)).is_zero());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(CoeffRing, SpecializationIsAHomomorphism) {
  PolyGen g;
  for (int k = 0; k < 100; ++k) {
    auto a = g.poly(), b = g.poly();
    auto pt = g.point();
    EXPECT_EQ(specialize(a + b, pt), specialize(a, pt) + specialize(b, pt));
    EXPECT_EQ(specialize(a * b, pt), specialize(a, pt) * specialize(b, pt));
  }
}

TEST(CoeffRing, DerivativeObeysLeibnizAndMatchesDualNumbers) {
  PolyGen g;
  for (int k = 0; k < 100; ++k) {
    auto a = g.poly(), b = g.poly();
    const int id = g.reg->theta_id(1 + k % kVars);
    EXPECT_EQ((a * b).derivative(id), a.derivative(id) * b + a * b.derivative(id));
    auto pt = g.point();
    auto d = (a * b).evaluate<DualRational>(
        [&](int v) { return DualRational(pt.get(v), Rational(v == id ? 1 : 0)); },
        [](const Rational& c) { return DualRational(c); });
    EXPECT_EQ(d.value, specialize(a * b, pt));
    EXPECT_EQ(d.slope, specialize((a * b).derivative(id), pt));
  }
}

TEST(CoeffRing, Rendering) {
  PolyGen g;
  auto t1 = g.var(1), t2 = g.var(2);
  EXPECT_EQ((t2 - t1 * t1).to_string(), "theta[2] - theta[1]^2");
  EXPECT_EQ((CoeffPoly(2) * t1 * g.var(4)).to_string(), "2*theta[1]*theta[4]");
  EXPECT_EQ(CoeffPoly().to_string(), "0");
  EXPECT_EQ((t1 * t1 + t2).total_degree(), 2);
  EXPECT_EQ((t1 + CoeffPoly(q(3, 2))).constant_term(), q(3, 2));
}

TEST(CoeffRing, RegistryMismatchThrows) {
  auto r1 = IndeterminateRegistry::thetas_only(2);
  auto r2 = IndeterminateRegistry::thetas_only(2);
  auto a = CoeffPoly::indeterminate(r1, 0), b = CoeffPoly::indeterminate(r2, 0);
  EXPECT_THROW(a + b, ArgumentError);
  EXPECT_NO_THROW(a + CoeffPoly(3));
}

TEST(CoeffRing, RegistryOfSignature) {
  auto oid = build_order_ideal(parse_signature("3,4,6,2,1"));
  IndeterminateRegistry reg(oid);
  EXPECT_EQ(reg.num_distinguished(), oid.ell * oid.tau);
  EXPECT_EQ(reg.num_modification(), oid.gamma);
  for (int id = 0; id < reg.size(); ++id) EXPECT_EQ(reg.find(reg.name(id)), id);
  const auto [i, j] = reg.decode(0);
  EXPECT_TRUE(oid.is_trailing(i));
  EXPECT_TRUE(oid.is_leading(j));
  EXPECT_EQ(reg.c_id(1, 1), -1);
  EXPECT_EQ(reg.name(reg.theta_id(1)), "theta[1]");
}

TEST(CoeffRing, MissingAssignmentThrows) {
  Assignment a(3);
  a.set(0, 1);
  EXPECT_TRUE(a.has(0));
  EXPECT_FALSE(a.has(1));
  EXPECT_ANY_THROW(a.get(1));
}

TEST(PrimeField, ArithmeticAgreesWithRationals) {
  const std::uint64_t p = Fp::kDefaultPrime;
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Rational a = q(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 97));
    const Rational b = q(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 97));
    auto fa = Fp::from_rational(a, p), fb = Fp::from_rational(b, p);
    EXPECT_EQ(fa + fb, Fp::from_rational(a + b, p));
    EXPECT_EQ(fa - fb, Fp::from_rational(a - b, p));
    EXPECT_EQ(fa * fb, Fp::from_rational(a * b, p));
    if (sgn(a) != 0) EXPECT_EQ((fa * fa.inverse()).value(), 1u);
  }
  EXPECT_EQ(Fp(-1, p).value(), p - 1);
  EXPECT_EQ((Fp(1) + Fp(5, p)).value(), 6u);
}

TEST(PrimeField, PrimeChecks) {
  EXPECT_TRUE(is_prime_u64(Fp::kDefaultPrime));
  EXPECT_TRUE(is_prime_u64(2147483659ULL));
  EXPECT_FALSE(is_prime_u64(2147483659ULL * 3));
  EXPECT_NO_THROW(validate_prime(2147483659ULL));
  EXPECT_THROW(validate_prime(65537), ArgumentError);
  EXPECT_THROW(validate_prime(Fp::kDefaultPrime - 2), ArgumentError);
  EXPECT_THROW(Fp(1, 2147483659ULL) + Fp(1, Fp::kDefaultPrime), ArgumentError);
  EXPECT_THROW(Fp::from_rational(q(1, 2147483659L), 2147483659ULL), ArgumentError);
}
