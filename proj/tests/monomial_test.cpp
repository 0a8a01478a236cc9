#include <gtest/gtest.h>

#include <algorithm>

#include "bordercert/errors.hpp"
#include "bordercert/monomial.hpp"

using namespace bordercert;

namespace {

std::vector<std::string> names(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (auto& m : ms) out.push_back(m.to_string());
  return out;
}

// Every degree-d monomial in x_k..x_n by brute force over exponent boxes.
std::vector<Monomial> brute_monomials(int n, int k, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v > n) {
      if (left == 0) out.emplace_back(n, e);
      return;
    }
    for (int x = 0; x <= (v >= k ? left : 0); ++x) {
      e[v - 1] = x;
      rec(v + 1, left - x);
    }
    e[v - 1] = 0;
  };
  rec(1, d);
  return out;
}

}  // namespace

TEST(Monomial, LexOrder) {
  EXPECT_TRUE(cmp_lex(Monomial{1, 0}, Monomial{0, 1}) > 0);
  EXPECT_TRUE(cmp_lex(Monomial{0, 1, 1, 0}, Monomial{0, 1, 0, 1}) > 0);
  Monomial m{2, 0, 3};
  EXPECT_TRUE(cmp_lex(m, m) == 0);
}

TEST(Monomial, NegDegLex) {
  EXPECT_TRUE(cmp_negdeglex(Monomial{0, 0}, Monomial{1, 0}) < 0);
  EXPECT_TRUE(cmp_negdeglex(Monomial{0, 2, 0, 0}, Monomial{0, 1, 1, 0}) < 0);
  EXPECT_TRUE(cmp_negdeglex(Monomial{0, 1, 0, 1}, Monomial{0, 0, 2, 0}) < 0);
}

TEST(Monomial, MismatchedAmbient) {
  EXPECT_THROW(cmp_lex(Monomial{1, 0}, Monomial{1, 0, 0}), DimensionError);
  EXPECT_THROW(mul(Monomial{1, 0}, Monomial{1, 0, 0}), DimensionError);
}

TEST(Monomial, MonomialsOf) {
  EXPECT_EQ(names(monomials_of(4, 2, 2)),
            (std::vector<std::string>{"x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4", "x4^2"}));
  EXPECT_EQ(names(monomials_of(3, 3, 0)), (std::vector<std::string>{"1"}));
  EXPECT_EQ(names(monomials_of(5, 4, 3)),
            (std::vector<std::string>{"x4^3", "x4^2*x5", "x4*x5^2", "x5^3"}));
  EXPECT_THROW(monomials_of(3, 0, 1), ArgumentError);
  EXPECT_THROW(monomials_of(3, 1, -1), ArgumentError);
}

TEST(Monomial, MonomialsOfMatchesBruteForce) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k)
      for (int d = 0; d <= 5; ++d) {
        auto got = monomials_of(n, k, d);
        auto want = brute_monomials(n, k, d);
        std::sort(want.begin(), want.end(), NegDegLexLess{});
        ASSERT_EQ(got, want) << n << " " << k << " " << d;
        EXPECT_EQ(static_cast<long long>(got.size()), binomial(d + n - k, d));
      }
}

TEST(Monomial, Segments) {
  EXPECT_EQ(names(segment({4, 2, 2, {1}})), (std::vector<std::string>{"x2*x3", "x2*x4"}));
  EXPECT_EQ(names(segment({3, 2, 4, {1}})), (std::vector<std::string>{"x2^3*x3"}));
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(segment({5, 2, d, {d}}), monomials_of(5, 3, d));
  EXPECT_THROW(segment({4, 2, 2, {3}}), ArgumentError);
  EXPECT_THROW(segment({4, 2, 2, {1, 2}}), ArgumentError);
  EXPECT_THROW(segment({4, 3, 2, {1, 1}}), ArgumentError);
}

// Seg equals the brute-force lex interval and is contiguous in the listing.
TEST(Monomial, SegmentsMatchLexIntervalFilter) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (int d = 0; d <= 6; ++d) {
        const auto all = monomials_of(n, k, d);
        std::vector<std::vector<int>> prefixes;
        for (int e0 = 0; e0 <= d; ++e0) {
          prefixes.push_back({e0});
          if (k + 2 <= n)
            for (int e1 = 0; e1 <= e0; ++e1) prefixes.push_back({e0, e1});
        }
        for (const auto& pre : prefixes) {
          SegmentSpec spec{n, k, d, pre};
          const int q = static_cast<int>(pre.size()) - 1;
          std::vector<int> p(n, 0);
          p[k - 1] = d - pre[0];
          for (int i = 1; i <= q; ++i) p[k - 1 + i] = pre[i - 1] - pre[i];
          std::vector<int> hi = p, lo = p;
          hi[k + q] += pre[q];
          lo[n - 1] += pre[q];
          const Monomial upper(n, hi), lower(n, lo);
          std::vector<Monomial> want;
          for (auto& m : all)
            if (cmp_lex(upper, m) >= 0 && cmp_lex(m, lower) >= 0) want.push_back(m);
          auto got = segment(spec);
          ASSERT_EQ(got, want);
          if (got.empty()) continue;
          EXPECT_EQ(got.front(), upper);
          EXPECT_EQ(got.back(), lower);
          auto start = std::find(all.begin(), all.end(), got.front());
          ASSERT_NE(start, all.end());
          EXPECT_TRUE(std::equal(got.begin(), got.end(), start));
        }
      }
}

TEST(Monomial, DegreeIsUnionOfSegments) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (int d = 0; d <= 5; ++d) {
        std::vector<Monomial> cat;
        for (int e = 0; e <= d; ++e)
          for (auto& m : segment({n, k, d, {e}})) cat.push_back(m);
        EXPECT_EQ(cat, monomials_of(n, k, d));
      }
}

TEST(Monomial, NegDegLexIsStrictTotal) {
  std::vector<Monomial> ms;
  for (int d = 0; d <= 3; ++d)
    for (auto& m : monomials_of(3, 1, d)) ms.push_back(m);
  for (auto& a : ms)
    for (auto& b : ms) {
      auto ab = cmp_negdeglex(a, b), ba = cmp_negdeglex(b, a);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab < 0, ba > 0);
      if (a.degree() == b.degree()) EXPECT_EQ(ab < 0, cmp_lex(a, b) > 0);
      for (auto& c : ms)
        if (ab < 0 && cmp_negdeglex(b, c) < 0) EXPECT_TRUE(cmp_negdeglex(a, c) < 0);
    }
}

TEST(Monomial, Arithmetic) {
  Monomial x2{0, 1, 0, 0}, x2x3{0, 1, 1, 0}, x4{0, 0, 0, 1};
  EXPECT_EQ(mul(x2, x2x3).to_string(), "x2^2*x3");
  EXPECT_FALSE(try_div(x2x3, x4).has_value());
  EXPECT_EQ(try_div(x2x3, x2)->to_string(), "x3");
  EXPECT_EQ(var_degree(Monomial{0, 2, 0, 1}, 2), 2);
  EXPECT_EQ(Monomial(3).to_string(), "1");
  EXPECT_TRUE(divides(x2, x2x3));
  EXPECT_FALSE(divides(x4, x2x3));
}

TEST(Monomial, BinomialConvention) {
  EXPECT_EQ(binomial(-1, 0), 1);
  EXPECT_EQ(binomial(0, 1), 0);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(10, 0), 1);
}
