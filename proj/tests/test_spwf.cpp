#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bunching/spwf.hpp"

using namespace bunching;

TEST(Evaluate, SincRemovableSingularityIsOne) {
  const WaveFunction s = Sinc{1.0, 0.0};
  EXPECT_EQ(s(0.0).real(), 1.0);
  EXPECT_EQ(s(0.0).imag(), 0.0);
  // Just inside and outside the series branch the two forms agree.
  EXPECT_NEAR(s(0.9e-8 / std::numbers::pi).real(), 1.0, 1e-16);
  EXPECT_NEAR(s(1.1e-8 / std::numbers::pi).real(), 1.0, 1e-16);
}

TEST(Evaluate, SincVanishesAtNonzeroIntegers) {
  const WaveFunction s = Sinc{1.0, 0.0};
  for (int m : {-7, -3, -1, 1, 2, 5, 11}) EXPECT_NEAR(std::abs(s(m)), 0.0, 1e-15) << m;
}

TEST(Evaluate, MonomialLinear) {
  const WaveFunction m = MonomialZero{1.0, 0.0, 1};
  EXPECT_DOUBLE_EQ(m(0.25).real(), 0.25);
}

TEST(Evaluate, GaussianPeakAsPrinted) {
  const WaveFunction g = Gaussian{1.0, 0.0};
  EXPECT_NEAR(g(0.0).real(), 0.751125544464942482858703, 1e-15);
}

TEST(Evaluate, ConstantIsComplex) {
  const WaveFunction c = Constant{{0.0, 2.0}};
  EXPECT_EQ(c(123.0), Amplitude(0.0, 2.0));
  EXPECT_EQ(c.derivative(1.0), Amplitude{});
}

TEST(Construction, RejectsInvalidParameters) {
  EXPECT_THROW(WaveFunction(Gaussian{0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(WaveFunction(Sinc{-1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(WaveFunction(MonomialZero{1.0, 0.0, 0}), std::invalid_argument);
  EXPECT_THROW(WaveFunction(MonomialZero{0.0, 0.0, 1}), std::invalid_argument);
  EXPECT_THROW(WaveFunction(Constant{0.0}), std::invalid_argument);
  EXPECT_THROW(WaveFunction(Gaussian{1.0, NAN}), std::invalid_argument);
}

TEST(Evaluate, FiniteOnFiniteInput) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> x(-1e3, 1e3);
  const WaveFunction fams[] = {Gaussian{0.7, 1.0}, Sinc{0.3, -2.0}, MonomialZero{{1.0, -0.5}, 0.2, 3},
                               Constant{{0.3, 0.4}}};
  for (int i = 0; i < 2000; ++i) {
    const double xv = x(rng);
    for (const auto& f : fams) {
      const auto a = f(xv);
      ASSERT_TRUE(std::isfinite(a.real()) && std::isfinite(a.imag()));
      const auto d = f.derivative(xv);
      ASSERT_TRUE(std::isfinite(d.real()) && std::isfinite(d.imag()));
    }
  }
}

TEST(Derivative, MatchesCentralDifference) {
  const WaveFunction fams[] = {Gaussian{0.7, 1.0}, Sinc{0.3, -2.0}, MonomialZero{{1.0, -0.5}, 0.2, 3}};
  const double h = 1e-6;
  for (const auto& f : fams) {
    for (double x : {-2.3, -2.0, -1.999, 0.0, 0.2, 0.71, 1.5}) {
      const auto fd = (f(x + h) - f(x - h)) / (2.0 * h);
      EXPECT_NEAR(std::abs(f.derivative(x) - fd), 0.0, 1e-7 * std::max(1.0, std::abs(fd))) << x;
    }
  }
}

TEST(Properties, SincIsSymmetricAboutItsCenter) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-20.0, 20.0), c(-5.0, 5.0), xi(0.1, 3.0);
  for (int i = 0; i < 5000; ++i) {
    const double cc = c(rng), dd = d(rng);
    const WaveFunction s = Sinc{xi(rng), cc};
    ASSERT_NEAR(std::abs(s(cc + dd) - s(cc - dd)), 0.0, 1e-14);
  }
}

TEST(Properties, MonomialParity) {
  // Dyadic offsets make x - x0 exact, so parity holds bit for bit.
  for (int n = 1; n <= 9; ++n) {
    for (int k = -40; k <= 40; ++k) {
      const double z = 0.375, dd = k / 16.0;
      const WaveFunction m = MonomialZero{{0.6, -0.8}, z, n};
      const Amplitude sign = (n % 2) ? -1.0 : 1.0;
      ASSERT_EQ(m(z + dd), sign * m(z - dd)) << n << " " << dd;
    }
  }
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> d(0.5, 3.0), x0(-2.0, 2.0);
  std::uniform_int_distribution<int> order(1, 9);
  for (int i = 0; i < 5000; ++i) {
    const int n = order(rng);
    const double z = x0(rng), dd = d(rng);
    const WaveFunction m = MonomialZero{{0.6, -0.8}, z, n};
    const Amplitude plus = m(z + dd);
    const Amplitude minus = m(z - dd) * ((n % 2) ? -1.0 : 1.0);
    ASSERT_LE(std::abs(plus - minus), 1e-14 * std::abs(plus)) << n << " " << dd;
  }
}

// ---------------------------------------------------------------------------

TEST(FindZeros, SincLatticeOffset) {
  const auto zs = find_zeros(Sinc{1.0, 0.3}, {-3.0, 3.0}, 1e-12);
  const double expected[] = {-2.7, -1.7, -0.7, 1.3, 2.3};
  ASSERT_EQ(zs.size(), 5u);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    EXPECT_NEAR(zs[i].location, expected[i], 1e-14);
    EXPECT_EQ(zs[i].order, 1);
  }
}

TEST(FindZeros, GaussianAndConstantHaveNone) {
  EXPECT_TRUE(find_zeros(Gaussian{1.0, 0.0}, {-10.0, 10.0}, 1e-12).empty());
  EXPECT_TRUE(find_zeros(Constant{1.0}, {-10.0, 10.0}, 1e-12).empty());
  EXPECT_TRUE(find_zeros_bisection(Gaussian{1.0, 0.0}, {-10.0, 10.0}, 1e-12).empty());
  EXPECT_TRUE(find_zeros_bisection(Constant{{1.0, 1.0}}, {-10.0, 10.0}, 1e-12).empty());
}

TEST(FindZeros, MonomialZeroOrderTwo) {
  const auto zs = find_zeros(MonomialZero{1.0, 1.5, 2}, {0.0, 2.0}, 1e-12);
  ASSERT_EQ(zs.size(), 1u);
  EXPECT_EQ(zs[0].location, 1.5);
  EXPECT_EQ(zs[0].order, 2);
  EXPECT_TRUE(find_zeros(MonomialZero{1.0, 2.5, 2}, {0.0, 2.0}, 1e-12).empty());
}

TEST(FindZeros, RejectsBadQueries) {
  EXPECT_THROW(find_zeros(Sinc{1.0, 0.0}, {-1.0, 1.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(find_zeros(Sinc{1.0, 0.0}, {-1.0, 1.0}, -1e-3), std::invalid_argument);
  EXPECT_THROW(find_zeros(Sinc{1.0, 0.0}, {1.0, -1.0}, 1e-12), std::invalid_argument);
  EXPECT_THROW(find_zeros_bisection(Sinc{1.0, 0.0}, {-1.0, 1.0}, 0.0), std::invalid_argument);
}

TEST(FindZeros, ZerosAreCertified) {
  const Interval iv{-12.0, 9.0};
  const WaveFunction fams[] = {Sinc{1.0, 0.3}, Sinc{0.37, -1.1}, MonomialZero{{2.0, 1.0}, 0.4, 3}};
  for (const auto& f : fams) {
    double peak = 0.0;
    for (int i = 0; i <= 100000; ++i) peak = std::max(peak, std::abs(f(iv.lo + iv.width() * i / 100000.0)));
    for (const auto& z : find_zeros(f, iv, 1e-12)) EXPECT_LE(std::abs(f(z.location)), 1e-12 * peak) << z.location;
    for (const auto& z : find_zeros_bisection(f, iv, 1e-12 * iv.width()))
      EXPECT_LE(std::abs(f(z.location)), 1e-12 * peak) << z.location;
  }
}

TEST(FindZeros, BisectionAgreesWithAnalyticPath) {
  struct Case {
    WaveFunction wf;
    Interval iv;
  };
  const Case cases[] = {
      {Sinc{1.0, 0.3}, {-3.0, 3.0}},
      {Sinc{1.0, 2.25}, {-10.0, 10.0}},
      {Sinc{0.37, -1.1}, {-6.0, 4.0}},
      {Sinc{2.0, 0.0}, {-9.0, 9.0}},
      {MonomialZero{1.0, 1.5, 1}, {0.0, 2.0}},
      {MonomialZero{1.0, 1.5, 2}, {0.0, 2.0}},
      {MonomialZero{{0.0, 1.0}, -0.3, 3}, {-1.0, 2.0}},
      {MonomialZero{{1.0, 1.0}, 0.123, 4}, {-1.0, 1.0}},
      {MonomialZero{-2.0, 0.777, 7}, {0.0, 3.0}},
  };
  for (const auto& c : cases) {
    const double tol = 1e-12 * c.iv.width();
    const auto analytic = find_zeros(c.wf, c.iv, tol);
    const auto numeric = find_zeros_bisection(c.wf, c.iv, tol);
    ASSERT_EQ(analytic.size(), numeric.size());
    for (std::size_t i = 0; i < analytic.size(); ++i) {
      EXPECT_NEAR(numeric[i].location, analytic[i].location, tol);
      EXPECT_EQ(numeric[i].order, analytic[i].order);
    }
  }
}

TEST(FindZeros, OrderClassificationBySlope) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(classify_zero_order(MonomialZero{1.0, 0.0, n}, 0.0, 1.0), n);
  EXPECT_EQ(classify_zero_order(Sinc{1.0, 0.0}, 3.0, 1.0), 1);
}

TEST(FindZeros, OwnerIndexIsCarried) {
  const auto zs = find_zeros(Sinc{1.0, 0.0}, {-2.0, 2.0}, 1e-12, 2);
  ASSERT_FALSE(zs.empty());
  for (const auto& z : zs) EXPECT_EQ(z.wf_index, 2);
}

TEST(FarField, SourceWidth) {
  EXPECT_DOUBLE_EQ(far_field_source_width(1000.0, 100.0, 1.0), 10.0);
  EXPECT_DOUBLE_EQ(far_field_source_width(2.0 * std::numbers::pi, 2.0 * std::numbers::pi, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(far_field_source_width(1.0, 1.0, 2.0), 0.5);
  EXPECT_THROW(far_field_source_width(0.0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(far_field_source_width(1.0, -1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(far_field_source_width(1.0, 1.0, 0.0), std::invalid_argument);
}
