#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "sconvex/kernel_identity.hpp"
#include "sconvex/ostrowski_bounds.hpp"
#include "sconvex/toolkit.hpp"
#include "support.hpp"

using namespace sconvex;

namespace {

const Interval kUnit = make_sconvex_interval(0.0, 1.0);
constexpr double kInvSqrt3 = 0.57735026918962573;

EndpointData ones() { return EndpointData(1.0, 1.0, 1.0); }

// Every x-dependent bound at fixed (iv, s, p, ep), by name.
std::vector<std::pair<std::string, std::function<double(double)>>> all_bounds(
    const Interval& iv, SParam s, const ConjugatePair& cp, const EndpointData& ep) {
  return {
      {"sconvex_abs", [=](double x) { return bound_sconvex_abs(iv, x, s, ep).value; }},
      {"holder_split", [=](double x) { return bound_holder_split(iv, x, s, cp, ep).value; }},
      {"holder_hadamard",
       [=](double x) { return bound_holder_hadamard(iv, x, s, cp, ep).value; }},
      {"holder_global", [=](double x) { return bound_holder_global(iv, x, s, cp, ep).value; }},
      {"power_mean", [=](double x) { return bound_power_mean(iv, x, s, cp.q(), ep).value; }},
  };
}

}  // namespace

TEST(SConvexAbs, Values) {
  EXPECT_DOUBLE_EQ(bound_sconvex_abs(kUnit, 0.5, SParam(1), ones()).value, 0.25);
  // mpmath: (2*2*0.027 - 3*0.09 + 1) * 2 / 6
  EXPECT_NEAR(bound_sconvex_abs(kUnit, 0.3, SParam(1), EndpointData(0, 2)).value,
              0.27933333333333333, 1e-15);
  EXPECT_NEAR(bound_sconvex_abs(kUnit, 0.5, SParam(0.5), ones()).value, 0.3447715250169207,
              1e-15);
}

TEST(SConvexAbs, DominatesSquareAtPointThree) {
  const double dev = true_deviation(make_polynomial({0, 0, 1}), kUnit, 0.3, 1e-13);
  EXPECT_NEAR(dev, 0.24333333333333333, 1e-12);
  EXPECT_LE(dev, bound_sconvex_abs(kUnit, 0.3, SParam(1), EndpointData(0, 2)).value);
}

TEST(SConvexAbs, MidpointForm) {
  EXPECT_DOUBLE_EQ(midpoint_sconvex_abs(kUnit, SParam(1), ones()).value, 0.25);
  EXPECT_NEAR(midpoint_sconvex_abs(kUnit, SParam(0.5), ones()).value, 0.3447715250169207,
              1e-15);
  EXPECT_EQ(midpoint_sconvex_abs(kUnit, SParam(0.7), EndpointData(0, 0)).value, 0.0);
}

TEST(SConvexAbs, MidpointFormMatchesGeneralAtMidpoint) {
  prop::Gen gen;
  for (int i = 0; i < 300; ++i) {
    const auto [a, b] = gen.interval(0.0, 4.0);
    const auto iv = make_sconvex_interval(a, b);
    const SParam s(gen.uniform(0.01, 1.0));
    const EndpointData ep(gen.uniform(0, 3), gen.uniform(0, 3));
    EXPECT_LE(prop::rel_diff(midpoint_sconvex_abs(iv, s, ep).value,
                                bound_sconvex_abs(iv, iv.midpoint(), s, ep).value),
              1e-12);
  }
}

TEST(SConvexAbs, StatementAndProofBracketsAgree) {
  for (int k = 1; k <= 10; ++k) {
    const double s = k / 10.0;
    for (double r : prop::linspace(0.0, 1.0, 1001)) {
      const double proof =
          s * std::pow(r, s + 2) - (s + 2) * (1 - r) * std::pow(r, s + 1) + 1;
      EXPECT_NEAR(sconvex_abs_bracket(r, SParam(s)), proof, 1e-12) << r << ' ' << s;
    }
  }
}

TEST(HolderSplit, Values) {
  const auto cp = make_conjugate(2.0);
  EXPECT_NEAR(bound_holder_split(kUnit, 0.5, SParam(1), cp, ones()).value, 0.5 * kInvSqrt3,
              1e-15);
  EXPECT_NEAR(bound_holder_split(kUnit, 1.0, SParam(1), cp, ones()).value, kInvSqrt3, 1e-15);
  EXPECT_NEAR(bound_holder_split(kUnit, 0.0, SParam(1), cp, ones()).value, kInvSqrt3, 1e-15);
}

TEST(HolderHadamard, Values) {
  const auto cp = make_conjugate(2.0);
  EXPECT_NEAR(bound_holder_hadamard(kUnit, 0.5, SParam(1), cp, ones()).value,
              0.5 * kInvSqrt3, 1e-15);
  EXPECT_NEAR(bound_holder_hadamard(kUnit, 1.0, SParam(1), cp, EndpointData(1, 2, 2)).value,
              0.9128709291752769, 1e-15);
  EXPECT_THROW(bound_holder_hadamard(kUnit, 0.5, SParam(1), cp, EndpointData(1, 1)),
               DomainError);
}

TEST(MidpointE5, Values) {
  EXPECT_NEAR(midpoint_e5(kUnit, make_conjugate(2.0), ones()).value, 0.5 * kInvSqrt3, 1e-15);
  EXPECT_NEAR(midpoint_e5(kUnit, make_conjugate(3.0), ones()).value, 0.3149802624737183,
              1e-15);
  EXPECT_EQ(midpoint_e5(kUnit, make_conjugate(3.0), EndpointData(0, 0)).value, 0.0);
}

TEST(HolderGlobal, Values) {
  const auto cp = make_conjugate(2.0);
  EXPECT_NEAR(bound_holder_global(kUnit, 0.5, SParam(1), cp, ones()).value, 0.5 * kInvSqrt3,
              1e-15);
  EXPECT_NEAR(bound_holder_global(kUnit, 0.0, SParam(1), cp, ones()).value, kInvSqrt3, 1e-15);
  // mpmath: sqrt(0.75^3 + 0.25^3) / sqrt(3)
  EXPECT_NEAR(bound_holder_global(kUnit, 0.25, SParam(1), cp, ones()).value,
              0.38188130791298663, 1e-15);
}

TEST(HolderGlobal, SquareBracketHasCoefficientThree) {
  // lambda^3 + mu^3 = 1/4 + 3 (x - m)^2 / (b - a)^2. The variant with
  // coefficient 1 agrees only at the midpoint.
  const auto cp = make_conjugate(2.0);
  prop::Gen gen;
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = gen.interval(0.0, 3.0);
    const auto iv = make_sconvex_interval(a, b);
    const double x = gen.uniform(a, b);
    const double m = iv.midpoint();
    const double len = iv.length();
    const double three = len / std::sqrt(3.0) *
                         std::sqrt(0.25 + 3 * (x - m) * (x - m) / (len * len));
    EXPECT_LE(prop::rel_diff(bound_holder_global(iv, x, SParam(1), cp, ones()).value,
                                three),
              1e-12);
  }
  const double one = 1 / std::sqrt(3.0) * std::sqrt(0.25 + 0.0625);
  EXPECT_NEAR(one, 0.32274861218395140, 1e-15);
  EXPECT_GT(bound_holder_global(kUnit, 0.25, SParam(1), cp, ones()).value, one + 0.05);
}

TEST(PowerMean, Values) {
  // mpmath: (1/2)^(1/2) * 2 * (1/2)^(1/2) * sqrt(1/24 + 1/12) at s = 1, q = 2
  EXPECT_NEAR(bound_power_mean(kUnit, 0.5, SParam(1), 2.0, ones()).value, 0.25, 1e-15);
  EXPECT_NEAR(bound_power_mean(kUnit, 0.5, SParam(1), 1.0, ones()).value, 0.25, 1e-15);
  EXPECT_EQ(bound_power_mean(kUnit, 0.3, SParam(0.5), 3.0, EndpointData(0, 0)).value, 0.0);
  EXPECT_THROW(bound_power_mean(kUnit, 0.5, SParam(1), 0.5, ones()), DomainError);
}

TEST(PowerMean, AtQOneEqualsSConvexAbs) {
  prop::Gen gen;
  for (int i = 0; i < 300; ++i) {
    const auto [a, b] = gen.interval(0.0, 4.0);
    const auto iv = make_sconvex_interval(a, b);
    const double x = gen.uniform(a, b);
    const SParam s(gen.uniform(0.01, 1.0));
    const EndpointData ep(gen.uniform(0, 3), gen.uniform(0, 3));
    EXPECT_LE(prop::rel_diff(bound_power_mean(iv, x, s, 1.0, ep).value,
                                bound_sconvex_abs(iv, x, s, ep).value),
              1e-12);
  }
}

TEST(PowerMean, MidpointReducesToCoefficientTwo) {
  prop::Gen gen;
  for (int i = 0; i < 300; ++i) {
    const auto [a, b] = gen.interval(0.0, 4.0);
    const auto iv = make_sconvex_interval(a, b);
    const double q = 1.0 + gen.uniform(0.0, 5.0);
    const double da = gen.uniform(0, 3), db = gen.uniform(0, 3);
    const double dq = std::pow(da, q), eq = std::pow(db, q);
    const double two = iv.length() / 8 * std::pow(1.0 / 3.0, 1 / q) *
                       (std::pow(dq + 2 * eq, 1 / q) + std::pow(2 * dq + eq, 1 / q));
    EXPECT_LE(prop::rel_diff(
                  bound_power_mean(iv, iv.midpoint(), SParam(1), q, EndpointData(da, db)).value,
                  two),
              1e-12);
  }
}

TEST(MidpointPowerMean, PublishedFormValues) {
  EXPECT_NEAR(midpoint_power_mean(kUnit, 2.0, ones()).value, 0.5 * kInvSqrt3, 1e-15);
  EXPECT_NEAR(midpoint_power_mean(kUnit, 1.0, ones()).value, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(midpoint_power_mean(kUnit, 2.0, EndpointData(0, 0)).value, 0.0);
  // The published midpoint form sits strictly above the general bound at
  // the midpoint whenever a derivative magnitude is nonzero.
  EXPECT_GT(midpoint_power_mean(kUnit, 2.0, ones()).value,
            bound_power_mean(kUnit, 0.5, SParam(1), 2.0, ones()).value + 0.03);
}

TEST(Reductions, MidpointAtSOne) {
  prop::Gen gen;
  for (int i = 0; i < 300; ++i) {
    const auto [a, b] = gen.interval(0.0, 4.0);
    const auto iv = make_sconvex_interval(a, b);
    const double da = gen.uniform(0, 3), db = gen.uniform(0, 3);
    const EndpointData ep(da, db);
    const auto cp = make_conjugate(1.0 + gen.uniform(0.01, 9.0));
    EXPECT_LE(prop::rel_diff(
                  bound_sconvex_abs(iv, iv.midpoint(), SParam(1), ep).value,
                  baseline_midpoint_bound(MidpointBaseline::kEq14, iv, std::nullopt, da, db)
                      .value),
              1e-12);
    EXPECT_LE(prop::rel_diff(
                  bound_holder_split(iv, iv.midpoint(), SParam(1), cp, ep).value,
                  baseline_midpoint_bound(MidpointBaseline::kEq15, iv, cp, da, db).value),
              1e-12);
  }
}

TEST(Reductions, E5IsQuarterRootTighter) {
  prop::Gen gen;
  for (double p : {1.5, 2.0, 3.0, 10.0, 1.01, 57.0}) {
    for (int i = 0; i < 50; ++i) {
      const auto [a, b] = gen.interval(0.0, 4.0);
      const auto iv = make_sconvex_interval(a, b);
      const double da = gen.uniform(0, 3), db = gen.uniform(0, 3);
      const auto cp = make_conjugate(p);
      EXPECT_LE(prop::rel_diff(
                    midpoint_e5(iv, cp, EndpointData(da, db)).value,
                    std::pow(4.0, -1 / p) *
                        baseline_midpoint_bound(MidpointBaseline::kEq16, iv, cp, da, db).value),
                1e-12);
    }
  }
}

TEST(Reductions, HadamardFormCollapsesToAlomari) {
  prop::Gen gen;
  for (int i = 0; i < 300; ++i) {
    const auto [a, b] = gen.interval(0.0, 4.0);
    const auto iv = make_sconvex_interval(a, b);
    const double x = gen.uniform(a, b);
    const SParam s(gen.uniform(0.01, 1.0));
    const auto cp = make_conjugate(1.0 + gen.uniform(0.01, 9.0));
    const double m = gen.uniform(0, 3);
    EXPECT_LE(prop::rel_diff(bound_holder_hadamard(iv, x, s, cp, EndpointData(m, m, m)).value,
                                alomari_bound(iv, x, s, cp, m).value),
              1e-12);
  }
}

TEST(Symmetry, ReflectionSwapsEndpointData) {
  prop::Gen gen;
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = gen.interval(0.0, 4.0);
    const auto iv = make_sconvex_interval(a, b);
    const double x = gen.uniform(a, b);
    const SParam s(gen.uniform(0.01, 1.0));
    const auto cp = make_conjugate(1.0 + gen.uniform(0.01, 9.0));
    const double da = gen.uniform(0, 3), db = gen.uniform(0, 3), dx = gen.uniform(0, 3);
    const auto fwd = all_bounds(iv, s, cp, EndpointData(da, db, dx));
    const auto rev = all_bounds(iv, s, cp, EndpointData(db, da, dx));
    for (std::size_t k = 0; k < fwd.size(); ++k) {
      EXPECT_LE(prop::rel_diff(fwd[k].second(x), rev[k].second(a + b - x)), 1e-11)
          << fwd[k].first;
    }
  }
}

TEST(Continuity, NoJumpsAlongX) {
  // Values on a 1e-3 grid are finite and nonnegative, and each grid point's
  // value matches its one-sided neighbours at 1e-12 to within 1e-6.
  prop::Gen gen;
  for (int i = 0; i < 10; ++i) {
    const auto [a, b] = gen.interval(0.0, 2.0);
    const auto iv = make_sconvex_interval(a, b);
    const SParam s(gen.uniform(0.01, 1.0));
    const auto cp = make_conjugate(1.0 + gen.uniform(0.01, 5.0));
    const EndpointData ep(gen.uniform(0, 3), gen.uniform(0, 3), gen.uniform(0, 3));
    const double h = 1e-3;
    const auto steps = static_cast<std::size_t>(iv.length() / h);
    for (const auto& [name, bound] : all_bounds(iv, s, cp, ep)) {
      for (std::size_t k = 0; k <= steps; ++k) {
        const double x = std::min(b, a + h * static_cast<double>(k));
        const double v = bound(x);
        ASSERT_TRUE(std::isfinite(v)) << name << " x=" << x;
        ASSERT_GE(v, 0.0) << name;
        const double eps = 1e-12 * iv.length();
        if (x - eps >= a) EXPECT_LE(std::abs(bound(x - eps) - v), 1e-6) << name << " x=" << x;
        if (x + eps <= b) EXPECT_LE(std::abs(bound(x + eps) - v), 1e-6) << name << " x=" << x;
      }
    }
  }
}

TEST(Domination, ConvexDerivativeFamilies) {
  // |f'| is nonnegative and convex for these families, hence s-convex for
  // every s and so is |f'|^q for q >= 1.
  prop::Gen gen;
  const std::vector<double> ss{0.25, 0.5, 0.75, 1.0};
  const std::vector<double> ps{1.5, 2.0, 4.0};
  for (int trial = 0; trial < 30; ++trial) {
    const double sigma = gen.uniform(0.1, 1.0);
    const double v = gen.uniform(0.1, 3.0);
    const double u = gen.uniform(0, 2);
    const auto fn = trial % 3 == 2
                        ? make_polynomial({gen.uniform(-1, 1), gen.uniform(0, 1),
                                           gen.uniform(0, 2)})
                        : make_breckner(u, v, gen.uniform(0, u), SParam(sigma));
    const auto [a, b] = gen.interval(0.2, 3.0);
    const auto iv = make_sconvex_interval(a, b);
    const double s = gen.pick(ss);
    const double p = gen.pick(ps);
    const auto cp = make_conjugate(p);
    ASSERT_TRUE(check_sconvex(abs_derivative_power(fn, cp.q()), SParam(s), iv).is_consistent);
    ASSERT_TRUE(check_sconvex(abs_derivative_power(fn, 1.0), SParam(s), iv).is_consistent);
    for (double x : prop::linspace(a, b, 11)) {
      const double dev = true_deviation(fn, iv, x, 1e-13);
      const EndpointData ep(std::abs(fn.df(a)), std::abs(fn.df(b)), std::abs(fn.df(x)));
      for (const auto& [name, bound] : all_bounds(iv, SParam(s), cp, ep)) {
        EXPECT_LE(dev, bound(x) + 1e-9) << name << ' ' << fn.label << " x=" << x;
      }
    }
  }
}

TEST(Domain, Validation) {
  const auto cp = make_conjugate(2.0);
  EXPECT_THROW(bound_sconvex_abs(Interval(-1, 1), 0.0, SParam(1), ones()), DomainError);
  EXPECT_THROW(bound_holder_global(kUnit, 1.5, SParam(1), cp, ones()), DomainError);
  EXPECT_THROW(bound_holder_split(kUnit, -0.1, SParam(1), cp, ones()), DomainError);
}
