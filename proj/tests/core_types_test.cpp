#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "sconvex/core_types.hpp"
#include "support.hpp"

using namespace sconvex;

TEST(Interval, RejectsReversedOrDegenerate) {
  EXPECT_THROW(Interval(1.0, 0.0), DomainError);
  EXPECT_THROW(Interval(2.0, 2.0), DomainError);
  EXPECT_THROW(Interval(0.0, std::numeric_limits<double>::infinity()), DomainError);
  try {
    Interval(1.0, 0.0);
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "interval requires a < b");
  }
}

TEST(Interval, Accessors) {
  const Interval iv(1.0, 3.0);
  EXPECT_EQ(iv.length(), 2.0);
  EXPECT_EQ(iv.midpoint(), 2.0);
  EXPECT_TRUE(iv.contains(1.0));
  EXPECT_TRUE(iv.contains(3.0));
  EXPECT_FALSE(iv.contains(3.5));
}

TEST(Interval, SConvexDomainNeedsNonnegativeLeftEnd) {
  EXPECT_NO_THROW(make_sconvex_interval(0.0, 1.0));
  EXPECT_THROW(make_sconvex_interval(-0.5, 1.0), DomainError);
}

TEST(SParam, Range) {
  EXPECT_NO_THROW(SParam(1.0));
  EXPECT_NO_THROW(SParam(1e-9));
  EXPECT_THROW(SParam(0.0), DomainError);
  EXPECT_THROW(SParam(1.0000001), DomainError);
  EXPECT_THROW(SParam(std::nan("")), DomainError);
}

TEST(Conjugate, KnownPairs) {
  EXPECT_EQ(make_conjugate(2.0).q(), 2.0);
  EXPECT_DOUBLE_EQ(make_conjugate(3.0).q(), 1.5);
  // mpmath: 1.01/0.01 = 101
  EXPECT_NEAR(make_conjugate(1.01).q(), 101.0, 1e-10);
}

TEST(Conjugate, RejectsPAtMostOne) {
  EXPECT_THROW(make_conjugate(1.0), DomainError);
  EXPECT_THROW(make_conjugate(0.5), DomainError);
  EXPECT_THROW(make_conjugate(-3.0), DomainError);
}

TEST(Conjugate, InvolutionProperty) {
  prop::Gen gen;
  for (int i = 0; i < 500; ++i) {
    const double p = 1.0 + std::exp(gen.uniform(-6.0, 6.0));
    const auto cp = make_conjugate(p);
    EXPECT_LE(std::abs(1.0 / cp.p() + 1.0 / cp.q() - 1.0), 1e-12) << p;
    const auto back = make_conjugate(cp.q());
    EXPECT_LE(prop::rel_diff(back.q(), p), 1e-12) << p;
  }
}

TEST(EndpointData, RejectsNegativeOrNonFinite) {
  EXPECT_NO_THROW(EndpointData(0.0, 0.0));
  EXPECT_THROW(EndpointData(-1.0, 0.0), DomainError);
  EXPECT_THROW(EndpointData(0.0, std::nan("")), DomainError);
  EXPECT_THROW(EndpointData(1.0, 1.0, -0.1), DomainError);
}

TEST(EvalPoint, EndpointsAllowed) {
  const Interval iv(0.0, 1.0);
  EXPECT_EQ(validate_eval_point(iv, 0.5), 0.5);
  EXPECT_EQ(validate_eval_point(iv, 1.0), 1.0);
  EXPECT_EQ(validate_eval_point(iv, 0.0), 0.0);
  EXPECT_THROW(validate_eval_point(iv, 1.5), DomainError);
  EXPECT_THROW(validate_eval_point(iv, -1e-12), DomainError);
}

TEST(TheoremTags, RoundTrip) {
  for (const char* tag : {"eq11", "ee", "eq14", "eq15", "eq16", "t20", "cor1", "teo1",
                          "t21", "e5", "z", "t22", "c23", "p1", "p2", "p3"}) {
    const auto id = theorem_from_string(tag);
    ASSERT_TRUE(id.has_value()) << tag;
    EXPECT_EQ(to_string(*id), tag);
  }
  EXPECT_FALSE(theorem_from_string("t99").has_value());
}

TEST(BoundResult, RejectsNegativeAndNonFinite) {
  EXPECT_NO_THROW(make_bound(0.0, TheoremId::kSConvexAbs, {}));
  EXPECT_THROW(make_bound(-1e-3, TheoremId::kSConvexAbs, {}), DomainError);
  EXPECT_THROW(make_bound(std::numeric_limits<double>::infinity(),
                          TheoremId::kSConvexAbs, {}),
               DomainError);
}

TEST(VerificationRecord, HoldsWithinTolerance) {
  const auto r = make_record(1.0 + 5e-13, 1.0, 1e-12, "ctx");
  EXPECT_TRUE(r.holds);
  EXPECT_DOUBLE_EQ(r.margin, 1.0 - (1.0 + 5e-13));
  EXPECT_NE(r.context.find("tol="), std::string::npos);
  EXPECT_FALSE(make_record(1.0 + 2e-12, 1.0, 1e-12, "").holds);
}
