#include <gtest/gtest.h>

#include "property_suites.hpp"

using namespace ptdiag::test;

namespace {

constexpr std::size_t kCases = 500;

void expect_clean(const SuiteResult& r) {
  EXPECT_EQ(r.cases, kCases);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

}  // namespace

TEST(Properties, AdjugateIdentity) { expect_clean(suite_adjugate_identity(101, kCases)); }
TEST(Properties, MinimalPolynomial) { expect_clean(suite_minimal_polynomial(102, kCases)); }
TEST(Properties, OracleAgreement) { expect_clean(suite_oracle_agreement(103, kCases)); }
TEST(Properties, PtRealness) { expect_clean(suite_pt_realness(104, kCases)); }
TEST(Properties, HermiteanNeverDefective) { expect_clean(suite_hermitean(105, kCases)); }
TEST(Properties, SturmCounts) { expect_clean(suite_sturm_counts(106, kCases)); }
