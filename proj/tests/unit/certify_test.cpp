#include <gtest/gtest.h>

#include "lagcert/certify.hpp"

namespace lagcert {
namespace {

const IntPoly kPhi = parse_poly("x^2 - x + 17");

LaguerreInstance ones(std::int64_t m, std::int64_t u, std::int64_t v = 1) {
  InstanceParams p;
  p.m = m;
  p.u = u;
  p.v = v;
  p.a_parts.assign(static_cast<std::size_t>(m), IntPoly{1});
  p.phi = kPhi;
  return build_instance(p);
}

Certificate certified(std::int64_t m, std::int64_t u, std::int64_t v = 1) {
  const CertifyResult r = certify(ones(m, u, v));
  EXPECT_TRUE(std::holds_alternative<Certificate>(r)) << m << " " << u << "/" << v;
  return std::get<Certificate>(r);
}

TEST(Certify, ExampleInstance) {
  const Certificate c = certified(5, 2);
  EXPECT_TRUE(c.irreducible);
  EXPECT_EQ(c.small_degree_prime, 7);
  ASSERT_EQ(c.witnesses.size(), 2u);
  EXPECT_EQ(c.witnesses[0].k, 1);
  EXPECT_EQ(c.witnesses[0].p, 5);
  EXPECT_EQ(c.witnesses[0].tier, WitnessTier::kSubcasePrime);
  EXPECT_EQ(c.witnesses[1].k, 2);
  EXPECT_EQ(c.witnesses[1].p, 7);
  EXPECT_EQ(c.witnesses[1].slope, Rational(1, 5));
  EXPECT_EQ(c.witnesses[1].tier, WitnessTier::kProductPrime);
  EXPECT_TRUE(verify_certificate(c, ones(5, 2)));
}

TEST(Certify, RationalAlpha) {
  const Certificate c = certified(5, 1, 2);
  EXPECT_TRUE(verify_certificate(c, ones(5, 1, 2)));
  for (const auto& w : c.witnesses) EXPECT_NE(w.p, 2);
}

TEST(Certify, UncoveredPairs) {
  const auto r22 = std::get<FailureReport>(certify(ones(2, 2)));
  EXPECT_FALSE(r22.small_degree_failed());
  EXPECT_EQ(r22.uncovered_k, std::vector<std::int64_t>{1});
  const auto r10 = std::get<FailureReport>(certify(ones(1, 0)));
  EXPECT_TRUE(r10.small_degree_failed());
  EXPECT_THROW(exclude_small_degrees(ones(1, 0)), NoSmallDegreePrime);
  const auto r64 = std::get<FailureReport>(certify(ones(6, 4)));
  EXPECT_EQ(r64.uncovered_k, (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(r64.found.size(), 1u);
}

TEST(Certify, RejectsUncheckedInvalidInstance) {
  InstanceParams p;
  p.m = 3;
  p.u = 1;
  p.a_m = 2;
  p.a_parts.assign(3, IntPoly{1});
  p.phi = kPhi;
  EXPECT_THROW(certify(build_instance_relaxed(p)), HypothesisError);
}

TEST(Verify, RejectsTampering) {
  const LaguerreInstance inst = ones(9, 3);
  const Certificate good = certified(9, 3);
  ASSERT_TRUE(verify_certificate(good, inst));

  auto bad = good;
  bad.witnesses[0].p = 23;  // divides no b_j
  EXPECT_FALSE(verify_certificate(bad, inst));
  bad = good;
  bad.witnesses.back().slope = Rational(0);
  EXPECT_FALSE(verify_certificate(bad, inst));
  bad = good;
  bad.witnesses.pop_back();
  EXPECT_FALSE(verify_certificate(bad, inst));
  bad = good;
  bad.small_degree_prime = 5;
  EXPECT_FALSE(verify_certificate(bad, inst));
  bad = good;
  bad.irreducible = false;
  EXPECT_FALSE(verify_certificate(bad, inst));
  bad = good;
  bad.witnesses[0].divisible_through = 0;
  EXPECT_FALSE(verify_certificate(bad, inst));
  EXPECT_FALSE(verify_certificate(good, ones(9, 1)));
}

TEST(Json, RoundTripAndErrors) {
  const Certificate c = certified(12, 4);
  const auto j = to_json(c);
  EXPECT_EQ(j["conclusion"], "irreducible");
  EXPECT_EQ(certificate_from_json(nlohmann::json::parse(j.dump())), c);
  EXPECT_EQ(instance_params(c), ones(12, 4).params());

  auto broken = nlohmann::json::parse(j.dump());
  broken.erase("witnesses");
  EXPECT_THROW(certificate_from_json(broken), std::invalid_argument);
  broken = nlohmann::json::parse(j.dump());
  broken["witnesses"][0]["slope"] = "one half";
  EXPECT_THROW(certificate_from_json(broken), std::invalid_argument);
  EXPECT_THROW(certificate_from_json(nlohmann::json::array()), std::invalid_argument);
}

TEST(Json, FailureReport) {
  const auto j = to_json(std::get<FailureReport>(certify(ones(4, 4))));
  EXPECT_EQ(j["conclusion"], "uncovered");
  EXPECT_EQ(j["uncovered_k"], nlohmann::ordered_json::array({1}));
}

TEST(Lemma, DirectCheck) {
  const LaguerreInstance inst = ones(5, 2);
  const IntPoly g = monic_model(inst).reassemble();
  ASSERT_TRUE(g.is_monic());
  const std::vector<IntPoly> mult(6, IntPoly{1});
  EXPECT_TRUE(lemma_exclusion_check(g, kPhi, 7, 1, 2, mult));
  EXPECT_TRUE(lemma_exclusion_check(g, kPhi, 5, 1, 2, mult));
  EXPECT_FALSE(lemma_exclusion_check(g, kPhi, 3, 1, 2, mult));   // slope 1
  EXPECT_FALSE(lemma_exclusion_check(g, kPhi, 11, 1, 2, mult));  // 11 divides nothing
  EXPECT_THROW(lemma_exclusion_check(g, kPhi, 7, 2, 2, mult), std::invalid_argument);
  EXPECT_THROW(lemma_exclusion_check(g, kPhi, 7, 0, 3, mult), std::invalid_argument);
  EXPECT_THROW(lemma_exclusion_check(g, kPhi, 17, 0, 1, mult), std::invalid_argument);
  EXPECT_THROW(lemma_exclusion_check(g, kPhi, 4, 0, 1, mult), std::invalid_argument);
  EXPECT_THROW(lemma_exclusion_check(g, kPhi, 7, 0, 1, std::vector<IntPoly>(5, IntPoly{1})), std::invalid_argument);
}

TEST(Witness, FoundPrimesRevalidate) {
  const LaguerreInstance inst = ones(12, 4);
  for (std::int64_t k = 1; k <= 6; ++k) {
    const auto found = find_prime_for_k(inst, k);
    ASSERT_TRUE(std::holds_alternative<ExclusionWitness>(found)) << k;
    const auto& w = std::get<ExclusionWitness>(found);
    EXPECT_EQ(try_witness_prime(inst, k, w.p, w.tier), w);
    EXPECT_LT(w.slope, Rational(1, k));
  }
  EXPECT_EQ(try_witness_prime(inst, 1, 17, WitnessTier::kFallback), std::nullopt);
  EXPECT_EQ(try_witness_prime(inst, 1, 9, WitnessTier::kFallback), std::nullopt);
  EXPECT_THROW(find_prime_for_k(inst, 7), std::invalid_argument);
}

TEST(Coverage, Intervals) {
  EXPECT_TRUE(coverage_holds(5, 2, {1, 2}));
  EXPECT_FALSE(coverage_holds(5, 2, {1}));
  EXPECT_TRUE(coverage_holds(1, 2, {}));
  EXPECT_TRUE(coverage_holds(6, 1, {1, 2, 3}));
  EXPECT_FALSE(coverage_holds(6, 1, {1, 3}));
  EXPECT_EQ(to_string(WitnessTier::kTablePrime), "table");
}

}  // namespace
}  // namespace lagcert
