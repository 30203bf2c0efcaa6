#include <gtest/gtest.h>

#include <vector>

#include "forest_trees/closed_form.hpp"
#include "forest_trees/error.hpp"
#include "forest_trees/identity_lab.hpp"
#include "forest_trees/rng.hpp"
#include "forest_trees/weighted_tau.hpp"

namespace forest_trees {
namespace {

std::vector<ExactRational> q(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

IdentityPoint point(IdentityId id, std::vector<ExactRational> a, std::vector<ExactRational> b) {
  IdentityPoint p;
  p.id = id;
  p.a = std::move(a);
  p.b = std::move(b);
  return p;
}

TEST(Identities, NamesRoundTrip) {
  for (IdentityId id : all_identities()) EXPECT_EQ(parse_identity_id(to_string(id)), id);
  EXPECT_EQ(all_identities().size(), 10u);
  EXPECT_THROW(parse_identity_id("L99"), Error);
  EXPECT_EQ(min_size(IdentityId::T31), 2u);
  EXPECT_EQ(min_size(IdentityId::L22), 1u);
}

TEST(EvaluateIdentity, Examples) {
  const IdentityValues l22 = evaluate_identity(point(IdentityId::L22, q({1, 1}), q({1, 1})));
  EXPECT_EQ(l22.lhs, 3);
  EXPECT_EQ(l22.rhs, 3);

  const IdentityValues l21 = evaluate_identity(point(IdentityId::L21, q({1}), q({1})));
  EXPECT_EQ(l21.lhs, ExactRational(1, 4));
  EXPECT_EQ(l21.rhs, ExactRational(1, 4));

  const IdentityValues t31 = evaluate_identity(point(IdentityId::T31, q({1, 3}), q({2, 4})));
  EXPECT_TRUE(t31.equal());
  EXPECT_EQ(t31.lhs, 10);
}

TEST(EvaluateIdentity, L21DegenerateBranches) {
  // A = 0, B != 0.
  const IdentityPoint a_zero = point(IdentityId::L21, q({2, -3, 1}), q({1, 3, 2}));
  ASSERT_FALSE(guard_violation(a_zero));
  EXPECT_TRUE(evaluate_identity(a_zero).equal());
  // B = 0, A != 0.
  const IdentityPoint b_zero = point(IdentityId::L21, q({1, 4, 1}), q({3, -1, -2}));
  ASSERT_FALSE(guard_violation(b_zero));
  EXPECT_TRUE(evaluate_identity(b_zero).equal());
  // Rational entries with A = 0.
  const IdentityPoint rational =
      point(IdentityId::L21, {ExactRational(1, 2), ExactRational(-1, 2)}, q({5, 2}));
  ASSERT_FALSE(guard_violation(rational));
  EXPECT_TRUE(evaluate_identity(rational).equal());
}

TEST(EvaluateIdentity, GuardsAndShape) {
  // a_1 B + b_1 A = 1*1 + (-1)*1 = 0.
  const IdentityPoint bad = point(IdentityId::L21, q({1, 0}), q({-1, 2}));
  EXPECT_TRUE(guard_violation(bad));
  try {
    evaluate_identity(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GuardViolated);
  }
  EXPECT_TRUE(guard_violation(point(IdentityId::L22, q({1, 2}), q({1}))));
  EXPECT_THROW(evaluate_identity(point(IdentityId::L22, q({1, 2}), q({1}))), Error);
  EXPECT_TRUE(guard_violation(point(IdentityId::T31, q({1}), q({1}))));
  EXPECT_TRUE(guard_violation(point(IdentityId::T31, q({1, -1}), q({1, 2}))));
}

TEST(SamplePoint, PostConditions) {
  for (IdentityId id : all_identities()) {
    for (std::size_t size = min_size(id); size <= 6; ++size) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const IdentityPoint p = sample_point(id, size, seed);
        EXPECT_EQ(p.id, id);
        EXPECT_EQ(p.size(), size);
        EXPECT_FALSE(guard_violation(p)) << to_string(id) << " size " << size;
        for (const auto* v : {&p.a, &p.b})
          for (const ExactRational& r : *v) {
            EXPECT_LE(abs(r.get_num()), 20);
            EXPECT_GE(r.get_den(), 1);
            EXPECT_LE(r.get_den(), 10);
          }
        const IdentityPoint again = sample_point(id, size, seed);
        EXPECT_EQ(again.a, p.a);
        EXPECT_EQ(again.b, p.b);
        EXPECT_EQ(again.c, p.c);
        EXPECT_EQ(again.d, p.d);
        EXPECT_EQ(again.scalar, p.scalar);
      }
    }
  }
  EXPECT_FALSE(guard_violation(sample_point(IdentityId::T31, 3, 1)));
  EXPECT_FALSE(guard_violation(sample_point(IdentityId::L21, 2, 9)));
}

TEST(RunSuite, Examples) {
  const std::vector<std::size_t> one_to_six{1, 2, 3, 4, 5, 6};
  const SuiteReport l22 = run_suite(IdentityId::L22, one_to_six, 100, 0);
  EXPECT_EQ(l22.pass, 600u);
  EXPECT_EQ(l22.fail, 0u);

  const std::vector<std::size_t> two_to_six{2, 3, 4, 5, 6};
  const SuiteReport t31 = run_suite(IdentityId::T31, two_to_six, 50, 0);
  EXPECT_EQ(t31.pass, 250u);
  EXPECT_EQ(t31.fail, 0u);

  const SuiteReport xy = run_suite(IdentityId::XYCANCEL, one_to_six, 100, 0);
  EXPECT_EQ(xy.fail, 0u);
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    EXPECT_EQ(evaluate_identity(sample_point(IdentityId::XYCANCEL, 4, seed)).lhs, 0);
}

TEST(RunSuite, SkipsUndersizedAndRejectsOversized) {
  const std::vector<std::size_t> sizes{1, 2};
  const SuiteReport r = run_suite(IdentityId::R63, sizes, 5, 3);
  EXPECT_EQ(r.skipped_sizes, std::vector<std::size_t>{1});
  EXPECT_EQ(r.pass, 5u);
  const std::vector<std::size_t> zero{0};
  EXPECT_THROW(run_suite(IdentityId::L22, zero, 1, 0), Error);
  const std::vector<std::size_t> eleven{11};
  EXPECT_THROW(run_suite(IdentityId::L22, eleven, 1, 0), Error);
  const SuiteReport empty = run_suite(IdentityId::L22, sizes, 0, 0);
  EXPECT_EQ(empty.pass, 0u);
  EXPECT_EQ(empty.fail, 0u);
}

TEST(RunSuite, Deterministic) {
  const std::vector<std::size_t> sizes{2, 3, 4};
  EXPECT_EQ(to_json(run_suite(IdentityId::L25X, sizes, 20, 17)).dump(),
            to_json(run_suite(IdentityId::L25X, sizes, 20, 17)).dump());
}

TEST(CrossModule, T31LhsEqualsPhiEval) {
  for (std::size_t k = 2; k <= 6; ++k)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const IdentityPoint p = sample_point(IdentityId::T31, k, seed);
      std::vector<PairVector::Pair> pairs;
      for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(p.a[i], p.b[i]);
      ASSERT_EQ(evaluate_identity(p).lhs, phi_eval(PairVector(pairs)));
    }
}

TEST(CrossModule, R63RhsEqualsAltRecursion) {
  Rng rng(63);
  int checked = 0;
  while (checked < 100) {
    const std::size_t k = 2 + rng.below(5);
    IdentityPoint p;
    p.id = IdentityId::R63;
    for (std::size_t i = 0; i < k; ++i) {
      p.a.emplace_back(rng.between(0, 5));
      p.b.emplace_back(rng.between(0, 5));
    }
    if (guard_violation(p)) continue;
    const ExactRational rhs = evaluate_identity(p).rhs;
    ASSERT_EQ(rhs, tau_alt_recursion(induced_graph({p.a, p.b})));
    ++checked;
  }
}

TEST(Json, SuiteReportUsesStrings) {
  const std::vector<std::size_t> sizes{2};
  const nlohmann::json j = to_json(run_suite(IdentityId::L22, sizes, 3, 0));
  EXPECT_EQ(j["id"], "L22");
  EXPECT_EQ(j["pass"], "3");
  EXPECT_EQ(j["fail"], "0");
  EXPECT_TRUE(j["counterexamples"].is_array());
}

}  // namespace
}  // namespace forest_trees
