#include <gtest/gtest.h>

#include <random>

#include "toricmld/error.hpp"
#include "toricmld/logpair.hpp"
#include "toricmld/snc.hpp"

using namespace toricmld;
using namespace toricmld::snc;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Parse;
}

}  // namespace

TEST(SncMld, TwoComponentsAtCodimThree) {
  SncPair p = SncPair::full(3, {q(1, 2), q(1, 3)});
  EXPECT_EQ(snc_mld(p, {{0, 1}, 3}), LogDiscrepancy(q(11, 6)));
}

TEST(SncMld, TwoComponentsAgreeWithToricModel) {
  // Smooth rank-3 cone with b = (1/2, 2/3, 0): a = (1/2, 1/3, 1).
  Fan f = Fan::make(3, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  std::vector<Rational> b(3);
  b[*f.ray_index(LatticeVector{1, 0, 0})] = q(1, 2);
  b[*f.ray_index(LatticeVector{0, 1, 0})] = q(2, 3);
  b[*f.ray_index(LatticeVector{0, 0, 1})] = q(0);
  ToricLogPair t = ToricLogPair::make(f, b);
  auto face = f.find_by_rays({*f.ray_index(LatticeVector{1, 0, 0}), *f.ray_index(LatticeVector{0, 1, 0})});
  EXPECT_EQ(mld_closed_point(t, *face), q(11, 6));
}

TEST(SncMld, GenericPointIsZero) {
  SncPair p = SncPair::full(2, {q(1, 2)});
  EXPECT_EQ(snc_mld(p, {{}, 0}), LogDiscrepancy(q(0)));
}

TEST(SncMld, NegativeCoefficientAtProperPoint) {
  SncPair p = SncPair::full(2, {q(-1, 4)});
  EXPECT_EQ(snc_mld(p, {{0}, 2}), LogDiscrepancy::minus_infinity());
  EXPECT_EQ(snc_mld(p, {{0}, 1}), LogDiscrepancy(q(-1, 4)));
  EXPECT_EQ(snc_mld(p, {{}, 2}), LogDiscrepancy(q(2)));
}

TEST(SncMld, InvalidPoints) {
  SncPair p(2, {q(1), q(1), q(1)}, {{0, 1}, {2}});
  EXPECT_EQ(code_of([&] { snc_mld(p, {{0, 2}, 2}); }), ErrorCode::InvalidPoint);
  EXPECT_EQ(code_of([&] { snc_mld(p, {{0, 1}, 1}); }), ErrorCode::InvalidPoint);
  EXPECT_EQ(code_of([&] { snc_mld(p, {{0}, 3}); }), ErrorCode::InvalidPoint);
  EXPECT_EQ(code_of([] { SncPair(1, {q(1), q(1)}, {{0, 1}}); }), ErrorCode::InvalidPoint);
  EXPECT_EQ(code_of([] { SncPair(2, {q(1)}, {{1}}); }), ErrorCode::InvalidPoint);
}

TEST(SncMld, AllOnesClosedPointIsDimension) {
  for (std::size_t n = 1; n <= 5; ++n) {
    SncPair p = SncPair::full(n, std::vector<Rational>(n, Rational(1)));
    for (const auto& j : p.nerve()) EXPECT_EQ(snc_mld(p, {j, n}), LogDiscrepancy(Rational(static_cast<long>(n))));
  }
}

TEST(Nerve, ClosedUnderSubsets) {
  SncPair p(3, {q(1), q(1), q(1)}, {{0, 2}});
  EXPECT_EQ(p.nerve(), (std::set<ComponentSet>{{}, {0}, {2}, {0, 2}}));
  EXPECT_EQ(p.points().size(), 4u + 3u + 3u + 2u);
}

TEST(CheckHypothesis, Examples) {
  SncPair p = SncPair::full(2, {q(1), q(1)});
  EXPECT_EQ(check_hypothesis(p, {{0, 1}, 2}, {{0}, 1}).slack, 0);

  SncPair r = SncPair::full(3, {q(1, 2), q(1, 3)});
  EXPECT_EQ(check_hypothesis(r, {{0, 1}, 3}, {{0}, 1}).slack, q(-2, 3));

  SncPair s = SncPair::full(2, {q(1, 2)});
  EXPECT_EQ(check_hypothesis(s, {{0}, 2}, {{}, 0}).slack, q(-1, 2));
}

TEST(CheckHypothesis, NotSpecialization) {
  SncPair p = SncPair::full(2, {q(1), q(1)});
  EXPECT_EQ(code_of([&] { check_hypothesis(p, {{0}, 1}, {{1}, 1}); }), ErrorCode::NotSpecialization);
  EXPECT_EQ(code_of([&] { check_hypothesis(p, {{0}, 1}, {{0}, 2}); }), ErrorCode::NotSpecialization);
}

TEST(CheckHypothesis, SlackEqualsNewComponentsMinusCount) {
  std::mt19937_64 rng(6);
  for (std::size_t m = 1; m <= 4; ++m) {
    std::vector<Rational> a;
    for (std::size_t i = 0; i < m; ++i) a.push_back(q(static_cast<long>(rng() % 13), 12));
    SncPair p = SncPair::full(4, a);
    for (const auto& eta : p.points())
      for (const auto& xi : p.points()) {
        if (!std::includes(eta.incident.begin(), eta.incident.end(), xi.incident.begin(), xi.incident.end())) continue;
        if (xi.codim > eta.codim) continue;
        HypothesisSlack h = check_hypothesis(p, eta, xi);
        ASSERT_FALSE(h.minus_infinity);
        Rational expected = 0;
        std::size_t extra = 0;
        for (std::size_t i : eta.incident)
          if (!std::binary_search(xi.incident.begin(), xi.incident.end(), i)) {
            expected += a[i];
            ++extra;
          }
        expected -= static_cast<long>(extra);
        EXPECT_EQ(h.slack, expected);
        EXPECT_LE(h.slack, 0);
      }
  }
}

TEST(Product, WithEmptyPairIsIdentity) {
  SncPair p(3, {q(1, 2), q(1, 3), q(1)}, {{0, 1}, {1, 2}});
  SncPair e(0, {}, {});
  SncPair pe = product(p, e);
  EXPECT_EQ(pe.ambient_dim(), 3u);
  EXPECT_EQ(pe.nerve(), p.nerve());
  EXPECT_EQ(pe.log_discrepancies(), p.log_discrepancies());
}

TEST(Product, SingleComponents) {
  SncPair p = SncPair::full(1, {q(1, 2)});
  SncPair r = SncPair::full(1, {q(1, 3)});
  SncPair pr = product(p, r);
  SncPoint pt = product_point(p, {{0}, 1}, {{0}, 1});
  EXPECT_EQ(pt.incident, (ComponentSet{0, 1}));
  EXPECT_EQ(pt.codim, 2u);
  EXPECT_EQ(snc_mld(pr, pt), LogDiscrepancy(q(5, 6)));
}

TEST(Product, CodimAdds) {
  SncPair p = SncPair::full(2, {q(1)});
  EXPECT_EQ(product_point(p, {{}, 2}, {{0}, 1}).codim, 3u);
}

TEST(Product, AdditiveOnAllPointsForNonnegativeCoefficients) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    auto make = [&] {
      std::size_t n = 1 + rng() % 3, m = rng() % (n + 1);
      std::vector<Rational> a;
      for (std::size_t i = 0; i < m; ++i) a.push_back(q(static_cast<long>(rng() % 13), 12));
      return SncPair::full(n, a);
    };
    SncPair p = make(), r = make();
    SncPair pr = product(p, r);
    for (const auto& eta : p.points())
      for (const auto& xi : r.points()) {
        SncPoint pt = product_point(p, eta, xi);
        EXPECT_EQ(snc_mld(pr, pt), snc_mld(p, eta) + snc_mld(r, xi));
      }
  }
}

TEST(BlowupDivergence, Examples) {
  EXPECT_EQ(blowup_divergence(q(-1, 2), q(1), 4), q(-1));
  EXPECT_EQ(blowup_divergence(q(0), q(7, 3), 1000), q(7, 3));
  EXPECT_EQ(blowup_divergence(q(-1, 4), q(3, 2), 10), q(-1));
}

TEST(BlowupDivergence, MatchesIteratedBlowUps) {
  // Blowing up E_k ∩ E repeatedly: a(E_{k+1}) = a(E_k) + a(E) starting from a(E_1).
  Rational a_e = q(-1, 3), a_e1 = q(5, 4), cur = a_e1;
  for (std::uint64_t k = 1; k <= 50; ++k) {
    cur += a_e;
    EXPECT_EQ(blowup_divergence(a_e, a_e1, k), cur);
  }
}

TEST(LogDiscrepancy, Arithmetic) {
  EXPECT_EQ(LogDiscrepancy(q(1)) + LogDiscrepancy(q(2)), LogDiscrepancy(q(3)));
  EXPECT_EQ(LogDiscrepancy(q(1)) + LogDiscrepancy::minus_infinity(), LogDiscrepancy::minus_infinity());
  EXPECT_EQ(to_string(LogDiscrepancy::minus_infinity()), "-inf");
  EXPECT_EQ(to_string(LogDiscrepancy(q(-3, 4))), "-3/4");
  EXPECT_THROW(LogDiscrepancy::minus_infinity().value(), Error);
}
