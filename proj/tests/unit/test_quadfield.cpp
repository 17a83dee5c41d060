// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/quadfield.hpp"

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "latwalk/errors.hpp"

namespace latwalk {
namespace {

QuadExt qx(long long a, long long b, long long d = 2) {
  return {BigRat(a), BigRat(b), d};
}

TEST_CASE("field arithmetic is exact") {
  const QuadExt r2 = QuadExt::sqrt_d(2);
  CHECK((r2 * r2) == QuadExt::rational(2));
  CHECK((qx(1, 1) * qx(1, -1)) == qx(-1, 0));  // (1+r2)(1-r2) = -1
  CHECK((qx(3, 2) - qx(1, 2)) == qx(2, 0));
  CHECK((qx(5, 3) / qx(5, 3)) == qx(1, 0));
  CHECK(((qx(7, -4) / qx(2, 1)) * qx(2, 1)) == qx(7, -4));

  CHECK(qx(1, 1).sign() == 1);     // 1 + r2 > 0
  CHECK(qx(-3, 2).sign() == -1);   // 2*r2 < 3
  CHECK(qx(-2, 2).sign() == 1);    // 2*r2 > 2
  CHECK(qx(0, 0).sign() == 0);

  CHECK(qx(0, 1).floor() == 1);    // floor(r2)
  CHECK(qx(0, 2).floor() == 2);    // floor(2.82..)
  CHECK(qx(0, -1).floor() == -2);  // floor(-1.41..)
  CHECK(qx(3, 0).floor() == 3);
  CHECK(qx(0, 1).frac() == (qx(0, 1) - qx(1, 0)));
  CHECK(qx(0, -1).frac() == (qx(2, 0) - qx(0, 1)));  // -r2 + 2 in [0,1)

  CHECK(qx_compare(qx(1, 1), qx(2, 0)) > 0);   // 1 + r2 > 2
  CHECK(qx_compare(qx(0, 5), qx(7, 0)) > 0);   // 5*r2 > 7
  CHECK(qx_compare(qx(0, 5), qx(8, 0)) < 0);
  CHECK_THROWS_AS(qx_compare(qx(1, 1, 2), qx(1, 1, 3)), ValidationError);
}

TEST_CASE("coefficient map and window sets") {
  const MElement m{-3, 4, 2};
  CHECK(m.phi() == 4);
  CHECK((m + MElement{1, 1, 2}) == MElement{-2, 5, 2});

  // B(1) = { m : phi(m) = 0 and 0 <= m < 1 } = {0}.
  CHECK(b_set_membership({0, 0, 2}, 1));
  CHECK_FALSE(b_set_membership({1, 0, 2}, 1));
  CHECK_FALSE(b_set_membership({0, 1, 2}, 1));
  // -1 + r2 = 0.41.. has |phi| = 1 <= l-1 and lies in [0, 2) for l = 2.
  CHECK(b_set_membership({-1, 1, 2}, 2));
  CHECK_FALSE(b_set_membership({-3, 1, 2}, 2));  // negative value
}

TEST_CASE("parameter chain reproduces the frozen values") {
  AppendixContext ctx(2);
  const PkResult& p1 = ctx.find_pk(1);
  CHECK(p1.l == 1);
  CHECK(p1.a == 1);
  CHECK(p1.p == 4);  // least integer beyond 1 + 1/(r2 - 1) = 2 + r2

  const PkResult& p2 = ctx.find_pk(2);
  CHECK(p2.l == 1);
  CHECK(p2.a == 1);
  CHECK(p2.p == 5);

  const PkResult& p3 = ctx.find_pk(3);
  CHECK(p3.l == 3);
  CHECK(p3.a == 4);
  CHECK(p3.p == 16);

  CHECK(AppendixContext::n_l(1) == 2);
  CHECK(AppendixContext::n_l(2) == 10);
  CHECK(AppendixContext::n_l(3) == 30);

  CHECK(ctx.R_k(1) == 189);
  CHECK(ctx.R_k(2) == BigInt("7255941110"));
  CHECK(ctx.R_k(3) == BigInt("32906136611136577977971053772213"));
}

TEST_CASE("element finder lands in the required window") {
  AppendixContext ctx(2);
  const MElement alpha1 = ctx.find_element(191, QuadExt::rational(1), 1);
  CHECK(alpha1.a == -273);
  CHECK(alpha1.b == 194);
  // alpha_1 lies strictly inside (1, 2) with coefficient in [191, 195].
  CHECK(qx_compare(alpha1.value(), qx(1, 0)) > 0);
  CHECK(qx_compare(alpha1.value(), qx(2, 0)) < 0);
  CHECK(alpha1.phi() >= 191);
  CHECK(alpha1.phi() <= 191 + ctx.find_pk(1).p);

  const AppendixSequences seq = ctx.build(2);
  REQUIRE(seq.alphas.size() == 2);
  CHECK(seq.alphas[0] == MElement{-273, 194, 2});
  CHECK(seq.beta1 == MElement{2, 0, 2});
  CHECK(seq.gamma1 == MElement{2, 0, 2});
  CHECK(seq.R == std::vector<BigInt>{189, BigInt("7255941110")});
  // alpha_2 in (1/2, 1) with phi in [2(1 + R_2) + 1, .. + p_2].
  const BigInt p = 2 * (1 + seq.R[1]) + 1;
  CHECK(seq.alphas[1].phi() >= p);
  CHECK(seq.alphas[1].phi() <= p + ctx.find_pk(2).p);
  CHECK(qx_compare(seq.alphas[1].value(), QuadExt::rational(BigRat(1, 2))) > 0);
  CHECK(qx_compare(seq.alphas[1].value(), QuadExt::rational(1)) < 0);
}

TEST_CASE("sum-set checks answer both ways") {
  AppendixContext ctx(2);
  const AppendixSequences seq = ctx.build(1);
  const std::vector<MElement> sigma{seq.alphas[0], seq.beta1, seq.gamma1};
  CHECK(sum_set_check(sigma, 1, 3, 4));

  // Two copies of r2 - 1 = 0.41.. sum to 0.82.. with phi = 2: inside B(3).
  const std::vector<MElement> wide{{-1, 1, 2}};
  CHECK_FALSE(sum_set_check(wide, 3, 2, 2));

  CHECK_THROWS_AS(sum_set_check(sigma, 1, 3, 40, 10), BudgetError);
  CHECK_THROWS_AS(sum_set_check(sigma, 1, 0, 4), ValidationError);
}

TEST_CASE("bounded-length truncation of the construction") {
  AppendixContext ctx(2);
  const ExampleVTruncation t1 = example_v_steps(1, ctx);
  CHECK(t1.i_max == 1);
  CHECK(t1.a_points == std::vector<Pt>{{-273, 194}});
  REQUIRE(t1.bc_pairs.size() == 1);
  CHECK(t1.bc_pairs[0].first + t1.bc_pairs[0].second == Pt{4, 0});
  CHECK(t1.steps == std::vector<Pt>{{-273, 194}, {2, 0}});

  const ExampleVTruncation t2 = example_v_steps(2, ctx);
  CHECK(t2.a_points.size() == 2);
  CHECK(t2.a_points[1] == Pt{-20522900656LL, 14511882224LL});

  CHECK_THROWS_AS(example_v_steps(3, ctx), BudgetError);
  CHECK_THROWS_AS(example_v_steps(0, ctx), ValidationError);
}

TEST_CASE("lattice points between parallel irrational lines") {
  const Pt p = lattice_point_between(QuadExt::sqrt_d(2), QuadExt::rational(0),
                                     QuadExt::rational(BigRat(1, 10)), 100);
  CHECK(p == Pt{449, 635});
  // Replay the betweenness exactly: 0 < y - x*r2 < 1/10 and x > 100.
  const QuadExt t = qx(p.y, -p.x);
  CHECK(t.sign() > 0);
  CHECK(qx_compare(t, QuadExt::rational(BigRat(1, 10))) < 0);
  CHECK(p.x > 100);
}

TEST_CASE("strict side-of-line tests") {
  CHECK(side_value_sign({1, 1}, 2, HalfplaneSide::Below) > 0);   // r2 > 1
  CHECK(side_value_sign({1, 2}, 2, HalfplaneSide::Below) < 0);   // r2 < 2
  CHECK(side_value_sign({1, 2}, 2, HalfplaneSide::Above) > 0);
  CHECK(side_value_sign({1, 1}, 3, HalfplaneSide::Below) > 0);   // r3 > 1
  CHECK(side_value_sign({-1, -2}, 2, HalfplaneSide::Below) > 0); // -r2 > -2
}

TEST_CASE("fixed-endpoint walks of every length on one side") {
  const Pt target{3, 2};
  std::set<Walk> seen;
  for (long long k = 1; k <= 6; ++k) {
    const Walk w = construct_irrational_walk(target, k, 2, HalfplaneSide::Below);
    CHECK(static_cast<long long>(w.size()) == k);
    CHECK(walk_endpoint(w) == target);
    for (Pt step : w) CHECK(side_value_sign(step, 2, HalfplaneSide::Below) > 0);
    seen.insert(w);
  }
  CHECK(seen.size() == 6);

  // A target on the wrong side is rejected.
  CHECK_THROWS_AS(construct_irrational_walk({1, 2}, 3, 2, HalfplaneSide::Below),
                  ValidationError);
}

}  // namespace
}  // namespace latwalk
