// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/verify.hpp"

#include <algorithm>
#include <sstream>

#include "latwalk/classification.hpp"
#include "latwalk/enumeration.hpp"
#include "latwalk/errors.hpp"
#include "latwalk/geometry.hpp"
#include "latwalk/quadfield.hpp"
#include "latwalk/stepset.hpp"

namespace latwalk {
namespace {

// Accumulates pass/fail tallies; keeps only the first few failure texts so a
// broken run stays readable.
struct Suite {
  VerifyResult r;

  explicit Suite(std::string name) { r.suite = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++r.checks;
    if (ok) return;
    ++r.failures;
    if (r.messages.size() < 5) r.messages.push_back(what);
  }
};

std::string pt_text(Pt p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string set_text(const std::vector<Pt>& X) {
  std::string out = "{";
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (i) out += ",";
    out += pt_text(X[i]);
  }
  return out + "}";
}

BigRat random_small_rational(std::mt19937_64& gen, long long num_range,
                             long long den_range) {
  std::uniform_int_distribution<long long> num(0, num_range);
  std::uniform_int_distribution<long long> den(1, den_range);
  return BigRat(num(gen), den(gen));
}

}  // namespace

std::vector<Pt> random_step_set(std::mt19937_64& gen, int max_size,
                                std::int64_t coord) {
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::uniform_int_distribution<std::int64_t> coord_dist(-coord, coord);
  std::vector<Pt> out;
  const int want = size_dist(gen);
  while (static_cast<int>(out.size()) < want) {
    const Pt p{coord_dist(gen), coord_dist(gen)};
    if (p.is_origin()) continue;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerifyResult verify_finite_dichotomy(std::uint64_t seed, int trials) {
  Suite s("finite-dichotomy");
  std::mt19937_64 gen(seed);
  for (int t = 0; t < trials; ++t) {
    const auto X = random_step_set(gen);
    const auto r = classify_finite(X);
    const bool all_or_nothing =
        r.combination == Combination::I || r.combination == Combination::X;
    s.check(all_or_nothing, "off-table combination for " + set_text(X));
    s.check(r.cc.holds == r.lc.holds && r.slc.holds == r.lc.holds,
            "conditions split on finite set " + set_text(X));
    const bool hull = origin_in_hull(X).inside;
    s.check((r.combination == Combination::I) == !hull,
            "half-plane row disagrees with hull membership for " + set_text(X));
    if (r.combination == Combination::X) {
      s.check(r.units_certificate && r.units_certificate->replay(),
              "missing or broken O-sum certificate for " + set_text(X));
      if (r.ipp_cycle) {
        s.check(!r.ipp_cycle->empty() && walk_endpoint(*r.ipp_cycle) == kOrigin,
                "closed-walk witness does not return to O for " + set_text(X));
        bool steps_ok = true;
        for (Pt b : *r.ipp_cycle)
          if (!std::binary_search(X.begin(), X.end(), b)) steps_ok = false;
        s.check(steps_ok, "closed-walk witness uses foreign steps for " +
                              set_text(X));
      }
    } else {
      s.check(r.lc.witness && r.lc.witness->replay(X),
              "half-plane witness fails replay for " + set_text(X));
    }
  }
  return s.r;
}

VerifyResult verify_witness_replay(std::uint64_t seed, int trials) {
  Suite s("witness-replay");
  std::mt19937_64 gen(seed);
  for (int t = 0; t < trials; ++t) {
    const auto X = random_step_set(gen);
    const auto lc = check_LC(X);
    const auto slc = check_SLC(X);
    const auto cc = check_CC(X);
    const auto wlc = check_WLC(X);
    if (lc.holds)
      s.check(lc.witness && lc.witness->replay(X),
              "open half-plane witness fails for " + set_text(X));
    if (slc.holds)
      s.check(slc.witness && slc.witness->replay(X),
              "offset half-plane witness fails for " + set_text(X));
    if (cc.holds)
      s.check(cc.witness && cc.witness->replay(X),
              "cone witness fails for " + set_text(X));
    if (wlc.holds)
      s.check(wlc.witness && wlc.witness->replay(X),
              "closed half-plane witness fails for " + set_text(X));
    s.check(!lc.holds || wlc.holds,
            "open half-plane without the closed one for " + set_text(X));
  }
  return s.r;
}

VerifyResult verify_group_agreement(std::uint64_t seed, int trials) {
  Suite s("group-agreement");
  std::mt19937_64 gen(seed);
  for (int t = 0; t < trials; ++t) {
    const auto X = random_step_set(gen);
    const bool group = group_structure(X) != GroupIso::NotGroup;
    s.check(group == origin_in_relative_interior(X),
            "group verdict vs relative interior on " + set_text(X));
  }
  return s.r;
}

VerifyResult verify_oracle_equivalence(std::uint64_t seed, int trials) {
  Suite s("oracle-equivalence");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> len_dist(0, 4);
  int done = 0;
  while (done < trials) {
    const auto X = random_step_set(gen);
    const auto lc = check_LC(X);
    if (!lc.holds) continue;
    // Random reachable target; keep only instances where every walk fits in
    // 7 steps so the brute-force side stays cheap.
    Pt target = kOrigin;
    const int len = len_dist(gen);
    std::uniform_int_distribution<std::size_t> pick(0, X.size() - 1);
    for (int i = 0; i < len; ++i) target = target + X[pick(gen)];
    const Pt u = lc.witness->u;
    std::int64_t min_step = 0;
    for (Pt a : X) {
      const auto v = static_cast<std::int64_t>(dot(u, a));
      if (min_step == 0 || v < min_step) min_step = v;
    }
    const auto height = static_cast<std::int64_t>(dot(u, target));
    if (height < 0 || height / min_step > 7) continue;
    ++done;
    const auto dp = count_walks(X, target);
    const BigInt brute = naive_count(X, target, Constraint::full_plane(), 7);
    s.check(dp.count == WalkCount::exact(brute),
            "sweep disagrees with brute force on " + set_text(X) + " -> " +
                pt_text(target) + ": " + dp.count.str() + " vs " + brute.str());
  }
  return s.r;
}

VerifyResult verify_region_closure(std::uint64_t seed) {
  Suite s("region-closure");
  const Constraint regions[] = {
      Constraint::full_plane(),
      Constraint::punctured_quadrant(),
      Constraint::diagonal_chain(),
      Constraint::below_diagonal(),
      Constraint::halfplane_intersection({{1, 0}, {0, 1}}),
      Constraint::halfplane_intersection({{0, 1}, {0, -1}}),
      Constraint::halfplane_intersection({{2, 3}}),
  };
  for (const Constraint& c : regions) {
    s.check(c.contains(kOrigin), c.description() + " must contain O");
    s.check(c.closure_spot_check(seed), c.description() + " closure check");
  }
  return s.r;
}

VerifyResult verify_quadfield_arithmetic(std::uint64_t seed, int trials) {
  Suite s("quadfield-arithmetic");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long long> small(-6, 6);
  std::uniform_int_distribution<long long> den(1, 5);
  const auto rand_qx = [&] {
    return QuadExt(BigRat(small(gen), den(gen)), BigRat(small(gen), den(gen)), 2);
  };
  for (int t = 0; t < trials; ++t) {
    const QuadExt x = rand_qx(), y = rand_qx();
    s.check((x + y) - y == x, "addition does not cancel: " + x.str());
    s.check(x * y == y * x, "multiplication not commutative: " + x.str());
    s.check(qx_compare(x, y) == -qx_compare(y, x),
            "comparison not antisymmetric: " + x.str() + " vs " + y.str());
    s.check((x * x).sign() >= 0, "square with negative sign: " + x.str());
    if (x.sign() != 0)
      s.check((x * y) / x == y, "division does not invert: " + x.str());
    const QuadExt f = x.frac();
    s.check(f.sign() >= 0 && (f - QuadExt::rational(1)).sign() < 0,
            "fractional part outside [0,1): " + x.str());
    s.check(QuadExt::rational(BigRat(x.floor())) + f == x,
            "floor + frac does not recompose: " + x.str());
  }
  return s.r;
}

VerifyResult verify_appendix_band(std::uint64_t seed, int trials) {
  Suite s("appendix-band");
  std::mt19937_64 gen(seed);
  AppendixContext ctx(2);
  std::uniform_int_distribution<long long> k_dist(1, 3);
  std::uniform_int_distribution<long long> p_dist(1, 400);
  for (int t = 0; t < trials; ++t) {
    const long long k = k_dist(gen);
    const BigInt p = p_dist(gen);
    QuadExt alpha = QuadExt::rational(random_small_rational(gen, 30, 7));
    if (t % 3 == 0) alpha = alpha + QuadExt(0, random_small_rational(gen, 4, 3), 2);
    const MElement m = ctx.find_element(p, alpha, k);
    const QuadExt v = m.value();
    const QuadExt upper = alpha + QuadExt::rational(BigRat(1, k));
    s.check(qx_compare(alpha, v) < 0 && qx_compare(v, upper) < 0,
            "element escapes its open interval at trial " + std::to_string(t));
    s.check(m.phi() >= p && m.phi() <= p + ctx.find_pk(k).p,
            "coefficient escapes [p, p + p_k] at trial " + std::to_string(t));
  }
  return s.r;
}

std::vector<VerifyResult> run_verify_suites(std::uint64_t seed) {
  return {
      verify_finite_dichotomy(seed),   verify_witness_replay(seed),
      verify_group_agreement(seed),    verify_oracle_equivalence(seed),
      verify_region_closure(seed),     verify_quadfield_arithmetic(seed),
      verify_appendix_band(seed),
  };
}

}  // namespace latwalk
