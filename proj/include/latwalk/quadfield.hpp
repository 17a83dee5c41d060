// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in Q(sqrt(d)) for squarefree d > 1, plus the constructive
// machinery built on it: the p_k / R_k parameter chain, the element finder
// hitting a prescribed interval with a large coefficient, the B(l) window
// sets and brute-force sum-set checks, the bounded-length step-set
// truncation they feed, and lattice-point placement between parallel lines
// of irrational slope.

#ifndef LATWALK_QUADFIELD_HPP
#define LATWALK_QUADFIELD_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latwalk/bigint.hpp"
#include "latwalk/errors.hpp"
#include "latwalk/point.hpp"

namespace latwalk {

// a + b*sqrt(d) with rational a, b.  Total order, floor, and fractional part
// are all exact; no approximation is ever used.
struct QuadExt {
  BigRat a;
  BigRat b;
  long long d = 2;

  QuadExt() = default;
  QuadExt(BigRat a_, BigRat b_, long long d_ = 2) : a(std::move(a_)), b(std::move(b_)), d(d_) {}

  static QuadExt rational(BigRat v, long long d = 2) { return {std::move(v), 0, d}; }
  static QuadExt sqrt_d(long long d = 2) { return {0, 1, d}; }

  int sign() const;
  BigInt floor() const;
  QuadExt frac() const;  // x - floor(x), in [0, 1)
  bool is_rational() const { return b == 0; }
  std::string str() const;

  QuadExt operator-() const { return {-a, -b, d}; }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  friend bool operator==(const QuadExt& x, const QuadExt& y);
  friend bool operator<(const QuadExt& x, const QuadExt& y);
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }
};

// Exact three-way comparison; throws ValidationError on mixed field tags.
int qx_compare(const QuadExt& x, const QuadExt& y);

// Integer-coefficient element a + b*xi of the monoid M = {a + b*xi >= 0}.
// phi(a + b*xi) = b is well defined because 1 and xi are independent over Q.
struct MElement {
  BigInt a;
  BigInt b;
  long long d = 2;

  QuadExt value() const { return {BigRat(a), BigRat(b), d}; }
  const BigInt& phi() const { return b; }

  friend MElement operator+(const MElement& x, const MElement& y) {
    return {x.a + y.a, x.b + y.b, x.d};
  }
  friend bool operator==(const MElement& x, const MElement& y) = default;
};

// x in B(l) = { m in M : |phi(m)| <= l-1 and 0 <= m < l }.
bool b_set_membership(const MElement& x, long long l);

struct PkResult {
  BigInt p;  // minimal integer beyond l*(1 + 1/(l*xi - a)), bumped monotone
  BigInt l;  // smallest l >= 1 admitting 0 < l*xi - a < 1/k
  BigInt a;  // the matching integer, a = floor(l*xi)
};

struct AppendixSequences {
  long long d = 2;
  std::vector<MElement> alphas;        // alpha_1 .. alpha_kmax
  MElement beta1{2, 0, 2};
  MElement gamma1{2, 0, 2};
  std::vector<PkResult> p;             // p_1 .. p_kmax
  std::vector<BigInt> R;               // R_1 .. R_kmax
};

// Deterministic driver for the construction; memoizes the p_k chain so the
// monotonicity adjustment (p_1 < p_2 < ...) is stable across calls.
class AppendixContext {
 public:
  explicit AppendixContext(long long d = 2);

  long long field() const { return d_; }
  const PkResult& find_pk(long long k);

  // Element b + c*xi in (alpha, alpha + 1/k) with phi = c in [p, p + p_k],
  // via t = 1 + floor(<alpha - p*xi> / (l*xi - a)), b = floor(alpha - p*xi) - t*a,
  // c = t*l + p.  Requires alpha >= 0.
  MElement find_element(const BigInt& p, const QuadExt& alpha, long long k);

  static BigInt n_l(long long l);  // l + l^3
  BigInt R_k(long long k);         // (2k + p_k + 1) * (1 + sum_{n=0}^{n_k} n_k*(3k)^n)

  // alpha_k = find_element(k*(1 + R_k) + 1, 1/k, k) for k = 1..k_max, plus
  // the base pair beta_1 = gamma_1 = 2.  k_max is capped at 3.
  AppendixSequences build(long long k_max);

 private:
  long long d_;
  QuadExt xi_;
  std::map<long long, PkResult> pk_cache_;
  std::map<long long, BigInt> rk_cache_;
};

// True iff no sum of n elements of sigma (repetition allowed), for any n in
// [n_lo, n_hi], lands in B(l).  Throws BudgetError when the number of
// multisets exceeds `budget`.
bool sum_set_check(const std::vector<MElement>& sigma, long long l, long long n_lo,
                   long long n_hi, unsigned long long budget = 2'000'000);

struct ExampleVTruncation {
  std::vector<Pt> steps;                    // deduplicated, sorted
  std::vector<Pt> a_points;                 // A_i for i = 1..i_max
  std::vector<std::pair<Pt, Pt>> bc_pairs;  // (B_i, C_i) for emitted levels
  long long i_max = 1;
};

// Lattice materialization of the bounded-length step set: A_i = (a_i, b_i)
// read off alpha_i = a_i + b_i*xi, plus B_1 = C_1 = (2, 0).  Levels past 2
// exceed the 64-bit lattice range and raise BudgetError; the inductive
// beta/gamma levels past 1 are outside this module's scope.
ExampleVTruncation example_v_steps(long long i_max, AppendixContext& ctx);

// A lattice point (a, b) with a > R and gamma < b - slope*a < delta, for an
// irrational slope; found by stepping a small positive t = v - slope*u from
// just below the band.  All betweenness checks are exact.
Pt lattice_point_between(const QuadExt& slope, const QuadExt& gamma, const QuadExt& delta,
                         const BigRat& R);

enum class HalfplaneSide { Below, Above };  // below: x*sqrt(d) - y > 0

// Exact sign of the side value of p for the line y = sqrt(d)*x: positive
// means p lies strictly on `side`.
int side_value_sign(Pt p, long long d, HalfplaneSide side);

// A walk of exactly k steps from O to A in which every step lies strictly on
// `side` of the line y = sqrt(d)*x.  Requires A itself strictly on `side`.
Walk construct_irrational_walk(Pt A, long long k, long long d, HalfplaneSide side);

}  // namespace latwalk

#endif  // LATWALK_QUADFIELD_HPP
