// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#include "latwalk/quadfield.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace latwalk {
namespace {

void require_same_field(const QuadExt& x, const QuadExt& y) {
  if (x.d != y.d) throw ValidationError("mixed quadratic fields in arithmetic");
}

void require_valid_d(long long d) {
  if (d < 2) throw ValidationError("field tag d must be a squarefree integer >= 2");
}

int rat_sign(const BigRat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  assert(den > 0);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

// floor(B * sqrt(d)) for integer B; exact because d is squarefree, so
// B^2*d is never a perfect square when B != 0.
BigInt floor_int_sqrt_mult(const BigInt& B, long long d) {
  if (B == 0) return 0;
  const BigInt radicand = B * B * d;
  const BigInt root = boost::multiprecision::sqrt(radicand);
  return B > 0 ? root : -(root + 1);
}

std::int64_t to_int64_checked(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw BudgetError(std::string(what) + " exceeds the 64-bit lattice range");
  return static_cast<std::int64_t>(v);
}

}  // namespace

int QuadExt::sign() const {
  require_valid_d(d);
  int sa = rat_sign(a), sb = rat_sign(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2*d; the larger magnitude wins.
  BigRat lhs = a * a;
  BigRat rhs = b * b * d;
  if (lhs == rhs) return 0;  // impossible for irrational sqrt(d), kept for safety
  return (lhs > rhs) ? sa : sb;
}

BigInt QuadExt::floor() const {
  // Write x = (A + B*sqrt(d)) / Q with integers A, B and Q > 0; then
  // A + floor(B*sqrt(d)) <= Q*x < A + floor(B*sqrt(d)) + 1, so the floor is
  // the floor-quotient of the left end by Q.
  BigInt an = boost::multiprecision::numerator(a);
  BigInt ad = boost::multiprecision::denominator(a);
  BigInt bn = boost::multiprecision::numerator(b);
  BigInt bd = boost::multiprecision::denominator(b);
  BigInt Q = ad * bd;
  BigInt A = an * bd;
  BigInt B = bn * ad;
  return floor_div(A + floor_int_sqrt_mult(B, d), Q);
}

QuadExt QuadExt::frac() const {
  QuadExt f = *this - QuadExt::rational(BigRat(floor()), d);
  assert(f.sign() >= 0 && (f - QuadExt::rational(1, d)).sign() < 0);
  return f;
}

std::string QuadExt::str() const {
  std::string s = a.str();
  if (b != 0) {
    s += (b > 0 ? " + " : " - ");
    BigRat mag = b > 0 ? b : BigRat(-b);
    if (mag != 1) s += mag.str() + "*";
    s += "sqrt(" + std::to_string(d) + ")";
  }
  return s;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  require_same_field(x, y);
  return {x.a + y.a, x.b + y.b, x.d};
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  require_same_field(x, y);
  return {x.a - y.a, x.b - y.b, x.d};
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  require_same_field(x, y);
  return {x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d};
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  require_same_field(x, y);
  BigRat norm = y.a * y.a - y.b * y.b * y.d;
  if (norm == 0) throw ValidationError("division by zero in Q(sqrt(d))");
  QuadExt conj{y.a, -y.b, y.d};
  QuadExt num = x * conj;
  return {num.a / norm, num.b / norm, x.d};
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  require_same_field(x, y);
  return x.a == y.a && x.b == y.b;
}

bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }

int qx_compare(const QuadExt& x, const QuadExt& y) { return (x - y).sign(); }

bool b_set_membership(const MElement& x, long long l) {
  if (l < 1) throw ValidationError("window parameter l must be positive");
  if (x.b > l - 1 || x.b < -(l - 1)) return false;
  QuadExt v = x.value();
  return v.sign() >= 0 && (v - QuadExt::rational(l, x.d)).sign() < 0;
}

AppendixContext::AppendixContext(long long d) : d_(d), xi_(QuadExt::sqrt_d(d)) {
  require_valid_d(d);
}

const PkResult& AppendixContext::find_pk(long long k) {
  if (k < 1) throw ValidationError("index k must be positive");
  auto it = pk_cache_.find(k);
  if (it != pk_cache_.end()) return it->second;

  // Smallest l >= 1 with 0 < l*xi - a < 1/k for a = floor(l*xi); guaranteed
  // to exist by the pigeonhole argument on multiples of xi.
  PkResult r;
  QuadExt inv_k = QuadExt::rational(BigRat(1, k), d_);
  for (BigInt l = 1;; ++l) {
    BigInt a = (QuadExt{0, BigRat(l), d_}).floor();
    QuadExt gap = QuadExt{BigRat(-a), BigRat(l), d_};  // l*xi - a, in (0, 1)
    if (qx_compare(gap, inv_k) < 0) {
      r.l = l;
      r.a = a;
      QuadExt bound = QuadExt::rational(BigRat(l), d_) +
                      QuadExt::rational(BigRat(l), d_) / gap;  // l*(1 + 1/(l*xi - a))
      r.p = bound.floor() + 1;
      break;
    }
  }
  // Keep the chain strictly increasing.
  if (k > 1) {
    const PkResult& prev = find_pk(k - 1);
    if (r.p <= prev.p) r.p = prev.p + 1;
  }
  return pk_cache_.emplace(k, std::move(r)).first->second;
}

MElement AppendixContext::find_element(const BigInt& p, const QuadExt& alpha, long long k) {
  if (alpha.d != d_) throw ValidationError("mixed quadratic fields in arithmetic");
  if (alpha.sign() < 0) throw ValidationError("interval base must be nonnegative");
  const PkResult& pk = find_pk(k);
  QuadExt gap = QuadExt{BigRat(-pk.a), BigRat(pk.l), d_};  // l*xi - a

  QuadExt shifted = alpha - QuadExt{0, BigRat(p), d_};  // alpha - p*xi
  BigInt fl = shifted.floor();
  QuadExt fr = shifted - QuadExt::rational(BigRat(fl), d_);
  BigInt t = (fr / gap).floor() + 1;
  MElement out{fl - t * pk.a, t * pk.l + p, d_};

  // Replay both guarantees exactly: the interval form of the difference and
  // the phi range.
  QuadExt diff = out.value() - alpha;
  QuadExt residual = QuadExt::rational(BigRat(t), d_) * gap - fr;
  LATWALK_CHECK(qx_compare(diff, residual) == 0, "element finder residual mismatch");
  LATWALK_CHECK(diff.sign() > 0, "element finder left endpoint violated");
  LATWALK_CHECK(qx_compare(diff, QuadExt::rational(BigRat(1, k), d_)) < 0,
                "element finder right endpoint violated");
  LATWALK_CHECK(out.b >= p && out.b <= p + pk.p, "element finder phi range violated");
  return out;
}

BigInt AppendixContext::n_l(long long l) { return BigInt(l) + BigInt(l) * l * l; }

BigInt AppendixContext::R_k(long long k) {
  auto it = rk_cache_.find(k);
  if (it != rk_cache_.end()) return it->second;
  const PkResult& pk = find_pk(k);
  BigInt nk = n_l(k);
  BigInt sum = 0;
  BigInt power = 1;  // (3k)^n
  for (BigInt n = 0; n <= nk; ++n) {
    sum += nk * power;
    power *= 3 * k;
  }
  BigInt r = (2 * k + pk.p + 1) * (1 + sum);
  rk_cache_[k] = r;
  return r;
}

AppendixSequences AppendixContext::build(long long k_max) {
  if (k_max < 1) throw ValidationError("k_max must be positive");
  if (k_max > 3) throw BudgetError("k_max beyond 3 exceeds the construction's work budget");
  AppendixSequences seq;
  seq.d = d_;
  seq.beta1 = MElement{2, 0, d_};
  seq.gamma1 = MElement{2, 0, d_};
  for (long long k = 1; k <= k_max; ++k) {
    BigInt R = R_k(k);
    BigInt p = k * (1 + R) + 1;
    MElement alpha = find_element(p, QuadExt::rational(BigRat(1, k), d_), k);
    // Carried invariants: alpha_k in (1/k, 2/k) and phi(alpha_k) > k*(1+R_k).
    LATWALK_CHECK(qx_compare(alpha.value(), QuadExt::rational(BigRat(1, k), d_)) > 0,
                  "alpha_k below its interval");
    LATWALK_CHECK(qx_compare(alpha.value(), QuadExt::rational(BigRat(2, k), d_)) < 0,
                  "alpha_k above its interval");
    LATWALK_CHECK(alpha.phi() > k * (1 + R), "alpha_k coefficient bound violated");
    seq.alphas.push_back(std::move(alpha));
    seq.p.push_back(find_pk(k));
    seq.R.push_back(std::move(R));
  }
  return seq;
}

namespace {

bool sum_set_scan(const std::vector<MElement>& sigma, std::size_t from, long long remaining,
                  MElement acc, long long l, unsigned long long& work,
                  unsigned long long budget) {
  if (remaining == 0) return !b_set_membership(acc, l);
  for (std::size_t i = from; i < sigma.size(); ++i) {
    if (++work > budget) throw BudgetError("sum-set enumeration exceeds work budget");
    if (!sum_set_scan(sigma, i, remaining - 1, acc + sigma[i], l, work, budget)) return false;
  }
  return true;
}

}  // namespace

bool sum_set_check(const std::vector<MElement>& sigma, long long l, long long n_lo,
                   long long n_hi, unsigned long long budget) {
  if (sigma.empty()) throw ValidationError("sum-set check requires a nonempty collection");
  if (n_lo < 1 || n_hi < n_lo) throw ValidationError("invalid sum-length range");
  std::vector<MElement> unique;
  for (const MElement& m : sigma) {
    bool seen = false;
    for (const MElement& u : unique) seen = seen || u == m;
    if (!seen) unique.push_back(m);
  }
  unsigned long long work = 0;
  for (long long n = n_lo; n <= n_hi; ++n) {
    if (!sum_set_scan(unique, 0, n, MElement{0, 0, unique[0].d}, l, work, budget))
      return false;
  }
  return true;
}

ExampleVTruncation example_v_steps(long long i_max, AppendixContext& ctx) {
  if (i_max < 1) throw ValidationError("i_max must be positive");
  if (i_max > 2)
    throw BudgetError("alpha coefficients beyond level 2 exceed the 64-bit lattice range");
  AppendixSequences seq = ctx.build(i_max);
  ExampleVTruncation out;
  out.i_max = i_max;
  for (const MElement& alpha : seq.alphas) {
    Pt A{to_int64_checked(alpha.a, "alpha coefficient"),
         to_int64_checked(alpha.b, "alpha coefficient")};
    out.a_points.push_back(A);
    out.steps.push_back(A);
  }
  Pt b1{2, 0};
  out.bc_pairs.emplace_back(b1, b1);
  out.steps.push_back(b1);
  std::sort(out.steps.begin(), out.steps.end());
  out.steps.erase(std::unique(out.steps.begin(), out.steps.end()), out.steps.end());
  for (const auto& [b, c] : out.bc_pairs)
    LATWALK_CHECK(b + c == (Pt{4, 0}), "level pair does not sum to (4,0)");
  return out;
}

Pt lattice_point_between(const QuadExt& slope, const QuadExt& gamma, const QuadExt& delta,
                         const BigRat& R) {
  if (slope.b == 0) throw ValidationError("slope must be irrational");
  if (qx_compare(gamma, delta) >= 0) throw ValidationError("band must satisfy gamma < delta");
  long long d = slope.d;
  QuadExt one = QuadExt::rational(1, d);
  QuadExt width = delta - gamma;
  QuadExt theta = (qx_compare(width, one) < 0 ? width : one) * QuadExt::rational(BigRat(1, 2), d);

  // Small positive t = v - slope*u with u > 0: scan u upward and take the
  // first ceiling residual below theta.
  BigInt u = 0;
  BigInt v = 0;
  QuadExt t;
  for (BigInt l = 1;; ++l) {
    QuadExt ls = slope * QuadExt::rational(BigRat(l), d);
    BigInt vl = ls.floor() + 1;
    QuadExt res = QuadExt::rational(BigRat(vl), d) - ls;  // in (0, 1)
    if (qx_compare(res, theta) < 0) {
      u = l;
      v = vl;
      t = res;
      break;
    }
  }

  // Start just below the band at an abscissa beyond R, then step by t until
  // the value first exceeds gamma; one step of size t < delta - gamma cannot
  // overshoot delta.
  BigInt a0 = (QuadExt{R, 0, d}).floor() + 1;
  QuadExt target = slope * QuadExt::rational(BigRat(a0), d) + gamma;
  BigInt b0 = target.floor();
  QuadExt s0 = QuadExt::rational(BigRat(b0), d) - slope * QuadExt::rational(BigRat(a0), d);
  BigInt m = ((gamma - s0) / t).floor() + 1;
  assert(m >= 1);

  BigInt ax = a0 + m * u;
  BigInt by = b0 + m * v;
  Pt out{to_int64_checked(ax, "lattice point abscissa"),
         to_int64_checked(by, "lattice point ordinate")};
  QuadExt val = QuadExt::rational(BigRat(by), d) - slope * QuadExt::rational(BigRat(ax), d);
  LATWALK_CHECK(qx_compare(val, gamma) > 0 && qx_compare(val, delta) < 0,
                "constructed point misses the band");
  LATWALK_CHECK(BigRat(ax) > R, "constructed point does not clear the abscissa bound");
  return out;
}

int side_value_sign(Pt p, long long d, HalfplaneSide side) {
  require_valid_d(d);
  QuadExt val{BigRat(-p.y), BigRat(p.x), d};  // x*sqrt(d) - y
  int s = val.sign();
  return side == HalfplaneSide::Below ? s : -s;
}

Walk construct_irrational_walk(Pt A, long long k, long long d, HalfplaneSide side) {
  if (k < 1) throw ValidationError("walk length must be positive");
  if (side_value_sign(A, d, side) <= 0)
    throw ValidationError("target must lie strictly on the requested side");

  QuadExt slope = QuadExt::sqrt_d(d);
  // Signed band value of a point, positive on the requested side.
  auto value_of = [&](Pt p) {
    QuadExt v{BigRat(-p.y), BigRat(p.x), d};  // x*sqrt(d) - y
    return side == HalfplaneSide::Below ? v : -v;
  };

  QuadExt tA = value_of(A);
  QuadExt w = tA * QuadExt::rational(BigRat(1, 4 * k), d);

  std::vector<Pt> anchors;
  anchors.push_back(kOrigin);
  for (long long i = 1; i < k; ++i) {
    QuadExt center = tA * QuadExt::rational(BigRat(i, k), d);
    // lattice_point_between works with s = b - slope*a = -(x*sqrt(d) - y);
    // translate the band accordingly for the below side.
    QuadExt lo, hi;
    if (side == HalfplaneSide::Below) {
      lo = -(center + w);
      hi = -(center - w);
    } else {
      lo = center - w;
      hi = center + w;
    }
    Pt p = lattice_point_between(slope, lo, hi, BigRat(anchors.back().x));
    anchors.push_back(p);
  }
  anchors.push_back(A);

  Walk walk;
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    Pt step = anchors[i] - anchors[i - 1];
    LATWALK_CHECK(side_value_sign(step, d, side) > 0, "step crosses the dividing line");
    walk.push_back(step);
  }
  LATWALK_CHECK(walk_endpoint(walk) == A, "constructed walk misses its target");
  LATWALK_CHECK(static_cast<long long>(walk.size()) == k, "constructed walk has wrong length");
  return walk;
}

}  // namespace latwalk
