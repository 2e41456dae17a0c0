// formulas.hpp
// Closed-form values and bounds: balance and omnitonality numbers for
// stars, paths and K_4, the tree bounds, the Kovari-Sos-Turan and
// Zarankiewicz upper bounds, and the phi(n,t) quantity built from them
// via a diagonal Ramsey table.
//
// Integral formulas are evaluated in exact rational arithmetic and
// asserted integral before an integer is returned; validity thresholds
// are checked exactly as well. Out-of-threshold queries still return the
// formula value, flagged invalid, so the oracle can probe where the
// formulas start being correct.

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tonal {

namespace detail {

struct Rat {
  long long num = 0;
  long long den = 1;

  Rat(long long n = 0, long long d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  Rat operator+(Rat o) const { return Rat(num * o.den + o.num * den, den * o.den); }
  Rat operator-(Rat o) const { return Rat(num * o.den - o.num * den, den * o.den); }
  Rat operator*(Rat o) const { return Rat(num * o.num, den * o.den); }
  bool operator<(Rat o) const { return num * o.den < o.num * den; }
  bool operator>=(Rat o) const { return !(*this < o); }
  bool integral() const { return den == 1; }
  double real() const { return double(num) / double(den); }
};

}  // namespace detail

enum class Exactness { exact, upper_bound };

struct FormulaValue {
  bool is_integral = false;
  long long value_int = 0;   // meaningful when is_integral
  double value_real = 0.0;   // always set
  bool valid = true;         // the theorem's hypotheses on (n, k) hold
  std::string threshold;     // the failing hypothesis when !valid
  Exactness exactness = Exactness::exact;
  std::vector<std::string> notes;
};

namespace detail {

inline FormulaValue from_rat(Rat r, bool valid, std::string threshold,
                             Exactness ex) {
  FormulaValue v;
  v.is_integral = r.integral();
  v.value_int = r.integral() ? r.num : 0;
  v.value_real = r.real();
  v.valid = valid;
  if (!valid) v.threshold = std::move(threshold);
  v.exactness = ex;
  return v;
}

inline FormulaValue exact_int(Rat r, bool valid, std::string threshold) {
  if (!r.integral())
    throw std::logic_error("formula evaluated to a non-integer");
  return from_rat(r, valid, std::move(threshold), Exactness::exact);
}

}  // namespace detail

// bal(n, K_{1,k}) = ((k-2)/2) n - k^2/8 + k/4, valid for n >= max{3, k^2/4 + 1}.
inline FormulaValue bal_star(long long n, long long k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("bal_star: only even k >= 2 is covered");
  using detail::Rat;
  Rat value = Rat(k - 2, 2) * Rat(n) - Rat(k * k, 8) + Rat(k, 4);
  bool valid = n >= 3 && Rat(n) >= Rat(k * k, 4) + Rat(1);
  return detail::exact_int(value, valid, "n >= max{3, k^2/4 + 1}");
}

// bal(n, P_k) branches on k mod 4, valid for n >= (9/32)k^2 + k/4 + 1.
inline FormulaValue bal_path(long long n, long long k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("bal_path: only even k >= 2 is covered");
  using detail::Rat;
  Rat value = k % 4 == 2
                  ? Rat(k - 2, 4) * Rat(n) - Rat(k * k, 32) + Rat(1, 8)
                  : Rat(k - 4, 4) * Rat(n) - Rat(k * k, 32) + Rat(k, 8) + Rat(1);
  bool valid = Rat(n) >= Rat(9 * k * k, 32) + Rat(k, 4) + Rat(1);
  return detail::exact_int(value, valid, "n >= (9/32)k^2 + k/4 + 1");
}

// bal(n, K_4) = n when n = 0 mod 4, else n - 1. The n >= 5 threshold is
// inherited from the source of the K_4 value and unverified above the
// oracle range.
inline FormulaValue bal_K4(long long n) {
  detail::Rat value(n % 4 == 0 ? n : n - 1);
  return detail::exact_int(value, n >= 5, "n >= 5 (inherited threshold)");
}

// ot(n, K_{1,k}): floor((k-1)n/2) for k <= 3, else (k-2)n - k^2/2 + 3k/2 - 1;
// valid for n >= 4k.
inline FormulaValue ot_star(long long n, long long k) {
  if (k < 1) throw std::invalid_argument("ot_star: need k >= 1");
  using detail::Rat;
  Rat value = k <= 3 ? Rat((k - 1) * n / 2)
                     : Rat(k - 2) * Rat(n) - Rat(k * k, 2) + Rat(3 * k, 2) - Rat(1);
  return detail::exact_int(value, n >= 4 * k, "n >= 4k");
}

// ot(n, T) <= (k-1)n for every tree T on k edges; also bounds bal(n, T).
inline FormulaValue ot_tree_bound(long long n, long long k) {
  if (k < 1) throw std::invalid_argument("ot_tree_bound: need k >= 1");
  return detail::from_rat(detail::Rat((k - 1) * n), n >= 4 * k, "n >= 4k",
                          Exactness::upper_bound);
}

// ot(n, P_k) = ex(n, P_k) <= (k-1)n/2 (Erdos-Gallai).
inline FormulaValue erdos_gallai_path_bound(long long n, long long k) {
  if (k < 1) throw std::invalid_argument("erdos_gallai_path_bound: need k >= 1");
  return detail::from_rat(detail::Rat((k - 1) * n, 2), true, "",
                          Exactness::upper_bound);
}

// ex(n, K_{t,t}) < ((t-1)^{1/t} n^{2-1/t} + (t-1)n/2) / 2; strict bound,
// evaluated in floating point. t = 1 annihilates both terms.
inline FormulaValue kst_bound(long long n, long long t) {
  if (t < 1 || n < 1) throw std::invalid_argument("kst_bound: need n, t >= 1");
  double td = double(t), nd = double(n);
  double value = 0.5 * (std::pow(td - 1, 1.0 / td) * std::pow(nd, 2.0 - 1.0 / td) +
                        0.5 * (td - 1) * nd);
  FormulaValue v;
  v.value_real = value;
  v.exactness = Exactness::upper_bound;
  return v;
}

// z(n, t) < (t-1)^{1/t} n^{2-1/t} + (t-1)n/2, i.e. exactly twice kst_bound.
inline FormulaValue zarankiewicz_bound(long long n, long long t) {
  FormulaValue v = kst_bound(n, t);
  v.value_real *= 2;
  return v;
}

// Least q >= t with (t-1)^{1/t} (2q)^{2-1/t} + (t-1)q + 1 <= 2q^2. The left
// side is o(q^2), so the search terminates.
inline long long rtz_q(long long t) {
  if (t < 1) throw std::invalid_argument("rtz_q: need t >= 1");
  double td = double(t);
  for (long long q = t;; ++q) {
    double lhs = std::pow(td - 1, 1.0 / td) * std::pow(2.0 * double(q), 2.0 - 1.0 / td) +
                 (td - 1) * double(q) + 1.0;
    if (lhs <= 2.0 * double(q) * double(q)) return q;
  }
}

// Diagonal Ramsey table used by rtz_phi. R(q,q) is exact for q <= 4;
// entries 5..10 are the published survey upper bounds; beyond that the
// binomial bound C(2q-2, q-1) applies. Values as doubles since large
// entries exceed 64 bits.
struct RamseyEntry {
  double value;
  bool exact;
  std::string note;
};

inline RamseyEntry diagonal_ramsey(long long q) {
  static const struct { long long v; bool exact; } table[] = {
      {1, true},     // R(1,1)
      {2, true},     // R(2,2)
      {6, true},     // R(3,3)
      {18, true},    // R(4,4)
      {48, false},   // R(5,5) <= 48
      {165, false},  // R(6,6) <= 165
      {540, false},  // R(7,7) <= 540
      {1870, false}, // R(8,8) <= 1870
      {6588, false}, // R(9,9) <= 6588
      {23556, false} // R(10,10) <= 23556
  };
  if (q < 1) throw std::invalid_argument("diagonal_ramsey: need q >= 1");
  if (q <= 10) {
    auto e = table[q - 1];
    std::string note = "R(" + std::to_string(q) + "," + std::to_string(q) +
                       (e.exact ? ")=" : ")<=") + std::to_string(e.v) +
                       (e.exact ? " exact" : " survey bound");
    return {double(e.v), e.exact, note};
  }
  double value = 1.0;  // C(2q-2, q-1)
  for (long long i = 1; i <= q - 1; ++i)
    value = value * double(q - 1 + i) / double(i);
  return {value, false,
          "R(" + std::to_string(q) + "," + std::to_string(q) +
              ")<=C(2q-2,q-1) binomial bound"};
}

// phi(n,t) = ex(n, K_{m,m}) + m(m-1) + 2m(n-2m) + 1 with m = R(q,q) for
// q = rtz_q(t); the ex term is replaced by its kst upper bound, so the
// result is an upper bound throughout.
inline FormulaValue rtz_phi(long long n, long long t) {
  if (t < 1 || n < 1) throw std::invalid_argument("rtz_phi: need n, t >= 1");
  long long q = rtz_q(t);
  RamseyEntry m = diagonal_ramsey(q);
  double md = m.value;
  double ex_mm = 0.5 * (std::pow(md - 1, 1.0 / md) * std::pow(double(n), 2.0 - 1.0 / md) +
                        0.5 * (md - 1) * double(n));
  double value = ex_mm + md * (md - 1) + 2 * md * (double(n) - 2 * md) + 1;
  FormulaValue v;
  v.value_real = value;
  v.exactness = Exactness::upper_bound;
  v.notes.push_back("q=" + std::to_string(q));
  v.notes.push_back(m.note);
  return v;
}

// The forced (r, b) pattern of a zero-sum copy under {-p, q} weights:
// r = p e / (p+q), b = q e / (p+q), with -q r + p b = 0.
struct ZeroSumPattern {
  long long r;
  long long b;
};

inline ZeroSumPattern zero_sum_pattern(long long p, long long q, long long e) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw std::invalid_argument("zero_sum_pattern: need positive coprime p, q");
  if (e % (p + q) != 0)
    throw std::invalid_argument("zero_sum_pattern: e(G) mod (p+q) = " +
                                std::to_string(e % (p + q)) + ", need 0");
  ZeroSumPattern z{p * e / (p + q), q * e / (p + q)};
  if (-q * z.r + p * z.b != 0)
    throw std::logic_error("zero_sum_pattern: zero-sum identity failed");
  return z;
}

}  // namespace tonal
