#pragma once

/**
 * @file slope.hpp
 * @brief Slope statistics of divisor classes.
 *
 * Two slopes are attached to a class:  s0 = c_lambda / (-c_0)  and
 * s = c_lambda / min_i(-c_i), the min taken over every boundary coefficient
 * including i=0.  For full classes s0 is recomputed along an independent
 * closed-form route from the raw aggregates A and B and the two values are
 * asserted equal.
 */

#include <stratadiv/classes.hpp>

#include <optional>
#include <stdexcept>

namespace stratadiv {

/// Aggregate A: the single-node count 4 (g-1)! prod k_i^2
///   + sum_{k_i >= 3} (k_i^2 - k_i) dj(g-1, [k_i - 2, other parts]).
/// Kept as its own pipeline, separate from the general curve formula.
inline Integer slope_aggregate_A(const Signature& sig) {
  const int g = sig.genus();
  const auto& parts = sig.parts();
  Integer total = 4 * factorial(g - 1);
  for (int k : parts) total *= Integer(k) * k;
  for (int i = 0; i < sig.size(); ++i) {
    const int ki = parts[static_cast<size_t>(i)];
    if (ki < 3) continue;
    std::vector<int> rest = detail::drop_index(parts, i);
    std::vector<int> orders(1 + rest.size());
    orders[0] = ki - 2;
    std::copy(rest.begin(), rest.end(), orders.begin() + 1);
    total += (Integer(ki) * ki - ki) * dj(g - 1, orders);
  }
  return total;
}

/// Aggregate B coincides with the elliptic-tail intersection number.
inline Integer slope_aggregate_B(const Signature& sig) { return intersect_B(sig); }

struct SlopeReport {
  Rational s0;  // c_lambda / (-c_0)
  Rational s;   // c_lambda / min_i(-c_i)
  bool s_equals_s0 = false;
  // Closed-form route, present for full classes when the signature is given.
  std::optional<Integer> aggregate_A;
  std::optional<Integer> aggregate_B;
  std::optional<Rational> s0_closed;
};

/// Coefficient-route slopes.  Throws Error(ZeroC0) when c_0 = 0 and
/// Error(NoPositiveDenominator) when no -c_i is positive.
inline SlopeReport slope_report(const DivisorClass& dc) {
  if (dc.c_delta.empty() || dc.c_delta[0].is_zero())
    throw Error(Error::Kind::ZeroC0, "slope undefined: c_0 = 0");

  std::optional<Rational> min_neg;
  for (const Rational& c : dc.c_delta) {
    Rational neg = -c;
    if (!min_neg || neg < *min_neg) min_neg = neg;
  }
  if (*min_neg <= Rational(0))
    throw Error(Error::Kind::NoPositiveDenominator,
                "slope undefined: no boundary coefficient with -c_i > 0");

  SlopeReport rep;
  rep.s0 = dc.c_lambda / (-dc.c_delta[0]);
  rep.s = dc.c_lambda / *min_neg;
  rep.s_equals_s0 = (rep.s == rep.s0);
  // min_i(-c_i) <= -c_0 with both positive, so s can only exceed or equal s0
  if (rep.s < rep.s0)
    throw std::logic_error("slope_report: s below s0, coefficient data corrupt");
  return rep;
}

/// Full-class slopes plus the closed-form route
///   s0 = 12 - (2g-2) / (1 + 2(g-2) B/A),
/// asserted to agree exactly with the coefficient route.
inline SlopeReport slope_report(const DivisorClass& dc, const Signature& sig) {
  if (dc.component != ComponentLabel::full)
    throw std::logic_error("closed-form slope route needs a full-component class");
  if (dc.genus != sig.genus())
    throw std::logic_error("slope_report: class and signature genus differ");

  SlopeReport rep = slope_report(dc);
  const int g = sig.genus();
  Integer A = slope_aggregate_A(sig);
  Integer B = slope_aggregate_B(sig);
  Rational closed = Rational(12) - Rational(Integer(2 * g - 2)) /
                                       (Rational(1) + Rational(Integer(2 * (g - 2)) * B, A));
  if (closed != rep.s0)
    throw std::logic_error("slope_report: closed-form route disagrees with coefficients");
  rep.aggregate_A = std::move(A);
  rep.aggregate_B = std::move(B);
  rep.s0_closed = std::move(closed);
  return rep;
}

/// s0 of the even spin component of D_(4,2^(g-3)):  8 + 1/2^(g-3).
inline Rational slope_closed_even(int g) {
  if (g < 4)
    throw Error(Error::Kind::BadGenus,
                "even-component slope needs genus >= 4, got " + std::to_string(g));
  return Rational(8) + Rational(Integer(1), pow2(g - 3));
}

/// s0 of the odd spin component:  8 + (2^(g+1) - g) / (2^(g-3) (g+6) - 1).
inline Rational slope_closed_odd(int g) {
  if (g < 4)
    throw Error(Error::Kind::BadGenus,
                "odd-component slope needs genus >= 4, got " + std::to_string(g));
  return Rational(8) + Rational(pow2(g + 1) - g, pow2(g - 3) * (Integer(g) + 6) - 1);
}

/// s0 of D_(g+1,1^(g-3)):  3 (3g^2 + 3g + 2) / (g (g+1)).
inline Rational slope_diaz(int g) {
  if (g < 4)
    throw Error(Error::Kind::BadGenus,
                "this slope form needs genus >= 4, got " + std::to_string(g));
  return Rational(Integer(3) * (Integer(3) * g * g + 3 * g + 2), Integer(g) * (g + 1));
}

}  // namespace stratadiv
