#pragma once

/**
 * @file classes.hpp
 * @brief Assembly of divisor classes from test-curve intersection numbers.
 *
 * The full class of D_kappa is solved from the linear relations the test
 * curves impose on (c_lambda, c_delta[0..g/2]).  For the three signatures
 * with known component decompositions the spin/hyperelliptic component
 * classes are produced as well.
 */

#include <stratadiv/divisor_class.hpp>
#include <stratadiv/test_curves.hpp>

#include <stdexcept>
#include <vector>

namespace stratadiv {

/// Full-component class of D_kappa:
///   c_1 = -C_1 / (2(g-1)-2)
///   c_i = -C_i / (2(g-i)-2)          for i = 2..floor(g/2)
///   c_0 = -(B + C_1/(2(g-2))) / (2(g-1))
///   c_lambda = c_1 - 12 c_0
inline DivisorClass divisor_class(const Signature& sig) {
  const int g = sig.genus();
  const Integer C1 = intersect_C(sig, 1);
  const Integer B = intersect_B(sig);

  DivisorClass dc;
  dc.genus = g;
  dc.component = ComponentLabel::full;
  dc.c_delta.resize(static_cast<size_t>(g / 2) + 1);

  Rational c1(-C1, 2 * (g - 1) - 2);
  Rational c0 = Rational(Integer(-1), 2 * (g - 1)) *
                (Rational(B) + Rational(C1, 2 * (g - 2)));
  dc.c_delta[0] = c0;
  dc.c_delta[1] = c1;
  for (int i = 2; i <= g / 2; ++i)
    dc.c_delta[static_cast<size_t>(i)] = Rational(-intersect_C(sig, i), 2 * (g - i) - 2);
  dc.c_lambda = c1 - Rational(12) * c0;

  if (dc.c_lambda + Rational(12) * dc.c_delta[0] - dc.c_delta[1] != Rational(0))
    throw std::logic_error("divisor_class: fiber-pencil relation violated");
  return dc;
}

namespace detail {

inline DivisorClass make_class(int g, ComponentLabel label, Rational c_lambda,
                               std::vector<Rational> c_delta) {
  DivisorClass dc;
  dc.genus = g;
  dc.component = label;
  dc.c_lambda = std::move(c_lambda);
  dc.c_delta = std::move(c_delta);
  return dc;
}

/// Even spin component of D_(4,2^(g-3)):
///   c_lambda = 2^(g-1) (2^g+1)(g-1)(g-3)!,  c_0 = -2^(2g-4) (g-1)(g-3)!,
///   c_i = -2^(g-1) (2^(g-i)-1)(2^i-1)(g-1)(g-3)!.
inline DivisorClass split_even_class(int g) {
  const Integer base = Integer(g - 1) * factorial(g - 3);
  std::vector<Rational> cs(static_cast<size_t>(g / 2) + 1);
  cs[0] = Rational(-pow2(2 * g - 4) * base);
  for (int i = 1; i <= g / 2; ++i)
    cs[static_cast<size_t>(i)] =
        Rational(-pow2(g - 1) * (pow2(g - i) - 1) * (pow2(i) - 1) * base);
  return make_class(g, ComponentLabel::even,
                    Rational(pow2(g - 1) * (pow2(g) + 1) * base), std::move(cs));
}

/// Odd spin component of D_(4,2^(g-3)):
///   c_lambda = 2^(g-1) (2^g-1)(g+8)(g-3)!,
///   c_0 = -2^(g-4) ((g+6) 2^g - 8)(g-3)!,
///   c_i = -2^(g-i-1) ((2^i-1)(2^g+2^i) g + 2 (2^g-2^(2i)) i)(g-3)!.
inline DivisorClass split_odd_class(int g) {
  const Integer fac = factorial(g - 3);
  std::vector<Rational> cs(static_cast<size_t>(g / 2) + 1);
  cs[0] = Rational(-pow2(g - 4) * ((Integer(g) + 6) * pow2(g) - 8) * fac);
  for (int i = 1; i <= g / 2; ++i)
    cs[static_cast<size_t>(i)] = Rational(
        -pow2(g - i - 1) *
        ((pow2(i) - 1) * (pow2(g) + pow2(i)) * g + 2 * (pow2(g) - pow2(2 * i)) * i) *
        fac);
  return make_class(g, ComponentLabel::odd,
                    Rational(pow2(g - 1) * (pow2(g) - 1) * (Integer(g) + 8) * fac),
                    std::move(cs));
}

}  // namespace detail

/// Component classes of D_kappa, with a flag saying whether the component
/// decomposition is one of the resolved cases.
struct ComponentClasses {
  std::vector<DivisorClass> classes;
  bool decomposition_known = false;
};

/// Component decomposition:
///   (4) at g=3           -> hyperelliptic 8*(9,-1,-3) and odd (308,-32,-76)
///   (3,3) at g=4         -> a single non-hyperelliptic class (= the full class)
///   (4,2^(g-3)) at g>=4  -> even and odd spin classes from the closed forms
///   anything else        -> the full class, decomposition_known=false
inline ComponentClasses component_classes(const Signature& sig) {
  const int g = sig.genus();
  ComponentClasses out;

  if (g == 3 && sig.parts() == std::vector<int>{4}) {
    out.classes.push_back(detail::make_class(
        3, ComponentLabel::hyperelliptic, Rational(72),
        {Rational(-8), Rational(-24)}));
    out.classes.push_back(detail::make_class(
        3, ComponentLabel::odd, Rational(308), {Rational(-32), Rational(-76)}));
    out.decomposition_known = true;
    return out;
  }
  if (g == 4 && sig.parts() == std::vector<int>{3, 3}) {
    DivisorClass dc = divisor_class(sig);
    dc.component = ComponentLabel::non_hyperelliptic;
    out.classes.push_back(std::move(dc));
    out.decomposition_known = true;
    return out;
  }
  if (g >= 4 && sig == detail::split_signature(g)) {
    out.classes.push_back(detail::split_even_class(g));
    out.classes.push_back(detail::split_odd_class(g));
    out.decomposition_known = true;
    return out;
  }

  out.classes.push_back(divisor_class(sig));
  out.decomposition_known = false;
  return out;
}

}  // namespace stratadiv
