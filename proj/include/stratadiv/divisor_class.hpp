#pragma once

/**
 * @file divisor_class.hpp
 * @brief The divisor-class value type: lambda and boundary coefficients.
 *
 * A class is recorded by its coefficient c_lambda on the Hodge class and
 * coefficients c_delta[0..floor(g/2)] on the boundary divisors delta_i.
 */

#include <stratadiv/rational.hpp>

#include <string_view>
#include <vector>

namespace stratadiv {

enum class ComponentLabel { full, even, odd, hyperelliptic, non_hyperelliptic };

inline std::string_view to_string(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::full: return "full";
    case ComponentLabel::even: return "even";
    case ComponentLabel::odd: return "odd";
    case ComponentLabel::hyperelliptic: return "hyperelliptic";
    case ComponentLabel::non_hyperelliptic: return "non_hyperelliptic";
  }
  return "unknown";
}

struct DivisorClass {
  int genus = 0;
  ComponentLabel component = ComponentLabel::full;
  Rational c_lambda;
  std::vector<Rational> c_delta;  // indices 0..floor(genus/2)

  /// Number of boundary coefficients, floor(g/2) + 1.
  int delta_count() const noexcept { return static_cast<int>(c_delta.size()); }
};

inline bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.genus == b.genus && a.component == b.component &&
         a.c_lambda == b.c_lambda && a.c_delta == b.c_delta;
}
inline bool operator!=(const DivisorClass& a, const DivisorClass& b) {
  return !(a == b);
}

}  // namespace stratadiv
