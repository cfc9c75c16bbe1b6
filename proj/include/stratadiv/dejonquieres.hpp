#pragma once

/**
 * @file dejonquieres.hpp
 * @brief de Jonquieres counts and the Picard-degree normalization.
 *
 * dj(g, {k_1..k_rho}) counts, with multiplicity, the divisors in a general
 * linear series on a genus-g curve whose zero orders at rho chosen points are
 * k_1..k_rho.  It evaluates the alternating-sum polynomial formula
 *
 *   (g! / (g-rho-1)!) * (prod k_i) *
 *       ( sum_{j=0}^{rho-1} (-1)^j / (g-rho+j) * S_j  +  (-1)^rho / g )
 *
 * where S_j sums, over all j-element subsets I of {1..rho}, the product of
 * the orders outside I.  The result is asserted to be an integer.
 */

#include <stratadiv/error.hpp>
#include <stratadiv/rational.hpp>

#include <string>
#include <vector>

namespace stratadiv {

/// Validated argument pack for dj().
struct DJArgs {
  int genus;
  std::vector<int> orders;

  DJArgs(int genus_in, std::vector<int> orders_in)
      : genus(genus_in), orders(std::move(orders_in)) {
    if (genus < 1)
      throw Error(Error::Kind::BadGenus,
                  "dj genus must be at least 1, got " + std::to_string(genus));
    if (static_cast<int>(orders.size()) > genus - 1)
      throw Error(Error::Kind::BadArity,
                  "dj takes at most genus-1 orders, got " +
                      std::to_string(orders.size()) + " for genus " +
                      std::to_string(genus));
    for (int k : orders)
      if (k < 0)
        throw Error(Error::Kind::BadOrder,
                    "dj orders must be nonnegative, got " + std::to_string(k));
  }
};

inline Integer dj(const DJArgs& args) {
  const int g = args.genus;
  const int rho = static_cast<int>(args.orders.size());

  // S_j equals the elementary symmetric polynomial e_{rho-j} of the orders;
  // build all e_t with the one-pass recurrence instead of subset enumeration.
  std::vector<Integer> e(static_cast<size_t>(rho) + 1);
  e[0] = 1;
  int filled = 0;
  for (int k : args.orders) {
    ++filled;
    for (int t = filled; t >= 1; --t) e[t] = e[t] + Integer(k) * e[t - 1];
  }

  Rational inner;
  for (int j = 0; j < rho; ++j) {
    Rational term(e[static_cast<size_t>(rho - j)], g - rho + j);
    inner += (j % 2 == 0) ? term : -term;
  }
  Rational tail(Integer(1), g);
  inner += (rho % 2 == 0) ? tail : -tail;

  Integer prefix = falling_factorial(g, rho + 1);  // g!/(g-rho-1)!
  for (int k : args.orders) prefix *= k;

  Rational value = Rational(prefix) * inner;
  if (!value.is_integer())
    throw Error(Error::Kind::NonIntegerResult,
                "dj evaluated to the non-integer " + value.str());
  return value.numerator();
}

inline Integer dj(int genus, const std::vector<int>& orders) {
  return dj(DJArgs(genus, orders));
}

/// Closed form of dj(g-1, {2,...,2}) with g-2 twos:  (g-2)! 2^(g-2) (2^(g-1)-1).
inline Integer dj_closed_all_twos(int g) {
  if (g < 3)
    throw Error(Error::Kind::BadGenus,
                "closed all-twos form needs genus >= 3, got " + std::to_string(g));
  return factorial(g - 2) * pow2(g - 2) * (pow2(g - 1) - 1);
}

/// Closed form of dj(g-1, {1,2,...,2}) with g-3 twos:
/// (g-3)! 2^(g-3) ((g-3) 2^(g-2) + 1).
inline Integer dj_closed_one_and_twos(int g) {
  if (g < 4)
    throw Error(Error::Kind::BadGenus,
                "closed one-and-twos form needs genus >= 4, got " + std::to_string(g));
  return factorial(g - 3) * pow2(g - 3) * (Integer(g - 3) * pow2(g - 2) + 1);
}

/// Degree normalization g! * prod k_i^2 for a full-length tuple of nonzero
/// orders (negative orders allowed; they enter squared).
inline Integer picard_degree(int genus, const std::vector<int>& orders) {
  if (genus < 1)
    throw Error(Error::Kind::BadGenus,
                "picard_degree genus must be at least 1, got " + std::to_string(genus));
  if (static_cast<int>(orders.size()) != genus)
    throw Error(Error::Kind::BadArity,
                "picard_degree takes exactly genus orders, got " +
                    std::to_string(orders.size()) + " for genus " +
                    std::to_string(genus));
  Integer r = factorial(genus);
  for (int k : orders) {
    if (k == 0)
      throw Error(Error::Kind::ZeroOrder, "picard_degree orders must be nonzero");
    r *= Integer(k) * k;
  }
  return r;
}

}  // namespace stratadiv
