#pragma once

/**
 * @file test_curves.hpp
 * @brief Intersection numbers of the stratum divisor with the test curves.
 *
 * Three families of one-parameter curves pin down the class of D_kappa:
 *   A  - a pencil inside a fixed fiber; meets D_kappa in zero points,
 *   B  - a genus-(g-1) curve glued to a moving elliptic tail,
 *   C_i - a genus-(g-i) curve glued to a moving genus-i curve.
 * Each intersection number is an exact nonnegative integer.  For the split
 * signature kappa = (4, 2^(g-3)) the even and odd spin components have
 * separate closed forms whose sum recovers the full count.
 */

#include <stratadiv/dejonquieres.hpp>
#include <stratadiv/divisor_class.hpp>
#include <stratadiv/signature.hpp>

#include <string>
#include <vector>

namespace stratadiv {

namespace detail {

/// parts with position i removed.
inline std::vector<int> drop_index(const std::vector<int>& parts, int i) {
  std::vector<int> out;
  out.reserve(parts.size() - 1);
  for (size_t t = 0; t < parts.size(); ++t)
    if (static_cast<int>(t) != i) out.push_back(parts[t]);
  return out;
}

/// parts at the given positions.
inline std::vector<int> take_indices(const std::vector<int>& parts,
                                     const std::vector<int>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(parts[static_cast<size_t>(i)]);
  return out;
}

/// parts at positions NOT in idx (idx ascending).
inline std::vector<int> take_complement(const std::vector<int>& parts,
                                        const std::vector<int>& idx) {
  std::vector<int> out;
  out.reserve(parts.size() - idx.size());
  size_t next = 0;
  for (size_t t = 0; t < parts.size(); ++t) {
    if (next < idx.size() && static_cast<int>(t) == idx[next]) {
      ++next;
    } else {
      out.push_back(parts[t]);
    }
  }
  return out;
}

}  // namespace detail

/// The fiber pencil is disjoint from D_kappa, so the intersection vanishes.
inline Integer intersect_A(const Signature&) { return 0; }

/// Elliptic-tail curve:  (g-1)! prod k_i^2
///   + sum_i k_i * sum_{j=1}^{k_i-1} dj(g-1, [j-1, other parts]).
inline Integer intersect_B(const Signature& sig) {
  const int g = sig.genus();
  const auto& parts = sig.parts();

  Integer total = factorial(g - 1);
  for (int k : parts) total *= Integer(k) * k;

  for (int i = 0; i < sig.size(); ++i) {
    const int ki = parts[static_cast<size_t>(i)];
    std::vector<int> rest = detail::drop_index(parts, i);
    std::vector<int> orders(1 + rest.size());
    std::copy(rest.begin(), rest.end(), orders.begin() + 1);
    Integer inner = 0;
    for (int j = 1; j < ki; ++j) {
      orders[0] = j - 1;
      inner += dj(g - 1, orders);
    }
    total += Integer(ki) * inner;
  }
  return total;
}

/// Genus-i tail curve: the two-part subset sum.  The discount sums use the
/// non-strict thresholds, under which each boundary term carries coefficient
/// exactly 1; this is what makes the i=1 case collapse to the single-node
/// expression and the even/odd component sums close up.
inline Integer intersect_C(const Signature& sig, int i) {
  const int g = sig.genus();
  if (i < 1 || i > g - 2)
    throw Error(Error::Kind::BadIndex,
                "curve index " + std::to_string(i) + " out of range 1.." +
                    std::to_string(g - 2) + " for genus " + std::to_string(g));
  const auto& parts = sig.parts();
  Integer total = 0;

  // First sum: subsets I of size i with ||I|| >= 2i+1.
  for (const IndexSubset& I : subsets_with_size(sig, i)) {
    if (I.sum < 2 * i + 1) continue;
    std::vector<int> comp = detail::take_complement(parts, I.indices);
    std::vector<int> orders(1 + comp.size());
    orders[0] = I.sum - 2 * i;
    std::copy(comp.begin(), comp.end(), orders.begin() + 1);
    Integer outer = dj(g - i, orders);

    Integer bracket = factorial(i);
    for (int j : I.indices) {
      int kj = parts[static_cast<size_t>(j)];
      bracket *= Integer(kj) * kj;
    }
    for (size_t pos = 0; pos < I.indices.size(); ++pos) {
      int j = I.indices[pos];
      int kj = parts[static_cast<size_t>(j)];
      if (kj < 2 * (g - i) - I.complement_sum) continue;
      std::vector<int> inner_idx = I.indices;
      inner_idx.erase(inner_idx.begin() + static_cast<long>(pos));
      Integer coeff = Integer(kj) + I.complement_sum - 2 * (g - i) + 1;
      bracket -= coeff * dj(i, detail::take_indices(parts, inner_idx));
    }
    total += outer * bracket;
  }

  // Second sum: subsets I of size i-1 with ||I|| <= 2i-2.
  for (const IndexSubset& I : subsets_with_size(sig, i - 1)) {
    if (I.sum > 2 * i - 2) continue;
    Integer outer = dj(i, detail::take_indices(parts, I.indices));
    if (outer == 0) continue;

    std::vector<int> comp_idx;
    {
      size_t next = 0;
      for (int t = 0; t < sig.size(); ++t) {
        if (next < I.indices.size() && t == I.indices[next]) {
          ++next;
        } else {
          comp_idx.push_back(t);
        }
      }
    }
    const int shift = I.sum - 2 * i;  // <= -2, so it enters squared below
    Integer bracket = factorial(g - i) * Integer(shift) * shift;
    for (int j : comp_idx) {
      int kj = parts[static_cast<size_t>(j)];
      bracket *= Integer(kj) * kj;
    }
    for (size_t pos = 0; pos < comp_idx.size(); ++pos) {
      int j = comp_idx[pos];
      int kj = parts[static_cast<size_t>(j)];
      if (kj < 2 * i - I.sum + 1) continue;
      std::vector<int> rest_idx = comp_idx;
      rest_idx.erase(rest_idx.begin() + static_cast<long>(pos));
      std::vector<int> rest = detail::take_indices(parts, rest_idx);
      std::vector<int> orders(1 + rest.size());
      orders[0] = kj + shift;
      std::copy(rest.begin(), rest.end(), orders.begin() + 1);
      Integer coeff = Integer(kj) + shift + 1;
      bracket -= coeff * dj(g - i, orders);
    }
    total += outer * bracket;
  }

  return total;
}

namespace detail {

inline void require_split_genus(int g) {
  if (g < 4)
    throw Error(Error::Kind::BadGenus,
                "spin components need genus >= 4, got " + std::to_string(g));
}

inline void require_split_index(int g, int i) {
  if (i < 1 || i > g / 2)
    throw Error(Error::Kind::BadIndex,
                "curve index " + std::to_string(i) + " out of range 1.." +
                    std::to_string(g / 2) + " for genus " + std::to_string(g));
}

/// The signature (4, 2^(g-3)) that splits into spin components.
inline Signature split_signature(int g) {
  std::vector<int> parts(static_cast<size_t>(g - 2), 2);
  parts[0] = 4;
  return Signature(g, std::move(parts));
}

}  // namespace detail

/// Even-component B count for kappa=(4,2^(g-3)):  (4g-4) * dj(g-1, [1,2^(g-3)]).
inline Integer intersect_B_even(int g) {
  detail::require_split_genus(g);
  std::vector<int> orders(static_cast<size_t>(g - 2), 2);
  orders[0] = 1;
  return Integer(4 * g - 4) * dj(g - 1, orders);
}

/// Odd-component B count:  (g-2)! 2^(g-3) ((g+5) 2^g - 12).
inline Integer intersect_B_odd(int g) {
  detail::require_split_genus(g);
  return factorial(g - 2) * pow2(g - 3) * ((Integer(g) + 5) * pow2(g) - 12);
}

/// Even-component C_i count.  i=1:  (g-1)! 2^g (2^(g-1) - 1);
/// i>=2:  2^g (2^(g-i)-1)(2^i-1)(g-1)(g-i-1)(g-3)!.
inline Integer intersect_C_even(int g, int i) {
  detail::require_split_genus(g);
  detail::require_split_index(g, i);
  if (i == 1) return factorial(g - 1) * pow2(g) * (pow2(g - 1) - 1);
  return pow2(g) * (pow2(g - i) - 1) * (pow2(i) - 1) * Integer(g - 1) *
         Integer(g - i - 1) * factorial(g - 3);
}

/// Odd-component C_i count.  i=1:  2^(g-1) (g-2)! ((g+2) 2^g + 2g - 8);
/// i>=2:  2^(g-i) ((2^i-1)(2^g+2^i) g + 2 (2^g-2^(2i)) i) (g-i-1) (g-3)!.
inline Integer intersect_C_odd(int g, int i) {
  detail::require_split_genus(g);
  detail::require_split_index(g, i);
  if (i == 1)
    return pow2(g - 1) * factorial(g - 2) * ((Integer(g) + 2) * pow2(g) + 2 * g - 8);
  return pow2(g - i) *
         ((pow2(i) - 1) * (pow2(g) + pow2(i)) * g + 2 * (pow2(g) - pow2(2 * i)) * i) *
         Integer(g - i - 1) * factorial(g - 3);
}

/// One test-curve intersection, tagged with its curve and component.
struct IntersectionRecord {
  enum class Curve { A, B, C };
  Curve curve = Curve::A;
  int index = 0;  // the i of C_i; 0 for A and B
  ComponentLabel component = ComponentLabel::full;
  Integer value;
};

/// Full-component intersections A, B, C_1..C_(g-2); for kappa=(4,2^(g-3))
/// also the even/odd splits of B and C_1..C_(g/2).
inline std::vector<IntersectionRecord> all_intersections(const Signature& sig) {
  const int g = sig.genus();
  std::vector<IntersectionRecord> out;
  out.push_back({IntersectionRecord::Curve::A, 0, ComponentLabel::full, intersect_A(sig)});
  out.push_back({IntersectionRecord::Curve::B, 0, ComponentLabel::full, intersect_B(sig)});
  for (int i = 1; i <= g - 2; ++i)
    out.push_back({IntersectionRecord::Curve::C, i, ComponentLabel::full, intersect_C(sig, i)});

  if (g >= 4 && sig == detail::split_signature(g)) {
    out.push_back({IntersectionRecord::Curve::B, 0, ComponentLabel::even, intersect_B_even(g)});
    out.push_back({IntersectionRecord::Curve::B, 0, ComponentLabel::odd, intersect_B_odd(g)});
    for (int i = 1; i <= g / 2; ++i) {
      out.push_back(
          {IntersectionRecord::Curve::C, i, ComponentLabel::even, intersect_C_even(g, i)});
      out.push_back(
          {IntersectionRecord::Curve::C, i, ComponentLabel::odd, intersect_C_odd(g, i)});
    }
  }
  return out;
}

}  // namespace stratadiv
