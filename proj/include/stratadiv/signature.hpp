#pragma once

/**
 * @file signature.hpp
 * @brief Zero-order signatures kappa and index-subset enumeration.
 *
 * A signature for genus g is a multiset of g-2 positive zero orders summing
 * to 2g-2, stored canonically in non-increasing order.  Genus 3 is the
 * smallest supported genus.
 */

#include <stratadiv/error.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace stratadiv {

class Signature {
 public:
  /// Validates and canonicalizes.  Throws Error with kind BadGenus, BadLength,
  /// BadPart or BadSum (checked in that order).
  Signature(int genus, std::vector<int> parts) : genus_(genus), parts_(std::move(parts)) {
    if (genus_ < 3)
      throw Error(Error::Kind::BadGenus,
                  "genus must be at least 3, got " + std::to_string(genus_));
    if (static_cast<int>(parts_.size()) != genus_ - 2)
      throw Error(Error::Kind::BadLength,
                  "expected " + std::to_string(genus_ - 2) + " parts for genus " +
                      std::to_string(genus_) + ", got " + std::to_string(parts_.size()));
    for (int k : parts_)
      if (k < 1)
        throw Error(Error::Kind::BadPart,
                    "parts must be positive, got " + std::to_string(k));
    int sum = std::accumulate(parts_.begin(), parts_.end(), 0);
    if (sum != 2 * genus_ - 2)
      throw Error(Error::Kind::BadSum,
                  "parts sum to " + std::to_string(sum) + ", expected " +
                      std::to_string(2 * genus_ - 2));
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  }

  int genus() const noexcept { return genus_; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_.at(static_cast<size_t>(i)); }

  /// Comma-separated parts, e.g. "4,2,2".
  std::string str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.genus_ == b.genus_ && a.parts_ == b.parts_;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

 private:
  int genus_;
  std::vector<int> parts_;
};

inline Signature signature_new(int genus, std::vector<int> parts) {
  return Signature(genus, std::move(parts));
}

/// All signatures of the given genus, in lexicographically descending order
/// of their canonical part sequences.
inline std::vector<Signature> enumerate_signatures(int genus) {
  if (genus < 3)
    throw Error(Error::Kind::BadGenus,
                "genus must be at least 3, got " + std::to_string(genus));
  std::vector<Signature> out;
  std::vector<int> parts;
  // Partitions of 2g-2 into exactly g-2 parts, largest first; descending
  // first parts give lexicographically descending output.
  auto recurse = [&](auto&& self, int remaining, int slots, int cap) -> void {
    if (slots == 0) {
      if (remaining == 0) out.emplace_back(genus, parts);
      return;
    }
    int hi = std::min(cap, remaining - (slots - 1));  // leave >=1 per later slot
    for (int k = hi; k >= 1; --k) {
      parts.push_back(k);
      self(self, remaining - k, slots - 1, k);
      parts.pop_back();
    }
  };
  recurse(recurse, 2 * genus - 2, genus - 2, 2 * genus - 2);
  return out;
}

/// A subset of part positions together with the part sums on both sides.
struct IndexSubset {
  std::vector<int> indices;  // ascending positions into Signature::parts()
  int sum = 0;               // sum of parts at those positions
  int complement_sum = 0;    // sum of the remaining parts
};

/// All size-element subsets of the part positions of sig, in lexicographic
/// order of their index lists.  Requires 0 <= size <= g-2.
inline std::vector<IndexSubset> subsets_with_size(const Signature& sig, int size) {
  const int n = sig.size();
  if (size < 0 || size > n)
    throw Error(Error::Kind::BadIndex,
                "subset size " + std::to_string(size) + " out of range 0.." +
                    std::to_string(n));
  int total = std::accumulate(sig.parts().begin(), sig.parts().end(), 0);
  std::vector<IndexSubset> out;
  std::vector<int> idx;
  auto recurse = [&](auto&& self, int start) -> void {
    if (static_cast<int>(idx.size()) == size) {
      IndexSubset s;
      s.indices = idx;
      for (int i : idx) s.sum += sig.part(i);
      s.complement_sum = total - s.sum;
      out.push_back(std::move(s));
      return;
    }
    int need = size - static_cast<int>(idx.size());
    for (int i = start; i <= n - need; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace stratadiv
