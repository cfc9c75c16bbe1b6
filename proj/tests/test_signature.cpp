#include <catch2/catch_amalgamated.hpp>

#include <stratadiv/signature.hpp>

#include <stratadiv/integer.hpp>

#include <random>

using namespace stratadiv;

namespace {

template <typename F>
Error::Kind kind_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no Error thrown");
  return Error::Kind::BadGenus;  // unreachable
}

}  // namespace

TEST_CASE("signature construction canonicalizes") {
  Signature sig = signature_new(4, {2, 4});
  CHECK(sig.genus() == 4);
  CHECK(sig.parts() == std::vector<int>{4, 2});
  CHECK(sig.size() == 2);
  CHECK(sig.part(0) == 4);
  CHECK(sig.str() == "4,2");
  CHECK(signature_new(4, {4, 2}) == sig);
  CHECK(signature_new(5, {2, 2, 4}).str() == "4,2,2");
  CHECK(signature_new(3, {4}).str() == "4");
}

TEST_CASE("signature validation order and kinds") {
  CHECK(kind_of([] { signature_new(2, {2}); }) == Error::Kind::BadGenus);
  CHECK(kind_of([] { signature_new(-1, {}); }) == Error::Kind::BadGenus);
  // length is checked before the sum: (3,3,2) sums to 8 != 6 as well
  CHECK(kind_of([] { signature_new(4, {3, 3, 2}); }) == Error::Kind::BadLength);
  CHECK(kind_of([] { signature_new(4, {6, 0}); }) == Error::Kind::BadPart);
  CHECK(kind_of([] { signature_new(4, {7, -1}); }) == Error::Kind::BadPart);
  CHECK(kind_of([] { signature_new(4, {4, 3}); }) == Error::Kind::BadSum);
  CHECK(kind_of([] { signature_new(3, {3}); }) == Error::Kind::BadSum);
}

TEST_CASE("signature enumeration is lexicographically descending") {
  auto g4 = enumerate_signatures(4);
  REQUIRE(g4.size() == 3);
  CHECK(g4[0].str() == "5,1");
  CHECK(g4[1].str() == "4,2");
  CHECK(g4[2].str() == "3,3");

  auto g5 = enumerate_signatures(5);
  REQUIRE(g5.size() == 5);
  CHECK(g5[0].str() == "6,1,1");
  CHECK(g5[1].str() == "5,2,1");
  CHECK(g5[2].str() == "4,3,1");
  CHECK(g5[3].str() == "4,2,2");
  CHECK(g5[4].str() == "3,3,2");

  const int counts[] = {1, 3, 5, 9, 13, 20};
  for (int g = 3; g <= 8; ++g) {
    auto sigs = enumerate_signatures(g);
    CHECK(static_cast<int>(sigs.size()) == counts[g - 3]);
    for (size_t t = 1; t < sigs.size(); ++t)
      CHECK(sigs[t - 1].parts() > sigs[t].parts());
  }
  CHECK_THROWS_AS(enumerate_signatures(2), Error);
}

TEST_CASE("subset enumeration") {
  Signature sig(5, {4, 2, 2});

  auto empty = subsets_with_size(sig, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].indices.empty());
  CHECK(empty[0].sum == 0);
  CHECK(empty[0].complement_sum == 8);

  auto pairs = subsets_with_size(sig, 2);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].indices == std::vector<int>{0, 1});
  CHECK(pairs[0].sum == 6);
  CHECK(pairs[1].indices == std::vector<int>{0, 2});
  CHECK(pairs[2].indices == std::vector<int>{1, 2});
  CHECK(pairs[2].sum == 4);
  CHECK(pairs[2].complement_sum == 4);

  for (int g = 3; g <= 7; ++g)
    for (const Signature& s : enumerate_signatures(g))
      for (int size = 0; size <= s.size(); ++size) {
        auto subs = subsets_with_size(s, size);
        REQUIRE(Integer(static_cast<long long>(subs.size())) == binomial(s.size(), size));
        for (const IndexSubset& sub : subs)
          REQUIRE(sub.sum + sub.complement_sum == 2 * g - 2);
      }

  CHECK(kind_of([&] { subsets_with_size(sig, -1); }) == Error::Kind::BadIndex);
  CHECK(kind_of([&] { subsets_with_size(sig, 4); }) == Error::Kind::BadIndex);
}

TEST_CASE("signatures are permutation-insensitive") {
  std::mt19937 rng(1357u);
  for (int g = 3; g <= 7; ++g)
    for (const Signature& sig : enumerate_signatures(g)) {
      std::vector<int> parts = sig.parts();
      for (int t = 0; t < 4; ++t) {
        std::shuffle(parts.begin(), parts.end(), rng);
        REQUIRE(signature_new(g, parts) == sig);
      }
    }
}
