#pragma once

/**
 * @file verify.hpp
 * @brief Self-verification: every library invariant as a named check.
 *
 * Each check sweeps a documented input range, compares independent
 * computation routes, or pins previously hand-computed regression values.
 * The CLI's verify command and the acceptance suite both run these.
 */

#include <stratadiv/output.hpp>

#include <algorithm>
#include <bit>
#include <random>
#include <string>
#include <vector>

namespace stratadiv::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool report_only = false;
  int cases = 0;
  std::string detail;
};

struct Options {
  int max_genus = 7;
};

namespace detail {

struct Check {
  CheckResult r;
  explicit Check(std::string name, bool report_only = false) {
    r.name = std::move(name);
    r.report_only = report_only;
  }
  void expect(bool cond, const std::string& what) {
    ++r.cases;
    if (!cond && r.passed) {
      r.passed = false;
      r.detail = what;
    }
  }
  CheckResult done() { return std::move(r); }
};

inline std::string sig_str(const Signature& sig) {
  return "(" + sig.str() + ") g=" + std::to_string(sig.genus());
}

template <typename F>
void for_each_signature(int gmin, int gmax, F&& fn) {
  for (int g = gmin; g <= gmax; ++g)
    for (const Signature& sig : enumerate_signatures(g)) fn(sig);
}

/// Literal subset-enumeration evaluation of the dj alternating sum, kept
/// deliberately independent of the symmetric-polynomial fast path.
inline Integer dj_subset_oracle(int g, const std::vector<int>& orders) {
  const int rho = static_cast<int>(orders.size());
  std::vector<Integer> S(static_cast<size_t>(rho) + 1);
  for (unsigned mask = 0; mask < (1u << rho); ++mask) {
    Integer p = 1;
    for (int t = 0; t < rho; ++t)
      if (!((mask >> t) & 1u)) p *= orders[static_cast<size_t>(t)];
    S[static_cast<size_t>(std::popcount(mask))] += p;
  }
  Rational inner;
  for (int j = 0; j < rho; ++j) {
    Rational term(S[static_cast<size_t>(j)], g - rho + j);
    inner += (j % 2 == 0) ? term : -term;
  }
  Rational tail(Integer(1), g);
  inner += (rho % 2 == 0) ? tail : -tail;
  Integer pre = falling_factorial(g, rho + 1);
  for (int k : orders) pre *= k;
  Rational v = Rational(pre) * inner;
  if (!v.is_integer()) throw std::logic_error("subset oracle got a non-integer");
  return v.numerator();
}

template <typename Fn>
bool throws_kind(Error::Kind kind, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace detail

inline CheckResult check_rational_arithmetic() {
  detail::Check c("rational-arithmetic");
  c.expect(Rational(Integer(6), Integer(-4)) == Rational(Integer(-3), Integer(2)),
           "6/-4 not canonicalized to -3/2");
  c.expect(Rational(Integer(0), Integer(-7)).str() == "0", "0/-7 not canonical zero");
  c.expect(Rational(Integer(19), Integer(2)).str() == "19/2", "str of 19/2");
  c.expect(Rational(Integer(-380)).str() == "-380", "str of integer value");
  c.expect((Rational(Integer(1), Integer(3)) + Rational(Integer(1), Integer(6))) ==
               Rational(Integer(1), Integer(2)),
           "1/3 + 1/6 != 1/2");
  std::mt19937 rng(20240613u);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 24);
  for (int t = 0; t < 300; ++t) {
    Rational a(Integer(num(rng)), Integer(den(rng)));
    Rational b(Integer(num(rng)), Integer(den(rng)));
    Rational d(Integer(num(rng)), Integer(den(rng)));
    c.expect((a + b) * d == a * d + b * d, "distributivity failed");
    c.expect(a - b == -(b - a), "antisymmetry failed");
    if (!b.is_zero()) c.expect((a / b) * b == a, "division round-trip failed");
    c.expect(boost::multiprecision::gcd(a.numerator(), a.denominator()) == 1 &&
                 a.denominator() > 0,
             "canonical form violated: " + a.str());
  }
  return c.done();
}

inline CheckResult check_signature_canonical_form(const Options& opt) {
  detail::Check c("signature-canonical-form");
  std::mt19937 rng(7171u);
  detail::for_each_signature(3, opt.max_genus, [&](const Signature& sig) {
    std::vector<int> parts = sig.parts();
    for (int t = 0; t < 3; ++t) {
      std::shuffle(parts.begin(), parts.end(), rng);
      c.expect(signature_new(sig.genus(), parts) == sig,
               "shuffled parts changed canonical form for " + detail::sig_str(sig));
    }
    c.expect(std::is_sorted(sig.parts().begin(), sig.parts().end(), std::greater<int>()),
             "parts not non-increasing for " + detail::sig_str(sig));
  });
  return c.done();
}

inline CheckResult check_signature_enumeration(const Options& opt) {
  detail::Check c("signature-enumeration");
  static const int counts[] = {1, 3, 5, 9, 13, 20};  // genera 3..8
  for (int g = 3; g <= std::min(opt.max_genus, 8); ++g) {
    auto sigs = enumerate_signatures(g);
    c.expect(static_cast<int>(sigs.size()) == counts[g - 3],
             "signature count mismatch at g=" + std::to_string(g));
  }
  auto g4 = enumerate_signatures(4);
  c.expect(g4.size() == 3 && g4[0].str() == "5,1" && g4[1].str() == "4,2" &&
               g4[2].str() == "3,3",
           "genus-4 enumeration order wrong");
  auto g5 = enumerate_signatures(5);
  c.expect(g5.size() == 5 && g5[0].str() == "6,1,1" && g5[1].str() == "5,2,1" &&
               g5[2].str() == "4,3,1" && g5[3].str() == "4,2,2" && g5[4].str() == "3,3,2",
           "genus-5 enumeration order wrong");
  detail::for_each_signature(3, opt.max_genus, [&](const Signature& sig) {
    int total = 0;
    for (int k : sig.parts()) total += k;
    c.expect(total == 2 * sig.genus() - 2, "parts sum wrong for " + detail::sig_str(sig));
  });
  return c.done();
}

inline CheckResult check_subset_enumeration(const Options& opt) {
  detail::Check c("subset-enumeration");
  detail::for_each_signature(3, std::min(opt.max_genus, 7), [&](const Signature& sig) {
    const int n = sig.size();
    for (int size = 0; size <= n; ++size) {
      auto subs = subsets_with_size(sig, size);
      c.expect(Integer(static_cast<long long>(subs.size())) == binomial(n, size),
               "subset count wrong for " + detail::sig_str(sig));
      for (const IndexSubset& s : subs) {
        c.expect(s.sum + s.complement_sum == 2 * sig.genus() - 2,
                 "subset sums do not complement for " + detail::sig_str(sig));
        int check = 0;
        for (int i : s.indices) check += sig.part(i);
        c.expect(check == s.sum, "subset sum wrong for " + detail::sig_str(sig));
      }
      for (size_t t = 1; t < subs.size(); ++t)
        c.expect(subs[t - 1].indices < subs[t].indices,
                 "subset order not lexicographic for " + detail::sig_str(sig));
    }
  });
  return c.done();
}

inline CheckResult check_dj_subset_oracle_agreement() {
  detail::Check c("dj-subset-oracle-agreement");
  // exhaustive small domain
  for (int g = 1; g <= 5; ++g)
    for (int rho = 0; rho <= std::min(g - 1, 3); ++rho) {
      std::vector<int> orders(static_cast<size_t>(rho));
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == rho) {
          c.expect(dj(g, orders) == detail::dj_subset_oracle(g, orders),
                   "fast path disagrees with subset oracle");
          return;
        }
        for (int k = 0; k <= 4; ++k) {
          orders[static_cast<size_t>(pos)] = k;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
  // randomized larger tuples
  std::mt19937 rng(424242u);
  std::uniform_int_distribution<int> gd(2, 9), kd(0, 6);
  for (int t = 0; t < 150; ++t) {
    int g = gd(rng);
    std::uniform_int_distribution<int> rd(0, g - 1);
    int rho = rd(rng);
    std::vector<int> orders(static_cast<size_t>(rho));
    for (int& k : orders) k = kd(rng);
    c.expect(dj(g, orders) == detail::dj_subset_oracle(g, orders),
             "fast path disagrees with subset oracle (randomized)");
  }
  return c.done();
}

inline CheckResult check_dj_spot_values() {
  detail::Check c("dj-spot-values");
  c.expect(dj(1, {}) == 1, "dj(1, []) != 1");
  c.expect(dj(2, {2}) == 6, "dj(2, [2]) != 6");
  c.expect(dj(2, {0}) == 0, "dj(2, [0]) != 0");
  c.expect(dj(2, {1}) == 1, "dj(2, [1]) != 1");
  c.expect(dj(3, {1, 2}) == 10, "dj(3, [1,2]) != 10");
  c.expect(dj(3, {2, 2}) == 56, "dj(3, [2,2]) != 56");
  c.expect(dj(3, {0, 2}) == 0, "dj(3, [0,2]) != 0");
  c.expect(dj(3, {1, 3}) == 24, "dj(3, [1,3]) != 24");
  c.expect(dj(4, {2, 2, 2}) == 720, "dj(4, [2,2,2]) != 720");
  c.expect(dj(5, {1, 2, 2, 2}) == 2352, "dj(5, [1,2,2,2]) != 2352");
  return c.done();
}

inline CheckResult check_dj_closed_all_twos() {
  detail::Check c("dj-closed-all-twos");
  c.expect(dj_closed_all_twos(3) == 6, "closed form at g=3 != 6");
  c.expect(dj_closed_all_twos(4) == 56, "closed form at g=4 != 56");
  c.expect(dj_closed_all_twos(5) == 720, "closed form at g=5 != 720");
  for (int g = 3; g <= 12; ++g) {
    std::vector<int> twos(static_cast<size_t>(g - 2), 2);
    c.expect(dj(g - 1, twos) == dj_closed_all_twos(g),
             "closed form disagrees with dj at g=" + std::to_string(g));
  }
  return c.done();
}

inline CheckResult check_dj_closed_one_and_twos() {
  detail::Check c("dj-closed-one-and-twos");
  c.expect(dj_closed_one_and_twos(4) == 10, "closed form at g=4 != 10");
  c.expect(dj_closed_one_and_twos(5) == 136, "closed form at g=5 != 136");
  c.expect(dj_closed_one_and_twos(6) == 2352, "closed form at g=6 != 2352");
  for (int g = 4; g <= 12; ++g) {
    std::vector<int> orders(static_cast<size_t>(g - 2), 2);
    orders[0] = 1;
    c.expect(dj(g - 1, orders) == dj_closed_one_and_twos(g),
             "closed form disagrees with dj at g=" + std::to_string(g));
  }
  return c.done();
}

inline CheckResult check_dj_zero_absorption() {
  detail::Check c("dj-zero-absorption");
  std::mt19937 rng(5151u);
  std::uniform_int_distribution<int> gd(2, 9), kd(0, 5);
  for (int t = 0; t < 100; ++t) {
    int g = gd(rng);
    std::uniform_int_distribution<int> rd(1, g - 1);
    std::vector<int> orders(static_cast<size_t>(rd(rng)));
    for (int& k : orders) k = kd(rng);
    orders[orders.size() / 2] = 0;
    c.expect(dj(g, orders) == 0, "zero order did not absorb the count to 0");
  }
  return c.done();
}

inline CheckResult check_dj_permutation_invariance() {
  detail::Check c("dj-permutation-invariance");
  std::mt19937 rng(6161u);
  std::uniform_int_distribution<int> gd(2, 9), kd(0, 6);
  for (int t = 0; t < 100; ++t) {
    int g = gd(rng);
    std::uniform_int_distribution<int> rd(1, g - 1);
    std::vector<int> orders(static_cast<size_t>(rd(rng)));
    for (int& k : orders) k = kd(rng);
    Integer base = dj(g, orders);
    std::shuffle(orders.begin(), orders.end(), rng);
    c.expect(dj(g, orders) == base, "dj changed under a permutation of orders");
  }
  return c.done();
}

inline CheckResult check_dj_input_validation() {
  detail::Check c("dj-input-validation");
  using K = Error::Kind;
  c.expect(detail::throws_kind(K::BadGenus, [] { dj(0, {}); }), "genus 0 not rejected");
  c.expect(detail::throws_kind(K::BadArity, [] { dj(3, {1, 1, 1}); }),
           "arity overflow not rejected");
  c.expect(detail::throws_kind(K::BadOrder, [] { dj(3, {-1}); }),
           "negative order not rejected");
  c.expect(detail::throws_kind(K::BadGenus, [] { dj_closed_all_twos(2); }),
           "all-twos closed form accepted g=2");
  c.expect(detail::throws_kind(K::BadGenus, [] { dj_closed_one_and_twos(3); }),
           "one-and-twos closed form accepted g=3");
  return c.done();
}

inline CheckResult check_picard_degree() {
  detail::Check c("picard-degree");
  c.expect(picard_degree(3, {1, 1, 1}) == 6, "picard(3,[1,1,1]) != 6");
  c.expect(picard_degree(2, {4, 2}) == 128, "picard(2,[4,2]) != 128");
  c.expect(picard_degree(3, {-2, 4, 2}) == 1536, "picard(3,[-2,4,2]) != 1536");
  c.expect(detail::throws_kind(Error::Kind::ZeroOrder, [] { picard_degree(2, {0, 4}); }),
           "zero order not rejected");
  c.expect(detail::throws_kind(Error::Kind::BadArity, [] { picard_degree(3, {1, 1}); }),
           "length mismatch not rejected");
  return c.done();
}

inline CheckResult check_curve_b_values() {
  detail::Check c("curve-b-values");
  c.expect(intersect_B(Signature(3, {4})) == 60, "B((4), g=3) != 60");
  c.expect(intersect_B(Signature(4, {4, 2})) == 648, "B((4,2), g=4) != 648");
  c.expect(intersect_B(Signature(4, {3, 3})) == 630, "B((3,3), g=4) != 630");
  c.expect(intersect_A(Signature(3, {4})) == 0, "A((4), g=3) != 0");
  return c.done();
}

inline CheckResult check_curve_c_values() {
  detail::Check c("curve-c-values");
  c.expect(intersect_C(Signature(3, {4}), 1) == 200, "C_1((4), g=3) != 200");
  c.expect(intersect_C(Signature(4, {4, 2}), 1) == 2208, "C_1((4,2), g=4) != 2208");
  c.expect(intersect_C(Signature(4, {4, 2}), 2) == 1392, "C_2((4,2), g=4) != 1392");
  c.expect(intersect_C(Signature(5, {4, 2, 2}), 2) == 30080, "C_2((4,2,2), g=5) != 30080");
  c.expect(intersect_C(Signature(5, {4, 2, 2}), 3) == 15040, "C_3((4,2,2), g=5) != 15040");
  c.expect(detail::throws_kind(Error::Kind::BadIndex,
                               [] { intersect_C(Signature(3, {4}), 2); }),
           "index 2 accepted at g=3");
  c.expect(detail::throws_kind(Error::Kind::BadIndex,
                               [] { intersect_C(Signature(3, {4}), 0); }),
           "index 0 accepted");
  return c.done();
}

inline CheckResult check_curve_c1_single_node_form(const Options& opt) {
  detail::Check c("curve-c1-single-node-form");
  detail::for_each_signature(3, opt.max_genus, [&](const Signature& sig) {
    c.expect(intersect_C(sig, 1) == slope_aggregate_A(sig),
             "general curve formula at i=1 disagrees with single-node form for " +
                 detail::sig_str(sig));
  });
  return c.done();
}

inline CheckResult check_curve_well_definedness(const Options& opt) {
  detail::Check c("curve-well-definedness");
  detail::for_each_signature(3, opt.max_genus, [&](const Signature& sig) {
    const int g = sig.genus();
    for (int i = 2; i <= g - 2; ++i) {
      if (g - i < 2) continue;
      Rational lhs(intersect_C(sig, i), 2 * (g - i) - 2);
      Rational rhs(intersect_C(sig, g - i), 2 * i - 2);
      c.expect(lhs == rhs, "coefficient c_" + std::to_string(std::min(i, g - i)) +
                               " differs between its two routes for " +
                               detail::sig_str(sig));
    }
  });
  return c.done();
}

inline CheckResult check_curve_nonnegativity(const Options& opt) {
  detail::Check c("curve-nonnegativity");
  detail::for_each_signature(3, opt.max_genus, [&](const Signature& sig) {
    for (const IntersectionRecord& rec : all_intersections(sig))
      c.expect(rec.value >= 0, "negative intersection number for " + detail::sig_str(sig));
  });
  return c.done();
}

inline CheckResult check_curve_component_sums(const Options& opt) {
  detail::Check c("curve-component-sums");
  c.expect(intersect_B_even(4) == 120, "even B at g=4 != 120");
  c.expect(intersect_B_odd(4) == 528, "odd B at g=4 != 528");
  c.expect(intersect_C_even(4, 1) == 672, "even C_1 at g=4 != 672");
  c.expect(intersect_C_odd(4, 1) == 1536, "odd C_1 at g=4 != 1536");
  c.expect(intersect_C_even(4, 2) == 432, "even C_2 at g=4 != 432");
  c.expect(intersect_C_odd(4, 2) == 960, "odd C_2 at g=4 != 960");
  for (int g = 4; g <= std::max(opt.max_genus, 4); ++g) {
    std::vector<int> parts(static_cast<size_t>(g - 2), 2);
    parts[0] = 4;
    Signature sig(g, parts);
    c.expect(intersect_B_even(g) + intersect_B_odd(g) == intersect_B(sig),
             "B components do not sum to the full count at g=" + std::to_string(g));
    for (int i = 1; i <= g / 2; ++i)
      c.expect(intersect_C_even(g, i) + intersect_C_odd(g, i) == intersect_C(sig, i),
               "C_" + std::to_string(i) +
                   " components do not sum to the full count at g=" + std::to_string(g));
  }
  return c.done();
}

inline CheckResult check_curve_split_forms_at_i1(const Options& opt) {
  detail::Check c("curve-split-forms-at-i1");
  // the general-index closed forms, evaluated at i=1, must reproduce the
  // dedicated single-node forms
  for (int g = 4; g <= std::max(opt.max_genus, 4); ++g) {
    Integer even_general = pow2(g) * (pow2(g - 1) - 1) * (pow2(1) - 1) * Integer(g - 1) *
                           Integer(g - 2) * factorial(g - 3);
    Integer odd_general =
        pow2(g - 1) *
        ((pow2(1) - 1) * (pow2(g) + pow2(1)) * g + 2 * (pow2(g) - pow2(2)) * 1) *
        Integer(g - 2) * factorial(g - 3);
    c.expect(even_general == intersect_C_even(g, 1),
             "general even form at i=1 differs at g=" + std::to_string(g));
    c.expect(odd_general == intersect_C_odd(g, 1),
             "general odd form at i=1 differs at g=" + std::to_string(g));
  }
  return c.done();
}

inline CheckResult check_class_values() {
  detail::Check c("class-values");
  {
    DivisorClass dc = divisor_class(Signature(3, {4}));
    c.expect(dc.c_lambda == Rational(380) && dc.c_delta[0] == Rational(-40) &&
                 dc.c_delta[1] == Rational(-100),
             "class of (4) at g=3 is not (380, -40, -100)");
  }
  {
    DivisorClass dc = divisor_class(Signature(4, {4, 2}));
    c.expect(dc.c_lambda == Rational(1848) && dc.c_delta[0] == Rational(-200) &&
                 dc.c_delta[1] == Rational(-552) && dc.c_delta[2] == Rational(-696),
             "class of (4,2) at g=4 is not (1848, -200, -552, -696)");
  }
  {
    DivisorClass dc = divisor_class(Signature(5, {4, 2, 2}));
    c.expect(dc.c_lambda == Rational(17120) && dc.c_delta[0] == Rational(-1888) &&
                 dc.c_delta[1] == Rational(-5536) && dc.c_delta[2] == Rational(-7520),
             "class of (4,2,2) at g=5 is not (17120, -1888, -5536, -7520)");
  }
  {
    DivisorClass dc = divisor_class(Signature(4, {5, 1}));
    c.expect(dc.c_lambda == Rational(930) && dc.c_delta[0] == Rational(-100) &&
                 dc.c_delta[1] == Rational(-270) && dc.c_delta[2] == Rational(-360),
             "class of (5,1) at g=4 is not (930, -100, -270, -360)");
  }
  return c.done();
}

inline CheckResult check_class_fiber_relation(const Options& opt) {
  detail::Check c("class-fiber-relation");
  detail::for_each_signature(3, opt.max_genus, [&](const Signature& sig) {
    DivisorClass dc = divisor_class(sig);
    c.expect(dc.c_lambda + Rational(12) * dc.c_delta[0] - dc.c_delta[1] == Rational(0),
             "c_lambda + 12 c_0 - c_1 != 0 for " + detail::sig_str(sig));
    c.expect(dc.delta_count() == sig.genus() / 2 + 1,
             "delta coefficient count wrong for " + detail::sig_str(sig));
  });
  return c.done();
}

inline CheckResult check_class_permutation_invariance(const Options& opt) {
  detail::Check c("class-permutation-invariance");
  std::mt19937 rng(80808u);
  detail::for_each_signature(3, opt.max_genus, [&](const Signature& sig) {
    DivisorClass base = divisor_class(sig);
    std::vector<int> parts = sig.parts();
    for (int t = 0; t < 2; ++t) {
      std::shuffle(parts.begin(), parts.end(), rng);
      c.expect(divisor_class(signature_new(sig.genus(), parts)) == base,
               "class changed under part permutation for " + detail::sig_str(sig));
    }
  });
  return c.done();
}

inline CheckResult check_class_component_values() {
  detail::Check c("class-component-values");
  {
    ComponentClasses cc = component_classes(Signature(3, {4}));
    c.expect(cc.decomposition_known && cc.classes.size() == 2, "g=3 decomposition shape");
    if (cc.classes.size() == 2) {
      const DivisorClass& hyp = cc.classes[0];
      const DivisorClass& odd = cc.classes[1];
      c.expect(hyp.component == ComponentLabel::hyperelliptic &&
                   hyp.c_lambda == Rational(72) && hyp.c_delta[0] == Rational(-8) &&
                   hyp.c_delta[1] == Rational(-24),
               "hyperelliptic class at g=3 is not 8*(9, -1, -3)");
      c.expect(odd.component == ComponentLabel::odd && odd.c_lambda == Rational(308) &&
                   odd.c_delta[0] == Rational(-32) && odd.c_delta[1] == Rational(-76),
               "odd class at g=3 is not (308, -32, -76)");
    }
  }
  {
    ComponentClasses cc = component_classes(Signature(4, {3, 3}));
    c.expect(cc.decomposition_known && cc.classes.size() == 1 &&
                 cc.classes[0].component == ComponentLabel::non_hyperelliptic,
             "(3,3) at g=4 should be a single non-hyperelliptic class");
    DivisorClass full = divisor_class(Signature(4, {3, 3}));
    c.expect(!cc.classes.empty() && cc.classes[0].c_lambda == full.c_lambda &&
                 cc.classes[0].c_delta == full.c_delta,
             "(3,3) non-hyperelliptic coefficients differ from the full class");
  }
  {
    ComponentClasses cc = component_classes(Signature(4, {4, 2}));
    c.expect(cc.decomposition_known && cc.classes.size() == 2, "g=4 split shape");
    if (cc.classes.size() == 2) {
      const DivisorClass& even = cc.classes[0];
      const DivisorClass& odd = cc.classes[1];
      c.expect(even.c_lambda == Rational(408) && even.c_delta[0] == Rational(-48) &&
                   even.c_delta[1] == Rational(-168) && even.c_delta[2] == Rational(-216),
               "even class at g=4 is not (408, -48, -168, -216)");
      c.expect(odd.c_lambda == Rational(1440) && odd.c_delta[0] == Rational(-152) &&
                   odd.c_delta[1] == Rational(-384) && odd.c_delta[2] == Rational(-480),
               "odd class at g=4 is not (1440, -152, -384, -480)");
    }
  }
  {
    ComponentClasses cc = component_classes(Signature(5, {4, 2, 2}));
    c.expect(cc.classes.size() == 2, "g=5 split shape");
    if (cc.classes.size() == 2) {
      const DivisorClass& even = cc.classes[0];
      const DivisorClass& odd = cc.classes[1];
      c.expect(even.c_lambda == Rational(4224) && even.c_delta[0] == Rational(-512) &&
                   even.c_delta[1] == Rational(-1920) && even.c_delta[2] == Rational(-2688),
               "even class at g=5 is not (4224, -512, -1920, -2688)");
      c.expect(odd.c_lambda == Rational(12896) && odd.c_delta[0] == Rational(-1376) &&
                   odd.c_delta[1] == Rational(-3616) && odd.c_delta[2] == Rational(-4832),
               "odd class at g=5 is not (12896, -1376, -3616, -4832)");
    }
  }
  {
    ComponentClasses cc = component_classes(Signature(4, {5, 1}));
    c.expect(!cc.decomposition_known && cc.classes.size() == 1 &&
                 cc.classes[0].component == ComponentLabel::full,
             "(5,1) at g=4 should fall back to the full class");
  }
  return c.done();
}

inline CheckResult check_class_component_additivity(const Options& opt) {
  detail::Check c("class-component-additivity");
  {
    ComponentClasses cc = component_classes(Signature(3, {4}));
    DivisorClass full = divisor_class(Signature(3, {4}));
    Rational lam = cc.classes[0].c_lambda + cc.classes[1].c_lambda;
    c.expect(lam == full.c_lambda, "g=3 component lambdas do not sum to the full class");
    for (int i = 0; i < full.delta_count(); ++i) {
      size_t t = static_cast<size_t>(i);
      c.expect(cc.classes[0].c_delta[t] + cc.classes[1].c_delta[t] == full.c_delta[t],
               "g=3 component delta_" + std::to_string(i) + " does not sum");
    }
  }
  for (int g = 4; g <= std::max(opt.max_genus, 4); ++g) {
    std::vector<int> parts(static_cast<size_t>(g - 2), 2);
    parts[0] = 4;
    Signature sig(g, parts);
    ComponentClasses cc = component_classes(sig);
    DivisorClass full = divisor_class(sig);
    c.expect(cc.classes[0].c_lambda + cc.classes[1].c_lambda == full.c_lambda,
             "even+odd lambda mismatch at g=" + std::to_string(g));
    for (int i = 0; i < full.delta_count(); ++i) {
      size_t t = static_cast<size_t>(i);
      c.expect(cc.classes[0].c_delta[t] + cc.classes[1].c_delta[t] == full.c_delta[t],
               "even+odd delta_" + std::to_string(i) + " mismatch at g=" + std::to_string(g));
    }
  }
  return c.done();
}

inline CheckResult check_slope_values() {
  detail::Check c("slope-values");
  c.expect(slope_report(divisor_class(Signature(3, {4}))).s0 == Rational(Integer(19), Integer(2)),
           "s0 of (4) at g=3 != 19/2");
  {
    ComponentClasses cc = component_classes(Signature(4, {4, 2}));
    c.expect(slope_report(cc.classes[0]).s0 == Rational(Integer(17), Integer(2)),
             "even-component s0 at g=4 != 17/2");
    c.expect(slope_report(cc.classes[1]).s0 == Rational(Integer(180), Integer(19)),
             "odd-component s0 at g=4 != 180/19");
  }
  c.expect(slope_report(divisor_class(Signature(4, {5, 1}))).s0 ==
               Rational(Integer(93), Integer(10)),
           "s0 of (5,1) at g=4 != 93/10");
  c.expect(slope_closed_even(4) == Rational(Integer(17), Integer(2)), "closed even slope g=4");
  c.expect(slope_closed_odd(4) == Rational(Integer(180), Integer(19)), "closed odd slope g=4");
  c.expect(slope_diaz(4) == Rational(Integer(93), Integer(10)), "closed slope form g=4");
  return c.done();
}

inline CheckResult check_slope_closed_route(const Options& opt) {
  detail::Check c("slope-closed-route");
  detail::for_each_signature(3, opt.max_genus, [&](const Signature& sig) {
    SlopeReport rep = slope_report(divisor_class(sig), sig);  // asserts internally too
    c.expect(rep.s0_closed && *rep.s0_closed == rep.s0,
             "closed-form s0 route disagrees for " + detail::sig_str(sig));
    c.expect(rep.aggregate_A && rep.aggregate_B && *rep.aggregate_A > 0 &&
                 *rep.aggregate_B > 0,
             "aggregates not positive for " + detail::sig_str(sig));
  });
  return c.done();
}

inline CheckResult check_slope_component_closed_forms(const Options& opt) {
  detail::Check c("slope-component-closed-forms");
  for (int g = 4; g <= std::max(opt.max_genus, 4); ++g) {
    std::vector<int> parts(static_cast<size_t>(g - 2), 2);
    parts[0] = 4;
    ComponentClasses cc = component_classes(Signature(g, parts));
    c.expect(slope_report(cc.classes[0]).s0 == slope_closed_even(g),
             "even-component slope mismatch at g=" + std::to_string(g));
    c.expect(slope_report(cc.classes[1]).s0 == slope_closed_odd(g),
             "odd-component slope mismatch at g=" + std::to_string(g));
  }
  return c.done();
}

inline CheckResult check_slope_diaz_form(const Options& opt) {
  detail::Check c("slope-diaz-form");
  for (int g = 4; g <= std::max(opt.max_genus, 4); ++g) {
    std::vector<int> parts(static_cast<size_t>(g - 2), 1);
    parts[0] = g + 1;
    Signature sig(g, parts);
    c.expect(slope_report(divisor_class(sig)).s0 == slope_diaz(g),
             "one-large-zero slope form mismatch at g=" + std::to_string(g));
  }
  return c.done();
}

inline CheckResult check_slope_error_contracts() {
  detail::Check c("slope-error-contracts");
  DivisorClass zero_c0;
  zero_c0.genus = 4;
  zero_c0.c_lambda = Rational(1);
  zero_c0.c_delta = {Rational(0), Rational(-1), Rational(-1)};
  c.expect(detail::throws_kind(Error::Kind::ZeroC0, [&] { slope_report(zero_c0); }),
           "vanishing c_0 not reported");
  DivisorClass no_pos;
  no_pos.genus = 4;
  no_pos.c_lambda = Rational(1);
  no_pos.c_delta = {Rational(2), Rational(1), Rational(3)};
  c.expect(detail::throws_kind(Error::Kind::NoPositiveDenominator,
                               [&] { slope_report(no_pos); }),
           "all -c_i <= 0 not reported");
  return c.done();
}

inline CheckResult check_signature_error_contracts() {
  detail::Check c("signature-error-contracts");
  using K = Error::Kind;
  c.expect(detail::throws_kind(K::BadGenus, [] { signature_new(2, {2}); }),
           "genus 2 accepted");
  c.expect(detail::throws_kind(K::BadLength, [] { signature_new(4, {3, 3, 2}); }),
           "wrong length accepted");
  c.expect(detail::throws_kind(K::BadPart, [] { signature_new(4, {7, -1}); }),
           "nonpositive part accepted");
  c.expect(detail::throws_kind(K::BadSum, [] { signature_new(4, {4, 3}); }),
           "wrong sum accepted");
  c.expect(detail::throws_kind(K::BadIndex,
                               [] { subsets_with_size(Signature(4, {4, 2}), 3); }),
           "oversized subset request accepted");
  return c.done();
}

inline CheckResult check_output_json_roundtrip() {
  detail::Check c("output-json-roundtrip");
  std::vector<nlohmann::json> docs;
  {
    Signature sig(3, {4});
    DivisorClass dc = divisor_class(sig);
    OutputRecord rec = make_record(sig, dc);
    attach_slope(rec, slope_report(dc, sig));
    docs.push_back(to_json(rec));
    docs.push_back(to_json(rec, 6));
  }
  {
    Signature sig(4, {5, 1});
    ComponentClasses cc = component_classes(sig);
    OutputRecord rec = make_record(sig, cc.classes[0]);
    rec.decomposition_known = cc.decomposition_known;
    docs.push_back(to_json(rec, 3));
  }
  for (const nlohmann::json& doc : docs) {
    std::string once = doc.dump(2);
    std::string twice = nlohmann::json::parse(once).dump(2);
    c.expect(once == twice, "JSON did not round-trip byte-identically");
  }
  nlohmann::json j = docs[0];
  c.expect(j["coefficients"]["lambda"] == "380" && j["slope"]["s0"] == "19/2",
           "JSON field content wrong for (4) at g=3");
  return c.done();
}

inline CheckResult check_output_csv_stability() {
  detail::Check c("output-csv-stability");
  c.expect(csv_header(2) == "genus,kappa,component,c_lambda,c_delta_0,c_delta_1,s0",
           "CSV header format changed");
  Signature sig(3, {4});
  DivisorClass dc = divisor_class(sig);
  OutputRecord rec = make_record(sig, dc);
  attach_slope(rec, slope_report(dc));
  c.expect(csv_row(rec, 2) == "3,\"4\",full,380,-40,-100,19/2", "CSV row format changed");
  c.expect(csv_row(rec, 3) == "3,\"4\",full,380,-40,-100,,19/2",
           "CSV padding with empty cells changed");
  c.expect(csv_row(rec, 2) == csv_row(rec, 2), "CSV row not deterministic");
  c.expect(decimal_string(Rational(Integer(19), Integer(2)), 3) == "9.500",
           "decimal rendering of 19/2");
  c.expect(decimal_string(Rational(Integer(-1), Integer(3)), 4) == "-0.3333",
           "decimal rendering of -1/3");
  c.expect(decimal_string(Rational(Integer(1), Integer(2)), 0) == "1",
           "ties-away-from-zero rounding");
  return c.done();
}

/// Report-only survey: lists every class in range whose overall slope s
/// differs from s0, i.e. where the minimal -c_i is not the i=0 entry.
inline CheckResult survey_slope_equality(const Options& opt) {
  detail::Check c("survey-slope-equality", /*report_only=*/true);
  int classes_seen = 0;
  std::string found;
  auto consider = [&](const Signature& sig, const DivisorClass& dc) {
    ++classes_seen;
    SlopeReport rep = slope_report(dc);
    if (!rep.s_equals_s0)
      found += (found.empty() ? "" : "; ") + detail::sig_str(sig) + " " +
               std::string(to_string(dc.component)) + " s=" + rep.s.str() +
               " s0=" + rep.s0.str();
  };
  detail::for_each_signature(3, opt.max_genus, [&](const Signature& sig) {
    consider(sig, divisor_class(sig));
    for (const DivisorClass& dc : component_classes(sig).classes) consider(sig, dc);
  });
  c.r.cases = classes_seen;
  c.r.detail = found.empty()
                   ? "s = s0 for all " + std::to_string(classes_seen) + " classes surveyed"
                   : "classes with s != s0: " + found;
  return c.done();
}

inline std::vector<CheckResult> run_all(const Options& opt) {
  std::vector<CheckResult> out;
  out.push_back(check_rational_arithmetic());
  out.push_back(check_signature_canonical_form(opt));
  out.push_back(check_signature_enumeration(opt));
  out.push_back(check_subset_enumeration(opt));
  out.push_back(check_dj_subset_oracle_agreement());
  out.push_back(check_dj_spot_values());
  out.push_back(check_dj_closed_all_twos());
  out.push_back(check_dj_closed_one_and_twos());
  out.push_back(check_dj_zero_absorption());
  out.push_back(check_dj_permutation_invariance());
  out.push_back(check_dj_input_validation());
  out.push_back(check_picard_degree());
  out.push_back(check_curve_b_values());
  out.push_back(check_curve_c_values());
  out.push_back(check_curve_c1_single_node_form(opt));
  out.push_back(check_curve_well_definedness(opt));
  out.push_back(check_curve_nonnegativity(opt));
  out.push_back(check_curve_component_sums(opt));
  out.push_back(check_curve_split_forms_at_i1(opt));
  out.push_back(check_class_values());
  out.push_back(check_class_fiber_relation(opt));
  out.push_back(check_class_permutation_invariance(opt));
  out.push_back(check_class_component_values());
  out.push_back(check_class_component_additivity(opt));
  out.push_back(check_slope_values());
  out.push_back(check_slope_closed_route(opt));
  out.push_back(check_slope_component_closed_forms(opt));
  out.push_back(check_slope_diaz_form(opt));
  out.push_back(check_slope_error_contracts());
  out.push_back(check_signature_error_contracts());
  out.push_back(check_output_json_roundtrip());
  out.push_back(check_output_csv_stability());
  out.push_back(survey_slope_equality(opt));
  return out;
}

}  // namespace stratadiv::verify
