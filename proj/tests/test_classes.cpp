#include <catch2/catch_amalgamated.hpp>

#include <stratadiv/classes.hpp>
#include <stratadiv/verify.hpp>

using namespace stratadiv;

TEST_CASE("full divisor classes") {
  DivisorClass d4 = divisor_class(Signature(3, {4}));
  CHECK(d4.genus == 3);
  CHECK(d4.component == ComponentLabel::full);
  CHECK(d4.c_lambda == Rational(380));
  REQUIRE(d4.delta_count() == 2);
  CHECK(d4.c_delta[0] == Rational(-40));
  CHECK(d4.c_delta[1] == Rational(-100));

  DivisorClass d42 = divisor_class(Signature(4, {4, 2}));
  CHECK(d42.c_lambda == Rational(1848));
  REQUIRE(d42.delta_count() == 3);
  CHECK(d42.c_delta[0] == Rational(-200));
  CHECK(d42.c_delta[1] == Rational(-552));
  CHECK(d42.c_delta[2] == Rational(-696));

  DivisorClass d422 = divisor_class(Signature(5, {4, 2, 2}));
  CHECK(d422.c_lambda == Rational(17120));
  CHECK(d422.c_delta[0] == Rational(-1888));
  CHECK(d422.c_delta[1] == Rational(-5536));
  CHECK(d422.c_delta[2] == Rational(-7520));

  DivisorClass d51 = divisor_class(Signature(4, {5, 1}));
  CHECK(d51.c_lambda == Rational(930));
  CHECK(d51.c_delta[0] == Rational(-100));
  CHECK(d51.c_delta[1] == Rational(-270));
  CHECK(d51.c_delta[2] == Rational(-360));
}

TEST_CASE("fiber-pencil relation holds across the sweep") {
  auto r = verify::check_class_fiber_relation({8});
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("classes are invariant under part permutations") {
  auto r = verify::check_class_permutation_invariance({7});
  INFO(r.detail);
  CHECK(r.passed);
  CHECK(divisor_class(Signature(5, {2, 4, 2})) == divisor_class(Signature(5, {2, 2, 4})));
}

TEST_CASE("component classes at genus 3") {
  ComponentClasses cc = component_classes(Signature(3, {4}));
  CHECK(cc.decomposition_known);
  REQUIRE(cc.classes.size() == 2);

  const DivisorClass& hyp = cc.classes[0];
  CHECK(hyp.component == ComponentLabel::hyperelliptic);
  CHECK(hyp.c_lambda == Rational(8) * Rational(9));
  CHECK(hyp.c_delta[0] == Rational(8) * Rational(-1));
  CHECK(hyp.c_delta[1] == Rational(8) * Rational(-3));

  const DivisorClass& odd = cc.classes[1];
  CHECK(odd.component == ComponentLabel::odd);
  CHECK(odd.c_lambda == Rational(308));
  CHECK(odd.c_delta[0] == Rational(-32));
  CHECK(odd.c_delta[1] == Rational(-76));

  DivisorClass full = divisor_class(Signature(3, {4}));
  CHECK(hyp.c_lambda + odd.c_lambda == full.c_lambda);
  CHECK(hyp.c_delta[0] + odd.c_delta[0] == full.c_delta[0]);
  CHECK(hyp.c_delta[1] + odd.c_delta[1] == full.c_delta[1]);
}

TEST_CASE("component classes for the split signature") {
  ComponentClasses cc = component_classes(Signature(4, {4, 2}));
  CHECK(cc.decomposition_known);
  REQUIRE(cc.classes.size() == 2);

  const DivisorClass& even = cc.classes[0];
  CHECK(even.component == ComponentLabel::even);
  CHECK(even.c_lambda == Rational(408));
  CHECK(even.c_delta == std::vector<Rational>{Rational(-48), Rational(-168), Rational(-216)});

  const DivisorClass& odd = cc.classes[1];
  CHECK(odd.component == ComponentLabel::odd);
  CHECK(odd.c_lambda == Rational(1440));
  CHECK(odd.c_delta == std::vector<Rational>{Rational(-152), Rational(-384), Rational(-480)});

  ComponentClasses cc5 = component_classes(Signature(5, {4, 2, 2}));
  REQUIRE(cc5.classes.size() == 2);
  CHECK(cc5.classes[0].c_lambda == Rational(4224));
  CHECK(cc5.classes[0].c_delta ==
        std::vector<Rational>{Rational(-512), Rational(-1920), Rational(-2688)});
  CHECK(cc5.classes[1].c_lambda == Rational(12896));
  CHECK(cc5.classes[1].c_delta ==
        std::vector<Rational>{Rational(-1376), Rational(-3616), Rational(-4832)});
}

TEST_CASE("component additivity across genera") {
  auto r = verify::check_class_component_additivity({9});
  INFO(r.detail);
  CHECK(r.passed);
}

TEST_CASE("(3,3) has a single non-hyperelliptic component") {
  ComponentClasses cc = component_classes(Signature(4, {3, 3}));
  CHECK(cc.decomposition_known);
  REQUIRE(cc.classes.size() == 1);
  CHECK(cc.classes[0].component == ComponentLabel::non_hyperelliptic);

  DivisorClass full = divisor_class(Signature(4, {3, 3}));
  CHECK(cc.classes[0].c_lambda == full.c_lambda);
  CHECK(cc.classes[0].c_delta == full.c_delta);
}

TEST_CASE("unresolved signatures fall back to the full class") {
  ComponentClasses cc = component_classes(Signature(4, {5, 1}));
  CHECK_FALSE(cc.decomposition_known);
  REQUIRE(cc.classes.size() == 1);
  CHECK(cc.classes[0].component == ComponentLabel::full);
  CHECK(cc.classes[0] == divisor_class(Signature(4, {5, 1})));

  ComponentClasses cc6 = component_classes(Signature(6, {5, 2, 2, 1}));
  CHECK_FALSE(cc6.decomposition_known);
  REQUIRE(cc6.classes.size() == 1);
}

TEST_CASE("component label names") {
  CHECK(to_string(ComponentLabel::full) == "full");
  CHECK(to_string(ComponentLabel::even) == "even");
  CHECK(to_string(ComponentLabel::odd) == "odd");
  CHECK(to_string(ComponentLabel::hyperelliptic) == "hyperelliptic");
  CHECK(to_string(ComponentLabel::non_hyperelliptic) == "non_hyperelliptic");
}
