#include "ghwlab/defining_sets.hpp"
#include "properties.hpp"

#include <doctest.h>

#include <string>

using namespace ghwlab;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParameterError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("defining-set identities") {
  for (const auto& r : props::defining_set_identities()) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("set sizes at the example parameters") {
  CHECK(class1_build(3, 3, 1, 2).size() == 18);
  CHECK(class1_build(3, 4, 2, 2).size() == 54);
  CHECK(class1_build(2, 4, 2, 1).size() == 8);
  CHECK(class2_build(2, 3, 1, 2, 1).size() == 12);
  CHECK(class2_build(3, 2, 1, 2, 1).size() == 36);
  CHECK(class3_build(2).size() == 4);
  CHECK(class3_build(3).size() == 16);
}

TEST_CASE("default thetas are the first valid coset representatives") {
  const DefiningSet d = class1_build(3, 3, 1, 2);
  const auto& p = std::get<Class1Params>(d.params());
  REQUIRE(p.thetas.size() == 2);
  CHECK(p.thetas[0].to_string() == "010");
  CHECK(p.thetas[1].to_string() == "020");
  CHECK_NOTHROW(validate_thetas(p.thetas, 1));
}

TEST_CASE("invalid class 1 parameters name the violated condition") {
  CHECK(error_of([] { class1_build(2, 4, 3, 0); }).find("k | m") != std::string::npos);
  CHECK(error_of([] { class1_build(2, 4, 2, 2); }).find("h") != std::string::npos);
  const FieldPtr f = make_field(3, 3);
  const auto t = FieldElement::parse(f, "010");
  const auto shifted = t + FieldElement::one(f);
  CHECK(error_of([&] { class1_build(3, 3, 1, 2, ThetaStrategy::Explicit, {t, shifted}); })
            .find("theta_i - theta_j not in F_{q^k}") != std::string::npos);
  CHECK(error_of([&] { class1_build(3, 3, 1, 1, ThetaStrategy::Explicit, {FieldElement::one(f)}); })
            .find("not in F_{q^k}") != std::string::npos);
}

TEST_CASE("invalid class 2 parameters name the violated condition") {
  CHECK(error_of([] { class2_build(2, 2, 1, 3, 1); }).find("k-l <= m-s") != std::string::npos);
  CHECK(error_of([] { class2_build(2, 4, 3, 2, 1); }).find("s | m") != std::string::npos);
  CHECK(error_of([] { class2_build(2, 3, 1, 4, 3); }).find("l | k") != std::string::npos);
  CHECK(error_of([] { class2_build(4, 3, 1, 2, 1); }).find("prime") != std::string::npos);
}

TEST_CASE("only the q=m=k=2 point is exceptional") {
  CHECK(std::get<Class2Params>(class2_build(2, 2, 1, 2, 1).params()).exceptional);
  CHECK_FALSE(std::get<Class2Params>(class2_build(3, 2, 1, 2, 1).params()).exceptional);
  CHECK_FALSE(std::get<Class2Params>(class2_build(2, 3, 1, 2, 1).params()).exceptional);
}

TEST_CASE("class 3 requires m >= 2") { CHECK_THROWS_AS(class3_build(1), ParameterError); }

TEST_CASE("bivariate sets flatten with first-field coordinates first") {
  const DefiningSet d = class2_build(2, 3, 1, 2, 1);
  CHECK(d.bivariate());
  CHECK(d.ambient_dim() == 5);
  const auto& first = d.points().front();
  CHECK(to_digits(d.coordinates().row(0)) == first.x.to_string() + first.y->to_string());
}

TEST_CASE("custom sets") {
  const FieldPtr f = make_field(2, 3);
  const DefiningSet d = custom_univariate(f, {FieldElement::from_index(f, 3), FieldElement::from_index(f, 5)});
  CHECK(d.class_id() == 0);
  CHECK(d.size() == 2);
  CHECK(custom_univariate(f, {FieldElement::one(f), FieldElement::one(f)}).size() == 1);
  CHECK_THROWS_AS(custom_univariate(f, {FieldElement::one(make_field(2, 2))}), ParameterError);
}
