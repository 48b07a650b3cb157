#include "lienorm/error.hpp"
#include "lienorm/vector_field.hpp"
#include "random_fields.hpp"

#include <doctest.h>

using namespace lienorm;
using lienorm::testing::field;
using lienorm::testing::random_polynomial_field;
using lienorm::testing::random_rational_function;

namespace {
const Chart kZ({"z"});
const Chart kXY({"x", "y"});
const Chart kXYZ({"x", "y", "z"});
}  // namespace

TEST_CASE("bracket examples") {
  CHECK(bracket(field(kXY, {"1", "0"}), field(kXY, {"0", "1"})).is_zero());
  CHECK(bracket(field(kZ, {"1"}), field(kZ, {"z"})) == field(kZ, {"1"}));
  CHECK(bracket(field(kZ, {"z"}), field(kZ, {"z^2"})) == field(kZ, {"z^2"}));
  CHECK_THROWS_AS(bracket(field(kZ, {"1"}), field(Chart({"w"}), {"1"})), ChartMismatch);
}

TEST_CASE("apply examples") {
  CHECK(apply(field(kXY, {"x", "0"}), kXY.parse("x^2*y")) == kXY.parse("2*x^2*y"));
  // quotient-rule oracle for d/dz (b/a)
  Chart c({"z"});
  auto a = c.parse("z^2 + 1"), b = c.parse("3*z - 1");
  auto lhs = apply(field(c, {"1"}), b / a);
  auto rhs = (a * b.derivative(0) - a.derivative(0) * b) / (a * a);
  CHECK(lhs == rhs);
  CHECK(apply(field(kXY, {"x*y", "1/(x-y)"}), RationalFunction(2, Rational(1))).is_zero());
}

TEST_CASE("order_at_origin examples") {
  CHECK(order_at_origin(field(kZ, {"z^2"})) == 2u);
  CHECK(order_at_origin(field(kXY, {"1", "x^3"})) == 0u);
  CHECK(!order_at_origin(VectorField::zero(kXY)));
  CHECK(order_at_origin(field(kZ, {"z/(1-z)"})) == 1u);
  CHECK_THROWS_AS(order_at_origin(field(kZ, {"1/z"})), DomainError);
  CHECK(order_at_origin(truncate(field(kZ, {"z^2"}), 3)) == 2u);
  CHECK(!order_at_origin(JetField::zero(kXY, 2)));
}

TEST_CASE("wedge examples") {
  std::vector<VectorField> a{field(kXY, {"1", "0"}), field(kXY, {"0", "1"})};
  CHECK(wedge(a).component({0, 1}) == kXY.parse("1"));
  std::vector<VectorField> b{field(kXY, {"x", "0"}), field(kXY, {"0", "1"})};
  CHECK(wedge(b).component({0, 1}) == kXY.parse("x"));
  std::vector<VectorField> c{field(kXY, {"1", "y"}), field(kXY, {"0", "x"})};
  CHECK(wedge(c).component({0, 1}) == kXY.parse("x"));
  // degree n-1 components are 2x2 minors
  std::vector<VectorField> d{field(kXYZ, {"1", "y", "0"}), field(kXYZ, {"z", "x", "1"})};
  MultiVector w = wedge(d);
  CHECK(w.component({0, 1}) == kXYZ.parse("x - y*z"));
  CHECK(w.component({0, 2}) == kXYZ.parse("1"));
  CHECK(w.component({1, 2}) == kXYZ.parse("y"));
}

TEST_CASE("lie_derivative examples") {
  std::vector<VectorField> base{field(kXY, {"1", "0"}), field(kXY, {"0", "1"})};
  MultiVector theta = wedge(base);
  MultiVector l = lie_derivative(field(kXY, {"x", "0"}), theta);
  CHECK(l.component({0, 1}) == kXY.parse("-1"));
  CHECK(lie_derivative(field(kXY, {"1", "0"}), theta).is_zero());
  // Leibniz oracle: L_v(w1 ^ w2) = [v,w1] ^ w2 + w1 ^ [v,w2]
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Chart& ch = i % 2 ? kXY : kXYZ;
    auto v = random_polynomial_field(rng, ch, 2);
    std::vector<VectorField> ws{random_polynomial_field(rng, ch, 2), random_polynomial_field(rng, ch, 2)};
    std::vector<VectorField> t1{bracket(v, ws[0]), ws[1]}, t2{ws[0], bracket(v, ws[1])};
    REQUIRE(lie_derivative(v, wedge(ws)) == wedge(t1) + wedge(t2));
  }
}

TEST_CASE("truncate examples") {
  JetField j = truncate(field(kZ, {"1/(1-z)"}), 2);
  CHECK(j[0] == kZ.parse("1 + z + z^2").numerator());
  auto p = field(kXY, {"x^2 + y", "3"});
  CHECK(truncate(p, 2).to_field() == p);
  CHECK(truncate(field(kZ, {"z^2"}), 1).is_zero());
  CHECK_THROWS_AS(truncate(field(kZ, {"1/z"}), 1), DomainError);
}

TEST_CASE("exactness properties on random polynomial fields") {
  std::mt19937_64 rng(1234);
  const Chart charts[] = {Chart({"x"}), kXY, kXYZ};
  for (int i = 0; i < 210; ++i) {
    const Chart& ch = charts[i % 3];
    unsigned deg = 1 + i % 3;
    auto u = random_polynomial_field(rng, ch, deg);
    auto v = random_polynomial_field(rng, ch, deg);
    auto w = random_polynomial_field(rng, ch, deg);
    REQUIRE((bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))).is_zero());
    REQUIRE(bracket(v, w) == -bracket(w, v));
    auto f = random_rational_function(rng, ch.dimension(), 2);
    auto g = random_rational_function(rng, ch.dimension(), 2);
    REQUIRE(apply(v, f * g) == apply(v, f) * g + f * apply(v, g));
    // top-degree Leibniz rule for the Lie derivative
    std::vector<VectorField> top;
    for (std::size_t k = 0; k < ch.dimension(); ++k) top.push_back(random_polynomial_field(rng, ch, 1));
    MultiVector theta = wedge(top);
    REQUIRE(lie_derivative(v, f * theta) == apply(v, f) * theta + f * lie_derivative(v, theta));
    // jet bookkeeping
    for (unsigned k = 1; k <= 3; ++k)
      REQUIRE(truncate(bracket(v, w), k - 1) == bracket(truncate(v, k), truncate(w, k)));
  }
}

TEST_CASE("pullback and recenter") {
  // tau(w) = w + w^2 pulls d/dz back to 1/(1+2w) d/dw
  Chart w({"w"});
  std::vector<RationalFunction> tau{w.parse("w + w^2")};
  CHECK(pullback(field(kZ, {"1"}), w, tau) == field(w, {"1/(1+2*w)"}));
  CHECK(pullback(field(kZ, {"z"}), w, tau) == field(w, {"(w+w^2)/(1+2*w)"}));
  // pullback is a Lie algebra homomorphism
  auto a = field(kZ, {"z^2"}), b = field(kZ, {"1 + z"});
  CHECK(pullback(bracket(a, b), w, tau) == bracket(pullback(a, w, tau), pullback(b, w, tau)));
  std::vector<Rational> p{1, -2};
  CHECK(recenter(field(kXY, {"x*y", "1"}), p) == field(kXY, {"(x+1)*(y-2)", "1"}));
}
