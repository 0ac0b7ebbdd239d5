#include <doctest.h>

#include <random>

#include "qhs/error.hpp"
#include "qhs/polyform.hpp"
#include "support.hpp"

using namespace qhs;
using namespace qhs::testing;

namespace {

const Weights W345({3, 4, 5});

Polynomial P(const char* s, std::size_t n = 3) { return parse_polynomial(s, n); }
PForm F(const char* s, std::size_t n = 3) { return parse_form(s, n); }

}  // namespace

TEST_CASE("monomial order is graded lexicographic") {
  Monomial a({0, 2, 0}), b({1, 0, 1}), c({0, 0, 1});
  CHECK(c < a);
  CHECK(a < b);
  CHECK(least_monomial(8, W345)->exponents == std::vector<int>{0, 2, 0});
  CHECK(!least_monomial(2, W345).has_value());
  CHECK(monomials_of_degree(12, W345).size() == 3);
}

TEST_CASE("parse and render round trip") {
  auto p = P("x1*x3 - x2^2");
  CHECK(render(p) == "x1*x3 - x2^2");
  CHECK(P(render(p).c_str()) == p);
  auto w = F("x1^2*x2 dx1^dx3 + dx2^dx3 - 1/2*x3 dx1^dx2");
  CHECK(parse_form(render(w), 3) == w);
  CHECK(F("dx2^dx1") == F("-dx1^dx2"));
  CHECK(F("dx1^dx1").is_zero());
  CHECK(render(F("2 dx1^dx2")) == "2 dx1^dx2");
  auto c = parse_curve_series("t^3 - 1/2*t^8");
  CHECK(render(c) == "t^3 - 1/2*t^8");
  CHECK(parse_curve_series("0").is_zero());
  CHECK_THROWS_AS(P("x4", 3), ParseError);
  CHECK_THROWS_AS(P("x1 +", 3), ParseError);
  CHECK_THROWS_AS(parse_curve_series("t^"), ParseError);
  CHECK_THROWS_AS(parse_form("dx1 + dx1^dx2", 3), ParseError);
}

TEST_CASE("quasi components") {
  auto comps = P("x1*x3 - x2^2").quasi_components(W345);
  REQUIRE(comps.size() == 1);
  CHECK(comps.begin()->first == 8);
  CHECK(Polynomial(3).quasi_components(W345).empty());
  auto fc = quasi_components(F("dx1^dx2 + x1 dx1^dx2"), W345);
  REQUIRE(fc.size() == 2);
  CHECK(fc.count(7) == 1);
  CHECK(fc.count(10) == 1);
}

TEST_CASE("exterior derivative") {
  CHECK(exterior_derivative(PForm::function(P("x1*x3 - x2^2"))) == F("x3 dx1 + x1 dx3 - 2*x2 dx2"));
  CHECK(exterior_derivative(F("x1 dx1^dx2")).is_zero());
  CHECK(exterior_derivative(F("x3 dx1^dx2")) == F("dx1^dx2^dx3"));
}

TEST_CASE("lie derivative examples") {
  VectorField x1({P("3*x2"), P("4*x3"), P("5*x1^2")});
  CHECK(lie_derivative(x1, F("dx1^dx2")) == F("-4 dx3^dx1 + 3 dx2^dx2"));
  CHECK(lie_derivative(VectorField::euler(W345), F("dx1^dx2")) == F("7 dx1^dx2"));
  CHECK(lie_derivative(x1, PForm(3, 2)).is_zero());
}

TEST_CASE("curve restriction and relations") {
  CHECK(restrict_to_curve(P("x1*x3 - x2^2"), W345).is_zero());
  CHECK(restrict_to_curve(P("x1^2"), W345) == CurveSeries::monomial(6));
  CHECK(restrict_to_curve(P("x2*x3 - x1^4"), Weights({3, 5, 7})).is_zero());
  auto r8 = toric_relations(8, W345);
  REQUIRE(r8.size() == 1);
  CHECK(r8[0] == P("x1*x3 - x2^2"));
  CHECK(toric_relations(7, W345).empty());
  auto r14 = toric_relations(14, Weights({3, 7, 8}));
  REQUIRE(r14.size() == 1);
  CHECK(r14[0] == P("x1^2*x3 - x2^2"));
  for (int d = 0; d < 40; ++d)
    for (auto& b : toric_relations(d, Weights({3, 7, 8}))) CHECK(restrict_to_curve(b, Weights({3, 7, 8})).is_zero());
}

TEST_CASE("vanishing orders") {
  CHECK(order_vanishing_at_zero(F("dx1^dx2")) == 0);
  CHECK(order_vanishing_at_zero(F("x1 dx1^dx2")) == 1);
  CHECK(!order_vanishing_at_zero(PForm(3, 2)).has_value());
  CHECK(order_vanishing_on_curve(F("x1*x2 dx1"), W345) == 7);
  CHECK(order_vanishing_on_curve(F("x1^2 dx2"), W345) == 6);
  CHECK(!order_vanishing_on_curve(PForm(3, 1), W345).has_value());
}

TEST_CASE("calculus properties on random forms") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    for (int p = 0; p <= 2; ++p) {
      auto w = random_form(rng, 3, p);
      CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
      auto x = random_field(rng, 3);
      CHECK(lie_derivative(x, exterior_derivative(w)) == exterior_derivative(lie_derivative(x, w)));
    }
    auto g = random_poly(rng, 3, 3, 4), h = random_poly(rng, 3, 3, 4);
    CHECK(restrict_to_curve(g * h, W345) == restrict_to_curve(g, W345) * restrict_to_curve(h, W345));
    CHECK(restrict_to_curve(g + h, W345) == restrict_to_curve(g, W345) + restrict_to_curve(h, W345));
  }
}

TEST_CASE("quasi-degree law for Lie derivative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto w = random_form(rng, 3, 2);
    auto x = random_field(rng, 3);
    for (auto& [i, xi] : x.quasi_components(W345))
      for (auto& [j, wj] : quasi_components(w, W345)) {
        auto l = quasi_components(lie_derivative(xi, wj), W345);
        CHECK(l.size() <= 1);
        if (!l.empty()) CHECK(l.begin()->first == i + j);
      }
    auto a = random_form(rng, 3, 1), b = random_form(rng, 3, 1);
    for (auto& [i, ai] : quasi_components(a, W345))
      for (auto& [j, bj] : quasi_components(b, W345)) {
        auto l = quasi_components(wedge(ai, bj), W345);
        CHECK(l.size() <= 1);
        if (!l.empty()) CHECK(l.begin()->first == i + j);
      }
  }
}
