#include <doctest.h>

#include "qhs/error.hpp"
#include "qhs/invariants.hpp"

using namespace qhs;

namespace {

BasisConventions conv345() {
  BasisConventions c;
  c.representatives = {{8, {"dx3^dx1"}}, {12, {"x1 dx2^dx3"}}};
  return c;
}

}  // namespace

TEST_CASE("invariants of the (3,4,5) basis classes") {
  auto conv = conv345();
  auto m = Model::build(Weights({3, 4, 5}), &conv);
  struct Row {
    Vector c;
    std::size_t mu;
    Order iota, lt;
    int n;
  };
  std::vector<Row> rows = {{{1, 0, 0, 0, 0}, 0, 0, 4, 2},       {{0, 1, 0, 0, 0}, 1, 0, 5, 2},
                           {{0, 0, 1, 0, 0}, 2, 0, 5, 2},       {{0, 0, 0, 1, 0}, 3, 1, 7, 3},
                           {{0, 0, 0, 0, 1}, 4, 1, 8, 3},       {{0, 0, 0, 0, 0}, 5, std::nullopt, std::nullopt, 3}};
  for (const auto& r : rows) {
    auto rep = invariant_report(m, r.c);
    CHECK(rep.mu == r.mu);
    CHECK(rep.iota == r.iota);
    CHECK(rep.lt == r.lt);
    CHECK(rep.minimal_n == r.n);
    CHECK(rep.lt_outside_hypothesis == (r.iota == 0));
  }
}

TEST_CASE("tangency antiderivative represents the class") {
  auto m = Model::build(Weights({3, 5, 7}));
  for (std::size_t i = 0; i < m.closed().dimension(); ++i) {
    Vector c(m.closed().dimension());
    c[i] = 1;
    auto t = lagrangian_tangency(m, c);
    CHECK(m.closed().class_of(exterior_derivative(t.alpha)) == c);
    CHECK(order_vanishing_on_curve(t.alpha, m.weights()) == t.order);
  }
}

TEST_CASE("constant part and realizability") {
  auto m = Model::build(Weights({3, 4, 5}));
  Vector a7{1, 0, 0, 0, 0}, a10{0, 0, 0, 1, 0};
  Matrix th = constant_part(m, a7);
  CHECK(th(0, 1) == 1);
  CHECK(th(1, 0) == -1);
  CHECK(constant_rank(m, a7) == 2);
  CHECK(constant_rank(m, a10) == 0);
  CHECK(realizable(m, a7, 2));
  CHECK_FALSE(realizable(m, a10, 2));
  CHECK(realizable(m, a10, 3));
  CHECK(minimal_dimension(m, a10) == 3);
  CHECK_THROWS_AS(realizable(m, a7, 0), PreconditionError);
  CHECK(render_order(std::nullopt) == "inf");
  CHECK(render_order(7) == "7");
}

TEST_CASE("planar cusp minimal dimension") {
  auto m = Model::build(Weights({2, 3}));
  CHECK(minimal_dimension(m, Vector{1, 0}) == 1);
  CHECK(minimal_dimension(m, Vector{0, 1}) == 2);
}
