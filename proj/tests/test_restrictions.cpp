#include <doctest.h>

#include <map>
#include <random>

#include "qhs/error.hpp"
#include "qhs/model.hpp"
#include "qhs/restrictions.hpp"
#include "support.hpp"

using namespace qhs;
using namespace qhs::testing;

namespace {

// Direct computation in the monomial basis of p-forms of quasi-degree δ:
// the zero class is I·Ωᵖ + d(I·Ωᵖ⁻¹), I the vanishing ideal, whose graded
// pieces are the polynomials with zero coefficient sum.
struct Oracle {
  std::size_t dimension;
  std::size_t closed;
};

std::vector<Polynomial> ideal_piece(int e, const Weights& w) {
  std::vector<Polynomial> out;
  if (e < 0) return out;
  auto monos = monomials_of_degree(e, w);
  for (std::size_t i = 0; i + 1 < monos.size(); ++i) {
    Polynomial p(monos[i + 1], Rational(1));
    p.add_term(monos[i], Rational(-1));
    out.push_back(p);
  }
  return out;
}

Oracle brute_force(int delta, int p, const Weights& w) {
  const std::size_t k = w.size();
  std::map<std::pair<Monomial, IndexTuple>, std::size_t> col;
  for (auto& idx : index_tuples(k, p))
    for (auto& m : monomials_of_degree(delta - index_weight(idx, w), w)) col.emplace(std::make_pair(m, idx), col.size());
  if (delta - 0 < 0 || col.empty()) return {0, 0};
  std::vector<Vector> rows;
  auto add = [&](const PForm& f) {
    Vector v(col.size());
    for (const auto& [idx, poly] : f.terms())
      for (const auto& [m, c] : poly.terms()) v[col.at({m, idx})] += c;
    rows.push_back(v);
  };
  for (auto& idx : index_tuples(k, p))
    for (auto& b : ideal_piece(delta - index_weight(idx, w), w)) add(b * PForm::monomial(Monomial::one(k), idx));
  for (auto& idx : index_tuples(k, p - 1))
    for (auto& b : ideal_piece(delta - index_weight(idx, w), w))
      add(exterior_derivative(b * PForm::monomial(Monomial::one(k), idx)));
  auto rank_of = [&](const std::vector<Vector>& rs) {
    Matrix a(rs.size(), col.size());
    for (std::size_t r = 0; r < rs.size(); ++r)
      for (std::size_t c = 0; c < col.size(); ++c) a(r, c) = rs[r][c];
    return rank(a);
  };
  std::size_t zero_rank = rows.empty() ? 0 : rank_of(rows);
  auto with_exact = rows;
  for (auto& idx : index_tuples(k, p - 1))
    for (auto& m : monomials_of_degree(delta - index_weight(idx, w), w)) {
      PForm f = exterior_derivative(PForm::monomial(m, idx));
      Vector v(col.size());
      for (const auto& [i2, poly] : f.terms())
        for (const auto& [m2, c] : poly.terms()) v[col.at({m2, i2})] += c;
      with_exact.push_back(v);
    }
  std::size_t exact_rank = with_exact.empty() ? 0 : rank_of(with_exact);
  return {col.size() - zero_rank, exact_rank - zero_rank};
}

std::size_t level_dimension(const GradedBasis& b, int d) {
  const Level* l = b.level(d);
  return l ? l->dimension() : 0;
}

const std::vector<std::vector<int>> kWeightSets = {{2, 3}, {2, 5}, {3, 4}, {3, 4, 5}, {3, 5, 7}, {3, 7, 8}, {4, 5, 7}, {4, 6, 7}};

}  // namespace

TEST_CASE("graded dimensions agree with a brute-force quotient") {
  for (const auto& wl : kWeightSets) {
    Weights w(wl);
    CAPTURE(w.to_string());
    auto model = Model::build(w);
    const auto& two = model.two_forms();
    for (int d = 1; d <= two.scanned_through() + 4; ++d) {
      CAPTURE(d);
      auto o = brute_force(d, 2, w);
      CHECK(level_dimension(two, d) == o.dimension);
      auto [lo, hi] = model.closed().range(d);
      CHECK(hi - lo == o.closed);
    }
    if (w.size() >= 3) {
      const auto& three = model.three_forms();
      for (int d = 1; d <= three.scanned_through() + 2; ++d) CHECK(level_dimension(three, d) == brute_force(d, 3, w).dimension);
    }
  }
}

TEST_CASE("planar cusp bases") {
  auto m = Model::build(Weights({2, 3}));
  REQUIRE(m.two_forms().levels().size() == 2);
  CHECK(m.two_forms().levels()[0].degree == 5);
  CHECK(m.two_forms().levels()[1].degree == 7);
  CHECK(m.closed().dimension() == 2);
  CHECK(m.closed().cutoff() == 7);
}

TEST_CASE("slot vectors and relations") {
  Weights w({3, 4, 5});
  auto sl = slots(11, 2, w);
  REQUIRE(sl.size() == 2);
  CHECK(sl[0] == IndexTuple{0, 1});
  CHECK(sl[1] == IndexTuple{0, 2});
  CHECK(slot_vector(parse_form("x2 dx1^dx2 + 2*x1 dx1^dx3", 3), sl) == Vector{1, 2});
  CHECK_THROWS(slot_vector(parse_form("x1*x2 dx2^dx3", 3), sl));
  CHECK(rank(relation_subspace(11, 2, w)) == 1);
}

TEST_CASE("class_of kills ideal multiples and differentials of ideal multiples") {
  std::mt19937 rng(5);
  for (const auto& wl : kWeightSets) {
    Weights w(wl);
    auto m = Model::build(w);
    const auto& two = m.two_forms();
    for (int d = 4; d <= two.scanned_through(); ++d) {
      auto om = random_homogeneous_form(rng, w, 2, d - w.smallest());
      auto b = random_ideal_element(rng, w, w.smallest() + (d % 3));
      CHECK(is_zero(two.class_of(b * om)));
      for (std::size_t j = 0; j < w.size(); ++j) {
        auto bj = random_ideal_element(rng, w, d - w[j] - w.smallest());
        auto theta = bj * PForm::differential(w.size(), j);
        CHECK(is_zero(two.class_of(exterior_derivative(theta))));
      }
    }
  }
}

TEST_CASE("classes are additive and reproduce their representatives") {
  std::mt19937 rng(11);
  auto m = Model::build(Weights({3, 7, 8}));
  const auto& two = m.two_forms();
  for (std::size_t i = 0; i < two.dimension(); ++i) {
    Vector e(two.dimension());
    e[i] = 1;
    CHECK(two.class_of(two.representative(i)) == e);
  }
  for (int t = 0; t < 10; ++t) {
    auto a = random_homogeneous_form(rng, m.weights(), 2, 14 + t % 5);
    auto b = random_homogeneous_form(rng, m.weights(), 2, 14 + t % 5);
    auto ca = two.class_of(a), cb = two.class_of(b), cab = two.class_of(a + b);
    for (std::size_t i = 0; i < ca.size(); ++i) CHECK(cab[i] == ca[i] + cb[i]);
    CHECK(two.class_of(two.combination(ca)) == ca);
  }
}

TEST_CASE("closed representatives are exactly closed") {
  for (const auto& wl : kWeightSets) {
    auto m = Model::build(Weights(wl));
    for (std::size_t i = 0; i < m.closed().dimension(); ++i)
      CHECK(exterior_derivative(m.closed().representative(i)).is_zero());
    for (std::size_t i = 0; i < m.two_forms().dimension(); ++i) {
      const auto& rep = m.two_forms().representative(i);
      if (!m.closed().from_ambient(m.two_forms().class_of(rep))) CHECK_THROWS_AS(m.closed().class_of(rep), ConsistencyError);
    }
  }
}

TEST_CASE("doubling the degree horizon leaves the bases unchanged") {
  for (const auto& wl : kWeightSets) {
    Weights w(wl);
    for (int p : {2, 3}) {
      if (static_cast<std::size_t>(p) > w.size()) continue;
      auto a = GradedBasis::compute(w, p);
      auto b = GradedBasis::compute(w, p, 2 * a.scanned_through());
      REQUIRE(a.levels().size() == b.levels().size());
      for (std::size_t i = 0; i < a.levels().size(); ++i) {
        CHECK(a.levels()[i].degree == b.levels()[i].degree);
        CHECK(a.levels()[i].dimension() == b.levels()[i].dimension());
      }
    }
  }
}

TEST_CASE("custom representatives change coordinates, not the quotient") {
  Weights w({3, 4, 5});
  auto plain = Model::build(w);
  BasisConventions conv;
  conv.representatives = {{8, {"dx3^dx1"}}, {12, {"x1 dx2^dx3"}}};
  auto custom = Model::build(w, &conv);
  CHECK(custom.two_forms().dimension() == plain.two_forms().dimension());
  auto f = parse_form("dx1^dx3", 3);
  CHECK(plain.two_forms().class_of(f)[1] == 1);
  CHECK(custom.two_forms().class_of(f)[1] == -1);
  auto g = GradedBasis::compute(w, 2);
  CHECK_THROWS_AS(g.set_representatives(9, {parse_form("x2 dx1^dx2", 3)}), PreconditionError);
}

TEST_CASE("graded basis JSON round trip and version check") {
  for (const auto& wl : {std::vector<int>{3, 4, 5}, std::vector<int>{3, 7, 8}}) {
    BasisConventions conv;
    conv.representatives = {{wl[0] + wl[2], {"dx3^dx1"}}};
    auto m = Model::build(Weights(wl), &conv);
    auto j = m.two_forms().to_json();
    auto back = GradedBasis::from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == m.two_forms());
    CHECK(back.to_json().dump() == j.dump());
    auto stale = j;
    stale["engine_version"] = "qhs-0.0.0";
    CHECK_THROWS_AS(GradedBasis::from_json(stale), ParseError);
    auto broken = j;
    broken.erase("levels");
    CHECK_THROWS_AS(GradedBasis::from_json(broken), ParseError);
  }
}
