#include <doctest.h>

#include <cmath>
#include <random>

#include "qhs/classify.hpp"
#include "qhs/error.hpp"

using namespace qhs;

namespace {

const Model& model(const std::vector<int>& wl) {
  static std::map<std::vector<int>, Model> cache;
  auto it = cache.find(wl);
  if (it == cache.end()) it = cache.emplace(wl, Model::build(Weights(wl))).first;
  return it->second;
}

Vector random_class(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-3, 3);
  Vector x(n);
  for (auto& v : x) v = c(rng);
  return x;
}

// exp(μ L_X) on closed coordinates; L_X raises degree, so the series is finite.
Vector flow(const Model& m, std::size_t si, const Rational& mu, const Vector& x) {
  Vector out = x, term = x;
  Rational fact = 1;
  for (int j = 1; j <= static_cast<int>(x.size()) + 1; ++j) {
    term = m.actions().act(si, term);
    fact *= j;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i] * mu / fact;
  }
  return out;
}

bool same_normal_form(const NormalForm& a, const NormalForm& b) {
  if (a.key() != b.key() || a.sign != b.sign || a.moduli.size() != b.moduli.size()) return false;
  for (std::size_t i = 0; i < a.moduli.size(); ++i)
    if (std::abs(a.moduli[i].value - b.moduli[i].value) > 1e-9 * (1 + std::abs(a.moduli[i].value))) return false;
  return true;
}

}  // namespace

TEST_CASE("zero and leading terms") {
  const auto& m = model({3, 4, 5});
  auto nf = reduce(m, Vector(5));
  CHECK(nf.zero);
  CHECK(nf.family() == "0");
  auto a = reduce(m, Vector{0, -5, 7, 1, 2});
  CHECK(a.leading_label == "a8");
  CHECK(a.sign_mode == SignMode::PlusMinus);
  CHECK(a.sign == -1);
  CHECK(a.instance() == "-a8");
  auto b = reduce(m, Vector{0, 0, -4, 3, 0});
  CHECK(b.instance() == "a9");
}

TEST_CASE("families for (3,4,5)") {
  auto fams = enumerate_normal_forms(model({3, 4, 5}));
  std::vector<std::string> names;
  for (const auto& f : fams) names.push_back(f.family());
  CHECK(names == std::vector<std::string>{"a7", "±a8", "a9", "±a10", "a11", "0"});
  for (const auto& f : fams) CHECK(f.moduli.empty());
}

TEST_CASE("families with moduli") {
  const auto& m = model({3, 7, 8});
  auto fams = enumerate_normal_forms(m);
  REQUIRE(fams.size() == 15);
  CHECK(fams[2].family() == "a13 + c1*a14 + c2*a15");
  CHECK(fams[2].constraints() == "c2 != 0");
  CHECK(fams[3].family() == "a13 + c*a14");
  CHECK(fams[3].vanishing.size() == 1);
  auto p = fams[2].point(m.closed().dimension(), 1, {Rational(2), Rational(-1)});
  auto nf = reduce(m, p);
  CHECK(identify(nf, fams) == 2u);
  CHECK(symplectic_multiplicity(m, p) == 4);
  NormalForm stranger = fams[2];
  stranger.leading = 99;
  CHECK_FALSE(identify(stranger, fams).has_value());
}

TEST_CASE("reduce is invariant under quasi-homogeneous scaling and the liftable flows") {
  std::mt19937 rng(8);
  for (const auto& wl : {std::vector<int>{3, 4, 5}, std::vector<int>{3, 5, 7}, std::vector<int>{3, 7, 8}}) {
    const auto& m = model(wl);
    const auto& closed = m.closed();
    for (int t = 0; t < 15; ++t) {
      Vector x = random_class(rng, closed.dimension());
      NormalForm base = reduce(m, x);
      for (Rational s : {Rational(3), Rational(-2), Rational(1, 2)}) {
        Vector y = x;
        for (std::size_t i = 0; i < y.size(); ++i) {
          Rational f = 1;
          for (int e = 0; e < closed.degree(i); ++e) f *= s;
          y[i] *= f;
        }
        CHECK(same_normal_form(reduce(m, y), base));
      }
      for (std::size_t si = 1; si < m.actions().shifts().size(); ++si) {
        if (m.actions().shifts()[si] == 0) continue;
        CHECK(same_normal_form(reduce(m, flow(m, si, make_rational(t % 3 + 1, 2), x)), base));
      }
    }
  }
}

TEST_CASE("reduce is idempotent on its own output") {
  std::mt19937 rng(21);
  const auto& m = model({3, 7, 8});
  for (int t = 0; t < 20; ++t) {
    NormalForm nf = reduce(m, random_class(rng, m.closed().dimension()));
    if (nf.zero) continue;
    std::vector<Rational> vals;
    for (const auto& mod : nf.moduli) vals.push_back(mod.exact ? *mod.exact : Rational(mod.value));
    CHECK(same_normal_form(reduce(m, nf.point(m.closed().dimension(), nf.sign, vals)), nf));
  }
}

TEST_CASE("profiles separate the strata") {
  const auto& m = model({3, 5, 7});
  auto fams = enumerate_normal_forms(m);
  auto with_c = fams[2].point(m.closed().dimension(), 1, {Rational(1)});
  auto without = fams[3].point(m.closed().dimension(), 1, {});
  CHECK(profile(m, with_c) != profile(m, without));
  CHECK(std::get<0>(profile(m, with_c)) == 3);
}
