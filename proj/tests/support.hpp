#pragma once

#include <random>
#include <vector>

#include "qhs/polyform.hpp"

namespace qhs::testing {

inline Polynomial random_poly(std::mt19937& rng, std::size_t nvars, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-5, 5);
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> ex(nvars);
    for (auto& x : ex) x = e(rng);
    p.add_term(Monomial(ex), Rational(c(rng)));
  }
  return p;
}

inline std::vector<IndexTuple> index_tuples(std::size_t nvars, int degree) {
  std::vector<IndexTuple> tuples;
  IndexTuple cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == degree) {
      tuples.push_back(cur);
      return;
    }
    for (int i = start; i < static_cast<int>(nvars); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return tuples;
}

inline PForm random_form(std::mt19937& rng, std::size_t nvars, int degree) {
  PForm w(nvars, degree);
  for (auto& t : index_tuples(nvars, degree)) w.add(t, random_poly(rng, nvars, 3, 3));
  return w;
}

inline VectorField random_field(std::mt19937& rng, std::size_t nvars) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < nvars; ++i) comps.push_back(random_poly(rng, nvars, 2, 2));
  return VectorField(std::move(comps));
}

/// Random p-form, quasi-homogeneous of quasi-degree δ.
inline PForm random_homogeneous_form(std::mt19937& rng, const Weights& w, int p, int delta) {
  std::uniform_int_distribution<int> c(-4, 4);
  PForm out(w.size(), p);
  for (auto& t : index_tuples(w.size(), p)) {
    int rest = delta - index_weight(t, w);
    if (rest < 0) continue;
    for (auto& m : monomials_of_degree(rest, w)) out += PForm::monomial(m, t, Rational(c(rng)));
  }
  return out;
}

/// Random quasi-homogeneous function of degree δ vanishing on the curve.
inline Polynomial random_ideal_element(std::mt19937& rng, const Weights& w, int delta) {
  std::uniform_int_distribution<int> c(-3, 3);
  Polynomial b(w.size());
  for (auto& rel : toric_relations(delta, w)) b += Rational(c(rng)) * rel;
  return b;
}

}  // namespace qhs::testing
