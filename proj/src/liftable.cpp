#include "qhs/liftable.hpp"

#include <algorithm>

#include "qhs/error.hpp"

namespace qhs {

bool is_admissible_shift(int s, const Weights& w) {
  if (s < 0) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!is_representable(s + w[i], w)) return false;
  return true;
}

std::vector<int> admissible_shifts(const Weights& w, int max_shift) {
  std::vector<int> out;
  for (int s = 0; s <= max_shift; ++s)
    if (is_admissible_shift(s, w)) out.push_back(s);
  return out;
}

LiftableField liftable_field(int s, const Weights& w) {
  if (!is_admissible_shift(s, w))
    throw PreconditionError("no monomial liftable field of shift " + std::to_string(s));
  std::vector<Monomial> monos;
  for (std::size_t i = 0; i < w.size(); ++i) monos.push_back(*least_monomial(s + w[i], w));
  return liftable_field(s, w, monos);
}

LiftableField liftable_field(int s, const Weights& w, const std::vector<Monomial>& monomials) {
  if (monomials.size() != w.size()) throw PreconditionError("liftable_field: one monomial per coordinate expected");
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (monomials[i].quasi_degree(w) != s + w[i])
      throw PreconditionError("liftable_field: monomial has the wrong quasi-degree");
    comps.emplace_back(monomials[i], Rational(w[i]));
  }
  return {s, VectorField(std::move(comps))};
}

bool lifts_curve_velocity(const LiftableField& x, const Weights& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    // t^{s+1}·d(t^{λᵢ})/dt = λᵢ t^{s+λᵢ}
    if (!(restrict_to_curve(x.field[i], w) == CurveSeries::monomial(x.shift + w[i], Rational(w[i])))) return false;
  }
  return true;
}

ActionTable ActionTable::compute(const ClosedBasis& closed) {
  ActionTable t;
  const Weights& w = closed.weights();
  const std::size_t n = closed.dimension();
  int max_shift = n == 0 ? 0 : closed.cutoff() - closed.degree(0);
  t.shifts_ = admissible_shifts(w, max_shift);
  for (int s : t.shifts_) {
    LiftableField x = liftable_field(s, w);
    Matrix m(0, n);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      PForm image = lie_derivative(x.field, closed.representative(i));
      Vector c = closed.class_of(image);
      m.append_row(c);
      rows.push_back(std::move(c));
    }
    t.fields_.push_back(std::move(x));
    t.matrices_.push_back(std::move(m));
    t.rows_.push_back(std::move(rows));
  }
  return t;
}

const Vector& ActionTable::entry(std::size_t shift_index, std::size_t basis_index) const {
  return rows_.at(shift_index).at(basis_index);
}

std::size_t ActionTable::index_of_shift(int s) const {
  auto it = std::find(shifts_.begin(), shifts_.end(), s);
  if (it == shifts_.end()) throw PreconditionError("shift " + std::to_string(s) + " is not in the action table");
  return static_cast<std::size_t>(it - shifts_.begin());
}

Vector ActionTable::act(std::size_t shift_index, const Vector& c) const {
  return left_multiply(c, matrices_.at(shift_index));
}

}  // namespace qhs
