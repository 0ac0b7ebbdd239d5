#include "qhs/invariants.hpp"

#include <algorithm>

#include "qhs/classify.hpp"
#include "qhs/error.hpp"

namespace qhs {
namespace {

Order min_order(const Order& a, const Order& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

Vector level_part(const GradedBasis& basis, const Vector& ambient, const Level& level) {
  std::size_t off = basis.offset(level.degree);
  return Vector(ambient.begin() + static_cast<std::ptrdiff_t>(off),
                ambient.begin() + static_cast<std::ptrdiff_t>(off + level.dimension()));
}

}  // namespace

std::string render_order(const Order& o) { return o ? std::to_string(*o) : "inf"; }

Order index_of_isotropness(const Model& m, const Vector& closed_coords) {
  const GradedBasis& two = m.two_forms();
  Vector ambient = m.closed().to_ambient(closed_coords);
  Order best;
  for (const auto& level : two.levels()) {
    Vector part = level_part(two, ambient, level);
    if (is_zero(part)) continue;
    if (!closed_form_in_class(level, m.weights(), part, 0))
      throw ConsistencyError("index_of_isotropness: class part at degree " + std::to_string(level.degree) +
                             " has no closed representative");
    // Feasibility is monotone in the order and bounded by the largest
    // monomial degree present at this quasi-degree.
    int v = 0;
    while (closed_form_in_class(level, m.weights(), part, v + 1)) ++v;
    best = min_order(best, v);
  }
  return best;
}

TangencyResult lagrangian_tangency(const Model& m, const Vector& closed_coords) {
  const GradedBasis& two = m.two_forms();
  const Weights& w = m.weights();
  const std::size_t k = w.size();
  Vector ambient = m.closed().to_ambient(closed_coords);
  TangencyResult result{std::nullopt, PForm(k, 1)};
  for (const auto& level : two.levels()) {
    Vector part = level_part(two, ambient, level);
    if (is_zero(part)) continue;
    struct Slot {
      std::size_t coord;
      int exponent;
      PForm form;
    };
    std::vector<Slot> one_slots;
    for (std::size_t i = 0; i < k; ++i) {
      int e = level.degree - w[i];
      if (e < 0 || !is_representable(e, w)) continue;
      one_slots.push_back({i, e, PForm::monomial(*least_monomial(e, w), {static_cast<int>(i)})});
    }
    Matrix d(0, level.dimension());
    for (const auto& s : one_slots) d.append_row(level.coordinates(exterior_derivative(s.form)));
    std::vector<int> thresholds;
    for (const auto& s : one_slots) thresholds.push_back(s.exponent);
    std::sort(thresholds.rbegin(), thresholds.rend());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    bool found = false;
    for (int threshold : thresholds) {
      std::vector<std::size_t> used;
      Matrix sub(0, level.dimension());
      for (std::size_t r = 0; r < one_slots.size(); ++r)
        if (one_slots[r].exponent >= threshold) {
          used.push_back(r);
          sub.append_row(d.row(r));
        }
      auto y = solve(sub.transposed(), part);
      if (!y) continue;
      for (std::size_t j = 0; j < used.size(); ++j)
        if (sgn((*y)[j]) != 0) result.alpha += one_slots[used[j]].form * (*y)[j];
      result.order = min_order(result.order, threshold);
      found = true;
      break;
    }
    if (!found)
      throw ConsistencyError("lagrangian_tangency: no antiderivative at degree " + std::to_string(level.degree));
  }
  return result;
}

Order lagrangian_tangency_order(const Model& m, const Vector& closed_coords) {
  return lagrangian_tangency(m, closed_coords).order;
}

Matrix constant_part(const Model& m, const Vector& closed_coords) {
  const std::size_t k = m.k();
  Matrix theta(k, k);
  PForm w = m.closed().combination(closed_coords);
  Monomial one = Monomial::one(k);
  for (const auto& [idx, p] : w.terms()) {
    Rational c = p.coefficient(one);
    if (sgn(c) == 0) continue;
    auto i = static_cast<std::size_t>(idx[0]), j = static_cast<std::size_t>(idx[1]);
    theta(i, j) += c;
    theta(j, i) -= c;
  }
  return theta;
}

std::size_t constant_rank(const Model& m, const Vector& closed_coords) {
  return rank(constant_part(m, closed_coords));
}

bool realizable(const Model& m, const Vector& closed_coords, int n) {
  if (n <= 0) throw PreconditionError("realizable: n must be positive");
  return static_cast<long>(constant_rank(m, closed_coords)) >= 2L * static_cast<long>(m.k()) - 2L * n;
}

int minimal_dimension(const Model& m, const Vector& closed_coords) {
  int r = static_cast<int>(constant_rank(m, closed_coords));
  return std::max(1, static_cast<int>(m.k()) - r / 2);
}

InvariantReport invariant_report(const Model& m, const Vector& closed_coords) {
  InvariantReport r;
  r.cls = closed_coords;
  r.mu = symplectic_multiplicity(m, closed_coords);
  r.iota = index_of_isotropness(m, closed_coords);
  r.lt = lagrangian_tangency_order(m, closed_coords);
  r.minimal_n = minimal_dimension(m, closed_coords);
  r.lt_outside_hypothesis = r.iota && *r.iota == 0;
  return r;
}

}  // namespace qhs
