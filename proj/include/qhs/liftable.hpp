#pragma once

#include <cstddef>
#include <vector>

#include "qhs/linalg.hpp"
#include "qhs/polyform.hpp"
#include "qhs/restrictions.hpp"

namespace qhs {

/// s ≥ 0 with s + λᵢ in the semigroup for every i, so that each component
/// of X_s has a monomial lift.
bool is_admissible_shift(int s, const Weights& w);
std::vector<int> admissible_shifts(const Weights& w, int max_shift);

/// X_s with X_s∘f = t^{s+1}·df/dt.
struct LiftableField {
  int shift = 0;
  VectorField field;
};

/// Components λᵢ·mᵢ, mᵢ the least monomial of quasi-degree s + λᵢ.
/// Throws PreconditionError for inadmissible s.
LiftableField liftable_field(int s, const Weights& w);
/// Same field built from caller-chosen monomials (one per coordinate).
LiftableField liftable_field(int s, const Weights& w, const std::vector<Monomial>& monomials);

/// Checks X∘f = t^{s+1}·df/dt componentwise.
bool lifts_curve_velocity(const LiftableField& x, const Weights& w);

/// L_{X_s} on the closed classes, for the admissible shifts up to
/// K(f) − (lowest closed degree).
class ActionTable {
 public:
  ActionTable() = default;
  static ActionTable compute(const ClosedBasis& closed);

  const std::vector<int>& shifts() const { return shifts_; }
  const std::vector<LiftableField>& fields() const { return fields_; }
  /// Row i: closed coordinates of L_{X_s} a_i.
  const Matrix& matrix(std::size_t shift_index) const { return matrices_[shift_index]; }
  const Vector& entry(std::size_t shift_index, std::size_t basis_index) const;
  std::size_t index_of_shift(int s) const;
  /// Closed coordinates of L_{X_s}(Σ cᵢ aᵢ).
  Vector act(std::size_t shift_index, const Vector& c) const;

 private:
  std::vector<int> shifts_;
  std::vector<LiftableField> fields_;
  std::vector<Matrix> matrices_;
  std::vector<std::vector<Vector>> rows_;
};

}  // namespace qhs
