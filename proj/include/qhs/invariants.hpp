#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "qhs/model.hpp"

namespace qhs {

/// An order of vanishing or tangency; nullopt stands for ∞.
using Order = std::optional<int>;
std::string render_order(const Order& o);  // "inf" for ∞

/// Maximal order of vanishing at 0 of a closed representative.
Order index_of_isotropness(const Model& m, const Vector& closed_coords);

struct TangencyResult {
  Order order;
  PForm alpha;  // [dα] equals the class and α attains `order` on the curve
};

/// Max over α with [dα] = a of the vanishing order of α on the curve.
TangencyResult lagrangian_tangency(const Model& m, const Vector& closed_coords);
Order lagrangian_tangency_order(const Model& m, const Vector& closed_coords);

/// Constant antisymmetric part θ₀ of any representative, as a k×k matrix
/// (entry (i,j) is the coefficient of dxᵢ∧dxⱼ).
Matrix constant_part(const Model& m, const Vector& closed_coords);
std::size_t constant_rank(const Model& m, const Vector& closed_coords);

/// rank θ₀ ≥ 2k − 2n. Throws PreconditionError for n ≤ 0.
bool realizable(const Model& m, const Vector& closed_coords, int n);
/// Least n ≥ 1 for which the class is realizable.
int minimal_dimension(const Model& m, const Vector& closed_coords);

struct InvariantReport {
  Vector cls;
  std::size_t mu = 0;
  Order iota;
  Order lt;
  int minimal_n = 1;
  /// ι = 0: the tangency formula is used without a representative vanishing at 0.
  bool lt_outside_hypothesis = false;
  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport invariant_report(const Model& m, const Vector& closed_coords);

}  // namespace qhs
