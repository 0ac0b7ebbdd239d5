#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhs/model.hpp"

namespace qhs {

/// t ↦ (p₁(t), q₁(t), …, p_n(t), q_n(t)) in Darboux coordinates.
struct ParamCurve {
  int n = 0;
  std::vector<CurveSeries> components;

  /// "t -> (t^3, t^7, t^4, 0, t^5, 0)"
  std::string render() const;
  friend bool operator==(const ParamCurve&, const ParamCurve&) = default;
};

/// Comma-separated polynomials in t, an even number of them. Throws ParseError.
ParamCurve parse_param_curve(std::string_view text);

/// Darboux pairs (Pᵢ, Qᵢ) as polynomials on the k-dimensional slice.
struct Realization {
  ParamCurve curve;
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
};

/// A curve in (ℝ²ⁿ, Σ dpᵢ∧dqᵢ) whose restriction class is `closed_coords`.
/// Throws PreconditionError when the class is not realizable in dimension 2n.
Realization realize(const Model& m, const Vector& closed_coords, int n);
ParamCurve symplectic_normal_form_curve(const Model& m, const Vector& closed_coords, int n);

/// Restriction class (closed coordinates) of Σ dpᵢ∧dqᵢ to a curve.
/// Throws PreconditionError when some λᵢ-component is missing or another
/// component has an exponent outside the semigroup.
Vector classify_curve(const Model& m, const ParamCurve& c);

}  // namespace qhs
