#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhs/linalg.hpp"
#include "qhs/polyform.hpp"
#include "qhs/semigroup.hpp"

namespace qhs {

inline constexpr const char* kEngineVersion = "qhs-1.0.0";

/// Index tuples I (increasing, length p) with δ − λ_I in the semigroup.
std::vector<IndexTuple> slots(int delta, int p, const Weights& w);

/// Value of a quasi-homogeneous p-form of degree δ on each slot: the sum of
/// the coefficients of its coefficient polynomial there.
Vector slot_vector(const PForm& homogeneous, const std::vector<IndexTuple>& slot_list);

/// Rows spanning the slot images of d(b·dx_J), b a toric binomial.
Matrix relation_subspace(int delta, int p, const Weights& w);

/// One quasi-degree of the quotient of p-form restrictions.
struct Level {
  int degree = 0;
  std::vector<IndexTuple> slot_list;
  Echelon relations;                   // pivots on the highest slots
  std::vector<PForm> representatives;  // one per quotient direction
  std::vector<std::string> labels;
  Matrix from_default;                 // default coordinates → representative coordinates

  std::size_t dimension() const { return representatives.size(); }
  /// Coordinates of a degree-δ form over `representatives`.
  Vector coordinates(const PForm& homogeneous) const;
  Vector coordinates_of_slots(const Vector& slot_values) const;
  PForm combination(const Vector& coords) const;
};

/// A closed 2-form of the level's degree in the given class, built only from
/// monomials of ordinary degree ≥ `min_order`; nullopt when none exists.
std::optional<PForm> closed_form_in_class(const Level& level, const Weights& w, const Vector& level_coords,
                                          int min_order = 0);

/// Graded quotient of p-form restrictions to the monomial curve of `w`.
class GradedBasis {
 public:
  struct Element {
    int degree;
    std::size_t local;
  };

  GradedBasis() = default;
  /// Scans quasi-degrees upward; with `horizon` set, every degree up to it
  /// is scanned whether or not the stopping rule has fired.
  static GradedBasis compute(const Weights& w, int p, std::optional<int> horizon = std::nullopt);

  const Weights& weights() const { return weights_; }
  int form_degree() const { return p_; }
  /// Levels with positive dimension, ascending.
  const std::vector<Level>& levels() const { return levels_; }
  /// Last degree examined; every class above the top level vanishes.
  int scanned_through() const { return scanned_; }
  int top_degree() const { return levels_.empty() ? -1 : levels_.back().degree; }

  std::size_t dimension() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Level* level(int degree) const;
  std::size_t offset(int degree) const;
  std::string label(std::size_t i) const;
  const PForm& representative(std::size_t i) const;

  Vector class_of(const PForm& w) const;
  PForm combination(const Vector& coords) const;

  /// Replace a level's representatives (forms of that degree, spanning the
  /// quotient). Throws PreconditionError otherwise.
  void set_representatives(int degree, std::vector<PForm> reps, std::vector<std::string> labels = {});

  nlohmann::json to_json() const;
  static GradedBasis from_json(const nlohmann::json& j);

  friend bool operator==(const GradedBasis& a, const GradedBasis& b);

 private:
  void rebuild_index();

  Weights weights_{std::vector<int>{1}};
  int p_ = 2;
  int scanned_ = 0;
  std::vector<Level> levels_;
  std::vector<Element> elements_;
};

/// Closed 2-form classes: kernel of [ω] ↦ [dω] per degree, each with an
/// exactly closed representative.
class ClosedBasis {
 public:
  struct ClosedLevel {
    int degree = 0;
    Matrix span;        // rows: closed classes in ambient level coordinates
    Echelon span_echelon;
    std::vector<PForm> representatives;
    std::vector<std::string> labels;
    std::size_t dimension() const { return span.rows(); }
  };

  ClosedBasis() = default;
  static ClosedBasis compute(std::shared_ptr<const GradedBasis> two_forms,
                             std::shared_ptr<const GradedBasis> three_forms);

  const GradedBasis& ambient() const { return *two_; }
  const GradedBasis& three_forms() const { return *three_; }
  const Weights& weights() const { return two_->weights(); }
  const std::vector<ClosedLevel>& levels() const { return levels_; }
  std::size_t dimension() const { return degrees_.size(); }
  int degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::string label(std::size_t i) const;
  const PForm& representative(std::size_t i) const;
  /// K(f): top degree carrying a closed class; -1 when there is none.
  int cutoff() const { return levels_.empty() ? -1 : levels_.back().degree; }
  /// Index range [first, last) of the classes at `degree`.
  std::pair<std::size_t, std::size_t> range(int degree) const;

  /// Closed coordinates of an ambient coordinate vector; nullopt when the
  /// class is not closed.
  std::optional<Vector> from_ambient(const Vector& ambient) const;
  Vector to_ambient(const Vector& closed) const;
  /// Closed coordinates of a 2-form; throws ConsistencyError if not closed.
  Vector class_of(const PForm& w) const;
  PForm combination(const Vector& coords) const;

  /// Replace the closed classes at one degree (rows in ambient level
  /// coordinates). Representatives are recomputed.
  void set_classes(int degree, const Matrix& span, std::vector<std::string> labels = {});

 private:
  void rebuild_index();
  PForm closed_representative(int degree, const Vector& level_coords) const;

  std::shared_ptr<const GradedBasis> two_;
  std::shared_ptr<const GradedBasis> three_;
  std::vector<ClosedLevel> levels_;
  std::vector<int> degrees_;
  std::vector<std::size_t> level_of_;
  std::vector<std::size_t> local_of_;
};

}  // namespace qhs
