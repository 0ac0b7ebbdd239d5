#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qhs/invariants.hpp"
#include "qhs/model.hpp"

namespace qhs {

/// Rows L_{X_s}a for every shift of the action table (the Euler row first).
Matrix tangent_space(const Model& m, const Vector& closed_coords);
/// dim(closed classes) − rank(tangent space).
std::size_t symplectic_multiplicity(const Model& m, const Vector& closed_coords);

enum class SignMode { Fixed, PlusMinus };
enum class Constraint { None, NonZero };

struct ModulusSlot {
  std::size_t index = 0;  // closed basis index
  int degree = 0;
  std::string label;
  std::string name;  // "c", "c1", …
  Constraint constraint = Constraint::None;
  double value = 0;
  std::optional<Rational> exact;
  friend bool operator==(const ModulusSlot&, const ModulusSlot&) = default;
};

/// One orbit family (from enumeration) or one concrete reduced class.
struct NormalForm {
  bool zero = true;
  std::size_t leading = 0;
  int leading_degree = 0;
  std::string leading_label;
  SignMode sign_mode = SignMode::Fixed;
  int sign = 1;
  std::vector<ModulusSlot> moduli;
  /// Directions that are moduli of the generic family but vanish on this stratum.
  std::vector<std::size_t> vanishing;

  /// "±a10 + c*a11"
  std::string family() const;
  /// "c != 0", or empty.
  std::string constraints() const;
  /// With the recorded sign and modulus values, "a10 + 2*a11".
  std::string instance() const;
  /// Coordinates of the family member with the given sign and modulus values.
  Vector point(std::size_t dimension, int sign, const std::vector<Rational>& values) const;

  using Key = std::tuple<bool, std::size_t, SignMode, std::vector<std::size_t>, std::vector<std::size_t>,
                         std::vector<std::size_t>>;
  /// (zero, leading, sign mode, modulus indices, non-zero constraints, vanishing directions).
  Key key() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Moser elimination degree by degree, then Φ_t scaling of the leading
/// coefficient. Moduli are the directions outside the reachable subspace.
NormalForm reduce(const Model& m, const Vector& closed_coords);

/// Invariants used to separate strata: (μ, ι, Lt, minimal n).
using Profile = std::tuple<std::size_t, Order, Order, int>;
Profile profile(const Model& m, const Vector& closed_coords);

/// Orbit families with moduli, one per leading index (split into strata
/// where a modulus vanishing changes the invariants), then the zero class.
std::vector<NormalForm> enumerate_normal_forms(const Model& m);

/// Index of the family a reduced class belongs to.
std::optional<std::size_t> identify(const NormalForm& reduced, const std::vector<NormalForm>& families);

}  // namespace qhs
