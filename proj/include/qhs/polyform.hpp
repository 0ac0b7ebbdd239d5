#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhs/rational.hpp"
#include "qhs/semigroup.hpp"

namespace qhs {

/// x₁^{e₁}⋯x_k^{e_k}. Ordered graded-lexicographically: ordinary degree
/// first, then the exponent vectors lexicographically. "Least monomial"
/// throughout the engine means least in this order.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return exponents.size(); }
  int degree() const;
  int quasi_degree(const Weights& w) const;
  bool is_one() const { return degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

/// Monomials of quasi-degree `d`, least first.
std::vector<Monomial> monomials_of_degree(int d, const Weights& w);
std::optional<Monomial> least_monomial(int d, const Weights& w);

/// Sparse polynomial with exact rational coefficients; zero coefficients
/// are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(const Monomial& m, Rational c);
  static Polynomial constant(std::size_t nvars, Rational c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  Polynomial derivative(std::size_t i) const;
  /// Sum of all coefficients (the value at x = (1,…,1)).
  Rational coefficient_sum() const;
  /// Minimum ordinary degree of a term; nullopt for zero.
  std::optional<int> order_at_zero() const;
  std::map<int, Polynomial> quasi_components(const Weights& w) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Strictly increasing 0-based coordinate indices (i₁<…<i_p) naming dx_{i₁}∧…∧dx_{i_p}.
using IndexTuple = std::vector<int>;

/// Merge two index tuples: 0 when they overlap, otherwise ±1 with the
/// sorted union in `out`.
int wedge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& out);
/// Sort an arbitrary index list, returning the permutation sign (0 on repeats).
int canonicalize_indices(IndexTuple& idx);
int index_weight(const IndexTuple& idx, const Weights& w);

class VectorField;

/// Differential p-form with polynomial coefficients.
class PForm {
 public:
  using Terms = std::map<IndexTuple, Polynomial>;

  PForm() = default;
  PForm(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {}
  /// f (a 0-form).
  static PForm function(const Polynomial& f);
  /// c·m·dx_I for an arbitrary (possibly unsorted) index list.
  static PForm monomial(const Monomial& m, IndexTuple idx, Rational c = 1);
  static PForm differential(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const IndexTuple& idx, const Polynomial& coeff);
  const Polynomial* coefficient(const IndexTuple& idx) const;

  PForm& operator+=(const PForm& o);
  PForm& operator-=(const PForm& o);
  PForm& operator*=(const Rational& c);
  friend PForm operator+(PForm a, const PForm& b) { return a += b; }
  friend PForm operator-(PForm a, const PForm& b) { return a -= b; }
  friend PForm operator*(PForm a, const Rational& c) { return a *= c; }
  friend PForm operator*(const Rational& c, PForm a) { return a *= c; }
  friend PForm operator*(const Polynomial& f, const PForm& w);
  friend bool operator==(const PForm& a, const PForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  int degree_ = 0;
  Terms terms_;
};

PForm wedge(const PForm& a, const PForm& b);
PForm exterior_derivative(const PForm& w);
PForm interior_product(const VectorField& x, const PForm& w);
/// Cartan: L_X ω = d(ι_X ω) + ι_X(dω).
PForm lie_derivative(const VectorField& x, const PForm& w);
std::map<int, PForm> quasi_components(const PForm& w, const Weights& wts);
/// Ordinary-degree order of vanishing at 0; nullopt (∞) for the zero form.
std::optional<int> order_vanishing_at_zero(const PForm& w);

/// Σ Xᵢ ∂/∂xᵢ.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<Polynomial> components) : components_(std::move(components)) {}
  static VectorField euler(const Weights& w);

  std::size_t nvars() const { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Polynomial>& components() const { return components_; }
  std::map<int, VectorField> quasi_components(const Weights& w) const;
  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  std::vector<Polynomial> components_;
};

/// Polynomial in the curve parameter t (exponent → coefficient).
class CurveSeries {
 public:
  using Terms = std::map<int, Rational>;
  CurveSeries() = default;
  static CurveSeries monomial(int exponent, Rational c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int exponent, const Rational& c);
  std::optional<int> order() const;

  CurveSeries& operator+=(const CurveSeries& o);
  CurveSeries& operator*=(const Rational& c);
  friend CurveSeries operator+(CurveSeries a, const CurveSeries& b) { return a += b; }
  friend CurveSeries operator*(const CurveSeries& a, const CurveSeries& b);
  friend bool operator==(const CurveSeries&, const CurveSeries&) = default;

 private:
  Terms terms_;
};

/// Substitute xᵢ := t^{λᵢ}.
CurveSeries restrict_to_curve(const Polynomial& g, const Weights& w);

/// Spanning set of the quasi-degree-δ piece of the ideal of functions
/// vanishing on the monomial curve: m − m₀ for every monomial m of
/// quasi-degree δ other than the least one m₀.
std::vector<Polynomial> toric_relations(int delta, const Weights& w);

/// A minimal generator of the vanishing ideal, with its differential.
struct IdealGenerator {
  int degree = 0;
  Polynomial f;
  PForm df;
};

/// Minimal binomial generators, ascending in quasi-degree. Degrees up to
/// `max_degree` are scanned (default: Frobenius number + 2λ_k + λ₁).
std::vector<IdealGenerator> ideal_generators(const Weights& w, std::optional<int> max_degree = std::nullopt);

/// min over i of ord_t(gᵢ∘f) for a 1-form α = Σ gᵢdxᵢ; nullopt (∞) when all vanish.
std::optional<int> order_vanishing_on_curve(const PForm& alpha, const Weights& w);

// Canonical text: polynomials "x1^2*x2 - 1/2*x3", forms "x1^2*x2 dx1^dx3 + dx2^dx3".
std::string render(const Monomial& m);
std::string render(const Polynomial& p);
std::string render(const PForm& w);
std::string render(const VectorField& x);
/// In the variable t: "t^3 - 1/2*t^8".
std::string render(const CurveSeries& c);

Polynomial parse_polynomial(std::string_view text, std::size_t nvars);
/// The degree of the form is read from the text; `degree_hint` is used for
/// "0" and must match otherwise when non-negative.
PForm parse_form(std::string_view text, std::size_t nvars, int degree_hint = -1);
CurveSeries parse_curve_series(std::string_view text);

}  // namespace qhs
