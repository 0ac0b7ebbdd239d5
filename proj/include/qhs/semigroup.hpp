#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qhs {

/// Generators λ₁ < … < λ_k of the semigroup of a quasi-homogeneous curve.
/// Always strictly increasing, coprime and independent over the
/// non-negative integers; the constructor rejects anything else.
class Weights {
 public:
  explicit Weights(std::vector<int> lambdas);

  struct Normalized;
  /// Divides by the gcd first; reports the factor that was removed.
  static Normalized normalize(std::vector<int> lambdas);
  /// Parses "3,4,5".
  static std::vector<int> parse_list(const std::string& text);

  std::size_t size() const { return lambdas_.size(); }
  int operator[](std::size_t i) const { return lambdas_[i]; }
  std::span<const int> values() const { return lambdas_; }
  int smallest() const { return lambdas_.front(); }
  int largest() const { return lambdas_.back(); }

  /// Sum of the `p` largest weights: the top degree of a constant p-form.
  int top_sum(std::size_t p) const;

  std::string to_string() const;  // "3,4,5"
  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::vector<int> lambdas_;
};

struct Weights::Normalized {
  Weights weights;
  int gcd = 1;
};

using Representation = std::vector<int>;

bool is_representable(int d, std::span<const int> generators);
bool is_representable(int d, const Weights& w);

/// All non-negative solutions of Σ aᵢλᵢ = d, ascending lexicographically.
std::vector<Representation> representations(int d, std::span<const int> generators);
std::vector<Representation> representations(int d, const Weights& w);

/// Largest non-representable natural number; -1 when every natural is
/// representable (the semigroup contains 1). Throws InvalidWeights when the
/// generators are not coprime.
int frobenius_number(std::span<const int> generators);
int frobenius_number(const Weights& w);

/// Non-representable naturals, ascending. Same rejection rule.
std::vector<int> gaps(std::span<const int> generators);
std::vector<int> gaps(const Weights& w);

/// Closed forms for two coprime generators.
int sylvester_frobenius(int a, int b);
int sylvester_gap_count(int a, int b);

}  // namespace qhs
