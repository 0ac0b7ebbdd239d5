#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qhs/liftable.hpp"
#include "qhs/restrictions.hpp"

namespace qhs {

/// Optional replacement representatives and labels, keyed by quasi-degree.
/// Closed classes are rows of rationals in the 2-form level coordinates.
struct BasisConventions {
  std::map<int, std::vector<std::string>> representatives;
  std::map<int, std::vector<std::string>> labels;
  std::map<int, std::vector<std::vector<std::string>>> closed_classes;
  std::map<int, std::vector<std::string>> closed_labels;
};

/// Everything the classifier needs for one semigroup: the 2- and 3-form
/// quotients, the closed classes and the liftable-field action.
class Model {
 public:
  static Model build(const Weights& w, const BasisConventions* conventions = nullptr);
  static Model from_bases(GradedBasis two_forms, GradedBasis three_forms,
                          const BasisConventions* conventions = nullptr);

  const Weights& weights() const { return closed_->weights(); }
  std::size_t k() const { return weights().size(); }
  const GradedBasis& two_forms() const { return *two_; }
  const GradedBasis& three_forms() const { return *three_; }
  const ClosedBasis& closed() const { return *closed_; }
  const ActionTable& actions() const { return actions_; }

 private:
  std::shared_ptr<GradedBasis> two_;
  std::shared_ptr<GradedBasis> three_;
  std::shared_ptr<ClosedBasis> closed_;
  ActionTable actions_;
};

}  // namespace qhs
