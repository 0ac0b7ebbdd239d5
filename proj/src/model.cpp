#include "qhs/model.hpp"

#include "qhs/error.hpp"

namespace qhs {

Model Model::build(const Weights& w, const BasisConventions* conventions) {
  return from_bases(GradedBasis::compute(w, 2), GradedBasis::compute(w, 3), conventions);
}

Model Model::from_bases(GradedBasis two_forms, GradedBasis three_forms, const BasisConventions* conventions) {
  Model m;
  m.two_ = std::make_shared<GradedBasis>(std::move(two_forms));
  m.three_ = std::make_shared<GradedBasis>(std::move(three_forms));
  const std::size_t k = m.two_->weights().size();
  if (conventions) {
    for (const auto& [degree, texts] : conventions->representatives) {
      std::vector<PForm> reps;
      for (const auto& t : texts) reps.push_back(parse_form(t, k, 2));
      auto it = conventions->labels.find(degree);
      m.two_->set_representatives(degree, std::move(reps),
                                  it == conventions->labels.end() ? std::vector<std::string>{} : it->second);
    }
  }
  m.closed_ = std::make_shared<ClosedBasis>(ClosedBasis::compute(m.two_, m.three_));
  if (conventions) {
    for (const auto& [degree, rows] : conventions->closed_classes) {
      const Level* level = m.two_->level(degree);
      if (!level) throw PreconditionError("closed class convention at a degree without classes");
      Matrix span(0, level->dimension());
      for (const auto& row : rows) {
        Vector v;
        for (const auto& x : row) v.push_back(parse_rational(x));
        span.append_row(v);
      }
      auto it = conventions->closed_labels.find(degree);
      m.closed_->set_classes(degree, span,
                             it == conventions->closed_labels.end() ? std::vector<std::string>{} : it->second);
    }
  }
  m.actions_ = ActionTable::compute(*m.closed_);
  return m;
}

}  // namespace qhs
