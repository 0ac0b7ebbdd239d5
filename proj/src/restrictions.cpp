#include "qhs/restrictions.hpp"

#include <algorithm>

#include "qhs/error.hpp"

namespace qhs {
namespace {

void increasing_tuples(int p, int k, std::vector<IndexTuple>& out) {
  IndexTuple cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < k; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

std::string default_label(int degree, std::size_t local, std::size_t dim) {
  std::string s = "a" + std::to_string(degree);
  if (dim > 1) s += "_" + std::to_string(local + 1);
  return s;
}

Vector default_coordinates(const Level& level, const Vector& slot_values) {
  Vector residual = reduce_modulo(level.relations, slot_values);
  Vector out;
  out.reserve(level.relations.free.size());
  for (std::size_t f : level.relations.free) out.push_back(residual[f]);
  return out;
}

Level build_level(int delta, int p, const Weights& w) {
  Level level;
  level.degree = delta;
  level.slot_list = slots(delta, p, w);
  level.relations = echelon_reversed(relation_subspace(delta, p, w));
  for (std::size_t f : level.relations.free) {
    const IndexTuple& idx = level.slot_list[f];
    auto m = least_monomial(delta - index_weight(idx, w), w);
    level.representatives.push_back(PForm::monomial(*m, idx));
  }
  std::size_t dim = level.representatives.size();
  for (std::size_t i = 0; i < dim; ++i) level.labels.push_back(default_label(delta, i, dim));
  level.from_default = Matrix::identity(dim);
  return level;
}

}  // namespace

std::vector<IndexTuple> slots(int delta, int p, const Weights& w) {
  std::vector<IndexTuple> all, out;
  increasing_tuples(p, static_cast<int>(w.size()), all);
  for (auto& idx : all)
    if (is_representable(delta - index_weight(idx, w), w)) out.push_back(idx);
  return out;
}

Vector slot_vector(const PForm& homogeneous, const std::vector<IndexTuple>& slot_list) {
  Vector v(slot_list.size());
  for (const auto& [idx, coeff] : homogeneous.terms()) {
    auto it = std::lower_bound(slot_list.begin(), slot_list.end(), idx);
    if (it == slot_list.end() || *it != idx)
      throw ConsistencyError("slot_vector: form has a coefficient outside the slot space");
    v[static_cast<std::size_t>(it - slot_list.begin())] += coeff.coefficient_sum();
  }
  return v;
}

Matrix relation_subspace(int delta, int p, const Weights& w) {
  auto slot_list = slots(delta, p, w);
  Matrix rows(0, slot_list.size());
  if (p < 1) return rows;
  std::size_t k = w.size();
  std::vector<IndexTuple> lower;
  increasing_tuples(p - 1, static_cast<int>(k), lower);
  for (const auto& j : lower) {
    PForm dxj = PForm::monomial(Monomial::one(k), j);
    for (const auto& b : toric_relations(delta - index_weight(j, w), w)) {
      PForm gen = wedge(exterior_derivative(PForm::function(b)), dxj);
      rows.append_row(slot_vector(gen, slot_list));
    }
  }
  return rows;
}

// ------------------------------------------------------------------- Level

Vector Level::coordinates_of_slots(const Vector& slot_values) const {
  return left_multiply(default_coordinates(*this, slot_values), from_default);
}

Vector Level::coordinates(const PForm& homogeneous) const {
  return coordinates_of_slots(slot_vector(homogeneous, slot_list));
}

PForm Level::combination(const Vector& coords) const {
  PForm out(representatives.empty() ? 0 : representatives.front().nvars(),
            representatives.empty() ? 0 : representatives.front().degree());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) out += representatives[i] * coords[i];
  return out;
}

// ------------------------------------------------------------- GradedBasis

GradedBasis GradedBasis::compute(const Weights& w, int p, std::optional<int> horizon) {
  GradedBasis b;
  b.weights_ = w;
  b.p_ = p;
  if (p < 1 || static_cast<std::size_t>(p) > w.size()) {
    b.scanned_ = 0;
    return b;
  }
  const int top = w.top_sum(static_cast<std::size_t>(p));
  int zero_run = 0;
  int delta = 0;
  for (;; ++delta) {
    Level level = build_level(delta, p, w);
    if (level.dimension() > 0) {
      zero_run = 0;
      b.levels_.push_back(std::move(level));
    } else if (delta > top) {
      ++zero_run;
    }
    bool rule_done = zero_run >= w.largest();
    if (rule_done && (!horizon || delta >= *horizon)) break;
  }
  b.scanned_ = delta;
  b.rebuild_index();
  return b;
}

void GradedBasis::rebuild_index() {
  elements_.clear();
  for (const auto& level : levels_)
    for (std::size_t i = 0; i < level.dimension(); ++i) elements_.push_back({level.degree, i});
}

const Level* GradedBasis::level(int degree) const {
  auto it = std::lower_bound(levels_.begin(), levels_.end(), degree,
                             [](const Level& l, int d) { return l.degree < d; });
  return it != levels_.end() && it->degree == degree ? &*it : nullptr;
}

std::size_t GradedBasis::offset(int degree) const {
  std::size_t off = 0;
  for (const auto& l : levels_) {
    if (l.degree >= degree) break;
    off += l.dimension();
  }
  return off;
}

std::string GradedBasis::label(std::size_t i) const {
  const auto& e = elements_.at(i);
  return level(e.degree)->labels[e.local];
}

const PForm& GradedBasis::representative(std::size_t i) const {
  const auto& e = elements_.at(i);
  return level(e.degree)->representatives[e.local];
}

Vector GradedBasis::class_of(const PForm& w) const {
  Vector out(dimension());
  if (w.is_zero()) return out;
  if (w.degree() != p_) throw PreconditionError("class_of: form degree does not match the basis");
  for (const auto& [d, part] : quasi_components(w, weights_)) {
    const Level* l = level(d);
    if (!l) continue;
    Vector c = l->coordinates(part);
    std::size_t off = offset(d);
    for (std::size_t i = 0; i < c.size(); ++i) out[off + i] = c[i];
  }
  return out;
}

PForm GradedBasis::combination(const Vector& coords) const {
  PForm out(weights_.size(), p_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) out += representative(i) * coords[i];
  return out;
}

void GradedBasis::set_representatives(int degree, std::vector<PForm> reps, std::vector<std::string> labels) {
  auto it = std::find_if(levels_.begin(), levels_.end(), [&](const Level& l) { return l.degree == degree; });
  if (it == levels_.end()) throw PreconditionError("set_representatives: no level at degree " + std::to_string(degree));
  Level& level = *it;
  if (reps.size() != level.dimension())
    throw PreconditionError("set_representatives: wrong number of representatives at degree " + std::to_string(degree));
  Matrix m(0, level.dimension());
  for (const auto& r : reps) {
    auto comps = quasi_components(r, weights_);
    if (r.degree() != p_ || comps.size() != 1 || comps.begin()->first != degree)
      throw PreconditionError("set_representatives: representative is not of quasi-degree " + std::to_string(degree));
    m.append_row(default_coordinates(level, slot_vector(r, level.slot_list)));
  }
  auto inv = inverse(m);
  if (!inv) throw PreconditionError("set_representatives: representatives do not span degree " + std::to_string(degree));
  level.representatives = std::move(reps);
  level.from_default = *inv;
  if (labels.empty())
    for (std::size_t i = 0; i < level.dimension(); ++i) labels.push_back(default_label(degree, i, level.dimension()));
  if (labels.size() != level.dimension()) throw PreconditionError("set_representatives: label count mismatch");
  level.labels = std::move(labels);
}

nlohmann::json GradedBasis::to_json() const {
  using nlohmann::json;
  json levels = json::array();
  for (const auto& l : levels_) {
    json slots_j = json::array();
    for (const auto& s : l.slot_list) {
      json t = json::array();
      for (int i : s) t.push_back(i + 1);
      slots_j.push_back(t);
    }
    json rel = json::array();
    for (std::size_t r = 0; r < l.relations.rank(); ++r) {
      json row = json::array();
      for (const auto& x : l.relations.reduced.row(r)) row.push_back(to_string(x));
      rel.push_back(row);
    }
    json reps = json::array();
    for (const auto& r : l.representatives) reps.push_back(render(r));
    levels.push_back({{"degree", l.degree},
                      {"slots", slots_j},
                      {"relation_rank", l.relations.rank()},
                      {"relations", rel},
                      {"dimension", l.dimension()},
                      {"representatives", reps},
                      {"labels", l.labels}});
  }
  std::vector<int> lambdas(weights_.values().begin(), weights_.values().end());
  return {{"engine_version", kEngineVersion}, {"weights", lambdas}, {"form_degree", p_},
          {"scanned_through", scanned_},      {"levels", levels}};
}

GradedBasis GradedBasis::from_json(const nlohmann::json& j) {
  try {
    if (j.at("engine_version").get<std::string>() != kEngineVersion)
      throw ParseError("graded basis document has a different engine version");
    GradedBasis b;
    b.weights_ = Weights(j.at("weights").get<std::vector<int>>());
    b.p_ = j.at("form_degree").get<int>();
    b.scanned_ = j.at("scanned_through").get<int>();
    std::size_t k = b.weights_.size();
    for (const auto& lj : j.at("levels")) {
      Level l;
      l.degree = lj.at("degree").get<int>();
      for (const auto& s : lj.at("slots")) {
        IndexTuple t;
        for (int i : s.get<std::vector<int>>()) t.push_back(i - 1);
        l.slot_list.push_back(t);
      }
      Matrix rel(0, l.slot_list.size());
      for (const auto& row : lj.at("relations")) {
        Vector v;
        for (const auto& x : row) v.push_back(parse_rational(x.get<std::string>()));
        rel.append_row(v);
      }
      l.relations = echelon_reversed(rel);
      if (l.relations.rank() != lj.at("relation_rank").get<std::size_t>())
        throw ParseError("graded basis document: inconsistent relation rank");
      std::size_t dim = l.relations.free.size();
      l.from_default = Matrix::identity(dim);
      std::vector<PForm> reps;
      for (const auto& r : lj.at("representatives")) reps.push_back(parse_form(r.get<std::string>(), k, b.p_));
      for (std::size_t f : l.relations.free) {
        const IndexTuple& idx = l.slot_list[f];
        l.representatives.push_back(
            PForm::monomial(*least_monomial(l.degree - index_weight(idx, b.weights_), b.weights_), idx));
      }
      b.levels_.push_back(std::move(l));
      b.rebuild_index();
      b.set_representatives(b.levels_.back().degree, std::move(reps),
                            lj.at("labels").get<std::vector<std::string>>());
    }
    b.rebuild_index();
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graded basis document: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("graded basis document: ") + e.what());
  } catch (const InvalidWeights& e) {
    throw ParseError(std::string("graded basis document: ") + e.what());
  }
}

bool operator==(const GradedBasis& a, const GradedBasis& b) {
  if (!(a.weights_ == b.weights_) || a.p_ != b.p_ || a.scanned_ != b.scanned_ || a.levels_.size() != b.levels_.size())
    return false;
  for (std::size_t i = 0; i < a.levels_.size(); ++i) {
    const Level &x = a.levels_[i], &y = b.levels_[i];
    if (x.degree != y.degree || x.slot_list != y.slot_list || !(x.relations.reduced == y.relations.reduced) ||
        x.representatives != y.representatives || x.labels != y.labels || !(x.from_default == y.from_default))
      return false;
  }
  return true;
}

// ------------------------------------------------------------- ClosedBasis

ClosedBasis ClosedBasis::compute(std::shared_ptr<const GradedBasis> two_forms,
                                 std::shared_ptr<const GradedBasis> three_forms) {
  if (!(two_forms->weights() == three_forms->weights()) || two_forms->form_degree() != 2 ||
      three_forms->form_degree() != 3)
    throw PreconditionError("closed_subspace: expects 2-form and 3-form bases over the same weights");
  ClosedBasis c;
  c.two_ = std::move(two_forms);
  c.three_ = std::move(three_forms);
  for (const auto& l2 : c.two_->levels()) {
    const Level* l3 = c.three_->level(l2.degree);
    std::size_t width = l3 ? l3->dimension() : 0;
    Matrix d(0, width);
    for (const auto& rep : l2.representatives) {
      PForm dw = exterior_derivative(rep);
      d.append_row(l3 ? l3->coordinates(dw) : Vector{});
    }
    Matrix dt = d.transposed();
    Matrix ker = kernel(dt, echelon_reversed(dt));
    if (ker.rows() == 0) continue;
    ClosedLevel cl;
    cl.degree = l2.degree;
    cl.span = ker;
    c.levels_.push_back(std::move(cl));
  }
  for (auto& cl : c.levels_) {
    cl.span_echelon = echelon(cl.span);
    for (std::size_t r = 0; r < cl.span.rows(); ++r)
      cl.representatives.push_back(c.closed_representative(cl.degree, cl.span.row_vector(r)));
  }
  c.rebuild_index();
  return c;
}

void ClosedBasis::rebuild_index() {
  degrees_.clear();
  level_of_.clear();
  local_of_.clear();
  for (std::size_t li = 0; li < levels_.size(); ++li) {
    auto& cl = levels_[li];
    const Level* amb = two_->level(cl.degree);
    if (cl.labels.size() != cl.dimension()) {
      cl.labels.clear();
      for (std::size_t r = 0; r < cl.dimension(); ++r) {
        std::optional<std::size_t> unit;
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < cl.span.cols(); ++j)
          if (sgn(cl.span(r, j)) != 0) {
            ++nonzero;
            if (cl.span(r, j) == 1) unit = j;
          }
        if (nonzero == 1 && unit)
          cl.labels.push_back(amb->labels[*unit]);
        else
          cl.labels.push_back(default_label(cl.degree, r, cl.dimension()));
      }
    }
    for (std::size_t r = 0; r < cl.dimension(); ++r) {
      degrees_.push_back(cl.degree);
      level_of_.push_back(li);
      local_of_.push_back(r);
    }
  }
}

std::string ClosedBasis::label(std::size_t i) const { return levels_[level_of_.at(i)].labels[local_of_[i]]; }

const PForm& ClosedBasis::representative(std::size_t i) const {
  return levels_[level_of_.at(i)].representatives[local_of_[i]];
}

std::pair<std::size_t, std::size_t> ClosedBasis::range(int degree) const {
  auto lo = std::lower_bound(degrees_.begin(), degrees_.end(), degree);
  auto hi = std::upper_bound(degrees_.begin(), degrees_.end(), degree);
  return {static_cast<std::size_t>(lo - degrees_.begin()), static_cast<std::size_t>(hi - degrees_.begin())};
}

std::optional<Vector> ClosedBasis::from_ambient(const Vector& ambient) const {
  Vector out(dimension());
  for (const auto& l2 : two_->levels()) {
    std::size_t off = two_->offset(l2.degree);
    Vector part(ambient.begin() + static_cast<std::ptrdiff_t>(off),
                ambient.begin() + static_cast<std::ptrdiff_t>(off + l2.dimension()));
    if (is_zero(part)) continue;
    auto [first, last] = range(l2.degree);
    if (first == last) return std::nullopt;
    const auto& cl = levels_[level_of_[first]];
    auto y = solve(cl.span.transposed(), part);
    if (!y) return std::nullopt;
    for (std::size_t i = 0; i < y->size(); ++i) out[first + i] = (*y)[i];
  }
  return out;
}

Vector ClosedBasis::to_ambient(const Vector& closed) const {
  Vector out(two_->dimension());
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (sgn(closed[i]) == 0) continue;
    const auto& cl = levels_[level_of_[i]];
    std::size_t off = two_->offset(cl.degree);
    for (std::size_t j = 0; j < cl.span.cols(); ++j) out[off + j] += closed[i] * cl.span(local_of_[i], j);
  }
  return out;
}

Vector ClosedBasis::class_of(const PForm& w) const {
  auto c = from_ambient(two_->class_of(w));
  if (!c) throw ConsistencyError("class_of: restriction is not in the closed subspace");
  return *c;
}

PForm ClosedBasis::combination(const Vector& coords) const {
  PForm out(weights().size(), 2);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) out += representative(i) * coords[i];
  return out;
}

void ClosedBasis::set_classes(int degree, const Matrix& span, std::vector<std::string> labels) {
  auto it = std::find_if(levels_.begin(), levels_.end(), [&](const ClosedLevel& l) { return l.degree == degree; });
  if (it == levels_.end()) throw PreconditionError("set_classes: no closed classes at degree " + std::to_string(degree));
  if (span.rows() != it->dimension() || span.cols() != it->span.cols() || rank(span) != span.rows())
    throw PreconditionError("set_classes: replacement has the wrong shape or rank");
  const Level* l3 = three_->level(degree);
  const Level* l2 = two_->level(degree);
  for (std::size_t r = 0; r < span.rows(); ++r) {
    PForm dw = exterior_derivative(l2->combination(span.row_vector(r)));
    if (l3 && !is_zero(l3->coordinates(dw)))
      throw PreconditionError("set_classes: class at degree " + std::to_string(degree) + " is not closed");
  }
  it->span = span;
  it->span_echelon = echelon(span);
  it->representatives.clear();
  for (std::size_t r = 0; r < span.rows(); ++r)
    it->representatives.push_back(closed_representative(degree, span.row_vector(r)));
  it->labels = std::move(labels);
  rebuild_index();
}

PForm ClosedBasis::closed_representative(int degree, const Vector& level_coords) const {
  const Level* l2 = two_->level(degree);
  PForm form = l2->combination(level_coords);
  if (exterior_derivative(form).is_zero()) return form;
  auto out = closed_form_in_class(*l2, weights(), level_coords, 0);
  if (!out)
    throw ConsistencyError("no closed representative exists for a closed class at degree " + std::to_string(degree));
  if (!exterior_derivative(*out).is_zero() || l2->coordinates(*out) != level_coords)
    throw ConsistencyError("closed representative check failed at degree " + std::to_string(degree));
  return *out;
}

std::optional<PForm> closed_form_in_class(const Level& level, const Weights& w, const Vector& level_coords,
                                          int min_order) {
  const std::size_t k = w.size();
  struct Unknown {
    Monomial m;
    std::size_t slot;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t s = 0; s < level.slot_list.size(); ++s)
    for (auto& m : monomials_of_degree(level.degree - index_weight(level.slot_list[s], w), w))
      if (m.degree() >= min_order) unknowns.push_back({m, s});
  const std::size_t nrel = level.relations.rank();
  const std::size_t ncols = unknowns.size() + nrel;

  std::map<std::pair<Monomial, IndexTuple>, std::size_t> d_rows;
  std::vector<PForm> d_of;
  for (const auto& u : unknowns) {
    d_of.push_back(exterior_derivative(PForm::monomial(u.m, level.slot_list[u.slot])));
    for (const auto& [idx, p] : d_of.back().terms())
      for (const auto& [m, c] : p.terms()) d_rows.try_emplace({m, idx}, d_rows.size());
  }
  const std::size_t nslots = level.slot_list.size();
  Matrix a(nslots + d_rows.size(), ncols);
  Vector rhs(a.rows());
  Vector target = slot_vector(level.combination(level_coords), level.slot_list);
  for (std::size_t s = 0; s < nslots; ++s) rhs[s] = target[s];
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    a(unknowns[u].slot, u) = 1;
    for (const auto& [idx, p] : d_of[u].terms())
      for (const auto& [m, c] : p.terms()) a(nslots + d_rows.at({m, idx}), u) += c;
  }
  for (std::size_t r = 0; r < nrel; ++r)
    for (std::size_t s = 0; s < nslots; ++s) a(s, unknowns.size() + r) = -level.relations.reduced(r, s);
  auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  PForm out(k, 2);
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (sgn((*x)[u]) != 0) out += PForm::monomial(unknowns[u].m, level.slot_list[unknowns[u].slot], (*x)[u]);
  return out;
}

}  // namespace qhs
