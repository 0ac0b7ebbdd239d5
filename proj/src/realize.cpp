#include "qhs/realize.hpp"

#include <algorithm>

#include "qhs/error.hpp"
#include "qhs/invariants.hpp"

namespace qhs {
namespace {

Polynomial linear_form(const Vector& coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(coeffs.size(), i), coeffs[i]);
  return p;
}

Rational bilinear(const Matrix& theta, const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) s += a[i] * theta(i, j) * b[j];
  }
  return s;
}

// Symplectic Gram-Schmidt: columns E₁,F₁,…,E_r,F_r,K₁,… with θ(Eᵢ,Fᵢ)=1.
struct DarbouxBasis {
  std::size_t r = 0;
  std::vector<Vector> vectors;
};

DarbouxBasis darboux_basis(const Matrix& theta) {
  const std::size_t k = theta.rows();
  std::vector<Vector> pool;
  for (std::size_t i = 0; i < k; ++i) {
    Vector e(k);
    e[i] = 1;
    pool.push_back(e);
  }
  DarbouxBasis out;
  std::vector<Vector> kernel_part;
  while (!pool.empty()) {
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t a = 0; a < pool.size() && !pair; ++a)
      for (std::size_t b = a + 1; b < pool.size() && !pair; ++b)
        if (sgn(bilinear(theta, pool[a], pool[b])) != 0) pair = {a, b};
    if (!pair) break;
    Vector e = pool[pair->first], f = pool[pair->second];
    Rational w = bilinear(theta, e, f);
    for (auto& x : f) x /= w;
    std::vector<Vector> rest;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (i == pair->first || i == pair->second) continue;
      Vector z = pool[i];
      Rational zf = bilinear(theta, z, f), ze = bilinear(theta, z, e);
      for (std::size_t j = 0; j < k; ++j) z[j] = z[j] - zf * e[j] + ze * f[j];
      rest.push_back(z);
    }
    out.vectors.push_back(e);
    out.vectors.push_back(f);
    ++out.r;
    pool = std::move(rest);
  }
  for (auto& z : pool) out.vectors.push_back(z);
  return out;
}

CurveSeries on_curve(const Polynomial& p, const Weights& w) { return restrict_to_curve(p, w); }

int leading_variable(const Polynomial& p) {
  int best = static_cast<int>(p.nvars());
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (m.exponents[i] > 0) best = std::min(best, static_cast<int>(i));
  return best;
}

Realization assemble(const Model& m, std::vector<std::pair<Polynomial, Polynomial>> pairs, int n) {
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return leading_variable(a.first) < leading_variable(b.first);
  });
  Realization r;
  r.pairs = std::move(pairs);
  r.curve.n = n;
  for (const auto& [p, q] : r.pairs) {
    r.curve.components.push_back(on_curve(p, m.weights()));
    r.curve.components.push_back(on_curve(q, m.weights()));
  }
  while (static_cast<int>(r.curve.components.size()) < 2 * n) r.curve.components.emplace_back();
  return r;
}

// (xⱼ, −gⱼ) for an antiderivative α = Σ gⱼdxⱼ of the class.
std::optional<Realization> realize_by_antiderivative(const Model& m, const Vector& c, int n) {
  const std::size_t k = m.k();
  if (static_cast<std::size_t>(n) < k) return std::nullopt;
  PForm alpha = lagrangian_tangency(m, c).alpha;
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  for (std::size_t j = 0; j < k; ++j) {
    const Polynomial* g = alpha.coefficient({static_cast<int>(j)});
    pairs.emplace_back(Polynomial::variable(k, j), g ? -*g : Polynomial(k));
  }
  return assemble(m, std::move(pairs), n);
}

// θ₀ = Σ duᵢ∧dvᵢ; Pᵢ = uᵢ, Qᵢ = vᵢ + Gᵢ, and (w_j, H_j) for the kernel directions,
// with d(−Σ Gᵢduᵢ − Σ H_j dw_j) representing the class minus θ₀.
std::optional<Realization> realize_by_darboux(const Model& m, const Vector& c, int n) {
  const std::size_t k = m.k();
  const Weights& w = m.weights();
  Matrix theta = constant_part(m, c);
  DarbouxBasis basis = darboux_basis(theta);
  const std::size_t pairs_needed = k - basis.r;
  if (pairs_needed > static_cast<std::size_t>(n)) return std::nullopt;

  Matrix cols(k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) cols(i, j) = basis.vectors[j][i];
  auto dual = inverse(cols);
  if (!dual) throw ConsistencyError("Darboux basis is singular");
  std::vector<Polynomial> coords;
  for (std::size_t j = 0; j < k; ++j) coords.push_back(linear_form(dual->row_vector(j)));

  PForm theta_form(k, 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (sgn(theta(i, j)) != 0)
        theta_form += PForm::monomial(Monomial::one(k), {static_cast<int>(i), static_cast<int>(j)}, theta(i, j));
  const GradedBasis& two = m.two_forms();
  Vector target = m.closed().to_ambient(c);
  Vector theta_class = two.class_of(theta_form);
  for (std::size_t i = 0; i < target.size(); ++i) target[i] -= theta_class[i];

  std::vector<std::size_t> generators;  // positions in `coords` of u₁…u_r, w₁…
  for (std::size_t i = 0; i < basis.r; ++i) generators.push_back(2 * i);
  for (std::size_t j = 2 * basis.r; j < k; ++j) generators.push_back(j);

  struct Column {
    Monomial mono;
    std::size_t gen;
  };
  std::vector<Column> columns;
  int top = m.closed().cutoff();
  for (int d = 1; d <= top; ++d)
    for (auto& mono : monomials_of_degree(d, w))
      for (std::size_t g = 0; g < generators.size(); ++g) columns.push_back({mono, g});
  Matrix a(two.dimension(), columns.size());
  for (std::size_t col = 0; col < columns.size(); ++col) {
    PForm dl = exterior_derivative(PForm::function(coords[generators[columns[col].gen]]));
    PForm gen = Polynomial(columns[col].mono, Rational(1)) * dl;
    Vector cls = two.class_of(exterior_derivative(gen));
    for (std::size_t r = 0; r < cls.size(); ++r) a(r, col) = cls[r];
  }
  std::vector<std::size_t> order(columns.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    bool kx = columns[x].gen >= basis.r, ky = columns[y].gen >= basis.r;
    if (kx != ky) return kx;
    return columns[x].mono.quasi_degree(w) > columns[y].mono.quasi_degree(w);
  });
  auto y = solve(a, target, order);
  if (!y) return std::nullopt;

  std::vector<Polynomial> shift(generators.size(), Polynomial(k));
  for (std::size_t col = 0; col < columns.size(); ++col)
    if (sgn((*y)[col]) != 0) shift[columns[col].gen].add_term(columns[col].mono, -(*y)[col]);

  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  for (std::size_t i = 0; i < basis.r; ++i) pairs.emplace_back(coords[2 * i], coords[2 * i + 1] + shift[i]);
  for (std::size_t j = 2 * basis.r, g = basis.r; j < k; ++j, ++g) pairs.emplace_back(coords[j], shift[g]);
  return assemble(m, std::move(pairs), n);
}

}  // namespace

std::string ParamCurve::render() const {
  std::string s = "t -> (";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += ", ";
    s += qhs::render(components[i]);
  }
  return s + ")";
}

ParamCurve parse_param_curve(std::string_view text) {
  std::string body(text);
  auto arrow = body.find("->");
  if (arrow != std::string::npos) body = body.substr(arrow + 2);
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty curve specification");
  body = body.substr(first, last - first + 1);
  if (body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  ParamCurve c;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    std::string part = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    c.components.push_back(parse_curve_series(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (c.components.size() % 2 != 0 || c.components.empty())
    throw ParseError("a curve in R^{2n} needs an even number of components");
  c.n = static_cast<int>(c.components.size() / 2);
  return c;
}

Realization realize(const Model& m, const Vector& closed_coords, int n) {
  if (!realizable(m, closed_coords, n))
    throw PreconditionError("class is not realizable by a symplectic form on R^" + std::to_string(2 * n));
  std::optional<Realization> r;
  if (constant_rank(m, closed_coords) == 0)
    r = realize_by_antiderivative(m, closed_coords, n);
  else
    r = realize_by_darboux(m, closed_coords, n);
  if (!r) r = realize_by_antiderivative(m, closed_coords, n);
  if (!r) throw ConsistencyError("no Darboux realization found for a realizable class");
  if (classify_curve(m, r->curve) != closed_coords)
    throw ConsistencyError("realized curve does not reproduce its class");
  return *r;
}

ParamCurve symplectic_normal_form_curve(const Model& m, const Vector& closed_coords, int n) {
  return realize(m, closed_coords, n).curve;
}

Vector classify_curve(const Model& m, const ParamCurve& c) {
  const Weights& w = m.weights();
  const std::size_t k = w.size();
  if (c.components.size() % 2 != 0 || c.components.empty())
    throw PreconditionError("a curve in R^{2n} needs an even number of components");
  for (const auto& comp : c.components)
    for (const auto& [e, coef] : comp.terms())
      if (e < 1) throw PreconditionError("curve components must vanish at t = 0");

  // The component for λᵢ starts at t^{λᵢ}; pure single terms with coefficient 1 win.
  std::vector<int> owner(c.components.size(), -1);
  std::vector<Rational> scale(k);
  auto rank_of = [&](std::size_t j) {
    const auto& terms = c.components[j].terms();
    if (terms.size() == 1) return terms.begin()->second == 1 ? 0 : 1;
    return 2;
  };
  for (std::size_t i = 0; i < k; ++i) {
    std::optional<std::size_t> pick;
    for (std::size_t j = 0; j < c.components.size(); ++j) {
      const auto& terms = c.components[j].terms();
      if (owner[j] >= 0 || terms.empty() || terms.begin()->first != w[i]) continue;
      if (!pick || rank_of(j) < rank_of(*pick)) pick = j;
    }
    if (!pick) throw PreconditionError("no component starts with t^" + std::to_string(w[i]));
    owner[*pick] = static_cast<int>(i);
    scale[i] = c.components[*pick].terms().begin()->second;
  }

  std::vector<Polynomial> embedding;
  for (std::size_t j = 0; j < c.components.size(); ++j) {
    Polynomial g(k);
    for (const auto& [e, coef] : c.components[j].terms()) {
      if (owner[j] >= 0 && e == w[static_cast<std::size_t>(owner[j])] && coef == scale[owner[j]]) {
        g.add_term(Monomial::variable(k, static_cast<std::size_t>(owner[j])), coef);
        continue;
      }
      auto mono = least_monomial(e, w);
      if (!mono)
        throw PreconditionError("exponent " + std::to_string(e) + " is not in the semigroup " + w.to_string());
      g.add_term(*mono, coef);
    }
    embedding.push_back(std::move(g));
  }
  Matrix jacobian(k, embedding.size());
  for (std::size_t j = 0; j < embedding.size(); ++j)
    for (const auto& [mono, coef] : embedding[j].terms())
      if (mono.degree() == 1)
        for (std::size_t i = 0; i < k; ++i)
          if (mono.exponents[i] == 1) jacobian(i, j) += coef;
  if (rank(jacobian) != k) throw PreconditionError("curve components do not span a smooth k-dimensional slice");
  // x ↦ (embedding) hits the curve at x = (t^{λ₁}, …); pull back Σ dp∧dq.
  PForm omega(k, 2);
  for (std::size_t j = 0; j + 1 < embedding.size(); j += 2)
    omega += wedge(exterior_derivative(PForm::function(embedding[j])),
                   exterior_derivative(PForm::function(embedding[j + 1])));
  return m.closed().class_of(omega);
}

}  // namespace qhs
