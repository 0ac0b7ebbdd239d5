#include "qhs/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "qhs/error.hpp"

namespace qhs {
namespace {

Vector slice(const Vector& v, std::size_t lo, std::size_t hi) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(lo), v.begin() + static_cast<std::ptrdiff_t>(hi));
}

// x·exp(A) for nilpotent A.
Vector apply_exponential(const Vector& x, const Matrix& a) {
  Vector result = x, term = x;
  for (std::size_t n = 1; n <= x.size() + 1; ++n) {
    term = left_multiply(term, a);
    if (is_zero(term)) break;
    for (auto& t : term) t /= static_cast<long>(n);
    for (std::size_t i = 0; i < x.size(); ++i) result[i] += term[i];
  }
  return result;
}

// Exact |r|^{1/n} when numerator and denominator are perfect n-th powers.
std::optional<Rational> exact_root(const Rational& r, int n) {
  mpz_class num = abs(r.get_num()), den = r.get_den(), a, b;
  if (mpz_root(a.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  if (mpz_root(b.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  return Rational(a, b);
}

Rational power(const Rational& r, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= r;
  return out;
}

std::string format_value(const ModulusSlot& s) {
  if (s.exact) return to_string(*s.exact);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", s.value);
  return buf;
}

bool value_is_zero(const ModulusSlot& s) { return s.exact ? sgn(*s.exact) == 0 : std::abs(s.value) < 1e-12; }

void name_moduli(NormalForm& nf) {
  std::sort(nf.moduli.begin(), nf.moduli.end(),
            [](const ModulusSlot& a, const ModulusSlot& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < nf.moduli.size(); ++i)
    nf.moduli[i].name = nf.moduli.size() == 1 ? "c" : "c" + std::to_string(i + 1);
}

}  // namespace

Matrix tangent_space(const Model& m, const Vector& closed_coords) {
  const auto& acts = m.actions();
  Matrix t(0, m.closed().dimension());
  for (std::size_t si = 0; si < acts.shifts().size(); ++si) t.append_row(acts.act(si, closed_coords));
  return t;
}

std::size_t symplectic_multiplicity(const Model& m, const Vector& closed_coords) {
  return m.closed().dimension() - rank(tangent_space(m, closed_coords));
}

std::string NormalForm::family() const {
  if (zero) return "0";
  std::string s = (sign_mode == SignMode::PlusMinus ? "±" : "") + leading_label;
  for (const auto& mod : moduli) s += " + " + mod.name + "*" + mod.label;
  return s;
}

std::string NormalForm::constraints() const {
  std::string s;
  for (const auto& mod : moduli)
    if (mod.constraint == Constraint::NonZero) s += (s.empty() ? "" : ", ") + mod.name + " != 0";
  return s;
}

std::string NormalForm::instance() const {
  if (zero) return "0";
  std::string s = (sign < 0 ? "-" : "") + leading_label;
  for (const auto& mod : moduli) {
    if (value_is_zero(mod)) continue;
    std::string v = format_value(mod);
    if (v.front() == '-')
      s += " - " + v.substr(1) + "*" + mod.label;
    else
      s += " + " + v + "*" + mod.label;
  }
  return s;
}

Vector NormalForm::point(std::size_t dimension, int sgn_value, const std::vector<Rational>& values) const {
  Vector p(dimension);
  if (zero) return p;
  p[leading] = sgn_value;
  for (std::size_t i = 0; i < moduli.size() && i < values.size(); ++i) p[moduli[i].index] = values[i];
  return p;
}

NormalForm::Key NormalForm::key() const {
  std::vector<std::size_t> mods, nonzero;
  for (const auto& mod : moduli) {
    mods.push_back(mod.index);
    if (mod.constraint == Constraint::NonZero) nonzero.push_back(mod.index);
  }
  auto v = vanishing;
  std::sort(v.begin(), v.end());
  return {zero, zero ? 0 : leading, zero ? SignMode::Fixed : sign_mode, mods, nonzero, v};
}

NormalForm reduce(const Model& m, const Vector& closed_coords) {
  const ClosedBasis& closed = m.closed();
  const ActionTable& acts = m.actions();
  const std::size_t n = closed.dimension();
  NormalForm nf;
  auto lead_it = std::find_if(closed_coords.begin(), closed_coords.end(), [](const Rational& r) { return sgn(r) != 0; });
  if (lead_it == closed_coords.end()) return nf;
  nf.zero = false;
  nf.leading = static_cast<std::size_t>(lead_it - closed_coords.begin());
  nf.leading_degree = closed.degree(nf.leading);
  nf.leading_label = closed.label(nf.leading);

  std::vector<std::size_t> positive;
  for (std::size_t si = 0; si < acts.shifts().size(); ++si)
    if (acts.shifts()[si] > 0) positive.push_back(si);

  Vector x = closed_coords;
  std::vector<std::size_t> modulus_index;
  {
    auto [lo, hi] = closed.range(nf.leading_degree);
    for (std::size_t i = nf.leading + 1; i < hi; ++i) modulus_index.push_back(i);
    (void)lo;
  }
  std::set<int> higher;
  for (std::size_t i = 0; i < n; ++i)
    if (closed.degree(i) > nf.leading_degree) higher.insert(closed.degree(i));

  for (int d : higher) {
    auto [lo, hi] = closed.range(d);
    std::vector<Vector> t_rows;
    Matrix low(0, lo);
    for (std::size_t si : positive) {
      t_rows.push_back(acts.act(si, x));
      low.append_row(slice(t_rows.back(), 0, lo));
    }
    Matrix kappa = positive.empty() ? Matrix(0, 0) : kernel(low.transposed());
    Matrix g(0, hi - lo);
    for (std::size_t r = 0; r < kappa.rows(); ++r) {
      Vector comb(hi - lo);
      for (std::size_t j = 0; j < positive.size(); ++j)
        if (sgn(kappa(r, j)) != 0)
          for (std::size_t c = lo; c < hi; ++c) comb[c - lo] += kappa(r, j) * t_rows[j][c];
      g.append_row(comb);
    }
    Echelon v = echelon(g);
    Vector xd = slice(x, lo, hi);
    Vector residual = reduce_modulo(v, xd);
    if (residual != xd) {
      Vector target(hi - lo);
      for (std::size_t c = 0; c < target.size(); ++c) target[c] = residual[c] - xd[c];
      auto y = solve(g.transposed(), target);
      if (!y) throw ConsistencyError("reduce: elimination system is inconsistent");
      Matrix a(n, n);
      for (std::size_t r = 0; r < kappa.rows(); ++r) {
        if (sgn((*y)[r]) == 0) continue;
        for (std::size_t j = 0; j < positive.size(); ++j) {
          Rational mu = (*y)[r] * kappa(r, j);
          if (sgn(mu) == 0) continue;
          const Matrix& ms = acts.matrix(positive[j]);
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
              if (sgn(ms(p, q)) != 0) a(p, q) += mu * ms(p, q);
        }
      }
      Vector next = apply_exponential(x, a);
      if (slice(next, 0, lo) != slice(x, 0, lo) || slice(next, lo, hi) != residual)
        throw ConsistencyError("reduce: elimination changed lower-degree coordinates");
      x = std::move(next);
    }
    for (std::size_t f : v.free) modulus_index.push_back(lo + f);
  }

  // Φ_t scaling: coordinate at degree δ picks up t^δ.
  const Rational lead = x[nf.leading];
  const int dl = nf.leading_degree;
  const bool odd = dl % 2 != 0;
  const int lead_sign = sgn(lead) > 0 ? 1 : -1;
  nf.sign_mode = odd ? SignMode::Fixed : SignMode::PlusMinus;
  nf.sign = odd ? 1 : lead_sign;
  const int t_sign = odd ? lead_sign : 1;
  std::optional<Rational> root = exact_root(lead, dl);
  std::optional<Rational> t_exact;
  if (root) t_exact = Rational(t_sign) / *root;
  const double t_double = t_sign * std::pow(std::abs(lead.get_d()), -1.0 / dl);

  for (std::size_t idx : modulus_index) {
    ModulusSlot s;
    s.index = idx;
    s.degree = closed.degree(idx);
    s.label = closed.label(idx);
    if (t_exact) {
      s.exact = x[idx] * power(*t_exact, s.degree);
      s.value = s.exact->get_d();
    } else {
      s.value = x[idx].get_d() * std::pow(t_double, s.degree);
    }
    nf.moduli.push_back(std::move(s));
  }
  name_moduli(nf);
  if (!odd) {
    // Residual Φ_{-1} fixes the even leading term and flips odd degrees.
    for (const auto& s : nf.moduli) {
      if (s.degree % 2 == 0 || value_is_zero(s)) continue;
      if (s.value < 0)
        for (auto& t : nf.moduli)
          if (t.degree % 2 != 0) {
            t.value = -t.value;
            if (t.exact) t.exact = -*t.exact;
          }
      break;
    }
  }
  return nf;
}

Profile profile(const Model& m, const Vector& closed_coords) {
  return {symplectic_multiplicity(m, closed_coords), index_of_isotropness(m, closed_coords),
          lagrangian_tangency_order(m, closed_coords), minimal_dimension(m, closed_coords)};
}

namespace {

std::vector<Rational> ones(const NormalForm& nf) { return std::vector<Rational>(nf.moduli.size(), Rational(1)); }

void explore(const Model& m, NormalForm nf, std::vector<NormalForm>& out) {
  const std::size_t n = m.closed().dimension();
  Vector rep = nf.point(n, 1, ones(nf));
  Profile base = profile(m, rep);
  for (std::size_t i = 0; i < nf.moduli.size(); ++i) {
    if (nf.moduli[i].constraint == Constraint::NonZero) continue;
    Vector q = rep;
    q[nf.moduli[i].index] = 0;
    if (profile(m, q) == base) continue;

    NormalForm a = nf;
    a.moduli[i].constraint = Constraint::NonZero;
    explore(m, a, out);

    NormalForm b = reduce(m, q);
    b.vanishing = nf.vanishing;
    std::size_t removed = nf.moduli[i].index;
    auto it = std::find_if(b.moduli.begin(), b.moduli.end(), [&](const ModulusSlot& s) { return s.index == removed; });
    if (it != b.moduli.end()) {
      b.moduli.erase(it);
      b.vanishing.push_back(removed);
    }
    for (auto& s : b.moduli)
      for (const auto& old : nf.moduli)
        if (old.index == s.index && old.constraint == Constraint::NonZero) s.constraint = Constraint::NonZero;
    name_moduli(b);
    explore(m, b, out);
    return;
  }
  for (auto& s : nf.moduli) {
    s.value = 0;
    s.exact.reset();
  }
  nf.sign = 1;
  out.push_back(std::move(nf));
}

}  // namespace

std::vector<NormalForm> enumerate_normal_forms(const Model& m) {
  const std::size_t n = m.closed().dimension();
  std::vector<NormalForm> out;
  for (std::size_t lead = 0; lead < n; ++lead) {
    Vector g(n);
    g[lead] = 1;
    for (std::size_t j = lead + 1; j < n; ++j) g[j] = make_rational(static_cast<long>(2 * j + 3), static_cast<long>(j * j + 7));
    explore(m, reduce(m, g), out);
  }
  out.push_back(NormalForm{});
  return out;
}

std::optional<std::size_t> identify(const NormalForm& reduced, const std::vector<NormalForm>& families) {
  for (std::size_t f = 0; f < families.size(); ++f) {
    const NormalForm& fam = families[f];
    if (fam.zero != reduced.zero) continue;
    if (fam.zero) return f;
    if (fam.leading != reduced.leading || fam.sign_mode != reduced.sign_mode) continue;
    std::set<std::size_t> expected;
    for (const auto& s : fam.moduli) expected.insert(s.index);
    for (auto v : fam.vanishing) expected.insert(v);
    std::set<std::size_t> got;
    for (const auto& s : reduced.moduli) got.insert(s.index);
    if (expected != got) continue;
    bool ok = true;
    for (const auto& s : reduced.moduli) {
      bool is_vanishing = std::find(fam.vanishing.begin(), fam.vanishing.end(), s.index) != fam.vanishing.end();
      if (is_vanishing && !value_is_zero(s)) ok = false;
      for (const auto& fs : fam.moduli)
        if (fs.index == s.index && fs.constraint == Constraint::NonZero && value_is_zero(s)) ok = false;
    }
    if (ok) return f;
  }
  return std::nullopt;
}

}  // namespace qhs
