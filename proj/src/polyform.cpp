#include "qhs/polyform.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "qhs/error.hpp"
#include "qhs/linalg.hpp"

namespace qhs {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m = one(nvars);
  m.exponents.at(i) = 1;
  return m;
}

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

int Monomial::quasi_degree(const Weights& w) const {
  int d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) d += exponents[i] * w[i];
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += b.exponents[i];
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exponents <=> b.exponents;
}

std::vector<Monomial> monomials_of_degree(int d, const Weights& w) {
  std::vector<Monomial> out;
  for (auto& r : representations(d, w)) out.emplace_back(std::move(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Monomial> least_monomial(int d, const Weights& w) {
  auto all = monomials_of_degree(d, w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Monomial& m, Rational c) : nvars_(m.nvars()) { add_term(m, c); }

Polynomial Polynomial::constant(std::size_t nvars, Rational c) {
  return Polynomial(Monomial::one(nvars), std::move(c));
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  return Polynomial(Monomial::variable(nvars, i), Rational(1));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponents[i];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exponents[i] -= 1;
    out.add_term(dm, c * e);
  }
  return out;
}

Rational Polynomial::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::optional<int> Polynomial::order_at_zero() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_)
    if (!best || m.degree() < *best) best = m.degree();
  return best;
}

std::map<int, Polynomial> Polynomial::quasi_components(const Weights& w) const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    auto [it, _] = out.try_emplace(m.quasi_degree(w), Polynomial(nvars_));
    it->second.add_term(m, c);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

// ----------------------------------------------------------------- indices

int canonicalize_indices(IndexTuple& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

int wedge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
  out = a;
  out.insert(out.end(), b.begin(), b.end());
  return canonicalize_indices(out);
}

int index_weight(const IndexTuple& idx, const Weights& w) {
  int s = 0;
  for (int i : idx) s += w[static_cast<std::size_t>(i)];
  return s;
}

// ------------------------------------------------------------------- PForm

PForm PForm::function(const Polynomial& f) {
  PForm w(f.nvars(), 0);
  w.add({}, f);
  return w;
}

PForm PForm::monomial(const Monomial& m, IndexTuple idx, Rational c) {
  PForm w(m.nvars(), static_cast<int>(idx.size()));
  int sign = canonicalize_indices(idx);
  if (sign == 0) return w;
  w.add(idx, Polynomial(m, c * sign));
  return w;
}

PForm PForm::differential(std::size_t nvars, std::size_t i) {
  return monomial(Monomial::one(nvars), {static_cast<int>(i)});
}

void PForm::add(const IndexTuple& idx, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  if (nvars_ == 0) nvars_ = coeff.nvars();
  if (static_cast<int>(idx.size()) != degree_) {
    if (terms_.empty() && degree_ == 0 && !idx.empty())
      degree_ = static_cast<int>(idx.size());
    else
      throw std::invalid_argument("PForm::add: form degree mismatch");
  }
  auto [it, inserted] = terms_.try_emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Polynomial* PForm::coefficient(const IndexTuple& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? nullptr : &it->second;
}

PForm& PForm::operator+=(const PForm& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  if (terms_.empty() && degree_ != o.degree_) degree_ = o.degree_;
  if (o.is_zero()) return *this;
  if (degree_ != o.degree_) throw std::invalid_argument("PForm +: degree mismatch");
  for (const auto& [idx, p] : o.terms_) add(idx, p);
  return *this;
}

PForm& PForm::operator-=(const PForm& o) {
  PForm neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

PForm& PForm::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, p] : terms_) p *= c;
  return *this;
}

PForm operator*(const Polynomial& f, const PForm& w) {
  PForm out(w.nvars(), w.degree());
  for (const auto& [idx, p] : w.terms()) out.add(idx, f * p);
  return out;
}

PForm wedge(const PForm& a, const PForm& b) {
  PForm out(std::max(a.nvars(), b.nvars()), a.degree() + b.degree());
  IndexTuple merged;
  for (const auto& [ia, pa] : a.terms())
    for (const auto& [ib, pb] : b.terms()) {
      int sign = wedge_sign(ia, ib, merged);
      if (sign == 0) continue;
      out.add(merged, (pa * pb) * Rational(sign));
    }
  return out;
}

PForm exterior_derivative(const PForm& w) {
  PForm out(w.nvars(), w.degree() + 1);
  IndexTuple merged;
  for (const auto& [idx, p] : w.terms())
    for (std::size_t i = 0; i < w.nvars(); ++i) {
      Polynomial dp = p.derivative(i);
      if (dp.is_zero()) continue;
      int sign = wedge_sign({static_cast<int>(i)}, idx, merged);
      if (sign == 0) continue;
      out.add(merged, dp * Rational(sign));
    }
  return out;
}

PForm interior_product(const VectorField& x, const PForm& w) {
  PForm out(w.nvars(), std::max(0, w.degree() - 1));
  if (w.degree() == 0) return out;
  for (const auto& [idx, p] : w.terms())
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const Polynomial& comp = x[static_cast<std::size_t>(idx[a])];
      if (comp.is_zero()) continue;
      IndexTuple rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(a));
      out.add(rest, (comp * p) * Rational(a % 2 == 0 ? 1 : -1));
    }
  return out;
}

PForm lie_derivative(const VectorField& x, const PForm& w) {
  PForm out = exterior_derivative(interior_product(x, w));
  out += interior_product(x, exterior_derivative(w));
  if (out.is_zero()) return PForm(w.nvars(), w.degree());
  return out;
}

std::map<int, PForm> quasi_components(const PForm& w, const Weights& wts) {
  std::map<int, PForm> out;
  for (const auto& [idx, p] : w.terms()) {
    int shift = index_weight(idx, wts);
    for (const auto& [d, part] : p.quasi_components(wts)) {
      auto [it, _] = out.try_emplace(d + shift, PForm(w.nvars(), w.degree()));
      it->second.add(idx, part);
    }
  }
  return out;
}

std::optional<int> order_vanishing_at_zero(const PForm& w) {
  std::optional<int> best;
  for (const auto& [idx, p] : w.terms()) {
    auto o = p.order_at_zero();
    if (o && (!best || *o < *best)) best = o;
  }
  return best;
}

// ------------------------------------------------------------- VectorField

VectorField VectorField::euler(const Weights& w) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < w.size(); ++i)
    comps.push_back(Polynomial(Monomial::variable(w.size(), i), Rational(w[i])));
  return VectorField(std::move(comps));
}

std::map<int, VectorField> VectorField::quasi_components(const Weights& w) const {
  std::map<int, std::vector<Polynomial>> parts;
  for (std::size_t i = 0; i < components_.size(); ++i)
    for (const auto& [d, piece] : components_[i].quasi_components(w)) {
      auto [it, inserted] = parts.try_emplace(d - w[i]);
      if (inserted) it->second.assign(components_.size(), Polynomial(components_.size()));
      it->second[i] += piece;
    }
  std::map<int, VectorField> out;
  for (auto& [d, comps] : parts) out.emplace(d, VectorField(std::move(comps)));
  return out;
}

// ------------------------------------------------------------- CurveSeries

CurveSeries CurveSeries::monomial(int exponent, Rational c) {
  CurveSeries s;
  s.add_term(exponent, c);
  return s;
}

void CurveSeries::add_term(int exponent, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<int> CurveSeries::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

CurveSeries& CurveSeries::operator+=(const CurveSeries& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CurveSeries& CurveSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CurveSeries operator*(const CurveSeries& a, const CurveSeries& b) {
  CurveSeries out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

CurveSeries restrict_to_curve(const Polynomial& g, const Weights& w) {
  CurveSeries out;
  for (const auto& [m, c] : g.terms()) out.add_term(m.quasi_degree(w), c);
  return out;
}

std::vector<Polynomial> toric_relations(int delta, const Weights& w) {
  std::vector<Polynomial> out;
  auto monos = monomials_of_degree(delta, w);
  if (monos.size() < 2) return out;
  for (std::size_t i = 1; i < monos.size(); ++i) {
    Polynomial p(monos[i], Rational(1));
    p.add_term(monos[0], Rational(-1));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<IdealGenerator> ideal_generators(const Weights& w, std::optional<int> max_degree) {
  int top = max_degree ? *max_degree : frobenius_number(w) + 2 * w.largest() + w.smallest();
  std::vector<IdealGenerator> out;
  for (int d = 1; d <= top; ++d) {
    auto monos = monomials_of_degree(d, w);
    if (monos.size() < 2) continue;
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
    auto as_row = [&](const Polynomial& p) {
      Vector v(monos.size());
      for (const auto& [m, c] : p.terms()) v[col.at(m)] = c;
      return v;
    };
    std::vector<Vector> rows;
    for (const auto& g : out)
      for (const auto& m : monomials_of_degree(d - g.degree, w)) rows.push_back(as_row(Polynomial(m, Rational(1)) * g.f));
    auto current_rank = [&]() {
      Matrix a(rows.size(), monos.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < monos.size(); ++c) a(r, c) = rows[r][c];
      return rank(a);
    };
    std::size_t have = rows.empty() ? 0 : current_rank();
    for (auto& b : toric_relations(d, w)) {
      rows.push_back(as_row(b));
      std::size_t now = current_rank();
      if (now == have) {
        rows.pop_back();
        continue;
      }
      have = now;
      out.push_back({d, b, exterior_derivative(PForm::function(b))});
    }
  }
  return out;
}

std::optional<int> order_vanishing_on_curve(const PForm& alpha, const Weights& w) {
  if (alpha.degree() != 1 && !alpha.is_zero())
    throw PreconditionError("order_vanishing_on_curve expects a 1-form");
  std::optional<int> best;
  for (const auto& [idx, p] : alpha.terms()) {
    auto o = restrict_to_curve(p, w).order();
    if (o && (!best || *o < *best)) best = o;
  }
  return best;
}

// --------------------------------------------------------------- rendering

namespace {

std::string render_factor_product(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    int e = m.exponents[i];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string render_indices(const IndexTuple& idx) {
  std::string s;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (a) s += '^';
    s += "dx" + std::to_string(idx[a] + 1);
  }
  return s;
}

// Appends one signed term. `body` is the non-coefficient part ("" for a
// bare constant); `joiner` separates coefficient and body.
void append_term(std::string& out, const Rational& c, const std::string& body, char joiner) {
  bool negative = sgn(c) < 0;
  Rational mag = abs(c);
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (body.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += body;
  } else {
    out += to_string(mag);
    out += joiner;
    out += body;
  }
}

}  // namespace

std::string render(const Monomial& m) {
  auto s = render_factor_product(m);
  return s.empty() ? "1" : s;
}

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    append_term(out, it->second, render_factor_product(it->first), '*');
  return out;
}

std::string render(const PForm& w) {
  if (w.is_zero()) return "0";
  if (w.degree() == 0) return render(*w.coefficient({}));
  std::string out;
  for (const auto& [idx, p] : w.terms()) {
    std::string dx = render_indices(idx);
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      std::string mono = render_factor_product(it->first);
      std::string body = mono.empty() ? dx : mono + " " + dx;
      append_term(out, it->second, body, mono.empty() ? ' ' : '*');
    }
  }
  return out;
}

std::string render(const VectorField& x) {
  std::string out;
  for (std::size_t i = 0; i < x.nvars(); ++i) {
    const auto& p = x[i];
    if (p.is_zero()) continue;
    std::string part = "(" + render(p) + ") d/dx" + std::to_string(i + 1);
    out += out.empty() ? part : " + " + part;
  }
  return out.empty() ? "0" : out;
}

std::string render(const CurveSeries& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [e, v] : c.terms()) {
    std::string body = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
    append_term(out, v, body, '*');
  }
  return out;
}

// ----------------------------------------------------------------- parsing

namespace {

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Split at top-level '+'/'-' that start a new term.
std::vector<std::pair<int, std::string>> split_terms(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int sign = 1;
  std::string current;
  char prev = '\0';
  auto flush = [&]() {
    auto body = strip(current);
    if (!body.empty()) out.emplace_back(sign, body);
    else if (!out.empty() || sign != 1) throw ParseError("dangling sign in '" + std::string(text) + "'");
    current.clear();
  };
  bool any = false;
  for (char c : text) {
    if ((c == '+' || c == '-') && prev != '^' && prev != '*' && prev != '/') {
      if (any) flush();
      else if (!strip(current).empty()) throw ParseError("bad term in '" + std::string(text) + "'");
      sign = c == '-' ? -1 : 1;
      any = true;
      current.clear();
    } else {
      current += c;
      if (!std::isspace(static_cast<unsigned char>(c))) any = true;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  auto body = strip(current);
  if (body.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
  out.emplace_back(sign, body);
  return out;
}

std::vector<std::string> split_factors(const std::string& term) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : term) {
    if (c == '*' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) throw ParseError("empty term");
  return out;
}

int parse_positive_int(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) throw ParseError("expected integer, got '" + s + "'");
  return std::stoi(s);
}

struct ParsedTerm {
  Rational coeff = 1;
  std::vector<int> exponents;
  IndexTuple dx;
  bool has_dx = false;
};

// Factor forms: rational, x<i>[^e], dx<i>[^dx<j>...], t[^e] (only when allow_t).
void absorb_factor(std::string f, ParsedTerm& term, std::size_t nvars, bool allow_t) {
  if (std::isdigit(static_cast<unsigned char>(f[0]))) {
    std::size_t n = 0;
    while (n < f.size() && (std::isdigit(static_cast<unsigned char>(f[n])) || f[n] == '/')) ++n;
    term.coeff *= parse_rational(f.substr(0, n));
    f = f.substr(n);
    if (f.empty()) return;
  }
  if (f.rfind("dx", 0) == 0) {
    std::string rest = f;
    while (!rest.empty()) {
      if (rest.rfind("dx", 0) != 0) throw ParseError("bad differential '" + f + "'");
      std::size_t end = rest.find('^');
      std::string num = rest.substr(2, end == std::string::npos ? std::string::npos : end - 2);
      int i = parse_positive_int(num);
      if (i < 1 || static_cast<std::size_t>(i) > nvars) throw ParseError("coordinate out of range in '" + f + "'");
      term.dx.push_back(i - 1);
      term.has_dx = true;
      rest = end == std::string::npos ? std::string() : rest.substr(end + 1);
    }
    return;
  }
  if (allow_t && f[0] == 't') {
    int e = 1;
    if (f.size() > 1) {
      if (f[1] != '^') throw ParseError("bad factor '" + f + "'");
      e = parse_positive_int(f.substr(2));
    }
    term.exponents[0] += e;
    return;
  }
  if (!allow_t && f[0] == 'x') {
    std::size_t caret = f.find('^');
    int i = parse_positive_int(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    int e = caret == std::string::npos ? 1 : parse_positive_int(f.substr(caret + 1));
    if (i < 1 || static_cast<std::size_t>(i) > nvars) throw ParseError("variable out of range in '" + f + "'");
    term.exponents[static_cast<std::size_t>(i - 1)] += e;
    return;
  }
  throw ParseError("unrecognized factor '" + f + "'");
}

std::vector<ParsedTerm> parse_terms(std::string_view text, std::size_t nvars, bool allow_t) {
  std::vector<ParsedTerm> out;
  auto s = strip(text);
  if (s.empty()) throw ParseError("empty expression");
  if (s == "0") return out;
  for (auto& [sign, body] : split_terms(s)) {
    ParsedTerm t;
    t.exponents.assign(allow_t ? 1 : nvars, 0);
    for (auto& f : split_factors(body)) absorb_factor(f, t, nvars, allow_t);
    t.coeff *= sign;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  Polynomial p(nvars);
  for (auto& t : parse_terms(text, nvars, false)) {
    if (t.has_dx) throw ParseError("differential in polynomial '" + std::string(text) + "'");
    p.add_term(Monomial(t.exponents), t.coeff);
  }
  return p;
}

PForm parse_form(std::string_view text, std::size_t nvars, int degree_hint) {
  auto terms = parse_terms(text, nvars, false);
  int degree = degree_hint;
  for (auto& t : terms) {
    int d = static_cast<int>(t.dx.size());
    if (degree >= 0 && d != degree) throw ParseError("inconsistent form degree in '" + std::string(text) + "'");
    degree = d;
  }
  PForm w(nvars, std::max(degree, 0));
  for (auto& t : terms) w += PForm::monomial(Monomial(t.exponents), t.dx, t.coeff);
  return w;
}

CurveSeries parse_curve_series(std::string_view text) {
  CurveSeries c;
  for (auto& t : parse_terms(text, 1, true)) {
    if (t.has_dx) throw ParseError("differential in curve component");
    c.add_term(t.exponents[0], t.coeff);
  }
  return c;
}

}  // namespace qhs
