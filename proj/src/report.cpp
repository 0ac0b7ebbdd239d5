#include "qhs/report.hpp"

#include <algorithm>
#include <sstream>

#include "qhs/error.hpp"

namespace qhs {

using nlohmann::json;

namespace {

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string render_text(const Table& t) {
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t c = 0; c < t.headers.size(); ++c) width[c] = display_width(t.headers[c]);
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += cells[c];
      if (c + 1 < cells.size()) s.append(width[c] - display_width(cells[c]), ' ');
    }
    return s + "\n";
  };
  std::string out = t.title + "\n\n" + line(t.headers);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out += std::string(total + 2 * (width.size() - 1), '-') + "\n";
  for (const auto& row : t.rows) out += line(row);
  for (const auto& n : t.notes) out += "\n" + n;
  if (!t.notes.empty()) out += "\n";
  return out;
}

std::string escape_md(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string render_markdown(const Table& t) {
  std::string out = "## " + t.title + "\n\n|";
  for (const auto& h : t.headers) out += " " + escape_md(h) + " |";
  out += "\n|";
  for (std::size_t c = 0; c < t.headers.size(); ++c) out += "---|";
  out += "\n";
  for (const auto& row : t.rows) {
    out += "|";
    for (const auto& cell : row) out += " " + escape_md(cell) + " |";
    out += "\n";
  }
  for (const auto& n : t.notes) out += "\n" + n + "\n";
  return out;
}

std::string render_table(const Table& t, Format f) {
  return f == Format::Markdown ? render_markdown(t) : render_text(t);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json order_json(const Order& o) { return o ? json(*o) : json(nullptr); }

Order order_from_json(const json& j, const json& flag) {
  if (j.is_null()) {
    if (!flag.is_boolean() || !flag.get<bool>()) throw ParseError("null order without its infinity flag");
    return std::nullopt;
  }
  return j.get<int>();
}

std::vector<std::string> closed_labels(const ClosedBasis& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.dimension(); ++i) out.push_back(c.label(i));
  return out;
}

std::string coefficient_prefix(const Rational& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  if (c.get_den() == 1) return c.get_str();
  return "(" + c.get_str() + ")";
}

template <class T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "markdown" || name == "md") return Format::Markdown;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

std::string_view format_extension(Format f) {
  switch (f) {
    case Format::Text: return "txt";
    case Format::Json: return "json";
    case Format::Markdown: return "md";
  }
  return "txt";
}

json to_json(const Vector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  Vector v;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("rationals are encoded as strings");
    v.push_back(parse_rational(x.get<std::string>()));
  }
  return v;
}

json to_json(const NormalForm& nf) {
  json mods = json::array();
  for (const auto& m : nf.moduli)
    mods.push_back({{"index", m.index},
                    {"degree", m.degree},
                    {"label", m.label},
                    {"name", m.name},
                    {"constraint", m.constraint == Constraint::NonZero ? "nonzero" : "none"},
                    {"value", m.value},
                    {"exact", m.exact ? json(to_string(*m.exact)) : json(nullptr)}});
  return {{"family", nf.family()},
          {"constraints", nf.constraints()},
          {"zero", nf.zero},
          {"leading", nf.leading},
          {"leading_degree", nf.leading_degree},
          {"leading_label", nf.leading_label},
          {"sign_mode", nf.sign_mode == SignMode::PlusMinus ? "plus_minus" : "fixed"},
          {"sign", nf.sign},
          {"moduli", mods},
          {"vanishing", nf.vanishing}};
}

NormalForm normal_form_from_json(const json& j) {
  NormalForm nf;
  nf.zero = field<bool>(j, "zero");
  nf.leading = field<std::size_t>(j, "leading");
  nf.leading_degree = field<int>(j, "leading_degree");
  nf.leading_label = field<std::string>(j, "leading_label");
  auto mode = field<std::string>(j, "sign_mode");
  if (mode != "fixed" && mode != "plus_minus") throw ParseError("unknown sign_mode '" + mode + "'");
  nf.sign_mode = mode == "plus_minus" ? SignMode::PlusMinus : SignMode::Fixed;
  nf.sign = field<int>(j, "sign");
  for (const auto& m : field<json>(j, "moduli")) {
    ModulusSlot s;
    s.index = field<std::size_t>(m, "index");
    s.degree = field<int>(m, "degree");
    s.label = field<std::string>(m, "label");
    s.name = field<std::string>(m, "name");
    auto c = field<std::string>(m, "constraint");
    if (c != "none" && c != "nonzero") throw ParseError("unknown constraint '" + c + "'");
    s.constraint = c == "nonzero" ? Constraint::NonZero : Constraint::None;
    s.value = field<double>(m, "value");
    if (!field<json>(m, "exact").is_null()) s.exact = parse_rational(field<std::string>(m, "exact"));
    nf.moduli.push_back(std::move(s));
  }
  nf.vanishing = field<std::vector<std::size_t>>(j, "vanishing");
  return nf;
}

json to_json(const InvariantReport& r) {
  return {{"class", to_json(r.cls)},
          {"mu_sympl", r.mu},
          {"iota", order_json(r.iota)},
          {"iota_infinite", !r.iota.has_value()},
          {"lt", order_json(r.lt)},
          {"lt_infinite", !r.lt.has_value()},
          {"minimal_n", r.minimal_n},
          {"lt_outside_hypothesis", r.lt_outside_hypothesis}};
}

InvariantReport invariant_report_from_json(const json& j) {
  InvariantReport r;
  r.cls = vector_from_json(field<json>(j, "class"));
  r.mu = field<std::size_t>(j, "mu_sympl");
  r.iota = order_from_json(field<json>(j, "iota"), j.value("iota_infinite", json(false)));
  r.lt = order_from_json(field<json>(j, "lt"), j.value("lt_infinite", json(false)));
  r.minimal_n = field<int>(j, "minimal_n");
  r.lt_outside_hypothesis = field<bool>(j, "lt_outside_hypothesis");
  return r;
}

json to_json(const ParamCurve& c) {
  json comps = json::array();
  for (const auto& s : c.components) {
    json terms = json::array();
    for (const auto& [e, coef] : s.terms()) terms.push_back({{"exponent", e}, {"coefficient", to_string(coef)}});
    comps.push_back(terms);
  }
  return {{"n", c.n}, {"rendered", c.render()}, {"components", comps}};
}

ParamCurve param_curve_from_json(const json& j) {
  ParamCurve c;
  c.n = field<int>(j, "n");
  for (const auto& terms : field<json>(j, "components")) {
    CurveSeries s;
    for (const auto& t : terms) s.add_term(field<int>(t, "exponent"), parse_rational(field<std::string>(t, "coefficient")));
    c.components.push_back(std::move(s));
  }
  if (c.components.size() != static_cast<std::size_t>(2 * c.n)) throw ParseError("curve needs 2n components");
  return c;
}

std::vector<ClassificationRow> classification_rows(const Model& m, int n) {
  if (n < 1) throw PreconditionError("ambient dimension 2n needs n >= 1");
  std::vector<ClassificationRow> rows;
  for (auto& fam : enumerate_normal_forms(m)) {
    ClassificationRow row;
    row.sample = fam.point(m.closed().dimension(), 1, std::vector<Rational>(fam.moduli.size(), Rational(1)));
    row.representative = render(m.closed().combination(row.sample));
    row.report = invariant_report(m, row.sample);
    row.n = n;
    row.realizable = realizable(m, row.sample, n);
    row.curve = symplectic_normal_form_curve(m, row.sample, row.realizable ? n : row.report.minimal_n);
    row.family = std::move(fam);
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ClassificationRow& row) {
  return {{"normal_form", to_json(row.family)},
          {"sample", to_json(row.sample)},
          {"representative", row.representative},
          {"invariants", to_json(row.report)},
          {"curve", to_json(row.curve)},
          {"n", row.n},
          {"realizable", row.realizable}};
}

ClassificationRow classification_row_from_json(const json& j) {
  ClassificationRow row;
  row.family = normal_form_from_json(field<json>(j, "normal_form"));
  row.sample = vector_from_json(field<json>(j, "sample"));
  row.representative = field<std::string>(j, "representative");
  row.report = invariant_report_from_json(field<json>(j, "invariants"));
  row.curve = param_curve_from_json(field<json>(j, "curve"));
  row.n = field<int>(j, "n");
  row.realizable = field<bool>(j, "realizable");
  return row;
}

std::string render_combination(const Vector& coords, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    Rational c = coords[i];
    if (!out.empty()) {
      out += sgn(c) < 0 ? " - " : " + ";
      c = abs(c);
    }
    out += coefficient_prefix(c) + labels[i];
  }
  return out.empty() ? "0" : out;
}

std::string basis_table(const Model& m, Format f) {
  const GradedBasis& two = m.two_forms();
  const ClosedBasis& closed = m.closed();
  if (f == Format::Json) {
    json j = two.to_json();
    json cl = json::array();
    for (std::size_t i = 0; i < closed.dimension(); ++i) {
      std::size_t lo = closed.range(closed.degree(i)).first;
      const auto& lvl = *std::find_if(closed.levels().begin(), closed.levels().end(),
                                       [&](const auto& l) { return l.degree == closed.degree(i); });
      cl.push_back({{"label", closed.label(i)},
                    {"degree", closed.degree(i)},
                    {"level_coordinates", to_json(lvl.span.row_vector(i - lo))},
                    {"representative", render(closed.representative(i))}});
    }
    return dump({{"weights", m.weights().to_string()},
                 {"two_forms", j},
                 {"closed", cl},
                 {"dimension", two.dimension()},
                 {"closed_dimension", closed.dimension()},
                 {"cutoff", closed.cutoff()}});
  }
  Table t;
  t.title = "Algebraic restrictions of 2-forms to t -> (" + m.weights().to_string() + ")";
  t.headers = {"degree", "basis", "representatives", "relations", "closed classes"};
  for (const auto& lvl : two.levels()) {
    std::string reps;
    for (std::size_t i = 0; i < lvl.dimension(); ++i) {
      if (i) reps += ", ";
      reps += lvl.labels[i] + " = [" + render(lvl.representatives[i]) + "]";
    }
    std::string basis;
    for (std::size_t i = 0; i < lvl.labels.size(); ++i) basis += (i ? ", " : "") + lvl.labels[i];
    std::string closed_cell = "-";
    auto cl = std::find_if(closed.levels().begin(), closed.levels().end(),
                           [&](const auto& l) { return l.degree == lvl.degree; });
    if (cl != closed.levels().end()) {
      closed_cell.clear();
      for (std::size_t r = 0; r < cl->dimension(); ++r) {
        if (r) closed_cell += ", ";
        std::string combo = render_combination(cl->span.row_vector(r), lvl.labels);
        closed_cell += cl->labels[r] == combo ? combo : cl->labels[r] + " = " + combo;
      }
    }
    t.rows.push_back({std::to_string(lvl.degree), basis, reps, std::to_string(lvl.relations.rank()), closed_cell});
  }
  t.rows.push_back({">= " + std::to_string(two.top_degree() + 1), "0", "", "", ""});
  t.notes.push_back("dimension " + std::to_string(two.dimension()) + ", closed " + std::to_string(closed.dimension()) +
                    ", K = " + std::to_string(closed.cutoff()) + ", scanned through degree " +
                    std::to_string(two.scanned_through()));
  return render_table(t, f);
}

std::string vanishing_table(const Model& m, Format f) {
  auto gens = ideal_generators(m.weights());
  if (f == Format::Json) {
    json rows = json::array();
    for (const auto& g : gens) rows.push_back({{"degree", g.degree}, {"f", render(g.f)}, {"df", render(g.df)}});
    return dump({{"weights", m.weights().to_string()}, {"generators", rows}});
  }
  Table t;
  t.title = "Quasi-homogeneous functions vanishing on t -> (" + m.weights().to_string() + ")";
  t.headers = {"degree", "f", "df"};
  for (const auto& g : gens) t.rows.push_back({std::to_string(g.degree), render(g.f), render(g.df)});
  return render_table(t, f);
}

std::string action_table(const Model& m, Format f) {
  const ActionTable& acts = m.actions();
  auto labels = closed_labels(m.closed());
  if (f == Format::Json) {
    json rows = json::array();
    for (std::size_t si = 0; si < acts.shifts().size(); ++si) {
      json cells = json::array(), rendered = json::array();
      for (std::size_t i = 0; i < labels.size(); ++i) {
        cells.push_back(to_json(acts.entry(si, i)));
        rendered.push_back(render_combination(acts.entry(si, i), labels));
      }
      rows.push_back({{"shift", acts.shifts()[si]},
                      {"field", render(acts.fields()[si].field)},
                      {"cells", cells},
                      {"rendered", rendered}});
    }
    return dump({{"weights", m.weights().to_string()}, {"columns", labels}, {"rows", rows}});
  }
  Table t;
  t.title = "Lie derivatives L_{X_s} a on closed classes, t -> (" + m.weights().to_string() + ")";
  t.headers = {"L_X a"};
  for (const auto& l : labels) t.headers.push_back(l);
  for (std::size_t si = 0; si < acts.shifts().size(); ++si) {
    std::vector<std::string> row{"X" + std::to_string(acts.shifts()[si])};
    for (std::size_t i = 0; i < labels.size(); ++i) row.push_back(render_combination(acts.entry(si, i), labels));
    t.rows.push_back(std::move(row));
    t.notes.push_back("X" + std::to_string(acts.shifts()[si]) + " = " + render(acts.fields()[si].field));
  }
  return render_table(t, f);
}

std::string classification_table(const Model& m, const std::vector<ClassificationRow>& rows, Format f) {
  if (f == Format::Json) {
    json j = json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    return dump({{"weights", m.weights().to_string()}, {"engine", kEngineVersion}, {"normal_forms", j}});
  }
  int n = rows.empty() ? 1 : rows.front().n;
  Table t;
  t.title = "Symplectic classification of t -> (" + m.weights().to_string() + ") in R^" + std::to_string(2 * n);
  t.headers = {"#", "normal form", "constraints", "curve", "mu_sympl", "iota", "Lt", "min n",
               "realizable (n=" + std::to_string(n) + ")"};
  bool outside = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::string lt = render_order(r.report.lt);
    if (r.report.lt_outside_hypothesis) {
      lt += "*";
      outside = true;
    }
    t.rows.push_back({std::to_string(i + 1), r.family.family(), r.family.constraints().empty() ? "-" : r.family.constraints(),
                      r.curve.render(), std::to_string(r.report.mu), render_order(r.report.iota), lt,
                      std::to_string(r.report.minimal_n), r.realizable ? "yes" : "no"});
  }
  t.notes.push_back("Curves realize the family member with sign + and every modulus equal to 1.");
  if (outside) t.notes.push_back("* Lt from the antiderivative formula for a class with no representative vanishing at 0.");
  return render_table(t, f);
}

}  // namespace qhs
