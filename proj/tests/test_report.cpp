#include <doctest.h>

#include "qhs/error.hpp"
#include "qhs/report.hpp"

using namespace qhs;

TEST_CASE("formats") {
  CHECK(parse_format("text") == Format::Text);
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("md") == Format::Markdown);
  CHECK(parse_format("markdown") == Format::Markdown);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
  CHECK(format_extension(Format::Markdown) == "md");
  CHECK(format_extension(Format::Text) == "txt");
}

TEST_CASE("combinations") {
  std::vector<std::string> labels{"a7", "a8", "a9"};
  CHECK(render_combination(Vector{7, 0, 0}, labels) == "7a7");
  CHECK(render_combination(Vector{0, -34, 2}, labels) == "-34a8 + 2a9");
  CHECK(render_combination(Vector{make_rational(1, 2), 0, 0}, labels) == "(1/2)a7");
  CHECK(render_combination(Vector{0, 1, -1}, labels) == "a8 - a9");
  CHECK(render_combination(Vector(3), labels) == "0");
}

TEST_CASE("json round trips") {
  auto m = Model::build(Weights({3, 5, 7}));
  auto rows = classification_rows(m, 3);
  REQUIRE(rows.size() == 9);
  for (const auto& row : rows) {
    auto j = to_json(row);
    CHECK(classification_row_from_json(j) == row);
    CHECK(normal_form_from_json(to_json(row.family)) == row.family);
    CHECK(invariant_report_from_json(to_json(row.report)) == row.report);
    CHECK(param_curve_from_json(to_json(row.curve)) == row.curve);
    CHECK(classification_row_from_json(nlohmann::json::parse(j.dump())) == row);
  }
  CHECK(vector_from_json(to_json(Vector{make_rational(-3, 4), 0})) == Vector{make_rational(-3, 4), 0});
  CHECK_THROWS(vector_from_json(nlohmann::json::parse("[\"x\"]")));
}

TEST_CASE("tables are deterministic and mention every label") {
  auto m = Model::build(Weights({3, 4, 5}));
  auto rows = classification_rows(m, 3);
  for (Format f : {Format::Text, Format::Markdown}) {
    auto basis = basis_table(m, f);
    CHECK(basis == basis_table(m, f));
    for (const char* l : {"a7", "a8", "a9", "a10", "a11"}) CHECK(basis.find(l) != std::string::npos);
    CHECK(action_table(m, f).find("22a11") != std::string::npos);
    auto cls = classification_table(m, rows, f);
    CHECK(cls.find("±a10") != std::string::npos);
    CHECK(cls.find("inf") != std::string::npos);
  }
  CHECK(basis_table(m, Format::Markdown).rfind("## ", 0) == 0);
}
