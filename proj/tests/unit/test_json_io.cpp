#include <catch2/catch_amalgamated.hpp>

#include <cptrep/cpt/models.hpp>
#include <cptrep/json_io.hpp>
#include <cptrep/render.hpp>

#include <string>
#include <vector>

#include "group_builders.hpp"

using namespace cptrep;

TEST_CASE("cyclotomic values round-trip through json") {
  std::vector<Cyclotomic> values = {
      Cyclotomic(0),
      Cyclotomic(-7),
      Cyclotomic(Rational(Int(3), Int(8))),
      Cyclotomic::gaussian(Rational(1), Rational(-1)),
      Cyclotomic::i(),
      Cyclotomic::root_of_unity(8, 3),
      Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4),
  };
  for (const auto& v : values) {
    INFO(v.to_string());
    Json j = to_json(v);
    CHECK(cyclotomic_from_json(j) == v);
    CHECK(j.at("order").get<unsigned>() == v.order());
  }
}

TEST_CASE("json export refuses numbers beyond 64 bits") {
  Rational huge(Int("123456789012345678901234567890"), Int(1));
  CHECK_THROWS_AS(to_json(Cyclotomic(huge)), std::range_error);
  CHECK_THROWS_WITH(to_json(Cyclotomic(huge)),
                    Catch::Matchers::ContainsSubstring("does not fit in 64 bits"));
}

TEST_CASE("malformed cyclotomic json is rejected") {
  Json j{{"order", 4}, {"coeffs", Json::array({Json::array({1, 2, 3})})}};
  CHECK_THROWS_AS(cyclotomic_from_json(j), std::invalid_argument);
  Json missing{{"coeffs", Json::array()}};
  CHECK_THROWS_AS(cyclotomic_from_json(missing), Json::exception);
}

TEST_CASE("groups round-trip through json with re-validation") {
  auto q = cpt::quaternion_group();
  Json j = to_json(*q);
  CHECK(j.at("order").get<std::size_t>() == 8);
  GroupPtr back = group_from_json(j);
  CHECK(*back == *q);

  SECTION("tampered cayley entry is rejected on import") {
    Json bad = j;
    bad["cayley"][3] = bad["cayley"][2];  // breaks the Latin square
    CHECK_THROWS_AS(group_from_json(bad), std::invalid_argument);
  }
  SECTION("label count must match the declared order") {
    Json bad = j;
    bad["order"] = 9;
    CHECK_THROWS_AS(group_from_json(bad), std::invalid_argument);
  }
  SECTION("out-of-range cayley value is rejected") {
    Json bad = j;
    bad["cayley"][0] = 99;
    CHECK_THROWS_AS(group_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("character table json carries classes, rows and provenance") {
  auto q = cpt::quaternion_group();
  CharacterTable t = character_table(q);
  Json j = to_json(t);
  REQUIRE(j.at("classes").size() == 5);
  REQUIRE(j.at("rows").size() == 5);
  CHECK(j.at("group_order").get<std::size_t>() == 8);
  CHECK(j.at("dixon_prime").get<unsigned>() == t.dixon_prime().value());
  // Element 0 is the first generator, so the leading class is [iota].
  CHECK(j["classes"][0]["label"] == "[iota]");
  CHECK(j["classes"][0]["size"] == 2);
  CHECK(j["classes"][0]["representative"] == "iota");
  for (const auto& row : j.at("rows")) {
    CHECK(row.at("provenance") == "dixon");
    CHECK(row.at("values").size() == 5);
    long long dim = row.at("dim").get<long long>();
    CHECK((dim == 1 || dim == 2));
  }
}

TEST_CASE("transcribed provenance survives the json export") {
  auto z2 = cpt::z2_group();
  auto classes = conjugacy_classes(*z2);
  // Class order is [a], [e]: element 0 is the generator a.
  std::vector<CharacterTable::Row> rows;
  rows.push_back({"one", Character(z2, {Cyclotomic(1), Cyclotomic(1)}),
                  RowProvenance::transcribed});
  rows.push_back({"sgn", Character(z2, {Cyclotomic(-1), Cyclotomic(1)}),
                  RowProvenance::transcribed});
  CharacterTable t(z2, classes, std::move(rows));
  Json j = to_json(t);
  CHECK(j["rows"][0]["provenance"] == "transcribed");
  CHECK(j.count("dixon_prime") == 0);
}

TEST_CASE("verifier findings serialize with verdict strings") {
  cpt::DiscrepancyReport report;
  report.findings.push_back({"loc A", "x", "x", cpt::Verdict::match, ""});
  report.findings.push_back({"loc B", "y", "z", cpt::Verdict::paper_defect_confirmed, "why"});
  Json j = to_json(report);
  REQUIRE(j.at("findings").size() == 2);
  CHECK(j["findings"][0]["verdict"] == "match");
  CHECK(j["findings"][1]["verdict"] == "paper-defect-confirmed");
  CHECK(j["findings"][1]["note"] == "why");
  CHECK(j["counts"]["match"] == 1);
  CHECK(j["counts"]["paper-defect-confirmed"] == 1);
  CHECK(j["counts"]["mismatch"] == 0);
  CHECK(j["clean"] == true);
}

TEST_CASE("text table render shows class sizes in headers") {
  auto q = cpt::quaternion_group();
  std::string text = render_text(character_table(q));
  CHECK(text.find("1[1]") != std::string::npos);
  CHECK(text.find("2[iota]") != std::string::npos);
  CHECK(text.find("2[gamma]") != std::string::npos);
  CHECK(text.find("-2") != std::string::npos);  // the degree-2 row at [-1]
  CHECK(text.find("dixon prime") != std::string::npos);
  CHECK(text == render_text(character_table(cpt::quaternion_group())));
}

TEST_CASE("csv render quotes labels containing commas") {
  auto bits = cpt::z2_cubed_group();
  std::string csv = render_csv(character_table(bits));
  CHECK(csv.find("\"[(a,e,e)]\"") != std::string::npos);
  CHECK(csv.rfind("name,", 0) == 0);
  std::string cls = classes_csv(*bits);
  CHECK(cls.find("\"(a,e,e)\"") != std::string::npos);
}

TEST_CASE("latex render escapes names and uses math-mode values") {
  auto q = cpt::quaternion_group();
  CharacterTable t = constructive_table(q, cpt::quaternion_irreps(q));
  std::string latex = render_latex(t);
  CHECK(latex.rfind("\\begin{tabular}", 0) == 0);
  CHECK(latex.find("chi\\_1") != std::string::npos);
  CHECK(latex.find("$-2$") != std::string::npos);
  CHECK(latex.find("\\end{tabular}") != std::string::npos);

  auto hat = cpt::psi_hat_model();
  std::string cls = classes_latex(*hat.group);
  CHECK(cls.find("C\\^{}") != std::string::npos);  // "C^" label
}

TEST_CASE("classes render lists singletons and members") {
  auto eq = cpt::psi_eq_model();
  std::string text = classes_text(*eq.group);
  CHECK(text.rfind("10 classes", 0) == 0);
  CHECK(text.find("1[T]: T\n") != std::string::npos);
  CHECK(text.find("1[-T]: -T\n") != std::string::npos);
}

TEST_CASE("cayley csv is a complete multiplication grid") {
  auto z2 = cpt::z2_group();
  std::string csv = cayley_csv(*z2);
  // Element 0 is the generator a; the identity e was reached second.
  CHECK(csv == "*,a,e\na,e,a\ne,a,e\n");
}

TEST_CASE("irreps text shows scalars plainly and matrices in full") {
  auto q = cpt::quaternion_group();
  std::string text = irreps_text(cpt::quaternion_irreps(q));
  CHECK(text.find("chi_1 (dim 1)") != std::string::npos);
  CHECK(text.find("chi_5 (dim 2)") != std::string::npos);
  CHECK(text.find("  iota: [[i, 0], [0, -i]]") != std::string::npos);
  CHECK(text.find("  gamma: -1\n") != std::string::npos);  // chi_2 at gamma
}

TEST_CASE("format names parse exactly") {
  CHECK(parse_render_format("text") == RenderFormat::text);
  CHECK(parse_render_format("json") == RenderFormat::json);
  CHECK(parse_render_format("csv") == RenderFormat::csv);
  CHECK(parse_render_format("latex") == RenderFormat::latex);
  CHECK_FALSE(parse_render_format("yaml").has_value());
  CHECK_FALSE(parse_render_format("TEXT").has_value());
}
