#include <catch2/catch_amalgamated.hpp>

#include <cptrep/character_table.hpp>
#include <cptrep/subgroup_search.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "group_builders.hpp"
#include "rep_builders.hpp"

using namespace cptrep;

namespace {

GroupPtr make_z2_cubed() {
  auto mul = [](unsigned a, unsigned b) { return a ^ b; };
  auto label = [](unsigned a) { return "b" + std::to_string(a); };
  return testutil::make_from(std::vector<unsigned>{1, 2, 4}, mul, label);
}

}  // namespace

TEST_CASE("class-algebra table of the quaternion group") {
  auto q = testutil::make_quaternion();
  CharacterTable table = character_table(q);

  REQUIRE(table.is_complete());
  REQUIRE(table.rows().size() == 5);
  REQUIRE(table.dixon_prime().has_value());
  CHECK(*table.dixon_prime() == 13);

  std::vector<long long> dims;
  for (std::size_t i = 0; i < 5; ++i) {
    dims.push_back(table.dimension(i));
    CHECK(table.rows()[i].provenance == RowProvenance::dixon);
    CHECK(table.rows()[i].name == "chi_" + std::to_string(i + 1));
  }
  CHECK(dims == std::vector<long long>{1, 1, 1, 1, 2});

  // Classes run iota, gamma, -1, kappa, identity; the two-dimensional
  // character vanishes off the centre.
  auto cmap = class_index_map(*q);
  const auto& chi5 = table.rows()[4].character;
  CHECK(chi5.at(cmap[q->require("iota")]).is_zero());
  CHECK(chi5.at(cmap[q->require("gamma")]).is_zero());
  CHECK(chi5.at(cmap[q->require("kappa")]).is_zero());
  CHECK(chi5.at(cmap[q->require("-1")]) == Cyclotomic(-2));
  CHECK(chi5.at(cmap[q->identity()]) == Cyclotomic(2));
}

TEST_CASE("class-algebra table of the two-element group") {
  auto z2 = testutil::make_z2();
  CharacterTable table = character_table(z2);
  REQUIRE(table.rows().size() == 2);
  CHECK(*table.dixon_prime() == 3);

  // Class order puts the non-identity element first, so the sign
  // character sorts ahead of the trivial one.
  auto cmap = class_index_map(*z2);
  CHECK(table.rows()[0].character.at(cmap[z2->require("a")]) == Cyclotomic(-1));
  CHECK(table.rows()[0].character.at(cmap[z2->identity()]) == Cyclotomic(1));
  CHECK(table.rows()[1].character.at(cmap[z2->require("a")]) == Cyclotomic(1));
  CHECK(table.rows()[1].character.at(cmap[z2->identity()]) == Cyclotomic(1));
}

TEST_CASE("class-algebra table of the elementary abelian group of order eight") {
  auto g = make_z2_cubed();
  CharacterTable table = character_table(g);
  REQUIRE(table.rows().size() == 8);
  CHECK(*table.dixon_prime() == 7);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(table.dimension(i) == 1);
    for (std::size_t j = 0; j < 8; ++j) {
      const Cyclotomic& v = table.value(i, j);
      CHECK((v == Cyclotomic(1) || v == Cyclotomic(-1)));
    }
  }
}

TEST_CASE("class-algebra table of the dihedral group of order eight") {
  auto d4 = testutil::make_d4();
  CharacterTable table = character_table(d4);
  REQUIRE(table.rows().size() == 5);
  CHECK(*table.dixon_prime() == 13);

  std::vector<long long> dims;
  for (std::size_t i = 0; i < 5; ++i) dims.push_back(table.dimension(i));
  CHECK(dims == std::vector<long long>{1, 1, 1, 1, 2});

  auto cmap = class_index_map(*d4);
  const auto& chi5 = table.rows()[4].character;
  CHECK(chi5.at(cmap[d4->require("(13)(24)")]) == Cyclotomic(-2));
  CHECK(chi5.at(cmap[d4->require("(1234)")]).is_zero());
  CHECK(chi5.at(cmap[d4->require("(13)")]).is_zero());
}

TEST_CASE("class-algebra and constructive tables of the quaternion group agree") {
  auto q = testutil::make_quaternion();
  CharacterTable by_algebra = character_table(q);
  CharacterTable by_irreps = constructive_table(q, testutil::quaternion_irrep_list(q));

  for (const auto& row : by_irreps.rows()) CHECK(row.provenance == RowProvenance::constructive);
  CHECK(by_irreps.rows()[0].name == "trivial");
  CHECK_FALSE(by_irreps.dixon_prime().has_value());

  auto match = tables_match(by_algebra, by_irreps);
  REQUIRE(match.has_value());
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(by_algebra.value(match->row_map[i], match->col_map[j]) == by_irreps.value(i, j));
      CHECK(by_algebra.classes()[match->col_map[j]].size() == by_irreps.classes()[j].size());
    }
}

TEST_CASE("constructive table construction is strict") {
  auto q = testutil::make_quaternion();
  auto irreps = testutil::quaternion_irrep_list(q);

  SECTION("wrong count") {
    irreps.pop_back();
    CHECK_THROWS_AS(constructive_table(q, irreps), std::invalid_argument);
  }
  SECTION("a repeated representation breaks orthogonality") {
    irreps[1] = irreps[2].renamed("copy");
    CHECK_THROWS_WITH(constructive_table(q, irreps),
                      Catch::Matchers::ContainsSubstring("orthogonality"));
  }
  SECTION("a reducible representation breaks normalisation") {
    irreps[4] = direct_sum(irreps[0], irreps[1], "fake");
    CHECK_THROWS_AS(constructive_table(q, irreps), std::invalid_argument);
  }
}

TEST_CASE("tables of the quaternion and dihedral groups match although the groups do not") {
  auto q = testutil::make_quaternion();
  auto d4 = testutil::make_d4();
  CHECK_FALSE(is_isomorphic(q, d4).has_value());
  CHECK(tables_match(character_table(q), character_table(d4)).has_value());
}

TEST_CASE("tables of genuinely different groups do not match") {
  auto q = testutil::make_quaternion();
  CHECK_FALSE(tables_match(character_table(q), character_table(make_z2_cubed())).has_value());
  CHECK_FALSE(tables_match(character_table(q), character_table(testutil::make_z2())).has_value());
}

TEST_CASE("matching survives row and column reordering") {
  auto q = testutil::make_quaternion();
  CharacterTable table = character_table(q);

  // Rebuild the same table with reversed columns and rotated rows, as an
  // externally supplied table might arrive.
  std::vector<ConjugacyClass> classes = table.classes();
  std::reverse(classes.begin(), classes.end());
  std::vector<CharacterTable::Row> rows;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& src = table.rows()[(i + 2) % 5];
    std::vector<Cyclotomic> values(src.character.values().rbegin(),
                                   src.character.values().rend());
    rows.push_back({src.name, Character(q, std::move(values)), src.provenance});
  }
  CharacterTable shuffled(q, std::move(classes), std::move(rows));

  auto match = tables_match(table, shuffled);
  REQUIRE(match.has_value());
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(table.value(match->row_map[i], match->col_map[j]) == shuffled.value(i, j));
}

TEST_CASE("table construction validates orthogonality") {
  auto q = testutil::make_quaternion();
  CharacterTable table = character_table(q);

  SECTION("a corrupted value is rejected") {
    std::vector<CharacterTable::Row> rows = table.rows();
    std::vector<Cyclotomic> values = rows[0].character.values();
    values[0] = Cyclotomic(3);
    rows[0].character = Character(q, std::move(values));
    CHECK_THROWS_AS(CharacterTable(q, table.classes(), std::move(rows)),
                    std::invalid_argument);
  }
  SECTION("classes must belong to the group") {
    auto d4 = testutil::make_d4();
    CHECK_THROWS_AS(CharacterTable(q, conjugacy_classes(*d4), table.rows()),
                    std::invalid_argument);
  }
  SECTION("degrees must be positive integers") {
    std::vector<CharacterTable::Row> rows = table.rows();
    for (auto& row : rows) {
      std::vector<Cyclotomic> values = row.character.values();
      for (auto& v : values) v = -v;
      row.character = Character(q, std::move(values));
    }
    CHECK_THROWS_WITH(CharacterTable(q, table.classes(), std::move(rows)),
                      Catch::Matchers::ContainsSubstring("degree"));
  }
}

TEST_CASE("orthogonality completion recovers dropped sign characters") {
  auto q = testutil::make_quaternion();
  CharacterTable full = character_table(q);

  SECTION("one missing row") {
    std::vector<CharacterTable::Row> rows = full.rows();
    rows.erase(rows.begin() + 1);
    CharacterTable partial(q, full.classes(), std::move(rows), full.dixon_prime());
    REQUIRE_FALSE(partial.is_complete());

    CharacterTable completed = complete_by_orthogonality(partial);
    REQUIRE(completed.is_complete());
    CHECK(completed.rows().back().provenance == RowProvenance::orthogonality_completion);
    CHECK(completed.rows().back().character == full.rows()[1].character);
    CHECK(completed.dixon_prime() == full.dixon_prime());
    CHECK(tables_match(completed, full).has_value());
  }
  SECTION("two missing rows are still forced") {
    std::vector<CharacterTable::Row> rows = {full.rows()[0], full.rows()[3], full.rows()[4]};
    CharacterTable partial(q, full.classes(), std::move(rows));
    CharacterTable completed = complete_by_orthogonality(partial);
    CHECK(tables_match(completed, full).has_value());
  }
  SECTION("a complete table passes through unchanged") {
    CharacterTable completed = complete_by_orthogonality(full);
    CHECK(completed.rows().size() == 5);
  }
  SECTION("missing rows of higher dimension are refused") {
    std::vector<CharacterTable::Row> rows = full.rows();
    rows.pop_back();
    CharacterTable partial(q, full.classes(), std::move(rows));
    CHECK_THROWS_AS(complete_by_orthogonality(partial), std::invalid_argument);
  }
}

TEST_CASE("orthogonality completion only admits multiplicative candidates") {
  // One orthogonality-only pitfall: plenty of +-1 sign patterns are
  // orthogonal to a single known row without being characters.  The
  // product-law filter leaves exactly the true characters, so even an
  // elementary abelian table rebuilds from the trivial row alone.
  auto g = make_z2_cubed();
  CharacterTable full = character_table(g);
  std::size_t trivial_row = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    bool all_one = true;
    for (std::size_t j = 0; j < 8; ++j) all_one = all_one && full.value(i, j).is_one();
    if (all_one) trivial_row = i;
  }
  CharacterTable partial(g, full.classes(), {full.rows()[trivial_row]});
  CharacterTable completed = complete_by_orthogonality(partial);
  CHECK(tables_match(completed, full).has_value());
}

TEST_CASE("orthogonality completion refuses rows it cannot represent") {
  // The two dropped rows of the cyclic group take values +-i, outside
  // the +-1 candidate space, so no completion can be found.
  auto g = testutil::make_c4();
  CharacterTable full = character_table(g);
  std::vector<CharacterTable::Row> rows;
  for (const auto& row : full.rows()) {
    bool real = true;
    for (const auto& v : row.character.values()) real = real && v == v.conj();
    if (real) rows.push_back(row);
  }
  REQUIRE(rows.size() == 2);
  CharacterTable partial(g, full.classes(), std::move(rows));
  CHECK_THROWS_WITH(complete_by_orthogonality(partial),
                    Catch::Matchers::ContainsSubstring("0 completions"));
}

TEST_CASE("character decomposition by inner products") {
  auto q = testutil::make_quaternion();
  CharacterTable table = character_table(q);
  auto cmap = class_index_map(*q);

  Character regular = character_of(testutil::regular_rep(q));
  CHECK(decompose_character(regular, table) == std::vector<long long>{1, 1, 1, 1, 2});

  std::vector<Cyclotomic> ones(5, Cyclotomic(1));
  Character trivial(q, ones);
  CHECK(decompose_character(trivial, table) == std::vector<long long>{0, 0, 0, 1, 0});

  SECTION("virtual characters may have negative multiplicities") {
    std::vector<Cyclotomic> values(5);
    for (std::size_t j = 0; j < 5; ++j)
      values[j] = table.value(3, j) - table.value(0, j);
    CHECK(decompose_character(Character(q, std::move(values)), table) ==
          std::vector<long long>{-1, 0, 0, 1, 0});
  }
  SECTION("class functions outside the character lattice are refused") {
    std::vector<Cyclotomic> values(5);
    values[cmap[q->identity()]] = Cyclotomic(1);
    values[cmap[q->require("-1")]] = Cyclotomic(1);
    values[cmap[q->require("iota")]] = Cyclotomic(7);
    CHECK_THROWS_AS(decompose_character(Character(q, std::move(values)), table),
                    std::invalid_argument);
  }
}

TEST_CASE("the class-algebra computation is deterministic") {
  auto q = testutil::make_quaternion();
  CharacterTable a = character_table(q);
  CharacterTable b = character_table(testutil::make_quaternion());
  REQUIRE(a.rows().size() == b.rows().size());
  for (std::size_t i = 0; i < a.rows().size(); ++i) {
    CHECK(a.rows()[i].character.values() == b.rows()[i].character.values());
    CHECK(a.rows()[i].name == b.rows()[i].name);
  }
  CHECK(a.dixon_prime() == b.dixon_prime());
}

TEST_CASE("class-algebra table of the trivial group") {
  auto g = testutil::make_from(std::vector<unsigned>{0u},
                               [](unsigned, unsigned) { return 0u; },
                               [](unsigned) { return std::string("e"); });
  CharacterTable table = character_table(g);
  REQUIRE(table.rows().size() == 1);
  CHECK(table.dimension(0) == 1);
}
