#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <cptrep/products.hpp>
#include <cptrep/subgroup_search.hpp>

#include "group_builders.hpp"

using namespace cptrep;

TEST_CASE("direct product multiplies componentwise and in order") {
  GroupPtr q = testutil::make_quaternion();
  GroupPtr z2 = testutil::make_z2();
  DirectProduct dp = direct_product(q, z2);
  REQUIRE(dp.group->order() == 16);
  CHECK(dp.group->find("(iota,a)").has_value());
  ElementId x = dp.group->require("(iota,e)");
  ElementId y = dp.group->require("(gamma,a)");
  CHECK(dp.group->mul(x, y) == dp.group->require("(kappa,a)"));
  CHECK(verify_hom(dp.proj_left).ok());
  CHECK(verify_hom(dp.proj_right).ok());
  CHECK(verify_hom(dp.inj_left).ok());
  CHECK(verify_hom(dp.inj_right).ok());
  CHECK(dp.proj_left.is_surjective());
  CHECK(dp.inj_left.is_injective());
  // projection undoes injection
  for (ElementId g = 0; g < q->order(); ++g) CHECK(dp.proj_left(dp.inj_left(g)) == g);
}

TEST_CASE("class count of a direct product is the product of class counts") {
  GroupPtr q = testutil::make_quaternion();
  GroupPtr z2 = testutil::make_z2();
  DirectProduct dp = direct_product(q, z2);
  auto classes = conjugacy_classes(*dp.group);
  CHECK(classes.size() == conjugacy_classes(*q).size() * conjugacy_classes(*z2).size());
  REQUIRE(classes.size() == 10);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("product with the trivial group is isomorphic to the factor") {
  GroupPtr q = testutil::make_quaternion();
  std::vector<int> seeds{0};
  GroupPtr triv = generate_group(
      seeds, [](int, int) { return 0; }, [](int a, int b) { return a == b; },
      [](int) { return std::string("e"); });
  DirectProduct dp = direct_product(q, triv);
  auto iso = is_isomorphic(dp.group, q);
  REQUIRE(iso.has_value());
  CHECK(verify_hom(*iso).ok());
  CHECK(iso->is_bijective());
}

namespace {

// Z2 acting on C4 by inversion, indexed by Z2's element ids.
cptrep::ActionTable inversion_action(GroupPtr z2, GroupPtr c4) {
  std::vector<ElementId> ident(c4->order());
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<ElementId> invert(c4->order());
  for (ElementId x = 0; x < c4->order(); ++x) invert[x] = c4->inv(x);
  std::vector<std::vector<ElementId>> table(z2->order());
  table[z2->identity()] = ident;
  table[z2->require("a")] = invert;
  return ActionTable(z2, c4, std::move(table));
}

}  // namespace

TEST_CASE("action tables validate automorphism and homomorphism laws") {
  GroupPtr z2 = testutil::make_z2();
  GroupPtr c4 = testutil::make_c4();
  std::vector<ElementId> ident(c4->order());
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<ElementId> invert(c4->order());
  for (ElementId x = 0; x < c4->order(); ++x) invert[x] = c4->inv(x);
  CHECK_NOTHROW(inversion_action(z2, c4));
  // A non-automorphism entry: swap identity with the generator.
  std::vector<ElementId> bad = ident;
  std::swap(bad[c4->identity()], bad[c4->require("(1234)")]);
  std::vector<std::vector<ElementId>> t1(z2->order());
  t1[z2->identity()] = ident;
  t1[z2->require("a")] = bad;
  CHECK_THROWS_AS(ActionTable(z2, c4, t1), std::invalid_argument);
  // Automorphisms assigned to the wrong elements: table is not a hom.
  std::vector<std::vector<ElementId>> t2(z2->order());
  t2[z2->identity()] = invert;
  t2[z2->require("a")] = ident;
  CHECK_THROWS_AS(ActionTable(z2, c4, t2), std::invalid_argument);
}

TEST_CASE("semidirect product by inversion gives a dihedral group") {
  GroupPtr z2 = testutil::make_z2();
  GroupPtr c4 = testutil::make_c4();
  GroupPtr sd = semidirect_product(c4, z2, inversion_action(z2, c4));
  REQUIRE(sd->order() == 8);
  auto iso = is_isomorphic(sd, testutil::make_d4());
  REQUIRE(iso.has_value());
  CHECK(verify_hom(*iso).ok());
  // The law (g',h')(g,h) = (g'.h'(g), h'h): a reflection times a rotation
  // inverts the rotation part.
  ElementId r = sd->require("((1234),e)");
  ElementId s = sd->require("((),a)");
  CHECK(sd->mul(s, r) == sd->require("((1432),a)"));
  CHECK(sd->mul(r, s) == sd->require("((1234),a)"));
}

TEST_CASE("semidirect product with trivial action is isomorphic to the direct product") {
  GroupPtr z2 = testutil::make_z2();
  GroupPtr c4 = testutil::make_c4();
  GroupPtr sd = semidirect_product(c4, z2, ActionTable::trivial(z2, c4));
  DirectProduct dp = direct_product(c4, z2);
  auto iso = is_isomorphic(sd, dp.group);
  REQUIRE(iso.has_value());
  CHECK(verify_hom(*iso).ok());
}

TEST_CASE("quotient by the quaternion center is the Klein four-group") {
  GroupPtr q = testutil::make_quaternion();
  auto [quot, proj] = quotient_group(q, subgroup_closure(*q, {q->require("-1")}));
  REQUIRE(quot->order() == 4);
  CHECK(verify_hom(proj).ok());
  CHECK(proj.is_surjective());
  for (ElementId x = 0; x < quot->order(); ++x) CHECK(element_order(*quot, x) <= 2);
  // Coset labels name the least member; the identity coset {1,-1} has
  // -1 as its least element id under breadth-first ordering.
  CHECK(quot->label(proj(q->require("1"))) == "<-1>");
  CHECK(proj(q->require("1")) == proj(q->require("-1")));
}

TEST_CASE("quotient by the whole group is trivial") {
  GroupPtr q = testutil::make_quaternion();
  std::vector<ElementId> all(q->order());
  std::iota(all.begin(), all.end(), 0);
  auto [quot, proj] = quotient_group(q, all);
  CHECK(quot->order() == 1);
  CHECK(proj.is_surjective());
}

TEST_CASE("quotient rejects non-normal and non-subgroup inputs") {
  GroupPtr d4 = testutil::make_d4();
  // {(), (13)} is a subgroup but not normal in D4.
  std::vector<ElementId> refl = {d4->identity(), d4->require("(13)")};
  std::sort(refl.begin(), refl.end());
  CHECK(is_subgroup(*d4, refl));
  CHECK_FALSE(is_normal_subgroup(*d4, refl));
  CHECK_THROWS_AS(quotient_group(d4, refl), std::invalid_argument);
  CHECK_THROWS_AS(quotient_group(d4, {d4->require("(13)")}), std::invalid_argument);
}

TEST_CASE("order-2 subgroup enumeration matches a brute-force involution oracle") {
  GroupPtr q = testutil::make_quaternion();
  GroupPtr z2 = testutil::make_z2();
  DirectProduct dp = direct_product(q, z2);
  // oracle: every order-2 subgroup is generated by one involution
  std::set<std::vector<ElementId>> expected;
  for (ElementId x = 0; x < dp.group->order(); ++x)
    if (x != dp.group->identity() && dp.group->mul(x, x) == dp.group->identity()) {
      std::vector<ElementId> s{dp.group->identity(), x};
      std::sort(s.begin(), s.end());
      expected.insert(s);
    }
  auto found = subgroups_of_order(*dp.group, 2);
  CHECK(found.size() == 3);
  CHECK(std::set<std::vector<ElementId>>(found.begin(), found.end()) == expected);
  // generated by (-1,e), (1,a), (-1,a)
  for (const char* gen : {"(-1,e)", "(1,a)", "(-1,a)"}) {
    std::vector<ElementId> s{dp.group->identity(), dp.group->require(gen)};
    std::sort(s.begin(), s.end());
    CHECK(std::find(found.begin(), found.end(), s) != found.end());
  }
}

TEST_CASE("subgroup enumeration edge cases") {
  GroupPtr q = testutil::make_quaternion();
  CHECK(subgroups_of_order(*q, 3).empty());  // 3 does not divide 8
  auto whole = subgroups_of_order(*q, 8);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].size() == 8);
  auto order4 = subgroups_of_order(*q, 4);
  CHECK(order4.size() == 3);  // <iota>, <gamma>, <kappa>
  auto order1 = subgroups_of_order(*q, 1);
  REQUIRE(order1.size() == 1);
  CHECK(order1[0] == std::vector<ElementId>{q->identity()});
}

TEST_CASE("an elementary abelian group of rank three has seven order-2 subgroups") {
  std::vector<int> seeds{1, 2, 4};
  GroupPtr z2c = generate_group(
      seeds, [](int a, int b) { return a ^ b; }, [](int a, int b) { return a == b; },
      [](int a) { return "v" + std::to_string(a); });
  REQUIRE(z2c->order() == 8);
  CHECK(subgroups_of_order(*z2c, 2).size() == 7);
  CHECK(subgroups_of_order(*z2c, 4).size() == 7);
}

TEST_CASE("embedding search finds the center copy of Z2 in the quaternion group") {
  GroupPtr q = testutil::make_quaternion();
  GroupPtr z2 = testutil::make_z2();
  auto emb = embeds(z2, q);
  REQUIRE(emb.has_value());
  CHECK(verify_hom(*emb).ok());
  CHECK(emb->is_injective());
  auto image = emb->image();
  CHECK(image.size() == 2);
  CHECK(is_subgroup(*q, image));
  CHECK((*emb)(z2->require("a")) == q->require("-1"));  // the only involution
}

TEST_CASE("embedding respects Lagrange and element orders") {
  GroupPtr c4 = testutil::make_c4();
  GroupPtr d4 = testutil::make_d4();
  CHECK(embeds(d4, c4) == std::nullopt);  // order 8 into order 4
  auto emb = embeds(c4, d4);
  REQUIRE(emb.has_value());
  CHECK(verify_hom(*emb).ok());
  // Klein four-group does not embed into C4: one involution only.
  std::vector<int> seeds{1, 2};
  GroupPtr klein = generate_group(
      seeds, [](int a, int b) { return a ^ b; }, [](int a, int b) { return a == b; },
      [](int a) { return "v" + std::to_string(a); });
  CHECK(embeds(klein, c4) == std::nullopt);
}

TEST_CASE("isomorphism testing separates the order-8 groups") {
  GroupPtr q = testutil::make_quaternion();
  GroupPtr d4 = testutil::make_d4();
  GroupPtr c4 = testutil::make_c4();
  CHECK(is_isomorphic(q, d4) == std::nullopt);
  CHECK(is_isomorphic(q, c4) == std::nullopt);
  auto self = is_isomorphic(q, q);
  REQUIRE(self.has_value());
  for (ElementId x = 0; x < q->order(); ++x) CHECK((*self)(x) == x);
  // Same group rebuilt from scratch: still the identity correspondence.
  auto rebuilt = is_isomorphic(q, testutil::make_quaternion());
  REQUIRE(rebuilt.has_value());
  CHECK(verify_hom(*rebuilt).ok());
}

TEST_CASE("isomorphism search succeeds across different presentations") {
  // C4 as permutations versus Z4 as residues.
  std::vector<int> seeds{1};
  GroupPtr z4 = generate_group(
      seeds, [](int a, int b) { return (a + b) % 4; }, [](int a, int b) { return a == b; },
      [](int a) { return "r" + std::to_string(a); });
  auto iso = is_isomorphic(z4, testutil::make_c4());
  REQUIRE(iso.has_value());
  CHECK(verify_hom(*iso).ok());
  CHECK(iso->is_bijective());
}
