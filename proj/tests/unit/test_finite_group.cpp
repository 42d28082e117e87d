#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>

#include <cptrep/finite_group.hpp>
#include <cptrep/permutation.hpp>
#include <cptrep/quaternion.hpp>

#include "group_builders.hpp"

using namespace cptrep;

TEST_CASE("quaternion units close to a group of order eight") {
  GroupPtr q = testutil::make_quaternion();
  REQUIRE(q->order() == 8);
  CHECK(q->label(q->identity()) == "1");
  CHECK(q->find("-kappa").has_value());
  CHECK(q->mul(q->require("iota"), q->require("gamma")) == q->require("kappa"));
  CHECK(q->mul(q->require("gamma"), q->require("iota")) == q->require("-kappa"));
  CHECK(q->inv(q->require("iota")) == q->require("-iota"));
}

TEST_CASE("permutation seeds (1234) and (13) close to the dihedral group of order eight") {
  GroupPtr d4 = testutil::make_d4();
  REQUIRE(d4->order() == 8);
  CHECK(d4->find("(13)(24)").has_value());
  CHECK(d4->find("(12)(34)").has_value());
  CHECK(d4->find("(14)(23)").has_value());
  CHECK(d4->find("(24)").has_value());
  auto classes = conjugacy_classes(*d4);
  CHECK(classes.size() == 5);
}

TEST_CASE("trivial seed gives the trivial group") {
  std::vector<int> seeds{0};
  GroupPtr t = generate_group(
      seeds, [](int, int) { return 0; }, [](int a, int b) { return a == b; },
      [](int) { return std::string("e"); });
  CHECK(t->order() == 1);
  CHECK(t->identity() == 0);
}

TEST_CASE("generation is deterministic") {
  GroupPtr a = testutil::make_quaternion();
  GroupPtr b = testutil::make_quaternion();
  CHECK(*a == *b);
  CHECK(a->labels() == b->labels());
}

TEST_CASE("element orders match a brute-force power oracle") {
  GroupPtr q = testutil::make_quaternion();
  std::map<unsigned, int> histogram;
  for (ElementId x = 0; x < q->order(); ++x) {
    // oracle: multiply out powers directly
    unsigned k = 1;
    ElementId p = x;
    while (p != q->identity()) {
      p = q->mul(p, x);
      ++k;
    }
    CHECK(element_order(*q, x) == k);
    histogram[k]++;
  }
  // 1, -1, and six elements of order four
  CHECK(histogram == std::map<unsigned, int>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(element_order(*q, q->identity()) == 1);
  CHECK(element_order(*q, q->require("-1")) == 2);
  CHECK(element_order(*q, q->require("iota")) == 4);
}

TEST_CASE("conjugacy classes of the quaternion group have sizes 1,1,2,2,2") {
  GroupPtr q = testutil::make_quaternion();
  auto classes = conjugacy_classes(*q);
  REQUIRE(classes.size() == 5);
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& c : classes) {
    sizes.push_back(c.size());
    total += c.size();
    CHECK(c.representative == c.members.front());
    CHECK(std::is_sorted(c.members.begin(), c.members.end()));
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(total == q->order());
  // -1 is central, iota pairs with -iota
  CHECK(std::find_if(classes.begin(), classes.end(), [&](const ConjugacyClass& c) {
          return c.size() == 2 && c.members[0] == q->require("iota") &&
                 c.members[1] == q->require("-iota");
        }) != classes.end());
}

TEST_CASE("classes are ordered by least member and partition every group") {
  GroupPtr d4 = testutil::make_d4();
  auto classes = conjugacy_classes(*d4);
  std::vector<char> covered(d4->order(), 0);
  for (std::size_t i = 1; i < classes.size(); ++i)
    CHECK(classes[i - 1].representative < classes[i].representative);
  for (const auto& c : classes)
    for (ElementId m : c.members) {
      CHECK(!covered[m]);
      covered[m] = 1;
    }
  CHECK(std::count(covered.begin(), covered.end(), 1) == static_cast<long>(d4->order()));
}

TEST_CASE("class index map inverts the class list") {
  GroupPtr q = testutil::make_quaternion();
  auto classes = conjugacy_classes(*q);
  auto idx = class_index_map(*q, classes);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (ElementId m : classes[c].members) CHECK(idx[m] == c);
}

TEST_CASE("the quaternion center is plus and minus one") {
  GroupPtr q = testutil::make_quaternion();
  auto z = center(*q);
  REQUIRE(z.size() == 2);
  CHECK(z[0] == std::min(q->require("1"), q->require("-1")));
}

TEST_CASE("identity homomorphism verifies cleanly") {
  GroupPtr q = testutil::make_quaternion();
  GroupHom ident{q, q, std::vector<ElementId>(q->order())};
  std::iota(ident.map.begin(), ident.map.end(), 0);
  auto report = verify_hom(ident);
  CHECK(report.ok());
  CHECK(ident.is_bijective());
}

TEST_CASE("verify_hom lists every violating pair of a broken map") {
  GroupPtr z2 = testutil::make_z2();
  GroupPtr q = testutil::make_quaternion();
  // Send the involution generator to an order-4 element: not a hom.
  GroupHom bad{z2, q, {q->identity(), q->require("iota")}};
  auto report = verify_hom(bad);
  CHECK_FALSE(report.ok());
  // (a,a) must be among the violations: f(a*a)=f(e)=1 but f(a)f(a)=-1.
  ElementId a = z2->require("a");
  CHECK(std::find(report.violations.begin(), report.violations.end(),
                  std::make_pair(a, a)) != report.violations.end());
}

TEST_CASE("relabeling preserves structure and indices") {
  GroupPtr z2 = testutil::make_z2();
  FiniteGroup renamed = z2->relabeled({"X", "I"});
  CHECK(renamed.order() == 2);
  CHECK(renamed.label(z2->require("a")) == "X");
  CHECK(renamed.label(z2->identity()) == "I");
  CHECK(renamed.identity() == z2->identity());
  CHECK(renamed.cayley() == z2->cayley());
}

TEST_CASE("imported Cayley data is re-validated") {
  SECTION("non-Latin table") {
    CHECK_THROWS_AS(FiniteGroup({"e", "a"}, {0, 0, 0, 0}, {1}), std::invalid_argument);
  }
  SECTION("Latin square without identity") {
    // x*y = x - y mod 3: rows and columns are permutations but only a
    // right identity exists.
    std::vector<ElementId> sub3 = {0, 2, 1, 1, 0, 2, 2, 1, 0};
    CHECK_THROWS_AS(FiniteGroup({"0", "1", "2"}, sub3, {1}), std::invalid_argument);
  }
  SECTION("generators that do not generate") {
    // Z4 with only the square declared as generator.
    std::vector<ElementId> z4 = {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2};
    CHECK_THROWS_AS(FiniteGroup({"0", "1", "2", "3"}, z4, {2}), std::invalid_argument);
    CHECK_NOTHROW(FiniteGroup({"0", "1", "2", "3"}, z4, {1}));
  }
  SECTION("duplicate labels") {
    CHECK_THROWS_AS(FiniteGroup({"e", "e"}, {0, 1, 1, 0}, {1}), std::invalid_argument);
  }
  SECTION("a nonassociative loop is rejected by the associativity check") {
    // Oracle: search bordered Latin squares of small order for one with
    // two-sided inverses that still breaks associativity, then feed it in.
    auto search = [](std::size_t n) -> std::optional<std::vector<ElementId>> {
      std::vector<ElementId> t(n * n, 0);
      for (std::size_t j = 0; j < n; ++j) t[j] = j;          // identity row
      for (std::size_t i = 0; i < n; ++i) t[i * n] = i;      // identity column
      auto rec = [&](auto&& self, std::size_t cell) -> std::optional<std::vector<ElementId>> {
        if (cell == n * n) {
          for (std::size_t a = 0; a < n; ++a) {  // two-sided inverses
            bool ok = false;
            for (std::size_t b = 0; b < n; ++b)
              if (t[a * n + b] == 0 && t[b * n + a] == 0) ok = true;
            if (!ok) return std::nullopt;
          }
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              for (std::size_t c = 0; c < n; ++c)
                if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return t;
          return std::nullopt;  // associative: an actual group, keep looking
        }
        std::size_t i = cell / n, j = cell % n;
        if (i == 0 || j == 0) return self(self, cell + 1);
        for (ElementId v = 0; v < n; ++v) {
          bool clash = false;
          for (std::size_t jj = 0; jj < j && !clash; ++jj) clash = t[i * n + jj] == v;
          for (std::size_t ii = 0; ii < i && !clash; ++ii) clash = t[ii * n + j] == v;
          if (clash) continue;
          t[i * n + j] = v;
          if (auto r = self(self, cell + 1)) return r;
        }
        return std::nullopt;
      };
      return rec(rec, 0);
    };
    std::optional<std::vector<ElementId>> loop;
    std::size_t order = 0;
    for (std::size_t n = 5; n <= 6 && !loop; ++n) {
      loop = search(n);
      order = n;
    }
    REQUIRE(loop.has_value());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < order; ++i) labels.push_back("x" + std::to_string(i));
    std::vector<ElementId> gens(order - 1);
    std::iota(gens.begin(), gens.end(), 1);
    CHECK_THROWS_WITH(FiniteGroup(labels, *loop, gens),
                      Catch::Matchers::ContainsSubstring("associativity"));
  }
}

TEST_CASE("the order cap bounds construction and honors the environment override") {
  std::vector<int> seeds{1};
  auto gen_mod = [](int m) {
    std::vector<int> s{1};
    return generate_group(
        s, [m](int a, int b) { return (a + b) % m; }, [](int a, int b) { return a == b; },
        [](int a) { return "g" + std::to_string(a); });
  };
  setenv("CPTREP_ORDER_CAP", "16", 1);
  CHECK(group_order_cap() == 16);
  CHECK_NOTHROW(gen_mod(16));
  CHECK_THROWS_AS(gen_mod(17), std::invalid_argument);
  unsetenv("CPTREP_ORDER_CAP");
  CHECK(group_order_cap() == 4096);
  CHECK_NOTHROW(gen_mod(17));
}

TEST_CASE("subgroup closure and predicates") {
  GroupPtr q = testutil::make_quaternion();
  auto whole = subgroup_closure(*q, {q->require("iota"), q->require("gamma")});
  CHECK(whole.size() == 8);
  auto center_sub = subgroup_closure(*q, {q->require("-1")});
  CHECK(center_sub.size() == 2);
  CHECK(is_subgroup(*q, center_sub));
  CHECK(is_normal_subgroup(*q, center_sub));
  auto iota_sub = subgroup_closure(*q, {q->require("iota")});
  CHECK(iota_sub.size() == 4);
  CHECK(is_normal_subgroup(*q, iota_sub));  // index-2 subgroups are normal
  CHECK_FALSE(is_subgroup(*q, {q->require("iota")}));
}

TEST_CASE("order profile distinguishes quaternion and dihedral groups") {
  GroupPtr q = testutil::make_quaternion();
  GroupPtr d4 = testutil::make_d4();
  CHECK(order_profile(*q) !=
        order_profile(*d4));  // one involution versus five
  CHECK(order_profile(*q) ==
        std::vector<std::pair<unsigned, std::size_t>>{{1, 1}, {2, 1}, {4, 6}});
}
