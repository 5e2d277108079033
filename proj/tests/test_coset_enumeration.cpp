#include <catch2/catch_amalgamated.hpp>

#include <hypertope/coset_enumeration.hpp>
#include <hypertope/family_presentations.hpp>
#include <hypertope/relator_parser.hpp>

#include "oracle.hpp"

using namespace hypertope;

namespace {

Presentation from_strings(std::vector<std::string> gens,
                          std::vector<std::string> rels) {
  Presentation p;
  p.generator_names = std::move(gens);
  for (const auto& r : rels) p.add_relator(parse_word(r, p));
  return p;
}

}  // namespace

TEST_CASE("cyclic and dihedral orders") {
  CHECK(group_order(from_strings({"a"}, {"a^2"})) == 2);
  CHECK(group_order(from_strings({"a"}, {"a^6"})) == 6);
  CHECK(group_order(from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^3"})) == 6);
  CHECK(group_order(from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^7"})) == 14);
}

TEST_CASE("frozen small tables") {
  // C3: cosets appear in definition order 0, 0a, 0aa.
  auto c3 = enumerate_cosets(from_strings({"a"}, {"a^3"}));
  REQUIRE(c3.degree() == 3);
  CHECK(c3.column(1) == std::vector<std::uint32_t>{1, 2, 0});
  CHECK(c3.column(-1) == std::vector<std::uint32_t>{2, 0, 1});

  // Klein four-group: relator scans define 0a, 0b, 0ab in that order.
  auto k4 = enumerate_cosets(from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^2"}));
  REQUIRE(k4.degree() == 4);
  CHECK(k4.column(1) == std::vector<std::uint32_t>{1, 0, 3, 2});
  CHECK(k4.column(2) == std::vector<std::uint32_t>{2, 3, 0, 1});
  CHECK(k4.column(-1) == k4.column(1));
  CHECK(k4.column(-2) == k4.column(2));
}

TEST_CASE("coincidences collapse the table") {
  CHECK(group_order(from_strings({"a"}, {"a^3", "a^5"})) == 1);
  CHECK(group_order(from_strings({"a", "b"}, {"a^4", "b^4", "a*b^-1"})) == 4);
  CHECK(group_order(from_strings({"a", "b"},
                                 {"a^2", "b^2", "(a*b)^4", "a*b*a*b"})) == 4);
}

TEST_CASE("engine works without involution assumptions") {
  // Quaternion group.
  CHECK(group_order(from_strings({"a", "b"}, {"a^4", "a^2*b^-2", "b^-1*a*b*a"})) ==
        8);
  // Braid-like presentation of SL(2,3)-ish order is overkill; a semidirect
  // C7 : C3 exercises asymmetric relators instead.
  CHECK(group_order(from_strings({"a", "b"}, {"a^7", "b^3", "b^-1*a*b*a^-2"})) ==
        21);
}

TEST_CASE("capacity bound reports as CapacityExceeded") {
  Presentation free_gen;
  free_gen.generator_names = {"a"};
  CHECK_THROWS_AS(group_order(free_gen, 64), CapacityExceeded);
  CHECK_THROWS_AS(group_order(from_strings({"a", "b"}, {"a^2"}), 128),
                  CapacityExceeded);
  // Large enough capacity succeeds after the same prefix of work.
  CHECK(group_order(from_strings({"a"}, {"a^40"}), 64) == 40);
}

TEST_CASE("subgroup cosets and index") {
  auto m1 = m1_presentation(2);
  auto t = enumerate_cosets(m1, {parse_word("r0", m1), parse_word("r1", m1)});
  CHECK(t.degree() == 8);
  CHECK(t.validate(m1, {parse_word("r0", m1), parse_word("r1", m1)}));

  auto g = g_presentation(10, 2, 2, 2);
  CHECK(enumerate_cosets(g, {{1}, {2}}).degree() == 128);
  CHECK(enumerate_cosets(g, {{1}, {3}}).degree() == 128);
  CHECK(enumerate_cosets(g, {{2}, {3}}).degree() == 128);
}

TEST_CASE("family orders") {
  CHECK(group_order(m1_presentation(2)) == 64);
  CHECK(group_order(m2_presentation(2)) == 32);
  CHECK(group_order(m2_presentation(3)) == 72);
  CHECK(group_order(l1_presentation(3)) == 16);
  CHECK(group_order(l2_presentation(2)) == 8);
  CHECK(group_order(l3_presentation(1)) == 4);
  CHECK(group_order(g_presentation(10, 2, 2, 2)) == 1024);
  CHECK(group_order(g_presentation(11, 3, 2, 2)) == 2048);
  CHECK(group_order(g3_presentation(10, 2, 2, 2)) == 512);
}

TEST_CASE("tables are closed and deterministic") {
  auto p = m2_presentation(2);
  auto t1 = enumerate_cosets(p);
  auto t2 = enumerate_cosets(p);
  REQUIRE(t1.degree() == t2.degree());
  CHECK(t1.validate(p));
  for (std::size_t g = 0; g < p.rank(); ++g) {
    auto x = make_letter(g);
    CHECK(t1.column(x) == t2.column(x));
    CHECK(t1.column(-x) == t2.column(-x));
  }
  // Every relator loops at every coset.
  for (std::uint32_t c = 0; c < t1.degree(); ++c)
    for (const auto& r : p.relators) CHECK(t1.act_word(c, r) == c);
}

TEST_CASE("order agrees with the independent free-closure oracle") {
  std::vector<Presentation> cases;
  for (int n = 2; n <= 5; ++n)
    cases.push_back(from_strings({"a"}, {"a^" + std::to_string(n)}));
  for (int k = 2; k <= 4; ++k)
    cases.push_back(
        from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^" + std::to_string(k)}));
  cases.push_back(from_strings({"a", "b"}, {"a^4", "a^2*b^-2", "b^-1*a*b*a"}));
  cases.push_back(from_strings({"a", "b", "c"},
                               {"a^2", "b^2", "c^2", "(a*b)^2", "(a*c)^2",
                                "(b*c)^2"}));
  cases.push_back(m2_presentation(2));
  cases.push_back(l1_presentation(4));
  for (const auto& p : cases) {
    auto expected = oracle::group_order(p);
    REQUIRE(expected.has_value());
    CHECK(group_order(p) == *expected);
  }
}
