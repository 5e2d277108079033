#include <catch2/catch_amalgamated.hpp>

#include <hypertope/cgroup.hpp>
#include <hypertope/family_presentations.hpp>
#include <hypertope/generated_group.hpp>
#include <hypertope/relator_parser.hpp>

#include <memory>
#include <random>

using namespace hypertope;

namespace {

Presentation from_strings(std::vector<std::string> gens,
                          std::vector<std::string> rels) {
  Presentation p;
  p.generator_names = std::move(gens);
  for (const auto& r : rels) p.add_relator(parse_word(r, p));
  return p;
}

Presentation with_extra_relators(Presentation p,
                                 const std::vector<std::string>& rels) {
  for (const auto& r : rels) p.add_relator(parse_word(r, p));
  return p;
}

Presentation c2_cubed() {
  return from_strings({"r0", "r1", "r2"},
                      {"r0^2", "r1^2", "r2^2", "(r0*r1)^2", "(r0*r2)^2",
                       "(r1*r2)^2"});
}

// A generated group over marked elements of an ambient group, concretized
// as its own permutation group so the marks generate by construction.
GeneratedGroup from_elements(const PermGroup& ambient,
                             const std::vector<element_id>& marks,
                             std::vector<std::string> names = {}) {
  std::vector<Permutation> gens;
  gens.reserve(marks.size());
  for (element_id e : marks) gens.push_back(ambient.element(e));
  auto g = std::make_shared<PermGroup>(std::move(gens), std::move(names));
  std::vector<element_id> invs;
  for (std::size_t i = 0; i < marks.size(); ++i)
    invs.push_back(g->generator_id(i));
  return GeneratedGroup(std::move(g), std::move(invs));
}

}  // namespace

TEST_CASE("generated group validates its marks") {
  auto gg = concretize(m1_presentation(2));
  CHECK(gg.rank() == 3);
  CHECK(gg.group().order() == 64);
  CHECK(gg.names() == std::vector<std::string>{"r0", "r1", "r2"});
  CHECK(gg.shortest_word(0) == "1");
  CHECK(gg.shortest_word(gg.involution(1)) == "r1");

  auto k4 = std::make_shared<PermGroup>(regular_representation(
      from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^2"})));
  // Identity is not an involution.
  CHECK_THROWS_AS(GeneratedGroup(k4, {0}), Error);
  // A single involution does not generate the four-group.
  CHECK_THROWS_AS(GeneratedGroup(k4, {k4->generator_id(0)}), Error);
  // Marking a, b and ab works and renders through the given names.
  element_id ab = k4->mul(k4->generator_id(0), k4->generator_id(1));
  GeneratedGroup redundant(k4, {k4->generator_id(0), k4->generator_id(1), ab},
                           {"a", "b", "c"});
  CHECK(redundant.shortest_word(ab) == "c");
  CHECK(redundant.span({0, 2}).order() == 4);
  CHECK(redundant.parabolic(0).order() == 4);
}

TEST_CASE("string property depends on the far pair") {
  CHECK(check_string_property(
      concretize(from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^4"}))));
  CHECK(check_string_property(concretize(m1_presentation(2))));
  CHECK(check_string_property(concretize(m2_presentation(3))));
  // o(r0 r2) = 2^l, so the string property holds exactly when l = 1.
  CHECK_FALSE(check_string_property(concretize(g_presentation(10, 2, 2, 2))));
  CHECK(check_string_property(concretize(g_presentation(10, 4, 4, 1))));
}

TEST_CASE("intersection property over the subset lattice") {
  CHECK(check_intersection_property(
            concretize(from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^4"})))
            .is_c_group);

  // Elementary abelian of rank 3: subset spans have order 2^|subset|, and
  // intersections match spans of subset intersections by linear algebra.
  auto cube = check_intersection_property(concretize(c2_cubed()));
  CHECK(cube.is_c_group);
  CHECK(cube.is_string);
  CHECK(cube.type_orders == std::vector<std::uint64_t>{2, 2, 2});

  for (long long b : {2, 3}) {
    CHECK(check_intersection_property(concretize(m1_presentation(b)))
              .is_c_group);
    CHECK(check_intersection_property(concretize(m2_presentation(b)))
              .is_c_group);
  }

  auto gg = concretize(g_presentation(10, 2, 2, 2));
  auto rep = check_intersection_property(gg);
  CHECK(rep.is_c_group);
  CHECK_FALSE(rep.is_string);
  CHECK(rep.failures.empty());
  // The pairwise parabolic intersections are the expected involution spans.
  auto meet02 = subgroup_intersection(gg.parabolic(0), gg.parabolic(2));
  CHECK(meet02.order() == 2);
  CHECK(meet02.contains(gg.involution(1)));
  auto meet01 = subgroup_intersection(gg.parabolic(0), gg.parabolic(1));
  CHECK(meet01.order() == 2);
  CHECK(meet01.contains(gg.involution(2)));
  auto meet12 = subgroup_intersection(gg.parabolic(1), gg.parabolic(2));
  CHECK(meet12.order() == 2);
  CHECK(meet12.contains(gg.involution(0)));

  // Lexicographic pair orders versus the string-ordered type tuple.
  auto m1 = concretize(m1_presentation(2));
  CHECK(check_intersection_property(m1).type_orders ==
        std::vector<std::uint64_t>{4, 2, 4});
  CHECK(type_orders(m1) == std::array<std::uint64_t, 3>{4, 4, 2});
}

TEST_CASE("intersection property failure carries a witness") {
  auto k4 = std::make_shared<PermGroup>(regular_representation(
      from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^2"})));
  element_id ab = k4->mul(k4->generator_id(0), k4->generator_id(1));
  GeneratedGroup redundant(k4, {k4->generator_id(0), k4->generator_id(1), ab},
                           {"a", "b", "c"});
  auto rep = check_intersection_property(redundant);
  CHECK_FALSE(rep.is_c_group);
  REQUIRE_FALSE(rep.failures.empty());
  const auto& f = rep.failures.front();
  CHECK(f.left == std::vector<std::size_t>{0});
  CHECK(f.right == std::vector<std::size_t>{1, 2});
  CHECK(f.witness == k4->generator_id(0));
  CHECK(f.witness_word == "a");
  CHECK(rep.type_orders == std::vector<std::uint64_t>{2, 2, 2});
}

TEST_CASE("intersection property at rank 4") {
  auto p = from_strings({"a", "b", "c", "d"},
                        {"a^2", "b^2", "c^2", "d^2", "(a*b)^2", "(a*c)^2",
                         "(a*d)^2", "(b*c)^2", "(b*d)^2", "(c*d)^2"});
  auto gg = concretize(p);
  CHECK(gg.group().order() == 16);
  CHECK(check_intersection_property(gg).is_c_group);

  auto rank5 = from_strings({"a", "b", "c", "d", "e"},
                            {"a^2", "b^2", "c^2", "d^2", "e^2"});
  CHECK_THROWS_AS(
      check_intersection_property(concretize(with_extra_relators(
          rank5, {"(a*b)^2", "(a*c)^2", "(a*d)^2", "(a*e)^2", "(b*c)^2",
                  "(b*d)^2", "(b*e)^2", "(c*d)^2", "(c*e)^2", "(d*e)^2"}))),
      Error);
}

TEST_CASE("a passing intersection property pins the generator count") {
  for (const auto& p : {g_presentation(10, 2, 2, 2), m1_presentation(2)}) {
    auto gg = concretize(p);
    REQUIRE(check_intersection_property(gg).is_c_group);
    CHECK(frattini_rank(gg.group()).rank == gg.rank());
  }
}

TEST_CASE("flag-transitivity condition and its boundary sets") {
  auto gg = concretize(g_presentation(10, 2, 2, 2));
  auto tits = tits_condition(gg);
  CHECK(tits.holds);
  REQUIRE(tits.lhs.size() == 4);
  CHECK(tits.lhs == tits.rhs);
  std::vector<std::string> words;
  for (element_id e : tits.lhs) words.push_back(gg.shortest_word(e));
  CHECK(words == std::vector<std::string>{"1", "r1", "r2", "r2*r1"});

  CHECK(tits_condition(concretize(c2_cubed())).holds);
  CHECK(flag_transitivity_rank3(gg));
  CHECK(flag_transitivity_rank3(concretize(g_presentation(11, 2, 2, 3))));
  CHECK(tits_condition(concretize(g_presentation(12, 3, 3, 2))).holds);

  CHECK_THROWS_AS(
      tits_condition(concretize(from_strings({"a"}, {"a^2"}))), Error);
}

TEST_CASE("both flag-transitivity forms agree on random involution triples") {
  auto ambient = regular_representation(m1_presentation(2));
  std::vector<element_id> involutions;
  for (element_id e = 0; e < ambient.order(); ++e)
    if (ambient.element_order(e) == 2) involutions.push_back(e);
  REQUIRE(involutions.size() > 10);

  std::mt19937 rng(20240816);
  std::uniform_int_distribution<std::size_t> pick(0, involutions.size() - 1);
  std::size_t held = 0;
  for (int i = 0; i < 50; ++i) {
    auto gg = from_elements(ambient, {involutions[pick(rng)],
                                      involutions[pick(rng)],
                                      involutions[pick(rng)]});
    // Throws if the two forms ever disagree.
    if (tits_condition(gg).holds) ++held;
  }
  CHECK(held > 0);
}

TEST_CASE("type orders") {
  CHECK(type_orders(concretize(g_presentation(10, 2, 2, 2))) ==
        std::array<std::uint64_t, 3>{4, 4, 4});
  CHECK(type_orders(concretize(g_presentation(12, 3, 2, 4))) ==
        std::array<std::uint64_t, 3>{8, 4, 16});
  CHECK(type_orders(concretize(c2_cubed())) ==
        std::array<std::uint64_t, 3>{2, 2, 2});
  // The pairwise orders follow the parameters across the family.
  for (auto [n, s, t, l] :
       {std::array<long long, 4>{10, 3, 2, 2}, {11, 2, 3, 2}, {10, 4, 4, 1},
        {12, 3, 3, 2}}) {
    auto got = type_orders(concretize(g_presentation(n, s, t, l)));
    CHECK(got == std::array<std::uint64_t, 3>{1ull << s, 1ull << t,
                                              1ull << l});
  }
}

TEST_CASE("quotient criterion") {
  auto p = g_presentation(10, 2, 2, 2);
  auto gg = concretize(p);
  CHECK(quotient_criterion(gg, p, gg));

  // Collapsing r0 keeps the map one-to-one on <r1,r2>, so the criterion
  // still applies through the second branch of the disjunction.
  auto q0 = regular_representation(with_extra_relators(p, {"r0"}));
  CHECK(q0.order() == 8);
  std::vector<element_id> images0;
  for (std::size_t i = 0; i < 3; ++i) images0.push_back(q0.generator_id(i));
  CHECK(images0[0] == 0);
  CHECK(quotient_criterion(gg, p, q0, images0));

  // Collapsing the middle generator kills both end spans.
  auto q1 = regular_representation(with_extra_relators(p, {"r1"}));
  std::vector<element_id> images1;
  for (std::size_t i = 0; i < 3; ++i) images1.push_back(q1.generator_id(i));
  CHECK(images1[1] == 0);
  CHECK_FALSE(quotient_criterion(gg, p, q1, images1));

  // A relator with an odd generator count cannot land in the trivial image.
  auto pm = m2_presentation(3);
  auto src = concretize(pm);
  auto c2 = regular_representation(from_strings({"x"}, {"x^2"}));
  CHECK_THROWS_AS(
      quotient_criterion(src, pm, c2, {c2.generator_id(0), 0, 0}),
      NotAHomomorphismError);

  // A presentation that does not hold in the source group is rejected.
  auto bogus = from_strings({"r0", "r1", "r2"}, {"r0"});
  CHECK_THROWS_AS(quotient_criterion(gg, bogus, gg), Error);
}

TEST_CASE("quotient chain between the layered quotients") {
  // Killing A and C, then additionally B, gives nested quotients of the
  // main family; the criterion certifies the connecting map.
  auto p = g_presentation(12, 3, 3, 2);
  auto p_ac = with_extra_relators(p, {"(r0*r1)^4", "(r0*r2)^2"});
  auto p_k = with_extra_relators(p_ac, {"(r1*r2)^4"});
  auto q_ac = concretize(p_ac);
  auto q_k = concretize(p_k);
  CHECK(q_ac.group().order() == 1024);
  CHECK(q_k.group().order() == 512);
  CHECK(quotient_criterion(q_ac, p_ac, q_k));
}
