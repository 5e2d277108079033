#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <hypertope/cgroup.hpp>
#include <hypertope/family_presentations.hpp>
#include <hypertope/generated_group.hpp>
#include <hypertope/geometry.hpp>
#include <hypertope/relator_parser.hpp>

namespace hypertope {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // value on pass, expected-versus-got on failure
};

namespace detail {

inline std::string eq_witness(std::uint64_t expected, std::uint64_t got) {
  if (expected == got) return std::to_string(got);
  return "expected " + std::to_string(expected) + ", got " +
         std::to_string(got);
}

inline std::vector<element_id> conjugated_members(const PermGroup& g,
                                                  const Subgroup& s,
                                                  element_id by) {
  std::vector<element_id> out;
  out.reserve(s.order());
  for (element_id e : s.members()) out.push_back(g.conjugate(e, by));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool swaps_under(const PermGroup& g, const Subgroup& a,
                        const Subgroup& b, element_id by) {
  return conjugated_members(g, a, by) == b.members() &&
         conjugated_members(g, b, by) == a.members();
}

}  // namespace detail

struct Prop23Report {
  long long b = 0;
  std::size_t m1_order = 0;
  std::size_t m2_order = 0;
  std::uint64_t m1_word_order = 0;  // o(r2 r1 r0)
  std::uint64_t m2_word_order = 0;  // o(r1 r2 r1 r0)
  std::vector<CheckResult> checks;
  bool ok = false;
};

// Orders of the two base families and of their driving words.
inline Prop23Report verify_prop23(
    long long b, std::size_t capacity = kDefaultCosetCapacity,
    std::size_t element_ceiling = kDefaultElementCeiling) {
  Prop23Report r;
  r.b = b;
  auto p1 = m1_presentation(b);
  auto p2 = m2_presentation(b);
  auto g1 = regular_representation(p1, capacity, element_ceiling);
  auto g2 = regular_representation(p2, capacity, element_ceiling);
  r.m1_order = g1.order();
  r.m2_order = g2.order();
  r.m1_word_order = g1.element_order(g1.eval_word(parse_word("r2*r1*r0", p1)));
  r.m2_word_order =
      g2.element_order(g2.eval_word(parse_word("r1*r2*r1*r0", p2)));
  auto ub = static_cast<std::uint64_t>(b);
  r.checks = {
      {"|M1| = 16b^2", r.m1_order == 16 * ub * ub,
       detail::eq_witness(16 * ub * ub, r.m1_order)},
      {"|M2| = 8b^2", r.m2_order == 8 * ub * ub,
       detail::eq_witness(8 * ub * ub, r.m2_order)},
      {"o(r2*r1*r0) = 2b in M1", r.m1_word_order == 2 * ub,
       detail::eq_witness(2 * ub, r.m1_word_order)},
      {"o(r1*r2*r1*r0) = b in M2", r.m2_word_order == ub,
       detail::eq_witness(ub, r.m2_word_order)},
  };
  r.ok = true;
  for (const auto& c : r.checks) r.ok = r.ok && c.pass;
  return r;
}

struct Lemma31Report {
  long long b = 0;
  std::vector<CheckResult> checks;
  bool ok = false;
};

// The decomposition witnesses behind M1 = (D x D) : (C2 x C2) and
// M2 = (D x D) : C2, checked exactly as the proof builds them.
inline Lemma31Report verify_lemma31(
    long long b, std::size_t capacity = kDefaultCosetCapacity,
    std::size_t element_ceiling = kDefaultElementCeiling) {
  Lemma31Report r;
  r.b = b;
  auto ub = static_cast<std::uint64_t>(b);
  auto push = [&](const std::string& name, bool pass,
                  const std::string& witness) {
    r.checks.push_back({name, pass, witness});
  };

  {
    auto p = m1_presentation(b);
    auto gg = concretize(p, capacity, element_ceiling);
    const PermGroup& g = gg.group();
    auto word_sub = [&](const std::vector<std::string>& ws) {
      std::vector<word_type> words;
      for (const auto& w : ws) words.push_back(parse_word(w, p));
      return closure_of_words(g, words);
    };
    auto a = word_sub({"r1^r0", "r1^r2"});
    auto bb = word_sub({"r1", "r1^(r0*r2)"});
    auto comp = word_sub({"r0", "r2"});
    push("m1: |A| = 2b", a.order() == 2 * ub,
         detail::eq_witness(2 * ub, a.order()));
    push("m1: |B| = 2b", bb.order() == 2 * ub,
         detail::eq_witness(2 * ub, bb.order()));
    auto rot = g.element_order(g.eval_word(parse_word("r1^r2*r1^r0", p)));
    push("m1: o(r1^r2 * r1^r0) = b", rot == ub, detail::eq_witness(ub, rot));
    push("m1: [A,B] = 1", commute_check(a, bb), "");
    push("m1: A n B trivial", subgroup_intersection(a, bb).is_trivial(), "");
    auto ab = product_set(a, bb);
    std::size_t meet = 0;
    for (element_id e : ab)
      if (comp.contains(e)) ++meet;
    push("m1: complement is C2 x C2", comp.order() == 4,
         detail::eq_witness(4, comp.order()));
    push("m1: complement meets AB trivially", meet == 1,
         detail::eq_witness(1, meet));
    auto cover = product_set(g, ab, comp.members()).size();
    push("m1: product covers M1", cover == g.order(),
         detail::eq_witness(g.order(), cover));
    push("m1: conjugation by r0 swaps A and B",
         detail::swaps_under(g, a, bb, gg.involution(0)), "");
    push("m1: conjugation by r2 swaps A and B",
         detail::swaps_under(g, a, bb, gg.involution(2)), "");
  }

  {
    auto p = m2_presentation(b);
    auto gg = concretize(p, capacity, element_ceiling);
    const PermGroup& g = gg.group();
    auto word_sub = [&](const std::vector<std::string>& ws) {
      std::vector<word_type> words;
      for (const auto& w : ws) words.push_back(parse_word(w, p));
      return closure_of_words(g, words);
    };
    auto c = word_sub({"r0", "r2^r1"});
    auto d = word_sub({"r0^r1", "r2"});
    auto comp = word_sub({"r1"});
    push("m2: |C| = 2b", c.order() == 2 * ub,
         detail::eq_witness(2 * ub, c.order()));
    push("m2: |D| = 2b", d.order() == 2 * ub,
         detail::eq_witness(2 * ub, d.order()));
    auto o1 = g.element_order(g.eval_word(parse_word("r2^r1*r0", p)));
    auto o2 = g.element_order(g.eval_word(parse_word("r2*r0^r1", p)));
    push("m2: o(r2^r1 * r0) = b", o1 == ub, detail::eq_witness(ub, o1));
    push("m2: o(r2 * r0^r1) = b", o2 == ub, detail::eq_witness(ub, o2));
    push("m2: [C,D] = 1", commute_check(c, d), "");
    push("m2: C n D trivial", subgroup_intersection(c, d).is_trivial(), "");
    auto cd = product_set(c, d);
    std::size_t meet = 0;
    for (element_id e : cd)
      if (comp.contains(e)) ++meet;
    push("m2: complement meets CD trivially", meet == 1,
         detail::eq_witness(1, meet));
    auto cover = product_set(g, cd, comp.members()).size();
    push("m2: product covers M2", cover == g.order(),
         detail::eq_witness(g.order(), cover));
    push("m2: conjugation by r1 swaps C and D",
         detail::swaps_under(g, c, d, gg.involution(1)), "");
  }

  r.ok = true;
  for (const auto& c : r.checks) r.ok = r.ok && c.pass;
  return r;
}

struct TheoremStage {
  std::string name;
  bool pass = false;
  std::string witness;
  double elapsed_ms = 0.0;
};

struct TheoremReport {
  long long n = 0, s = 0, t = 0, l = 0;
  std::string parity_branch;
  std::vector<TheoremStage> stages;
  bool ok = false;  // every stage executed and passed
};

// The full verification ladder of the main construction, one stage per
// claim; a failing stage aborts the rest.
inline TheoremReport verify_theorem32(
    long long n, long long s, long long t, long long l, bool deep = false,
    std::size_t capacity = kDefaultCosetCapacity,
    std::size_t element_ceiling = kDefaultElementCeiling) {
  if (n > 14)
    throw FamilyParamError(
        "n <= 14 is the practical ceiling for the element table");
  Presentation p = g_presentation(n, s, t, l);
  TheoremReport r;
  r.n = n;
  r.s = s;
  r.t = t;
  r.l = l;
  r.parity_branch = (n - s - t - l) % 2 == 0 ? "even" : "odd";

  auto pow2 = [](long long e) { return std::uint64_t{1} << e; };
  bool alive = true;
  auto stage = [&](const std::string& name, auto&& f) {
    if (!alive) return;
    auto t0 = std::chrono::steady_clock::now();
    std::pair<bool, std::string> res = f();
    auto t1 = std::chrono::steady_clock::now();
    r.stages.push_back(
        {name, res.first, res.second,
         std::chrono::duration<double, std::milli>(t1 - t0).count()});
    alive = res.first;
  };

  std::optional<GeneratedGroup> gg;
  std::optional<Subgroup> sub_a, sub_b, sub_c;
  std::size_t k_order = 0;

  stage("order", [&]() -> std::pair<bool, std::string> {
    gg.emplace(concretize(p, capacity, element_ceiling));
    auto got = gg->group().order();
    return {got == pow2(n), detail::eq_witness(pow2(n), got)};
  });

  stage("type", [&]() -> std::pair<bool, std::string> {
    auto got = type_orders(*gg);
    std::array<std::uint64_t, 3> want{pow2(s), pow2(t), pow2(l)};
    std::string txt = "(" + std::to_string(got[0]) + "," +
                      std::to_string(got[1]) + "," + std::to_string(got[2]) +
                      ")";
    return {got == want, txt};
  });

  stage("normality", [&]() -> std::pair<bool, std::string> {
    const PermGroup& g = gg->group();
    sub_a = closure_of_words(g, {parse_word("(r0*r1)^4", p)});
    sub_b = closure_of_words(g, {parse_word("(r1*r2)^4", p)});
    sub_c = closure_of_words(g, {parse_word("(r0*r2)^2", p)});
    std::string bad;
    if (!is_normal(g, *sub_a)) bad += " A";
    if (!is_normal(g, *sub_b)) bad += " B";
    if (!is_normal(g, *sub_c)) bad += " C";
    if (bad.empty()) return {true, "A, B, C normal"};
    return {false, "not normal:" + bad};
  });

  stage("K structure", [&]() -> std::pair<bool, std::string> {
    auto w = direct_product_witness(gg->group(), {*sub_a, *sub_b, *sub_c});
    k_order = w.product_order;
    if (!w.ok) return {false, w.failure};
    if (sub_a->order() != pow2(s - 2))
      return {false, "|A| " + detail::eq_witness(pow2(s - 2), sub_a->order())};
    if (sub_b->order() != pow2(t - 2))
      return {false, "|B| " + detail::eq_witness(pow2(t - 2), sub_b->order())};
    if (sub_c->order() != pow2(l - 1))
      return {false, "|C| " + detail::eq_witness(pow2(l - 1), sub_c->order())};
    if (w.product_order != pow2(s + t + l - 5))
      return {false, "|K| " + detail::eq_witness(pow2(s + t + l - 5),
                                                 w.product_order)};
    return {true, "K = A x B x C of order " + std::to_string(k_order)};
  });

  stage("quotient order", [&]() -> std::pair<bool, std::string> {
    auto got = gg->group().order() / k_order;
    return {got == pow2(n - s - t - l + 5),
            detail::eq_witness(pow2(n - s - t - l + 5), got)};
  });

  stage("C-group", [&]() -> std::pair<bool, std::string> {
    auto rep = check_intersection_property(*gg);
    if (rep.is_c_group) return {true, "intersection property holds"};
    const auto& f = rep.failures.front();
    return {false, "fails at witness " + f.witness_word};
  });

  stage("rank", [&]() -> std::pair<bool, std::string> {
    auto fr = frattini_rank(gg->group());
    return {fr.rank == 3, detail::eq_witness(3, fr.rank)};
  });

  stage("flag transitivity", [&]() -> std::pair<bool, std::string> {
    auto res = tits_condition(*gg);
    auto words = [&](const std::vector<element_id>& side) {
      std::string out;
      for (element_id e : side)
        out += (out.empty() ? "" : ", ") + gg->shortest_word(e);
      return "{" + out + "}";
    };
    std::string txt = words(res.lhs);
    if (res.lhs != res.rhs) txt += " / " + words(res.rhs);
    bool named = txt == "{1, r1, r2, r2*r1}";
    return {res.holds && named, txt};
  });

  stage("hypertope", [&]() -> std::pair<bool, std::string> {
    auto v = hypertope_verdict(*gg);
    bool exact = v.ok && v.chambers == pow2(n) &&
                 v.type == std::array<std::uint64_t, 3>{pow2(s), pow2(t),
                                                        pow2(l)};
    return {exact, v.summary};
  });

  if (deep) {
    stage("deep: G1 order", [&]() -> std::pair<bool, std::string> {
      auto want = gg->group().order() / sub_c->order();
      auto got = group_order(g1_presentation(n, s, t, l), capacity);
      return {got == want, detail::eq_witness(want, got)};
    });
    stage("deep: G2 order", [&]() -> std::pair<bool, std::string> {
      auto want =
          gg->group().order() / (sub_a->order() * sub_c->order());
      auto got = group_order(g2_presentation(n, s, t, l), capacity);
      return {got == want, detail::eq_witness(want, got)};
    });
    stage("deep: G3 order", [&]() -> std::pair<bool, std::string> {
      auto want = gg->group().order() / k_order;
      auto got = group_order(g3_presentation(n, s, t, l), capacity);
      return {got == want, detail::eq_witness(want, got)};
    });

    std::optional<GeneratedGroup> q1, q2, q3;
    auto p1 = g1_presentation(n, s, t, l);
    auto p2 = g2_presentation(n, s, t, l);
    auto p3 = g3_presentation(n, s, t, l);
    stage("deep: quotient G to G1", [&]() -> std::pair<bool, std::string> {
      q1.emplace(concretize(p1, capacity, element_ceiling));
      return {quotient_criterion(*gg, p, *q1), ""};
    });
    stage("deep: quotient G1 to G2", [&]() -> std::pair<bool, std::string> {
      q2.emplace(concretize(p2, capacity, element_ceiling));
      return {quotient_criterion(*q1, p1, *q2), ""};
    });
    stage("deep: quotient G2 to G3", [&]() -> std::pair<bool, std::string> {
      q3.emplace(concretize(p3, capacity, element_ceiling));
      return {quotient_criterion(*q2, p2, *q3), ""};
    });
    stage("deep: G3 string C-group", [&]() -> std::pair<bool, std::string> {
      auto rep = check_intersection_property(*q3);
      if (!rep.is_c_group)
        return {false, "fails at witness " + rep.failures.front().witness_word};
      return {rep.is_string, rep.is_string ? "" : "string property fails"};
    });
    stage("deep: G3 structure", [&]() -> std::pair<bool, std::string> {
      // equal orders plus a generator-to-generator epimorphism certify an
      // isomorphism onto the base family the quotient collapses to
      long long m = n - s - t - l;
      bool even = m % 2 == 0;
      long long b = even ? (1ll << ((m + 2) / 2)) : (1ll << ((m + 1) / 2));
      auto family = even ? m2_presentation(b) : m1_presentation(b);
      std::string fname =
          (even ? "M2(" : "M1(") + std::to_string(b) + ")";
      auto target = concretize(family, capacity, element_ceiling);
      if (target.group().order() != q3->group().order())
        return {false, "order differs from " + fname};
      if (!quotient_criterion(*q3, p3, target))
        return {false, "no isomorphism onto " + fname};
      return {true, "G3 iso to " + fname};
    });
  }

  r.ok = alive;
  return r;
}

struct AnalyzeReport {
  std::size_t order = 0;
  bool degenerate = false;
  std::string degenerate_reason;
  std::array<std::uint64_t, 3> type{};
  CGroupReport cgroup;
  bool tits_holds = false;
  std::vector<std::string> tits_lhs_words;
  std::vector<std::string> tits_rhs_words;
  HypertopeVerdict verdict;
  std::vector<std::array<std::size_t, 3>> string_orderings;
  std::vector<std::string> param_mismatches;
};

// The whole pipeline on arbitrary three-generator input, plus expectation
// checks against any parameters recorded in the presentation.
inline AnalyzeReport analyze_presentation(
    const Presentation& p, std::size_t capacity = kDefaultCosetCapacity,
    std::size_t element_ceiling = kDefaultElementCeiling) {
  if (p.rank() != 3) throw Error("analysis needs exactly 3 generators");
  AnalyzeReport r;
  auto expect = [&](const std::string& key, std::uint64_t got,
                    const std::string& what) {
    auto it = p.params.find(key);
    if (it == p.params.end() || it->second < 0 || it->second > 62) return;
    auto want = std::uint64_t{1} << it->second;
    if (got != want)
      r.param_mismatches.push_back(what + " is " + std::to_string(got) +
                                   ", parameter " + key + " promises " +
                                   std::to_string(want));
  };
  std::optional<GeneratedGroup> gg;
  try {
    gg.emplace(concretize(p, capacity, element_ceiling));
  } catch (const CapacityExceeded&) {
    throw;
  } catch (const ElementCeilingExceeded&) {
    throw;
  } catch (const Error& e) {
    r.degenerate = true;
    r.degenerate_reason = e.what();
    r.order = group_order(p, capacity);
    expect("n", r.order, "order");
    return r;
  }
  r.order = gg->group().order();
  r.type = type_orders(*gg);
  r.cgroup = check_intersection_property(*gg);
  auto tits = tits_condition(*gg);
  r.tits_holds = tits.holds;
  for (element_id e : tits.lhs) r.tits_lhs_words.push_back(gg->shortest_word(e));
  for (element_id e : tits.rhs) r.tits_rhs_words.push_back(gg->shortest_word(e));
  r.verdict = hypertope_verdict(*gg);

  const PermGroup& g = gg->group();
  static constexpr std::array<std::array<std::size_t, 3>, 6> kOrders{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& ord : kOrders) {
    element_id x = gg->involution(ord[0]), z = gg->involution(ord[2]);
    if (g.mul(x, z) == g.mul(z, x)) r.string_orderings.push_back(ord);
  }

  auto pair_label = [&](std::size_t i, std::size_t j) {
    return "o(" + p.generator_names[i] + "*" + p.generator_names[j] + ")";
  };
  expect("n", r.order, "order");
  expect("s", r.type[0], pair_label(0, 1));
  expect("t", r.type[1], pair_label(1, 2));
  expect("l", r.type[2], pair_label(0, 2));
  return r;
}

}  // namespace hypertope
