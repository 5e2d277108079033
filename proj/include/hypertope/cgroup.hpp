#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include <hypertope/generated_group.hpp>
#include <hypertope/presentation.hpp>
#include <hypertope/subgroup.hpp>

namespace hypertope {

struct IntersectionFailure {
  std::vector<std::size_t> left;   // indices of the first subset
  std::vector<std::size_t> right;  // indices of the second subset
  element_id witness = 0;          // in both spans but not in span(left&right)
  std::string witness_word;
};

struct CGroupReport {
  bool is_c_group = false;
  std::vector<IntersectionFailure> failures;
  std::vector<std::uint64_t> type_orders;  // o(s_i s_j) for i < j
  bool is_string = false;
};

// Whether all non-adjacent distinguished pairs commute under the given
// ordering.
inline bool check_string_property(const GeneratedGroup& g) {
  const PermGroup& grp = g.group();
  for (std::size_t i = 0; i + 2 < g.rank(); ++i)
    for (std::size_t j = i + 2; j < g.rank(); ++j)
      if (grp.mul(g.involution(i), g.involution(j)) !=
          grp.mul(g.involution(j), g.involution(i)))
        return false;
  return true;
}

namespace detail {

inline std::vector<std::size_t> mask_indices(unsigned mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) out.push_back(i);
  return out;
}

}  // namespace detail

// Verifies span(I) n span(J) = span(I n J) over the whole subset lattice of
// the distinguished involutions; each failure carries one witness element.
inline CGroupReport check_intersection_property(const GeneratedGroup& g) {
  if (g.rank() > 4)
    throw Error("intersection property check supports rank at most 4");
  const unsigned total = 1u << g.rank();
  std::vector<Subgroup> spans;
  spans.reserve(total);
  for (unsigned mask = 0; mask < total; ++mask)
    spans.push_back(g.span(detail::mask_indices(mask)));

  CGroupReport report;
  for (unsigned a = 0; a < total; ++a)
    for (unsigned b = a + 1; b < total; ++b) {
      const Subgroup& meet = spans[a & b];
      for (element_id e : spans[a].members())
        if (spans[b].contains(e) && !meet.contains(e)) {
          report.failures.push_back({detail::mask_indices(a),
                                     detail::mask_indices(b), e,
                                     g.shortest_word(e)});
          break;
        }
    }
  report.is_c_group = report.failures.empty();
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = i + 1; j < g.rank(); ++j)
      report.type_orders.push_back(g.group().element_order(
          g.group().mul(g.involution(i), g.involution(j))));
  report.is_string = check_string_property(g);
  return report;
}

struct TitsConditionResult {
  bool holds = false;
  // The two sides of (G0 n G1)(G0 n G2) = (G1 G2) n G0, as sorted ids.
  std::vector<element_id> lhs;
  std::vector<element_id> rhs;
};

// Evaluates both equivalent forms of the rank-3 flag-transitivity condition
// and insists they agree; reports the sides of the second form.
inline TitsConditionResult tits_condition(const GeneratedGroup& g) {
  if (g.rank() != 3) throw Error("tits condition needs rank 3");
  Subgroup g0 = g.parabolic(0), g1 = g.parabolic(1), g2 = g.parabolic(2);

  // Form (1): G0 G1 n G0 G2 = G0 (G1 n G2).
  std::vector<element_id> g0g1 = product_set(g0, g1);
  std::vector<element_id> g0g2 = product_set(g0, g2);
  std::vector<element_id> lhs1;
  std::set_intersection(g0g1.begin(), g0g1.end(), g0g2.begin(), g0g2.end(),
                        std::back_inserter(lhs1));
  std::vector<element_id> rhs1 = product_set(
      g.group(), g0.members(), subgroup_intersection(g1, g2).members());
  bool holds1 = lhs1 == rhs1;

  // Form (2): (G0 n G1)(G0 n G2) = (G1 G2) n G0.
  TitsConditionResult r;
  r.lhs = product_set(g.group(), subgroup_intersection(g0, g1).members(),
                      subgroup_intersection(g0, g2).members());
  for (element_id e : product_set(g1, g2))
    if (g0.contains(e)) r.rhs.push_back(e);
  r.holds = r.lhs == r.rhs;

  if (holds1 != r.holds)
    throw std::logic_error(
        "the two forms of the flag-transitivity condition disagree: form 1 " +
        std::string(holds1 ? "holds" : "fails") + " but form 2 " +
        std::string(r.holds ? "holds" : "fails"));
  return r;
}

// The rank-3 reduction of the flag-transitivity criterion for coset
// geometries coincides with the condition above.
inline bool flag_transitivity_rank3(const GeneratedGroup& g) {
  return tits_condition(g).holds;
}

// Pairwise orders (o(s0 s1), o(s1 s2), o(s0 s2)) defining the type.
inline std::array<std::uint64_t, 3> type_orders(const GeneratedGroup& g) {
  if (g.rank() != 3) throw Error("type extraction needs rank 3");
  const PermGroup& grp = g.group();
  auto o = [&](std::size_t i, std::size_t j) {
    return grp.element_order(grp.mul(g.involution(i), g.involution(j)));
  };
  return {o(0, 1), o(1, 2), o(0, 2)};
}

namespace detail {

inline element_id eval_word_in(const PermGroup& grp,
                               const std::vector<element_id>& images,
                               const word_type& w) {
  element_id x = 0;
  for (letter_type l : w) {
    element_id img = images.at(gen_of(l));
    x = grp.mul(x, is_inverse(l) ? grp.inv(img) : img);
  }
  return x;
}

}  // namespace detail

// Whether the generator-wise map from the source onto the marked images is
// a homomorphism that stays one-to-one on the span of the first two or the
// last two involutions. The presentation must present the source group;
// its relators are checked against both sides.
inline bool quotient_criterion(const GeneratedGroup& source,
                               const Presentation& source_pres,
                               const PermGroup& target,
                               const std::vector<element_id>& images) {
  if (source.rank() != 3 || source_pres.rank() != 3 || images.size() != 3)
    throw Error("quotient criterion needs rank 3 on both sides");
  for (const auto& rel : source_pres.relators) {
    if (detail::eval_word_in(source.group(), source.involutions(), rel) != 0)
      throw Error("presentation does not present the source group: relator " +
                  render_word(rel, source_pres.generator_names) +
                  " fails on the source side");
    if (detail::eval_word_in(target, images, rel) != 0)
      throw NotAHomomorphismError(
          "relator " + render_word(rel, source_pres.generator_names) +
          " does not map to the identity");
  }
  auto injective_on = [&](std::size_t i, std::size_t j) {
    std::size_t src = closure(source.group(),
                              {source.involution(i), source.involution(j)})
                          .order();
    std::size_t img = closure(target, {images[i], images[j]}).order();
    return src == img;
  };
  return injective_on(0, 1) || injective_on(1, 2);
}

inline bool quotient_criterion(const GeneratedGroup& source,
                               const Presentation& source_pres,
                               const GeneratedGroup& target) {
  return quotient_criterion(source, source_pres, target.group(),
                            target.involutions());
}

}  // namespace hypertope
