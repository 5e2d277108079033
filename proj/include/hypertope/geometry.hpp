#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <hypertope/cgroup.hpp>
#include <hypertope/generated_group.hpp>
#include <hypertope/subgroup.hpp>

namespace hypertope {

// The incidence system on the right cosets of three subgroups: an element
// of type i is a coset G_i x, and two elements of different types are
// incident exactly when the cosets intersect.
class CosetGeometry {
 public:
  CosetGeometry(std::shared_ptr<const PermGroup> group,
                std::vector<Subgroup> subgroups)
      : _group(std::move(group)), _subgroups(std::move(subgroups)) {
    if (!_group) throw Error("geometry needs a group");
    if (_subgroups.size() != 3) throw Error("geometry needs exactly 3 types");
    for (const auto& s : _subgroups)
      if (s.parent_ptr() != _group.get()) throw ParentMismatchError();
    build();
  }

  const PermGroup& group() const { return *_group; }
  std::size_t types() const { return 3; }
  const Subgroup& subgroup(std::size_t i) const { return _subgroups[i]; }
  std::size_t size(std::size_t i) const { return _reps[i].size(); }
  element_id representative(std::size_t i, std::uint32_t x) const {
    return _reps[i][x];
  }
  std::uint32_t coset_index(std::size_t i, element_id e) const {
    return _coset_of[i][e];
  }

  // Incidence by product-set membership: cosets G_i x and G_j y intersect
  // exactly when x y^-1 lies in G_i G_j.
  bool incident(std::size_t i, std::uint32_t x, std::size_t j,
                std::uint32_t y) const {
    if (i == j) return x == y;
    if (i > j) {
      std::swap(i, j);
      std::swap(x, y);
    }
    element_id d = _group->mul(_reps[i][x], _group->inv(_reps[j][y]));
    return _pair_product[i + j - 1][d];
  }

 private:
  void build() {
    for (std::size_t i = 0; i < 3; ++i) {
      _coset_of[i].assign(_group->order(), 0xffffffffu);
      for (element_id e = 0; e < _group->order(); ++e) {
        if (_coset_of[i][e] != 0xffffffffu) continue;
        auto idx = static_cast<std::uint32_t>(_reps[i].size());
        _reps[i].push_back(e);
        for (element_id h : _subgroups[i].members())
          _coset_of[i][_group->mul(h, e)] = idx;
      }
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        std::vector<bool> bitmap(_group->order(), false);
        for (element_id e : product_set(_subgroups[i], _subgroups[j]))
          bitmap[e] = true;
        _pair_product[i + j - 1] = std::move(bitmap);
      }
  }

  std::shared_ptr<const PermGroup> _group;
  std::vector<Subgroup> _subgroups;
  std::array<std::vector<element_id>, 3> _reps;
  std::array<std::vector<std::uint32_t>, 3> _coset_of;
  std::array<std::vector<bool>, 3> _pair_product;
};

inline CosetGeometry build_geometry(const GeneratedGroup& g) {
  if (g.rank() != 3) throw Error("geometry needs rank 3");
  return CosetGeometry(g.group_ptr(),
                       {g.parabolic(0), g.parabolic(1), g.parabolic(2)});
}

// Escape hatch for deliberately malformed inputs: any three subgroups.
inline CosetGeometry build_geometry_from_subgroups(
    std::shared_ptr<const PermGroup> group, std::vector<Subgroup> subgroups) {
  return CosetGeometry(std::move(group), std::move(subgroups));
}

// All pairwise-incident type-complete triples, in lexicographic order.
// Enumeration is unconditional: no transitivity assumptions.
inline std::vector<std::array<std::uint32_t, 3>> enumerate_chambers(
    const CosetGeometry& geom) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t x = 0; x < geom.size(0); ++x) {
    std::vector<std::uint32_t> ys, zs;
    for (std::uint32_t y = 0; y < geom.size(1); ++y)
      if (geom.incident(0, x, 1, y)) ys.push_back(y);
    for (std::uint32_t z = 0; z < geom.size(2); ++z)
      if (geom.incident(0, x, 2, z)) zs.push_back(z);
    for (std::uint32_t y : ys)
      for (std::uint32_t z : zs)
        if (geom.incident(1, y, 2, z)) out.push_back({x, y, z});
  }
  return out;
}

inline std::size_t count_chambers(const CosetGeometry& geom) {
  return enumerate_chambers(geom).size();
}

namespace detail {

// First rank-one residue whose element count is not two, if any.
inline std::optional<std::string> thin_violation(const CosetGeometry& geom) {
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k) {
      std::size_t i = 3 - j - k;
      for (std::uint32_t y = 0; y < geom.size(j); ++y)
        for (std::uint32_t z = 0; z < geom.size(k); ++z) {
          if (!geom.incident(j, y, k, z)) continue;
          std::size_t extensions = 0;
          for (std::uint32_t w = 0; w < geom.size(i); ++w)
            if (geom.incident(i, w, j, y) && geom.incident(i, w, k, z))
              ++extensions;
          if (extensions != 2)
            return "flag (" + std::to_string(j) + ":" + std::to_string(y) +
                   ", " + std::to_string(k) + ":" + std::to_string(z) +
                   ") has " + std::to_string(extensions) +
                   " extensions of type " + std::to_string(i);
        }
    }
  return std::nullopt;
}

inline std::optional<std::string> connectivity_violation(
    const CosetGeometry& geom) {
  // The whole incidence graph first.
  std::array<std::size_t, 3> offset{0, geom.size(0),
                                    geom.size(0) + geom.size(1)};
  std::size_t total = offset[2] + geom.size(2);
  if (total > 1) {
    std::vector<bool> seen(total, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t node = queue[head];
      std::size_t i = node >= offset[2] ? 2 : (node >= offset[1] ? 1 : 0);
      auto x = static_cast<std::uint32_t>(node - offset[i]);
      for (std::size_t j = 0; j < 3; ++j) {
        if (j == i) continue;
        for (std::uint32_t y = 0; y < geom.size(j); ++y)
          if (!seen[offset[j] + y] && geom.incident(i, x, j, y)) {
            seen[offset[j] + y] = true;
            queue.push_back(offset[j] + y);
          }
      }
    }
    if (queue.size() != total)
      return "the incidence graph is disconnected (" +
             std::to_string(queue.size()) + " of " + std::to_string(total) +
             " elements reachable)";
  }

  // Rank-2 residues of single elements.
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t j = i == 0 ? 1 : 0;
    std::size_t k = i == 2 ? 1 : 2;
    for (std::uint32_t x = 0; x < geom.size(i); ++x) {
      std::vector<std::uint32_t> js, ks;
      for (std::uint32_t y = 0; y < geom.size(j); ++y)
        if (geom.incident(i, x, j, y)) js.push_back(y);
      for (std::uint32_t z = 0; z < geom.size(k); ++z)
        if (geom.incident(i, x, k, z)) ks.push_back(z);
      std::size_t n = js.size() + ks.size();
      if (n <= 1) continue;
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> queue{0};
      seen[0] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t node = queue[head];
        bool left = node < js.size();
        for (std::size_t other = left ? js.size() : 0,
                         end = left ? n : js.size();
             other < end; ++other) {
          if (seen[other]) continue;
          std::uint32_t a = left ? js[node] : js[other];
          std::uint32_t b = left ? ks[other - js.size()]
                                 : ks[node - js.size()];
          if (geom.incident(j, a, k, b)) {
            seen[other] = true;
            queue.push_back(other);
          }
        }
      }
      if (queue.size() != n)
        return "type-" + std::to_string(i) + " element " + std::to_string(x) +
               " has a disconnected residue";
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Every rank-one residue has exactly two elements.
inline bool is_thin(const CosetGeometry& geom) {
  return !detail::thin_violation(geom).has_value();
}

// The incidence graph and every rank-2 residue are connected.
inline bool is_residually_connected(const CosetGeometry& geom) {
  return !detail::connectivity_violation(geom).has_value();
}

struct RegularActionReport {
  bool transitive = false;
  bool stabilizer_trivial = false;
  std::size_t orbit_size = 0;
  std::size_t stabilizer_order = 0;
};

// Right multiplication on chambers: orbit of the base chamber and the
// order of its stabilizer, computed independently.
inline RegularActionReport regular_action_report(const CosetGeometry& geom) {
  const PermGroup& grp = geom.group();
  auto chambers = enumerate_chambers(geom);
  RegularActionReport r;

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(chambers.size());
  auto key = [](const std::array<std::uint32_t, 3>& c) {
    return (static_cast<std::uint64_t>(c[0]) << 42) |
           (static_cast<std::uint64_t>(c[1]) << 21) |
           static_cast<std::uint64_t>(c[2]);
  };
  for (std::uint32_t i = 0; i < chambers.size(); ++i)
    index.emplace(key(chambers[i]), i);

  // The base chamber is the triple of cosets through the identity, which
  // ascending-order construction always places at index 0.
  std::vector<bool> seen(chambers.size(), false);
  std::vector<std::uint32_t> queue;
  auto base = index.find(key({geom.coset_index(0, 0), geom.coset_index(1, 0),
                              geom.coset_index(2, 0)}));
  if (base == index.end())
    throw std::logic_error("base cosets do not form a chamber");
  seen[base->second] = true;
  queue.push_back(base->second);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto& c = chambers[queue[head]];
    for (std::size_t g = 0; g < grp.rank(); ++g) {
      element_id h = grp.generator_id(g);
      std::array<std::uint32_t, 3> img;
      for (std::size_t i = 0; i < 3; ++i)
        img[i] = geom.coset_index(
            i, grp.mul(geom.representative(i, c[i]), h));
      auto it = index.find(key(img));
      if (it == index.end())
        throw std::logic_error("right multiplication left the chamber set");
      if (!seen[it->second]) {
        seen[it->second] = true;
        queue.push_back(it->second);
      }
    }
  }
  r.orbit_size = queue.size();
  r.transitive = r.orbit_size == chambers.size();

  for (element_id e = 0; e < grp.order(); ++e)
    if (geom.coset_index(0, e) == geom.coset_index(0, 0) &&
        geom.coset_index(1, e) == geom.coset_index(1, 0) &&
        geom.coset_index(2, e) == geom.coset_index(2, 0))
      ++r.stabilizer_order;
  r.stabilizer_trivial = r.stabilizer_order == 1;
  return r;
}

inline bool check_regular_action(const CosetGeometry& geom) {
  auto r = regular_action_report(geom);
  return r.transitive && r.stabilizer_trivial;
}

// Slow cross-check of the incidence predicate: mark every coset pair that
// shares an element by one pass over the group, then compare against the
// product-set test on every pair of elements.
inline bool verify_incidence(const CosetGeometry& geom) {
  const PermGroup& grp = geom.group();
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k) {
      std::vector<char> marked(geom.size(j) * geom.size(k), 0);
      for (element_id e = 0; e < grp.order(); ++e)
        marked[geom.coset_index(j, e) * geom.size(k) +
               geom.coset_index(k, e)] = 1;
      for (std::uint32_t y = 0; y < geom.size(j); ++y)
        for (std::uint32_t z = 0; z < geom.size(k); ++z)
          if (geom.incident(j, y, k, z) !=
              static_cast<bool>(marked[y * geom.size(k) + z]))
            return false;
    }
  return true;
}

// Plain-text edge list of the incidence graph, one "i:x j:y" line per
// incident cross-type pair with i < j.
inline void dump_incidence(const CosetGeometry& geom, std::ostream& os) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (std::uint32_t x = 0; x < geom.size(i); ++x)
        for (std::uint32_t y = 0; y < geom.size(j); ++y)
          if (geom.incident(i, x, j, y))
            os << i << ':' << x << ' ' << j << ':' << y << '\n';
}

struct HypertopeVerdict {
  bool ok = false;
  std::string failing_axiom;  // empty when ok
  std::string detail;         // witness text for the failure
  std::array<std::uint64_t, 3> type{};
  std::array<std::size_t, 3> type_sizes{};
  std::size_t chambers = 0;
  std::string summary;
};

// Full verification ladder for a rank-3 generated group; stops at the
// first failing axiom and names it.
inline HypertopeVerdict hypertope_verdict(const GeneratedGroup& g) {
  if (g.rank() != 3) throw Error("hypertope verdict needs rank 3");
  HypertopeVerdict v;
  v.type = type_orders(g);
  auto fail = [&](const std::string& axiom, const std::string& detail) {
    v.failing_axiom = axiom;
    v.detail = detail;
    v.summary = "fails " + axiom + (detail.empty() ? "" : ": " + detail);
    return v;
  };

  auto rep = check_intersection_property(g);
  if (!rep.is_c_group) {
    const auto& f = rep.failures.front();
    auto render = [](const std::vector<std::size_t>& idx) {
      std::string s;
      for (std::size_t i : idx) s += (s.empty() ? "" : ",") + std::to_string(i);
      return "{" + s + "}";
    };
    return fail("intersection property",
                "spans of " + render(f.left) + " and " + render(f.right) +
                    " share " + f.witness_word + " beyond their meet");
  }

  auto tits = tits_condition(g);
  if (!tits.holds) {
    element_id extra = 0;
    for (element_id e : tits.rhs)
      if (std::find(tits.lhs.begin(), tits.lhs.end(), e) == tits.lhs.end()) {
        extra = e;
        break;
      }
    return fail("flag transitivity",
                "boundary sets differ at " + g.shortest_word(extra));
  }

  auto geom = build_geometry(g);
  for (std::size_t i = 0; i < 3; ++i) v.type_sizes[i] = geom.size(i);

  if (auto t = detail::thin_violation(geom)) return fail("thinness", *t);
  if (auto c = detail::connectivity_violation(geom))
    return fail("residual connectedness", *c);

  v.chambers = count_chambers(geom);
  auto action = regular_action_report(geom);
  if (!action.transitive)
    return fail("regular action",
                "orbit of the base chamber covers " +
                    std::to_string(action.orbit_size) + " of " +
                    std::to_string(v.chambers) + " chambers");
  if (!action.stabilizer_trivial)
    return fail("regular action", "base chamber stabilizer has order " +
                                      std::to_string(action.stabilizer_order));

  v.ok = true;
  v.summary = "regular hypertope of type (" + std::to_string(v.type[0]) +
              "," + std::to_string(v.type[1]) + "," +
              std::to_string(v.type[2]) + ") with " +
              std::to_string(v.chambers) + " chambers";
  return v;
}

}  // namespace hypertope
