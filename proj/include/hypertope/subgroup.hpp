#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "perm_group.hpp"

namespace hypertope {

// A subgroup of a PermGroup, stored as the sorted list of member ids plus a
// membership bitmap over the parent. Derived subgroups (intersections,
// products that happen to be closed) may have no recorded generators.
class Subgroup {
 public:
  Subgroup(const PermGroup* parent, std::vector<element_id> members,
           std::vector<element_id> generator_ids)
      : _parent(parent),
        _members(std::move(members)),
        _generator_ids(std::move(generator_ids)),
        _bitmap(parent->order(), false) {
    for (element_id e : _members) _bitmap[e] = true;
  }

  const PermGroup& parent() const { return *_parent; }
  const PermGroup* parent_ptr() const { return _parent; }
  std::size_t order() const { return _members.size(); }
  const std::vector<element_id>& members() const { return _members; }
  const std::vector<element_id>& generator_ids() const { return _generator_ids; }
  bool contains(element_id e) const { return _bitmap[e]; }
  bool is_trivial() const { return _members.size() == 1; }

  // Generator ids if recorded, otherwise all members; both generate.
  const std::vector<element_id>& generating_ids() const {
    return _generator_ids.empty() ? _members : _generator_ids;
  }

 private:
  const PermGroup* _parent;
  std::vector<element_id> _members;
  std::vector<element_id> _generator_ids;
  std::vector<bool> _bitmap;
};

// Closure of a set of elements under multiplication, by breadth-first
// search from the identity.
inline Subgroup closure(const PermGroup& g,
                        const std::vector<element_id>& generator_ids) {
  std::vector<bool> seen(g.order(), false);
  std::vector<element_id> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (element_id s : generator_ids) {
      element_id f = g.mul(queue[head], s);
      if (!seen[f]) {
        seen[f] = true;
        queue.push_back(f);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return Subgroup(&g, std::move(queue), generator_ids);
}

inline Subgroup closure_of_words(const PermGroup& g,
                                 const std::vector<word_type>& words) {
  std::vector<element_id> ids;
  ids.reserve(words.size());
  for (const auto& w : words) ids.push_back(g.eval_word(w));
  return closure(g, ids);
}

inline Subgroup trivial_subgroup(const PermGroup& g) {
  return closure(g, {});
}

inline Subgroup whole_group(const PermGroup& g) {
  std::vector<element_id> gens(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) gens[i] = g.generator_id(i);
  return closure(g, gens);
}

inline void check_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent_ptr() != b.parent_ptr()) throw ParentMismatchError();
}

// Intersection of two subgroups of the same parent; closed automatically.
inline Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  check_same_parent(a, b);
  std::vector<element_id> out;
  for (element_id e : a.members())
    if (b.contains(e)) out.push_back(e);
  return Subgroup(a.parent_ptr(), std::move(out), {});
}

// Whether s^g stays in S for every recorded generator s of S and every
// generator g of the whole group; equivalent to normality in a finite group.
inline bool is_normal(const PermGroup& g, const Subgroup& s) {
  for (std::size_t i = 0; i < g.rank(); ++i) {
    element_id gi = g.generator_id(i);
    for (element_id m : s.generating_ids())
      if (!s.contains(g.conjugate(m, gi))) return false;
  }
  return true;
}

// Whether every generating element of A commutes with every one of B.
inline bool commute_check(const Subgroup& a, const Subgroup& b) {
  check_same_parent(a, b);
  for (element_id x : a.generating_ids())
    for (element_id y : b.generating_ids())
      if (a.parent().mul(x, y) != a.parent().mul(y, x)) return false;
  return true;
}

// The set {x*y : x in A, y in B} as sorted ids; a subgroup only when one
// factor normalizes the other, so the result is returned as a plain set.
inline std::vector<element_id> product_set(const PermGroup& g,
                                           const std::vector<element_id>& a,
                                           const std::vector<element_id>& b) {
  std::vector<bool> seen(g.order(), false);
  std::vector<element_id> out;
  for (element_id x : a)
    for (element_id y : b) {
      element_id p = g.mul(x, y);
      if (!seen[p]) {
        seen[p] = true;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<element_id> product_set(const Subgroup& a,
                                           const Subgroup& b) {
  check_same_parent(a, b);
  return product_set(a.parent(), a.members(), b.members());
}

struct DirectProductWitness {
  bool ok = false;
  std::size_t product_order = 0;
  std::vector<element_id> product;  // sorted ids of the product set
  std::string failure;              // empty when ok
};

// Certifies that the given subgroups form an internal direct product:
// pairwise commuting, each factor meeting the closure of the others
// trivially, and the product set as large as the order product.
inline DirectProductWitness direct_product_witness(
    const PermGroup& g, const std::vector<Subgroup>& parts) {
  DirectProductWitness w;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!commute_check(parts[i], parts[j])) {
        w.failure = "factors " + std::to_string(i) + " and " +
                    std::to_string(j) + " do not commute";
        return w;
      }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<element_id> others;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i)
        for (element_id e : parts[j].generating_ids()) others.push_back(e);
    Subgroup rest = closure(g, others);
    if (subgroup_intersection(parts[i], rest).order() != 1) {
      w.failure = "factor " + std::to_string(i) +
                  " meets the span of the others nontrivially";
      return w;
    }
  }
  std::size_t expected = 1;
  std::vector<element_id> prod{0};
  for (const auto& part : parts) {
    expected *= part.order();
    prod = product_set(g, prod, part.members());
  }
  w.product = std::move(prod);
  w.product_order = w.product.size();
  if (w.product_order != expected) {
    w.failure = "product set has size " + std::to_string(w.product_order) +
                ", expected " + std::to_string(expected);
    return w;
  }
  w.ok = true;
  return w;
}

struct FrattiniReport {
  Subgroup subgroup;
  std::size_t rank = 0;
};

// Frattini subgroup of a finite 2-group as the closure of all squares, and
// the minimal generator count it certifies. The power-of-two order check is
// a complete 2-group test for finite groups.
inline FrattiniReport frattini_rank(const PermGroup& g) {
  std::size_t n = g.order();
  if ((n & (n - 1)) != 0)
    throw NotA2GroupError("group order " + std::to_string(n) +
                          " is not a power of 2");
  std::vector<bool> seen(n, false);
  std::vector<element_id> squares;
  for (element_id e = 0; e < n; ++e) {
    element_id sq = g.mul(e, e);
    if (!seen[sq]) {
      seen[sq] = true;
      squares.push_back(sq);
    }
  }
  FrattiniReport r{closure(g, squares), 0};
  std::size_t index = n / r.subgroup.order();
  while (index > 1) {
    index >>= 1;
    ++r.rank;
  }
  return r;
}

}  // namespace hypertope
