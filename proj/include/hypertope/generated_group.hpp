#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <hypertope/perm_group.hpp>
#include <hypertope/presentation.hpp>
#include <hypertope/subgroup.hpp>

namespace hypertope {

// A group together with an ordered tuple of distinguished involutions that
// generate it: the raw material for C-group checks and coset geometries.
class GeneratedGroup {
 public:
  GeneratedGroup(std::shared_ptr<const PermGroup> group,
                 std::vector<element_id> involutions,
                 std::vector<std::string> names = {})
      : _group(std::move(group)),
        _invs(std::move(involutions)),
        _names(std::move(names)) {
    if (!_group) throw Error("generated group needs a group");
    if (_invs.empty()) throw Error("generated group needs involutions");
    if (_names.empty())
      for (std::size_t i = 0; i < _invs.size(); ++i)
        _names.push_back("s" + std::to_string(i));
    if (_names.size() != _invs.size())
      throw Error("involution name count does not match");
    for (std::size_t i = 0; i < _invs.size(); ++i)
      if (_group->element_order(_invs[i]) != 2)
        throw Error("distinguished generator " + _names[i] +
                    " does not have order 2");
    build_bfs();
    std::size_t reached = 0;
    for (int v : _via)
      if (v != kUnreached) ++reached;
    if (reached != _group->order())
      throw Error("distinguished involutions do not generate the group");
  }

  const PermGroup& group() const { return *_group; }
  std::shared_ptr<const PermGroup> group_ptr() const { return _group; }
  std::size_t rank() const { return _invs.size(); }
  element_id involution(std::size_t i) const { return _invs[i]; }
  const std::vector<element_id>& involutions() const { return _invs; }
  const std::vector<std::string>& names() const { return _names; }

  // Closure of the involutions selected by index.
  Subgroup span(const std::vector<std::size_t>& indices) const {
    std::vector<element_id> gens;
    gens.reserve(indices.size());
    for (std::size_t i : indices) gens.push_back(_invs.at(i));
    return closure(*_group, gens);
  }

  // The subgroup generated by every involution except the given one.
  Subgroup parabolic(std::size_t skip) const {
    std::vector<element_id> gens;
    for (std::size_t i = 0; i < rank(); ++i)
      if (i != skip) gens.push_back(_invs[i]);
    return closure(*_group, gens);
  }

  // Shortest expression of an element as a product of the distinguished
  // involutions, found by breadth-first search; identity renders as "1".
  std::string shortest_word(element_id e) const {
    if (e == 0) return "1";
    if (_via[e] == kUnreached)
      throw Error("element is outside the span of the involutions");
    std::vector<std::size_t> letters;
    for (element_id cur = e; cur != 0; cur = _parent[cur])
      letters.push_back(static_cast<std::size_t>(_via[cur]));
    std::string out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (!out.empty()) out += '*';
      out += _names[*it];
    }
    return out;
  }

 private:
  static constexpr int kUnreached = -1;

  void build_bfs() {
    _parent.assign(_group->order(), 0);
    _via.assign(_group->order(), kUnreached);
    _via[0] = static_cast<int>(rank());  // root sentinel, never dereferenced
    std::vector<element_id> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      element_id cur = queue[head];
      for (std::size_t i = 0; i < rank(); ++i) {
        element_id next = _group->mul(cur, _invs[i]);
        if (_via[next] == kUnreached) {
          _via[next] = static_cast<int>(i);
          _parent[next] = cur;
          queue.push_back(next);
        }
      }
    }
  }

  std::shared_ptr<const PermGroup> _group;
  std::vector<element_id> _invs;
  std::vector<std::string> _names;
  std::vector<element_id> _parent;
  std::vector<int> _via;
};

// Concretize a presentation: enumerate its cosets, take the regular
// representation, and mark the generators as the distinguished involutions.
inline GeneratedGroup concretize(
    const Presentation& p, std::size_t capacity = kDefaultCosetCapacity,
    std::size_t element_ceiling = kDefaultElementCeiling) {
  auto g = std::make_shared<PermGroup>(
      regular_representation(p, capacity, element_ceiling));
  std::vector<element_id> invs;
  invs.reserve(p.rank());
  for (std::size_t i = 0; i < p.rank(); ++i) invs.push_back(g->generator_id(i));
  return GeneratedGroup(std::move(g), std::move(invs), p.generator_names);
}

}  // namespace hypertope
