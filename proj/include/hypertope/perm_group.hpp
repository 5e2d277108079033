#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "coset_enumeration.hpp"
#include "errors.hpp"
#include "perm.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace hypertope {

constexpr std::size_t kDefaultElementCeiling = std::size_t{1} << 14;

using element_id = std::uint32_t;
constexpr element_id kNoElement = 0xffffffffu;

// A finite permutation group given by generators. The full element table is
// built lazily by breadth-first closure over right multiplication, so
// element identifiers are stable: the identity is 0 and ids increase in
// discovery order. Operations that need the table fail fast once the
// configured ceiling is passed.
class PermGroup {
 public:
  PermGroup(std::vector<Permutation> generators,
            std::vector<std::string> generator_names = {},
            std::size_t element_ceiling = kDefaultElementCeiling)
      : _generators(std::move(generators)),
        _names(std::move(generator_names)),
        _ceiling(element_ceiling) {
    if (_generators.empty()) throw Error("permutation group needs generators");
    _degree = _generators[0].degree();
    if (_degree == 0) throw Error("degree must be positive");
    for (const auto& g : _generators)
      if (g.degree() != _degree)
        throw Error("generator degrees do not match");
    if (_names.empty())
      for (std::size_t i = 0; i < _generators.size(); ++i)
        _names.push_back("g" + std::to_string(i));
    if (_names.size() != _generators.size())
      throw Error("generator name count does not match");
  }

  std::size_t degree() const { return _degree; }
  std::size_t rank() const { return _generators.size(); }
  std::size_t element_ceiling() const { return _ceiling; }
  const Permutation& generator(std::size_t i) const { return _generators[i]; }
  const std::vector<std::string>& generator_names() const { return _names; }

  std::size_t order() const {
    ensure_table();
    return _elements.size();
  }

  const Permutation& element(element_id e) const {
    ensure_table();
    return _elements[e];
  }

  element_id generator_id(std::size_t i) const {
    ensure_table();
    return _generator_ids[i];
  }

  // Identifier of a permutation, which must belong to the group.
  element_id id_of(const Permutation& q) const {
    ensure_table();
    element_id e = find(q);
    if (e == kNoElement) throw Error("permutation is not a group element");
    return e;
  }

  bool contains(const Permutation& q) const {
    if (q.degree() != _degree) return false;
    ensure_table();
    return find(q) != kNoElement;
  }

  // Product a*b by id (apply a, then b).
  element_id mul(element_id a, element_id b) const {
    ensure_table();
    const auto [off, len] = _word_span[b];
    for (std::uint32_t i = 0; i < len; ++i)
      a = _rmul[a * 2 * rank() + 2 * _word_arena[off + i]];
    return a;
  }

  element_id inv(element_id a) const {
    ensure_table();
    const auto [off, len] = _word_span[a];
    element_id x = 0;
    for (std::uint32_t i = len; i > 0; --i)
      x = _rmul[x * 2 * rank() + 2 * _word_arena[off + i - 1] + 1];
    return x;
  }

  element_id conjugate(element_id a, element_id g) const {
    return mul(mul(inv(g), a), g);
  }

  element_id commutator_id(element_id a, element_id b) const {
    return mul(mul(mul(inv(a), inv(b)), a), b);
  }

  // Image of an element under one signed generator letter, by id.
  element_id apply_letter(element_id a, letter_type x) const {
    ensure_table();
    return _rmul[a * 2 * rank() + 2 * gen_of(x) + (is_inverse(x) ? 1 : 0)];
  }

  element_id eval_word(const word_type& w) const {
    element_id x = 0;
    for (letter_type l : w) x = apply_letter(x, l);
    return x;
  }

  std::uint64_t element_order(element_id e) const {
    return element(e).order();
  }

  // Shortest word in the generators reaching e, from the closure tree;
  // ties are broken by generator order, so results are reproducible.
  word_type word_of(element_id e) const {
    ensure_table();
    const auto [off, len] = _word_span[e];
    word_type w(len);
    for (std::uint32_t i = 0; i < len; ++i)
      w[i] = make_letter(_word_arena[off + i]);
    return w;
  }

  std::string render_element(element_id e) const {
    return render_word(word_of(e), _names);
  }

 private:
  void ensure_table() const {
    if (!_elements.empty()) return;
    try {
      build_table();
    } catch (...) {
      _elements.clear();
      _buckets.clear();
      _word_span.clear();
      _word_arena.clear();
      _rmul.clear();
      _rmul_partial.clear();
      _generator_ids.clear();
      throw;
    }
  }

  void build_table() const {
    _elements.push_back(Permutation::identity(_degree));
    _word_span.push_back({0, 0});
    _buckets[hash_images(_elements[0].images())].push_back(0);
    for (element_id e = 0; e < _elements.size(); ++e) {
      for (std::size_t g = 0; g < rank(); ++g) {
        Permutation q = _elements[e] * _generators[g];
        element_id f = find(q);
        if (f == kNoElement) {
          if (_elements.size() >= _ceiling) throw ElementCeilingExceeded(_ceiling);
          f = static_cast<element_id>(_elements.size());
          _buckets[hash_images(q.images())].push_back(f);
          _elements.push_back(std::move(q));
          auto [poff, plen] = _word_span[e];
          std::uint32_t off = static_cast<std::uint32_t>(_word_arena.size());
          for (std::uint32_t i = 0; i < plen; ++i)
            _word_arena.push_back(_word_arena[poff + i]);
          _word_arena.push_back(static_cast<std::uint8_t>(g));
          _word_span.push_back({off, plen + 1});
        }
        _rmul_partial.push_back(f);
      }
    }
    // Lay out rmul with generator and inverse columns interleaved.
    _rmul.assign(_elements.size() * 2 * rank(), kNoElement);
    for (element_id e = 0; e < _elements.size(); ++e)
      for (std::size_t g = 0; g < rank(); ++g) {
        element_id f = _rmul_partial[e * rank() + g];
        _rmul[e * 2 * rank() + 2 * g] = f;
        _rmul[f * 2 * rank() + 2 * g + 1] = e;
      }
    _rmul_partial.clear();
    _rmul_partial.shrink_to_fit();
    _generator_ids.resize(rank());
    for (std::size_t g = 0; g < rank(); ++g)
      _generator_ids[g] = _rmul[2 * g];
  }

  element_id find(const Permutation& q) const {
    auto it = _buckets.find(hash_images(q.images()));
    if (it == _buckets.end()) return kNoElement;
    for (element_id e : it->second)
      if (_elements[e] == q) return e;
    return kNoElement;
  }

  std::vector<Permutation> _generators;
  std::vector<std::string> _names;
  std::size_t _ceiling;
  std::size_t _degree = 0;

  mutable std::vector<Permutation> _elements;
  mutable std::unordered_map<std::uint64_t, std::vector<element_id>> _buckets;
  mutable std::vector<std::pair<std::uint32_t, std::uint32_t>> _word_span;
  mutable std::vector<std::uint8_t> _word_arena;
  mutable std::vector<element_id> _rmul;
  mutable std::vector<element_id> _rmul_partial;
  mutable std::vector<element_id> _generator_ids;
};

// The group concretized on the cosets of the trivial subgroup: degree equals
// the group order and the generator columns of the table are the generators.
inline PermGroup regular_representation(
    const Presentation& p, std::size_t capacity = kDefaultCosetCapacity,
    std::size_t element_ceiling = kDefaultElementCeiling) {
  CosetTable t = enumerate_cosets(p, {}, capacity);
  std::vector<Permutation> gens;
  gens.reserve(p.rank());
  for (std::size_t i = 0; i < p.rank(); ++i)
    gens.emplace_back(t.column(make_letter(i)));
  return PermGroup(std::move(gens), p.generator_names, element_ceiling);
}

}  // namespace hypertope
