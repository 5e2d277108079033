#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace hypertope {

// Closed, compacted coset table for a subgroup H <= G. Coset 0 is the
// subgroup coset H itself. Columns exist for every generator and for its
// formal inverse; the engine never assumes generators are involutions.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t rank, std::vector<std::uint32_t> table,
             std::size_t degree)
      : _rank(rank), _degree(degree), _table(std::move(table)) {}

  std::size_t degree() const { return _degree; }
  std::size_t rank() const { return _rank; }

  std::uint32_t act(std::uint32_t coset, letter_type x) const {
    return _table[coset * 2 * _rank + col_of(x)];
  }

  std::uint32_t act_word(std::uint32_t coset, const word_type& w) const {
    for (letter_type x : w) coset = act(coset, x);
    return coset;
  }

  // Images of every coset under one letter; a permutation of 0..degree-1.
  std::vector<std::uint32_t> column(letter_type x) const {
    std::vector<std::uint32_t> out(_degree);
    for (std::uint32_t c = 0; c < _degree; ++c) out[c] = act(c, x);
    return out;
  }

  // Re-checks the defining properties: generator and inverse columns are
  // mutually inverse, every relator traces a loop at every coset, and every
  // subgroup generator traces a loop at coset 0.
  bool validate(const Presentation& p,
                const std::vector<word_type>& subgroup = {}) const {
    if (p.rank() != _rank) return false;
    for (std::uint32_t c = 0; c < _degree; ++c) {
      for (std::size_t g = 0; g < _rank; ++g) {
        auto x = make_letter(g);
        std::uint32_t d = act(c, x);
        if (d >= _degree || act(d, -x) != c) return false;
      }
    }
    for (std::uint32_t c = 0; c < _degree; ++c)
      for (const auto& r : p.relators)
        if (act_word(c, r) != c) return false;
    for (const auto& w : subgroup)
      if (act_word(0, w) != 0) return false;
    return true;
  }

  static std::size_t col_of(letter_type x) {
    return 2 * gen_of(x) + (is_inverse(x) ? 1 : 0);
  }

 private:
  std::size_t _rank = 0;
  std::size_t _degree = 0;
  std::vector<std::uint32_t> _table;
};

constexpr std::size_t kDefaultCosetCapacity = std::size_t{1} << 20;

namespace detail {

// HLT-style enumerator: cosets are defined while scanning relators in order,
// coincidences are processed immediately with a union-find over coset ids
// (the smaller id always survives, so numbering is deterministic), and full
// passes repeat until one completes without defining or merging anything.
// The final clean pass doubles as a built-in verification scan.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, const std::vector<word_type>& subgroup,
                  std::size_t capacity)
      : _rank(p.rank()), _capacity(capacity), _subgroup(subgroup) {
    for (const auto& r : p.relators) _relators.push_back(free_reduce(r));
    new_coset();
  }

  CosetTable run() {
    for (;;) {
      std::size_t defined = _defined;
      std::size_t merges = _merges;
      sweep();
      if (_defined == defined && _merges == merges) break;
    }
    return compact();
  }

 private:
  static constexpr std::uint32_t kUndef = 0xffffffffu;

  std::size_t ncols() const { return 2 * _rank; }
  std::uint32_t* row(std::uint32_t c) { return _table.data() + c * ncols(); }

  static std::size_t inv_col(std::size_t col) { return col ^ 1u; }

  std::uint32_t new_coset() {
    if (_defined >= _capacity) throw CapacityExceeded(_capacity);
    ++_defined;
    std::uint32_t c = static_cast<std::uint32_t>(_parent.size());
    _parent.push_back(c);
    _table.resize(_table.size() + ncols(), kUndef);
    return c;
  }

  bool live(std::uint32_t c) const { return _parent[c] == c; }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (_parent[r] != r) r = _parent[r];
    while (_parent[c] != r) {
      std::uint32_t next = _parent[c];
      _parent[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    _parent[b] = a;
    ++_merges;
    _queue.push_back(b);
  }

  // Transfers rows of dead cosets onto their representatives, merging
  // further cosets forced equal along the way.
  void coincidence(std::uint32_t a, std::uint32_t b) {
    merge(a, b);
    while (!_queue.empty()) {
      std::uint32_t dead = _queue.back();
      _queue.pop_back();
      for (std::size_t x = 0; x < ncols(); ++x) {
        std::uint32_t d = row(dead)[x];
        if (d == kUndef) continue;
        row(d)[inv_col(x)] = kUndef;
        std::uint32_t mu = rep(dead);
        std::uint32_t nu = rep(d);
        if (row(mu)[x] != kUndef) {
          merge(nu, row(mu)[x]);
        } else if (row(nu)[inv_col(x)] != kUndef) {
          merge(mu, row(nu)[inv_col(x)]);
        } else {
          row(mu)[x] = nu;
          row(nu)[inv_col(x)] = mu;
        }
      }
    }
  }

  // Scans w from coset c forward and backward, defining cosets to bridge a
  // gap of two or more, recording the deduction for a gap of one, and
  // processing the coincidence if the two ends disagree.
  void scan_and_fill(std::uint32_t c, const word_type& w) {
    std::size_t i = 0;
    std::size_t j = w.size();
    std::uint32_t f = c;
    std::uint32_t b = c;
    for (;;) {
      while (i < j) {
        std::uint32_t next = row(f)[CosetTable::col_of(w[i])];
        if (next == kUndef) break;
        f = next;
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i) {
        std::uint32_t next = row(b)[inv_col(CosetTable::col_of(w[j - 1]))];
        if (next == kUndef) break;
        b = next;
        --j;
      }
      if (j == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      std::size_t x = CosetTable::col_of(w[i]);
      if (j == i + 1) {
        row(f)[x] = b;
        row(b)[inv_col(x)] = f;
        return;
      }
      std::uint32_t n = new_coset();
      row(f)[x] = n;
      row(n)[inv_col(x)] = f;
    }
  }

  void sweep() {
    for (std::uint32_t c = 0; c < _parent.size(); ++c) {
      if (!live(c)) continue;
      if (c == 0)
        for (const auto& w : _subgroup) {
          scan_and_fill(0, w);
        }
      for (const auto& r : _relators) {
        scan_and_fill(c, r);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (std::size_t x = 0; x < ncols(); ++x) {
        if (row(c)[x] != kUndef) continue;
        std::uint32_t n = new_coset();
        row(c)[x] = n;
        row(n)[inv_col(x)] = c;
      }
    }
  }

  CosetTable compact() {
    std::vector<std::uint32_t> renumber(_parent.size(), kUndef);
    std::uint32_t degree = 0;
    for (std::uint32_t c = 0; c < _parent.size(); ++c)
      if (live(c)) renumber[c] = degree++;
    std::vector<std::uint32_t> out(static_cast<std::size_t>(degree) * ncols());
    for (std::uint32_t c = 0; c < _parent.size(); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < ncols(); ++x)
        out[renumber[c] * ncols() + x] = renumber[rep(row(c)[x])];
    }
    return CosetTable(_rank, std::move(out), degree);
  }

  std::size_t _rank;
  std::size_t _capacity;
  std::vector<word_type> _subgroup;
  std::vector<word_type> _relators;
  std::vector<std::uint32_t> _table;
  std::vector<std::uint32_t> _parent;
  std::vector<std::uint32_t> _queue;
  std::size_t _defined = 0;
  std::size_t _merges = 0;
};

}  // namespace detail

// Enumerates the cosets of <subgroup> in the group presented by p. Returns
// the closed table; throws CapacityExceeded if more than `capacity` cosets
// would ever be defined. Identical inputs give bit-identical tables.
inline CosetTable enumerate_cosets(const Presentation& p,
                                   const std::vector<word_type>& subgroup = {},
                                   std::size_t capacity = kDefaultCosetCapacity) {
  p.validate();
  for (const auto& w : subgroup)
    for (letter_type x : w)
      if (x == 0 || gen_of(x) >= p.rank())
        throw Error("subgroup word letter out of range");
  return detail::CosetEnumerator(p, subgroup, capacity).run();
}

inline std::size_t group_order(const Presentation& p,
                               std::size_t capacity = kDefaultCosetCapacity) {
  return enumerate_cosets(p, {}, capacity).degree();
}

}  // namespace hypertope
