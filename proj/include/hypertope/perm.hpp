#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace hypertope {

// A permutation of 0..degree-1, stored as its image vector. Products apply
// the left factor first: (a*b)[p] == b[a[p]], matching the right action of
// words on cosets.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint32_t> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (auto v : _images) {
      if (v >= _images.size() || seen[v])
        throw Error("image vector is not a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p._images.resize(degree);
    std::iota(p._images.begin(), p._images.end(), 0);
    return p;
  }

  std::size_t degree() const { return _images.size(); }

  std::uint32_t operator[](std::uint32_t point) const { return _images[point]; }

  const std::vector<std::uint32_t>& images() const { return _images; }

  bool is_identity() const {
    for (std::size_t i = 0; i < _images.size(); ++i)
      if (_images[i] != i) return false;
    return true;
  }

  Permutation operator*(const Permutation& other) const {
    Permutation out;
    out._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i)
      out._images[i] = other._images[_images[i]];
    return out;
  }

  Permutation inverse() const {
    Permutation out;
    out._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i)
      out._images[_images[i]] = static_cast<std::uint32_t>(i);
    return out;
  }

  // Least common multiple of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(_images.size(), false);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      std::uint32_t p = static_cast<std::uint32_t>(i);
      while (!seen[p]) {
        seen[p] = true;
        p = _images[p];
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  bool operator==(const Permutation& other) const {
    return _images == other._images;
  }
  bool operator!=(const Permutation& other) const { return !(*this == other); }

 private:
  std::vector<std::uint32_t> _images;
};

inline std::uint64_t hash_images(const std::vector<std::uint32_t>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t x : v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hypertope
