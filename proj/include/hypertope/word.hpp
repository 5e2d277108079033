#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace hypertope {

// A letter is a signed, 1-based generator reference: +k is generator k-1,
// -k is its formal inverse. Zero is not a letter.
using letter_type = std::int32_t;

// A word is a flat sequence of letters. Generators are NOT assumed to be
// involutions at this layer; g and g^-1 are distinct letters.
using word_type = std::vector<letter_type>;

inline letter_type make_letter(std::size_t gen_index, bool inverse = false) {
  auto v = static_cast<letter_type>(gen_index) + 1;
  return inverse ? -v : v;
}

inline std::size_t gen_of(letter_type x) {
  return static_cast<std::size_t>(std::abs(x)) - 1;
}

inline bool is_inverse(letter_type x) { return x < 0; }

// Appends a letter, cancelling against the current last letter if they are
// mutually inverse. Keeps a reduced word reduced.
inline void push_reduced(word_type& w, letter_type x) {
  if (!w.empty() && w.back() == -x) {
    w.pop_back();
  } else {
    w.push_back(x);
  }
}

inline word_type free_reduce(const word_type& w) {
  word_type out;
  out.reserve(w.size());
  for (letter_type x : w) push_reduced(out, x);
  return out;
}

inline bool is_reduced(const word_type& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

inline word_type inverse(const word_type& w) {
  word_type out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Product with cancellation at the seam only; exact free reduction when both
// inputs are reduced.
inline word_type concat(const word_type& a, const word_type& b) {
  word_type out = a;
  out.reserve(a.size() + b.size());
  for (letter_type x : b) push_reduced(out, x);
  return out;
}

inline word_type power(const word_type& w, long long k) {
  if (k == 0) return {};
  word_type base = k < 0 ? inverse(w) : w;
  long long reps = k < 0 ? -k : k;
  word_type out;
  for (long long i = 0; i < reps; ++i) out = concat(out, base);
  return out;
}

// x^y = y^-1 x y
inline word_type conjugate(const word_type& x, const word_type& y) {
  return concat(concat(inverse(y), x), y);
}

// [x, y] = x^-1 y^-1 x y
inline word_type commutator(const word_type& x, const word_type& y) {
  return concat(concat(concat(inverse(x), inverse(y)), x), y);
}

// Renders a word using the given generator names, letters joined with '*'
// and inverses written as name^-1. The empty word renders as "1"; the
// result parses back to the same reduced word.
inline std::string render_word(const word_type& w,
                               const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += '*';
    out += names[gen_of(w[i])];
    if (is_inverse(w[i])) out += "^-1";
  }
  return out;
}

}  // namespace hypertope
