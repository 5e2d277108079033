#pragma once

#include <string>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace hypertope {

// Builders for the presentation families the toolkit studies. All of them
// are on three generators r0, r1, r2.
//
//   M1(b), M2(b)        two-parameter-b families with dihedral-like shape
//   L1(s), L2(t), L3(l) rank-2 degenerations (one generator is trivial)
//   G(n,s,t,l)          the main 2-group family, |G| = 2^n
//   G1, G2, G3          successive quotients of G used by the deep checks
//
// Parameter constraints are enforced here and reported by name.

namespace detail {

inline Presentation three_gen_presentation() {
  Presentation p;
  p.generator_names = {"r0", "r1", "r2"};
  return p;
}

inline word_type pair_word(std::size_t i, std::size_t j) {
  return {make_letter(i), make_letter(j)};
}

inline long long pow2(long long e) {
  if (e < 0 || e > 30) throw FamilyParamError("exponent 2^" + std::to_string(e) +
                                              " out of range");
  return 1LL << e;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw FamilyParamError(what);
}

// The tail relator distinguishing the even and odd branches of G/G1/G2/G3:
// a power of [(r0 r1)^2, r2] when n-s-t-l is even, of [(r0 r1)^2, (r1 r2)^2]
// when it is odd.
inline word_type parity_relator(long long n, long long s, long long t,
                                long long l) {
  long long m = n - s - t - l;
  word_type sq01 = power(pair_word(0, 1), 2);
  if (m % 2 == 0)
    return power(commutator(sq01, {make_letter(2)}), pow2(m / 2));
  return power(commutator(sq01, power(pair_word(1, 2), 2)), pow2((m - 1) / 2));
}

inline void check_main_params(long long n, long long s, long long t,
                              long long l) {
  require(n >= 10, "n >= 10 required");
  require(s >= 2, "s >= 2 required");
  require(t >= 2, "t >= 2 required");
  require(l >= 1, "l >= 1 required");
  require(n >= s + t + l, "n >= s + t + l required");
}

}  // namespace detail

inline Presentation m1_presentation(long long b) {
  detail::require(b >= 2, "b >= 2 required");
  Presentation p = detail::three_gen_presentation();
  p.params["b"] = b;
  p.add_relator(power({make_letter(0)}, 2));
  p.add_relator(power({make_letter(1)}, 2));
  p.add_relator(power({make_letter(2)}, 2));
  p.add_relator(power(detail::pair_word(0, 1), 4));
  p.add_relator(power(detail::pair_word(1, 2), 4));
  p.add_relator(power(detail::pair_word(0, 2), 2));
  p.add_relator(power({make_letter(2), make_letter(1), make_letter(0)}, 2 * b));
  return p;
}

inline Presentation m2_presentation(long long b) {
  detail::require(b >= 2, "b >= 2 required");
  Presentation p = detail::three_gen_presentation();
  p.params["b"] = b;
  p.add_relator(power({make_letter(0)}, 2));
  p.add_relator(power({make_letter(1)}, 2));
  p.add_relator(power({make_letter(2)}, 2));
  p.add_relator(power(detail::pair_word(0, 1), 4));
  p.add_relator(power(detail::pair_word(1, 2), 4));
  p.add_relator(power(detail::pair_word(0, 2), 2));
  p.add_relator(power(
      {make_letter(1), make_letter(2), make_letter(1), make_letter(0)}, b));
  return p;
}

inline Presentation l1_presentation(long long s) {
  detail::require(s >= 2, "s >= 2 required");
  Presentation p = detail::three_gen_presentation();
  p.params["s"] = s;
  p.add_relator(power({make_letter(0)}, 2));
  p.add_relator(power({make_letter(1)}, 2));
  p.add_relator({make_letter(2)});
  p.add_relator(power(detail::pair_word(0, 1), detail::pow2(s)));
  return p;
}

inline Presentation l2_presentation(long long t) {
  detail::require(t >= 2, "t >= 2 required");
  Presentation p = detail::three_gen_presentation();
  p.params["t"] = t;
  p.add_relator({make_letter(0)});
  p.add_relator(power({make_letter(1)}, 2));
  p.add_relator(power({make_letter(2)}, 2));
  p.add_relator(power(detail::pair_word(1, 2), detail::pow2(t)));
  return p;
}

inline Presentation l3_presentation(long long l) {
  detail::require(l >= 1, "l >= 1 required");
  Presentation p = detail::three_gen_presentation();
  p.params["l"] = l;
  p.add_relator(power({make_letter(0)}, 2));
  p.add_relator({make_letter(1)});
  p.add_relator(power({make_letter(2)}, 2));
  p.add_relator(power(detail::pair_word(0, 2), detail::pow2(l)));
  return p;
}

namespace detail {

inline Presentation main_family_base(long long n, long long s, long long t,
                                     long long l) {
  check_main_params(n, s, t, l);
  Presentation p = three_gen_presentation();
  p.params["n"] = n;
  p.params["s"] = s;
  p.params["t"] = t;
  p.params["l"] = l;
  p.add_relator(power({make_letter(0)}, 2));
  p.add_relator(power({make_letter(1)}, 2));
  p.add_relator(power({make_letter(2)}, 2));
  return p;
}

}  // namespace detail

inline Presentation g_presentation(long long n, long long s, long long t,
                                   long long l) {
  Presentation p = detail::main_family_base(n, s, t, l);
  p.add_relator(power(detail::pair_word(0, 1), detail::pow2(s)));
  p.add_relator(power(detail::pair_word(1, 2), detail::pow2(t)));
  p.add_relator(power(detail::pair_word(0, 2), detail::pow2(l)));
  p.add_relator(commutator(power(detail::pair_word(0, 1), 4), {make_letter(2)}));
  p.add_relator(commutator({make_letter(0)}, power(detail::pair_word(1, 2), 4)));
  p.add_relator(commutator(power(detail::pair_word(0, 2), 2), {make_letter(1)}));
  p.add_relator(detail::parity_relator(n, s, t, l));
  return p;
}

inline Presentation g1_presentation(long long n, long long s, long long t,
                                    long long l) {
  Presentation p = detail::main_family_base(n, s, t, l);
  p.add_relator(power(detail::pair_word(0, 1), detail::pow2(s)));
  p.add_relator(power(detail::pair_word(1, 2), detail::pow2(t)));
  p.add_relator(power(detail::pair_word(0, 2), 2));
  p.add_relator(commutator(power(detail::pair_word(0, 1), 4), {make_letter(2)}));
  p.add_relator(commutator({make_letter(0)}, power(detail::pair_word(1, 2), 4)));
  p.add_relator(detail::parity_relator(n, s, t, l));
  return p;
}

inline Presentation g2_presentation(long long n, long long s, long long t,
                                    long long l) {
  Presentation p = detail::main_family_base(n, s, t, l);
  p.add_relator(power(detail::pair_word(0, 1), 4));
  p.add_relator(power(detail::pair_word(1, 2), detail::pow2(t)));
  p.add_relator(power(detail::pair_word(0, 2), 2));
  p.add_relator(commutator({make_letter(0)}, power(detail::pair_word(1, 2), 4)));
  p.add_relator(detail::parity_relator(n, s, t, l));
  return p;
}

inline Presentation g3_presentation(long long n, long long s, long long t,
                                    long long l) {
  Presentation p = detail::main_family_base(n, s, t, l);
  p.add_relator(power(detail::pair_word(0, 1), 4));
  p.add_relator(power(detail::pair_word(1, 2), 4));
  p.add_relator(power(detail::pair_word(0, 2), 2));
  p.add_relator(detail::parity_relator(n, s, t, l));
  return p;
}

// Dispatcher keyed by family tag, with parameters by name. Unknown tags and
// missing parameters raise FamilyParamError.
inline Presentation build_family_presentation(
    const std::string& kind, const std::map<std::string, long long>& params) {
  auto get = [&](const char* name) {
    auto it = params.find(name);
    if (it == params.end())
      throw FamilyParamError("family " + kind + " needs parameter " + name);
    return it->second;
  };
  if (kind == "M1") return m1_presentation(get("b"));
  if (kind == "M2") return m2_presentation(get("b"));
  if (kind == "L1") return l1_presentation(get("s"));
  if (kind == "L2") return l2_presentation(get("t"));
  if (kind == "L3") return l3_presentation(get("l"));
  if (kind == "G") return g_presentation(get("n"), get("s"), get("t"), get("l"));
  if (kind == "G1")
    return g1_presentation(get("n"), get("s"), get("t"), get("l"));
  if (kind == "G2")
    return g2_presentation(get("n"), get("s"), get("t"), get("l"));
  if (kind == "G3")
    return g3_presentation(get("n"), get("s"), get("t"), get("l"));
  throw FamilyParamError("unknown family '" + kind + "'");
}

}  // namespace hypertope
