#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <hypertope/presentation.hpp>
#include <hypertope/relator_parser.hpp>

namespace hypertope {

// Presentation files hold one directive per line:
//
//   gens: r0 r1 r2      generator names, exactly once, before everything else
//   rel: (r0*r1)^4      one relator in the expression grammar
//   param: n 10         named integer recorded alongside the presentation
//
// Blank lines and lines whose first nonblank character is '#' are skipped.

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

inline Presentation read_presentation(std::istream& in) {
  Presentation p;
  bool have_gens = false;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = detail::trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t colon = s.find(':');
    if (colon == std::string::npos) fail("expected 'directive: content'");
    std::string key = detail::trim(s.substr(0, colon));
    std::string rest = detail::trim(s.substr(colon + 1));
    if (key == "gens") {
      if (have_gens) fail("duplicate gens line");
      std::istringstream names(rest);
      std::string name;
      while (names >> name) p.generator_names.push_back(name);
      if (p.generator_names.empty()) fail("gens line names no generators");
      have_gens = true;
    } else if (key == "rel") {
      if (!have_gens) fail("rel line before gens line");
      try {
        p.add_relator(parse_word(rest, p));
      } catch (const ParseError& e) {
        throw Error("line " + std::to_string(lineno) + ": " + e.what());
      }
    } else if (key == "param") {
      if (!have_gens) fail("param line before gens line");
      std::istringstream kv(rest);
      std::string name;
      long long value = 0;
      std::string extra;
      if (!(kv >> name >> value) || (kv >> extra))
        fail("expected 'param: name integer'");
      if (p.params.count(name)) fail("duplicate parameter '" + name + "'");
      p.params[name] = value;
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (!have_gens) throw Error("no gens line in presentation input");
  p.validate();
  return p;
}

inline Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_presentation(in);
}

// Flat rendering of a stored (freely reduced) word, with runs of one
// letter folded into powers. Parses back to the same word.
inline std::string render_word(const word_type& w, const Presentation& p) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    letter_type x = w[i];
    std::size_t j = i;
    while (j < w.size() && w[j] == x) ++j;
    auto run = j - i;
    if (!out.empty()) out += '*';
    out += p.generator_names[gen_of(x)];
    if (x < 0)
      out += "^-" + std::to_string(run);
    else if (run > 1)
      out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

inline void write_presentation(const Presentation& p, std::ostream& out) {
  out << "gens:";
  for (const auto& name : p.generator_names) out << ' ' << name;
  out << '\n';
  for (const auto& [name, value] : p.params)
    out << "param: " << name << ' ' << value << '\n';
  for (const auto& r : p.relators) out << "rel: " << render_word(r, p) << '\n';
}

}  // namespace hypertope
