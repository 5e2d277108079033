#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace hypertope {

// A finite presentation <generators | relators>, plus the named integer
// parameters it was built from (empty for hand-written presentations).
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<word_type> relators;
  std::map<std::string, long long> params;

  std::size_t rank() const { return generator_names.size(); }

  void add_relator(word_type w) { relators.push_back(free_reduce(w)); }

  // Index of a generator name, or npos.
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generator_names.size(); ++i)
      if (generator_names[i] == name) return i;
    return static_cast<std::size_t>(-1);
  }

  void validate() const {
    if (generator_names.empty())
      throw Error("presentation needs at least one generator");
    for (const auto& name : generator_names) {
      if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0])) &&
                           name[0] != '_'))
        throw Error("generator name '" + name +
                    "' must start with a letter or underscore");
      for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw Error("generator name '" + name +
                      "' contains an invalid character");
    }
    for (std::size_t i = 0; i < generator_names.size(); ++i)
      for (std::size_t j = i + 1; j < generator_names.size(); ++j)
        if (generator_names[i] == generator_names[j])
          throw Error("duplicate generator name '" + generator_names[i] + "'");
    for (const auto& r : relators) {
      for (letter_type x : r) {
        if (x == 0 || gen_of(x) >= rank())
          throw Error("relator letter out of range");
      }
      if (!is_reduced(r)) throw Error("relator is not freely reduced");
    }
  }
};

}  // namespace hypertope
