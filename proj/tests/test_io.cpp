#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <hypertope/family_presentations.hpp>
#include <hypertope/presentation_io.hpp>

using namespace hypertope;

namespace {

Presentation from_text(const std::string& text) {
  std::istringstream in(text);
  return read_presentation(in);
}

}  // namespace

TEST_CASE("presentation text format reads directives, comments, params") {
  auto p = from_text(
      "# header comment\n"
      "\n"
      "gens: r0 r1 r2\n"
      "param: n 10\n"
      "rel: r0^2\n"
      "   # indented comment\n"
      "rel: (r0*r1)^4\n"
      "param: s 2\n");
  CHECK(p.generator_names == std::vector<std::string>{"r0", "r1", "r2"});
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == parse_word("r0^2", p));
  CHECK(p.relators[1] == parse_word("(r0*r1)^4", p));
  CHECK(p.params.at("n") == 10);
  CHECK(p.params.at("s") == 2);
}

TEST_CASE("presentation text format rejects malformed input") {
  CHECK_THROWS_WITH(from_text("rel: a^2\n"),
                    Catch::Matchers::ContainsSubstring("before gens"));
  CHECK_THROWS_WITH(from_text("gens: a\ngens: b\n"),
                    Catch::Matchers::ContainsSubstring("duplicate gens"));
  CHECK_THROWS_WITH(from_text("gens: a\nfrobnicate: 3\n"),
                    Catch::Matchers::ContainsSubstring("unknown directive"));
  CHECK_THROWS_WITH(from_text("gens: a\nparam: n\n"),
                    Catch::Matchers::ContainsSubstring("param: name integer"));
  CHECK_THROWS_WITH(from_text("gens: a\nparam: n 1 2\n"),
                    Catch::Matchers::ContainsSubstring("param: name integer"));
  CHECK_THROWS_WITH(from_text("gens: a\nparam: n 1\nparam: n 2\n"),
                    Catch::Matchers::ContainsSubstring("duplicate parameter"));
  CHECK_THROWS_WITH(from_text("gens: a\nrel: b^2\n"),
                    Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(from_text("gens: a\nrel: (a\n"),
                    Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(from_text("gens: a\nno colon here\n"),
                    Catch::Matchers::ContainsSubstring("directive"));
  CHECK_THROWS_WITH(from_text("gens:\n"),
                    Catch::Matchers::ContainsSubstring("no generators"));
  CHECK_THROWS_WITH(from_text("# only a comment\n"),
                    Catch::Matchers::ContainsSubstring("no gens line"));
  CHECK_THROWS_AS(read_presentation_file("/nonexistent/x.pres"), Error);
}

TEST_CASE("word rendering folds runs and survives a round trip") {
  Presentation p;
  p.generator_names = {"a", "b"};
  CHECK(render_word({}, p) == "1");
  word_type w{make_letter(0), make_letter(0), -make_letter(1), make_letter(0)};
  CHECK(render_word(w, p) == "a^2*b^-1*a");
  CHECK(parse_word(render_word(w, p), p) == w);
}

TEST_CASE("family presentations survive a serialization round trip") {
  for (const Presentation& p :
       {m1_presentation(2), m2_presentation(3), g_presentation(10, 2, 2, 2),
        g_presentation(11, 2, 2, 3), g3_presentation(12, 3, 3, 2)}) {
    std::ostringstream out;
    write_presentation(p, out);
    auto q = from_text(out.str());
    CHECK(q.generator_names == p.generator_names);
    CHECK(q.relators == p.relators);
    CHECK(q.params == p.params);
  }
}

TEST_CASE("shipped sample files match the family builders") {
  struct Row {
    const char* file;
    Presentation want;
  };
  for (const auto& [file, want] :
       {Row{"m1_b2.pres", m1_presentation(2)},
        Row{"m2_b2.pres", m2_presentation(2)},
        Row{"g_10_2_2_2.pres", g_presentation(10, 2, 2, 2)},
        Row{"g_12_3_3_3.pres", g_presentation(12, 3, 3, 3)}}) {
    CAPTURE(file);
    auto p = read_presentation_file(std::string(PRESENTATIONS_DIR) + "/" + file);
    CHECK(p.generator_names == want.generator_names);
    CHECK(p.relators == want.relators);
    CHECK(p.params == want.params);
  }
}
