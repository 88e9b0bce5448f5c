#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <sushkevich/presentation.hpp>

#include "oracles.hpp"

using namespace sushkevich;

namespace {
  Presentation malcev() {
    return parse_presentation("letters: x y a b c d u v\n"
                              "rel: x a = y b\n"
                              "rel: x c = y d\n"
                              "rel: u a = v b\n");
  }

  std::multiset<std::pair<Word, Word>> as_set(std::vector<Relation> const& rels) {
    std::multiset<std::pair<Word, Word>> out;
    for (auto const& r : rels) {
      out.emplace(r.lhs, r.rhs);
    }
    return out;
  }
}  // namespace

TEST_CASE("reverse", "[presentations][reverse]") {
  auto p = Presentation::monoid({"a", "b", "c"});
  CHECK(reverse(p.parse_word("a b a c b")) == p.parse_word("b c a b a"));
  CHECK(reverse(Word{}).empty());

  auto two = Presentation::monoid({"a", "b"});
  for (auto const& w : oracle::all_words(two.alphabet(), 5)) {
    CHECK(reverse(reverse(w)) == w);
  }
}

TEST_CASE("reverse is an anti-homomorphism of concatenation", "[presentations][reverse]") {
  auto       three = Presentation::monoid({"a", "b", "c"});
  auto const words = oracle::all_words(three.alphabet(), 3);
  // All pairs (u, v) with |u|, |v| ≤ 3 plus a sample reaching length 6 each.
  for (auto const& u : words) {
    for (auto const& v : words) {
      REQUIRE(reverse(concat(u, v)) == concat(reverse(v), reverse(u)));
    }
  }
  auto const long_words = oracle::all_words(three.alphabet(), 6);
  for (std::size_t i = 0; i < long_words.size(); i += 37) {
    auto const& u = long_words[i];
    auto const& v = long_words[long_words.size() - 1 - i];
    REQUIRE(reverse(concat(u, v)) == concat(reverse(v), reverse(u)));
  }
}

TEST_CASE("bar_copy", "[presentations][bar_copy]") {
  SECTION("length-2 relation is reversed") {
    auto p = parse_presentation("letters: a b\nrel: a b = b a\n");
    auto q = bar_copy(p);
    REQUIRE(q.relations().size() == 1);
    CHECK(q.to_string(q.relations()[0].lhs) == "b' a'");
    CHECK(q.to_string(q.relations()[0].rhs) == "a' b'");
    CHECK(std::all_of(q.alphabet().begin(), q.alphabet().end(),
                      [](Letter x) { return x.barred(); }));
  }
  SECTION("palindromic relation is fixed up to bars") {
    auto p = parse_presentation("letters: a\nrel: a a a = a\n");
    auto q = bar_copy(p);
    CHECK(q.to_string(q.relations()[0].lhs) == "a' a' a'");
    CHECK(q.to_string(q.relations()[0].rhs) == "a'");
  }
  SECTION("Mal'cev-style relation against the per-letter oracle") {
    auto p = parse_presentation("letters: x y a b\nrel: x a = y b\n");
    auto q = bar_copy(p);
    CHECK(q.relations() == oracle::barred_relations(p.relations()));
    CHECK(q.to_string(q.relations()[0].lhs) == "a' x'");
    CHECK(q.to_string(q.relations()[0].rhs) == "b' y'");
  }
  SECTION("unbarring and re-reversing recovers the input") {
    auto p = malcev();
    auto q = bar_copy(p);
    std::vector<Relation> back;
    for (auto const& r : q.relations()) {
      back.push_back({reverse(toggle_bars(r.lhs)), reverse(toggle_bars(r.rhs))});
    }
    CHECK(back == p.relations());
  }
  SECTION("rejects barred input") {
    auto p = parse_presentation("letters: a a'\nrel: a a' = 1\n");
    CHECK_THROWS_AS(bar_copy(p), Error);
    CHECK_THROWS_AS(bar_copy(build_gm(Presentation::monoid({"a"}))), Error);
  }
}

TEST_CASE("free_product", "[presentations][free_product]") {
  auto a = Presentation::monoid({"a"});
  auto b = Presentation::monoid({"b"});
  auto ab = free_product(a, b);
  CHECK(ab.names() == std::vector<std::string>{"a", "b"});
  CHECK(ab.alphabet().size() == 2);
  CHECK(ab.relations().empty());

  auto idem = parse_presentation("letters: a\nrel: a a = a\n");
  auto prod = free_product(idem, b);
  REQUIRE(prod.relations().size() == 1);
  CHECK(prod.to_string(prod.relations()[0].lhs) == "a a");
  CHECK(prod.to_string(prod.relations()[0].rhs) == "a");

  CHECK_THROWS_AS(free_product(a, a), Error);

  // Names are matched, not ids: {b} * {a} keeps each relation's letters.
  auto rel_b = parse_presentation("letters: b\nrel: b b = 1\n");
  auto mixed = free_product(a, rel_b);
  CHECK(mixed.to_string(mixed.relations()[0].lhs) == "b b");
}

TEST_CASE("build_gm", "[presentations][build_gm]") {
  SECTION("one generator") {
    auto gm = build_gm(Presentation::monoid({"a"}));
    CHECK(gm.kind() == PresentationKind::group_completion);
    CHECK(format_presentation(gm) == "letters: a a'\nrel: a a' = 1\nrel: a' a = 1\n");
  }
  SECTION("free monoid of rank 2") {
    auto gm = build_gm(Presentation::monoid({"a", "b"}));
    CHECK(gm.relations().size() == 4);
    CHECK(is_group_completion(gm));
  }
  SECTION("Mal'cev presentation equals the composed construction") {
    auto p  = parse_presentation("letters: x y a b\nrel: x a = y b\n");
    auto gm = build_gm(p);
    REQUIRE(gm.relations().size() == 2 + 8);
    auto expected = free_product(p, bar_copy(p)).relations();
    for (Letter x : p.alphabet()) {
      expected.push_back({Word{x, x.partner()}, {}});
      expected.push_back({Word{x.partner(), x}, {}});
    }
    CHECK(as_set(gm.relations()) == as_set(expected));
    CHECK(gm.to_string(gm.relations()[1].lhs) == "a' x'");
    CHECK(gm.to_string(gm.relations()[1].rhs) == "b' y'");
  }
  SECTION("relation count and invariant on a corpus") {
    for (auto const& text : {"letters: a\n", "letters: a b\nrel: a b = b a\n",
                             "letters: a\nrel: a a a = a\n",
                             "letters: x y a b c d u v\nrel: x a = y b\n"
                             "rel: x c = y d\nrel: u a = v b\n",
                             "letters: s t\nrel: s t s = t s t\nrel: s s = 1\n"}) {
      auto p  = parse_presentation(text);
      auto gm = build_gm(p);
      CHECK(gm.relations().size()
            == 2 * p.relations().size() + 2 * p.alphabet().size());
      CHECK(is_group_completion(gm));
    }
  }
  SECTION("letter order puts barred letters after their partners") {
    auto gm      = build_gm(Presentation::monoid({"a", "b"}));
    auto ordered = gm.ordered_alphabet();
    std::vector<std::string> names;
    for (Letter x : ordered) {
      names.push_back(gm.letter_name(x));
    }
    CHECK(names == std::vector<std::string>{"a", "a'", "b", "b'"});
  }
}

TEST_CASE("group-completion invariant is enforced", "[presentations]") {
  std::vector<Letter> alphabet{Letter(0), Letter(0, true)};
  CHECK_THROWS_AS(Presentation({"a"}, alphabet, {{Word{Letter(0), Letter(0, true)}, {}}},
                               PresentationKind::group_completion),
                  Error);
  CHECK_NOTHROW(Presentation({"a"}, alphabet,
                             {{Word{Letter(0), Letter(0, true)}, {}},
                              {{}, Word{Letter(0, true), Letter(0)}}},
                             PresentationKind::group_completion));
  CHECK_FALSE(is_group_completion(Presentation::monoid({"a"})));
}

TEST_CASE("presentation validation", "[presentations]") {
  CHECK_THROWS_AS(Presentation({"a"}, {Letter(0), Letter(0)}, {}), Error);
  CHECK_THROWS_AS(Presentation({"a"}, {Letter(1)}, {}), Error);
  CHECK_THROWS_AS(Presentation({"a", "b"}, {Letter(0)}, {{Word{Letter(1)}, {}}}), Error);
}

TEST_CASE("parse_presentation", "[presentations][format]") {
  SECTION("commutation") {
    auto p = parse_presentation("letters: a b\nrel: a b = b a");
    CHECK(p.names() == std::vector<std::string>{"a", "b"});
    REQUIRE(p.relations().size() == 1);
    CHECK(p.relations()[0].lhs == p.parse_word("a b"));
    CHECK(p.relations()[0].rhs == p.parse_word("b a"));
  }
  SECTION("identity token") {
    auto p = parse_presentation("letters: a\nrel: a a = 1");
    CHECK(p.relations()[0].rhs.empty());
  }
  SECTION("comments, blank lines and barred letters") {
    auto p = parse_presentation("# header\n\nletters: a a'  # both\nrel: a a' = 1\n");
    CHECK(p.alphabet() == std::vector<Letter>{Letter(0), Letter(0, true)});
  }
  SECTION("errors carry line numbers") {
    auto line_of = [](std::string const& text) {
      try {
        (void) parse_presentation(text);
      } catch (ParseError const& e) {
        return e.line();
      }
      return std::size_t{0};
    };
    CHECK(line_of("rel: a b = b a") == 1);
    CHECK(line_of("letters: a\n\nrel: a b = a") == 3);
    CHECK(line_of("letters: a\nrel: a a") == 2);
    CHECK(line_of("letters: a\nfoo") == 2);
    CHECK(line_of("letters: a a") == 1);
    CHECK(line_of("letters: a\nrel: a = a = a") == 2);
    CHECK(line_of("letters: a\nrel: = a") == 2);
  }
  SECTION("format round trip") {
    for (auto const& text : {"letters: a b\nrel: a b = b a\n",
                             "letters: x y a b c d u v\nrel: x a = y b\n",
                             "letters: a a'\nrel: a a' = 1\nrel: a' a = 1\n"}) {
      auto p = parse_presentation(text);
      CHECK(format_presentation(p) == text);
      CHECK(parse_presentation(format_presentation(p)) == p);
    }
    auto gm = build_gm(malcev());
    auto back = parse_presentation(format_presentation(gm));
    CHECK(back.relations() == gm.relations());
    CHECK(back.alphabet() == gm.alphabet());
  }
}
