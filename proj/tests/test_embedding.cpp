#include <catch2/catch_amalgamated.hpp>

#include <sushkevich/embedding.hpp>

#include "oracles.hpp"

using namespace sushkevich;

namespace {
  Presentation malcev() {
    return parse_presentation("letters: x y a b c d u v\n"
                              "rel: x a = y b\n"
                              "rel: x c = y d\n"
                              "rel: u a = v b\n");
  }

  // Every collision witness must be distinct in M and equal in G(M) with a
  // derivation that replays over G(M)'s relations.
  void verify_witnesses(EmbeddingReport const& r) {
    auto m_rs = kb_complete(r.m);
    for (auto const& w : r.witnesses) {
      CHECK(w.in_m == Verdict::distinct);
      CHECK(m_rs.reduce(w.u) != m_rs.reduce(w.v));
      if (w.in_gm == Verdict::equal) {
        REQUIRE(w.certificate.derivation);
        CHECK(replay(r.gm.relations(), w.u, *w.certificate.derivation) == w.v);
      }
    }
  }
}  // namespace

TEST_CASE("probe: free monoid embeds", "[embedding][probe]") {
  auto p = Presentation::monoid({"a", "b"});
  auto r = probe_embedding(p, {.max_len = 4});
  CHECK(r.status == EmbeddingStatus::no_collision_found);
  CHECK(r.elements == 31);
  CHECK(r.pairs_checked == 465);
  CHECK(r.collisions == 0);
  CHECK(r.inconclusive == 0);
  CHECK(r.witnesses.empty());
  CHECK(r.gm_confluent);

  // Free-group oracle: distinct positive words stay distinct after free
  // reduction, which is the identity on positive words.
  auto gm_rs = kb_complete(r.gm);
  auto words = enumerate_elements(kb_complete(p), 4);
  std::set<Word> images;
  for (auto const& w : words) {
    CHECK(oracle::free_reduce(w) == w);
    images.insert(gm_rs.reduce(w));
  }
  CHECK(images.size() == words.size());
}

TEST_CASE("probe: free commutative monoid embeds", "[embedding][probe]") {
  auto p = parse_presentation("letters: a b\nrel: a b = b a\n");
  auto r = probe_embedding(p, {.max_len = 4});
  CHECK(r.status == EmbeddingStatus::no_collision_found);
  CHECK(r.elements == 15);
  CHECK(r.pairs_checked == 105);
  CHECK(r.inconclusive == 0);

  // Exponent-vector oracle on both sides.
  auto gm_rs = kb_complete(r.gm);
  auto words = enumerate_elements(kb_complete(p), 4);
  for (auto const& u : words) {
    for (auto const& v : words) {
      bool same_in_gm = gm_rs.reduce(u) == gm_rs.reduce(v);
      CHECK(same_in_gm == (oracle::exponents(u) == oracle::exponents(v)));
      CHECK(same_in_gm == (u == v));
    }
  }
}

TEST_CASE("probe: Mal'cev presentation collides", "[embedding][probe]") {
  auto p = malcev();
  auto r = probe_embedding(p, {.max_len = 2});
  REQUIRE(r.status == EmbeddingStatus::collision);
  CHECK(r.m_rules == 3);
  CHECK(r.collisions == 1);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(p.to_string(r.witnesses[0].u) == "u c");
  CHECK(p.to_string(r.witnesses[0].v) == "v d");
  CHECK(r.witnesses[0].in_gm == Verdict::equal);
  verify_witnesses(r);
}

TEST_CASE("probe: monotonicity and re-verification", "[embedding][probe]") {
  auto p = malcev();
  std::size_t previous = 0;
  for (std::size_t len = 2; len <= 3; ++len) {
    auto r = probe_embedding(p, {.max_len = len});
    CHECK(r.status == EmbeddingStatus::collision);
    CHECK(r.collisions >= previous);
    CHECK(p.to_string(r.witnesses[0].u) == "u c");
    previous = r.collisions;
    verify_witnesses(r);
  }
}

TEST_CASE("probe: embeddable presentations never collide", "[embedding][probe]") {
  for (auto const* text : {"letters: a b\n", "letters: a b\nrel: a b = b a\n",
                           "letters: a\nrel: a a a = 1\n", "letters: a\n"}) {
    auto p = parse_presentation(text);
    for (std::size_t len = 0; len <= 5; ++len) {
      INFO(text << " max_len " << len);
      auto r = probe_embedding(p, {.max_len = len});
      CHECK(r.status == EmbeddingStatus::no_collision_found);
      CHECK(r.collisions == 0);
    }
  }
}

TEST_CASE("probe: non-cancellative inputs", "[embedding][probe]") {
  auto p = parse_presentation("letters: a\nrel: a a = a\n");
  auto r = probe_embedding(p, {.max_len = 3});
  CHECK(r.status == EmbeddingStatus::collision);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].u.empty());
  CHECK(p.to_string(r.witnesses[0].v) == "a");
  verify_witnesses(r);
}

TEST_CASE("probe: inconclusive pairs are listed", "[embedding][probe]") {
  auto p = Presentation::monoid({"a", "b"});
  auto r = probe_embedding(
      p, {.max_len = 2, .budget = 3, .completion = {.max_rules = 1, .max_rule_length = 50}});
  CHECK_FALSE(r.gm_confluent);
  CHECK(r.status == EmbeddingStatus::inconclusive);
  CHECK(r.inconclusive > 0);
  CHECK(r.witnesses.size() == r.inconclusive);
  for (auto const& w : r.witnesses) {
    CHECK(w.in_gm == Verdict::unknown);
  }
  auto limited = probe_embedding(p, {.max_len = 2,
                                     .budget = 3,
                                     .completion = {.max_rules = 1, .max_rule_length = 50},
                                     .max_witnesses = 2});
  CHECK(limited.witnesses.size() == 2);
  CHECK(limited.inconclusive == r.inconclusive);
}

TEST_CASE("probe: input errors", "[embedding][probe]") {
  CHECK_THROWS_AS(probe_embedding(build_gm(Presentation::monoid({"a"}))), Error);
  auto braid = parse_presentation("letters: a b\nrel: a b a = b a b\n");
  CHECK_THROWS_AS(probe_embedding(braid), NotConfluent);
}

TEST_CASE("check_malcev_condition", "[embedding][malcev]") {
  SECTION("left-zero of order 2") {
    auto t = CayleyTable::from_function(2, [](auto i, auto) { return i; });
    auto r = check_malcev_condition(t);
    CHECK(r.systems_checked == 64);
    CHECK(r.violation_count == 0);
    CHECK(r.violation_count == oracle::malcev_violations(t));
  }
  SECTION("groups") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto t = CayleyTable::from_function(n, [n](auto i, auto j) { return (i + j) % n; });
      CHECK(check_malcev_condition(t).violation_count == 0);
    }
  }
  SECTION("agrees with the brute-force scan on every semigroup of order ≤ 3") {
    std::size_t with_violations = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& t : enumerate_semigroups(n)) {
        auto r = check_malcev_condition(t);
        REQUIRE(r.violation_count == oracle::malcev_violations(t));
        CHECK(r.violations.size() == r.violation_count);
        for (auto const& v : r.violations) {
          CHECK(is_malcev_violation(t, v));
        }
        with_violations += r.violation_count > 0;
      }
    }
    // Non-embeddable small semigroups exist, so the scan is not vacuous.
    CHECK(with_violations > 0);
  }
  SECTION("max_listed caps the list, not the count") {
    // Two-element semilattice: x = y = 0 makes the first two hypotheses
    // trivial.
    auto t     = CayleyTable::from_rows({{0, 0}, {0, 1}});
    auto full  = check_malcev_condition(t);
    auto capped = check_malcev_condition(t, 2);
    REQUIRE(full.violation_count > 2);
    CHECK(full.violation_count == oracle::malcev_violations(t));
    CHECK(capped.violation_count == full.violation_count);
    CHECK(capped.violations.size() == 2);
  }
  SECTION("is_malcev_violation rejects tuples that are not violations") {
    auto t = CayleyTable::from_function(3, [](auto i, auto j) { return (i + j) % 3; });
    CHECK_FALSE(is_malcev_violation(t, {0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_FALSE(is_malcev_violation(t, {5, 0, 0, 0, 0, 0, 0, 0}));
  }
  SECTION("rejects non-associative tables") {
    CHECK_THROWS_AS(check_malcev_condition(CayleyTable::from_rows({{1, 0}, {0, 0}})), Error);
  }
}
