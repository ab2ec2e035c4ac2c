#include <doctest.h>

#include <set>

#include "twistrep/surface.hpp"

using namespace twistrep;

TEST_CASE("generator catalog") {
  const auto gens = generator_set({2, 0, 0});
  REQUIRE(gens.size() == 5);  // 2g + (g-1) + p + r
  CHECK(to_key(gens[0]) == "a1");
  CHECK(to_key(gens[1]) == "b1");
  CHECK(to_key(gens[2]) == "a2");
  CHECK(to_key(gens[3]) == "b2");
  CHECK(to_key(gens[4]) == "c1");

  CHECK(generator_set({3, 1, 2}).size() == 11);
  CHECK_THROWS_AS(generator_set({1, 0, 0}), UnsupportedGenusError);
  CHECK_THROWS_AS(generator_set({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("generator keys parse and validate") {
  CHECK(generator_from_key("c2") == GeneratorId{Family::C, 2});
  CHECK_THROWS_AS(generator_from_key("x1"), std::invalid_argument);
  CHECK_THROWS_AS(generator_from_key("a0"), std::invalid_argument);
  CHECK(valid_generator({3, 0, 0}, {Family::C, 2}));
  CHECK_FALSE(valid_generator({3, 0, 0}, {Family::C, 3}));
  CHECK_FALSE(valid_generator({3, 0, 0}, {Family::E, 1}));
  CHECK_THROWS_AS(require_generator({2, 0, 0}, GeneratorId{Family::A, 3}),
                  std::invalid_argument);
}

TEST_CASE("intersection table") {
  const SurfaceSig sig{3, 1, 1};
  auto hits = [&](const char* x, const char* y) {
    return intersects_once(sig, generator_from_key(x), generator_from_key(y));
  };
  CHECK(hits("a1", "b1"));
  CHECK(hits("c1", "b1"));
  CHECK(hits("c1", "b2"));
  CHECK(hits("e1", "b1"));
  CHECK(hits("f1", "b1"));
  CHECK_FALSE(hits("c1", "a2"));
  CHECK_FALSE(hits("c1", "c2"));
  CHECK_FALSE(hits("e1", "c1"));
  CHECK_FALSE(hits("e1", "f1"));
  CHECK_FALSE(hits("a1", "a2"));
  CHECK_FALSE(hits("e1", "b2"));

  // symmetric and irreflexive over the whole catalog
  const auto gens = generator_set(sig);
  for (const auto& x : gens) {
    CHECK_FALSE(intersects_once(sig, x, x));
    for (const auto& y : gens)
      CHECK(intersects_once(sig, x, y) == intersects_once(sig, y, x));
  }
}

TEST_CASE("relation catalog covers every pair exactly once") {
  const SurfaceSig sig{2, 0, 0};
  const auto rels = relation_catalog(sig);
  // 4 braid + 6 commute + 1 lantern entry
  REQUIRE(rels.size() == 11);
  std::size_t braid = 0, commute = 0, lantern = 0;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : rels) {
    switch (r.kind) {
      case RelationKind::Braid: {
        ++braid;
        REQUIRE(r.lhs.letters.size() == 3);
        seen.insert({to_key(r.lhs.letters[0].id), to_key(r.lhs.letters[1].id)});
        break;
      }
      case RelationKind::Commute: {
        ++commute;
        REQUIRE(r.lhs.letters.size() == 2);
        const auto a = to_key(r.lhs.letters[0].id);
        const auto b = to_key(r.lhs.letters[1].id);
        CHECK(a != b);  // no self pairs
        seen.insert({a, b});
        break;
      }
      case RelationKind::LanternMetadata:
        ++lantern;
        CHECK(r.lhs.empty());  // metadata only, no checkable payload
        break;
    }
  }
  CHECK(braid == 4);
  CHECK(commute == 6);
  CHECK(lantern == 1);
  CHECK(seen.size() == 10);  // C(5, 2) unordered pairs, each once
  CHECK(seen.count({"a1", "a2"}) == 1);

  // braid pairs at genus 2 are exactly (a_i, b_i) and (c_1, b_j)
  std::set<std::pair<std::string, std::string>> braid_pairs;
  for (const auto& r : rels)
    if (r.kind == RelationKind::Braid)
      braid_pairs.insert(
          {to_key(r.lhs.letters[0].id), to_key(r.lhs.letters[1].id)});
  CHECK(braid_pairs ==
        std::set<std::pair<std::string, std::string>>{
            {"a1", "b1"}, {"a2", "b2"}, {"b1", "c1"}, {"b2", "c1"}});
}

TEST_CASE("abelianization table") {
  CHECK(abelianization({1, 0, 0}) == Abelianization{Abelianization::Kind::Cyclic, 12});
  CHECK(abelianization({1, 0, 5}) == Abelianization{Abelianization::Kind::Cyclic, 12});
  CHECK(abelianization({1, 2, 0}) ==
        Abelianization{Abelianization::Kind::FreeAbelian, 2});
  CHECK(abelianization({2, 3, 1}) == Abelianization{Abelianization::Kind::Cyclic, 10});
  CHECK(abelianization({5, 0, 0}) ==
        Abelianization{Abelianization::Kind::Trivial, 0});
  CHECK(to_string(abelianization({1, 0, 0})) == "Z/12Z");
  CHECK(to_string(abelianization({7, 1, 1})) == "0");
}

TEST_CASE("word operations") {
  const TwistWord a1 = word_of({Family::A, 1});
  const TwistWord b1 = word_of({Family::B, 1});
  CHECK(word_str(inverse(concat(a1, b1))) == "b1^-1 a1^-1");
  CHECK(concat(a1, inverse(a1)).empty());
  CHECK(word_str(conjugate(a1, b1)) == "b1 a1 b1^-1");
  // adjacent letters merge
  CHECK(word_str(concat(a1, a1)) == "a1^2");
  CHECK(concat(word_of({Family::A, 1}, 2), word_of({Family::A, 1}, -2)).empty());
}

TEST_CASE("word syntax") {
  const TwistWord w = parse_word("a1 b1^-1 c2^3");
  REQUIRE(w.letters.size() == 3);
  CHECK(w.letters[0] == Letter{{Family::A, 1}, 1});
  CHECK(w.letters[1] == Letter{{Family::B, 1}, -1});
  CHECK(w.letters[2] == Letter{{Family::C, 2}, 3});
  CHECK(word_str(w) == "a1 b1^-1 c2^3");
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a1^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a1^"), std::invalid_argument);
}
