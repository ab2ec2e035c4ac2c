#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistrep {

/*
 * Surface of genus g with p boundary components and r punctures.
 * The standing assumption everywhere is g >= 1.
 */
struct SurfaceSig {
  int g = 2;
  int p = 0;  // boundary components
  int r = 0;  // punctures

  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

void validate_sig(const SurfaceSig& sig);  // throws std::invalid_argument

class UnsupportedGenusError : public std::invalid_argument {
 public:
  explicit UnsupportedGenusError(int g)
      : std::invalid_argument("unsupported genus " + std::to_string(g) +
                              ": the generator catalog requires g >= 2") {}
};

enum class Family : char { A = 'a', B = 'b', C = 'c', E = 'e', F = 'f' };

// Dehn twist generator t_{a_i}, t_{b_i}, t_{c_k}, t_{e_j}, t_{f_j}
struct GeneratorId {
  Family family = Family::A;
  int index = 1;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend auto operator<=>(const GeneratorId& x, const GeneratorId& y) {
    if (auto c = static_cast<char>(x.family) <=> static_cast<char>(y.family);
        c != 0)
      return c;
    return x.index <=> y.index;
  }
};

std::string to_key(const GeneratorId& id);                // "a1", "c2", ...
GeneratorId generator_from_key(const std::string& key);   // throws

bool valid_generator(const SurfaceSig& sig, const GeneratorId& id);
void require_generator(const SurfaceSig& sig, const GeneratorId& id);

// the catalog a1,b1,...,ag,bg,c1..c_{g-1},e1..e_p,f1..f_r; throws for g < 2
std::vector<GeneratorId> generator_set(const SurfaceSig& sig);

/*
 * Geometric intersection table: exactly the pairs
 *   (a_i, b_i), (c_k, b_k), (c_k, b_{k+1}), (e_j, b_1), (f_j, b_1)
 * meet once; every other catalog pair is disjoint. Symmetric, irreflexive.
 */
bool intersects_once(const SurfaceSig& sig, const GeneratorId& x,
                     const GeneratorId& y);

// free-group word in the twist generators, adjacent equal letters merged
struct Letter {
  GeneratorId id;
  long exp = 1;  // nonzero

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct TwistWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

TwistWord word_of(const GeneratorId& id, long exp = 1);
TwistWord concat(const TwistWord& a, const TwistWord& b);
TwistWord inverse(const TwistWord& w);
TwistWord conjugate(const TwistWord& w, const TwistWord& by);  // by w by^-1

// CLI syntax: whitespace-separated letters "a1 b1^-1 c2^3"
TwistWord parse_word(const std::string& text);  // throws
std::string word_str(const TwistWord& w);

enum class RelationKind { Braid, Commute, LanternMetadata };

std::string to_string(RelationKind k);

struct RelationInstance {
  RelationKind kind = RelationKind::Commute;
  TwistWord lhs, rhs;
};

/*
 * One braid instance per once-intersecting pair, one commuting instance per
 * disjoint pair, every unordered pair covered exactly once, plus a single
 * lantern entry kept as metadata only (its curves have no catalog classes).
 */
std::vector<RelationInstance> relation_catalog(const SurfaceSig& sig);

// H_1(Mod(S); Z) lookup table
struct Abelianization {
  enum class Kind { Cyclic, FreeAbelian, Trivial };
  Kind kind = Kind::Trivial;
  int n = 0;  // order of the cyclic group, or the free rank

  friend bool operator==(const Abelianization&, const Abelianization&) =
      default;
};

Abelianization abelianization(const SurfaceSig& sig);
std::string to_string(const Abelianization& a);

}  // namespace twistrep
