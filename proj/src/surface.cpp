#include "twistrep/surface.hpp"

#include <regex>
#include <sstream>

namespace twistrep {

void validate_sig(const SurfaceSig& sig) {
  if (sig.g < 1)
    throw std::invalid_argument("genus must be >= 1, got " +
                                std::to_string(sig.g));
  if (sig.p < 0 || sig.r < 0)
    throw std::invalid_argument("boundary and puncture counts must be >= 0");
}

std::string to_key(const GeneratorId& id) {
  return std::string(1, static_cast<char>(id.family)) +
         std::to_string(id.index);
}

GeneratorId generator_from_key(const std::string& key) {
  static const std::regex re(R"(^([abcef])([1-9]\d*)$)");
  std::smatch m;
  if (!std::regex_match(key, m, re))
    throw std::invalid_argument("not a generator key: '" + key + "'");
  return GeneratorId{static_cast<Family>(m[1].str()[0]),
                     std::stoi(m[2].str())};
}

bool valid_generator(const SurfaceSig& sig, const GeneratorId& id) {
  if (id.index < 1) return false;
  switch (id.family) {
    case Family::A:
    case Family::B:
      return id.index <= sig.g;
    case Family::C:
      return id.index <= sig.g - 1;
    case Family::E:
      return id.index <= sig.p;
    case Family::F:
      return id.index <= sig.r;
  }
  return false;
}

void require_generator(const SurfaceSig& sig, const GeneratorId& id) {
  if (!valid_generator(sig, id))
    throw std::invalid_argument("generator " + to_key(id) +
                                " is not in the catalog for (g=" +
                                std::to_string(sig.g) + ",p=" +
                                std::to_string(sig.p) + ",r=" +
                                std::to_string(sig.r) + ")");
}

std::vector<GeneratorId> generator_set(const SurfaceSig& sig) {
  validate_sig(sig);
  if (sig.g < 2) throw UnsupportedGenusError(sig.g);
  std::vector<GeneratorId> gens;
  gens.reserve(static_cast<std::size_t>(3 * sig.g - 1 + sig.p + sig.r));
  for (int i = 1; i <= sig.g; ++i) {
    gens.push_back({Family::A, i});
    gens.push_back({Family::B, i});
  }
  for (int k = 1; k <= sig.g - 1; ++k) gens.push_back({Family::C, k});
  for (int j = 1; j <= sig.p; ++j) gens.push_back({Family::E, j});
  for (int j = 1; j <= sig.r; ++j) gens.push_back({Family::F, j});
  return gens;
}

bool intersects_once(const SurfaceSig& sig, const GeneratorId& x,
                     const GeneratorId& y) {
  require_generator(sig, x);
  require_generator(sig, y);
  auto pair_hits = [](const GeneratorId& u, const GeneratorId& v) {
    if (u.family == Family::A && v.family == Family::B)
      return u.index == v.index;
    if (u.family == Family::C && v.family == Family::B)
      return v.index == u.index || v.index == u.index + 1;
    if ((u.family == Family::E || u.family == Family::F) &&
        v.family == Family::B)
      return v.index == 1;
    return false;
  };
  return pair_hits(x, y) || pair_hits(y, x);
}

TwistWord word_of(const GeneratorId& id, long exp) {
  TwistWord w;
  if (exp != 0) w.letters.push_back({id, exp});
  return w;
}

namespace {

void push_merged(std::vector<Letter>& out, const Letter& l) {
  if (l.exp == 0) return;
  if (!out.empty() && out.back().id == l.id) {
    out.back().exp += l.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(l);
}

}  // namespace

TwistWord concat(const TwistWord& a, const TwistWord& b) {
  TwistWord w;
  w.letters.reserve(a.letters.size() + b.letters.size());
  for (const auto& l : a.letters) push_merged(w.letters, l);
  for (const auto& l : b.letters) push_merged(w.letters, l);
  return w;
}

TwistWord inverse(const TwistWord& w) {
  TwistWord r;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->id, -it->exp});
  return r;
}

TwistWord conjugate(const TwistWord& w, const TwistWord& by) {
  return concat(by, concat(w, inverse(by)));
}

TwistWord parse_word(const std::string& text) {
  static const std::regex re(R"(^([abcef][1-9]\d*)(?:\^([+-]?\d+))?$)");
  TwistWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    std::smatch m;
    if (!std::regex_match(tok, m, re))
      throw std::invalid_argument("bad word letter: '" + tok + "'");
    long exp = m[2].matched ? std::stol(m[2].str()) : 1;
    if (exp == 0)
      throw std::invalid_argument("zero exponent in word letter: '" + tok +
                                  "'");
    push_merged(w.letters, {generator_from_key(m[1].str()), exp});
  }
  return w;
}

std::string word_str(const TwistWord& w) {
  std::string s;
  for (const auto& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += to_key(l.id);
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Braid:
      return "braid";
    case RelationKind::Commute:
      return "commute";
    case RelationKind::LanternMetadata:
      return "lantern-metadata";
  }
  return "?";
}

std::vector<RelationInstance> relation_catalog(const SurfaceSig& sig) {
  auto gens = generator_set(sig);
  std::vector<RelationInstance> rels;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const TwistWord x = word_of(gens[i]);
      const TwistWord y = word_of(gens[j]);
      if (intersects_once(sig, gens[i], gens[j])) {
        rels.push_back({RelationKind::Braid, concat(x, concat(y, x)),
                        concat(y, concat(x, y))});
      } else {
        rels.push_back({RelationKind::Commute, concat(x, y), concat(y, x)});
      }
    }
  }
  // lantern t_a t_b t_c t_d = t_x t_y t_z: its seven curves carry no catalog
  // homology classes, so the instance is metadata with no checkable payload
  rels.push_back({RelationKind::LanternMetadata, {}, {}});
  return rels;
}

Abelianization abelianization(const SurfaceSig& sig) {
  validate_sig(sig);
  if (sig.g == 1 && sig.p == 0)
    return {Abelianization::Kind::Cyclic, 12};
  if (sig.g == 1)
    return {Abelianization::Kind::FreeAbelian, sig.p};
  if (sig.g == 2) return {Abelianization::Kind::Cyclic, 10};
  return {Abelianization::Kind::Trivial, 0};
}

std::string to_string(const Abelianization& a) {
  switch (a.kind) {
    case Abelianization::Kind::Cyclic:
      return "Z/" + std::to_string(a.n) + "Z";
    case Abelianization::Kind::FreeAbelian:
      return "Z^" + std::to_string(a.n);
    case Abelianization::Kind::Trivial:
      return "0";
  }
  return "?";
}

}  // namespace twistrep
