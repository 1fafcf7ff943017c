#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hgroup/builtin_groups.hpp"
#include "hgroup/constructions.hpp"
#include "hgroup/exact_product.hpp"
#include "hgroup/hypergroup.hpp"
#include "hgroup/morphism.hpp"
#include "hgroup/standard_construction.hpp"
#include "hgroup/triple.hpp"

namespace hgroup {

/// Up to `count` pairwise distinct right transversals of h, chosen so that
/// one of them avoids the identity whenever h is nontrivial. Only a
/// trivial h forces every transversal to contain the identity, and only
/// fewer than `count` transversals existing yields fewer.
inline std::vector<std::vector<Index>> sample_transversals(const FiniteGroup& g, const Subgroup& h,
                                                           std::size_t count = 3) {
  const auto cosets = right_cosets(g, h);
  std::vector<std::vector<Index>> picks;
  std::set<std::vector<Index>> seen;
  auto offer = [&](std::vector<Index> m) {
    auto key = m;
    std::sort(key.begin(), key.end());
    if (picks.size() < count && seen.insert(key).second) picks.push_back(std::move(m));
  };
  auto choose = [&](auto&& pick) {
    std::vector<Index> m;
    for (std::size_t k = 0; k < cosets.size(); ++k) m.push_back(pick(k, cosets[k]));
    return m;
  };
  auto avoids_identity = [&](const std::vector<Index>& m) {
    return std::find(m.begin(), m.end(), g.identity()) == m.end();
  };

  offer(choose([](std::size_t, const auto& c) { return c.front(); }));
  if (h.order() > 1) {
    // Same as the first pick except in H itself, where the identity is avoided.
    auto m = choose([&](std::size_t, const auto& c) {
      for (Index x : c)
        if (x != g.identity()) return x;
      return c.front();
    });
    offer(m);
  }
  {
    auto m = choose([](std::size_t k, const auto& c) { return c[(k + 1) % c.size()]; });
    std::reverse(m.begin(), m.end());
    offer(m);
  }
  offer(choose([](std::size_t, const auto& c) { return c.back(); }));
  // Fall back to plain enumeration when the heuristics collide.
  if (picks.size() < count)
    for_each_transversal(g, h, [&](const std::vector<Index>& m) {
      offer(m);
      return picks.size() < count;
    });
  if (h.order() > 1 && std::none_of(picks.begin(), picks.end(), avoids_identity))
    throw std::logic_error("no sampled transversal avoids the identity");
  return picks;
}

/// Groups the acceptance catalog is built from.
inline std::vector<FiniteGroup> catalog_groups() {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back(cyclic(n));
  for (std::size_t n = 3; n <= 6; ++n) out.push_back(dihedral(n));
  out.push_back(symmetric(3));
  out.push_back(symmetric(4));
  out.push_back(quaternion8());
  out.push_back(klein_four());
  return out;
}

inline std::string triple_label(const FiniteGroup& g, const std::vector<Index>& h,
                                const std::vector<Index>& m) {
  return g.name() + "/H{" + detail::join(h, ",") + "}/M{" + detail::join(m, ",") + "}";
}

/// Every subgroup of every catalog group, each with up to three sampled
/// transversals.
inline std::vector<GroupTriple> catalog_triples() {
  std::vector<GroupTriple> out;
  for (const auto& g : catalog_groups())
    for (const auto& h : all_subgroups(g))
      for (auto& m : sample_transversals(g, h))
        out.push_back(make_triple(triple_label(g, h.members(), m), g, h.members(), m));
  return out;
}

// ---------------------------------------------------------------------------
// Named objects used by the CLI, the tests and the morphism catalog

namespace named {

inline GroupTriple z4_triple() { return make_triple("z4-triple", cyclic(4), {0, 2}, {0, 1}); }
inline GroupTriple z4_triple_shifted() {
  return make_triple("z4-triple-shifted", cyclic(4), {0, 2}, {2, 1});
}
inline GroupTriple z4_triple_neg() { return make_triple("z4-triple-neg", cyclic(4), {0, 2}, {0, 3}); }
inline GroupTriple z2_triple() { return make_triple("z2-triple", cyclic(2), {0}, {0, 1}); }
inline GroupTriple z2_full_triple() { return make_triple("z2-full-triple", cyclic(2), {0, 1}, {0}); }
inline GroupTriple trivial_triple() { return make_triple("trivial-triple", cyclic(1), {0}, {0}); }

inline Index s3_element(const char* word) { return *symmetric(3).find(word); }

/// (S3, <(12)>, A3): the three-cycles as transversal of a transposition.
inline GroupTriple s3_triple() {
  return make_triple("s3-triple", symmetric(3), {s3_element("123"), s3_element("213")},
                     {s3_element("123"), s3_element("231"), s3_element("312")});
}
/// (S3, A3, {e, (12)}).
inline GroupTriple s3_sign_triple() {
  return make_triple("s3-sign-triple", symmetric(3),
                     {s3_element("123"), s3_element("231"), s3_element("312")},
                     {s3_element("123"), s3_element("213")});
}
/// (S4, stabilizer of 4, <(1234)>): both factors are subgroups, neither normal.
inline GroupTriple s4_knit_triple() {
  const auto g = symmetric(4);
  std::vector<Index> stab;
  const auto perms = permutations(4);
  for (Index x = 0; x < perms.size(); ++x)
    if (perms[x][3] == 3) stab.push_back(x);
  const Index c = *g.find("2341");
  std::vector<Index> cyc{g.identity()};
  for (Index y = c; y != g.identity(); y = g.mul(y, c)) cyc.push_back(y);
  return make_triple("s4-knit-triple", g, stab, cyc);
}

inline Hypergroup direct_z2_z2() {
  return *with_profile("direct-z2-z2", cyclic(2), cyclic(2), TrivialProfile{}).hypergroup;
}

/// Z2 acting on Z3 by inversion, placed in psi.
inline SemidirectProfile inversion_action() {
  std::vector<Index> psi(2 * 3);
  for (Index a = 0; a < 2; ++a)
    for (Index al = 0; al < 3; ++al) psi[a * 3 + al] = a ? (3 - al) % 3 : al;
  return {psi};
}

inline Hypergroup semidirect_z3_z2() {
  return *with_profile("semidirect-z3-z2", cyclic(3), cyclic(2), inversion_action()).hypergroup;
}

/// Lambda-trivial hypergroup read off a triple whose transversal is a
/// subgroup, rebuilt through with_profile(GeneralProfile).
inline Validation knit_from_triple(std::string name, const GroupTriple& t) {
  const auto d = standard_tables(t);
  const auto m_group = make_subgroup(t.group(), t.transversal(), name + "_M").local();
  return with_profile(std::move(name), t.subgroup().local(), m_group,
                      GeneralProfile{d.phi, d.psi});
}

inline Hypergroup knit_s3() { return *knit_from_triple("knit-s3", s3_triple()).hypergroup; }
inline Hypergroup knit_s4() { return *knit_from_triple("knit-s4", s4_knit_triple()).hypergroup; }

inline GroupHom mod2(const FiniteGroup& z4, const FiniteGroup& z2) {
  return make_hom(z4, z2, [](Index x) { return x % 2; });
}

inline GroupHom sign_map(const FiniteGroup& s3, const FiniteGroup& z2) {
  const auto perms = permutations(3);
  return make_hom(s3, z2, [&](Index x) { return permutation_sign(perms[x]) > 0 ? Index{0} : Index{1}; });
}

}  // namespace named

/// Morphisms between triples: identities, the Z4 -> Z2 reduction family,
/// the sign map of S3, collapses to the trivial triple, and composites.
inline std::vector<TripleMorphism> catalog_triple_morphisms() {
  using namespace named;
  const auto z4a = z4_triple(), z4b = z4_triple_shifted(), z4c = z4_triple_neg();
  const auto z2 = z2_triple(), z2f = z2_full_triple(), triv = trivial_triple();
  const auto s3 = s3_triple(), s3s = s3_sign_triple();

  std::vector<TripleMorphism> out;
  out.push_back(identity_triple_morphism(z4a));
  out.push_back(identity_triple_morphism(s3));
  out.push_back(identity_triple_morphism(z2));
  const TripleMorphism mod2a{"mod2:z4-triple", z4a, z2, mod2(z4a.group(), z2.group())};
  const TripleMorphism mod2b{"mod2:z4-triple-shifted", z4b, z2, mod2(z4b.group(), z2.group())};
  const TripleMorphism mod2c{"mod2:z4-triple-neg", z4c, z2, mod2(z4c.group(), z2.group())};
  const TripleMorphism neg{"neg:z4", z4a, z4c,
                           make_hom(z4a.group(), z4c.group(), [](Index x) { return (4 - x) % 4; })};
  const TripleMorphism collapse{"collapse:z2", z2, triv,
                                make_hom(z2.group(), triv.group(), [](Index) { return Index{0}; })};
  out.push_back(mod2a);
  out.push_back(mod2b);
  out.push_back(mod2c);
  out.push_back(neg);
  out.push_back(compose(neg, mod2c));
  out.push_back({"sign:s3-sign-triple", s3s, z2, sign_map(s3s.group(), z2.group())});
  out.push_back({"sign:s3-triple", s3, z2f, sign_map(s3.group(), z2f.group())});
  out.push_back(collapse);
  out.push_back(compose(mod2a, collapse));
  return out;
}

/// Morphisms between hypergroups: group maps seen over the trivial group,
/// field embeddings, a projection of vector spaces, images of triple
/// morphisms under H, and composites.
inline std::vector<HypergroupMorphism> catalog_hypergroup_morphisms() {
  using namespace named;
  std::vector<HypergroupMorphism> out;
  const auto gz4 = from_group(cyclic(4)), gz2 = from_group(cyclic(2));
  out.push_back(identity_morphism(gz4));
  out.push_back({"mod2:group-z4", gz4, gz2, {0}, {0, 1, 0, 1}});
  out.push_back({"neg:group-z4", gz4, gz4, {0}, {0, 3, 2, 1}});
  out.push_back(compose(out.back(), out[1]));
  out.push_back({"embed:gf2-gf4", from_field(2, 1), from_field(2, 2), {0}, {0, 1}});
  out.push_back({"embed:gf3-gf9", from_field(3, 1), from_field(3, 2), {0, 1}, {0, 1, 2}});
  out.push_back(identity_morphism(from_field(5, 1)));
  {
    std::vector<Index> proj(9);
    for (Index v = 0; v < 9; ++v) proj[v] = v % 3;
    out.push_back({"project:vs3-2", from_vector_space(3, 2), from_vector_space(3, 1), {0, 1}, proj});
  }
  const auto triples = catalog_triple_morphisms();
  for (const auto& g : triples)
    if (g.name.rfind("mod2:", 0) == 0 || g.name.rfind("sign:", 0) == 0 || g.name == "neg:z4")
      out.push_back(functor_H_on_morphism(g));
  auto by_name = [&](std::string_view name) {
    return *std::find_if(triples.begin(), triples.end(),
                         [&](const TripleMorphism& g) { return g.name == name; });
  };
  const auto h_neg = functor_H_on_morphism(by_name("neg:z4"));
  const auto h_mod2c = functor_H_on_morphism(by_name("mod2:z4-triple-neg"));
  out.push_back(compose(h_neg, h_mod2c));
  return out;
}

/// Catalog hypergroups as raw tables: every standard construction of the
/// triple catalog, every catalog group over the trivial group, the field
/// and vector-space examples, and the three lambda-trivial profiles.
inline std::vector<HypergroupData> catalog_hypergroups(const std::vector<GroupTriple>& triples) {
  std::vector<HypergroupData> out;
  for (const auto& t : triples) out.push_back(standard_tables(t));
  for (const auto& g : catalog_groups()) {
    auto d = from_group(g).data();
    d.name = "group:" + g.name();
    out.push_back(std::move(d));
  }
  for (auto [p, k] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}})
    out.push_back(from_field(p, k).data());
  out.push_back(from_vector_space(3, 2).data());
  out.push_back(from_vector_space(5, 1).data());
  out.push_back(named::direct_z2_z2().data());
  out.push_back(named::semidirect_z3_z2().data());
  out.push_back(named::knit_s3().data());
  out.push_back(named::knit_s4().data());
  return out;
}

struct Catalog {
  std::vector<GroupTriple> triples;
  std::vector<HypergroupData> hypergroups;
  std::vector<TripleMorphism> triple_morphisms;
  std::vector<HypergroupMorphism> hypergroup_morphisms;
};

inline Catalog default_catalog() {
  Catalog c;
  c.triples = catalog_triples();
  c.hypergroups = catalog_hypergroups(c.triples);
  c.triple_morphisms = catalog_triple_morphisms();
  c.hypergroup_morphisms = catalog_hypergroup_morphisms();
  return c;
}

// ---------------------------------------------------------------------------
// Builtins addressable as "builtin:<name>"

using Object = std::variant<FiniteGroup, GroupTriple, Hypergroup>;

inline const std::map<std::string, Object (*)()>& builtin_registry() {
  static const std::map<std::string, Object (*)()> registry = [] {
    std::map<std::string, Object (*)()> r;
    r["z1"] = [] { return Object{cyclic(1)}; };
    r["z2"] = [] { return Object{cyclic(2)}; };
    r["z3"] = [] { return Object{cyclic(3)}; };
    r["z4"] = [] { return Object{cyclic(4)}; };
    r["z6"] = [] { return Object{cyclic(6)}; };
    r["z8"] = [] { return Object{cyclic(8)}; };
    r["z12"] = [] { return Object{cyclic(12)}; };
    r["d4"] = [] { return Object{dihedral(4)}; };
    r["d6"] = [] { return Object{dihedral(6)}; };
    r["s3"] = [] { return Object{symmetric(3)}; };
    r["s4"] = [] { return Object{symmetric(4)}; };
    r["s5"] = [] { return Object{symmetric(5)}; };
    r["q8"] = [] { return Object{quaternion8()}; };
    r["klein4"] = [] { return Object{klein_four()}; };
    r["z4-triple"] = [] { return Object{named::z4_triple()}; };
    r["z4-triple-shifted"] = [] { return Object{named::z4_triple_shifted()}; };
    r["z2-triple"] = [] { return Object{named::z2_triple()}; };
    r["s3-triple"] = [] { return Object{named::s3_triple()}; };
    r["s3-sign-triple"] = [] { return Object{named::s3_sign_triple()}; };
    r["s4-knit-triple"] = [] { return Object{named::s4_knit_triple()}; };
    r["z4-hyp"] = [] { return Object{standard_construction(named::z4_triple())}; };
    r["z4-shifted-hyp"] = [] { return Object{standard_construction(named::z4_triple_shifted())}; };
    r["group-z4"] = [] { return Object{from_group(cyclic(4))}; };
    r["group-s3"] = [] { return Object{from_group(symmetric(3))}; };
    r["gf2"] = [] { return Object{from_field(2, 1)}; };
    r["gf3"] = [] { return Object{from_field(3, 1)}; };
    r["gf4"] = [] { return Object{from_field(2, 2)}; };
    r["gf5"] = [] { return Object{from_field(5, 1)}; };
    r["gf7"] = [] { return Object{from_field(7, 1)}; };
    r["gf8"] = [] { return Object{from_field(2, 3)}; };
    r["gf9"] = [] { return Object{from_field(3, 2)}; };
    r["vs3-2"] = [] { return Object{from_vector_space(3, 2)}; };
    r["vs5-1"] = [] { return Object{from_vector_space(5, 1)}; };
    r["direct-z2-z2"] = [] { return Object{named::direct_z2_z2()}; };
    r["semidirect-z3-z2"] = [] { return Object{named::semidirect_z3_z2()}; };
    r["knit-s3"] = [] { return Object{named::knit_s3()}; };
    r["knit-s4"] = [] { return Object{named::knit_s4()}; };
    return r;
  }();
  return registry;
}

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : builtin_registry()) out.push_back(name);
  return out;
}

inline std::optional<Object> builtin(std::string_view name) {
  const auto& r = builtin_registry();
  auto it = r.find(std::string(name));
  if (it == r.end()) return std::nullopt;
  return it->second();
}

}  // namespace hgroup
