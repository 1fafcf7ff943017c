#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgroup/error.hpp"
#include "hgroup/exact_product.hpp"
#include "hgroup/hypergroup.hpp"
#include "hgroup/morphism.hpp"
#include "hgroup/standard_construction.hpp"
#include "hgroup/triple.hpp"

namespace hgroup {

/// xi-bar . x-bar == xi x for every word, i.e. (xi theta) o . epsilon x = xi x.
inline Verdict check_word_factorization(const ExactProductGroup& e) {
  const auto& k = e.base();
  for (Index xi = 0; xi < k.group_order(); ++xi)
    for (Index x = 0; x < k.base_size(); ++x)
      if (e.group().mul(e.h_bar(xi), e.m_bar(x)) != e.encode({xi, x}))
        return Verdict::fail("xi-bar x-bar != xi x", {xi, x});
  return Verdict::pass();
}

/// The canonical isomorphism K -> H(T(K)). Because T lists H-bar and M-bar
/// in the order of H and M, both components come out as identity index
/// maps; the check is that the rebuilt tables agree with K's.
/// Throws std::logic_error when the morphism or the word factorization
/// check fails.
inline HypergroupMorphism unit_iso(const Hypergroup& k) {
  const auto e = exact_product(k);
  if (auto v = check_word_factorization(e); !v)
    throw std::logic_error("unit of '" + k.name() + "': " + v.describe());
  const auto triple = functor_T_on_object(e);
  std::vector<Index> f0(k.group_order()), f1(k.base_size());
  for (Index al = 0; al < f0.size(); ++al) f0[al] = *triple.subgroup().local_index(e.h_bar(al));
  for (Index a = 0; a < f1.size(); ++a) f1[a] = *triple.transversal_position(e.m_bar(a));
  HypergroupMorphism f{"unit(" + k.name() + ")", k, standard_construction(triple), std::move(f0),
                       std::move(f1)};
  if (auto v = check_hyp_morphism(f); !v)
    throw std::logic_error("unit of '" + k.name() + "' is not a morphism: " + v.describe());
  if (!is_isomorphism(f)) throw std::logic_error("unit of '" + k.name() + "' is not bijective");
  return f;
}

/// The canonical isomorphism (G, H, M) -> T(H(G, H, M)), x = alpha a -> alpha a.
/// Throws std::logic_error unless it is a bijective triple morphism.
inline TripleMorphism counit_iso(const GroupTriple& t) {
  const auto e = exact_product(standard_construction(t));
  std::vector<Index> mapping(t.group().order());
  for (Index x = 0; x < mapping.size(); ++x) {
    const auto& f = t.factorize(x);
    mapping[x] = e.encode({f.alpha_pos, f.a_pos});
  }
  TripleMorphism g{"counit(" + t.name() + ")", t, functor_T_on_object(e),
                   GroupHom{t.group(), e.group(), std::move(mapping)}};
  if (auto v = check_triple_morphism(g); !v)
    throw std::logic_error("counit of '" + t.name() + "' is not a triple morphism: " +
                           v.describe());
  if (!is_bijective(g.map.mapping, e.group().order()))
    throw std::logic_error("counit of '" + t.name() + "' is not bijective");
  return g;
}

/// Square for f: K -> K'. With u, u' the units and f~ = H(T(f)):
///   u'(f(.)) == f~(u(.))   on H and on M.
inline Verdict check_naturality_unit(const HypergroupMorphism& f) {
  if (auto v = check_hyp_morphism(f); !v) return Verdict::fail("not a morphism: " + v.describe());
  const auto u = unit_iso(f.source);
  const auto u2 = unit_iso(f.target);
  const auto lower = functor_H_on_morphism(functor_T_on_morphism(f));
  for (Index al = 0; al < f.f0.size(); ++al)
    if (u2.f0[f.f0[al]] != lower.f0[u.f0[al]]) return Verdict::fail("unit square on H", {al});
  for (Index a = 0; a < f.f1.size(); ++a)
    if (u2.f1[f.f1[a]] != lower.f1[u.f1[a]]) return Verdict::fail("unit square on M", {a});
  return Verdict::pass();
}

/// Square for g: T -> T'. With c, c' the counits and g~ = T(H(g)):
///   c'(g(x)) == g~(c(x))   for every x in G.
inline Verdict check_naturality_counit(const TripleMorphism& g) {
  if (auto v = check_triple_morphism(g); !v) return Verdict::fail("not a morphism: " + v.describe());
  const auto c = counit_iso(g.source);
  const auto c2 = counit_iso(g.target);
  const auto lower = functor_T_on_morphism(functor_H_on_morphism(g));
  for (Index x = 0; x < g.source.group().order(); ++x)
    if (c2.map(g.map(x)) != lower.map(c.map(x))) return Verdict::fail("counit square", {x});
  return Verdict::pass();
}

}  // namespace hgroup
