#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hgroup/error.hpp"
#include "hgroup/hypergroup.hpp"
#include "hgroup/morphism.hpp"
#include "hgroup/triple.hpp"

namespace hgroup {

/// Raw tables of the hypergroup canonically attached to (G, H, M):
///   a * alpha = ^a alpha * a^alpha,   a * b = (a, b) * [a, b]
/// with the right-hand sides read off the unique H*M factorization.
/// Base index k is transversal position k; group indices are local
/// subgroup indices.
inline HypergroupData standard_tables(const GroupTriple& t) {
  const auto& g = t.group();
  const auto& h = t.subgroup();
  const auto& m = t.transversal();
  const std::size_t nm = m.size(), nh = h.order();
  HypergroupData d{
      .name = t.name(),
      .base_names = {},
      .group = h.local(),
      .phi = std::vector<Index>(nm * nh),
      .psi = std::vector<Index>(nm * nh),
      .xi = std::vector<Index>(nm * nm),
      .lam = std::vector<Index>(nm * nm),
  };
  for (Index a = 0; a < nm; ++a) {
    d.base_names.push_back(g.element_name(m[a]));
    for (Index al = 0; al < nh; ++al) {
      const auto& f = t.factorize(g.mul(m[a], h.member(al)));
      d.psi[a * nh + al] = f.alpha_pos;
      d.phi[a * nh + al] = f.a_pos;
    }
    for (Index b = 0; b < nm; ++b) {
      const auto& f = t.factorize(g.mul(m[a], m[b]));
      d.lam[a * nm + b] = f.alpha_pos;
      d.xi[a * nm + b] = f.a_pos;
    }
  }
  return d;
}

/// The functor H on objects. Throws ValidationError if the tables fail
/// P1-P4, which cannot happen for a valid triple.
inline Hypergroup standard_construction(const GroupTriple& t) {
  return make_hypergroup(standard_tables(t));
}

/// Left division computed in the group: the unique transversal member of
/// the coset H(b a^{-1}), found by scanning the coset. Positions in and out.
inline Index division_oracle(const GroupTriple& t, Index b, Index a) {
  const auto& g = t.group();
  const Index y = g.mul(t.transversal().at(b), g.inverse(t.transversal().at(a)));
  for (Index alpha : t.subgroup().members())
    if (auto pos = t.transversal_position(g.mul(alpha, y))) return *pos;
  throw std::logic_error("coset misses the transversal");
}

/// The functor H on morphisms: restrict g to H -> H' and M -> M', as
/// local subgroup indices and transversal positions.
inline HypergroupMorphism functor_H_on_morphism(const GroupHom& g, const GroupTriple& s,
                                                const GroupTriple& t) {
  if (auto v = check_triple_morphism(g, s, t); !v)
    throw Error(Errc::NotATripleMorphism, v.describe(), v.witness);
  std::vector<Index> f0(s.subgroup().order()), f1(s.transversal().size());
  for (Index al = 0; al < f0.size(); ++al) f0[al] = *t.subgroup().local_index(g(s.subgroup().member(al)));
  for (Index a = 0; a < f1.size(); ++a) f1[a] = *t.transversal_position(g(s.transversal()[a]));
  return {"H(" + s.name() + "->" + t.name() + ")", standard_construction(s),
          standard_construction(t), std::move(f0), std::move(f1)};
}

inline HypergroupMorphism functor_H_on_morphism(const TripleMorphism& g) {
  auto f = functor_H_on_morphism(g.map, g.source, g.target);
  f.name = "H(" + g.name + ")";
  return f;
}

}  // namespace hgroup
