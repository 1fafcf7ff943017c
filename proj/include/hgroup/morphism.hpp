#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hgroup/error.hpp"
#include "hgroup/finite_group.hpp"
#include "hgroup/hypergroup.hpp"

namespace hgroup {

/// f = (f0, f1): f0 a homomorphism of the groups, f1 a map of base sets.
struct HypergroupMorphism {
  std::string name;
  Hypergroup source;
  Hypergroup target;
  std::vector<Index> f0;
  std::vector<Index> f1;

  GroupHom group_part() const { return {source.group(), target.group(), f0}; }
};

/// Checks the pointwise preservation conditions
///   MPhi     f1(a^alpha)  = f1(a)^{f0(alpha)}
///   MPsi     f0(^a alpha) = ^{f1(a)} f0(alpha)
///   MXi      f1([a, b])   = [f1(a), f1(b)]
///   MLambda  f0((a, b))   = (f1(a), f1(b))
/// in that order. An accepted morphism must also send o to o' and theta to
/// theta'; a failure there is reported as "neutral" or "theta".
inline Verdict check_hyp_morphism(const HypergroupMorphism& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.f1.size() != s.base_size())
    return Verdict::fail("f1 has " + std::to_string(f.f1.size()) + " entries, expected " +
                         std::to_string(s.base_size()));
  for (Index a = 0; a < s.base_size(); ++a)
    if (f.f1[a] >= t.base_size()) return Verdict::fail("f1 image out of range", {a});
  if (auto hom = check_group_hom(f.group_part()); !hom) {
    hom.what = "f0 " + hom.what;
    return hom;
  }
  const auto& f0 = f.f0;
  const auto& f1 = f.f1;
  for (Index a = 0; a < s.base_size(); ++a)
    for (Index al = 0; al < s.group_order(); ++al)
      if (f1[s.phi(a, al)] != t.phi(f1[a], f0[al])) return Verdict::fail("MPhi", {a, al});
  for (Index a = 0; a < s.base_size(); ++a)
    for (Index al = 0; al < s.group_order(); ++al)
      if (f0[s.psi(a, al)] != t.psi(f1[a], f0[al])) return Verdict::fail("MPsi", {a, al});
  for (Index a = 0; a < s.base_size(); ++a)
    for (Index b = 0; b < s.base_size(); ++b)
      if (f1[s.xi(a, b)] != t.xi(f1[a], f1[b])) return Verdict::fail("MXi", {a, b});
  for (Index a = 0; a < s.base_size(); ++a)
    for (Index b = 0; b < s.base_size(); ++b)
      if (f0[s.lam(a, b)] != t.lam(f1[a], f1[b])) return Verdict::fail("MLambda", {a, b});

  if (f1[s.o()] != t.o()) return Verdict::fail("neutral", {s.o()});
  if (f0[s.theta()] != t.theta()) return Verdict::fail("theta", {s.theta()});
  return Verdict::pass();
}

inline HypergroupMorphism identity_morphism(const Hypergroup& k) {
  std::vector<Index> f0(k.group_order()), f1(k.base_size());
  for (Index i = 0; i < f0.size(); ++i) f0[i] = i;
  for (Index i = 0; i < f1.size(); ++i) f1[i] = i;
  return {"id:" + k.name(), k, k, std::move(f0), std::move(f1)};
}

/// Diagrammatic composite (f0 then f0', f1 then f1').
inline HypergroupMorphism compose(const HypergroupMorphism& first,
                                  const HypergroupMorphism& second) {
  if (!(first.target == second.source))
    throw Error(Errc::SourceTargetMismatch,
                "'" + first.name + "' does not end where '" + second.name + "' starts");
  std::vector<Index> f0(first.f0.size()), f1(first.f1.size());
  for (Index i = 0; i < f0.size(); ++i) f0[i] = second.f0.at(first.f0[i]);
  for (Index i = 0; i < f1.size(); ++i) f1[i] = second.f1.at(first.f1[i]);
  return {first.name + ";" + second.name, first.source, second.target, std::move(f0),
          std::move(f1)};
}

inline bool is_isomorphism(const HypergroupMorphism& f) {
  return is_bijective(f.f0, f.target.group_order()) && is_bijective(f.f1, f.target.base_size());
}

}  // namespace hgroup
