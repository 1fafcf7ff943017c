#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hgroup/builtin_groups.hpp"
#include "hgroup/error.hpp"
#include "hgroup/finite_group.hpp"
#include "hgroup/galois_field.hpp"
#include "hgroup/hypergroup.hpp"

namespace hgroup {

/// A group M as a hypergroup over the trivial group: xi is the group law,
/// everything else is forced.
inline Hypergroup from_group(const FiniteGroup& g) {
  const std::size_t m = g.order();
  HypergroupData d{
      .name = g.name(),
      .base_names = g.elements(),
      .group = trivial_group(),
      .phi = {},
      .psi = std::vector<Index>(m, 0),
      .xi = g.table(),
      .lam = std::vector<Index>(m * m, 0),
  };
  d.phi.resize(m);
  for (Index a = 0; a < m; ++a) d.phi[a] = a;
  return make_hypergroup(std::move(d));
}

/// Multiplicative group of the field; local index i is field element i + 1.
inline FiniteGroup multiplicative_group(const GaloisField& f, std::string name) {
  const std::size_t q = f.size();
  std::vector<std::string> names;
  for (std::size_t u = 1; u < q; ++u) names.push_back(f.name(u));
  return build_group(std::move(name), std::move(names),
                     [&](Index i, Index j) { return f.mul(i + 1, j + 1) - 1; });
}

/// The hypergroup of GF(p^k): M the additive group, H the multiplicative
/// group, a^alpha = a*alpha, ^a alpha = alpha, (a, b) = 1.
inline Hypergroup from_field(std::size_t p, std::size_t k = 1) {
  const GaloisField f(p, k);
  const std::size_t q = f.size(), h = q - 1;
  const std::string label = "GF" + std::to_string(q);
  HypergroupData d{
      .name = label,
      .base_names = {},
      .group = multiplicative_group(f, label + "x"),
      .phi = std::vector<Index>(q * h),
      .psi = std::vector<Index>(q * h),
      .xi = std::vector<Index>(q * q),
      .lam = std::vector<Index>(q * q, 0),
  };
  for (std::size_t a = 0; a < q; ++a) {
    d.base_names.push_back(f.name(a));
    for (Index al = 0; al < h; ++al) {
      d.phi[a * h + al] = f.mul(a, al + 1);
      d.psi[a * h + al] = al;
    }
    for (std::size_t b = 0; b < q; ++b) d.xi[a * q + b] = f.add(a, b);
  }
  return make_hypergroup(std::move(d));
}

/// GF(p)^n under addition with the scalar action of GF(p)^x. Vectors are
/// coded base p with component i as digit i and named "(v0,...,v{n-1})".
inline Hypergroup from_vector_space(std::size_t p, std::size_t n) {
  const GaloisField f(p, 1);
  std::size_t q = 1;
  for (std::size_t i = 0; i < n; ++i) {
    q *= p;
    if (q > GaloisField::kMaxSize)
      throw Error(Errc::TooLarge, std::to_string(p) + "^" + std::to_string(n) + " exceeds " +
                                      std::to_string(GaloisField::kMaxSize));
  }
  if (n == 0) throw Error(Errc::UnsupportedParameter, "dimension must be positive");
  const std::size_t h = p - 1;
  auto component = [&](std::size_t v, std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) v /= p;
    return v % p;
  };
  auto combine = [&](std::size_t u, std::size_t v, auto&& op) {
    std::size_t out = 0;
    for (std::size_t i = n; i-- > 0;) out = out * p + op(component(u, i), component(v, i));
    return out;
  };
  const std::string label = "GF" + std::to_string(p) + "^" + std::to_string(n);
  HypergroupData d{
      .name = label,
      .base_names = {},
      .group = multiplicative_group(f, "GF" + std::to_string(p) + "x"),
      .phi = std::vector<Index>(q * h),
      .psi = std::vector<Index>(q * h),
      .xi = std::vector<Index>(q * q),
      .lam = std::vector<Index>(q * q, 0),
  };
  for (std::size_t v = 0; v < q; ++v) {
    std::string name = "(";
    for (std::size_t i = 0; i < n; ++i) name += (i ? "," : "") + std::to_string(component(v, i));
    d.base_names.push_back(name + ")");
    for (Index al = 0; al < h; ++al) {
      d.phi[v * h + al] = combine(v, 0, [&](std::size_t x, std::size_t) { return (x * (al + 1)) % p; });
      d.psi[v * h + al] = al;
    }
    for (std::size_t w = 0; w < q; ++w)
      d.xi[v * q + w] = combine(v, w, [&](std::size_t x, std::size_t y) { return (x + y) % p; });
  }
  return make_hypergroup(std::move(d));
}

// ---------------------------------------------------------------------------
// Hypergroups with trivial lambda on a group M

/// phi, psi and lambda all trivial.
struct TrivialProfile {};
/// phi and lambda trivial; psi[a*|H| + alpha] is alpha twisted by a.
struct SemidirectProfile {
  std::vector<Index> psi;
};
/// Only lambda trivial; phi and psi form a matched pair of actions.
struct GeneralProfile {
  std::vector<Index> phi;
  std::vector<Index> psi;
};

using Profile = std::variant<TrivialProfile, SemidirectProfile, GeneralProfile>;

/// Tables with xi the law of `m_group` and lambda = epsilon; phi and psi
/// from the profile. Returns the validation outcome so a caller can see
/// which axiom inconsistent action data breaks.
inline Validation with_profile(std::string name, const FiniteGroup& h_group,
                               const FiniteGroup& m_group, const Profile& profile) {
  const std::size_t m = m_group.order(), h = h_group.order();
  HypergroupData d{
      .name = std::move(name),
      .base_names = m_group.elements(),
      .group = h_group,
      .phi = std::vector<Index>(m * h),
      .psi = std::vector<Index>(m * h),
      .xi = m_group.table(),
      .lam = std::vector<Index>(m * m, h_group.identity()),
  };
  for (Index a = 0; a < m; ++a)
    for (Index al = 0; al < h; ++al) {
      d.phi[a * h + al] = a;
      d.psi[a * h + al] = al;
    }
  if (const auto* s = std::get_if<SemidirectProfile>(&profile)) {
    d.psi = s->psi;
  } else if (const auto* g = std::get_if<GeneralProfile>(&profile)) {
    d.phi = g->phi;
    d.psi = g->psi;
  }
  return validate_hypergroup(std::move(d));
}

}  // namespace hgroup
