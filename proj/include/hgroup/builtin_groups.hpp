#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "hgroup/error.hpp"
#include "hgroup/finite_group.hpp"

// Generators for the test catalog. Naming conventions per family:
//   cyclic(n)          "0".."n-1", product (i + j) mod n
//   dihedral(n)        "r0".."r{n-1}" rotations, "s0".."s{n-1}" reflections s*r^k
//   symmetric(n)       one-line words over 1..n in lexicographic order,
//                      product p*q applies p first: (p*q)(i) = q(p(i))
//   quaternion8        "1" "-1" "i" "-i" "j" "-j" "k" "-k"
//   direct_product     "a|b", index a * |B| + b

namespace hgroup {

inline constexpr std::size_t kMaxBuiltinOrder = 200;

inline FiniteGroup cyclic(std::size_t n) {
  if (n == 0 || n > kMaxBuiltinOrder)
    throw Error(Errc::UnsupportedParameter, "cyclic(" + std::to_string(n) + ")");
  std::vector<std::string> names(n);
  for (Index i = 0; i < n; ++i) names[i] = std::to_string(i);
  return build_group("Z" + std::to_string(n), std::move(names),
                     [n](Index i, Index j) { return (i + j) % n; });
}

inline FiniteGroup trivial_group() { return cyclic(1); }

/// Dihedral group of order 2n. Element (f, k) stands for s^f r^k and
/// r^k s = s r^{-k}.
inline FiniteGroup dihedral(std::size_t n) {
  if (n == 0 || 2 * n > kMaxBuiltinOrder)
    throw Error(Errc::UnsupportedParameter, "dihedral(" + std::to_string(n) + ")");
  std::vector<std::string> names(2 * n);
  for (Index k = 0; k < n; ++k) {
    names[k] = "r" + std::to_string(k);
    names[n + k] = "s" + std::to_string(k);
  }
  return build_group("D" + std::to_string(n), std::move(names), [n](Index x, Index y) {
    const Index f1 = x / n, k1 = x % n, f2 = y / n, k2 = y % n;
    const Index k = ((f2 ? n - k1 : k1) + k2) % n;
    return ((f1 + f2) % 2) * n + k;
  });
}

/// Permutations of {0..n-1} in lexicographic order, i.e. in index order of
/// symmetric(n).
inline std::vector<std::vector<Index>> permutations(std::size_t n) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline FiniteGroup symmetric(std::size_t n) {
  if (n == 0 || n > 5)
    throw Error(Errc::UnsupportedParameter, "symmetric(" + std::to_string(n) + "), need 1..5");
  const auto perms = permutations(n);
  std::vector<std::string> names;
  for (const auto& p : perms) {
    std::string w;
    for (Index v : p) w += static_cast<char>('1' + v);
    names.push_back(w);
  }
  auto rank = [&](const std::vector<Index>& p) {
    return static_cast<Index>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  return build_group("S" + std::to_string(n), std::move(names), [&](Index x, Index y) {
    std::vector<Index> r(n);
    for (Index i = 0; i < n; ++i) r[i] = perms[y][perms[x][i]];
    return rank(r);
  });
}

/// +1 for even permutations of symmetric(n), -1 for odd ones.
inline int permutation_sign(const std::vector<Index>& p) {
  int sign = 1;
  for (Index i = 0; i < p.size(); ++i)
    for (Index j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

inline FiniteGroup quaternion8() {
  // Index 2u + s is (-1)^s * u with u in {1, i, j, k}.
  static constexpr int unit_sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr Index unit_prod[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return build_group("Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, [](Index x, Index y) {
    const Index u = x / 2, v = y / 2;
    const bool neg = ((x % 2) ^ (y % 2)) ^ (unit_sign[u][v] < 0);
    return 2 * unit_prod[u][v] + (neg ? 1 : 0);
  });
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() * b.order() > kMaxBuiltinOrder)
    throw Error(Errc::UnsupportedParameter, "direct product of order " +
                                                std::to_string(a.order() * b.order()));
  const std::size_t nb = b.order();
  std::vector<std::string> names;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) names.push_back(x + "|" + y);
  return build_group(a.name() + "x" + b.name(), std::move(names), [&](Index x, Index y) {
    return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  });
}

inline FiniteGroup klein_four() { return direct_product(cyclic(2), cyclic(2)).renamed("V4"); }

}  // namespace hgroup
