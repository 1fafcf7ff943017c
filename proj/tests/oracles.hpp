#pragma once

// Independent reference computations for the tests. Nothing in here calls
// into the library's algorithms; inputs and outputs are plain vectors.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<std::size_t>>;

inline Table make_table(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = op(i, j);
  return t;
}

inline Table flat_to_table(const std::vector<std::size_t>& flat, std::size_t rows, std::size_t cols) {
  Table t(rows, std::vector<std::size_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = flat[i * cols + j];
  return t;
}

/// Brute-force group check; returns the identity or -1.
inline long group_identity(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] >= n) return -1;
  long e = -1;
  for (std::size_t c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[c][x] == x && t[x][c] == x;
    if (ok) e = static_cast<long>(c);
  }
  if (e < 0) return -1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]]) return -1;
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j)
      found = t[i][j] == static_cast<std::size_t>(e) && t[j][i] == static_cast<std::size_t>(e);
    if (!found) return -1;
  }
  return e;
}

inline std::size_t inverse(const Table& t, std::size_t e, std::size_t x) {
  for (std::size_t y = 0; y < t.size(); ++y)
    if (t[x][y] == e) return y;
  return t.size();
}

/// Multiset of element orders.
inline std::map<std::size_t, std::size_t> order_census(const Table& t) {
  const auto e = static_cast<std::size_t>(group_identity(t));
  std::map<std::size_t, std::size_t> out;
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::size_t k = 1, y = x;
    while (y != e) y = t[y][x], ++k;
    ++out[k];
  }
  return out;
}

/// Right cosets H*a as sorted sets, listed once each.
inline std::set<std::set<std::size_t>> right_cosets(const Table& t, const std::vector<std::size_t>& h) {
  std::set<std::set<std::size_t>> out;
  for (std::size_t a = 0; a < t.size(); ++a) {
    std::set<std::size_t> c;
    for (std::size_t al : h) c.insert(t[al][a]);
    out.insert(c);
  }
  return out;
}

/// All (alpha, a) with alpha*a = x, by exhaustive search.
inline std::vector<std::pair<std::size_t, std::size_t>> factorizations(
    const Table& t, const std::vector<std::size_t>& h, const std::vector<std::size_t>& m, std::size_t x) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t al : h)
    for (std::size_t a : m)
      if (t[al][a] == x) out.emplace_back(al, a);
  return out;
}

/// Transversal test from the definition: each coset meets m exactly once.
inline bool is_transversal(const Table& t, const std::vector<std::size_t>& h, const std::vector<std::size_t>& m) {
  for (const auto& c : right_cosets(t, h)) {
    std::size_t hits = 0;
    for (std::size_t a : m) hits += c.count(a);
    if (hits != 1) return false;
  }
  return true;
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Permutations in lexicographic order; product (p*q)(i) = q(p(i)).
inline std::vector<std::vector<std::size_t>> perms(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Table symmetric_table(std::size_t n) {
  const auto ps = perms(n);
  return make_table(ps.size(), [&](std::size_t x, std::size_t y) {
    std::vector<std::size_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = ps[y][ps[x][i]];
    return static_cast<std::size_t>(std::find(ps.begin(), ps.end(), r) - ps.begin());
  });
}

// ---------------------------------------------------------------------------
// Hypergroup axioms straight from the identities

struct Raw {
  std::size_t m = 0, h = 0;
  Table g;  // h x h
  Table phi, psi, xi, lam;
};

/// Names of the failing axioms among P1i..A11. The derived ones are only
/// evaluated when a left neutral exists.
inline std::set<std::string> failing_axioms(const Raw& r) {
  std::set<std::string> bad;
  const auto e = static_cast<std::size_t>(group_identity(r.g));
  auto mul = [&](std::size_t x, std::size_t y) { return r.g[x][y]; };
  auto inv = [&](std::size_t x) { return inverse(r.g, e, x); };

  for (std::size_t a = 0; a < r.m; ++a) {
    std::set<std::size_t> col;
    for (std::size_t x = 0; x < r.m; ++x) col.insert(r.xi[x][a]);
    if (col.size() != r.m) bad.insert("P1i");
  }
  long o = -1;
  for (std::size_t c = 0; c < r.m && o < 0; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < r.m; ++a) ok = ok && r.xi[c][a] == a;
    if (ok) o = static_cast<long>(c);
  }
  if (o < 0) bad.insert("P1ii"), bad.insert("P3");
  for (std::size_t a = 0; a < r.m; ++a) {
    if (r.phi[a][e] != a) bad.insert("P2ii");
    for (std::size_t al = 0; al < r.h; ++al)
      for (std::size_t be = 0; be < r.h; ++be)
        if (r.phi[r.phi[a][al]][be] != r.phi[a][mul(al, be)]) bad.insert("P2i");
  }
  if (o >= 0) {
    std::set<std::size_t> img;
    for (std::size_t al = 0; al < r.h; ++al) img.insert(r.psi[o][al]);
    if (img.size() != r.h) bad.insert("P3");
  }
  for (std::size_t a = 0; a < r.m; ++a)
    for (std::size_t al = 0; al < r.h; ++al)
      for (std::size_t be = 0; be < r.h; ++be)
        if (r.psi[a][mul(al, be)] != mul(r.psi[a][al], r.psi[r.phi[a][al]][be])) bad.insert("A1");
  for (std::size_t a = 0; a < r.m; ++a)
    for (std::size_t b = 0; b < r.m; ++b)
      for (std::size_t al = 0; al < r.h; ++al) {
        const std::size_t bal = r.psi[b][al];
        if (r.phi[r.xi[a][b]][al] != r.xi[r.phi[a][bal]][r.phi[b][al]]) bad.insert("A2");
        if (mul(r.lam[a][b], r.psi[r.xi[a][b]][al]) !=
            mul(r.psi[a][bal], r.lam[r.phi[a][bal]][r.phi[b][al]]))
          bad.insert("A3");
      }
  for (std::size_t a = 0; a < r.m; ++a)
    for (std::size_t b = 0; b < r.m; ++b)
      for (std::size_t c = 0; c < r.m; ++c) {
        const std::size_t bc = r.lam[b][c];
        if (r.xi[r.xi[a][b]][c] != r.xi[r.phi[a][bc]][r.xi[b][c]]) bad.insert("A4");
        if (mul(r.lam[a][b], r.lam[r.xi[a][b]][c]) !=
            mul(r.psi[a][bc], r.lam[r.phi[a][bc]][r.xi[b][c]]))
          bad.insert("A5");
      }
  if (o < 0) return bad;
  const std::size_t oo = static_cast<std::size_t>(o);
  const std::size_t theta = inv(r.lam[oo][oo]), ti = inv(theta);
  for (std::size_t a = 0; a < r.m; ++a) {
    if (r.psi[a][e] != e) bad.insert("A6");
    if (r.lam[oo][a] != ti) bad.insert("A9");
    if (r.xi[a][oo] != r.phi[a][ti]) bad.insert("A10");
    if (r.lam[a][oo] != r.psi[a][ti]) bad.insert("A11");
  }
  for (std::size_t al = 0; al < r.h; ++al) {
    if (r.phi[oo][al] != oo) bad.insert("A7");
    if (r.psi[oo][al] != mul(mul(ti, al), theta)) bad.insert("A8");
  }
  return bad;
}

/// The word product table on pairs (alpha, a), coded alpha*m + a.
inline Table word_table(const Raw& r) {
  const std::size_t n = r.m * r.h;
  return make_table(n, [&](std::size_t x, std::size_t y) {
    const std::size_t al = x / r.m, a = x % r.m, be = y / r.m, b = y % r.m;
    const std::size_t ab = r.phi[a][be];
    const std::size_t head = r.g[r.g[al][r.psi[a][be]]][r.lam[ab][b]];
    return head * r.m + r.xi[ab][b];
  });
}

// ---------------------------------------------------------------------------
// Finite fields by brute polynomial arithmetic on coefficient vectors

struct Field {
  std::size_t p, k, q;
  std::vector<std::size_t> modulus;  // monic, ascending, degree k

  std::vector<std::size_t> digits(std::size_t u) const {
    std::vector<std::size_t> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = u % p, u /= p;
    return d;
  }
  std::size_t code(const std::vector<std::size_t>& d) const {
    std::size_t u = 0;
    for (std::size_t i = k; i-- > 0;) u = u * p + d[i];
    return u;
  }
  std::size_t add(std::size_t u, std::size_t v) const {
    auto a = digits(u), b = digits(v);
    for (std::size_t i = 0; i < k; ++i) a[i] = (a[i] + b[i]) % p;
    return code(a);
  }
  std::size_t mul(std::size_t u, std::size_t v) const {
    auto a = digits(u), b = digits(v);
    std::vector<std::size_t> prod(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t d = 2 * k - 1; d >= k; --d) {
      const std::size_t c = prod[d];
      if (!c) continue;
      for (std::size_t i = 0; i <= k; ++i)
        prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
    }
    prod.resize(k);
    return code(prod);
  }
};

// ---------------------------------------------------------------------------
// Random data

/// A random bijection of {0..n-1}.
inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Table of the group transported along the bijection p.
inline Table relabel(const Table& t, const std::vector<std::size_t>& p) {
  std::vector<std::size_t> pinv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pinv[p[i]] = i;
  return make_table(t.size(), [&](std::size_t x, std::size_t y) { return p[t[pinv[x]][pinv[y]]]; });
}

}  // namespace oracle
