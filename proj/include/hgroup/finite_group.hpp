#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgroup/error.hpp"

namespace hgroup {

/// A finite group stored as element names plus its full Cayley table.
///
/// Elements are the dense indices 0..n-1; `mul(i, j)` is the index of
/// elements()[i] * elements()[j]. Instances only come out of
/// build_group_from_table() (directly or through the builtin generators),
/// so every FiniteGroup satisfies closure, associativity, identity and
/// inverses.
class FiniteGroup {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& element_name(Index i) const { return elements_.at(i); }

  Index mul(Index i, Index j) const noexcept { return table_[i * order() + j]; }
  Index identity() const noexcept { return identity_; }
  Index inverse(Index i) const noexcept { return inverse_[i]; }
  const std::vector<Index>& inverses() const noexcept { return inverse_; }

  /// Row-major n*n table.
  const std::vector<Index>& table() const noexcept { return table_; }
  std::vector<std::vector<Index>> rows() const {
    std::vector<std::vector<Index>> out(order());
    for (Index i = 0; i < order(); ++i)
      out[i].assign(table_.begin() + i * order(), table_.begin() + (i + 1) * order());
    return out;
  }

  std::optional<Index> find(std::string_view element) const {
    auto it = std::find(elements_.begin(), elements_.end(), element);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<Index>(it - elements_.begin());
  }

  bool is_abelian() const {
    for (Index i = 0; i < order(); ++i)
      for (Index j = i + 1; j < order(); ++j)
        if (mul(i, j) != mul(j, i)) return false;
    return true;
  }

  std::size_t element_order(Index x) const {
    std::size_t k = 1;
    for (Index y = x; y != identity_; y = mul(y, x)) ++k;
    return k;
  }

  /// Number of elements of each order.
  std::map<std::size_t, std::size_t> order_census() const {
    std::map<std::size_t, std::size_t> census;
    for (Index x = 0; x < order(); ++x) ++census[element_order(x)];
    return census;
  }

  FiniteGroup renamed(std::string name) const {
    FiniteGroup g = *this;
    g.name_ = std::move(name);
    return g;
  }

  bool operator==(const FiniteGroup&) const = default;

 private:
  friend FiniteGroup build_group_from_table(std::string, std::vector<std::string>,
                                            std::vector<Index>);

  FiniteGroup() = default;

  std::string name_;
  std::vector<std::string> elements_;
  std::vector<Index> table_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
};

/// Validates a flat row-major table and returns the group. Axioms are
/// checked in the order closure, identity, associativity, inverses; the
/// first failure is thrown with its witnessing indices.
inline FiniteGroup build_group_from_table(std::string name, std::vector<std::string> elements,
                                          std::vector<Index> table) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(Errc::ShapeMismatch, "group '" + name + "' has no elements");
  if (table.size() != n * n)
    throw Error(Errc::ShapeMismatch, "group '" + name + "' table has " +
                                         std::to_string(table.size()) + " cells, expected " +
                                         std::to_string(n * n));
  {
    std::set<std::string> seen;
    for (const auto& e : elements) {
      if (e.empty() || e.find_first_of(" \t\r\n#") != std::string::npos)
        throw Error(Errc::ShapeMismatch, "invalid element name '" + e + "'");
      if (!seen.insert(e).second)
        throw Error(Errc::ShapeMismatch, "duplicate element name '" + e + "'");
    }
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (table[i * n + j] >= n)
        throw Error(Errc::NotClosed,
                    "product of " + std::to_string(i) + " and " + std::to_string(j) +
                        " is outside the group",
                    {i, j});

  auto mul = [&](Index i, Index j) { return table[i * n + j]; };
  std::optional<Index> identity;
  for (Index e = 0; e < n && !identity; ++e) {
    bool neutral = true;
    for (Index i = 0; i < n && neutral; ++i) neutral = mul(e, i) == i && mul(i, e) == i;
    if (neutral) identity = e;
  }
  if (!identity) throw Error(Errc::NoIdentity, "group '" + name + "' has no two-sided identity");

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (mul(mul(i, j), k) != mul(i, mul(j, k)))
          throw Error(Errc::NotAssociative,
                      "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" +
                          std::to_string(k) + " differs from " + std::to_string(i) + "*(" +
                          std::to_string(j) + "*" + std::to_string(k) + ")",
                      {i, j, k});

  std::vector<Index> inverse(n);
  for (Index i = 0; i < n; ++i) {
    std::optional<Index> inv;
    for (Index j = 0; j < n && !inv; ++j)
      if (mul(i, j) == *identity && mul(j, i) == *identity) inv = j;
    if (!inv)
      throw Error(Errc::NoInverse, "element " + std::to_string(i) + " has no inverse", {i});
    inverse[i] = *inv;
  }

  FiniteGroup g;
  g.name_ = std::move(name);
  g.elements_ = std::move(elements);
  g.table_ = std::move(table);
  g.identity_ = *identity;
  g.inverse_ = std::move(inverse);
  return g;
}

/// Overload taking the table as rows.
inline FiniteGroup build_group_from_table(std::string name, std::vector<std::string> elements,
                                          const std::vector<std::vector<Index>>& rows) {
  const std::size_t n = elements.size();
  if (rows.size() != n)
    throw Error(Errc::ShapeMismatch, "table has " + std::to_string(rows.size()) +
                                         " rows, expected " + std::to_string(n));
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (Index i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(Errc::ShapeMismatch, "row " + std::to_string(i) + " has " +
                                           std::to_string(rows[i].size()) + " entries, expected " +
                                           std::to_string(n));
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return build_group_from_table(std::move(name), std::move(elements), std::move(flat));
}

/// Builds a group from a closed multiplication on 0..n-1.
inline FiniteGroup build_group(std::string name, std::vector<std::string> elements,
                               const std::function<Index(Index, Index)>& op) {
  const std::size_t n = elements.size();
  std::vector<Index> table(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) table[i * n + j] = op(i, j);
  return build_group_from_table(std::move(name), std::move(elements), std::move(table));
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Index> mapping;

  Index operator()(Index x) const { return mapping.at(x); }
  bool operator==(const GroupHom&) const = default;
};

inline GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target,
                         const std::function<Index(Index)>& fn) {
  std::vector<Index> mapping(source.order());
  for (Index x = 0; x < source.order(); ++x) mapping[x] = fn(x);
  return {source, target, std::move(mapping)};
}

inline GroupHom identity_hom(const FiniteGroup& g) {
  return make_hom(g, g, [](Index x) { return x; });
}

/// Checks mapping[x*y] == mapping[x]*mapping[y] for all pairs, and that the
/// identity is preserved. The witness is the first failing pair (x, y).
inline Verdict check_group_hom(const GroupHom& h) {
  const auto& s = h.source;
  const auto& t = h.target;
  if (h.mapping.size() != s.order())
    return Verdict::fail("mapping length " + std::to_string(h.mapping.size()) +
                         " differs from source order " + std::to_string(s.order()));
  for (Index x = 0; x < s.order(); ++x)
    if (h.mapping[x] >= t.order()) return Verdict::fail("image out of range", {x});
  for (Index x = 0; x < s.order(); ++x)
    for (Index y = 0; y < s.order(); ++y)
      if (h.mapping[s.mul(x, y)] != t.mul(h.mapping[x], h.mapping[y]))
        return Verdict::fail("hom equation", {x, y});
  if (h.mapping[s.identity()] != t.identity())
    return Verdict::fail("identity not preserved", {s.identity()});
  return Verdict::pass();
}

inline bool is_bijective(const std::vector<Index>& mapping, std::size_t target_size) {
  if (mapping.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (Index y : mapping) {
    if (y >= target_size || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

/// Diagrammatic composite: apply `first`, then `second`.
inline GroupHom compose(const GroupHom& first, const GroupHom& second) {
  if (!(first.target == second.source))
    throw Error(Errc::SourceTargetMismatch, "target of '" + first.target.name() +
                                                "' is not the source '" + second.source.name() + "'");
  std::vector<Index> mapping(first.mapping.size());
  for (Index x = 0; x < mapping.size(); ++x) mapping[x] = second.mapping.at(first.mapping[x]);
  return {first.source, second.target, std::move(mapping)};
}

}  // namespace hgroup
