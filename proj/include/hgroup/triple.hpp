#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hgroup/error.hpp"
#include "hgroup/finite_group.hpp"

namespace hgroup {

/// A subgroup of a parent group, kept both as the list of parent indices
/// and as a standalone FiniteGroup on that list (local index i is parent
/// element members()[i]).
class Subgroup {
 public:
  const std::vector<Index>& members() const noexcept { return members_; }
  const FiniteGroup& local() const noexcept { return local_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return position_.size(); }

  bool contains(Index x) const { return x < position_.size() && position_[x] != kNone; }
  std::optional<Index> local_index(Index x) const {
    if (!contains(x)) return std::nullopt;
    return position_[x];
  }
  Index member(Index local) const { return members_.at(local); }

  bool operator==(const Subgroup&) const = default;

 private:
  static constexpr Index kNone = std::numeric_limits<Index>::max();

  friend Subgroup make_subgroup(const FiniteGroup&, std::vector<Index>, std::string);

  Subgroup(std::vector<Index> members, FiniteGroup local, std::vector<Index> position)
      : members_(std::move(members)), local_(std::move(local)), position_(std::move(position)) {}

  std::vector<Index> members_;
  FiniteGroup local_;
  std::vector<Index> position_;
};

/// Validates `members` as a subgroup of `g`: identity present, closed
/// under products and inverses. Member order is kept as given.
inline Subgroup make_subgroup(const FiniteGroup& g, std::vector<Index> members,
                              std::string name = {}) {
  std::vector<Index> position(g.order(), Subgroup::kNone);
  for (Index k = 0; k < members.size(); ++k) {
    const Index x = members[k];
    if (x >= g.order())
      throw Error(Errc::IndexOutOfRange, "subgroup member " + std::to_string(x), {x});
    if (position[x] != Subgroup::kNone)
      throw Error(Errc::InvalidSubgroup, "duplicate member " + std::to_string(x), {x});
    position[x] = k;
  }
  if (members.empty() || position[g.identity()] == Subgroup::kNone)
    throw Error(Errc::InvalidSubgroup, "identity is not a member", {g.identity()});
  for (Index x : members) {
    if (position[g.inverse(x)] == Subgroup::kNone)
      throw Error(Errc::InvalidSubgroup, "not closed under inverses", {x});
    for (Index y : members)
      if (position[g.mul(x, y)] == Subgroup::kNone)
        throw Error(Errc::InvalidSubgroup, "not closed under products", {x, y});
  }
  std::vector<std::string> names;
  for (Index x : members) names.push_back(g.element_name(x));
  const std::size_t m = members.size();
  std::vector<Index> table(m * m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) table[i * m + j] = position[g.mul(members[i], members[j])];
  if (name.empty()) name = g.name() + "_H";
  FiniteGroup local = build_group_from_table(std::move(name), std::move(names), std::move(table));
  return Subgroup(std::move(members), std::move(local), std::move(position));
}

inline Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Index> all(g.order());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  return make_subgroup(g, std::move(all));
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  return make_subgroup(g, {g.identity()});
}

/// Smallest subgroup containing `generators`.
inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Index>& generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<Index> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t k = 0; k < members.size(); ++k)
    for (Index s : generators) {
      const Index y = g.mul(members[k], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return make_subgroup(g, std::move(members));
}

/// Every subgroup of g, sorted by (order, member list). Found by closing
/// each known subgroup under one extra element until nothing new appears.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Index>> seen;
  std::vector<std::vector<Index>> queue{{g.identity()}};
  seen.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto current = queue[k];
    for (Index x = 0; x < g.order(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      auto gens = current;
      gens.push_back(x);
      auto members = generated_subgroup(g, gens).members();
      if (seen.insert(members).second) queue.push_back(std::move(members));
    }
  }
  std::sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subgroup> out;
  for (auto& members : queue) out.push_back(make_subgroup(g, std::move(members)));
  return out;
}

// ---------------------------------------------------------------------------
// Right cosets and transversals

/// Right cosets Ha as sorted index sets, ordered by smallest member.
inline std::vector<std::vector<Index>> right_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<bool> covered(g.order(), false);
  std::vector<std::vector<Index>> cosets;
  for (Index a = 0; a < g.order(); ++a) {
    if (covered[a]) continue;
    std::vector<Index> coset;
    for (Index x : h.members()) coset.push_back(g.mul(x, a));
    std::sort(coset.begin(), coset.end());
    for (Index y : coset) covered[y] = true;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

struct TransversalVerdict {
  bool ok = false;
  bool rt = false;   // every right coset meets M exactly once
  bool rcs = false;  // every x factors uniquely as alpha * a
  std::vector<Index> witness_coset;  // a coset met zero or several times
  std::size_t hits = 0;              // how often witness_coset meets M

  explicit operator bool() const noexcept { return ok; }
};

/// Decides whether `m` is a right transversal of `h` in `g` twice: once by
/// counting coset hits and once by exhaustive factorization. The two
/// answers must agree; a disagreement throws std::logic_error.
inline TransversalVerdict is_right_transversal(const FiniteGroup& g, const Subgroup& h,
                                               const std::vector<Index>& m) {
  {
    std::vector<bool> seen(g.order(), false);
    for (Index a : m) {
      if (a >= g.order())
        throw Error(Errc::IndexOutOfRange, "transversal member " + std::to_string(a), {a});
      if (seen[a])
        throw Error(Errc::InvalidTransversal, "duplicate transversal member " + std::to_string(a),
                    {a});
      seen[a] = true;
    }
  }
  TransversalVerdict v;
  v.rt = true;
  for (const auto& coset : right_cosets(g, h)) {
    std::size_t hits = 0;
    for (Index a : m)
      if (std::binary_search(coset.begin(), coset.end(), a)) ++hits;
    if (hits != 1) {
      v.rt = false;
      v.witness_coset = coset;
      v.hits = hits;
      break;
    }
  }

  std::vector<std::size_t> reps(g.order(), 0);
  for (Index alpha : h.members())
    for (Index a : m) ++reps[g.mul(alpha, a)];
  v.rcs = std::all_of(reps.begin(), reps.end(), [](std::size_t c) { return c == 1; });

  if (v.rt != v.rcs)
    throw std::logic_error("right transversal and right complementary set tests disagree");
  v.ok = v.rt;
  return v;
}

/// Unique factorization x = alpha * a. Element indices are parent-group
/// indices; the *_pos fields locate them in the subgroup and transversal.
struct Factorization {
  Index alpha;
  Index a;
  Index alpha_pos;
  Index a_pos;

  bool operator==(const Factorization&) const = default;
};

/// (G, H, M) with M a right transversal of H. The transversal keeps the
/// order it was given in; position k in that list is base index k of the
/// hypergroup derived from the triple.
class GroupTriple {
 public:
  const std::string& name() const noexcept { return name_; }
  const FiniteGroup& group() const noexcept { return group_; }
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  const std::vector<Index>& transversal() const noexcept { return transversal_; }

  const Factorization& factorize(Index x) const { return factors_.at(x); }

  std::optional<Index> transversal_position(Index x) const {
    auto it = std::find(transversal_.begin(), transversal_.end(), x);
    if (it == transversal_.end()) return std::nullopt;
    return static_cast<Index>(it - transversal_.begin());
  }

  GroupTriple renamed(std::string name) const {
    GroupTriple t = *this;
    t.name_ = std::move(name);
    return t;
  }

  /// Equality of the mathematical data; the label is ignored.
  bool same_triple(const GroupTriple& o) const {
    return group_ == o.group_ && subgroup_.members() == o.subgroup_.members() &&
           transversal_ == o.transversal_;
  }

 private:
  friend GroupTriple make_triple(std::string, FiniteGroup, std::vector<Index>,
                                 std::vector<Index>);

  GroupTriple(std::string name, FiniteGroup group, Subgroup subgroup,
              std::vector<Index> transversal, std::vector<Factorization> factors)
      : name_(std::move(name)),
        group_(std::move(group)),
        subgroup_(std::move(subgroup)),
        transversal_(std::move(transversal)),
        factors_(std::move(factors)) {}

  std::string name_;
  FiniteGroup group_;
  Subgroup subgroup_;
  std::vector<Index> transversal_;
  std::vector<Factorization> factors_;
};

inline GroupTriple make_triple(std::string name, FiniteGroup g, std::vector<Index> subgroup,
                               std::vector<Index> transversal) {
  Subgroup h = make_subgroup(g, std::move(subgroup), name + "_H");
  const auto verdict = is_right_transversal(g, h, transversal);
  if (!verdict)
    throw Error(Errc::InvalidTransversal,
                "coset {" + detail::join(verdict.witness_coset) + "} meets the transversal " +
                    std::to_string(verdict.hits) + " times",
                verdict.witness_coset);
  if (transversal.size() * h.order() != g.order())
    throw std::logic_error("|M| * |H| != |G| for a verified transversal");

  std::vector<Factorization> factors(g.order());
  for (Index p = 0; p < h.order(); ++p)
    for (Index q = 0; q < transversal.size(); ++q) {
      const Index alpha = h.member(p), a = transversal[q];
      factors[g.mul(alpha, a)] = {alpha, a, p, q};
    }
  return GroupTriple(std::move(name), std::move(g), std::move(h), std::move(transversal),
                     std::move(factors));
}

/// Number of right transversals, |H|^[G:H]. Throws TooLarge on overflow.
inline std::uint64_t count_transversals(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t index = g.order() / h.order();
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < index; ++k) {
    if (count > std::numeric_limits<std::uint64_t>::max() / h.order())
      throw Error(Errc::TooLarge, "transversal count overflows 64 bits");
    count *= h.order();
  }
  return count;
}

/// Visits every right transversal once, as a coset-major list: entry k
/// lies in the k-th coset of right_cosets(). Choices run odometer-style
/// with the last coset varying fastest. Stops after `limit` lists or when
/// the visitor returns false. Returns the number visited.
inline std::uint64_t for_each_transversal(
    const FiniteGroup& g, const Subgroup& h,
    const std::function<bool(const std::vector<Index>&)>& visit,
    std::optional<std::uint64_t> limit = std::nullopt) {
  const auto cosets = right_cosets(g, h);
  std::vector<std::size_t> choice(cosets.size(), 0);
  std::vector<Index> current(cosets.size());
  std::uint64_t visited = 0;
  while (!limit || visited < *limit) {
    for (std::size_t k = 0; k < cosets.size(); ++k) current[k] = cosets[k][choice[k]];
    ++visited;
    if (!visit(current)) break;
    std::size_t k = cosets.size();
    while (k > 0) {
      --k;
      if (++choice[k] < cosets[k].size()) break;
      choice[k] = 0;
      if (k == 0) return visited;
    }
    if (cosets.empty()) break;
  }
  return visited;
}

inline std::vector<std::vector<Index>> enumerate_transversals(
    const FiniteGroup& g, const Subgroup& h, std::optional<std::uint64_t> limit = std::nullopt) {
  std::vector<std::vector<Index>> out;
  for_each_transversal(
      g, h,
      [&](const std::vector<Index>& m) {
        out.push_back(m);
        return true;
      },
      limit);
  return out;
}

// ---------------------------------------------------------------------------
// Triple morphisms

/// A group homomorphism g with g(H) in H' and g(M) in M'.
struct TripleMorphism {
  std::string name;
  GroupTriple source;
  GroupTriple target;
  GroupHom map;
};

inline Verdict check_triple_morphism(const GroupHom& g, const GroupTriple& s,
                                     const GroupTriple& t) {
  if (!(g.source == s.group()) || !(g.target == t.group()))
    return Verdict::fail("homomorphism groups do not match the triples");
  if (auto hom = check_group_hom(g); !hom) return hom;
  for (Index x : s.subgroup().members())
    if (!t.subgroup().contains(g(x))) return Verdict::fail("subgroup element escapes", {x});
  for (Index a : s.transversal())
    if (!t.transversal_position(g(a))) return Verdict::fail("transversal element escapes", {a});
  return Verdict::pass();
}

inline Verdict check_triple_morphism(const TripleMorphism& f) {
  return check_triple_morphism(f.map, f.source, f.target);
}

inline TripleMorphism identity_triple_morphism(const GroupTriple& t) {
  return {"id:" + t.name(), t, t, identity_hom(t.group())};
}

/// Diagrammatic composite: `first` then `second`.
inline TripleMorphism compose(const TripleMorphism& first, const TripleMorphism& second) {
  if (!first.target.same_triple(second.source))
    throw Error(Errc::SourceTargetMismatch,
                "'" + first.name + "' does not end where '" + second.name + "' starts");
  return {first.name + ";" + second.name, first.source, second.target,
          compose(first.map, second.map)};
}

}  // namespace hgroup
