#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgroup/error.hpp"
#include "hgroup/finite_group.hpp"
#include "hgroup/hypergroup.hpp"
#include "hgroup/morphism.hpp"
#include "hgroup/triple.hpp"

namespace hgroup {

/// Two-letter word alpha a, stored as group index alpha and base index a.
struct Word {
  Index alpha;
  Index a;
  bool operator==(const Word&) const = default;
};

/// alpha a * beta b = (alpha . ^a beta . (a^beta, b)) [a^beta, b]
inline Word word_product(const Hypergroup& k, Word x, Word y) {
  const auto& g = k.group();
  const Index ab = k.phi(x.a, y.alpha);
  return {g.mul(g.mul(x.alpha, k.psi(x.a, y.alpha)), k.lam(ab, y.a)), k.xi(ab, y.a)};
}

/// The exact product of a hypergroup: the group on all words alpha a,
/// encoded as alpha * |M| + a, together with the embeddings
///   alpha -> (alpha . theta) o     and     a -> epsilon a.
class ExactProductGroup {
 public:
  const Hypergroup& base() const noexcept { return base_; }
  const FiniteGroup& group() const noexcept { return group_; }

  Index encode(Word w) const noexcept { return w.alpha * base_.base_size() + w.a; }
  Word decode(Index w) const noexcept { return {w / base_.base_size(), w % base_.base_size()}; }

  Index identity_word() const noexcept { return encode({base_.theta(), base_.o()}); }
  Index h_bar(Index alpha) const {
    return encode({base_.group().mul(alpha, base_.theta()), base_.o()});
  }
  Index m_bar(Index a) const { return encode({base_.epsilon(), a}); }

  std::vector<Index> h_bar_members() const {
    std::vector<Index> out(base_.group_order());
    for (Index al = 0; al < out.size(); ++al) out[al] = h_bar(al);
    return out;
  }
  std::vector<Index> m_bar_members() const {
    std::vector<Index> out(base_.base_size());
    for (Index a = 0; a < out.size(); ++a) out[a] = m_bar(a);
    return out;
  }

 private:
  friend ExactProductGroup exact_product(const Hypergroup&);

  ExactProductGroup(Hypergroup base, FiniteGroup group)
      : base_(std::move(base)), group_(std::move(group)) {}

  Hypergroup base_;
  FiniteGroup group_;
};

/// Builds the product table from the word formula and re-validates it as a
/// group from scratch. A failure is a bug and throws std::logic_error with
/// the witnessing tuple; so does an identity other than theta o.
inline ExactProductGroup exact_product(const Hypergroup& k) {
  const std::size_t m = k.base_size(), h = k.group_order(), n = m * h;
  std::vector<std::string> names(n);
  std::vector<Index> table(n * n);
  for (Index x = 0; x < n; ++x) {
    const Word wx{x / m, x % m};
    names[x] = k.group().element_name(wx.alpha) + "|" + k.base_names()[wx.a];
    for (Index y = 0; y < n; ++y) {
      const Word p = word_product(k, wx, {y / m, y % m});
      table[x * n + y] = p.alpha * m + p.a;
    }
  }
  FiniteGroup g = [&] {
    try {
      return build_group_from_table(k.name() + "_G", std::move(names), std::move(table));
    } catch (const Error& e) {
      throw std::logic_error("exact product of '" + k.name() + "' is not a group: " + e.what() +
                             " witness (" + detail::join(e.witness(), ",") + ")");
    }
  }();
  ExactProductGroup product(k, std::move(g));
  if (product.group().identity() != product.identity_word())
    throw std::logic_error("exact product identity is not theta o for '" + k.name() + "'");
  return product;
}

/// Closed-form solution xi x of  xi x * alpha a = beta b:
///   x = (b/a)^{alpha^{-1}},   xi = beta . (^x alpha . (b/a, a))^{-1}.
/// The result is checked against the product table.
inline Index exact_left_divide(const ExactProductGroup& e, Index target, Index right) {
  const auto& k = e.base();
  const auto& g = k.group();
  const Word bb = e.decode(target), aa = e.decode(right);
  const Index ba = k.left_divide(bb.a, aa.a);
  const Index x = k.phi(ba, g.inverse(aa.alpha));
  const Index xi = g.mul(bb.alpha, g.inverse(g.mul(k.psi(x, aa.alpha), k.lam(ba, aa.a))));
  const Index w = e.encode({xi, x});
  if (e.group().mul(w, right) != target)
    throw std::logic_error("closed-form left division fails at (" + std::to_string(target) + "," +
                           std::to_string(right) + ")");
  return w;
}

/// Left division by scanning the product table.
inline Index exact_left_divide_scan(const ExactProductGroup& e, Index target, Index right) {
  for (Index w = 0; w < e.group().order(); ++w)
    if (e.group().mul(w, right) == target) return w;
  throw std::logic_error("no left quotient in the product table");
}

/// Re-derives associativity of the word product through the intermediate
/// closed forms of the expansion of alpha a (beta b gamma c):
///   R0  alpha . ^a delta . (a^delta, [b^gamma, c])      delta = beta . ^b gamma . (b^gamma, c)
///   R1  A1 applied to ^a delta
///   R2  A3 applied to ^{a^beta}(^b gamma)
///   R3  A5 collapses the tail to ([a^{beta . ^b gamma}, b^gamma], c)
///   L   A2 turns that into the H-letter of (alpha a beta b) gamma c
/// and compares the M-letters [[a^beta, b]^gamma, c] and [a^delta, [b^gamma, c]].
/// Every step must match for all triples of words; the witness is
/// (alpha, a, beta, b, gamma, c) with the failing step in `what`.
inline Verdict verify_associativity_chain(const Hypergroup& k) {
  const auto& g = k.group();
  auto mul = [&](std::initializer_list<Index> xs) {
    Index r = g.identity();
    for (Index x : xs) r = g.mul(r, x);
    return r;
  };
  const std::size_t m = k.base_size(), h = k.group_order();
  for (Index al = 0; al < h; ++al)
    for (Index a = 0; a < m; ++a)
      for (Index be = 0; be < h; ++be)
        for (Index b = 0; b < m; ++b)
          for (Index ga = 0; ga < h; ++ga)
            for (Index c = 0; c < m; ++c) {
              const Index bg = k.phi(b, ga), bgc = k.xi(bg, c), lbgc = k.lam(bg, c);
              const Index psi_bg = k.psi(b, ga);
              const Index delta = mul({be, psi_bg, lbgc});
              const Index a_be = k.phi(a, be);
              const Index a_be_psi = k.phi(a, g.mul(be, psi_bg));
              const Index a_delta = k.phi(a, delta);
              const Index ab = k.xi(a_be, b);

              const Index r0 = mul({al, k.psi(a, delta), k.lam(a_delta, bgc)});
              const Index r1 = mul({al, k.psi(a, be), k.psi(a_be, psi_bg), k.psi(a_be_psi, lbgc),
                                    k.lam(a_delta, bgc)});
              const Index r2 = mul({al, k.psi(a, be), k.lam(a_be, b), k.psi(ab, ga),
                                    g.inverse(k.lam(k.phi(a_be, psi_bg), bg)),
                                    k.psi(a_be_psi, lbgc), k.lam(a_delta, bgc)});
              const Index r3 = mul({al, k.psi(a, be), k.lam(a_be, b), k.psi(ab, ga),
                                    k.lam(k.xi(a_be_psi, bg), c)});
              const Index l = mul({al, k.psi(a, be), k.lam(a_be, b), k.psi(ab, ga),
                                   k.lam(k.phi(ab, ga), c)});
              const Index lm = k.xi(k.phi(ab, ga), c);
              const Index rm = k.xi(a_delta, bgc);

              const std::vector<Index> at{al, a, be, b, ga, c};
              if (r0 != r1) return Verdict::fail("A1 step", at);
              if (r1 != r2) return Verdict::fail("A3 step", at);
              if (r2 != r3) return Verdict::fail("A5 step", at);
              if (r3 != l) return Verdict::fail("A2 step", at);
              if (lm != rm) return Verdict::fail("A2/A4 base letter", at);

              const Word left = word_product(k, word_product(k, {al, a}, {be, b}), {ga, c});
              const Word right = word_product(k, {al, a}, word_product(k, {be, b}, {ga, c}));
              if (!(left == Word{l, lm}) || !(right == Word{r0, rm}))
                return Verdict::fail("closed form differs from word product", at);
            }
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// The functor T

/// (G-bar, H-bar, M-bar) built on an exact product. H-bar is listed in the
/// order alpha -> (alpha . theta) o and M-bar in the order a -> epsilon a,
/// so local indices and positions coincide with those of the hypergroup.
inline GroupTriple functor_T_on_object(const ExactProductGroup& e) {
  const auto& k = e.base();
  const GroupHom embed{k.group(), e.group(), e.h_bar_members()};
  if (auto v = check_group_hom(embed); !v)
    throw std::logic_error("alpha -> (alpha theta) o is not a homomorphism: " + v.describe());
  if (std::set<Index>(embed.mapping.begin(), embed.mapping.end()).size() != embed.mapping.size())
    throw std::logic_error("alpha -> (alpha theta) o is not injective");
  return make_triple(k.name(), e.group(), e.h_bar_members(), e.m_bar_members());
}

inline GroupTriple functor_T_on_object(const Hypergroup& k) {
  return functor_T_on_object(exact_product(k));
}

/// The functor T on morphisms: g-bar(alpha a) = f0(alpha) f1(a).
inline TripleMorphism functor_T_on_morphism(const HypergroupMorphism& f) {
  if (auto v = check_hyp_morphism(f); !v)
    throw Error(Errc::NotAHypergroupMorphism, v.describe(), v.witness);
  const auto es = exact_product(f.source);
  const auto et = exact_product(f.target);
  std::vector<Index> mapping(es.group().order());
  for (Index w = 0; w < mapping.size(); ++w) {
    const Word x = es.decode(w);
    mapping[w] = et.encode({f.f0[x.alpha], f.f1[x.a]});
  }
  TripleMorphism out{"T(" + f.name + ")", functor_T_on_object(es), functor_T_on_object(et),
                     GroupHom{es.group(), et.group(), std::move(mapping)}};
  if (auto v = check_triple_morphism(out); !v)
    throw std::logic_error("T(" + f.name + ") is not a triple morphism: " + v.describe());
  return out;
}

}  // namespace hgroup
