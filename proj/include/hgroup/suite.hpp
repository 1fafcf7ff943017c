#pragma once

#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hgroup/catalog.hpp"
#include "hgroup/equivalence.hpp"
#include "hgroup/exact_product.hpp"
#include "hgroup/hypergroup.hpp"
#include "hgroup/morphism.hpp"
#include "hgroup/standard_construction.hpp"
#include "hgroup/triple.hpp"

namespace hgroup {

struct SuiteLine {
  std::string item;
  std::string check;
  bool pass = true;
  std::string witness;
};

/// Aggregated result of an equivalence sweep, in catalog order.
class SuiteReport {
 public:
  void add(std::string item, std::string check, const Verdict& v) {
    lines_.push_back({std::move(item), std::move(check), v.ok, v.ok ? "" : v.describe()});
  }

  const std::vector<SuiteLine>& lines() const noexcept { return lines_; }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& l : lines_) n += !l.pass;
    return n;
  }
  bool all_pass() const { return failures() == 0; }

  /// Lines `<item-id> <check-id> PASS|FAIL [witness]` followed by a
  /// summary block with per-check counts.
  std::string to_text() const {
    std::ostringstream out;
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    for (const auto& l : lines_) {
      out << l.item << " " << l.check << (l.pass ? " PASS" : " FAIL");
      if (!l.pass && !l.witness.empty()) out << " " << l.witness;
      out << "\n";
      auto& c = counts[l.check];
      (l.pass ? c.first : c.second)++;
    }
    out << "# summary\n";
    for (const auto& [check, c] : counts)
      out << "check " << check << " pass " << c.first << " fail " << c.second << "\n";
    out << "total pass " << lines_.size() - failures() << " fail " << failures() << "\n";
    return out.str();
  }

 private:
  std::vector<SuiteLine> lines_;
};

namespace detail {

/// Runs `body`; an escaping exception becomes a failed verdict.
inline Verdict guarded(const std::function<Verdict()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return Verdict::fail(std::string("exception: ") + e.what());
  }
}

inline Verdict from_report(const AxiomReport& r) {
  for (std::size_t i = 0; i < kAxiomCount; ++i) {
    const auto& res = r[static_cast<Axiom>(i)];
    if (!res.failed()) continue;
    Verdict v = Verdict::fail(to_string(static_cast<Axiom>(i)));
    if (!res.witnesses.empty()) v.witness = res.witnesses.front().tuple;
    return v;
  }
  return Verdict::pass();
}

inline bool same_morphism(const HypergroupMorphism& f, const HypergroupMorphism& g) {
  return f.source == g.source && f.target == g.target && f.f0 == g.f0 && f.f1 == g.f1;
}

}  // namespace detail

inline void run_triple_checks(const GroupTriple& t, SuiteReport& report) {
  const auto& id = t.name();
  report.add(id, "standard-construction", detail::guarded([&] {
               auto r = full_report(standard_tables(t));
               return detail::from_report(r);
             }));
  report.add(id, "division-oracle", detail::guarded([&] {
               const auto k = standard_construction(t);
               for (Index b = 0; b < k.base_size(); ++b)
                 for (Index a = 0; a < k.base_size(); ++a)
                   if (division_oracle(t, b, a) != k.left_divide(b, a))
                     return Verdict::fail("oracle differs from left division", {b, a});
               return Verdict::pass();
             }));
  report.add(id, "counit", detail::guarded([&] {
               counit_iso(t);
               return Verdict::pass();
             }));
}

inline void run_hypergroup_checks(const HypergroupData& d, SuiteReport& report) {
  const auto& id = d.name;
  std::optional<Hypergroup> k;
  report.add(id, "validate", detail::guarded([&] {
               auto v = validate_hypergroup(d);
               k = std::move(v.hypergroup);
               return detail::from_report(v.report);
             }));
  if (!k) return;
  report.add(id, "derived", detail::guarded([&] { return detail::from_report(verify_derived(*k)); }));
  report.add(id, "exact-product", detail::guarded([&] {
               const auto e = exact_product(*k);
               const auto n = e.group().order();
               for (Index x = 0; x < n; ++x)
                 for (Index y = 0; y < n; ++y)
                   if (exact_left_divide(e, x, y) != exact_left_divide_scan(e, x, y))
                     return Verdict::fail("closed-form division differs from scan", {x, y});
               return Verdict::pass();
             }));
  report.add(id, "T-object", detail::guarded([&] {
               functor_T_on_object(*k);
               return Verdict::pass();
             }));
  report.add(id, "unit", detail::guarded([&] {
               unit_iso(*k);
               return Verdict::pass();
             }));
}

inline void run_triple_morphism_checks(const TripleMorphism& g, SuiteReport& report) {
  const auto& id = g.name;
  report.add(id, "triple-morphism", detail::guarded([&] { return check_triple_morphism(g); }));
  report.add(id, "H-functor", detail::guarded([&] {
               return check_hyp_morphism(functor_H_on_morphism(g));
             }));
  report.add(id, "naturality-counit", detail::guarded([&] { return check_naturality_counit(g); }));
}

inline void run_hypergroup_morphism_checks(const HypergroupMorphism& f, SuiteReport& report) {
  const auto& id = f.name;
  report.add(id, "hyp-morphism", detail::guarded([&] { return check_hyp_morphism(f); }));
  report.add(id, "T-functor", detail::guarded([&] {
               return check_triple_morphism(functor_T_on_morphism(f));
             }));
  report.add(id, "naturality-unit", detail::guarded([&] { return check_naturality_unit(f); }));
}

/// Functor laws on the morphism catalog: H and T send identities to
/// identities and composable pairs to the composite of their images.
inline void run_functor_laws(const Catalog& c, SuiteReport& report) {
  for (const auto& g1 : c.triple_morphisms)
    for (const auto& g2 : c.triple_morphisms) {
      if (!g1.target.same_triple(g2.source)) continue;
      report.add(g1.name + "*" + g2.name, "H-composition", detail::guarded([&] {
                   const auto lhs = functor_H_on_morphism(compose(g1, g2));
                   const auto rhs = compose(functor_H_on_morphism(g1), functor_H_on_morphism(g2));
                   return detail::same_morphism(lhs, rhs) ? Verdict::pass()
                                                          : Verdict::fail("H(g;g') != H(g);H(g')");
                 }));
    }
  for (const auto& f1 : c.hypergroup_morphisms)
    for (const auto& f2 : c.hypergroup_morphisms) {
      if (!(f1.target == f2.source)) continue;
      report.add(f1.name + "*" + f2.name, "T-composition", detail::guarded([&] {
                   const auto lhs = functor_T_on_morphism(compose(f1, f2));
                   const auto rhs = compose(functor_T_on_morphism(f1), functor_T_on_morphism(f2));
                   return lhs.map == rhs.map ? Verdict::pass()
                                             : Verdict::fail("T(f;f') != T(f);T(f')");
                 }));
    }
  for (const auto& t : c.triples) {
    if (t.group().order() > 8) continue;
    report.add(t.name(), "H-identity", detail::guarded([&] {
                 return detail::same_morphism(functor_H_on_morphism(identity_triple_morphism(t)),
                                              identity_morphism(standard_construction(t)))
                            ? Verdict::pass()
                            : Verdict::fail("H(id) != id");
               }));
  }
}

/// Runs every check on every catalog item; never stops early.
inline SuiteReport equivalence_suite(const Catalog& c) {
  SuiteReport report;
  for (const auto& t : c.triples) run_triple_checks(t, report);
  for (const auto& d : c.hypergroups) run_hypergroup_checks(d, report);
  for (const auto& g : c.triple_morphisms) run_triple_morphism_checks(g, report);
  for (const auto& f : c.hypergroup_morphisms) run_hypergroup_morphism_checks(f, report);
  run_functor_laws(c, report);
  return report;
}

}  // namespace hgroup
