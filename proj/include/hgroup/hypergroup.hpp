#pragma once

#include <array>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hgroup/error.hpp"
#include "hgroup/finite_group.hpp"

namespace hgroup {

/// Raw, unvalidated structure tables of a hypergroup over a group.
///
/// Base elements are indexed 0..m-1, group elements by their index in
/// `group`. All four tables are row-major with the first argument as row:
///   phi[a*h + alpha] = a^alpha        (base index)
///   psi[a*h + alpha] = ^a alpha       (group index)
///   xi [a*m + b]     = [a, b]         (base index)
///   lam[a*m + b]     = (a, b)         (group index)
struct HypergroupData {
  std::string name;
  std::vector<std::string> base_names;
  FiniteGroup group;
  std::vector<Index> phi;
  std::vector<Index> psi;
  std::vector<Index> xi;
  std::vector<Index> lam;

  std::size_t base_size() const noexcept { return base_names.size(); }
  bool operator==(const HypergroupData&) const = default;
};

// ---------------------------------------------------------------------------
// Axiom report

enum class Axiom {
  P1i, P1ii, P2i, P2ii, P3,
  A1, A2, A3, A4, A5,
  A6, A7, A8, A9, A10, A11,
};

inline constexpr std::size_t kAxiomCount = 16;

inline constexpr std::array<Axiom, 10> kDefiningAxioms = {
    Axiom::P1i, Axiom::P1ii, Axiom::P2i, Axiom::P2ii, Axiom::P3,
    Axiom::A1,  Axiom::A2,   Axiom::A3,  Axiom::A4,   Axiom::A5};

inline constexpr std::array<Axiom, 6> kDerivedAxioms = {Axiom::A6, Axiom::A7, Axiom::A8,
                                                        Axiom::A9, Axiom::A10, Axiom::A11};

inline const char* to_string(Axiom a) {
  static constexpr const char* names[kAxiomCount] = {
      "P1i", "P1ii", "P2i", "P2ii", "P3", "A1", "A2",  "A3",
      "A4",  "A5",   "A6",  "A7",   "A8", "A9", "A10", "A11"};
  return names[static_cast<std::size_t>(a)];
}

/// One violated instance: the argument tuple and both evaluated sides.
struct Violation {
  std::vector<Index> tuple;
  Index lhs = 0;
  Index rhs = 0;
  std::string note;
};

struct AxiomResult {
  enum class Status { NotEvaluated, Pass, Fail };

  Status status = Status::NotEvaluated;
  std::size_t tuples_checked = 0;
  std::size_t failures = 0;
  /// First kMaxWitnesses violations in lexicographic tuple order.
  std::vector<Violation> witnesses;

  static constexpr std::size_t kMaxWitnesses = 8;

  bool passed() const noexcept { return status == Status::Pass; }
  bool failed() const noexcept { return status == Status::Fail; }
};

class AxiomReport {
 public:
  const AxiomResult& operator[](Axiom a) const { return results_[static_cast<std::size_t>(a)]; }
  AxiomResult& operator[](Axiom a) { return results_[static_cast<std::size_t>(a)]; }

  bool passed(Axiom a) const { return (*this)[a].passed(); }
  bool evaluated(Axiom a) const {
    return (*this)[a].status != AxiomResult::Status::NotEvaluated;
  }

  template <std::size_t N>
  bool all_passed(const std::array<Axiom, N>& axioms) const {
    for (Axiom a : axioms)
      if (!passed(a)) return false;
    return true;
  }

  /// True when something was evaluated and nothing failed.
  bool all_passed() const {
    bool any = false;
    for (const auto& r : results_) {
      if (r.failed()) return false;
      any = any || r.passed();
    }
    return any;
  }

  std::vector<Axiom> failed_axioms() const {
    std::vector<Axiom> out;
    for (std::size_t i = 0; i < kAxiomCount; ++i)
      if (results_[i].failed()) out.push_back(static_cast<Axiom>(i));
    return out;
  }

  /// Copies every evaluated entry of `other` into this report.
  void merge(const AxiomReport& other) {
    for (std::size_t i = 0; i < kAxiomCount; ++i)
      if (other.results_[i].status != AxiomResult::Status::NotEvaluated)
        results_[i] = other.results_[i];
  }

  /// One line per evaluated axiom: `<axiom> PASS|FAIL <tuples> [witness]`.
  std::string to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < kAxiomCount; ++i) {
      const auto& r = results_[i];
      if (r.status == AxiomResult::Status::NotEvaluated) continue;
      out << to_string(static_cast<Axiom>(i)) << (r.passed() ? " PASS " : " FAIL ")
          << r.tuples_checked;
      if (r.failed()) {
        out << " failures=" << r.failures;
        if (!r.witnesses.empty()) {
          const auto& w = r.witnesses.front();
          out << " tuple=(" << detail::join(w.tuple, ",") << ") lhs=" << w.lhs
              << " rhs=" << w.rhs;
          if (!w.note.empty()) out << " " << w.note;
        }
      }
      out << "\n";
    }
    return out.str();
  }

 private:
  std::array<AxiomResult, kAxiomCount> results_{};
};

namespace detail {

/// Accumulates one axiom's sweep into a report entry.
class AxiomSweep {
 public:
  AxiomSweep(AxiomReport& report, Axiom axiom) : result_(report[axiom]) {
    result_ = AxiomResult{};
  }
  ~AxiomSweep() {
    result_.status = result_.failures ? AxiomResult::Status::Fail : AxiomResult::Status::Pass;
  }
  AxiomSweep(const AxiomSweep&) = delete;
  AxiomSweep& operator=(const AxiomSweep&) = delete;

  void expect(Index lhs, Index rhs, std::initializer_list<Index> tuple) {
    ++result_.tuples_checked;
    if (lhs == rhs) return;
    fail(lhs, rhs, tuple, {});
  }

  void fail(Index lhs, Index rhs, std::initializer_list<Index> tuple, std::string note) {
    ++result_.failures;
    if (result_.witnesses.size() < AxiomResult::kMaxWitnesses)
      result_.witnesses.push_back({std::vector<Index>(tuple), lhs, rhs, std::move(note)});
  }

 private:
  AxiomResult& result_;
};

/// Read-only view with named accessors over the four tables.
struct TableView {
  const HypergroupData& d;
  std::size_t m = d.base_size();
  std::size_t h = d.group.order();

  Index phi(Index a, Index alpha) const { return d.phi[a * h + alpha]; }
  Index psi(Index a, Index alpha) const { return d.psi[a * h + alpha]; }
  Index xi(Index a, Index b) const { return d.xi[a * m + b]; }
  Index lam(Index a, Index b) const { return d.lam[a * m + b]; }
  Index mul(Index x, Index y) const { return d.group.mul(x, y); }
  Index inv(Index x) const { return d.group.inverse(x); }
  Index eps() const { return d.group.identity(); }
};

inline void check_shape(const HypergroupData& d) {
  const std::size_t m = d.base_size(), h = d.group.order();
  auto expect_size = [&](const char* table, const std::vector<Index>& v, std::size_t n) {
    if (v.size() != n)
      throw Error(Errc::ShapeMismatch, std::string(table) + " table has " +
                                           std::to_string(v.size()) + " cells, expected " +
                                           std::to_string(n));
  };
  if (m == 0) throw Error(Errc::ShapeMismatch, "empty base set");
  for (Index i = 0; i < m; ++i) {
    const auto& n = d.base_names[i];
    if (n.empty() || n.find_first_of(" \t\r\n#") != std::string::npos)
      throw Error(Errc::ShapeMismatch, "invalid base name '" + n + "'");
    for (Index j = 0; j < i; ++j)
      if (d.base_names[j] == n) throw Error(Errc::ShapeMismatch, "duplicate base name '" + n + "'");
  }
  expect_size("phi", d.phi, m * h);
  expect_size("psi", d.psi, m * h);
  expect_size("xi", d.xi, m * m);
  expect_size("lambda", d.lam, m * m);
  auto in_range = [&](const char* table, const std::vector<Index>& v, std::size_t bound,
                      std::size_t cols) {
    for (Index k = 0; k < v.size(); ++k)
      if (v[k] >= bound)
        throw Error(Errc::IndexOutOfRange,
                    std::string(table) + " entry " + std::to_string(v[k]) + " at (" +
                        std::to_string(k / cols) + "," + std::to_string(k % cols) + ")",
                    {k / cols, k % cols});
  };
  in_range("phi", d.phi, m, h);
  in_range("psi", d.psi, h, h);
  in_range("xi", d.xi, m, m);
  in_range("lambda", d.lam, h, m);
}

/// All x with [x, a] = a.
inline std::vector<Index> left_neutral_candidates(const TableView& t) {
  std::vector<Index> out;
  for (Index x = 0; x < t.m; ++x) {
    bool neutral = true;
    for (Index a = 0; a < t.m && neutral; ++a) neutral = t.xi(x, a) == a;
    if (neutral) out.push_back(x);
  }
  return out;
}

}  // namespace detail

/// Exhaustively evaluates P1-P3 and A1-A5 on raw tables. Every axiom is
/// evaluated even after earlier failures. When P1(ii) fails there is no
/// left neutral element and P3 is recorded as failed with a note.
inline AxiomReport check_defining_axioms(const HypergroupData& d) {
  detail::check_shape(d);
  const detail::TableView t{d};
  const std::size_t m = t.m, h = t.h;
  AxiomReport report;

  {
    detail::AxiomSweep s(report, Axiom::P1i);
    for (Index a = 0; a < m; ++a) {
      std::vector<std::size_t> solutions(m, 0);
      for (Index x = 0; x < m; ++x) ++solutions[t.xi(x, a)];
      for (Index b = 0; b < m; ++b) s.expect(solutions[b], 1, {a, b});
    }
  }
  const auto neutrals = detail::left_neutral_candidates(t);
  {
    detail::AxiomSweep s(report, Axiom::P1ii);
    if (neutrals.empty())
      s.fail(0, 1, {}, "no left neutral element");
    else
      s.expect(neutrals.front(), neutrals.front(), {neutrals.front()});
  }
  {
    detail::AxiomSweep s(report, Axiom::P2i);
    for (Index a = 0; a < m; ++a)
      for (Index al = 0; al < h; ++al)
        for (Index be = 0; be < h; ++be)
          s.expect(t.phi(t.phi(a, al), be), t.phi(a, t.mul(al, be)), {a, al, be});
  }
  {
    detail::AxiomSweep s(report, Axiom::P2ii);
    for (Index a = 0; a < m; ++a) s.expect(t.phi(a, t.eps()), a, {a});
  }
  {
    detail::AxiomSweep s(report, Axiom::P3);
    if (neutrals.empty()) {
      s.fail(0, 1, {}, "undefined without a left neutral element");
    } else {
      const Index o = neutrals.front();
      std::vector<bool> hit(h, false);
      for (Index al = 0; al < h; ++al) hit[t.psi(o, al)] = true;
      for (Index be = 0; be < h; ++be) s.expect(hit[be], 1, {be});
    }
  }
  {
    // ^a(alpha beta) = ^a alpha . ^{a^alpha} beta
    detail::AxiomSweep s(report, Axiom::A1);
    for (Index a = 0; a < m; ++a)
      for (Index al = 0; al < h; ++al)
        for (Index be = 0; be < h; ++be)
          s.expect(t.psi(a, t.mul(al, be)), t.mul(t.psi(a, al), t.psi(t.phi(a, al), be)),
                   {a, al, be});
  }
  {
    // [a,b]^alpha = [a^{^b alpha}, b^alpha]
    detail::AxiomSweep s(report, Axiom::A2);
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b)
        for (Index al = 0; al < h; ++al)
          s.expect(t.phi(t.xi(a, b), al), t.xi(t.phi(a, t.psi(b, al)), t.phi(b, al)),
                   {a, b, al});
  }
  {
    // (a,b) . ^{[a,b]} alpha = ^a(^b alpha) . (a^{^b alpha}, b^alpha)
    detail::AxiomSweep s(report, Axiom::A3);
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b)
        for (Index al = 0; al < h; ++al) {
          const Index bal = t.psi(b, al);
          s.expect(t.mul(t.lam(a, b), t.psi(t.xi(a, b), al)),
                   t.mul(t.psi(a, bal), t.lam(t.phi(a, bal), t.phi(b, al))), {a, b, al});
        }
  }
  {
    // [[a,b],c] = [a^{(b,c)}, [b,c]]
    detail::AxiomSweep s(report, Axiom::A4);
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b)
        for (Index c = 0; c < m; ++c)
          s.expect(t.xi(t.xi(a, b), c), t.xi(t.phi(a, t.lam(b, c)), t.xi(b, c)), {a, b, c});
  }
  {
    // (a,b) . ([a,b],c) = ^a(b,c) . (a^{(b,c)}, [b,c])
    detail::AxiomSweep s(report, Axiom::A5);
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b)
        for (Index c = 0; c < m; ++c) {
          const Index bc = t.lam(b, c);
          s.expect(t.mul(t.lam(a, b), t.lam(t.xi(a, b), c)),
                   t.mul(t.psi(a, bc), t.lam(t.phi(a, bc), t.xi(b, c))), {a, b, c});
        }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Validated hypergroup

struct Validation;

class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, AxiomReport report, std::vector<Index> witness = {})
      : Error(Errc::ValidationError, what, std::move(witness)), report_(std::move(report)) {}
  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

/// A hypergroup over a group: tables that passed P1-P4, together with the
/// left neutral element o and theta = (o, o)^{-1}.
class Hypergroup {
 public:
  const HypergroupData& data() const noexcept { return data_; }
  const std::string& name() const noexcept { return data_.name; }
  const std::vector<std::string>& base_names() const noexcept { return data_.base_names; }
  const FiniteGroup& group() const noexcept { return data_.group; }
  std::size_t base_size() const noexcept { return data_.base_size(); }
  std::size_t group_order() const noexcept { return data_.group.order(); }

  Index phi(Index a, Index alpha) const { return data_.phi[a * group_order() + alpha]; }
  Index psi(Index a, Index alpha) const { return data_.psi[a * group_order() + alpha]; }
  Index xi(Index a, Index b) const { return data_.xi[a * base_size() + b]; }
  Index lam(Index a, Index b) const { return data_.lam[a * base_size() + b]; }

  /// Left neutral element of xi.
  Index o() const noexcept { return o_; }
  Index epsilon() const noexcept { return data_.group.identity(); }
  Index theta() const noexcept { return theta_; }

  /// Unique x with [x, a] = b.
  Index left_divide(Index b, Index a) const { return division_[b * base_size() + a]; }

  Hypergroup renamed(std::string name) const {
    Hypergroup k = *this;
    k.data_.name = std::move(name);
    return k;
  }

  bool operator==(const Hypergroup& other) const { return data_ == other.data_; }

 private:
  friend Validation validate_hypergroup(HypergroupData);

  explicit Hypergroup(HypergroupData data) : data_(std::move(data)) {
    const std::size_t m = base_size();
    o_ = detail::left_neutral_candidates(detail::TableView{data_}).front();
    theta_ = data_.group.inverse(lam(o_, o_));
    division_.resize(m * m);
    for (Index x = 0; x < m; ++x)
      for (Index a = 0; a < m; ++a) division_[xi(x, a) * m + a] = x;
  }

  HypergroupData data_;
  Index o_ = 0;
  Index theta_ = 0;
  std::vector<Index> division_;
};

/// Report plus the hypergroup when all of P1-P4 passed.
struct Validation {
  AxiomReport report;
  std::optional<Hypergroup> hypergroup;
};

/// Checks P1-P4 exhaustively. Shape errors throw; axiom failures land in
/// the report and leave `hypergroup` empty.
inline Validation validate_hypergroup(HypergroupData data) {
  Validation v{check_defining_axioms(data), std::nullopt};
  if (v.report.all_passed(kDefiningAxioms)) v.hypergroup = Hypergroup(std::move(data));
  return v;
}

/// validate_hypergroup() that throws ValidationError on any failure.
inline Hypergroup make_hypergroup(HypergroupData data) {
  const std::string name = data.name;
  auto v = validate_hypergroup(std::move(data));
  if (!v.hypergroup) {
    std::string failed;
    for (Axiom a : v.report.failed_axioms()) failed += std::string(" ") + to_string(a);
    throw ValidationError("hypergroup '" + name + "' fails" + failed, std::move(v.report));
  }
  return std::move(*v.hypergroup);
}

inline Index left_neutral(const Hypergroup& k) { return k.o(); }
inline Index theta(const Hypergroup& k) { return k.theta(); }

/// Left division by scanning column a of xi; independent of the cached
/// division table in Hypergroup.
inline Index left_divide_scan(const Hypergroup& k, Index b, Index a) {
  for (Index x = 0; x < k.base_size(); ++x)
    if (k.xi(x, a) == b) return x;
  throw std::logic_error("column of xi is not a permutation");
}

inline Index left_divide(const Hypergroup& k, Index b, Index a) { return k.left_divide(b, a); }

/// Evaluates the derived identities A6-A11 for all arguments. On a
/// validated hypergroup all six hold.
inline AxiomReport verify_derived(const Hypergroup& k) {
  const std::size_t m = k.base_size(), h = k.group_order();
  const auto& g = k.group();
  const Index o = k.o(), eps = k.epsilon(), th = k.theta(), th_inv = g.inverse(th);
  AxiomReport report;
  {
    detail::AxiomSweep s(report, Axiom::A6);
    for (Index a = 0; a < m; ++a) s.expect(k.psi(a, eps), eps, {a});
  }
  {
    detail::AxiomSweep s(report, Axiom::A7);
    for (Index al = 0; al < h; ++al) s.expect(k.phi(o, al), o, {al});
  }
  {
    detail::AxiomSweep s(report, Axiom::A8);
    for (Index al = 0; al < h; ++al)
      s.expect(k.psi(o, al), g.mul(g.mul(th_inv, al), th), {al});
  }
  {
    detail::AxiomSweep s(report, Axiom::A9);
    for (Index a = 0; a < m; ++a) s.expect(k.lam(o, a), th_inv, {a});
  }
  {
    detail::AxiomSweep s(report, Axiom::A10);
    for (Index a = 0; a < m; ++a) s.expect(k.xi(a, o), k.phi(a, th_inv), {a});
  }
  {
    detail::AxiomSweep s(report, Axiom::A11);
    for (Index a = 0; a < m; ++a) s.expect(k.lam(a, o), k.psi(a, th_inv), {a});
  }
  return report;
}

/// Defining plus derived axioms in one report.
inline AxiomReport full_report(const HypergroupData& data) {
  auto v = validate_hypergroup(data);
  if (v.hypergroup) v.report.merge(verify_derived(*v.hypergroup));
  return v.report;
}

}  // namespace hgroup
