#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hgroup/catalog.hpp"
#include "hgroup/error.hpp"
#include "hgroup/finite_group.hpp"
#include "hgroup/hypergroup.hpp"
#include "hgroup/morphism.hpp"
#include "hgroup/triple.hpp"

namespace hgroup {

enum class DocumentKind { Group, Triple, Hypergroup };

inline const char* to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Group: return "group";
    case DocumentKind::Triple: return "triple";
    case DocumentKind::Hypergroup: return "hypergroup";
  }
  return "?";
}

/// A parsed and validated file, or a builtin addressed as "builtin:<name>".
struct Document {
  DocumentKind kind;
  Object payload;
  std::string source;
};

inline DocumentKind kind_of(const Object& o) {
  return static_cast<DocumentKind>(o.index());
}

/// Structural equality of payloads; triple labels are compared too.
inline bool same_payload(const Object& a, const Object& b) {
  if (a.index() != b.index()) return false;
  if (auto* t = std::get_if<GroupTriple>(&a)) {
    const auto& u = std::get<GroupTriple>(b);
    return t->name() == u.name() && t->same_triple(u);
  }
  if (auto* g = std::get_if<FiniteGroup>(&a)) return *g == std::get<FiniteGroup>(b);
  return std::get<Hypergroup>(a) == std::get<Hypergroup>(b);
}

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Splits into whitespace-separated tokens, dropping comments and blank lines.
inline std::vector<Line> lex(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const noexcept { return pos_ >= lines_.size(); }
  std::size_t line_number() const noexcept {
    if (lines_.empty()) return 1;
    return done() ? lines_.back().number : lines_[pos_].number;
  }

  const Line& next(std::string_view expecting) {
    if (done()) throw SyntaxError(line_number(), "unexpected end of input, expected " + std::string(expecting));
    return lines_[pos_++];
  }

  const Line& peek() const { return lines_.at(pos_); }

  /// Consumes a line starting with `keyword`; returns the remaining tokens.
  std::vector<std::string> keyword(std::string_view kw) {
    const Line& l = next(kw);
    if (l.tokens.front() != kw)
      throw SyntaxError(l.number, "expected '" + std::string(kw) + "', found '" + l.tokens.front() + "'");
    return {l.tokens.begin() + 1, l.tokens.end()};
  }

  std::string keyword_with_name(std::string_view kw) {
    const std::size_t at = line_number();
    auto rest = keyword(kw);
    if (rest.size() != 1) throw SyntaxError(at, std::string(kw) + " takes exactly one name");
    return rest.front();
  }

  void expect_bare(std::string_view kw) {
    const std::size_t at = line_number();
    if (!keyword(kw).empty()) throw SyntaxError(at, "'" + std::string(kw) + "' takes no arguments");
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

inline std::size_t parse_count(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw SyntaxError(line, "expected a non-negative integer, found '" + tok + "'");
  return v;
}

/// A decimal token below the element count is an index; anything else
/// must be an element name.
inline Index resolve(const std::string& tok, const std::vector<std::string>& names,
                     std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec == std::errc{} && p == tok.data() + tok.size() && v < names.size()) return v;
  for (Index i = 0; i < names.size(); ++i)
    if (names[i] == tok) return i;
  throw SyntaxError(line, "unknown element '" + tok + "'");
}

inline std::vector<Index> resolve_all(const std::vector<std::string>& toks,
                                      const std::vector<std::string>& names, std::size_t line) {
  std::vector<Index> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(resolve(t, names, line));
  return out;
}

/// Reads `rows` lines of exactly `cols` entries into a row-major table.
inline std::vector<Index> read_matrix(Reader& r, std::size_t rows, std::size_t cols,
                                      const std::vector<std::string>& names) {
  std::vector<Index> out;
  out.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Line& l = r.next("table row");
    if (l.tokens.size() != cols)
      throw SyntaxError(l.number, "row has " + std::to_string(l.tokens.size()) + " entries, expected " +
                                      std::to_string(cols));
    for (const auto& t : l.tokens) out.push_back(resolve(t, names, l.number));
  }
  return out;
}

/// Group-axiom and triple failures in a well-formed file are validation
/// errors, not syntax errors.
template <class F>
auto validating(std::size_t line, F&& build) {
  try {
    return build();
  } catch (const SyntaxError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError("block starting at line " + std::to_string(line) + ": " + e.what(),
                          AxiomReport{}, e.witness());
  }
}

inline FiniteGroup parse_group_block(Reader& r) {
  const std::size_t start = r.line_number();
  std::string name = r.keyword_with_name("group");
  const std::size_t order_line = r.line_number();
  auto order_toks = r.keyword("order");
  if (order_toks.size() != 1) throw SyntaxError(order_line, "order takes one integer");
  const std::size_t n = parse_count(order_toks.front(), order_line);
  if (n == 0) throw SyntaxError(order_line, "order must be positive");
  const std::size_t elements_line = r.line_number();
  auto names = r.keyword("elements");
  if (names.size() != n)
    throw SyntaxError(elements_line, "expected " + std::to_string(n) + " element names, found " +
                                         std::to_string(names.size()));
  r.expect_bare("table");
  auto table = read_matrix(r, n, n, names);
  r.expect_bare("end");
  return validating(start, [&] {
    return build_group_from_table(std::move(name), std::move(names), std::move(table));
  });
}

inline GroupTriple parse_triple_block(Reader& r) {
  const std::size_t start = r.line_number();
  std::string name = r.keyword_with_name("triple");
  FiniteGroup g = parse_group_block(r);
  const std::size_t sub_line = r.line_number();
  auto sub = resolve_all(r.keyword("subgroup"), g.elements(), sub_line);
  const std::size_t tr_line = r.line_number();
  auto tr = resolve_all(r.keyword("transversal"), g.elements(), tr_line);
  r.expect_bare("end");
  return validating(start, [&] {
    return make_triple(std::move(name), std::move(g), std::move(sub), std::move(tr));
  });
}

inline Hypergroup parse_hypergroup_block(Reader& r) {
  const std::size_t start = r.line_number();
  HypergroupData d{.name = r.keyword_with_name("hypergroup"), .base_names = {}, .group = cyclic(1),
                   .phi = {}, .psi = {}, .xi = {}, .lam = {}};
  const std::size_t base_line = r.line_number();
  auto base = r.keyword("base");
  if (base.empty()) throw SyntaxError(base_line, "base needs a size");
  const std::size_t m = parse_count(base.front(), base_line);
  if (m == 0) throw SyntaxError(base_line, "base must be nonempty");
  if (base.size() != m + 1)
    throw SyntaxError(base_line, "expected " + std::to_string(m) + " base names, found " +
                                     std::to_string(base.size() - 1));
  d.base_names.assign(base.begin() + 1, base.end());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (d.base_names[i] == d.base_names[j])
        throw SyntaxError(base_line, "duplicate base name '" + d.base_names[i] + "'");
  d.group = parse_group_block(r);
  const std::size_t h = d.group.order();
  r.expect_bare("phi");
  d.phi = read_matrix(r, m, h, d.base_names);
  r.expect_bare("psi");
  d.psi = read_matrix(r, m, h, d.group.elements());
  r.expect_bare("xi");
  d.xi = read_matrix(r, m, m, d.base_names);
  r.expect_bare("lambda");
  d.lam = read_matrix(r, m, m, d.group.elements());
  r.expect_bare("end");
  return validating(start, [&] {
    const std::string name = d.name;
    auto v = validate_hypergroup(std::move(d));
    if (!v.hypergroup) {
      std::string failed;
      for (Axiom a : v.report.failed_axioms()) failed += std::string(" ") + to_string(a);
      throw ValidationError("hypergroup '" + name + "' fails" + failed, std::move(v.report));
    }
    return std::move(*v.hypergroup);
  });
}

inline void emit_row(std::ostream& out, const std::vector<Index>& flat, std::size_t row,
                     std::size_t cols) {
  for (std::size_t j = 0; j < cols; ++j) out << (j ? " " : "") << flat[row * cols + j];
  out << "\n";
}

inline void emit_names(std::ostream& out, const std::vector<std::string>& names) {
  for (const auto& n : names) out << " " << n;
  out << "\n";
}

inline void emit_indices(std::ostream& out, const std::vector<Index>& xs) {
  for (Index x : xs) out << " " << x;
  out << "\n";
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Emitters: canonical text, indices only, single spaces

inline void emit_group(std::ostream& out, const FiniteGroup& g) {
  out << "group " << g.name() << "\n";
  out << "order " << g.order() << "\n";
  out << "elements";
  detail::emit_names(out, g.elements());
  out << "table\n";
  for (Index i = 0; i < g.order(); ++i) detail::emit_row(out, g.table(), i, g.order());
  out << "end\n";
}

inline void emit_triple(std::ostream& out, const GroupTriple& t) {
  out << "triple " << t.name() << "\n";
  emit_group(out, t.group());
  out << "subgroup";
  detail::emit_indices(out, t.subgroup().members());
  out << "transversal";
  detail::emit_indices(out, t.transversal());
  out << "end\n";
}

inline void emit_hypergroup(std::ostream& out, const Hypergroup& k) {
  const auto& d = k.data();
  const std::size_t m = d.base_size(), h = d.group.order();
  out << "hypergroup " << d.name << "\n";
  out << "base " << m;
  detail::emit_names(out, d.base_names);
  emit_group(out, d.group);
  out << "phi\n";
  for (Index a = 0; a < m; ++a) detail::emit_row(out, d.phi, a, h);
  out << "psi\n";
  for (Index a = 0; a < m; ++a) detail::emit_row(out, d.psi, a, h);
  out << "xi\n";
  for (Index a = 0; a < m; ++a) detail::emit_row(out, d.xi, a, m);
  out << "lambda\n";
  for (Index a = 0; a < m; ++a) detail::emit_row(out, d.lam, a, m);
  out << "end\n";
}

inline std::string emit_object(const Object& o) {
  std::ostringstream out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteGroup>) emit_group(out, v);
        else if constexpr (std::is_same_v<T, GroupTriple>) emit_triple(out, v);
        else emit_hypergroup(out, v);
      },
      o);
  return out.str();
}

inline std::string emit_document(const Document& d) { return emit_object(d.payload); }

// ---------------------------------------------------------------------------
// Parsers

/// Parses one group, triple or hypergroup. Throws SyntaxError for malformed
/// text and ValidationError when the content violates its axioms.
inline Document parse_document(std::string_view text, std::string source = {}) {
  detail::Reader r(detail::lex(text));
  if (r.done()) throw SyntaxError(1, "empty document");
  const auto& head = r.peek();
  Object payload = [&]() -> Object {
    if (head.tokens.front() == "group") return detail::parse_group_block(r);
    if (head.tokens.front() == "triple") return detail::parse_triple_block(r);
    if (head.tokens.front() == "hypergroup") return detail::parse_hypergroup_block(r);
    throw SyntaxError(head.number, "unknown document kind '" + head.tokens.front() + "'");
  }();
  if (!r.done()) throw SyntaxError(r.line_number(), "trailing content after 'end'");
  return {kind_of(payload), std::move(payload), std::move(source)};
}

/// Resolves "builtin:<name>" or a file path, relative paths against `base_dir`.
inline Document load_document(const std::string& ref,
                              const std::filesystem::path& base_dir = {}) {
  constexpr std::string_view prefix = "builtin:";
  if (ref.starts_with(prefix)) {
    auto o = builtin(std::string_view(ref).substr(prefix.size()));
    if (!o) throw Error(Errc::Io, "unknown builtin '" + ref + "'");
    return {kind_of(*o), std::move(*o), ref};
  }
  std::filesystem::path p(ref);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return parse_document(detail::read_file(p), p.string());
}

using MorphismDocument = std::variant<HypergroupMorphism, TripleMorphism>;

/// morphism <name> / source / target / (f0 + f1 | g) / end. Values may be
/// indices or names in the target.
inline MorphismDocument parse_morphism(std::string_view text,
                                       const std::filesystem::path& base_dir = {}) {
  detail::Reader r(detail::lex(text));
  if (r.done()) throw SyntaxError(1, "empty document");
  std::string name = r.keyword_with_name("morphism");
  const std::size_t src_line = r.line_number();
  const std::string src_ref = r.keyword_with_name("source");
  const std::size_t tgt_line = r.line_number();
  const std::string tgt_ref = r.keyword_with_name("target");
  (void)src_line;
  (void)tgt_line;
  Document src = load_document(src_ref, base_dir);
  Document tgt = load_document(tgt_ref, base_dir);
  if (r.done()) throw SyntaxError(r.line_number(), "expected 'f0' or 'g'");
  const detail::Line& head = r.peek();

  if (head.tokens.front() == "g") {
    auto* s = std::get_if<GroupTriple>(&src.payload);
    auto* t = std::get_if<GroupTriple>(&tgt.payload);
    if (!s || !t) throw SyntaxError(head.number, "'g' needs triple source and target");
    const std::size_t at = r.line_number();
    auto g = detail::resolve_all(r.keyword("g"), t->group().elements(), at);
    if (g.size() != s->group().order())
      throw SyntaxError(at, "g needs " + std::to_string(s->group().order()) + " entries");
    r.expect_bare("end");
    if (!r.done()) throw SyntaxError(r.line_number(), "trailing content after 'end'");
    return TripleMorphism{std::move(name), *s, *t, GroupHom{s->group(), t->group(), std::move(g)}};
  }

  auto* s = std::get_if<Hypergroup>(&src.payload);
  auto* t = std::get_if<Hypergroup>(&tgt.payload);
  if (!s || !t) throw SyntaxError(head.number, "'f0'/'f1' need hypergroup source and target");
  std::size_t at = r.line_number();
  auto f0 = detail::resolve_all(r.keyword("f0"), t->group().elements(), at);
  if (f0.size() != s->group_order())
    throw SyntaxError(at, "f0 needs " + std::to_string(s->group_order()) + " entries");
  at = r.line_number();
  auto f1 = detail::resolve_all(r.keyword("f1"), t->base_names(), at);
  if (f1.size() != s->base_size())
    throw SyntaxError(at, "f1 needs " + std::to_string(s->base_size()) + " entries");
  r.expect_bare("end");
  if (!r.done()) throw SyntaxError(r.line_number(), "trailing content after 'end'");
  return HypergroupMorphism{std::move(name), *s, *t, std::move(f0), std::move(f1)};
}

inline MorphismDocument load_morphism(const std::filesystem::path& path) {
  return parse_morphism(detail::read_file(path), path.parent_path());
}

}  // namespace hgroup
