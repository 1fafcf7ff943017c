// hg: command-line front end for the hgroup library.
//
// Exit codes: 0 everything passed, 1 a check failed or the input violates
// its axioms, 2 usage, I/O or syntax error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hgroup.hpp"

namespace {

using namespace hgroup;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

int write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kPass;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kUsage;
  }
  return kPass;
}

int report_line(const std::string& item, const std::string& check, const Verdict& v) {
  std::cout << item << " " << check << (v.ok ? " PASS" : " FAIL") << "\n";
  if (!v.ok) std::cerr << item << " " << check << ": " << v.describe() << "\n";
  return v.ok ? kPass : kFail;
}

template <class F>
Verdict attempt(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return Verdict::fail(e.what());
  }
}

const GroupTriple& expect_triple(const Document& d) {
  if (auto* t = std::get_if<GroupTriple>(&d.payload)) return *t;
  throw Error(Errc::Io, d.source + " is a " + to_string(d.kind) + ", expected a triple");
}

const Hypergroup& expect_hypergroup(const Document& d) {
  if (auto* k = std::get_if<Hypergroup>(&d.payload)) return *k;
  throw Error(Errc::Io, d.source + " is a " + to_string(d.kind) + ", expected a hypergroup");
}

int cmd_validate(const std::string& ref) {
  const Document d = load_document(ref);
  std::cout << to_string(d.kind) << " " << d.source << " PASS\n";
  if (auto* k = std::get_if<Hypergroup>(&d.payload)) {
    auto report = full_report(k->data());
    std::cout << report.to_text();
    return report.all_passed() ? kPass : kFail;
  }
  return kPass;
}

int cmd_derive(const std::string& ref, const std::string& out) {
  const Document d = load_document(ref);
  return write_output(emit_object(standard_construction(expect_triple(d))), out);
}

int cmd_product(const std::string& ref, const std::string& out) {
  const Document d = load_document(ref);
  return write_output(emit_object(functor_T_on_object(expect_hypergroup(d))), out);
}

int cmd_roundtrip(const std::string& ref) {
  const Document d = load_document(ref);
  const std::string name = d.source;
  int rc = report_line(name, "text", attempt([&] {
                         const std::string text = emit_document(d);
                         const Document again = parse_document(text);
                         if (!same_payload(again.payload, d.payload)) return Verdict::fail("payload differs after parse");
                         if (emit_document(again) != text) return Verdict::fail("emit is not stable");
                         return Verdict::pass();
                       }));
  if (auto* t = std::get_if<GroupTriple>(&d.payload)) {
    rc = std::max(rc, report_line(name, "counit", attempt([&] {
                                    counit_iso(*t);
                                    return Verdict::pass();
                                  })));
  } else if (auto* k = std::get_if<Hypergroup>(&d.payload)) {
    rc = std::max(rc, report_line(name, "unit", attempt([&] {
                                    unit_iso(*k);
                                    return Verdict::pass();
                                  })));
  }
  return rc;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int cmd_transversals(const std::string& ref, const std::string& subgroup, bool count, bool list,
                     std::size_t limit) {
  const Document d = load_document(ref);
  FiniteGroup g = [&] {
    if (auto* grp = std::get_if<FiniteGroup>(&d.payload)) return *grp;
    if (auto* t = std::get_if<GroupTriple>(&d.payload)) return t->group();
    throw Error(Errc::Io, d.source + " is a hypergroup, expected a group");
  }();
  std::vector<Index> members;
  for (const auto& tok : split_list(subgroup)) members.push_back(detail::resolve(tok, g.elements(), 0));
  const Subgroup h = make_subgroup(g, members);
  if (count && !list) {
    std::cout << count_transversals(g, h) << "\n";
    return kPass;
  }
  for_each_transversal(
      g, h,
      [&](const std::vector<Index>& m) {
        for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? " " : "") << g.element_name(m[i]);
        std::cout << "\n";
        return true;
      },
      limit ? std::optional<std::uint64_t>(limit) : std::nullopt);
  if (count) std::cout << count_transversals(g, h) << "\n";
  return kPass;
}

int cmd_catalog(const std::string& name) {
  if (name.empty()) {
    for (const auto& n : builtin_names()) {
      std::cout << n << " " << to_string(kind_of(*builtin(n))) << "\n";
    }
    return kPass;
  }
  auto o = builtin(name);
  if (!o) {
    std::cerr << "error: unknown builtin '" << name << "'\n";
    return kUsage;
  }
  std::cout << emit_object(*o);
  return kPass;
}

int cmd_check_morphism(const std::string& path) {
  const auto m = load_morphism(path);
  if (auto* f = std::get_if<HypergroupMorphism>(&m)) {
    int rc = report_line(f->name, "hyp-morphism", check_hyp_morphism(*f));
    if (rc == kPass) rc = report_line(f->name, "naturality-unit", attempt([&] { return check_naturality_unit(*f); }));
    return rc;
  }
  const auto& g = std::get<TripleMorphism>(m);
  int rc = report_line(g.name, "triple-morphism", check_triple_morphism(g));
  if (rc == kPass)
    rc = report_line(g.name, "naturality-counit", attempt([&] { return check_naturality_counit(g); }));
  return rc;
}

int cmd_suite(const std::string& catalog) {
  if (catalog != "default") {
    std::cerr << "error: unknown catalog '" << catalog << "'\n";
    return kUsage;
  }
  const auto report = equivalence_suite(default_catalog());
  std::cout << report.to_text();
  for (const auto& l : report.lines())
    if (!l.pass) std::cerr << l.item << " " << l.check << ": " << l.witness << "\n";
  return report.all_pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergroups over groups, group triples and the exact product"};
  app.require_subcommand(1);

  std::string ref, out, subgroup, name, catalog = "default";
  bool count = false, list = false;
  std::size_t limit = 0;

  auto* validate = app.add_subcommand("validate", "Parse and validate a group, triple or hypergroup");
  validate->add_option("file", ref, "File path or builtin:<name>")->required();

  auto* derive = app.add_subcommand("derive", "Hypergroup of a triple");
  derive->add_option("triple", ref, "File path or builtin:<name>")->required();
  derive->add_option("-o,--output", out, "Output file (default stdout)");

  auto* product = app.add_subcommand("product", "Exact-product triple of a hypergroup");
  product->add_option("hypergroup", ref, "File path or builtin:<name>")->required();
  product->add_option("-o,--output", out, "Output file (default stdout)");

  auto* roundtrip = app.add_subcommand("roundtrip", "Text round trip plus unit or counit check");
  roundtrip->add_option("file", ref, "File path or builtin:<name>")->required();

  auto* transversals = app.add_subcommand("transversals", "Enumerate right transversals");
  transversals->add_option("group", ref, "File path or builtin:<name>")->required();
  transversals->add_option("--subgroup", subgroup, "Subgroup members, comma separated")->required();
  transversals->add_flag("--count", count, "Print the number of transversals");
  transversals->add_flag("--list", list, "List transversals");
  transversals->add_option("--limit", limit, "Stop listing after N transversals");

  auto* cat = app.add_subcommand("catalog", "List builtins or print one");
  cat->add_option("name", name, "Builtin name");

  auto* morph = app.add_subcommand("check-morphism", "Check a morphism file");
  morph->add_option("file", ref, "Morphism file")->required();

  auto* suite = app.add_subcommand("suite", "Run the equivalence suite");
  suite->add_option("--catalog", catalog, "Catalog name (only 'default')");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(ref);
    if (*derive) return cmd_derive(ref, out);
    if (*product) return cmd_product(ref, out);
    if (*roundtrip) return cmd_roundtrip(ref);
    if (*transversals) return cmd_transversals(ref, subgroup, count, list, limit);
    if (*cat) return cmd_catalog(name);
    if (*morph) return cmd_check_morphism(ref);
    if (*suite) return cmd_suite(catalog);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    if (!e.report().failed_axioms().empty()) std::cerr << e.report().to_text();
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::SyntaxError:
      case Errc::Io:
        return kUsage;
      default:
        return kFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
