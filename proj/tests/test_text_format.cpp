#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hgroup.hpp"

using namespace hgroup;

namespace {

const std::filesystem::path kData = HGROUP_DATA_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t syntax_line(std::string_view text) {
  try {
    parse_document(text);
  } catch (const SyntaxError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no syntax error";
  return 0;
}

const char* kZ4 =
    "group Z4\n"
    "order 4\n"
    "elements 0 1 2 3\n"
    "table\n"
    "0 1 2 3\n"
    "1 2 3 0\n"
    "2 3 0 1\n"
    "3 0 1 2\n"
    "end\n";

}  // namespace

TEST(Parse, GroupBlock) {
  const auto d = parse_document(kZ4, "mem");
  EXPECT_EQ(d.kind, DocumentKind::Group);
  EXPECT_EQ(std::get<FiniteGroup>(d.payload), cyclic(4));
  EXPECT_EQ(d.source, "mem");
}

TEST(Emit, Z4GroupIsCanonical) {
  EXPECT_EQ(emit_object(cyclic(4)), kZ4);
}

TEST(Parse, CommentsAndSpacingAreDropped) {
  const std::string noisy =
      "# header\n\n  group   Z4   # trailing\norder 4\nelements 0 1 2 3\ntable\n"
      "0 1 2 3\n1   2 3 0\n\t2 3 0 1\n3 0 1 2\n\nend\n# done\n";
  const auto d = parse_document(noisy);
  EXPECT_EQ(emit_document(d), kZ4);
}

TEST(Parse, NamesStandInForIndices) {
  const std::string text =
      "triple t\n" + std::string(kZ4) + "subgroup 0 2\ntransversal 2 1\nend\n";
  const auto d = parse_document(text);
  const auto& t = std::get<GroupTriple>(d.payload);
  EXPECT_EQ(t.transversal(), (std::vector<Index>{2, 1}));

  const auto s3 = parse_document(slurp(kData / "s3-knit.triple"));
  const auto& st = std::get<GroupTriple>(s3.payload);
  EXPECT_EQ(st.group(), symmetric(3));
  EXPECT_EQ(st.subgroup().members(), (std::vector<Index>{0, 2}));
}

TEST(Parse, BadTransversalIsAValidationError) {
  try {
    load_document((kData / "z4-bad.triple").string());
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("InvalidTransversal"), std::string::npos) << e.what();
    EXPECT_EQ(e.witness(), (std::vector<Index>{0, 2}));
  }
}

TEST(Parse, GroupAxiomFailureIsAValidationError) {
  std::string text = kZ4;
  text.replace(text.find("3 0 1 2\nend"), 7, "3 0 1 1");
  EXPECT_THROW(parse_document(text), ValidationError);
}

TEST(Parse, BrokenHypergroupCarriesItsReport) {
  try {
    load_document((kData / "broken.hyp").string());
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.report()[Axiom::A5].failed());
  }
}

TEST(Parse, SyntaxErrorsCarryLineNumbers) {
  EXPECT_EQ(syntax_line(slurp(kData / "syntax-error.group")), 6u);
  EXPECT_EQ(syntax_line(""), 1u);
  EXPECT_EQ(syntax_line("grope Z4\n"), 1u);
  EXPECT_EQ(syntax_line("group Z4\norder four\n"), 2u);
  EXPECT_EQ(syntax_line("group Z2\norder 2\nelements 0\n"), 3u);
  EXPECT_EQ(syntax_line("group Z2\norder 2\nelements 0 1\ntable\n0 1\n1 x\nend\n"), 6u);
  EXPECT_EQ(syntax_line(std::string(kZ4) + "extra\n"), 10u);
  EXPECT_EQ(syntax_line("group Z1\norder 1\nelements e\ntable\n0\n"), 5u);
}

TEST(RoundTrip, DerivedHypergroupText) {
  const std::string expected =
      "hypergroup z4-triple\n"
      "base 2 0 1\n"
      "group z4-triple_H\n"
      "order 2\n"
      "elements 0 2\n"
      "table\n"
      "0 1\n"
      "1 0\n"
      "end\n"
      "phi\n0 0\n1 1\n"
      "psi\n0 1\n0 1\n"
      "xi\n0 1\n1 0\n"
      "lambda\n0 0\n0 1\n"
      "end\n";
  const auto k = standard_construction(named::z4_triple());
  EXPECT_EQ(emit_object(k), expected);
  const auto again = parse_document(expected);
  EXPECT_EQ(std::get<Hypergroup>(again.payload), k);
}

TEST(RoundTrip, EveryBuiltinIsStable) {
  for (const auto& name : builtin_names()) {
    const auto d = load_document("builtin:" + name);
    const auto text = emit_document(d);
    const auto again = parse_document(text);
    EXPECT_TRUE(same_payload(again.payload, d.payload)) << name;
    EXPECT_EQ(emit_document(again), text) << name;
  }
}

TEST(RoundTrip, EveryCatalogHypergroup) {
  for (const auto& d : default_catalog().hypergroups) {
    const auto k = make_hypergroup(d);
    const auto text = emit_object(k);
    EXPECT_EQ(std::get<Hypergroup>(parse_document(text).payload), k) << d.name;
  }
}

TEST(RoundTrip, ProductTriple) {
  const auto t = functor_T_on_object(named::knit_s3());
  const auto text = emit_object(t);
  const auto back = std::get<GroupTriple>(parse_document(text).payload);
  EXPECT_TRUE(back.same_triple(t));
  EXPECT_EQ(back.group().element_name(0), "123|123");
}

TEST(Load, BuiltinsAndFiles) {
  EXPECT_EQ(load_document("builtin:z4").kind, DocumentKind::Group);
  EXPECT_EQ(load_document("builtin:z4-triple").kind, DocumentKind::Triple);
  EXPECT_EQ(load_document("builtin:gf9").kind, DocumentKind::Hypergroup);
  try {
    load_document("builtin:nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Io);
  }
  try {
    load_document((kData / "missing.group").string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Io);
  }
  EXPECT_EQ(load_document("z4.group", kData).kind, DocumentKind::Group);
}

TEST(Morphisms, TripleFile) {
  const auto m = load_morphism(kData / "z4-z2.morphism");
  const auto& g = std::get<TripleMorphism>(m);
  EXPECT_EQ(g.name, "mod2");
  EXPECT_TRUE(check_triple_morphism(g).ok);
}

TEST(Morphisms, HypergroupFilesRelativeToTheirDirectory) {
  const auto good = std::get<HypergroupMorphism>(load_morphism(kData / "group-mod2.morphism"));
  EXPECT_TRUE(check_hyp_morphism(good).ok);
  const auto bad = std::get<HypergroupMorphism>(load_morphism(kData / "group-shift.morphism"));
  EXPECT_EQ(check_hyp_morphism(bad).what, "MXi");
}

TEST(Morphisms, Malformed) {
  EXPECT_THROW(parse_morphism("morphism m\nsource builtin:z4\ntarget builtin:z2\ng 0 1 0 1\nend\n"),
               SyntaxError);
  EXPECT_THROW(parse_morphism("morphism m\nsource builtin:group-z4\ntarget builtin:group-z4\nf0 0\nf1 0 1\nend\n"),
               SyntaxError);
  EXPECT_THROW(parse_morphism("morphism m\nsource builtin:z4-triple\ntarget builtin:z2-triple\ng 0 1 0 1\n"),
               SyntaxError);
}
