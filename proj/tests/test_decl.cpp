#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "catlift/decl.hpp"
#include "catlift/instances.hpp"

using namespace catlift;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const std::string& name) {
  return std::string(CATLIFT_FIXTURES) + "/" + name;
}

}  // namespace

TEST_CASE("shipped fixtures parse and reserialize byte for byte") {
  for (const char* name :
       {"poset_max2.cat", "poset_max3.cat", "poset_min2.cat", "idmonad3.cat",
        "finset2.cat", "bz4.cat", "linear_f3.cat", "broken_law.cat"}) {
    CAPTURE(name);
    const std::string text = slurp(fixture(name));
    Declaration d = parse_declaration(text);
    CHECK(serialize_declaration(d) == text);
  }
}

TEST_CASE("dangling references are rejected with a line number") {
  try {
    load_declaration_file(fixture("broken_ref.cat"));
    FAIL("expected MalformedInput");
  } catch (const MalformedInput& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
    CHECK(std::string(e.what()).find("nowhere") != std::string::npos);
  }
}

TEST_CASE("structures survive a serialization round trip") {
  InstanceBundle b = bundle_z4_translation();
  Declaration d;
  add_category(d, "m", b.action->M);
  add_category(d, "g", b.action->C->base);
  add_monoidal(d, "c", "g", b.action->C);
  add_action(d, "act", "c", "m", b.action);
  add_monad(d, "mon", "m", b.monad);
  add_law(d, "law", "act", "mon", make_distlaw(b.action, b.monad, {0, 2}));
  Declaration back = parse_declaration(serialize_declaration(d));
  CHECK(*back.categories.at("m") == *b.action->M);
  CHECK(*back.monoidals.at("c").monoidal == *b.action->C);
  CHECK(*back.actions.at("act").action == *b.action);
  CHECK(back.monads.at("mon").monad == b.monad);
  CHECK(back.laws.at("law").law.components == std::vector<MorId>{0, 2});
}

TEST_CASE("linear sections survive a round trip with fractions") {
  Field q(0);
  LinearBundle b = bundle_f3();
  LinearBundle rational{"rat", q, b.B, b.A, b.M, b.Q};
  rational.B.mult.at(0, 0) = Scalar{-1, 2};
  Declaration d;
  add_linear(d, "lin", LinearSection{rational, std::nullopt});
  std::string text = serialize_declaration(d);
  CHECK(text.find("-1/2") != std::string::npos);
  Declaration back = parse_declaration(text);
  const LinearBundle& r = back.linears.at("lin").bundle;
  CHECK(r.field.characteristic() == 0);
  CHECK(r.B.mult.at(0, 0) == Scalar{-1, 2});
  CHECK(lin_eq(r.A.act, rational.A.act));
  CHECK_FALSE(back.linears.at("lin").law.has_value());
}

TEST_CASE("an explicit law matrix is kept") {
  LinearBundle b = bundle_f3();
  LinMap l = lin_identity(b.A.dim * b.M.dim * b.Q.dim);
  Declaration d;
  add_linear(d, "lin", LinearSection{b, l});
  Declaration back = parse_declaration(serialize_declaration(d));
  REQUIRE(back.linears.at("lin").law.has_value());
  CHECK(lin_eq(*back.linears.at("lin").law, l));
}

TEST_CASE("law components may be declared missing") {
  InstanceBundle b = bundle_min_chain2();
  Declaration d;
  add_category(d, "m", b.action->M);
  add_monoidal(d, "c", "m", b.action->C);
  add_action(d, "act", "c", "m", b.action);
  add_monad(d, "mon", "m", b.monad);
  const int slots = b.action->M->n_obj() * b.action->C->base->n_obj();
  add_law(d, "law", "act", "mon",
          make_distlaw(b.action, b.monad, std::vector<MorId>(slots, kNoMor)));
  std::string text = serialize_declaration(d);
  CHECK(text.find(" none") != std::string::npos);
  Declaration back = parse_declaration(text);
  for (MorId h : back.laws.at("law").law.components) CHECK(h == kNoMor);
}

TEST_CASE("parser rejects malformed inputs") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_declaration(text), MalformedInput);
  };
  // unknown section kind
  bad("widget w\nend\n");
  // unterminated section
  bad("category c\n  objects a\n");
  // missing identity
  bad("category c\n  objects a\n  mor f a a\n  compose f f f\nend\n");
  // duplicate morphism name
  bad("category c\n  objects a\n  mor f a a\n  mor f a a\n  identity a f\nend\n");
  // compose names an unknown morphism
  bad("category c\n  objects a\n  mor f a a\n  identity a f\n"
      "  compose f g f\nend\n");
  // duplicate compose entry
  bad("category c\n  objects a\n  mor f a a\n  identity a f\n"
      "  compose f f f\n  compose f f f\nend\n");
  // name with a forbidden character
  bad("category c!\n  objects a\n  mor f a a\n  identity a f\nend\n");
  // duplicate section name
  bad("category c\n  objects a\n  mor f a a\n  identity a f\nend\n"
      "monad c\n  on c\nend\n");
  // reference to a later-declared section
  bad("monoidal t\n  base c\n  unit a\nend\n"
      "category c\n  objects a\n  mor f a a\n  identity a f\nend\n");
}

TEST_CASE("linear parser validates field and shape") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_declaration(text), MalformedInput);
  };
  bad("linear l\n  field 6\n  dims 1 1 1 1\nend\n");
  // missing matrices
  bad("linear l\n  field 3\n  dims 1 1 1 1\nend\n");
  // denominator that vanishes in the field
  bad("linear l\n  field 3\n  dims 1 1 1 1\n"
      "  b_mult 0 1/3\n  b_unit 0 1\n  b_comul 0 1\n  b_counit 0 1\n"
      "  a_mult 0 1\n  a_unit 0 1\n  a_act 0 1\n  m_act 0 1\n  q_rho 0 1\n"
      "end\n");
}

TEST_CASE("a complete one-dimensional linear section parses") {
  const std::string text =
      "linear l\n  field 5\n  dims 1 1 1 1\n"
      "  b_mult 0 1\n  b_unit 0 1\n  b_comul 0 1\n  b_counit 0 1\n"
      "  a_mult 0 1\n  a_unit 0 1\n  a_act 0 1\n  m_act 0 1\n  q_rho 0 1\n"
      "end\n";
  Declaration d = parse_declaration(text);
  const LinearBundle& b = d.linears.at("l").bundle;
  CHECK(b.field.characteristic() == 5);
  CHECK(check_linear_bundle(b).ok());
  CHECK(serialize_declaration(d) == text);
}

TEST_CASE("fractions reduce into prime fields") {
  const std::string text =
      "linear l\n  field 3\n  dims 1 1 1 1\n"
      "  b_mult 0 1/2\n  b_unit 0 1\n  b_comul 0 1\n  b_counit 0 1\n"
      "  a_mult 0 1\n  a_unit 0 1\n  a_act 0 1\n  m_act 0 1\n  q_rho 0 1\n"
      "end\n";
  Declaration d = parse_declaration(text);
  // 1/2 = 2 in F_3; the canonical form spells it reduced
  CHECK(d.linears.at("l").bundle.B.mult.at(0, 0) == Scalar{2, 1});
  CHECK(serialize_declaration(d).find("b_mult 0 2") != std::string::npos);
}

TEST_CASE("comments and uneven spacing are tolerated") {
  const std::string text =
      "# header comment\n"
      "category   c   # trailing\n"
      "\n"
      "  objects a\n"
      "  mor f a a\n"
      "  identity a f\n"
      "  compose f f f\n"
      "end\n";
  Declaration d = parse_declaration(text);
  CHECK(d.categories.at("c")->n_obj() == 1);
}
