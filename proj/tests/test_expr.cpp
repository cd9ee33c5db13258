#include "corpus.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "qdpi/channel.hpp"
#include "qdpi/errors.hpp"
#include "qdpi/expr.hpp"

using namespace qdpi;
using qdpi::test::data_dir;
using qdpi::test::diag;
using qdpi::test::max_abs_diff;

namespace {

bool acts_like(const KrausChannel& a, const KrausChannel& b) {
  return max_abs_diff(choi(a).mat, choi(b).mat) < 1e-12;
}

}  // namespace

TEST_CASE("corpus has 50 entries and round-trips") {
  const std::vector<std::string> corpus = qdpi::test::corpus_lines("expr_corpus.txt");
  CHECK(corpus.size() == 50);
  for (const std::string& text : corpus) {
    CAPTURE(text);
    const ChannelExpr e = parse_channel(text);
    const std::string canonical = to_string(e);
    const ChannelExpr again = parse_channel(canonical);
    CHECK(again == e);
    CHECK(to_string(again) == canonical);
  }
}

TEST_CASE("parse: examples") {
  const ChannelExpr tp = parse_channel("twopauli(0.7)");
  REQUIRE(std::holds_alternative<TwoPauliExpr>(tp.node));
  CHECK(std::get<TwoPauliExpr>(tp.node).x == 0.7);

  const ChannelExpr m = parse_channel("mix(0.3, erase(2), id(2))");
  REQUIRE(std::holds_alternative<MixExpr>(m.node));
  const MixExpr& mx = std::get<MixExpr>(m.node);
  CHECK(mx.c == 0.3);
  CHECK(std::get<EraseExpr>(mx.first->node).dim == 2);
  CHECK(std::get<IdExpr>(mx.second->node).dim == 2);
  CHECK(to_string(m) == "mix(0.3, erase(2), id(2))");
  CHECK(to_string(parse_channel("twopauli(1)")) == "twopauli(1.0)");
  CHECK(to_string(parse_channel("kraus( a b.json )")) == "kraus(\"a b.json\")");

  try {
    parse_channel("compose(id(2), id(3))");
    FAIL("expected a dimension error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Dimension);
    CHECK(e.pos().line == 1);
    CHECK(e.pos().column == 1);
  }
}

TEST_CASE("parse: positions are ignored by equality") {
  CHECK(parse_channel("id(2)") == parse_channel("   id( 2 )"));
  CHECK_FALSE(parse_channel("id(2)") == parse_channel("id(3)"));
  CHECK_FALSE(parse_channel("id(2)") == parse_channel("erase(2)"));
}

TEST_CASE("infer_type") {
  const ChannelType t = infer_type(parse_channel("compose(erase(2), twopauli(0.3))"));
  CHECK(t.dimIn == std::optional<std::size_t>(2));
  CHECK(t.dimOut == std::optional<std::size_t>(2));
  const ChannelType k = infer_type(parse_channel("compose(kraus(a.json), id(3))"));
  CHECK(k.dimIn == std::optional<std::size_t>(3));
  CHECK_FALSE(k.dimOut.has_value());
}

TEST_CASE("malformed inputs carry positions") {
  const std::vector<qdpi::test::Malformed> bad = qdpi::test::malformed_inputs();
  CHECK(bad.size() >= 10);
  for (const auto& m : bad) {
    CAPTURE(m.text);
    try {
      parse_channel(m.text);
      FAIL("parsed a malformed input");
    } catch (const ParseError& e) {
      CHECK(e.pos().line == m.line);
      CHECK(e.pos().column == m.column);
      const std::string where = std::to_string(m.line) + ":" + std::to_string(m.column);
      CHECK(std::string(e.what()).find(where) != std::string::npos);
      if (e.kind() == ParseError::Kind::Syntax) CHECK_FALSE(e.expected().empty());
    }
  }
}

TEST_CASE("error kinds") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_channel(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("no error");
    return ParseError::Kind::Syntax;
  };
  CHECK(kind_of("id(#)") == ParseError::Kind::Lexical);
  CHECK(kind_of("id(2") == ParseError::Kind::Syntax);
  CHECK(kind_of("twopauli(2.0)") == ParseError::Kind::Range);
  CHECK(kind_of("mix(-0.1, id(2), id(2))") == ParseError::Kind::Range);
  CHECK(kind_of("mix(0.5, id(2), erase(3))") == ParseError::Kind::Dimension);
}

TEST_CASE("eval_channel") {
  CHECK(acts_like(eval_channel(parse_channel("id(2)")), identity_channel(2)));
  CHECK(acts_like(eval_channel(parse_channel("twopauli(1.0)")), identity_channel(2)));
  const KrausChannel m = eval_channel(parse_channel("mix(0.5, id(2), erase(2))"));
  CHECK(max_abs_diff(apply(m, qdpi::test::mixed(2)).matrix(), diag({0.75, 0.25})) < 1e-15);
  CHECK(acts_like(eval_channel(parse_channel("compose(twopauli(0.5), twopauli(0.4))")),
                  compose(two_pauli(0.5), two_pauli(0.4))));

  const KrausChannel k =
      eval_channel(parse_channel("kraus(two_pauli_half.json)"), data_dir());
  CHECK(acts_like(k, two_pauli(0.5)));
  const KrausChannel q = eval_channel(
      parse_channel("compose(erase(2), kraus(\"qutrit_to_qubit.json\"))"), data_dir());
  CHECK(q.dim_in() == 3);

  CHECK_THROWS_AS(eval_channel(parse_channel("kraus(missing.json)"), data_dir()), IoError);
  CHECK_THROWS_AS(eval_channel(parse_channel("kraus(not_complete.json)"), data_dir()),
                  ValidationError);
  try {
    eval_channel(parse_channel("compose(id(2),\n kraus(\"qutrit_to_qubit.json\"))"),
                 data_dir());
  } catch (const DimensionError& e) {
    FAIL("well-typed after loading: " << e.what());
  }
  try {
    eval_channel(parse_channel("compose(kraus(qutrit_to_qubit.json), id(2))"), data_dir());
    FAIL("expected a dimension error");
  } catch (const DimensionError& e) {
    CHECK(std::string(e.what()).find("1:1") != std::string::npos);
  }
}
