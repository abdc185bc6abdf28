#include "doctest.h"
#include "morita/workspace.hpp"

using namespace morita;

namespace {

std::string const kDualNumbers = R"(field 2
algebra A 2
  basis 1 x
  unit 1 0
  mul 0 0 1 0
  mul 0 1 0 1
  mul 1 0 0 1
end
)";

}  // namespace

TEST_SUITE("workspace") {
  TEST_CASE("empty input gives an empty workspace") {
    CHECK(parse_workspace("").empty());
    CHECK(parse_workspace("# only a comment\n\n").empty());
  }

  TEST_CASE("shipped fixtures parse") {
    auto names = fixture_names();
    CHECK(names == std::vector<std::string>{"E0", "E1", "E2", "E3"});
    auto e2 = fixture_workspace("E2");
    auto const& ctx = e2.contexts.at("E2").context;
    CHECK(ctx->delta()->dim() == 5);
    CHECK(e2.modules.count("k") == 1);
    CHECK(e2.tuples.count("Tk") == 1);
    CHECK(e2.oracles.size() == 4);
    CHECK(e2.find_algebra("E2.Delta") == ctx->delta());
    CHECK(e2.algebra_name(ctx->delta()) == "E2.Delta");
  }

  TEST_CASE("emit then parse round trips every fixture") {
    for (auto const& name : fixture_names()) {
      CAPTURE(name);
      auto ws = fixture_workspace(name);
      auto text = emit_workspace(ws);
      auto again = parse_workspace(text, name + " (emitted)");
      CHECK(same_workspace(ws, again));
      CHECK(emit_workspace(again) == text);
    }
  }

  TEST_CASE("syntax errors carry line and column") {
    try {
      parse_workspace(kDualNumbers + "module k A left 1\n  act 0 [1\nend\n");
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(e.line() == 10);
      CHECK(e.column() > 0);
    }
    CHECK_THROWS_AS(parse_workspace("field 4\n"), ParseError);
    CHECK_THROWS_AS(parse_workspace("frobnicate\n"), ParseError);
    CHECK_THROWS_AS(parse_workspace(kDualNumbers + "module k Q left 1\nend\n"), ParseError);
  }

  TEST_CASE("semantic errors name the failing invariant") {
    std::string broken = R"(field 2
algebra C 3
  basis 1 a b
  unit 1 0 0
  mul 0 0 1 0 0
  mul 0 1 0 1 0
  mul 0 2 0 0 1
  mul 1 0 0 1 0
  mul 2 0 0 0 1
  mul 1 1 0 0 1
  mul 2 1 0 1 0
end
)";
    CHECK_THROWS_WITH_AS(parse_workspace(broken), doctest::Contains("basis triple"), ParseError);
    CHECK_THROWS_WITH_AS(parse_workspace(kDualNumbers + "module k A left 1\n  act 0 [1]\n  act 1 [1]\nend\n"),
                         doctest::Contains("x*x"), ParseError);
  }

  TEST_CASE("duplicate and unresolved names are rejected") {
    CHECK_THROWS_AS(parse_workspace(kDualNumbers + kDualNumbers.substr(8)), ParseError);
    CHECK_THROWS_AS(parse_workspace(kDualNumbers + "context C A A M N\n"), ParseError);
  }

  TEST_CASE("oracle declarations") {
    auto ws = parse_workspace(kDualNumbers +
                              "module k A left 1\n  act 0 [1]\n  act 1 [0]\nend\n"
                              "oracle L A left list k\n"
                              "oracle F A left builtin flat\n");
    CHECK(ws.oracles.at("L").kind == "list");
    CHECK(ws.oracles.at("L").members == std::vector<std::string>{"k"});
    CHECK(ws.oracles.at("F").builtin == "flat");
    CHECK_THROWS_AS(parse_workspace(kDualNumbers + "oracle G A left builtin nonsense\n"), ParseError);
  }
}
