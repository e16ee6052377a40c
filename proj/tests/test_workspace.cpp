#include <string>

#include "doctest.h"
#include "powdom/catalog.hpp"
#include "powdom/error.hpp"
#include "powdom/workspace.hpp"

using namespace powdom;

namespace {

const char* kDefs = R"(# a small library
poset Diamond
  elems b l r t
  le b l
  le b r
  le l t
  le r t
end

algebra or2 on 2
  op join arity 2 tag GE
  op zero arity 0
  table join { (0,0) -> 0; (0,1) -> 1; (1,0) -> 1; (1,1) -> 1 }
  table zero { () -> 0 }
end

algebra neg on 2
  op up arity 1
  table up { 0 -> 1; (1) -> 1 }
end

algebra rp on extnn
  op add arity 2 tag LE
  builtin add
  op half arity 1
  builtin scale 1/2
  op s arity 1
  builtin scale
  op z arity 0
  builtin const 0
end

map collapse : Diamond -> C2 { b |-> bot; l |-> top; r |-> top; t |-> top }

predicate h on C2 = pred{ bot -> 1/2; top -> inf }

valuation m on A2 = val{ 1/2 @ a; 1/3 @ b; 1/6 @ a }
valuation s on A2 = sup{ val{1 @ a}; val{1 @ b} }
valuation i on A2 = inf{ val{1 @ a}
                         val{1 @ b} }

transformer t : C2 -> C2 over 2_ang {
  bot |-> delta bot
  top |-> join(delta bot, delta top)
}
transformer u : 1 -> C2 over 2_ang { * |-> table{ <0,0> -> 0; <0,1> -> 0; <1,1> -> 1 } }
transformer z : 1 -> A2 over 2_ang { * |-> zero }

ptransformer p : 1 -> C2 over 2_ang { <0,0> |-> <0>; <0,1> |-> <0>; <1,1> |-> <1> }
)";

// Loads text and returns the error it raises.
ParseError parseError(const std::string& text) {
  Workspace ws;
  try {
    ws.load(text, "bad.pd");
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no error for: " << text);
  return ParseError("", 0, 0, "");
}

}  // namespace

TEST_CASE("every construct loads") {
  Workspace ws;
  ws.load(kDefs, "lib.pd");

  auto d = ws.poset("Diamond");
  CHECK(d->size() == 4);
  CHECK(d->leq(d->index("b"), d->index("t")));
  CHECK_FALSE(d->leq(d->index("l"), d->index("r")));
  CHECK(ws.poset("C2") == catalog::chain2());

  const auto& or2 = ws.finiteAlgebra("or2");
  CHECK(or2.signature().op(0).tag == Tag::GE);
  CHECK(or2.table(0) == catalog::angelic2().table(0));
  CHECK(or2.table(1) == catalog::angelic2().table(1));
  CHECK(ws.finiteAlgebra("neg").table(0) == std::vector<Elem>{1, 1});

  CHECK(ws.isRatAlgebra("rp"));
  CHECK_FALSE(ws.isFiniteAlgebra("rp"));
  const auto& rp = ws.ratAlgebra("rp");
  CHECK(rp.op(1).kind == RatOpKind::Scale);
  CHECK(rp.op(1).param == ExtNN::parse("1/2"));
  CHECK(rp.op(2).kind == RatOpKind::ScaleFamily);
  CHECK(rp.signature().op(2).parametric);
  CHECK(rp.op(3).kind == RatOpKind::Const);

  CHECK(ws.map("collapse").table() == std::vector<Elem>{0, 1, 1, 1});
  CHECK(ws.predicate("h").str() == Predicate(catalog::chain2(), {ExtNN::parse("1/2"), ExtNN::infinity()}).str());

  CHECK(valuationStr(ws.valuation("m")) == "val{2/3@a; 1/3@b}");
  CHECK(valuationStr(ws.valuation("s")) == "sup{val{1@a}; val{1@b}}");
  CHECK(std::holds_alternative<SupFn>(ws.valuation("i")));

  CHECK(ws.transformers().size() == 3);
  CHECK(ws.transformer("t").loc.line == 42);
  CHECK(ws.ptransformer("p").entries.size() == 3);
}

TEST_CASE("catalog names resolve and unknown names throw") {
  Workspace ws;
  CHECK(ws.isFiniteAlgebra("2_ang"));
  CHECK(ws.isRatAlgebra("rplus_max"));
  CHECK(ws.finiteAlgebra("frame2").table(0) == catalog::frame2().table(0));
  CHECK(ws.poset("2") == catalog::two());
  try {
    ws.map("nope");
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownName);
  }
  CHECK_THROWS(ws.poset("Nope"));
}

TEST_CASE("transformers materialize in the monad") {
  Workspace ws;
  ws.load(kDefs);
  ContinuationMonad m(catalog::angelic2());
  const auto& c2 = catalog::chain2();

  auto t = buildTransformer(m, ws.transformer("t"));
  const auto& alg = m.functionalAlgebra(c2);
  const Elem joined = alg.apply(alg.signature().index("join"),
                                std::vector<Elem>{m.delta(c2, 0).index, m.delta(c2, 1).index});
  CHECK(t.map.table() == std::vector<Elem>{m.delta(c2, 0).index, joined});

  // <0,0> -> 0, <0,1> -> 0, <1,1> -> 1 is evaluation at bot
  auto u = buildTransformer(m, ws.transformer("u"));
  CHECK(u.map.table()[0] == m.delta(c2, 0).index);

  auto z = buildTransformer(m, ws.transformer("z"));
  for (Elem g : m.functionals(catalog::anti2())->table(z.map.table()[0])) CHECK(g == 0);

  auto p = buildPTransformer(m, ws.ptransformer("p"));
  CHECK(m.qTransform(p) == u);

  ContinuationMonad dem(catalog::demonic2());
  CHECK_THROWS_AS(buildTransformer(dem, ws.transformer("t")), Error);
}

TEST_CASE("incomplete transformer tables are rejected when built") {
  Workspace ws;
  ws.load("transformer u : 1 -> C2 over 2_ang { * |-> table{ <0,0> -> 0; <1,1> -> 1 } }\n"
          "ptransformer p : 1 -> C2 over 2_ang { <0,0> |-> <0> }\n"
          "transformer v : 1 -> C2 over 2_ang { * |-> table{ <0,0> -> 1; <0,1> -> 0; <1,1> -> 1 } }\n");
  ContinuationMonad m(catalog::angelic2());
  auto kindOf = [&](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kindOf([&] { buildTransformer(m, ws.transformer("u")); }) == ErrorKind::UnknownElement);
  CHECK(kindOf([&] { buildPTransformer(m, ws.ptransformer("p")); }) == ErrorKind::UnknownElement);
  CHECK(kindOf([&] { buildTransformer(m, ws.transformer("v")); }) == ErrorKind::NonMonotoneResult);
}

TEST_CASE("errors carry line and column") {
  struct Case {
    const char* text;
    std::size_t line, column;
    const char* fragment;
  };
  const Case cases[] = {
      {"poset P\n  elems a b\n  le a c\nend\n", 1, 1, "c"},
      {"poset P\n  elems a\n  lt a a\nend\n", 3, 3, "expected 'elems'"},
      {"poset P\n  elems a\n", 3, 1, "expected 'elems', 'le' or 'end'"},
      {"poset C3\nend\nposet C3\nend\n", 3, 7, "already defined"},
      {"algebra A on 2\n  op f arity 2\n  table f { (0,0) -> 0 }\nend\n", 3, 11, "incomplete"},
      {"algebra A on 2\n  op f arity 1\n  table f { (0,1) -> 0 }\nend\n", 3, 13, "takes 1 arguments"},
      {"algebra A on 2\n  op f arity 1 tag XX\nend\n", 2, 20, "XX"},
      {"algebra A on extnn\n  op f arity 1\n  builtin add\nend\n", 3, 11, "arity"},
      {"algebra A on extnn\n  op f arity 2\n  builtin frob\nend\n", 3, 11, "frob"},
      {"algebra A on extnn\n  op f arity 0\nend\n", 2, 3, "no builtin"},
      {"map f : C2 -> C2 { bot |-> top }\n", 1, 18, "no image for 'top'"},
      {"map f : C2 -> C2 { bot |-> top; top |-> bot }\n", 1, 5, "monotone"},
      {"predicate f on C2 = pred{ bot -> 1; top -> -1 }\n", 1, 44, "unexpected character '-'"},
      {"predicate f on C2 = pred{ bot -> 1; top -> x }\n", 1, 44, "x"},
      {"valuation m on A2 = val{ 1 @ c }\n", 1, 30, "no element 'c'"},
      {"valuation m on A2 = max{ }\n", 1, 21, "expected 'val', 'sup' or 'inf'"},
      {"valuation m on A2 = sup{ }\n", 1, 24, "at least one"},
      {"transformer t : 1 -> C2 over 2_ang { * |-> join(delta bot) }\n", 1, 44, "takes 2 arguments"},
      {"transformer t : 1 -> C2 over 2_ang { * |-> plus }\n", 1, 44, "no operation 'plus'"},
      {"transformer t : 1 -> C2 over rplus { * |-> zero }\n", 1, 30, "no finite algebra"},
      {"ptransformer p : 1 -> C2 over 2_ang { <0> |-> <0> }\n", 1, 39, "needs 2 values"},
      {"ptransformer p : 1 -> C2 over 2_ang { <0,0> |-> <0>; <0,0> |-> <1> }\n", 1, 54, "given twice"},
      {"transformer t : 1 -> C2 over 2_ang { * |-> zero\n", 2, 1, "unterminated"},
      {"frobnicate\n", 1, 1, "unknown definition kind"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    const ParseError e = parseError(c.text);
    CHECK(e.file() == "bad.pd");
    CHECK(e.line() == c.line);
    CHECK(e.column() == c.column);
    CHECK(std::string(e.what()).find(c.fragment) != std::string::npos);
    CHECK(std::string(e.what()).find("bad.pd:" + std::to_string(c.line) + ":") != std::string::npos);
  }
}

TEST_CASE("missing files are parse errors") {
  Workspace ws;
  CHECK_THROWS_AS(ws.loadFile("/nonexistent/defs.pd"), ParseError);
}
