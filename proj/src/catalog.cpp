#include "powdom/catalog.hpp"

#include "powdom/error.hpp"

namespace powdom::catalog {

const PosetPtr& two() {
  static const PosetPtr p = FinPoset::fromCover("2", {"0", "1"}, {{"0", "1"}});
  return p;
}

const PosetPtr& one() {
  static const PosetPtr p = FinPoset::fromCover("1", {"*"}, {});
  return p;
}

const PosetPtr& chain2() {
  static const PosetPtr p = FinPoset::fromCover("C2", {"bot", "top"}, {{"bot", "top"}});
  return p;
}

const PosetPtr& anti2() {
  static const PosetPtr p = FinPoset::fromCover("A2", {"a", "b"}, {});
  return p;
}

const PosetPtr& chain3() {
  static const PosetPtr p =
      FinPoset::fromCover("C3", {"x0", "x1", "x2"}, {{"x0", "x1"}, {"x1", "x2"}});
  return p;
}

const PosetPtr& vee() {
  static const PosetPtr p = FinPoset::fromCover("V", {"b", "l", "r"}, {{"b", "l"}, {"b", "r"}});
  return p;
}

const PosetPtr& wedge() {
  static const PosetPtr p =
      FinPoset::fromCover("Lambda", {"l", "r", "t"}, {{"l", "t"}, {"r", "t"}});
  return p;
}

const PosetPtr& grid2x2() {
  static const PosetPtr p = FinPoset::fromCover(
      "Grid2x2", {"(bot,bot)", "(bot,top)", "(top,bot)", "(top,top)"},
      {{"(bot,bot)", "(bot,top)"},
       {"(bot,bot)", "(top,bot)"},
       {"(bot,top)", "(top,top)"},
       {"(top,bot)", "(top,top)"}});
  return p;
}

const PosetPtr& crown4() {
  static const PosetPtr p = FinPoset::fromCover(
      "Crown4", {"a1", "a2", "b1", "b2"},
      {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}});
  return p;
}

std::vector<PosetPtr> posets(std::size_t maxSize) {
  std::vector<PosetPtr> out;
  for (const auto* p : {&one(), &chain2(), &anti2(), &chain3(), &vee(), &wedge(), &grid2x2(),
                        &crown4()}) {
    if ((*p)->size() <= maxSize) out.push_back(*p);
  }
  return out;
}

PosetPtr poset(std::string_view name) {
  for (const auto& p : posets()) {
    if (p->name() == name) return p;
  }
  fail(ErrorKind::UnknownName, "no catalog poset named '" + std::string(name) + "'");
}

namespace {

// Tables over the carrier 2, indexed (x, y) -> 2x + y.
const std::vector<Elem> kJoin{0, 1, 1, 1};
const std::vector<Elem> kMeet{0, 0, 0, 1};

OpSpec eq(std::string symbol, unsigned arity) { return OpSpec{std::move(symbol), arity, Tag::EQ, false}; }

}  // namespace

const FinAlgebra& angelic2() {
  static const FinAlgebra a("2_ang", two(), Signature({eq("join", 2), eq("zero", 0)}),
                            {kJoin, {0}});
  return a;
}

const FinAlgebra& demonic2() {
  static const FinAlgebra a("2_dem", two(), Signature({eq("meet", 2), eq("one", 0)}),
                            {kMeet, {1}});
  return a;
}

const FinAlgebra& frame2() {
  static const FinAlgebra a(
      "frame2", two(),
      Signature({eq("meet", 2), eq("join", 2), eq("zero", 0), eq("one", 0)}),
      {kMeet, kJoin, {0}, {1}});
  return a;
}

const FinAlgebra& lattice2() {
  static const FinAlgebra a("lattice2", two(), Signature({eq("meet", 2), eq("join", 2)}),
                            {kMeet, kJoin});
  return a;
}

const std::vector<FinAlgebra>& finiteAlgebras() {
  static const std::vector<FinAlgebra> all{angelic2(), demonic2(), frame2(), lattice2()};
  return all;
}

const FinAlgebra& finiteAlgebra(std::string_view name) {
  for (const auto& a : finiteAlgebras()) {
    if (a.name() == name) return a;
  }
  fail(ErrorKind::UnknownName, "no finite catalog algebra named '" + std::string(name) + "'");
}

namespace {

RatOp rop(std::string symbol, RatOpKind kind, Tag tag, ExtNN param = ExtNN(0)) {
  return RatOp{std::move(symbol), kind, tag, std::move(param)};
}

}  // namespace

const RatAlgebra& rplus() {
  static const RatAlgebra a("rplus", {rop("add", RatOpKind::Add, Tag::EQ),
                                      rop("zero", RatOpKind::Const, Tag::EQ)});
  return a;
}

// The cone signature: module homomorphisms into it are the linear maps.
const RatAlgebra& rcone() {
  static const RatAlgebra a("rcone", {rop("add", RatOpKind::Add, Tag::EQ),
                                      rop("scale", RatOpKind::ScaleFamily, Tag::EQ),
                                      rop("zero", RatOpKind::Const, Tag::EQ)});
  return a;
}

// Relaxed morphisms into rplus_max are the sublinear maps: subadditive,
// max-superadditive, homogeneous, zero-preserving.
const RatAlgebra& rplusMax() {
  static const RatAlgebra a("rplus_max", {rop("add", RatOpKind::Add, Tag::LE),
                                          rop("max", RatOpKind::Max, Tag::GE),
                                          rop("scale", RatOpKind::ScaleFamily, Tag::EQ),
                                          rop("zero", RatOpKind::Const, Tag::EQ)});
  return a;
}

const RatAlgebra& rplusMin() {
  static const RatAlgebra a("rplus_min", {rop("add", RatOpKind::Add, Tag::GE),
                                          rop("min", RatOpKind::Min, Tag::LE),
                                          rop("scale", RatOpKind::ScaleFamily, Tag::EQ),
                                          rop("zero", RatOpKind::Const, Tag::EQ)});
  return a;
}

const RatAlgebra& rsemiring() {
  static const RatAlgebra a("rsemiring", {rop("add", RatOpKind::Add, Tag::EQ),
                                          rop("mul", RatOpKind::Mul, Tag::EQ),
                                          rop("zero", RatOpKind::Const, Tag::EQ),
                                          rop("one", RatOpKind::Const, Tag::EQ, ExtNN(1))});
  return a;
}

const std::vector<RatAlgebra>& ratAlgebras() {
  static const std::vector<RatAlgebra> all{rplus(), rcone(), rplusMax(), rplusMin(), rsemiring()};
  return all;
}

const RatAlgebra& ratAlgebra(std::string_view name) {
  for (const auto& a : ratAlgebras()) {
    if (a.name() == name) return a;
  }
  fail(ErrorKind::UnknownName, "no rational catalog algebra named '" + std::string(name) + "'");
}

bool hasAlgebra(std::string_view name) {
  for (const auto& a : finiteAlgebras()) {
    if (a.name() == name) return true;
  }
  for (const auto& a : ratAlgebras()) {
    if (a.name() == name) return true;
  }
  return false;
}

}  // namespace powdom::catalog
