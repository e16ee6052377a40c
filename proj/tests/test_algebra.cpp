#include <algorithm>

#include "doctest.h"
#include "powdom/algebra.hpp"
#include "powdom/catalog.hpp"
#include "powdom/error.hpp"
#include "powdom/laws.hpp"
#include "powdom/ratalgebra.hpp"

using namespace powdom;

namespace {

ExtNN q(long n, long d = 1) { return ExtNN::fraction(n, d); }

ErrorKind kindOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidValue;
}

// The projection f |-> f(x) as a map [X -> R] -> R.
MonoMap projection(const ExpPtr& space, Elem x) {
  std::vector<Elem> t(space->size());
  for (Elem f = 0; f < space->size(); ++f) t[f] = space->table(f)[x];
  return MonoMap(space->poset(), space->target(), t);
}

// Oracle for homomorphisms: direct loops over the binary and nullary tables.
bool homByHand(const MonoMap& phi, const FinAlgebra& b, const FinAlgebra& r) {
  for (std::size_t op = 0; op < r.signature().size(); ++op) {
    const unsigned n = r.signature().op(op).arity;
    if (n == 0) {
      if (phi(b.apply(op, {})) != r.apply(op, {})) return false;
      continue;
    }
    REQUIRE(n == 2);
    for (Elem x = 0; x < b.size(); ++x) {
      for (Elem y = 0; y < b.size(); ++y) {
        std::vector<Elem> xy{x, y};
        std::vector<Elem> img{phi(x), phi(y)};
        if (phi(b.apply(op, xy)) != r.apply(op, img)) return false;
      }
    }
  }
  return true;
}

std::vector<Tag> allTags(std::size_t k, std::size_t code) {
  std::vector<Tag> t(k);
  for (std::size_t i = 0; i < k; ++i, code /= 3) t[i] = static_cast<Tag>(code % 3);
  return t;
}

}  // namespace

TEST_CASE("signatures") {
  CHECK(kindOf([] { Signature({{"f", 2, Tag::EQ, false}, {"f", 1, Tag::EQ, false}}); }) ==
        ErrorKind::InvalidValue);
  CHECK(kindOf([] { Signature({{"s", 2, Tag::EQ, true}}); }) == ErrorKind::InvalidValue);
  const auto& sig = catalog::angelic2().signature();
  CHECK(sig.index("join") == 0);
  CHECK(kindOf([&] { sig.index("plus"); }) == ErrorKind::UnknownOp);
  CHECK(parseTag("GE") == Tag::GE);
  CHECK(sig.sameShape(sig.withTags({Tag::LE, Tag::GE})));
}

TEST_CASE("finite algebra validation") {
  const auto& two = catalog::two();
  Signature neg({{"neg", 1, Tag::EQ, false}});
  CHECK(kindOf([&] { FinAlgebra("bad", two, neg, {{1, 0}}); }) == ErrorKind::NonMonotone);
  CHECK(kindOf([&] { FinAlgebra("bad", two, neg, {{1, 0, 1}}); }) == ErrorKind::ArityMismatch);
  // Monotone in the first argument only.
  Signature bin({{"f", 2, Tag::EQ, false}});
  CHECK(kindOf([&] { FinAlgebra("bad", two, bin, {{0, 1, 1, 0}}); }) == ErrorKind::NonMonotone);
  const auto& a = catalog::angelic2();
  std::vector<Elem> args{0, 1};
  CHECK(a.apply(0, args) == 1);
  CHECK(kindOf([&] { a.apply(1, args); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("pointwise lifting") {
  const auto& a = catalog::angelic2();
  auto lifted = liftPointwise(a, catalog::chain2());
  REQUIRE(lifted.space->size() == 3);
  const auto& la = lifted.algebra;
  // Join is the pairwise max of tables: maps 0 = <0,0>, 1 = <0,1>, 2 = <1,1>.
  for (Elem f = 0; f < 3; ++f) {
    for (Elem g = 0; g < 3; ++g) {
      std::vector<Elem> fg{f, g};
      CHECK(la.apply(0, fg) == std::max(f, g));
    }
  }
  CHECK(la.apply(1, {}) == 0);
  CHECK(la.carrier()->leq(0, 1));
  CHECK(la.carrier()->leq(1, 2));

  auto one = liftPointwise(a, catalog::one());
  REQUIRE(one.space->size() == 2);
  CHECK(one.algebra.table(0) == a.table(0));
  CHECK(one.algebra.table(1) == a.table(1));

  try {
    liftPointwise(catalog::frame2(), catalog::crown4(), 3);
    FAIL("expected the size guard to trip");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeGuardExceeded);
  }
}

TEST_CASE("homomorphism checks") {
  const auto& a = catalog::angelic2();
  CHECK(isHomomorphism(MonoMap::identity(a.carrier()), a, a));

  auto lifted = liftPointwise(a, catalog::chain2());
  auto bot = projection(lifted.space, 0);
  auto top = projection(lifted.space, 1);
  CHECK(bot.table() == std::vector<Elem>{0, 0, 1});
  CHECK(isHomomorphism(bot, lifted.algebra, a));
  CHECK(isHomomorphism(top, lifted.algebra, a));

  // On A2 the map that is 1 only on the constant-1 predicate is not a join
  // homomorphism: it sends chi_a and chi_b to 0 but their join to 1.
  auto la2 = liftPointwise(a, catalog::anti2());
  std::vector<Elem> onlyTop(la2.space->size(), 0);
  onlyTop[la2.space->indexOf(std::vector<Elem>{1, 1})] = 1;
  MonoMap phi(la2.space->poset(), a.carrier(), onlyTop);
  CHECK(!isHomomorphism(phi, la2.algebra, a));
  auto report = checkMorphism(la2.algebra, a, [&](Elem x) { return phi(x); },
                              MorphismKind::Homomorphism);
  CHECK(!report.verdict);
  REQUIRE(report.ops[0].outcome.witness);
  CHECK(report.ops[0].outcome.witness->lhs == "1");
  CHECK(report.ops[0].outcome.witness->rhs == "0");

  CHECK(kindOf([&] { isHomomorphism(phi, a, a); }) == ErrorKind::TypeMismatch);
  CHECK(kindOf([&] {
          isHomomorphism(MonoMap::identity(a.carrier()), catalog::angelic2(), catalog::demonic2());
        }) == ErrorKind::SignatureMismatch);

  // Exhaustive agreement with hand-written loops over every monotone map.
  for (const auto& r : catalog::finiteAlgebras()) {
    for (const auto& x : catalog::posets(3)) {
      auto l = liftPointwise(r, x);
      auto maps = enumerateMonotone(l.space->poset(), r.carrier());
      for (Elem i = 0; i < maps->size(); ++i) {
        auto m = maps->map(i);
        CHECK(isHomomorphism(m, l.algebra, r) == homByHand(m, l.algebra, r));
      }
    }
  }
}

TEST_CASE("relaxed morphisms contain homomorphisms") {
  for (const auto& r : catalog::finiteAlgebras()) {
    const std::size_t k = r.signature().size();
    std::size_t codes = 1;
    for (std::size_t i = 0; i < k; ++i) codes *= 3;
    for (std::size_t code = 0; code < codes; ++code) {
      auto rt = r.retagged(allTags(k, code));
      auto l = liftPointwise(rt, catalog::anti2());
      auto maps = enumerateMonotone(l.space->poset(), rt.carrier());
      for (Elem i = 0; i < maps->size(); ++i) {
        auto m = maps->map(i);
        if (isHomomorphism(m, l.algebra, rt)) CHECK(isRelaxedMorphism(m, l.algebra, rt));
      }
    }
  }
  // All tags EQ: relaxed is the same as homomorphism.
  const auto& a = catalog::frame2();
  auto l = liftPointwise(a, catalog::vee());
  auto maps = enumerateMonotone(l.space->poset(), a.carrier());
  for (Elem i = 0; i < maps->size(); ++i) {
    auto m = maps->map(i);
    CHECK(isRelaxedMorphism(m, l.algebra, a) == isHomomorphism(m, l.algebra, a));
  }
}

TEST_CASE("commutation on finite carriers") {
  const auto& a = catalog::angelic2();
  auto self = commutes(a, 0, 0);
  CHECK(self.holds);
  CHECK(self.exhaustive);
  CHECK(self.cases == 16);
  const auto& l = catalog::lattice2();
  auto mj = commutes(l, 0, 1);
  CHECK(!mj.holds);
  REQUIRE(mj.witness);
  CHECK(mj.witness->args.size() == 4);
  // Commutation is symmetric in (sigma, omega).
  for (const auto& r : catalog::finiteAlgebras()) {
    for (std::size_t s = 0; s < r.signature().size(); ++s) {
      for (std::size_t w = 0; w < r.signature().size(); ++w) {
        CHECK(commutes(r, s, w).holds == commutes(r, w, s).holds);
        if (commutes(r, s, w).holds) CHECK(subcommutes(r, s, w).holds);
      }
    }
  }
}

TEST_CASE("commutation on the rationals") {
  const auto& semi = catalog::rsemiring();
  const std::size_t add = semi.signature().index("add");
  const std::size_t mul = semi.signature().index("mul");
  auto am = commutes(semi, add, mul);
  CHECK(!am.holds);
  CHECK(!am.exhaustive);
  REQUIRE(am.witness);
  CHECK(am.witness->lhs != am.witness->rhs);
  // The textbook instance (1*2)+(3*4) against (1+3)*(2+4).
  CHECK(q(1) * q(2) + q(3) * q(4) == q(14));
  CHECK((q(1) + q(3)) * (q(2) + q(4)) == q(24));

  const auto& rm = catalog::rplusMax();
  const std::size_t scale = rm.signature().index("scale");
  const std::size_t mx = rm.signature().index("max");
  const std::size_t ad = rm.signature().index("add");
  auto sm = commutes(rm, scale, mx);
  CHECK(sm.holds);
  CHECK(!sm.exhaustive);
  CHECK(sm.cases > 10000);

  CHECK(subcommutes(rm, mx, ad).holds);
  CHECK(ennMax(q(0) + q(5), q(5) + q(0)) == q(5));
  CHECK(ennMax(q(0), q(5)) + ennMax(q(5), q(0)) == q(10));
  auto am2 = subcommutes(rm, ad, mx);
  CHECK(!am2.holds);
  REQUIRE(am2.witness);
  CHECK(supercommutes(rm, ad, mx).holds);

  const auto& rn = catalog::rplusMin();
  CHECK(supercommutes(rn, rn.signature().index("min"), rn.signature().index("add")).holds);
  CHECK(subcommutes(rn, rn.signature().index("add"), rn.signature().index("min")).holds);
}

TEST_CASE("entropic algebras") {
  auto ang = isEntropic(catalog::angelic2());
  CHECK(ang.verdict);
  CHECK(ang.exhaustive);
  CHECK(ang.constantsAgree);
  CHECK(isEntropic(catalog::demonic2()).verdict);
  auto lat = isEntropic(catalog::lattice2());
  CHECK(!lat.verdict);
  CHECK(!lat.at(0, 1, 2).outcome.holds);
  CHECK(lat.at(0, 0, 2).outcome.holds);
  // Two different constants can never commute.
  auto fr = isEntropic(catalog::frame2());
  CHECK(!fr.verdict);
  CHECK(!fr.constantsAgree);

  auto rp = isEntropic(catalog::rplus());
  CHECK(rp.verdict);
  CHECK(!rp.exhaustive);
  CHECK(rp.seed == 42);
  CHECK(!isEntropic(catalog::rsemiring()).verdict);

  // Every entropic pair matrix entry is true when the verdict is.
  for (const auto& r : catalog::finiteAlgebras()) {
    auto rep = isEntropic(r);
    if (rep.verdict) {
      for (const auto& p : rep.pairs) CHECK(p.outcome.holds);
    }
  }
}

TEST_CASE("relaxed entropic algebras") {
  CHECK(isRelaxedEntropic(catalog::rplusMax()).verdict);
  CHECK(isRelaxedEntropic(catalog::rplusMin()).verdict);

  // Tagging + as GE and max as LE is not relaxed entropic: + fails to
  // subcommute with max.
  const auto& rm = catalog::rplusMax();
  auto swapped = rm.retagged({Tag::GE, Tag::LE, Tag::EQ, Tag::EQ});
  auto rep = isRelaxedEntropic(swapped);
  CHECK(!rep.verdict);
  const auto& bad = rep.at(0, 1, 4);
  CHECK(bad.required == Relation::LessEq);
  CHECK(!bad.outcome.holds);
  REQUIRE(bad.outcome.witness);

  auto dem = catalog::rplusMin().retagged({Tag::LE, Tag::GE, Tag::EQ, Tag::EQ});
  CHECK(!isRelaxedEntropic(dem).verdict);

  RatAlgebra bothLe("r", {RatOp{"add", RatOpKind::Add, Tag::LE, ExtNN(0)},
                          RatOp{"max", RatOpKind::Max, Tag::LE, ExtNN(0)}});
  auto bl = isRelaxedEntropic(bothLe);
  CHECK(!bl.verdict);

  // Entropic implies relaxed entropic under any tagging on finite algebras.
  for (const auto& r : catalog::finiteAlgebras()) {
    if (!isEntropic(r).verdict) continue;
    const std::size_t k = r.signature().size();
    for (std::size_t code = 0; code < 9 && k <= 2; ++code) {
      CHECK(isRelaxedEntropic(r.retagged(allTags(k, code))).verdict);
    }
  }
}

TEST_CASE("generated subalgebras") {
  const auto& a = catalog::angelic2();
  std::vector<Elem> all{0, 1};
  CHECK(generatedSubalgebra(a, all) == all);
  CHECK(generatedSubalgebra(a, std::vector<Elem>{}) == std::vector<Elem>{0});
  CHECK(generatedSubalgebra(catalog::lattice2(), std::vector<Elem>{}).empty());
  CHECK(kindOf([&] { generatedSubalgebra(a, std::vector<Elem>{7}); }) ==
        ErrorKind::UnknownElement);

  // Functionals on predicates over C2, generated by the two projections.
  auto preds = liftPointwise(a, catalog::chain2());
  auto fun = liftPointwise(a, preds.space->poset());
  const Elem bot = fun.space->indexOf(projection(preds.space, 0).table());
  const Elem top = fun.space->indexOf(projection(preds.space, 1).table());
  std::vector<Elem> gens{bot, top};
  auto closure = generatedSubalgebra(fun.algebra, gens);
  REQUIRE(closure.size() == 3);
  const Elem zero = fun.algebra.apply(1, {});
  CHECK(std::find(closure.begin(), closure.end(), zero) != closure.end());

  // Monotone in the generators and idempotent.
  const auto& f = fun.algebra;
  for (Elem g = 0; g < f.size(); ++g) {
    for (Elem h = 0; h < f.size(); ++h) {
      std::vector<Elem> small{g};
      std::vector<Elem> big{g, h};
      auto cs = generatedSubalgebra(f, small);
      auto cb = generatedSubalgebra(f, big);
      CHECK(std::includes(cb.begin(), cb.end(), cs.begin(), cs.end()));
      CHECK(generatedSubalgebra(f, cb) == cb);
    }
  }
}

TEST_CASE("term evaluation") {
  const auto& a = catalog::angelic2();
  std::vector<Elem> env{0, 1};
  CHECK(evalTerm(Term::var(0), std::span<const Elem>(env), a) == 0);
  auto join = Term::app("join", {Term::var(0), Term::var(1)});
  CHECK(evalTerm(join, std::span<const Elem>(env), a) == 1);
  CHECK(join.str() == "join(v0,v1)");

  const auto& rp = catalog::rplus();
  std::vector<ExtNN> renv{q(5, 3)};
  auto unit = Term::app("add", {Term::var(0), Term::app("zero", {})});
  CHECK(evalTerm(unit, std::span<const ExtNN>(renv), rp) == q(5, 3));

  CHECK(kindOf([&] { evalTerm(Term::var(3), std::span<const Elem>(env), a); }) ==
        ErrorKind::UnboundVariable);
  CHECK(kindOf([&] {
          evalTerm(Term::app("join", {Term::var(0)}), std::span<const Elem>(env), a);
        }) == ErrorKind::ArityMismatch);
  CHECK(kindOf([&] { evalTerm(Term::app("plus", {}), std::span<const Elem>(env), a); }) ==
        ErrorKind::UnknownOp);

  const auto& rm = catalog::rplusMax();
  auto scaled = Term::app("scale", {Term::var(0)}, q(3));
  CHECK(evalTerm(scaled, std::span<const ExtNN>(renv), rm) == q(5));
  CHECK(kindOf([&] {
          evalTerm(Term::app("scale", {Term::var(0)}), std::span<const ExtNN>(renv), rm);
        }) == ErrorKind::ArityMismatch);
}

TEST_CASE("endomorphisms") {
  auto tablesOf = [](const std::vector<Endo>& es) {
    std::vector<std::vector<Elem>> out;
    for (const auto& e : es) out.push_back(std::get<MonoMap>(e.action).table());
    return out;
  };
  CHECK(tablesOf(endomorphisms(catalog::angelic2())) ==
        std::vector<std::vector<Elem>>{{0, 0}, {0, 1}});
  CHECK(tablesOf(endomorphisms(catalog::demonic2())) ==
        std::vector<std::vector<Elem>>{{0, 1}, {1, 1}});
  for (const auto& r : catalog::finiteAlgebras()) {
    auto es = tablesOf(endomorphisms(r));
    CHECK(std::find(es.begin(), es.end(), std::vector<Elem>{0, 1}) != es.end());
  }
}

TEST_CASE("module axioms") {
  const auto& rp = catalog::rplus();
  ScalarEndoSpace scalars(rp);
  auto mul = [](const ExtNN& r, const ExtNN& x) { return r * x; };
  auto ok = checkModuleAxioms(scalars, rp, mul);
  CHECK(ok.verdict);
  CHECK(ok.identity.cases > 0);

  auto shifted = [](const ExtNN& r, const ExtNN& x) { return r * x + ExtNN(1); };
  auto bad = checkModuleAxioms(scalars, rp, shifted);
  CHECK(!bad.verdict);
  REQUIRE(bad.endosOnOps.size() == 2);
  CHECK(!bad.endosOnOps[0].holds);
  REQUIRE(bad.endosOnOps[0].witness);

  const auto& rm = catalog::rplusMax();
  CHECK(checkModuleAxioms(ScalarEndoSpace(rm), rm, mul).verdict);
  CHECK(kindOf([&] {
          checkModuleAxioms(ScalarEndoSpace(catalog::rsemiring()), catalog::rsemiring(), mul);
        }) == ErrorKind::SignatureMismatch);

  for (const auto& r : catalog::finiteAlgebras()) {
    FiniteEndoSpace idOnly(r, {FiniteEndoSpace(r).identity()});
    auto act = [](const std::vector<Elem>& e, Elem x) { return e[x]; };
    CHECK(checkModuleAxioms(idOnly, r, act).verdict);
  }
  // The full endomorphism space of an entropic algebra acts as a module.
  for (const auto* r : {&catalog::angelic2(), &catalog::demonic2()}) {
    FiniteEndoSpace all(*r);
    auto act = [](const std::vector<Elem>& e, Elem x) { return e[x]; };
    CHECK(checkModuleAxioms(all, *r, act).verdict);
  }
}

TEST_CASE("rational algebra operations are monotone") {
  for (const auto& r : catalog::ratAlgebras()) {
    CAPTURE(r.name());
    CHECK(checkMonotone(r).holds);
  }
}

TEST_CASE("homomorphisms into an entropic algebra are closed under lifted operations") {
  for (const auto& r : catalog::finiteAlgebras()) {
    const bool entropic = isEntropic(r).verdict;
    const bool relaxed = isRelaxedEntropic(r).verdict;
    for (const auto& x : catalog::posets(3)) {
      auto b = liftPointwise(r, x);
      auto space = enumerateMonotone(b.space->poset(), r.carrier());
      auto lifted = liftOver(r, space);
      std::vector<Elem> homs;
      std::vector<Elem> rel;
      for (Elem i = 0; i < space->size(); ++i) {
        auto m = space->map(i);
        if (isHomomorphism(m, b.algebra, r)) homs.push_back(i);
        if (isRelaxedMorphism(m, b.algebra, r)) rel.push_back(i);
      }
      if (entropic) CHECK(generatedSubalgebra(lifted, homs) == homs);
      if (relaxed) CHECK(generatedSubalgebra(lifted, rel) == rel);
    }
  }
}
