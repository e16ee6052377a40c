#include <algorithm>

#include "doctest.h"
#include "powdom/catalog.hpp"
#include "powdom/error.hpp"
#include "powdom/monad.hpp"

using namespace powdom;

namespace {

const std::vector<PosetPtr>& small() {
  static const std::vector<PosetPtr> xs{catalog::one(), catalog::chain2(), catalog::anti2()};
  return xs;
}

std::vector<Tag> allTags(std::size_t k, std::size_t code) {
  std::vector<Tag> t(k);
  for (std::size_t i = 0; i < k; ++i, code /= 3) t[i] = static_cast<Tag>(code % 3);
  return t;
}

std::size_t tagCodes(std::size_t k) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= 3;
  return n;
}

std::vector<std::vector<Elem>> tables(const std::vector<Functional>& fs) {
  std::vector<std::vector<Elem>> out;
  for (const auto& f : fs) out.emplace_back(f.table().begin(), f.table().end());
  return out;
}

}  // namespace

TEST_CASE("unit") {
  ContinuationMonad m(catalog::angelic2());
  const auto& c2 = catalog::chain2();
  auto rx = m.predicates(c2);
  REQUIRE(rx->size() == 3);
  CHECK(rx->poset()->label(0) == "<0,0>");
  CHECK(rx->poset()->label(2) == "<1,1>");
  auto bot = m.delta(c2, 0);
  CHECK(std::vector<Elem>(bot.table().begin(), bot.table().end()) == std::vector<Elem>{0, 0, 1});
  auto top = m.delta(c2, 1);
  CHECK(std::vector<Elem>(top.table().begin(), top.table().end()) == std::vector<Elem>{0, 1, 1});
  CHECK(m.functionals(c2)->poset()->leq(bot.index, top.index));

  auto pt = m.deltas(catalog::one());
  REQUIRE(pt.size() == 1);
  CHECK(std::vector<Elem>(pt[0].table().begin(), pt[0].table().end()) == std::vector<Elem>{0, 1});
}

TEST_CASE("Kleisli lifting") {
  ContinuationMonad m(catalog::angelic2());
  const auto& c2 = catalog::chain2();
  const auto& a2 = catalog::anti2();
  auto unit = m.unit(c2);
  const auto& tc = m.functionals(c2);
  for (Elem phi = 0; phi < tc->size(); ++phi) {
    CHECK(m.kleisliLift(unit, Functional{tc, phi}).index == phi);
  }
  for (const auto& t : m.stateTransformers(c2, a2)) {
    for (Elem p = 0; p < 2; ++p) CHECK(m.kleisliLift(t, m.delta(c2, p)).index == t.map(p));
    // The lifted map agrees with the pointwise lift.
    auto lift = m.kleisliMap(t);
    for (Elem phi = 0; phi < tc->size(); ++phi) {
      CHECK(lift(phi) == m.kleisliLift(t, Functional{tc, phi}).index);
    }
  }
  // Constant t at psi: t^dagger(phi)(g) = phi(const psi(g)).
  const auto& ta = m.functionals(a2);
  const auto& rc = m.predicates(c2);
  const auto& ra = m.predicates(a2);
  for (Elem psi = 0; psi < ta->size(); ++psi) {
    auto t = m.stateTransformer(c2, a2, {psi, psi});
    for (Elem phi = 0; phi < tc->size(); ++phi) {
      auto lifted = m.kleisliLift(t, Functional{tc, phi});
      for (Elem g = 0; g < ra->size(); ++g) {
        const Elem v = ta->table(psi)[g];
        const Elem k = rc->indexOf(std::vector<Elem>{v, v});
        CHECK(lifted.table()[g] == tc->table(phi)[k]);
      }
    }
  }
  // Mismatched functional.
  auto t = m.unit(c2);
  try {
    m.kleisliLift(t, m.delta(a2, 0));
    FAIL("expected a type mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TypeMismatch);
  }
}

TEST_CASE("functor action") {
  ContinuationMonad m(catalog::demonic2());
  const auto& c2 = catalog::chain2();
  const auto& a2 = catalog::anti2();
  const auto& c3 = catalog::chain3();
  const auto& tc = m.functionals(c2);
  auto id = MonoMap::identity(c2);
  auto us = enumerateMonotone(a2, c2);
  auto vs = enumerateMonotone(c2, c3);
  for (Elem phi = 0; phi < tc->size(); ++phi) {
    CHECK(m.functorAction(id, Functional{tc, phi}).index == phi);
  }
  const auto& ta = m.functionals(a2);
  for (Elem i = 0; i < us->size(); ++i) {
    auto u = us->map(i);
    for (Elem p = 0; p < 2; ++p) CHECK(m.functorAction(u, m.delta(a2, p)) == m.delta(c2, u(p)));
    for (Elem phi = 0; phi < ta->size(); ++phi) {
      Functional f{ta, phi};
      // T u is the lifting of delta after u.
      CHECK(m.functorAction(u, f) == m.kleisliLift(m.pure(u), f));
      for (Elem j = 0; j < vs->size(); ++j) {
        auto v = vs->map(j);
        CHECK(m.functorAction(compose(u, v), f) == m.functorAction(v, m.functorAction(u, f)));
      }
    }
  }
}

TEST_CASE("state and predicate transformers") {
  ContinuationMonad m(catalog::angelic2());
  const auto& c2 = catalog::chain2();
  const auto& a2 = catalog::anti2();
  const auto& ra = m.predicates(a2);
  const auto& rc = m.predicates(c2);
  auto us = enumerateMonotone(a2, c2);
  for (Elem i = 0; i < us->size(); ++i) {
    auto u = us->map(i);
    auto s = m.pTransform(m.pure(u));
    // P(delta after u) is precomposition with u.
    for (Elem g = 0; g < rc->size(); ++g) {
      auto pre = precompose(u, rc->map(g));
      CHECK(s.map(g) == ra->indexOf(pre.table()));
    }
    CHECK(m.qTransform(s) == m.pure(u));
  }
  for (const auto& t : m.stateTransformers(a2, c2)) CHECK(m.qTransform(m.pTransform(t)) == t);
  for (const auto& s : m.predicateTransformers(a2, c2)) CHECK(m.pTransform(m.qTransform(s)) == s);

  // Constant t gives g |-> const psi(g).
  const auto& tc = m.functionals(c2);
  for (Elem psi = 0; psi < tc->size(); ++psi) {
    auto s = m.pTransform(m.stateTransformer(a2, c2, {psi, psi}));
    for (Elem g = 0; g < rc->size(); ++g) {
      const Elem v = tc->table(psi)[g];
      CHECK(s.map(g) == ra->indexOf(std::vector<Elem>{v, v}));
    }
  }
  // The identity on R^X corresponds to the unit.
  PredicateTransformer ident{c2, c2, MonoMap::identity(rc->poset())};
  CHECK(m.qTransform(ident) == m.unit(c2));
}

TEST_CASE("homomorphism functionals") {
  ContinuationMonad m(catalog::angelic2());
  const auto& c2 = catalog::chain2();
  auto homs = m.homFunctionals(c2);
  REQUIRE(homs.size() == 3);
  // Ordered as a chain like the down-sets of C2.
  const auto& tp = m.functionals(c2)->poset();
  CHECK(tp->leq(homs[0].index, homs[1].index));
  CHECK(tp->leq(homs[1].index, homs[2].index));
  CHECK(m.homFunctionals(catalog::anti2()).size() == 4);
  auto one = m.homFunctionals(catalog::one());
  CHECK(std::find(one.begin(), one.end(), m.delta(catalog::one(), 0)) != one.end());
  for (const auto& x : catalog::posets(4)) {
    for (const auto& d : m.deltas(x)) CHECK(m.isHomomorphism(d));
  }
}

TEST_CASE("relaxed functionals") {
  for (const auto& r : catalog::finiteAlgebras()) {
    ContinuationMonad m(r);
    for (const auto& x : small()) CHECK(tables(m.relaxedFunctionals(x)) == tables(m.homFunctionals(x)));
  }
  // Join tagged LE: monotonicity already gives the other inequality.
  ContinuationMonad le(catalog::angelic2().retagged({Tag::LE, Tag::EQ}));
  CHECK(le.relaxedFunctionals(catalog::chain2()).size() == 3);
  CHECK(le.relaxedFunctionals(catalog::anti2()).size() == 4);
  // Join tagged GE: every monotone functional preserving 0.
  ContinuationMonad ge(catalog::angelic2().retagged({Tag::GE, Tag::EQ}));
  CHECK(ge.relaxedFunctionals(catalog::chain2()).size() == 3);
  CHECK(ge.relaxedFunctionals(catalog::anti2()).size() == 5);
  CHECK(ge.homFunctionals(catalog::anti2()).size() == 4);
  for (const auto& x : small()) {
    for (const auto& d : ge.deltas(x)) CHECK(ge.isRelaxedMorphism(d));
  }
}

TEST_CASE("free functionals") {
  ContinuationMonad m(catalog::angelic2());
  const auto& c2 = catalog::chain2();
  auto free = m.freeFunctionals(c2);
  CHECK(tables(free) == tables(m.homFunctionals(c2)));
  CHECK(tables(free) == std::vector<std::vector<Elem>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}});
  auto fa = m.freeFunctionals(catalog::anti2());
  REQUIRE(fa.size() == 4);
  auto one = m.freeFunctionals(catalog::one());
  CHECK(tables(one) == std::vector<std::vector<Elem>>{{0, 0}, {0, 1}});
}

TEST_CASE("monad laws") {
  for (const auto* r : {&catalog::angelic2(), &catalog::demonic2()}) {
    ContinuationMonad m(*r);
    for (const auto& x : small()) {
      for (const auto& y : small()) {
        for (const auto& z : small()) {
          for (Family f : {Family::Full, Family::Hom, Family::Free}) {
            auto rep = checkMonadLaws(m, x, y, z, f);
            CAPTURE(x->name());
            CAPTURE(y->name());
            CAPTURE(z->name());
            CHECK(rep.verdict);
            CHECK(rep.unitLeft.cases > 0);
            CHECK(rep.associativity.cases > 0);
          }
        }
      }
    }
  }
  // A single instance through the pair overload.
  ContinuationMonad m(catalog::angelic2());
  auto ts = m.stateTransformers(catalog::chain2(), catalog::anti2());
  auto rs = m.stateTransformers(catalog::anti2(), catalog::chain2());
  CHECK(checkMonadLaws(m, ts.back(), rs.front()).verdict);
}

TEST_CASE("the lattice is not entropic and free functionals leave the homomorphisms") {
  // Meet of two projections is not a join homomorphism.
  ContinuationMonad m(catalog::lattice2());
  auto cmp = compareFamilies(m, catalog::anti2());
  CHECK(!cmp.freeInHom);
  CHECK(!cmp.freeMinusHom.empty());
}

TEST_CASE("transformer checks") {
  for (const auto* r : {&catalog::angelic2(), &catalog::demonic2()}) {
    ContinuationMonad m(*r);
    for (const auto& x : small()) {
      CHECK(checkDeltaEmbedding(m, x).holds);
      for (const auto& y : small()) {
        CHECK(checkTransformerBijection(m, x, y).holds);
        CHECK(checkKleisliHomomorphism(m, x, y).holds);
        CHECK(checkKleisliPreserves(m, x, y, Family::Hom).holds);
        CHECK(checkKleisliPreserves(m, x, y, Family::Relaxed).holds);
        CHECK(checkTransformerCorrespondence(m, x, y, Family::Hom).holds);
        CHECK(checkTransformerCorrespondence(m, x, y, Family::Relaxed).holds);
      }
    }
  }
  // Relaxed versions under every tagging of the frame.
  const auto& fr = catalog::frame2();
  for (std::size_t code = 0; code < tagCodes(4); code += 7) {
    ContinuationMonad m(fr.retagged(allTags(4, code)));
    CHECK(checkKleisliPreserves(m, catalog::anti2(), catalog::chain2(), Family::Relaxed).holds);
    CHECK(checkTransformerCorrespondence(m, catalog::chain2(), catalog::anti2(), Family::Relaxed)
              .holds);
  }
}

TEST_CASE("unit of an algebra is a homomorphism") {
  for (const auto* a : {&catalog::angelic2(), &catalog::demonic2(), &catalog::lattice2()}) {
    auto out = checkUnitHomomorphism(*a, *a);
    CHECK(out.holds);
    CHECK(out.cases > 0);
  }
  // A lifted algebra into the base.
  ContinuationMonad m(catalog::lattice2());
  CHECK(checkUnitHomomorphism(m.predicateAlgebra(catalog::vee()), catalog::lattice2()).holds);
}

TEST_CASE("free functionals inside homomorphisms for entropic algebras") {
  for (const auto& r : catalog::finiteAlgebras()) {
    const bool entropic = isEntropic(r).verdict;
    ContinuationMonad m(r);
    for (const auto& x : catalog::posets(4)) {
      auto cmp = compareFamilies(m, x);
      if (entropic) CHECK(cmp.freeInHom);
      CHECK(cmp.homInRelaxed);
    }
    const std::size_t k = r.signature().size();
    for (std::size_t code = 0; code < tagCodes(k); ++code) {
      auto rt = r.retagged(allTags(k, code));
      if (!isRelaxedEntropic(rt).verdict) continue;
      ContinuationMonad mr(rt);
      for (const auto& x : catalog::posets(3)) CHECK(compareFamilies(mr, x).freeInRelaxed);
    }
  }
}
