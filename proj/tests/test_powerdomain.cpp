#include <algorithm>
#include <functional>

#include "doctest.h"
#include "powdom/catalog.hpp"
#include "powdom/error.hpp"
#include "powdom/powerdomain.hpp"

using namespace powdom;

namespace {

LawConfig quick() {
  LawConfig cfg;
  cfg.trials = 1500;
  return cfg;
}

// Independent oracle: subsets of a small poset by brute force.
std::vector<ElemBits> subsets(const FinPoset& x, const std::function<bool(const ElemBits&)>& keep) {
  std::vector<ElemBits> out;
  const std::size_t n = x.size();
  for (std::uint64_t code = 0; code < (1ULL << n); ++code) {
    ElemBits s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i, (code >> i) & 1U);
    if (keep(s)) out.push_back(s);
  }
  return out;
}

bool downClosedByHand(const FinPoset& x, const ElemBits& s) {
  for (Elem a = 0; a < x.size(); ++a) {
    for (Elem b = 0; b < x.size(); ++b) {
      if (s.test(a) && x.leq(b, a) && !s.test(b)) return false;
    }
  }
  return true;
}

bool upClosedByHand(const FinPoset& x, const ElemBits& s) {
  for (Elem a = 0; a < x.size(); ++a) {
    for (Elem b = 0; b < x.size(); ++b) {
      if (s.test(a) && x.leq(a, b) && !s.test(b)) return false;
    }
  }
  return true;
}

// Maps phi from the opens to {0,1} that are monotone and preserve either
// (union, empty) or (intersection, whole), counted directly on bitsets.
std::size_t countSemilatticeHoms(const FinPoset& x, bool meet) {
  auto opens = subsets(x, [&](const ElemBits& s) { return upClosedByHand(x, s); });
  const std::size_t k = opens.size();
  auto indexOf = [&](const ElemBits& s) {
    return static_cast<std::size_t>(std::find(opens.begin(), opens.end(), s) - opens.begin());
  };
  const ElemBits empty(x.size());
  const ElemBits whole = empty.complement();
  std::size_t count = 0;
  for (std::uint64_t code = 0; code < (1ULL << k); ++code) {
    auto phi = [&](std::size_t i) { return ((code >> i) & 1U) != 0; };
    bool ok = meet ? phi(indexOf(whole)) : !phi(indexOf(empty));
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (opens[i].isSubsetOf(opens[j]) && phi(i) && !phi(j)) ok = false;
        const auto c = meet ? (opens[i] & opens[j]) : (opens[i] | opens[j]);
        const bool want = meet ? (phi(i) && phi(j)) : (phi(i) || phi(j));
        if (phi(indexOf(c)) != want) ok = false;
      }
    }
    if (ok) ++count;
  }
  return count;
}

// Every monotone predicate with values in a small fixed set.
std::vector<Predicate> smallPredicates(const PosetPtr& x) {
  const std::vector<ExtNN> vals{ExtNN(0), ExtNN::fraction(1, 2), ExtNN(1), ExtNN(3),
                                ExtNN::infinity()};
  std::vector<Predicate> out;
  const std::size_t n = x->size();
  std::vector<std::size_t> idx(n, 0);
  for (bool more = true; more;) {
    std::vector<ExtNN> v;
    bool mono = true;
    for (Elem a = 0; a < n; ++a) v.push_back(vals[idx[a]]);
    for (Elem a = 0; a < n && mono; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (x->leq(a, b) && !(v[a] <= v[b])) mono = false;
      }
    }
    if (mono) out.emplace_back(x, v);
    more = false;
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < vals.size()) {
        more = true;
        break;
      }
      idx[i] = 0;
    }
  }
  return out;
}

SimpleValuation val(const PosetPtr& x, std::vector<std::pair<ExtNN, std::string>> atoms) {
  std::vector<Atom> out;
  for (auto& [w, label] : atoms) out.push_back(Atom{w, x->find(label).value()});
  return SimpleValuation(x, std::move(out));
}

ExtNN q(std::int64_t p, std::int64_t d = 1) { return ExtNN::fraction(p, d); }

}  // namespace

TEST_CASE("hoare powerdomain of small posets") {
  auto c2 = hoarePowerdomain(catalog::chain2());
  CHECK(c2.verdict);
  REQUIRE(c2.sets.size() == 3);
  // Down-sets in bitset order: {}, {bot}, {bot,top}.
  CHECK(c2.poset->label(0) == "{}");
  CHECK(c2.poset->label(1) == "{bot}");
  CHECK(c2.poset->label(2) == "{bot,top}");
  CHECK(c2.poset->lt(0, 1));
  CHECK(c2.poset->lt(1, 2));
  // The empty set goes to the constant-0 functional, the bottom of T X.
  const auto& tx = c2.image[0].space;
  for (auto v : c2.image[0].table()) CHECK(v == 0);
  CHECK(tx->poset()->bottom() == c2.image[0].index);

  auto a2 = hoarePowerdomain(catalog::anti2());
  CHECK(a2.verdict);
  CHECK(a2.sets.size() == 4);
  CHECK(a2.poset->bottom().has_value());
  CHECK(a2.poset->top().has_value());
}

TEST_CASE("hoare and smyth agree with brute-force counts") {
  for (const auto& x : catalog::posets(4)) {
    CAPTURE(x->name());
    auto h = hoarePowerdomain(x);
    auto s = smythPowerdomain(x);
    CHECK(h.verdict);
    CHECK(s.verdict);
    const auto downs = subsets(*x, [&](const ElemBits& b) { return downClosedByHand(*x, b); });
    const auto ups = subsets(*x, [&](const ElemBits& b) { return upClosedByHand(*x, b); });
    CHECK(h.sets.size() == downs.size());
    CHECK(s.sets.size() == ups.size());
    CHECK(h.hom.size() == countSemilatticeHoms(*x, false));
    CHECK(s.hom.size() == countSemilatticeHoms(*x, true));
    CHECK(h.freeEqualsHom.holds);
    CHECK(s.freeEqualsHom.holds);
    CHECK(s.shape.holds);
  }
}

TEST_CASE("smyth powerdomain orders by reverse inclusion") {
  auto c2 = smythPowerdomain(catalog::chain2());
  CHECK(c2.verdict);
  REQUIRE(c2.sets.size() == 3);
  auto at = [&](std::string_view label) { return c2.poset->find(label).value(); };
  CHECK(c2.poset->lt(at("{bot,top}"), at("{top}")));
  CHECK(c2.poset->lt(at("{top}"), at("{}")));
  CHECK(c2.poset->top() == at("{}"));
  CHECK(c2.poset->bottom() == at("{bot,top}"));

  CHECK(smythPowerdomain(catalog::anti2()).sets.size() == 4);
}

TEST_CASE("set powerdomains honor the size guard") {
  CHECK_THROWS_AS(hoarePowerdomain(catalog::crown4(), 5), Error);
  try {
    smythPowerdomain(catalog::crown4(), 5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeGuardExceeded);
  }
}

TEST_CASE("sobrification") {
  auto a2 = sobrification(catalog::anti2());
  CHECK(a2.verdict);
  REQUIRE(a2.points.size() == 2);
  ContinuationMonad m(catalog::frame2());
  const auto deltas = m.deltas(catalog::anti2());
  for (const auto& d : deltas) {
    CHECK(std::find_if(a2.points.begin(), a2.points.end(), [&](const Functional& p) {
            return p.index == d.index;
          }) != a2.points.end());
  }

  auto c2 = sobrification(catalog::chain2());
  CHECK(c2.verdict);
  REQUIRE(c2.points.size() == 2);
  CHECK(c2.poset->lt(0, 1) != c2.poset->lt(1, 0));

  for (const auto& x : catalog::posets()) {
    CAPTURE(x->name());
    auto s = sobrification(x);
    CHECK(s.verdict);
    CHECK(s.points.size() == x->size());
  }
}

TEST_CASE("simple valuations are canonical") {
  const auto& a2 = catalog::anti2();
  auto mu = val(a2, {{q(1, 3), "b"}, {q(1, 2), "a"}, {q(1, 6), "b"}, {q(0), "a"}});
  CHECK(mu.str() == "val{1/2@a; 1/2@b}");
  CHECK(mu == val(a2, {{q(1, 2), "a"}, {q(1, 2), "b"}}));
  CHECK(mu.mass() == q(1));
  CHECK(SimpleValuation::zero(a2).str() == "val{}");
  CHECK(val(a2, {{q(0), "a"}}) == SimpleValuation::zero(a2));
  CHECK_THROWS_AS(SimpleValuation(a2, {Atom{q(1), 7}}), Error);
}

TEST_CASE("valuation evaluation") {
  const auto& c2 = catalog::chain2();
  const Predicate f(c2, {q(1), q(2)});
  CHECK(evalValuation(val(c2, {{q(1, 2), "bot"}, {q(1, 3), "top"}}), f) == q(7, 6));
  for (Elem p = 0; p < c2->size(); ++p) {
    CHECK(evalValuation(SimpleValuation::dirac(c2, p), f) == f(p));
  }
  // Infinite weight on a point where f vanishes contributes nothing.
  const Predicate g(c2, {q(0), q(5)});
  CHECK(evalValuation(SimpleValuation::dirac(c2, 0, ExtNN::infinity()), g) == q(0));
  CHECK(evalValuation(SimpleValuation::dirac(c2, 1, ExtNN::infinity()), g) == ExtNN::infinity());

  const Predicate other(catalog::anti2(), {q(1), q(1)});
  try {
    evalValuation(SimpleValuation::dirac(c2, 0), other);
    FAIL("expected a type mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TypeMismatch);
  }
}

TEST_CASE("valuation order") {
  const auto& c2 = catalog::chain2();
  auto bot = SimpleValuation::dirac(c2, 0);
  auto top = SimpleValuation::dirac(c2, 1);
  CHECK(valuationLeq(bot, bot));
  CHECK(valuationLeq(bot, top));
  CHECK_FALSE(valuationLeq(top, bot));
  CHECK_FALSE(valuationLeq(SimpleValuation::dirac(c2, 0, q(2)), top));
}

TEST_CASE("valuation order agrees with domination on all small predicates") {
  for (const auto& x : catalog::posets(4)) {
    CAPTURE(x->name());
    const auto preds = smallPredicates(x);
    const auto vs = catalogValuations(x);
    for (const auto& mu : vs) {
      for (const auto& nu : vs) {
        bool pointwise = true;
        for (const auto& f : preds) {
          if (!(evalValuation(mu, f) <= evalValuation(nu, f))) pointwise = false;
        }
        CAPTURE(mu.str());
        CAPTURE(nu.str());
        CHECK(valuationLeq(mu, nu) == pointwise);
        CHECK(checkLeqOracle(mu, nu, quick()).holds);
      }
    }
  }
}

TEST_CASE("evaluation is linear") {
  for (const auto& x : catalog::posets(4)) {
    for (const auto& mu : catalogValuations(x)) {
      CAPTURE(mu.str());
      auto r = checkLinear(mu, quick());
      CHECK(r.verdict);
      CHECK(r.additive.cases > 0);
    }
  }
}

TEST_CASE("cone combinations") {
  const auto& a2 = catalog::anti2();
  auto mu = val(a2, {{q(1, 2), "a"}, {q(3), "b"}});
  auto nu = val(a2, {{q(1, 4), "b"}});
  CHECK(coneCombine(q(1), mu, q(0), nu) == mu);
  auto da = SimpleValuation::dirac(a2, 0);
  CHECK(coneCombine(q(1, 2), da, q(1, 2), da) == da);
  CHECK(coneCombine(q(2), mu, q(4), nu) == val(a2, {{q(1), "a"}, {q(7), "b"}}));
  Sampler s(3);
  for (int i = 0; i < 200; ++i) {
    const ExtNN r = s.extnn();
    const Predicate f = samplePredicate(a2, s);
    auto rmu = coneCombine(r, mu, q(0), nu);
    CHECK(evalValuation(rmu, f) == r * evalValuation(mu, f));
  }
  CHECK_THROWS_AS(coneCombine(q(1), mu, q(1), SimpleValuation::zero(catalog::chain2())), Error);
}

TEST_CASE("cone and module axioms on valuations") {
  for (const auto& x : catalog::posets(4)) {
    CAPTURE(x->name());
    for (const auto& [name, outcome] : checkConeAxioms(x, quick())) {
      CAPTURE(name);
      CHECK(outcome.holds);
    }
    const ValuationCone cone(x);
    const ScalarEndoSpace scalars(cone.base());
    auto onVals = [](const ExtNN& r, const SimpleValuation& mu) {
      return coneCombine(r, mu, ExtNN(0), mu);
    };
    CHECK(checkModuleAxioms(scalars, cone, onVals, quick()).verdict);
    const PredicateAlgebra preds(cone.base(), x);
    auto onPreds = [](const ExtNN& r, const Predicate& f) { return predScale(r, f); };
    CHECK(checkModuleAxioms(scalars, preds, onPreds, quick()).verdict);
  }
}

TEST_CASE("max and min combinations") {
  const auto& a2 = catalog::anti2();
  auto da = SimpleValuation::dirac(a2, 0);
  auto db = SimpleValuation::dirac(a2, 1);
  const Predicate f(a2, {q(1), q(2)});
  CHECK(evalSubFn(SubFn({da, db}), f) == q(2));
  CHECK(evalSupFn(SupFn({da, db}), f) == q(1));
  CHECK(evalSubFn(SubFn({da}), f) == evalValuation(da, f));
  CHECK(SubFn({db, da, db}).str() == "sup{val{1@a}; val{1@b}}");
  CHECK(SupFn({da, db}).str() == "inf{val{1@a}; val{1@b}}");
  CHECK_THROWS_AS(SubFn(std::vector<SimpleValuation>{}), Error);
  CHECK_THROWS_AS(SubFn({da, SimpleValuation::dirac(catalog::chain2(), 0)}), Error);
}

TEST_CASE("suprema are sublinear and infima superlinear") {
  for (const auto& x : catalog::posets(3)) {
    CAPTURE(x->name());
    for (const auto& phi : catalogSubFns(x)) {
      CAPTURE(phi.str());
      auto r = checkSublinear(phi, quick());
      CHECK(r.verdict);
      CHECK(r.zero.holds);
    }
    for (const auto& psi : catalogSupFns(x)) {
      CAPTURE(psi.str());
      CHECK(checkSuperlinear(psi, quick()).verdict);
    }
  }
}

TEST_CASE("an infimum of incomparable masses is not sublinear") {
  const auto& a2 = catalog::anti2();
  SupFn psi({SimpleValuation::dirac(a2, 0), SimpleValuation::dirac(a2, 1)});
  auto r = checkSublinear(psi, quick());
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.additive.holds);
  REQUIRE(r.additive.witness);
  // Found on the characteristic-function grid, before any sampling.
  CHECK(r.additive.cases <= 25);
  SubFn phi({SimpleValuation::dirac(a2, 0), SimpleValuation::dirac(a2, 1)});
  CHECK_FALSE(checkSuperlinear(phi, quick()).verdict);
}

TEST_CASE("sublinear maps are the relaxed morphisms into the max cone") {
  for (const auto& x : {catalog::chain2(), catalog::anti2()}) {
    const PredicateAlgebra pmax(catalog::rplusMax(), x);
    const PredicateAlgebra pmin(catalog::rplusMin(), x);
    SubFn phi({SimpleValuation::dirac(x, 0), SimpleValuation::dirac(x, 1)});
    SupFn psi({SimpleValuation::dirac(x, 0), SimpleValuation::dirac(x, 1)});
    auto evPhi = [&](const Predicate& f) { return evalSubFn(phi, f); };
    auto evPsi = [&](const Predicate& f) { return evalSupFn(psi, f); };
    CHECK(checkMorphism(pmax, catalog::rplusMax(), evPhi, MorphismKind::Relaxed, quick()).verdict);
    CHECK(checkMorphism(pmin, catalog::rplusMin(), evPsi, MorphismKind::Relaxed, quick()).verdict);
    const bool chain = x == catalog::chain2();
    // On a chain the two point masses are comparable and both collapse to a
    // single linear functional; on A2 they do not.
    CHECK(checkMorphism(pmax, catalog::rplusMax(), evPsi, MorphismKind::Relaxed, quick())
              .verdict == chain);
    CHECK(checkMorphism(pmax, catalog::rplusMax(), evPhi, MorphismKind::Homomorphism, quick())
              .verdict == chain);
  }
}

TEST_CASE("domination") {
  const auto& a2 = catalog::anti2();
  auto mu = val(a2, {{q(1, 2), "a"}, {q(2), "b"}});
  auto nu = val(a2, {{q(1), "a"}});
  SubFn phi({mu, nu});
  for (const auto& c : phi.components()) CHECK(dominationCheck(c, phi, quick()).holds);
  auto sum = coneCombine(q(1), mu, q(1), nu);
  auto bad = dominationCheck(sum, phi, quick());
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness);

  SubFn single({mu});
  SupFn singleInf({mu});
  CHECK(dominationCheck(mu, single, quick()).holds);
  CHECK(dominationCheck(mu, singleInf, quick()).holds);

  SupFn psi({mu, nu});
  CHECK(dominationCheck(SimpleValuation::zero(a2), phi, quick()).holds);
  CHECK(dominationCheck(sum, psi, quick()).holds);
  CHECK_FALSE(dominationCheck(SimpleValuation::zero(a2), psi, quick()).holds);
}

TEST_CASE("non-integer multiples of a point mass") {
  const auto& c2 = catalog::chain2();
  auto half = nonIntegerWitness(c2, 1, q(1, 2), quick());
  CHECK(half.verdict);
  CHECK(half.morphism.verdict);
  CHECK(half.mass == q(1, 2));
  CHECK(half.massOutsideNaturals);
  CHECK(half.naturalMasses.holds);

  auto seven = nonIntegerWitness(catalog::anti2(), 0, q(7, 3), quick());
  CHECK(seven.verdict);
  CHECK(seven.mass == q(7, 3));

  for (auto r : {q(2), q(0)}) {
    try {
      nonIntegerWitness(c2, 0, r);
      FAIL("expected a rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RejectInteger);
    }
  }
  CHECK_THROWS_AS(nonIntegerWitness(c2, 0, ExtNN::infinity()), Error);
}
