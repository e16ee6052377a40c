#include "powdom/monad.hpp"

#include <algorithm>

#include "powdom/error.hpp"

namespace powdom {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Full: return "full";
    case Family::Hom: return "hom";
    case Family::Relaxed: return "relaxed";
    case Family::Free: return "free";
  }
  return "?";
}

ContinuationMonad::ContinuationMonad(FinAlgebra r, std::uint64_t sizeGuard)
    : r_(std::move(r)), guard_(sizeGuard) {}

const ContinuationMonad::Entry& ContinuationMonad::entry(const PosetPtr& x) const {
  auto it = cache_.find(x.get());
  if (it != cache_.end()) return it->second;
  Entry e;
  e.x = x;
  e.preds = enumerateMonotone(x, r_.carrier(), guard_);
  e.predAlg.emplace(liftOver(r_, e.preds, guard_));
  return cache_.emplace(x.get(), std::move(e)).first->second;
}

const PosetPtr& ContinuationMonad::baseOf(const Functional& phi) const {
  for (const auto& [key, e] : cache_) {
    if (e.funs == phi.space) return e.x;
  }
  fail(ErrorKind::TypeMismatch, "functional does not belong to this monad");
}

const ExpPtr& ContinuationMonad::predicates(const PosetPtr& x) const { return entry(x).preds; }

const FinAlgebra& ContinuationMonad::predicateAlgebra(const PosetPtr& x) const {
  return *entry(x).predAlg;
}

const ExpPtr& ContinuationMonad::functionals(const PosetPtr& x) const {
  const Entry& e = entry(x);
  if (!e.funs) e.funs = enumerateMonotone(e.preds->poset(), r_.carrier(), guard_);
  return e.funs;
}

const FinAlgebra& ContinuationMonad::functionalAlgebra(const PosetPtr& x) const {
  const Entry& e = entry(x);
  if (!e.funAlg) e.funAlg.emplace(liftOver(r_, functionals(x), guard_));
  return *e.funAlg;
}

Functional ContinuationMonad::functional(const PosetPtr& x, Elem index) const {
  const auto& tx = functionals(x);
  if (index >= tx->size()) fail(ErrorKind::UnknownElement, "no functional " + std::to_string(index));
  return Functional{tx, index};
}

Functional ContinuationMonad::functional(const PosetPtr& x, std::span<const Elem> table) const {
  const auto& tx = functionals(x);
  return Functional{tx, tx->indexOf(table)};
}

Functional ContinuationMonad::delta(const PosetPtr& x, Elem point) const {
  if (point >= x->size()) {
    fail(ErrorKind::UnknownElement, "no element " + std::to_string(point) + " in " + x->name());
  }
  const auto& rx = predicates(x);
  std::vector<Elem> t(rx->size());
  for (Elem f = 0; f < rx->size(); ++f) t[f] = rx->table(f)[point];
  return functional(x, t);
}

std::vector<Functional> ContinuationMonad::deltas(const PosetPtr& x) const {
  std::vector<Functional> out;
  for (Elem p = 0; p < x->size(); ++p) out.push_back(delta(x, p));
  return out;
}

StateTransformer ContinuationMonad::stateTransformer(const PosetPtr& x, const PosetPtr& y,
                                                     std::vector<Elem> table) const {
  return StateTransformer{x, y, MonoMap(x, functionals(y)->poset(), std::move(table))};
}

StateTransformer ContinuationMonad::unit(const PosetPtr& x) const {
  std::vector<Elem> t;
  for (const auto& d : deltas(x)) t.push_back(d.index);
  return stateTransformer(x, x, std::move(t));
}

StateTransformer ContinuationMonad::pure(const MonoMap& u) const {
  std::vector<Elem> t;
  for (Elem p = 0; p < u.source()->size(); ++p) t.push_back(delta(u.target(), u(p)).index);
  return stateTransformer(u.source(), u.target(), std::move(t));
}

void ContinuationMonad::checkState(const StateTransformer& t) const {
  if (t.map.source() != t.x || t.map.target() != functionals(t.y)->poset()) {
    fail(ErrorKind::TypeMismatch, "state transformer does not map " + t.x->name() + " into T " +
                                      t.y->name() + " of this monad");
  }
}

Functional ContinuationMonad::kleisliLift(const StateTransformer& t, const Functional& phi) const {
  checkState(t);
  if (phi.space != functionals(t.x)) {
    fail(ErrorKind::TypeMismatch, "functional is not in T " + t.x->name());
  }
  const auto& ry = predicates(t.y);
  const auto& ty = functionals(t.y);
  const auto& rx = predicates(t.x);
  std::vector<Elem> inner(t.x->size());
  std::vector<Elem> out(ry->size());
  for (Elem g = 0; g < ry->size(); ++g) {
    for (Elem p = 0; p < t.x->size(); ++p) inner[p] = ty->table(t.map(p))[g];
    out[g] = phi.table()[rx->indexOf(inner)];
  }
  return functional(t.y, out);
}

MonoMap ContinuationMonad::kleisliMap(const StateTransformer& t) const {
  checkState(t);
  const auto& tx = functionals(t.x);
  const auto& ry = predicates(t.y);
  const auto& ty = functionals(t.y);
  const auto& rx = predicates(t.x);
  // The predicate x |-> t(x)(g) does not depend on phi; look it up once per g.
  std::vector<Elem> innerIndex(ry->size());
  std::vector<Elem> inner(t.x->size());
  for (Elem g = 0; g < ry->size(); ++g) {
    for (Elem p = 0; p < t.x->size(); ++p) inner[p] = ty->table(t.map(p))[g];
    innerIndex[g] = rx->indexOf(inner);
  }
  std::vector<Elem> table(tx->size());
  std::vector<Elem> out(ry->size());
  for (Elem phi = 0; phi < tx->size(); ++phi) {
    for (Elem g = 0; g < ry->size(); ++g) out[g] = tx->table(phi)[innerIndex[g]];
    table[phi] = ty->indexOf(out);
  }
  return MonoMap(tx->poset(), ty->poset(), std::move(table));
}

StateTransformer ContinuationMonad::kleisliCompose(const StateTransformer& t,
                                                   const StateTransformer& r) const {
  if (t.y != r.x) fail(ErrorKind::TypeMismatch, "state transformers do not compose");
  MonoMap lifted = kleisliMap(r);
  std::vector<Elem> table(t.x->size());
  for (Elem p = 0; p < t.x->size(); ++p) table[p] = lifted(t.map(p));
  return stateTransformer(t.x, r.y, std::move(table));
}

Functional ContinuationMonad::functorAction(const MonoMap& u, const Functional& phi) const {
  if (phi.space != functionals(u.source())) {
    fail(ErrorKind::TypeMismatch, "functional is not in T " + u.source()->name());
  }
  const auto& rx = predicates(u.source());
  const auto& ry = predicates(u.target());
  std::vector<Elem> pre(u.source()->size());
  std::vector<Elem> out(ry->size());
  for (Elem g = 0; g < ry->size(); ++g) {
    for (Elem p = 0; p < pre.size(); ++p) pre[p] = ry->table(g)[u(p)];
    out[g] = phi.table()[rx->indexOf(pre)];
  }
  return functional(u.target(), out);
}

PredicateTransformer ContinuationMonad::pTransform(const StateTransformer& t) const {
  checkState(t);
  const auto& ry = predicates(t.y);
  const auto& rx = predicates(t.x);
  const auto& ty = functionals(t.y);
  std::vector<Elem> table(ry->size());
  std::vector<Elem> pred(t.x->size());
  for (Elem g = 0; g < ry->size(); ++g) {
    for (Elem p = 0; p < t.x->size(); ++p) pred[p] = ty->table(t.map(p))[g];
    table[g] = rx->indexOf(pred);
  }
  return PredicateTransformer{t.x, t.y, MonoMap(ry->poset(), rx->poset(), std::move(table))};
}

StateTransformer ContinuationMonad::qTransform(const PredicateTransformer& s) const {
  const auto& ry = predicates(s.y);
  const auto& rx = predicates(s.x);
  if (s.map.source() != ry->poset() || s.map.target() != rx->poset()) {
    fail(ErrorKind::TypeMismatch, "predicate transformer does not map R^" + s.y->name() +
                                      " into R^" + s.x->name() + " of this monad");
  }
  const auto& ty = functionals(s.y);
  std::vector<Elem> table(s.x->size());
  std::vector<Elem> fun(ry->size());
  for (Elem p = 0; p < s.x->size(); ++p) {
    for (Elem g = 0; g < ry->size(); ++g) fun[g] = rx->table(s.map(g))[p];
    table[p] = ty->indexOf(fun);
  }
  try {
    return stateTransformer(s.x, s.y, std::move(table));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonMonotone) throw;
    fail(ErrorKind::NonMonotoneResult, "Q(s) is not monotone in the state");
  }
}

bool ContinuationMonad::isHomomorphism(const Functional& phi) const {
  const Entry& e = entry(baseOf(phi));
  MonoMap m(e.preds->poset(), r_.carrier(), {phi.table().begin(), phi.table().end()});
  return powdom::isHomomorphism(m, *e.predAlg, r_);
}

bool ContinuationMonad::isRelaxedMorphism(const Functional& phi) const {
  const Entry& e = entry(baseOf(phi));
  MonoMap m(e.preds->poset(), r_.carrier(), {phi.table().begin(), phi.table().end()});
  return powdom::isRelaxedMorphism(m, *e.predAlg, r_);
}

bool ContinuationMonad::isHomomorphism(const PredicateTransformer& s) const {
  return powdom::isHomomorphism(s.map, predicateAlgebra(s.y), predicateAlgebra(s.x));
}

bool ContinuationMonad::isRelaxedMorphism(const PredicateTransformer& s) const {
  return powdom::isRelaxedMorphism(s.map, predicateAlgebra(s.y), predicateAlgebra(s.x));
}

const std::vector<Elem>& ContinuationMonad::family(const PosetPtr& x, Family f) const {
  const Entry& e = entry(x);
  auto it = e.families.find(f);
  if (it != e.families.end()) return it->second;
  const auto& tx = functionals(x);
  std::vector<Elem> out;
  switch (f) {
    case Family::Full:
      for (Elem i = 0; i < tx->size(); ++i) out.push_back(i);
      break;
    case Family::Hom:
      for (Elem i = 0; i < tx->size(); ++i) {
        if (isHomomorphism(Functional{tx, i})) out.push_back(i);
      }
      break;
    case Family::Relaxed:
      for (Elem i = 0; i < tx->size(); ++i) {
        if (isRelaxedMorphism(Functional{tx, i})) out.push_back(i);
      }
      break;
    case Family::Free: {
      std::vector<Elem> gens;
      for (const auto& d : deltas(x)) gens.push_back(d.index);
      out = generatedSubalgebra(functionalAlgebra(x), gens);
      break;
    }
  }
  return e.families.emplace(f, std::move(out)).first->second;
}

bool ContinuationMonad::inFamily(const Functional& phi, Family f) const {
  const auto& members = family(baseOf(phi), f);
  return std::binary_search(members.begin(), members.end(), phi.index);
}

namespace {

std::vector<Functional> asFunctionals(const ExpPtr& space, const std::vector<Elem>& idx) {
  std::vector<Functional> out;
  out.reserve(idx.size());
  for (Elem i : idx) out.push_back(Functional{space, i});
  return out;
}

}  // namespace

std::vector<Functional> ContinuationMonad::homFunctionals(const PosetPtr& x) const {
  return asFunctionals(functionals(x), family(x, Family::Hom));
}

std::vector<Functional> ContinuationMonad::relaxedFunctionals(const PosetPtr& x) const {
  return asFunctionals(functionals(x), family(x, Family::Relaxed));
}

std::vector<Functional> ContinuationMonad::freeFunctionals(const PosetPtr& x) const {
  return asFunctionals(functionals(x), family(x, Family::Free));
}

PosetPtr subPoset(const FinPoset& p, std::span<const Elem> indices, std::string name) {
  const std::size_t n = indices.size();
  std::vector<std::string> labels;
  std::vector<ElemBits> rows(n, ElemBits(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(p.label(indices[i]));
    for (std::size_t j = 0; j < n; ++j) rows[i].set(j, p.leq(indices[i], indices[j]));
  }
  return FinPoset::fromTrustedOrder(std::move(name), std::move(labels), std::move(rows));
}

std::vector<StateTransformer> ContinuationMonad::stateTransformers(const PosetPtr& x,
                                                                   const PosetPtr& y,
                                                                   Family f) const {
  const auto& ty = functionals(y);
  const auto& members = family(y, f);
  // Enumerate monotone maps into the family as a sub-poset, then translate.
  auto sub = subPoset(*ty->poset(), members, "F" + y->name());
  auto maps = enumerateMonotone(x, sub, guard_);
  std::vector<StateTransformer> out;
  out.reserve(maps->size());
  std::vector<Elem> table(x->size());
  for (Elem i = 0; i < maps->size(); ++i) {
    for (Elem p = 0; p < x->size(); ++p) table[p] = members[maps->table(i)[p]];
    out.push_back(stateTransformer(x, y, table));
  }
  return out;
}

std::vector<PredicateTransformer> ContinuationMonad::predicateTransformers(
    const PosetPtr& x, const PosetPtr& y) const {
  const auto& ry = predicates(y);
  const auto& rx = predicates(x);
  auto maps = enumerateMonotone(ry->poset(), rx->poset(), guard_);
  std::vector<PredicateTransformer> out;
  out.reserve(maps->size());
  for (Elem i = 0; i < maps->size(); ++i) out.push_back(PredicateTransformer{x, y, maps->map(i)});
  return out;
}

// ------------------------------------------------------------------- checks

namespace {

using Sides = std::pair<std::string, std::string>;

// Records a counted case; the first failure becomes the witness.
struct Tally {
  LawOutcome out;

  bool check(bool ok, std::vector<std::string> args, const std::string& lhs,
             const std::string& rhs) {
    ++out.cases;
    if (!ok && out.holds) {
      out.holds = false;
      out.witness = Witness{std::move(args), {}, lhs, rhs};
    }
    return ok;
  }
};

void laws(const ContinuationMonad& m, const StateTransformer& t, const StateTransformer& r,
          Family f, Tally& unitLeft, Tally& unitRight, Tally& assoc, Tally& closure) {
  const auto& fx = m.family(t.x, f);
  const auto& tx = m.functionals(t.x);
  const MonoMap unitLift = m.kleisliMap(m.unit(t.x));
  const MonoMap tLift = m.kleisliMap(t);
  const MonoMap rLift = m.kleisliMap(r);
  const MonoMap rtLift = m.kleisliMap(m.kleisliCompose(t, r));
  const auto& tz = m.functionals(r.y);
  const auto& ty = m.functionals(t.y);
  for (Elem phi : fx) {
    const std::string label = tx->poset()->label(phi);
    unitLeft.check(unitLift(phi) == phi, {label}, tx->poset()->label(unitLift(phi)), label);
    const Elem a = rtLift(phi);
    const Elem b = rLift(tLift(phi));
    assoc.check(a == b, {t.str(), r.str(), label}, tz->poset()->label(a), tz->poset()->label(b));
    closure.check(m.inFamily(Functional{ty, tLift(phi)}, f), {t.str(), label},
                  ty->poset()->label(tLift(phi)), std::string("in ") + std::string(to_string(f)));
  }
  for (Elem p = 0; p < t.x->size(); ++p) {
    const Elem d = m.delta(t.x, p).index;
    unitRight.check(tLift(d) == t.map(p), {t.str(), t.x->label(p)},
                    ty->poset()->label(tLift(d)), ty->poset()->label(t.map(p)));
    closure.check(m.inFamily(Functional{tx, d}, f), {t.x->label(p)}, tx->poset()->label(d),
                  std::string("in ") + std::string(to_string(f)));
  }
}

MonadLawReport finish(Tally& ul, Tally& ur, Tally& as, Tally& cl) {
  MonadLawReport rep;
  rep.unitLeft = std::move(ul.out);
  rep.unitRight = std::move(ur.out);
  rep.associativity = std::move(as.out);
  rep.closure = std::move(cl.out);
  rep.verdict = rep.unitLeft.holds && rep.unitRight.holds && rep.associativity.holds &&
                rep.closure.holds;
  return rep;
}

}  // namespace

MonadLawReport checkMonadLaws(const ContinuationMonad& m, const StateTransformer& t,
                              const StateTransformer& r, Family f) {
  Tally ul, ur, as, cl;
  laws(m, t, r, f, ul, ur, as, cl);
  return finish(ul, ur, as, cl);
}

MonadLawReport checkMonadLaws(const ContinuationMonad& m, const PosetPtr& x, const PosetPtr& y,
                              const PosetPtr& z, Family f) {
  Tally ul, ur, as, cl;
  const auto ts = m.stateTransformers(x, y, f);
  const auto rs = m.stateTransformers(y, z, f);
  for (const auto& t : ts) {
    for (const auto& r : rs) laws(m, t, r, f, ul, ur, as, cl);
  }
  return finish(ul, ur, as, cl);
}

LawOutcome checkTransformerBijection(const ContinuationMonad& m, const PosetPtr& x,
                                     const PosetPtr& y) {
  Tally tally;
  for (const auto& t : m.stateTransformers(x, y)) {
    const auto back = m.qTransform(m.pTransform(t));
    tally.check(back == t, {t.str()}, back.str(), t.str());
  }
  for (const auto& s : m.predicateTransformers(x, y)) {
    const auto back = m.pTransform(m.qTransform(s));
    tally.check(back == s, {s.str()}, back.str(), s.str());
  }
  return tally.out;
}

LawOutcome checkDeltaEmbedding(const ContinuationMonad& m, const PosetPtr& x) {
  Tally tally;
  const auto ds = m.deltas(x);
  const auto& tx = m.functionals(x)->poset();
  for (Elem a = 0; a < x->size(); ++a) {
    for (Elem b = 0; b < x->size(); ++b) {
      const bool lhs = x->leq(a, b);
      const bool rhs = tx->leq(ds[a].index, ds[b].index);
      tally.check(lhs == rhs, {x->label(a), x->label(b)}, lhs ? "x<=x'" : "not x<=x'",
                  rhs ? "delta(x)<=delta(x')" : "not delta(x)<=delta(x')");
    }
  }
  // Distinct points must give distinct projections.
  for (Elem a = 0; a < x->size(); ++a) {
    for (Elem b = a + 1; b < x->size(); ++b) {
      tally.check(ds[a].index != ds[b].index, {x->label(a), x->label(b)}, ds[a].str(),
                  ds[b].str());
    }
  }
  return tally.out;
}

LawOutcome checkKleisliHomomorphism(const ContinuationMonad& m, const PosetPtr& x,
                                    const PosetPtr& y) {
  Tally tally;
  const auto& ax = m.functionalAlgebra(x);
  const auto& ay = m.functionalAlgebra(y);
  for (const auto& t : m.stateTransformers(x, y)) {
    const MonoMap lift = m.kleisliMap(t);
    tally.check(isHomomorphism(lift, ax, ay), {t.str()}, "t^dagger", "homomorphism");
  }
  return tally.out;
}

LawOutcome checkKleisliPreserves(const ContinuationMonad& m, const PosetPtr& x,
                                 const PosetPtr& y, Family f) {
  Tally tally;
  const auto& fx = m.family(x, f);
  const auto& ty = m.functionals(y);
  for (const auto& t : m.stateTransformers(x, y, f)) {
    const MonoMap lift = m.kleisliMap(t);
    for (Elem phi : fx) {
      const Elem img = lift(phi);
      tally.check(m.inFamily(Functional{ty, img}, f), {t.str(), m.functionals(x)->poset()->label(phi)},
                  ty->poset()->label(img), std::string("in ") + std::string(to_string(f)));
    }
  }
  return tally.out;
}

LawOutcome checkTransformerCorrespondence(const ContinuationMonad& m, const PosetPtr& x,
                                          const PosetPtr& y, Family f) {
  if (f != Family::Hom && f != Family::Relaxed) {
    fail(ErrorKind::InvalidValue, "the transformer correspondence concerns hom or relaxed");
  }
  Tally tally;
  const auto& ty = m.functionals(y);
  for (const auto& t : m.stateTransformers(x, y)) {
    bool pointwise = true;
    for (Elem p = 0; p < x->size(); ++p) {
      pointwise = pointwise && m.inFamily(Functional{ty, t.map(p)}, f);
    }
    const auto s = m.pTransform(t);
    const bool whole = f == Family::Hom ? m.isHomomorphism(s) : m.isRelaxedMorphism(s);
    tally.check(pointwise == whole, {t.str()},
                pointwise ? "every t(x) in family" : "some t(x) outside family",
                whole ? "P(t) in family" : "P(t) outside family");
  }
  return tally.out;
}

LawOutcome checkUnitHomomorphism(const FinAlgebra& a, const FinAlgebra& r,
                                 std::uint64_t sizeGuard) {
  if (!a.signature().sameShape(r.signature())) {
    fail(ErrorKind::SignatureMismatch, a.name() + " and " + r.name() + " differ in signature");
  }
  auto maps = enumerateMonotone(a.carrier(), r.carrier(), sizeGuard);
  std::vector<Elem> homs;
  for (Elem i = 0; i < maps->size(); ++i) {
    if (isHomomorphism(maps->map(i), a, r)) homs.push_back(i);
  }
  auto h = subPoset(*maps->poset(), homs, "Hom(" + a.name() + "," + r.name() + ")");
  auto lifted = liftPointwise(r, h, sizeGuard);
  std::vector<Elem> table(a.size());
  std::vector<Elem> at(homs.size());
  for (Elem e = 0; e < a.size(); ++e) {
    for (std::size_t k = 0; k < homs.size(); ++k) at[k] = maps->table(homs[k])[e];
    table[e] = lifted.space->indexOf(at);
  }
  MonoMap delta(a.carrier(), lifted.algebra.carrier(), std::move(table));
  LawConfig cfg;
  cfg.sizeGuard = sizeGuard;
  auto rep = checkMorphism(a, lifted.algebra, [&](Elem e) { return delta(e); },
                           MorphismKind::Homomorphism, cfg);
  LawOutcome out;
  out.holds = rep.verdict;
  for (const auto& op : rep.ops) {
    out.cases += op.outcome.cases;
    if (!out.witness && op.outcome.witness) out.witness = op.outcome.witness;
  }
  return out;
}

FamilyComparison compareFamilies(const ContinuationMonad& m, const PosetPtr& x) {
  FamilyComparison c;
  c.free = m.family(x, Family::Free);
  c.hom = m.family(x, Family::Hom);
  c.relaxed = m.family(x, Family::Relaxed);
  auto minus = [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::vector<Elem> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  c.freeMinusHom = minus(c.free, c.hom);
  c.homMinusFree = minus(c.hom, c.free);
  c.relaxedMinusHom = minus(c.relaxed, c.hom);
  c.freeInHom = c.freeMinusHom.empty();
  c.freeInRelaxed = minus(c.free, c.relaxed).empty();
  c.homInRelaxed = minus(c.hom, c.relaxed).empty();
  c.freeEqualsHom = c.freeInHom && c.homMinusFree.empty();
  return c;
}

}  // namespace powdom
