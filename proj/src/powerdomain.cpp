#include "powdom/powerdomain.hpp"

#include <algorithm>
#include <map>

#include "powdom/catalog.hpp"
#include "powdom/error.hpp"

namespace powdom {

namespace {

// Carrier indices of the two-element chain.
constexpr Elem kFalse = 0;
constexpr Elem kTrue = 1;

using Sides = std::optional<std::pair<std::string, std::string>>;

LawOutcome failAt(LawOutcome out, std::vector<std::string> args, std::string lhs,
                  std::string rhs) {
  out.holds = false;
  out.witness = Witness{std::move(args), {}, std::move(lhs), std::move(rhs)};
  return out;
}

ElemBits upSetOf(std::span<const Elem> pred) {
  ElemBits u(pred.size());
  for (std::size_t p = 0; p < pred.size(); ++p) u.set(p, pred[p] == kTrue);
  return u;
}

SetPowerdomain setPowerdomain(const PosetPtr& x, const FinAlgebra& r, std::uint64_t guard,
                              bool smyth) {
  SetPowerdomain out;
  out.kind = smyth ? "smyth" : "hoare";
  out.x = x;
  ContinuationMonad m(r, guard);

  const auto sets = smyth ? allUpSets(*x, guard) : allDownSets(*x, guard);
  std::vector<std::string> labels;
  for (const auto& s : sets) {
    out.sets.push_back(s.members);
    labels.push_back(formatSet(*x, s.members));
  }
  out.poset = inclusionPoset((smyth ? "S(" : "H(") + x->name() + ")", labels, out.sets, smyth);

  const auto& preds = m.predicates(x);
  std::vector<ElemBits> opens;
  std::map<ElemBits, Elem> openIndex;
  for (Elem i = 0; i < preds->size(); ++i) {
    opens.push_back(upSetOf(preds->table(i)));
    openIndex.emplace(opens.back(), i);
  }

  std::vector<Elem> table(opens.size());
  for (const auto& c : out.sets) {
    for (std::size_t i = 0; i < opens.size(); ++i) {
      const bool hit = smyth ? c.isSubsetOf(opens[i]) : opens[i].intersects(c);
      table[i] = hit ? kTrue : kFalse;
    }
    out.image.push_back(m.functional(x, table));
  }
  out.hom = m.family(x, Family::Hom);

  for (std::size_t i = 0; i < out.image.size(); ++i) {
    ++out.intoHom.cases;
    if (!m.inFamily(out.image[i], Family::Hom)) {
      out.intoHom = failAt(out.intoHom, {labels[i]}, out.image[i].str(), "not a homomorphism");
      break;
    }
  }

  std::vector<Elem> indices;
  for (const auto& phi : out.image) indices.push_back(phi.index);
  std::sort(indices.begin(), indices.end());
  out.bijective.cases = indices.size();
  if (indices != out.hom) {
    out.bijective = failAt(out.bijective, {}, std::to_string(indices.size()) + " images",
                           std::to_string(out.hom.size()) + " homomorphisms");
  }

  const auto& tx = *m.functionals(x)->poset();
  for (Elem i = 0; i < out.image.size() && out.orderIsomorphism.holds; ++i) {
    for (Elem j = 0; j < out.image.size(); ++j) {
      ++out.orderIsomorphism.cases;
      const bool sets = out.poset->leq(i, j);
      const bool funs = tx.leq(out.image[i].index, out.image[j].index);
      if (sets != funs) {
        out.orderIsomorphism =
            failAt(out.orderIsomorphism, {labels[i], labels[j]}, sets ? "sets <=" : "sets not <=",
                   funs ? "functionals <=" : "functionals not <=");
        break;
      }
    }
  }

  // Hoare: the opens sent to 0 contain the empty set and are closed
  // downwards and under union. Smyth: the opens sent to 1 contain X and are
  // closed upwards and under intersection.
  const Elem marked = smyth ? kTrue : kFalse;
  const ElemBits extreme = smyth ? ElemBits(x->size()).complement() : ElemBits(x->size());
  const Elem extremeIdx = openIndex.at(extreme);
  for (Elem h : out.hom) {
    const auto t = m.functionals(x)->table(h);
    const std::string name = tx.label(h);
    ++out.shape.cases;
    if (t[extremeIdx] != marked) {
      out.shape = failAt(out.shape, {name}, formatSet(*x, extreme), "not in the kernel");
      break;
    }
    bool ok = true;
    for (std::size_t i = 0; i < opens.size() && ok; ++i) {
      if (t[i] != marked) continue;
      for (std::size_t j = 0; j < opens.size() && ok; ++j) {
        const bool related = smyth ? opens[i].isSubsetOf(opens[j]) : opens[j].isSubsetOf(opens[i]);
        if (related && t[j] != marked) {
          out.shape = failAt(out.shape, {name, formatSet(*x, opens[j])}, "not closed", "");
          ok = false;
        }
        if (t[j] != marked) continue;
        const ElemBits combined = smyth ? (opens[i] & opens[j]) : (opens[i] | opens[j]);
        if (t[openIndex.at(combined)] != marked) {
          out.shape = failAt(out.shape, {name, formatSet(*x, opens[i]), formatSet(*x, opens[j])},
                             smyth ? "intersection missing" : "union missing", "");
          ok = false;
        }
      }
    }
    if (!ok) break;
  }

  out.freeEqualsHom.cases = out.hom.size();
  const auto& free = m.family(x, Family::Free);
  if (free != out.hom) {
    out.freeEqualsHom = failAt(out.freeEqualsHom, {}, std::to_string(free.size()) + " free",
                               std::to_string(out.hom.size()) + " homomorphisms");
  }

  out.verdict = out.intoHom.holds && out.bijective.holds && out.orderIsomorphism.holds &&
                out.shape.holds && out.freeEqualsHom.holds;
  return out;
}

}  // namespace

SetPowerdomain hoarePowerdomain(const PosetPtr& x, std::uint64_t sizeGuard) {
  return setPowerdomain(x, catalog::angelic2(), sizeGuard, false);
}

SetPowerdomain hoarePowerdomain(const PosetPtr& x, const FinAlgebra& r, std::uint64_t sizeGuard) {
  return setPowerdomain(x, r, sizeGuard, false);
}

SetPowerdomain smythPowerdomain(const PosetPtr& x, std::uint64_t sizeGuard) {
  return setPowerdomain(x, catalog::demonic2(), sizeGuard, true);
}

SetPowerdomain smythPowerdomain(const PosetPtr& x, const FinAlgebra& r, std::uint64_t sizeGuard) {
  return setPowerdomain(x, r, sizeGuard, true);
}

Sobrification sobrification(const PosetPtr& x, std::uint64_t sizeGuard) {
  return sobrification(x, catalog::frame2(), sizeGuard);
}

Sobrification sobrification(const PosetPtr& x, const FinAlgebra& r, std::uint64_t sizeGuard) {
  Sobrification out;
  out.x = x;
  ContinuationMonad m(r, sizeGuard);
  out.points = m.homFunctionals(x);
  const auto& hom = m.family(x, Family::Hom);
  const auto& tx = *m.functionals(x)->poset();
  out.poset = subPoset(tx, hom, "pt(" + x->name() + ")");

  out.count.cases = 1;
  if (out.points.size() != x->size()) {
    out.count = failAt(out.count, {}, std::to_string(out.points.size()) + " points",
                       std::to_string(x->size()) + " elements");
  }

  for (Elem p = 0; p < x->size(); ++p) {
    const auto d = m.delta(x, p);
    auto it = std::find(hom.begin(), hom.end(), d.index);
    ++out.deltaIso.cases;
    if (it == hom.end()) {
      out.deltaIso = failAt(out.deltaIso, {x->label(p)}, d.str(), "not a frame homomorphism");
      break;
    }
    out.deltaIndex.push_back(static_cast<Elem>(it - hom.begin()));
  }
  if (out.deltaIso.holds) {
    std::vector<Elem> mapping = out.deltaIndex;
    if (!out.count.holds || !isOrderIsomorphism(*x, *out.poset, mapping)) {
      out.deltaIso = failAt(out.deltaIso, {}, "delta", "not an order isomorphism");
    }
  }
  out.verdict = out.count.holds && out.deltaIso.holds;
  return out;
}

// --------------------------------------------------------------- valuations

SimpleValuation::SimpleValuation(PosetPtr x, std::vector<Atom> atoms) : x_(std::move(x)) {
  std::map<Elem, ExtNN> merged;
  for (auto& a : atoms) {
    if (a.point >= x_->size()) {
      fail(ErrorKind::UnknownElement,
           "no element " + std::to_string(a.point) + " in " + x_->name());
    }
    auto [it, fresh] = merged.emplace(a.point, a.weight);
    if (!fresh) it->second = it->second + a.weight;
  }
  for (auto& [p, w] : merged) {
    if (!w.isZero()) atoms_.push_back(Atom{w, p});
  }
}

SimpleValuation SimpleValuation::zero(const PosetPtr& x) { return SimpleValuation(x, {}); }

SimpleValuation SimpleValuation::dirac(const PosetPtr& x, Elem point, ExtNN weight) {
  return SimpleValuation(x, {Atom{std::move(weight), point}});
}

ExtNN SimpleValuation::mass() const {
  ExtNN m;
  for (const auto& a : atoms_) m = m + a.weight;
  return m;
}

std::string SimpleValuation::str() const {
  std::string s = "val{";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) s += "; ";
    s += atoms_[i].weight.str() + "@" + x_->label(atoms_[i].point);
  }
  return s + "}";
}

bool operator<(const SimpleValuation& a, const SimpleValuation& b) {
  return std::lexicographical_compare(
      a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(), b.atoms_.end(),
      [](const Atom& l, const Atom& r) {
        if (l.point != r.point) return l.point < r.point;
        return l.weight < r.weight;
      });
}

namespace {

void samePoset(const PosetPtr& a, const PosetPtr& b) {
  if (a != b) {
    fail(ErrorKind::TypeMismatch, "valuation on " + (a ? a->name() : "?") + " used with " +
                                      (b ? b->name() : "?"));
  }
}

SimpleValuation scaled(const ExtNN& r, const SimpleValuation& mu) {
  std::vector<Atom> atoms;
  for (const auto& a : mu.atoms()) atoms.push_back(Atom{r * a.weight, a.point});
  return SimpleValuation(mu.poset(), std::move(atoms));
}

}  // namespace

ExtNN evalValuation(const SimpleValuation& mu, const Predicate& f) {
  samePoset(mu.poset(), f.poset());
  ExtNN sum;
  for (const auto& a : mu.atoms()) sum = sum + a.weight * f(a.point);
  return sum;
}

bool valuationLeq(const SimpleValuation& mu, const SimpleValuation& nu) {
  samePoset(mu.poset(), nu.poset());
  for (const auto& u : allUpSets(*mu.poset())) {
    ExtNN l, r;
    for (const auto& a : mu.atoms()) {
      if (u.members.test(a.point)) l = l + a.weight;
    }
    for (const auto& a : nu.atoms()) {
      if (u.members.test(a.point)) r = r + a.weight;
    }
    if (!(l <= r)) return false;
  }
  return true;
}

SimpleValuation coneCombine(const ExtNN& a, const SimpleValuation& mu, const ExtNN& b,
                            const SimpleValuation& nu) {
  samePoset(mu.poset(), nu.poset());
  std::vector<Atom> atoms;
  for (const auto& at : mu.atoms()) atoms.push_back(Atom{a * at.weight, at.point});
  for (const auto& at : nu.atoms()) atoms.push_back(Atom{b * at.weight, at.point});
  return SimpleValuation(mu.poset(), std::move(atoms));
}

SimpleValuation sampleValuation(const PosetPtr& x, Sampler& s) {
  const std::size_t n = x->size();
  const std::size_t k = s.below(std::min<std::size_t>(3, n) + 1);
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < k; ++i) {
    const Elem p = static_cast<Elem>(s.below(n));
    atoms.push_back(Atom{s.extnn(), p});
  }
  return SimpleValuation(x, std::move(atoms));
}

namespace {

std::vector<SimpleValuation> canonicalComponents(std::vector<SimpleValuation> cs) {
  if (cs.empty()) fail(ErrorKind::InvalidValue, "a combination needs at least one valuation");
  for (const auto& c : cs) samePoset(cs.front().poset(), c.poset());
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

std::string joinComponents(std::string_view head, const std::vector<SimpleValuation>& cs) {
  std::string s(head);
  s += "{";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += "; ";
    s += cs[i].str();
  }
  return s + "}";
}

}  // namespace

SubFn::SubFn(std::vector<SimpleValuation> components)
    : components_(canonicalComponents(std::move(components))) {}

std::string SubFn::str() const { return joinComponents("sup", components_); }

SupFn::SupFn(std::vector<SimpleValuation> components)
    : components_(canonicalComponents(std::move(components))) {}

std::string SupFn::str() const { return joinComponents("inf", components_); }

ExtNN evalSubFn(const SubFn& phi, const Predicate& f) {
  ExtNN best = evalValuation(phi.components().front(), f);
  for (const auto& mu : phi.components()) best = ennMax(best, evalValuation(mu, f));
  return best;
}

ExtNN evalSupFn(const SupFn& phi, const Predicate& f) {
  ExtNN best = evalValuation(phi.components().front(), f);
  for (const auto& mu : phi.components()) best = ennMin(best, evalValuation(mu, f));
  return best;
}

ValuationCone::ValuationCone(PosetPtr x) : x_(std::move(x)), grid_(catalogValuations(x_)) {}

const RatAlgebra& ValuationCone::base() const noexcept { return catalog::rcone(); }

SimpleValuation ValuationCone::apply(std::size_t op, std::span<const ExtNN> params,
                                     std::span<const SimpleValuation> args) const {
  const RatOp& o = base().op(op);
  switch (o.kind) {
    case RatOpKind::Add: return coneCombine(ExtNN(1), args[0], ExtNN(1), args[1]);
    case RatOpKind::ScaleFamily: return scaled(params[0], args[0]);
    case RatOpKind::Scale: return scaled(o.param, args[0]);
    case RatOpKind::Const: return SimpleValuation::zero(x_);
    default: break;
  }
  fail(ErrorKind::SignatureMismatch, "valuations have no " + o.symbol);
}

std::vector<SimpleValuation> catalogValuations(const PosetPtr& x) {
  const std::size_t n = x->size();
  std::vector<SimpleValuation> out{SimpleValuation::zero(x)};
  for (Elem p = 0; p < n; ++p) out.push_back(SimpleValuation::dirac(x, p));
  std::vector<Atom> uniform, ramp;
  for (Elem p = 0; p < n; ++p) {
    uniform.push_back(Atom{ExtNN::fraction(1, static_cast<std::int64_t>(n)), p});
    ramp.push_back(Atom{ExtNN::fraction(std::int64_t(p) + 1, std::int64_t(p) + 2), p});
  }
  out.emplace_back(x, uniform);
  out.emplace_back(x, ramp);
  std::vector<Atom> heavy{Atom{ExtNN::infinity(), 0}};
  if (n > 1) heavy.push_back(Atom{ExtNN::fraction(1, 2), static_cast<Elem>(n - 1)});
  out.emplace_back(x, heavy);

  std::vector<SimpleValuation> unique;
  for (auto& v : out) {
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(std::move(v));
  }
  return unique;
}

namespace {

template <class Fn>
std::vector<Fn> catalogCombinations(const PosetPtr& x) {
  std::vector<SimpleValuation> base;
  for (auto& v : catalogValuations(x)) {
    if (!v.atoms().empty()) base.push_back(std::move(v));
  }
  std::vector<Fn> out;
  auto add = [&](Fn f) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  };
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) add(Fn({base[i], base[j]}));
  }
  std::vector<SimpleValuation> diracs;
  for (Elem p = 0; p < x->size(); ++p) diracs.push_back(SimpleValuation::dirac(x, p));
  add(Fn(diracs));
  return out;
}

}  // namespace

std::vector<SubFn> catalogSubFns(const PosetPtr& x) { return catalogCombinations<SubFn>(x); }
std::vector<SupFn> catalogSupFns(const PosetPtr& x) { return catalogCombinations<SupFn>(x); }

// ------------------------------------------------------------------- checks

namespace {

bool holdsFor(Relation rel, const ExtNN& lhs, const ExtNN& rhs) {
  switch (rel) {
    case Relation::Equal: return lhs == rhs;
    case Relation::LessEq: return lhs <= rhs;
    case Relation::GreaterEq: return lhs >= rhs;
  }
  return false;
}

Sides verdict(Relation rel, const ExtNN& lhs, const ExtNN& rhs) {
  if (holdsFor(rel, lhs, rhs)) return std::nullopt;
  return std::make_pair(lhs.str(), rhs.str());
}

}  // namespace

FunctionalLawReport checkFunctionalLaws(const PosetPtr& x, const Evaluator& phi, Relation rel,
                                        const LawConfig& cfg) {
  FunctionalLawReport out;
  out.additivity = rel;
  const PredicateAlgebra preds(catalog::rcone(), x);
  const auto src = slotsOf(preds);
  using P = std::span<const Predicate>;
  using S = std::span<const ExtNN>;

  const Predicate zero = Predicate::constant(x, ExtNN(0));
  out.zero.cases = 1;
  if (const ExtNN v = phi(zero); !v.isZero()) {
    out.zero = failAt(out.zero, {zero.str()}, v.str(), "0");
  }
  out.homogeneity = forEachCase(src, 1, src, 0, 1, cfg, [&](P f, P, S r) {
    return verdict(Relation::Equal, phi(predScale(r[0], f[0])), r[0] * phi(f[0]));
  });
  out.additive = forEachCase(src, 2, src, 0, 0, cfg, [&](P f, P, S) {
    return verdict(rel, phi(predAdd(f[0], f[1])), phi(f[0]) + phi(f[1]));
  });
  out.monotone = forEachCase(src, 2, src, 0, 0, cfg, [&](P f, P, S) {
    return verdict(Relation::LessEq, phi(f[0]), phi(predMax(f[0], f[1])));
  });
  out.verdict = out.zero.holds && out.homogeneity.holds && out.additive.holds &&
                out.monotone.holds;
  return out;
}

namespace {

template <class Fn>
LawOutcome domination(const SimpleValuation& mu, const Fn& phi, Relation rel,
                      const LawConfig& cfg) {
  samePoset(mu.poset(), phi.poset());
  const PredicateAlgebra preds(catalog::rcone(), mu.poset());
  const auto src = slotsOf(preds);
  return forEachCase(src, 1, src, 0, 0, cfg,
                     [&](std::span<const Predicate> f, std::span<const Predicate>,
                         std::span<const ExtNN>) {
                       return verdict(rel, evalValuation(mu, f[0]), evaluate(phi, f[0]));
                     });
}

}  // namespace

LawOutcome dominationCheck(const SimpleValuation& mu, const SubFn& phi, const LawConfig& cfg) {
  return domination(mu, phi, Relation::LessEq, cfg);
}

LawOutcome dominationCheck(const SimpleValuation& mu, const SupFn& phi, const LawConfig& cfg) {
  return domination(mu, phi, Relation::GreaterEq, cfg);
}

LawOutcome checkLeqOracle(const SimpleValuation& mu, const SimpleValuation& nu,
                          const LawConfig& cfg) {
  if (valuationLeq(mu, nu)) {
    const PredicateAlgebra preds(catalog::rcone(), mu.poset());
    const auto src = slotsOf(preds);
    return forEachCase(src, 1, src, 0, 0, cfg,
                       [&](std::span<const Predicate> f, std::span<const Predicate>,
                           std::span<const ExtNN>) {
                         return verdict(Relation::LessEq, evalValuation(mu, f[0]),
                                        evalValuation(nu, f[0]));
                       });
  }
  LawOutcome out;
  for (const auto& f : characteristicPredicates(mu.poset())) {
    ++out.cases;
    if (!(evalValuation(mu, f) <= evalValuation(nu, f))) return out;
  }
  return failAt(out, {mu.str(), nu.str()}, "oracle: not <=", "no violating up-set");
}

std::vector<std::pair<std::string, LawOutcome>> checkConeAxioms(const PosetPtr& x,
                                                                const LawConfig& cfg) {
  const ValuationCone cone(x);
  const auto src = slotsOf(cone);
  using V = std::span<const SimpleValuation>;
  using S = std::span<const ExtNN>;
  const ExtNN one(1);
  auto add = [&](const SimpleValuation& a, const SimpleValuation& b) {
    return coneCombine(one, a, one, b);
  };
  auto same = [](const SimpleValuation& l, const SimpleValuation& r) -> Sides {
    if (l == r) return std::nullopt;
    return std::make_pair(l.str(), r.str());
  };
  const auto zero = SimpleValuation::zero(x);

  std::vector<std::pair<std::string, LawOutcome>> out;
  out.emplace_back("add-associative", forEachCase(src, 3, src, 0, 0, cfg, [&](V v, V, S) {
                     return same(add(v[0], add(v[1], v[2])), add(add(v[0], v[1]), v[2]));
                   }));
  out.emplace_back("add-commutative", forEachCase(src, 2, src, 0, 0, cfg, [&](V v, V, S) {
                     return same(add(v[0], v[1]), add(v[1], v[0]));
                   }));
  out.emplace_back("add-unit", forEachCase(src, 1, src, 0, 0, cfg, [&](V v, V, S) {
                     return same(add(v[0], zero), v[0]);
                   }));
  out.emplace_back("scale-one", forEachCase(src, 1, src, 0, 0, cfg, [&](V v, V, S) {
                     return same(scaled(one, v[0]), v[0]);
                   }));
  out.emplace_back("scale-compose", forEachCase(src, 1, src, 0, 2, cfg, [&](V v, V, S r) {
                     return same(scaled(r[0] * r[1], v[0]), scaled(r[0], scaled(r[1], v[0])));
                   }));
  out.emplace_back("scale-over-add", forEachCase(src, 2, src, 0, 1, cfg, [&](V v, V, S r) {
                     return same(scaled(r[0], add(v[0], v[1])),
                                 add(scaled(r[0], v[0]), scaled(r[0], v[1])));
                   }));
  out.emplace_back("add-of-scalars", forEachCase(src, 1, src, 0, 2, cfg, [&](V v, V, S r) {
                     return same(scaled(r[0] + r[1], v[0]),
                                 add(scaled(r[0], v[0]), scaled(r[1], v[0])));
                   }));
  out.emplace_back("scale-zero", forEachCase(src, 1, src, 0, 0, cfg, [&](V v, V, S) {
                     return same(scaled(ExtNN(0), v[0]), zero);
                   }));
  return out;
}

NonIntegerReport nonIntegerWitness(const PosetPtr& x, Elem point, const ExtNN& r,
                                   const LawConfig& cfg) {
  if (r.isInfinite()) fail(ErrorKind::InvalidValue, "the scalar must be finite");
  if (r.isInteger()) {
    fail(ErrorKind::RejectInteger,
         r.str() + " is an integer, so its multiple is a finite sum of point masses");
  }
  NonIntegerReport out;
  out.functional = SimpleValuation::dirac(x, point, r);
  const PredicateAlgebra preds(catalog::rplus(), x);
  const auto& mu = out.functional;
  out.morphism = checkMorphism(
      preds, catalog::rplus(), [&mu](const Predicate& f) { return evalValuation(mu, f); },
      MorphismKind::Homomorphism, cfg);
  out.mass = evalValuation(mu, Predicate::constant(x, ExtNN(1)));
  out.massOutsideNaturals = !out.mass.isInfinite() && !out.mass.isInteger();

  // Coefficients in {0, 1, 2} exhaustively, then random natural ones.
  const std::size_t n = x->size();
  std::vector<std::int64_t> coeff(n, 0);
  auto massOf = [&] {
    std::vector<Atom> atoms;
    for (Elem p = 0; p < n; ++p) atoms.push_back(Atom{ExtNN(coeff[p]), p});
    return SimpleValuation(x, std::move(atoms)).mass();
  };
  auto test = [&] {
    ++out.naturalMasses.cases;
    const ExtNN m = massOf();
    if (m.isInfinite() || m.isInteger()) return true;
    std::vector<std::string> args;
    for (auto c : coeff) args.push_back(std::to_string(c));
    out.naturalMasses = failAt(out.naturalMasses, std::move(args), m.str(), "not natural");
    return false;
  };
  bool ok = true;
  for (bool more = true; more && ok;) {
    ok = test();
    more = false;
    for (std::size_t i = n; i-- > 0;) {
      if (++coeff[i] < 3) {
        more = true;
        break;
      }
      coeff[i] = 0;
    }
  }
  out.naturalMasses.exhaustive = false;
  Sampler rng(cfg.seed);
  for (std::uint64_t t = 0; t < cfg.trials && ok; ++t) {
    for (auto& c : coeff) c = static_cast<std::int64_t>(rng.below(1000));
    ok = test();
  }
  out.verdict = out.morphism.verdict && out.massOutsideNaturals && out.naturalMasses.holds;
  return out;
}

}  // namespace powdom
