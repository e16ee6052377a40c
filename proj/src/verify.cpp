#include "powdom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "powdom/algebra.hpp"
#include "powdom/catalog.hpp"
#include "powdom/error.hpp"
#include "powdom/funcspace.hpp"
#include "powdom/monad.hpp"
#include "powdom/poset.hpp"
#include "powdom/powerdomain.hpp"
#include "powdom/ratalgebra.hpp"

namespace powdom {

const std::vector<std::string>& faultNames() {
  static const std::vector<std::string> names{"angelic2", "rplus_max"};
  return names;
}

namespace {

using Clock = std::chrono::steady_clock;

class Collector {
 public:
  template <class F>
  void check(std::string name, F&& f) {
    const auto start = Clock::now();
    CheckRecord r;
    try {
      r = f();
    } catch (const Error& e) {
      r = errorRecord(name, e.what());
    }
    r.name = std::move(name);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out_.push_back(std::move(r));
  }
  std::vector<CheckRecord> take() { return std::move(out_); }

 private:
  std::vector<CheckRecord> out_;
};

// ------------------------------------------------------------- helpers

const FinAlgebra& angelic(const VerifyOptions& o) {
  if (o.fault != "angelic2") return catalog::angelic2();
  static const FinAlgebra broken("2_ang", catalog::two(), catalog::angelic2().signature(),
                                 {catalog::lattice2().table(0), {0}});
  return broken;
}

const RatAlgebra& plusMax(const VerifyOptions& o) {
  if (o.fault != "rplus_max") return catalog::rplusMax();
  static const RatAlgebra broken =
      catalog::rplusMax().retagged({Tag::GE, Tag::LE, Tag::EQ, Tag::EQ});
  return broken;
}

std::vector<PosetPtr> posets(const VerifyOptions& o,
                             std::size_t bound = std::numeric_limits<std::size_t>::max()) {
  return catalog::posets(std::min(bound, o.catalogMax));
}

std::vector<PosetPtr> tiny(const VerifyOptions& o) {
  std::vector<PosetPtr> out;
  for (const auto& p : {catalog::one(), catalog::chain2(), catalog::anti2()}) {
    if (p->size() <= o.catalogMax) out.push_back(p);
  }
  return out;
}

LawConfig trialsCapped(const VerifyOptions& o, std::uint64_t cap) {
  LawConfig c = o.law;
  c.trials = std::min(c.trials, cap);
  return c;
}

LawOutcome merged(const std::vector<LawOutcome>& parts) {
  LawOutcome out;
  out.cases = 0;
  for (const auto& p : parts) {
    out.cases += p.cases;
    out.exhaustive = out.exhaustive && p.exhaustive;
    if (!p.holds && out.holds) {
      out.holds = false;
      out.witness = p.witness;
    }
  }
  return out;
}

LawOutcome fromBool(bool ok, std::uint64_t cases, std::string lhs = {}, std::string rhs = {},
                    std::vector<std::string> args = {}) {
  LawOutcome o;
  o.cases = cases;
  o.holds = ok;
  if (!ok) o.witness = Witness{std::move(args), {}, std::move(lhs), std::move(rhs)};
  return o;
}

// The outcome of an entropicity report, with the first failing pair as witness.
template <class D>
LawOutcome entropicOutcome(const D& d, const EntropicReport& r, Json& details) {
  LawOutcome out;
  out.cases = 0;
  out.exhaustive = r.exhaustive;
  out.holds = r.verdict;
  Json failing = Json::array();
  const auto& ops = d.signature().ops();
  for (const auto& p : r.pairs) {
    out.cases += p.outcome.cases;
    if (p.outcome.holds) continue;
    failing.push_back(ops[p.sigma].symbol + "/" + ops[p.omega].symbol);
    if (!out.witness) {
      out.witness = p.outcome.witness;
      if (out.witness) {
        out.witness->args.insert(out.witness->args.begin(), ops[p.sigma].symbol + "/" + ops[p.omega].symbol);
      }
    }
  }
  if (!r.constantsAgree && !out.witness) out.witness = Witness{{"constants"}, {}, "disagree", "agree"};
  details["constantsAgree"] = r.constantsAgree;
  details["failingPairs"] = std::move(failing);
  if (!r.exhaustive) details["seed"] = r.seed;
  return out;
}

CheckRecord recordWith(const LawOutcome& o, Json details) {
  CheckRecord r = recordOf("", o);
  r.details = std::move(details);
  return r;
}

std::string tagsStr(const Signature& sig) {
  std::string s;
  for (const auto& op : sig.ops()) {
    if (!s.empty()) s += ' ';
    s += op.symbol + ":" + std::string(to_string(op.tag));
  }
  return s;
}

LawOutcome functionalOutcome(const FunctionalLawReport& r) {
  return merged({r.zero, r.homogeneity, r.additive, r.monotone});
}

// ------------------------------------------------------ acceptance groups

std::vector<CheckRecord> transformerBijection(const VerifyOptions& o) {
  Collector c;
  ContinuationMonad m(angelic(o), o.law.sizeGuard);
  for (const auto& x : posets(o, 3)) {
    for (const auto& y : posets(o, 3)) {
      c.check("P/Q roundtrip " + x->name() + " -> " + y->name() + " over 2_ang",
              [&] { return recordOf("", checkTransformerBijection(m, x, y)); });
    }
  }
  return c.take();
}

void setPowerdomainChecks(Collector& c, const VerifyOptions& o, bool smyth) {
  const FinAlgebra& r = smyth ? catalog::demonic2() : angelic(o);
  for (const auto& x : posets(o, 4)) {
    const std::string kind = smyth ? "smyth " : "hoare ";
    const std::string at = " [" + x->name() + "]";
    SetPowerdomain pd;
    try {
      pd = smyth ? smythPowerdomain(x, r, o.law.sizeGuard) : hoarePowerdomain(x, r, o.law.sizeGuard);
    } catch (const Error& e) {
      c.check(kind + "construction" + at, [&]() -> CheckRecord { throw e; });
      continue;
    }
    c.check(kind + "count" + at, [&] {
      const auto sets = smyth ? allUpSets(*x, o.law.sizeGuard) : allDownSets(*x, o.law.sizeGuard);
      auto rec = expectEqual("", std::to_string(sets.size()), std::to_string(pd.hom.size()));
      rec.details["sets"] = smyth ? "up-sets" : "down-sets";
      return rec;
    });
    c.check(kind + "images are homomorphisms" + at, [&] { return recordOf("", pd.intoHom); });
    c.check(kind + "bijection onto homomorphisms" + at, [&] { return recordOf("", pd.bijective); });
    c.check(kind + "order isomorphism" + at, [&] { return recordOf("", pd.orderIsomorphism); });
    c.check(kind + (smyth ? "filter shape" : "ideal shape") + at, [&] { return recordOf("", pd.shape); });
    c.check(kind + "free = hom" + at, [&] { return recordOf("", pd.freeEqualsHom); });
  }
}

std::vector<CheckRecord> hoare(const VerifyOptions& o) {
  Collector c;
  setPowerdomainChecks(c, o, false);
  return c.take();
}

std::vector<CheckRecord> smyth(const VerifyOptions& o) {
  Collector c;
  setPowerdomainChecks(c, o, true);
  return c.take();
}

std::vector<CheckRecord> sober(const VerifyOptions& o) {
  Collector c;
  for (const auto& x : posets(o)) {
    c.check("sobrification [" + x->name() + "]", [&] {
      auto s = sobrification(x, catalog::frame2(), o.law.sizeGuard);
      auto rec = recordOf("", merged({s.count, s.deltaIso}));
      rec.details["points"] = s.points.size();
      rec.details["elements"] = x->size();
      return rec;
    });
  }
  return c.take();
}

std::vector<CheckRecord> entropicity(const VerifyOptions& o) {
  Collector c;
  auto expectVerdict = [&](const std::string& name, const auto& alg, bool relaxed, bool expected) {
    c.check(name, [&] {
      const auto rep = relaxed ? isRelaxedEntropic(alg, o.law) : isEntropic(alg, o.law);
      Json details;
      details["algebra"] = alg.name();
      details["expected"] = expected;
      LawOutcome out = entropicOutcome(alg, rep, details);
      CheckRecord rec = recordWith(out, std::move(details));
      // A negative verdict is only accepted together with a witness.
      rec.verdict = expected ? out.holds : (!out.holds && out.witness.has_value());
      return rec;
    });
  };
  expectVerdict("2_ang entropic", angelic(o), false, true);
  expectVerdict("2_dem entropic", catalog::demonic2(), false, true);
  expectVerdict("lattice2 not entropic", catalog::lattice2(), false, false);
  expectVerdict("rsemiring not entropic", catalog::rsemiring(), false, false);
  c.check("rsemiring interchange (1*2)+(3*4) vs (1+3)*(2+4)", [&] {
    const auto& s = catalog::rsemiring();
    const std::size_t add = s.signature().index("add"), mul = s.signature().index("mul");
    auto ap = [&](std::size_t op, const ExtNN& a, const ExtNN& b) {
      const std::vector<ExtNN> args{a, b};
      return s.apply(op, {}, args);
    };
    const ExtNN lhs = ap(add, ap(mul, ExtNN(1), ExtNN(2)), ap(mul, ExtNN(3), ExtNN(4)));
    const ExtNN rhs = ap(mul, ap(add, ExtNN(1), ExtNN(3)), ap(add, ExtNN(2), ExtNN(4)));
    CheckRecord rec;
    rec.cases = 1;
    rec.verdict = lhs != rhs;
    rec.witness = Witness{{"1", "2", "3", "4"}, {}, lhs.str(), rhs.str()};
    return rec;
  });
  expectVerdict("rplus_max relaxed entropic", plusMax(o), true, true);
  expectVerdict("rplus_min relaxed entropic", catalog::rplusMin(), true, true);
  return c.take();
}

std::vector<Tag> tagsOf(std::size_t k, std::size_t code) {
  std::vector<Tag> t(k);
  for (std::size_t i = 0; i < k; ++i, code /= 3) t[i] = static_cast<Tag>(code % 3);
  return t;
}

std::vector<CheckRecord> containments(const VerifyOptions& o) {
  Collector c;
  std::vector<FinAlgebra> algebras;
  for (const auto& r : catalog::finiteAlgebras()) {
    algebras.push_back(r.name() == "2_ang" ? angelic(o) : r);
  }
  for (const auto& r : algebras) {
    if (!isEntropic(r, o.law).verdict) continue;
    ContinuationMonad m(r, o.law.sizeGuard);
    for (const auto& x : posets(o)) {
      c.check("free in hom " + r.name() + " [" + x->name() + "]", [&] {
        const auto cmp = compareFamilies(m, x);
        auto rec = recordOf("", fromBool(cmp.freeInHom, cmp.free.size(),
                                         std::to_string(cmp.freeMinusHom.size()) + " free outside hom",
                                         "0"));
        rec.details["free"] = cmp.free.size();
        rec.details["hom"] = cmp.hom.size();
        return rec;
      });
    }
  }
  for (const auto& r : algebras) {
    const std::size_t k = r.signature().size();
    std::size_t codes = 1;
    for (std::size_t i = 0; i < k; ++i) codes *= 3;
    for (std::size_t code = 0; code < codes; ++code) {
      const FinAlgebra tagged = r.retagged(tagsOf(k, code));
      if (!isRelaxedEntropic(tagged, o.law).verdict) continue;
      c.check("free in relaxed " + r.name() + " {" + tagsStr(tagged.signature()) + "}", [&] {
        ContinuationMonad m(tagged, o.law.sizeGuard);
        std::vector<LawOutcome> parts;
        for (const auto& x : posets(o, 3)) {
          const auto cmp = compareFamilies(m, x);
          bool inside = std::includes(cmp.relaxed.begin(), cmp.relaxed.end(), cmp.free.begin(),
                                      cmp.free.end());
          parts.push_back(fromBool(inside && cmp.freeInRelaxed, cmp.free.size(),
                                   "free not inside relaxed", "inside", {x->name()}));
        }
        return recordOf("", merged(parts));
      });
    }
  }
  return c.take();
}

std::vector<CheckRecord> monadLaws(const VerifyOptions& o) {
  Collector c;
  for (const FinAlgebra* r : {&angelic(o), &catalog::demonic2()}) {
    ContinuationMonad m(*r, o.law.sizeGuard);
    for (const auto& x : tiny(o)) {
      for (const auto& y : tiny(o)) {
        for (const auto& z : tiny(o)) {
          c.check("monad laws " + x->name() + "," + y->name() + "," + z->name() + " over " + r->name(), [&] {
            const auto rep = checkMonadLaws(m, x, y, z);
            Json details;
            details["unitLeft"] = rep.unitLeft.holds;
            details["unitRight"] = rep.unitRight.holds;
            details["associativity"] = rep.associativity.holds;
            details["closure"] = rep.closure.holds;
            return recordWith(merged({rep.unitLeft, rep.unitRight, rep.associativity, rep.closure}),
                              std::move(details));
          });
        }
      }
    }
  }
  return c.take();
}

std::vector<CheckRecord> kleisli(const VerifyOptions& o) {
  Collector c;
  for (const FinAlgebra* r : {&angelic(o), &catalog::demonic2()}) {
    ContinuationMonad m(*r, o.law.sizeGuard);
    for (const auto& x : posets(o)) {
      c.check("delta order embedding " + x->name() + " over " + r->name(),
              [&] { return recordOf("", checkDeltaEmbedding(m, x)); });
    }
    for (const auto& x : posets(o, 3)) {
      for (const auto& y : posets(o, 3)) {
        const std::string at = " " + x->name() + " -> " + y->name() + " over " + r->name();
        c.check("lifting is a homomorphism" + at,
                [&] { return recordOf("", checkKleisliHomomorphism(m, x, y)); });
        c.check("lifting preserves homomorphisms" + at,
                [&] { return recordOf("", checkKleisliPreserves(m, x, y, Family::Hom)); });
      }
    }
  }
  for (const FinAlgebra* r : {&angelic(o), &catalog::demonic2(), &catalog::lattice2()}) {
    c.check("unit of " + r->name() + " is a homomorphism",
            [&] { return recordOf("", checkUnitHomomorphism(*r, *r, o.law.sizeGuard)); });
    for (const auto& x : tiny(o)) {
      if (x->size() < 2) continue;
      c.check("unit of " + r->name() + "^" + x->name() + " is a homomorphism", [&] {
        const auto lifted = liftPointwise(*r, x, o.law.sizeGuard);
        return recordOf("", checkUnitHomomorphism(lifted.algebra, *r, o.law.sizeGuard));
      });
    }
  }
  return c.take();
}

std::vector<CheckRecord> valuationEngine(const VerifyOptions& o) {
  Collector c;
  const LawConfig cfg = trialsCapped(o, 1000);
  for (const auto& x : posets(o)) {
    const auto vals = catalogValuations(x);
    for (const auto& mu : vals) {
      c.check("linear " + mu.str() + " [" + x->name() + "]", [&] {
        const auto rep = checkLinear(mu, cfg);
        auto rec = recordOf("", functionalOutcome(rep));
        rec.verdict = rec.verdict && rep.verdict;
        return rec;
      });
    }
    c.check("order oracle agrees with sampling [" + x->name() + "]", [&] {
      std::vector<LawOutcome> parts;
      for (const auto& mu : vals) {
        for (const auto& nu : vals) {
          LawOutcome out = checkLeqOracle(mu, nu, cfg);
          if (!out.holds && out.witness) {
            out.witness->args.insert(out.witness->args.begin(), {mu.str(), nu.str()});
          }
          parts.push_back(std::move(out));
        }
      }
      auto rec = recordOf("", merged(parts));
      rec.details["pairs"] = parts.size();
      return rec;
    });
    c.check("cone axioms [" + x->name() + "]", [&] {
      std::vector<LawOutcome> parts;
      Json details;
      for (auto& [name, outcome] : checkConeAxioms(x, cfg)) {
        details[name] = outcome.holds;
        parts.push_back(outcome);
      }
      return recordWith(merged(parts), std::move(details));
    });
    c.check("module axioms [" + x->name() + "]", [&] {
      const ValuationCone cone(x);
      const ScalarEndoSpace scalars(cone.base());
      auto onVals = [](const ExtNN& r, const SimpleValuation& mu) {
        return coneCombine(r, mu, ExtNN(0), mu);
      };
      const auto onCone = checkModuleAxioms(scalars, cone, onVals, cfg);
      const PredicateAlgebra preds(cone.base(), x);
      auto onPreds = [](const ExtNN& r, const Predicate& f) { return predScale(r, f); };
      const auto onF = checkModuleAxioms(scalars, preds, onPreds, cfg);
      std::vector<LawOutcome> parts{onCone.identity, onCone.composition, onF.identity, onF.composition};
      for (const auto* rep : {&onCone, &onF}) {
        parts.insert(parts.end(), rep->opsOnEndos.begin(), rep->opsOnEndos.end());
        parts.insert(parts.end(), rep->endosOnOps.begin(), rep->endosOnOps.end());
      }
      Json details;
      details["valuations"] = onCone.verdict;
      details["predicates"] = onF.verdict;
      auto rec = recordWith(merged(parts), std::move(details));
      rec.verdict = rec.verdict && onCone.verdict && onF.verdict;
      return rec;
    });
  }
  return c.take();
}

std::vector<CheckRecord> mixed(const VerifyOptions& o) {
  Collector c;
  for (const auto& x : posets(o)) {
    c.check("suprema sublinear [" + x->name() + "]", [&] {
      std::vector<LawOutcome> parts;
      std::size_t count = 0;
      for (const auto& phi : catalogSubFns(x)) {
        const auto rep = checkSublinear(phi, o.law);
        LawOutcome out = functionalOutcome(rep);
        out.holds = out.holds && rep.verdict;
        if (!out.holds && out.witness) out.witness->args.insert(out.witness->args.begin(), phi.str());
        parts.push_back(std::move(out));
        ++count;
      }
      auto rec = recordOf("", merged(parts));
      rec.details["functionals"] = count;
      return rec;
    });
    c.check("infima superlinear [" + x->name() + "]", [&] {
      std::vector<LawOutcome> parts;
      std::size_t count = 0;
      for (const auto& phi : catalogSupFns(x)) {
        const auto rep = checkSuperlinear(phi, o.law);
        LawOutcome out = functionalOutcome(rep);
        out.holds = out.holds && rep.verdict;
        if (!out.holds && out.witness) out.witness->args.insert(out.witness->args.begin(), phi.str());
        parts.push_back(std::move(out));
        ++count;
      }
      auto rec = recordOf("", merged(parts));
      rec.details["functionals"] = count;
      return rec;
    });
  }
  for (const auto& x : posets(o)) {
    const Elem point = static_cast<Elem>(x->size() - 1);
    c.check("non-integer witness 1/2*" + x->label(point) + " [" + x->name() + "]", [&] {
      const auto rep = nonIntegerWitness(x, point, ExtNN::fraction(1, 2), o.law);
      LawOutcome morph;
      morph.holds = rep.morphism.verdict;
      morph.exhaustive = rep.morphism.exhaustive;
      morph.cases = 0;
      for (const auto& op : rep.morphism.ops) {
        morph.cases += op.outcome.cases;
        if (!op.outcome.holds && morph.witness == std::nullopt) morph.witness = op.outcome.witness;
      }
      auto rec = recordOf("", merged({morph, rep.naturalMasses,
                                      fromBool(rep.massOutsideNaturals, 1, rep.mass.str(), "outside N")}));
      rec.verdict = rec.verdict && rep.verdict;
      rec.details["functional"] = rep.functional.str();
      rec.details["mass"] = rep.mass.str();
      return rec;
    });
  }
  return c.take();
}

// ------------------------------------------------------ module invariants

using Slot = SlotSource<ExtNN>;
using Verdict = std::optional<std::pair<std::string, std::string>>;

Verdict same(const ExtNN& a, const ExtNN& b) {
  if (a == b) return std::nullopt;
  return std::make_pair(a.str(), b.str());
}

std::vector<CheckRecord> invariants(const VerifyOptions& o) {
  Collector c;
  const Slot s = scalarSlots();
  auto law3 = [&](const std::string& name, auto f) {
    c.check(name, [&] {
      return recordOf("", forEachCase(s, 3, s, 0, 0, o.law,
                                      [&](std::span<const ExtNN> v, std::span<const ExtNN>,
                                          std::span<const ExtNN>) { return f(v[0], v[1], v[2]); }));
    });
  };
  law3("extnn add associative", [](const ExtNN& a, const ExtNN& b, const ExtNN& x) {
    return same((a + b) + x, a + (b + x));
  });
  law3("extnn add commutative", [](const ExtNN& a, const ExtNN& b, const ExtNN&) {
    return same(a + b, b + a);
  });
  law3("extnn add unit", [](const ExtNN& a, const ExtNN&, const ExtNN&) { return same(a + ExtNN(0), a); });
  law3("extnn mul distributes over add", [](const ExtNN& a, const ExtNN& b, const ExtNN& x) {
    return same(a * (b + x), a * b + a * x);
  });
  c.check("extnn add and mul monotone", [&] { return recordOf("", checkMonotone(catalog::rsemiring(), o.law)); });

  for (const auto& x : posets(o)) {
    const std::string at = " [" + x->name() + "]";
    c.check("up-sets and down-sets complement" + at, [&] {
      const auto up = allUpSets(*x, o.law.sizeGuard);
      const auto down = allDownSets(*x, o.law.sizeGuard);
      std::set<ElemBits> downSet, images;
      for (const auto& d : down) downSet.insert(d.members);
      bool ok = up.size() == down.size();
      for (const auto& u : up) {
        ok = ok && downSet.count(u.members.complement()) == 1;
        images.insert(u.members.complement());
      }
      ok = ok && images.size() == up.size();
      return recordOf("", fromBool(ok, up.size(), std::to_string(up.size()) + " up-sets",
                                   std::to_string(down.size()) + " down-sets"));
    });
    c.check("up-sets closed under union and intersection" + at, [&] {
      const auto up = allUpSets(*x, o.law.sizeGuard);
      std::set<ElemBits> all;
      for (const auto& u : up) all.insert(u.members);
      for (const auto& a : up) {
        for (const auto& b : up) {
          if (!all.count(a.members | b.members) || !all.count(a.members & b.members)) {
            return recordOf("", fromBool(false, 1, "not closed", "closed",
                                         {formatSet(*x, a.members), formatSet(*x, b.members)}));
          }
        }
      }
      return recordOf("", fromBool(true, up.size() * up.size()));
    });
    c.check("cover relation rebuilds the order" + at, [&] {
      std::vector<FinPoset::CoverPair> pairs;
      for (auto [a, b] : x->covers()) pairs.emplace_back(x->label(a), x->label(b));
      auto rebuilt = posetFromCover(x->name(), x->labels(), pairs);
      for (Elem a = 0; a < x->size(); ++a) {
        for (Elem b = 0; b < x->size(); ++b) {
          if (rebuilt->leq(a, b) != x->leq(a, b)) {
            return recordOf("", fromBool(false, 1, "differs", "same", {x->label(a), x->label(b)}));
          }
        }
      }
      return recordOf("", fromBool(true, x->size() * x->size()));
    });
  }

  for (const auto& x : posets(o, 3)) {
    for (const auto& y : posets(o, 3)) {
      c.check("monotone maps " + x->name() + " -> " + y->name() + " match brute force", [&] {
        const auto e = enumerateMonotone(x, y, o.law.sizeGuard);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < x->size(); ++i) total *= y->size();
        std::uint64_t count = 0;
        std::vector<Elem> t(x->size());
        for (std::uint64_t code = 0; code < total; ++code) {
          std::uint64_t k = code;
          for (std::size_t i = x->size(); i-- > 0; k /= y->size()) t[i] = static_cast<Elem>(k % y->size());
          if (isMonotone(*x, *y, t)) ++count;
        }
        bool ok = count == e->size() && isPartialOrder(*e->poset());
        return recordOf("", fromBool(ok, total, std::to_string(e->size()) + " enumerated",
                                     std::to_string(count) + " by brute force"));
      });
    }
  }
  c.check("precomposition is functorial", [&] {
    std::vector<PosetPtr> objs;
    for (const auto& p : {catalog::chain2(), catalog::anti2(), catalog::chain3()}) {
      if (p->size() <= o.catalogMax) objs.push_back(p);
    }
    std::uint64_t cases = 0;
    for (const auto& x : objs) {
      for (const auto& y : objs) {
        for (const auto& z : objs) {
          auto us = enumerateMonotone(x, y), vs = enumerateMonotone(y, z),
               gs = enumerateMonotone(z, catalog::two());
          for (Elem i = 0; i < us->size(); ++i) {
            for (Elem j = 0; j < vs->size(); ++j) {
              for (Elem k = 0; k < gs->size(); ++k) {
                ++cases;
                auto u = us->map(i), v = vs->map(j), g = gs->map(k);
                if (!(precompose(compose(u, v), g) == precompose(u, precompose(v, g)))) {
                  return recordOf("", fromBool(false, cases, "differs", "same",
                                               {mapLabel(*y, u.table()), mapLabel(*z, v.table()),
                                                mapLabel(*catalog::two(), g.table())}));
                }
              }
            }
          }
        }
      }
    }
    return recordOf("", fromBool(true, cases));
  });

  for (const auto& r : catalog::finiteAlgebras()) {
    c.check("commutation is symmetric " + r.name(), [&] {
      const std::size_t k = r.signature().size();
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (commutes(r, a, b, o.law).holds != commutes(r, b, a, o.law).holds) {
            const auto& ops = r.signature().ops();
            return recordOf("", fromBool(false, 1, "asymmetric", "symmetric", {ops[a].symbol, ops[b].symbol}));
          }
        }
      }
      return recordOf("", fromBool(true, k * k));
    });
    c.check("entropic verdict matches the matrix " + r.name(), [&] {
      const auto rep = isEntropic(r, o.law);
      bool all = rep.constantsAgree;
      for (const auto& p : rep.pairs) all = all && p.outcome.holds;
      return recordOf("", fromBool(rep.verdict == all, rep.pairs.size(), rep.verdict ? "entropic" : "not entropic",
                                   all ? "every pair commutes" : "some pair fails"));
    });
    const bool entropic = isEntropic(r, o.law).verdict;
    const bool relaxed = isRelaxedEntropic(r, o.law).verdict;
    for (const auto& x : posets(o, 3)) {
      if (!entropic && !relaxed) break;
      c.check("morphisms closed under lifted operations " + r.name() + " [" + x->name() + "]", [&] {
        const auto b = liftPointwise(r, x, o.law.sizeGuard);
        const auto space = enumerateMonotone(b.space->poset(), r.carrier(), o.law.sizeGuard);
        const auto lifted = liftOver(r, space, o.law.sizeGuard);
        std::vector<Elem> homs, rel;
        for (Elem i = 0; i < space->size(); ++i) {
          const auto m = space->map(i);
          if (isHomomorphism(m, b.algebra, r)) homs.push_back(i);
          if (isRelaxedMorphism(m, b.algebra, r)) rel.push_back(i);
        }
        bool ok = true;
        if (entropic) ok = ok && generatedSubalgebra(lifted, homs) == homs;
        if (relaxed) ok = ok && generatedSubalgebra(lifted, rel) == rel;
        return recordOf("", fromBool(ok, space->size(), "not closed", "closed"));
      });
    }
    c.check("generated subalgebras monotone and idempotent " + r.name(), [&] {
      const auto b = liftPointwise(r, catalog::anti2(), o.law.sizeGuard);
      const std::size_t n = b.algebra.size();
      std::vector<std::vector<Elem>> gens(std::size_t{1} << n);
      for (std::size_t mask = 0; mask < gens.size(); ++mask) {
        std::vector<Elem> g;
        for (Elem e = 0; e < n; ++e) {
          if (mask >> e & 1U) g.push_back(e);
        }
        gens[mask] = generatedSubalgebra(b.algebra, g);
        if (generatedSubalgebra(b.algebra, gens[mask]) != gens[mask]) {
          return recordOf("", fromBool(false, mask + 1, "not idempotent", "idempotent", {std::to_string(mask)}));
        }
      }
      for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t sup = 0; sup < gens.size(); ++sup) {
          if ((a & sup) != a) continue;
          if (!std::includes(gens[sup].begin(), gens[sup].end(), gens[a].begin(), gens[a].end())) {
            return recordOf("", fromBool(false, 1, "not monotone", "monotone",
                                         {std::to_string(a), std::to_string(sup)}));
          }
        }
      }
      return recordOf("", fromBool(true, gens.size()));
    });
  }

  for (const FinAlgebra* r : {&angelic(o), &catalog::demonic2()}) {
    ContinuationMonad m(*r, o.law.sizeGuard);
    for (const auto& x : tiny(o)) {
      for (const auto& y : tiny(o)) {
        if (x->size() < 2 || y->size() < 2) continue;
        const std::string at = " " + x->name() + " -> " + y->name() + " over " + r->name();
        c.check("P of hom state transformers is hom" + at,
                [&] { return recordOf("", checkTransformerCorrespondence(m, x, y, Family::Hom)); });
        c.check("P of relaxed state transformers is relaxed" + at,
                [&] { return recordOf("", checkTransformerCorrespondence(m, x, y, Family::Relaxed)); });
        c.check("lifting preserves relaxed morphisms" + at,
                [&] { return recordOf("", checkKleisliPreserves(m, x, y, Family::Relaxed)); });
      }
    }
  }

  for (const auto& x : posets(o, 3)) {
    c.check("components are dominated by their supremum [" + x->name() + "]", [&] {
      std::vector<LawOutcome> parts;
      for (const auto& phi : catalogSubFns(x)) {
        for (const auto& mu : phi.components()) parts.push_back(dominationCheck(mu, phi, trialsCapped(o, 1000)));
      }
      for (const auto& phi : catalogSupFns(x)) {
        for (const auto& mu : phi.components()) parts.push_back(dominationCheck(mu, phi, trialsCapped(o, 1000)));
      }
      return recordOf("", merged(parts));
    });
  }
  return c.take();
}

}  // namespace

const std::vector<CheckGroup>& checkGroups() {
  static const std::vector<CheckGroup> groups{
      {"transformers", "P/Q bijection over 2_ang, |X|,|Y| <= 3", 10, transformerBijection},
      {"hoare", "Hoare powerdomain equals the homomorphisms into 2_ang", 30, hoare},
      {"smyth", "Smyth powerdomain equals the homomorphisms into 2_dem", 30, smyth},
      {"sober", "sobrification has |X| points", 30, sober},
      {"entropic", "entropicity matrix of the catalog algebras", 20, entropicity},
      {"containments", "free inside hom (entropic) and inside relaxed (relaxed entropic)", 60, containments},
      {"monad", "unit and associativity laws on {1, C2, A2}", 60, monadLaws},
      {"kleisli", "delta embedding, lifting homomorphisms, unit of an algebra", 60, kleisli},
      {"valuations", "linearity, order oracle, cone and module axioms", 30, valuationEngine},
      {"mixed", "suprema sublinear, infima superlinear, non-integer witness", 60, mixed},
      {"invariants", "remaining module invariants", 0, invariants},
  };
  return groups;
}

const std::vector<CheckGroup>& acceptanceGroups() {
  static const std::vector<CheckGroup> groups(checkGroups().begin(), checkGroups().end() - 1);
  return groups;
}

std::vector<CheckRecord> runGroup(const CheckGroup& group, const VerifyOptions& opts) {
  std::vector<CheckRecord> out;
  try {
    out = group.run(opts);
  } catch (const Error& e) {
    out.push_back(errorRecord(group.name, e.what()));
  }
  for (auto& r : out) r.group = group.name;
  return out;
}

Report verifySuite(const VerifyOptions& opts) {
  Report report;
  report.command = "verify-suite";
  report.config = opts.law;
  Json groups = Json::array();
  for (const auto& g : checkGroups()) {
    auto records = runGroup(g, opts);
    std::size_t passed = 0;
    for (const auto& r : records) passed += r.verdict ? 1 : 0;
    Json gj;
    gj["name"] = g.name;
    gj["title"] = g.title;
    gj["checks"] = records.size();
    gj["passed"] = passed;
    gj["verdict"] = passed == records.size() ? "pass" : "fail";
    groups.push_back(std::move(gj));
    report.checks.insert(report.checks.end(), std::make_move_iterator(records.begin()),
                         std::make_move_iterator(records.end()));
  }
  report.result["catalogMax"] = opts.catalogMax == std::numeric_limits<std::size_t>::max()
                                    ? Json(nullptr)
                                    : Json(opts.catalogMax);
  if (!opts.fault.empty()) report.result["fault"] = opts.fault;
  report.result["groups"] = std::move(groups);
  return report;
}

}  // namespace powdom
