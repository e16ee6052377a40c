#pragma once

// Concrete powerdomains over finite posets. The Hoare, Smyth and sober
// constructions compare a set-theoretic description with the homomorphism
// functionals of the continuation monad. The probabilistic side works with
// exact simple valuations over Q+ and their finite max/min combinations,
// which are checked against the (sub/super)linearity laws on characteristic
// functions plus seeded samples.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "powdom/extnum.hpp"
#include "powdom/laws.hpp"
#include "powdom/monad.hpp"
#include "powdom/poset.hpp"
#include "powdom/ratalgebra.hpp"

namespace powdom {

// ------------------------------------------------------- set powerdomains

struct SetPowerdomain {
  /// "hoare" or "smyth".
  std::string kind;
  PosetPtr x;
  /// Down-sets (Hoare) or up-sets (Smyth), in enumeration order.
  std::vector<ElemBits> sets;
  /// The sets ordered by inclusion (Hoare) or reverse inclusion (Smyth).
  PosetPtr poset;
  /// The functional assigned to each set.
  std::vector<Functional> image;
  /// Indices of the homomorphisms into 2_ang (2_dem) inside T X.
  std::vector<Elem> hom;
  /// Every image is a homomorphism.
  LawOutcome intoHom;
  /// The images are distinct and cover every homomorphism.
  LawOutcome bijective;
  /// C <= C' iff image(C) <= image(C').
  LawOutcome orderIsomorphism;
  /// Hoare: phi^-1(0) is an ideal of up-sets. Smyth: phi^-1(1) is a filter.
  LawOutcome shape;
  LawOutcome freeEqualsHom;
  bool verdict = true;
};

/// Down-sets C with phi_C(U) = 1 iff U meets C, against the homomorphisms
/// into (2, join, 0).
SetPowerdomain hoarePowerdomain(const PosetPtr& x, std::uint64_t sizeGuard = kDefaultSizeGuard);
/// Same, with r standing in for 2_ang (used to exercise failing checks).
SetPowerdomain hoarePowerdomain(const PosetPtr& x, const FinAlgebra& r,
                                std::uint64_t sizeGuard = kDefaultSizeGuard);
/// Up-sets K with phi_K(U) = 1 iff K is inside U, against the homomorphisms
/// into (2, meet, 1). The empty set is the top.
SetPowerdomain smythPowerdomain(const PosetPtr& x, std::uint64_t sizeGuard = kDefaultSizeGuard);
SetPowerdomain smythPowerdomain(const PosetPtr& x, const FinAlgebra& r,
                                std::uint64_t sizeGuard = kDefaultSizeGuard);

struct Sobrification {
  PosetPtr x;
  /// The frame homomorphisms 2^X -> 2.
  std::vector<Functional> points;
  PosetPtr poset;
  /// deltaIndex[x] is the position of delta(x) in points.
  std::vector<Elem> deltaIndex;
  LawOutcome count;
  /// delta is an order isomorphism of X onto the points.
  LawOutcome deltaIso;
  bool verdict = true;
};

Sobrification sobrification(const PosetPtr& x, std::uint64_t sizeGuard = kDefaultSizeGuard);
Sobrification sobrification(const PosetPtr& x, const FinAlgebra& r,
                            std::uint64_t sizeGuard = kDefaultSizeGuard);

// --------------------------------------------------------------- valuations

struct Atom {
  ExtNN weight;
  Elem point = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// A finite sum of weighted point masses, kept canonical: atoms sorted by
/// point, one atom per point, no zero weights.
class SimpleValuation {
 public:
  SimpleValuation() = default;
  /// Throws UnknownElement for points outside X.
  SimpleValuation(PosetPtr x, std::vector<Atom> atoms);

  static SimpleValuation zero(const PosetPtr& x);
  static SimpleValuation dirac(const PosetPtr& x, Elem point, ExtNN weight = ExtNN(1));

  const PosetPtr& poset() const noexcept { return x_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  ExtNN mass() const;
  /// "val{1/2@a; 1/3@b}"
  std::string str() const;

  friend bool operator==(const SimpleValuation& a, const SimpleValuation& b) {
    return a.x_ == b.x_ && a.atoms_ == b.atoms_;
  }
  friend bool operator<(const SimpleValuation& a, const SimpleValuation& b);

 private:
  PosetPtr x_;
  std::vector<Atom> atoms_;
};

/// sum_i w_i f(x_i). Throws TypeMismatch across posets.
ExtNN evalValuation(const SimpleValuation& mu, const Predicate& f);
/// mu(chi_U) <= nu(chi_U) for every up-set U, which by the layer-cake
/// decomposition of monotone predicates is pointwise domination.
bool valuationLeq(const SimpleValuation& mu, const SimpleValuation& nu);
/// a mu + b nu
SimpleValuation coneCombine(const ExtNN& a, const SimpleValuation& mu, const ExtNN& b,
                            const SimpleValuation& nu);
SimpleValuation sampleValuation(const PosetPtr& x, Sampler& s);

/// A finite supremum of simple valuations: a sublinear functional.
class SubFn {
 public:
  SubFn() = default;
  /// Throws InvalidValue when empty, TypeMismatch across posets.
  explicit SubFn(std::vector<SimpleValuation> components);

  const PosetPtr& poset() const noexcept { return components_.front().poset(); }
  const std::vector<SimpleValuation>& components() const noexcept { return components_; }
  /// "sup{val{...}; val{...}}"
  std::string str() const;
  friend bool operator==(const SubFn&, const SubFn&) = default;

 private:
  std::vector<SimpleValuation> components_;
};

/// A finite infimum of simple valuations: a superlinear functional.
class SupFn {
 public:
  SupFn() = default;
  explicit SupFn(std::vector<SimpleValuation> components);

  const PosetPtr& poset() const noexcept { return components_.front().poset(); }
  const std::vector<SimpleValuation>& components() const noexcept { return components_; }
  /// "inf{val{...}; val{...}}"
  std::string str() const;
  friend bool operator==(const SupFn&, const SupFn&) = default;

 private:
  std::vector<SimpleValuation> components_;
};

ExtNN evalSubFn(const SubFn& phi, const Predicate& f);
ExtNN evalSupFn(const SupFn& phi, const Predicate& f);

inline ExtNN evaluate(const SimpleValuation& mu, const Predicate& f) { return evalValuation(mu, f); }
inline ExtNN evaluate(const SubFn& phi, const Predicate& f) { return evalSubFn(phi, f); }
inline ExtNN evaluate(const SupFn& phi, const Predicate& f) { return evalSupFn(phi, f); }

/// Simple valuations as a cone: add, scale and zero act on weights.
class ValuationCone {
 public:
  using value_type = SimpleValuation;
  static constexpr bool exhaustive = false;

  explicit ValuationCone(PosetPtr x);

  const PosetPtr& poset() const noexcept { return x_; }
  const RatAlgebra& base() const noexcept;
  const Signature& signature() const noexcept { return base().signature(); }

  SimpleValuation apply(std::size_t op, std::span<const ExtNN> params,
                        std::span<const SimpleValuation> args) const;
  bool leq(const SimpleValuation& a, const SimpleValuation& b) const { return valuationLeq(a, b); }
  bool equal(const SimpleValuation& a, const SimpleValuation& b) const { return a == b; }
  std::string format(const SimpleValuation& a) const { return a.str(); }
  /// Zero, every point mass and the catalog valuations.
  const std::vector<SimpleValuation>& grid() const noexcept { return grid_; }
  SimpleValuation sample(Sampler& s) const { return sampleValuation(x_, s); }

 private:
  PosetPtr x_;
  std::vector<SimpleValuation> grid_;
};

/// A fixed family of valuations on X: zero, the point masses and a few
/// weighted sums, including one with an infinite weight.
std::vector<SimpleValuation> catalogValuations(const PosetPtr& x);
/// Suprema (infima) of every pair of distinct nonzero catalog valuations,
/// and of all point masses.
std::vector<SubFn> catalogSubFns(const PosetPtr& x);
std::vector<SupFn> catalogSupFns(const PosetPtr& x);

// ------------------------------------------------------------------- checks

using Evaluator = std::function<ExtNN(const Predicate&)>;

struct FunctionalLawReport {
  bool verdict = true;
  /// phi(f + g) REL phi(f) + phi(g)
  Relation additivity = Relation::Equal;
  LawOutcome zero;
  LawOutcome homogeneity;
  LawOutcome additive;
  LawOutcome monotone;
};

/// phi(0) = 0, phi(r f) = r phi(f) and phi(f + g) REL phi(f) + phi(g), over
/// every pair of characteristic functions (and the constant infinity), then
/// cfg.trials seeded predicates; monotonicity as phi(f) <= phi(f max g).
FunctionalLawReport checkFunctionalLaws(const PosetPtr& x, const Evaluator& phi, Relation rel,
                                        const LawConfig& cfg = {});

template <class F>
FunctionalLawReport checkLinear(const F& phi, const LawConfig& cfg = {}) {
  return checkFunctionalLaws(
      phi.poset(), [&phi](const Predicate& f) { return evaluate(phi, f); }, Relation::Equal, cfg);
}
template <class F>
FunctionalLawReport checkSublinear(const F& phi, const LawConfig& cfg = {}) {
  return checkFunctionalLaws(
      phi.poset(), [&phi](const Predicate& f) { return evaluate(phi, f); }, Relation::LessEq, cfg);
}
template <class F>
FunctionalLawReport checkSuperlinear(const F& phi, const LawConfig& cfg = {}) {
  return checkFunctionalLaws(
      phi.poset(), [&phi](const Predicate& f) { return evaluate(phi, f); }, Relation::GreaterEq,
      cfg);
}

/// Searches for f with mu(f) > phi(f) (SubFn) or mu(f) < phi(f) (SupFn).
/// A pass means no violation was found, not membership.
LawOutcome dominationCheck(const SimpleValuation& mu, const SubFn& phi, const LawConfig& cfg = {});
LawOutcome dominationCheck(const SimpleValuation& mu, const SupFn& phi, const LawConfig& cfg = {});

/// valuationLeq against sampled pointwise comparison. A disagreement is a
/// predicate violating domination while the oracle claims it, or no
/// violating characteristic function while the oracle denies it.
LawOutcome checkLeqOracle(const SimpleValuation& mu, const SimpleValuation& nu,
                          const LawConfig& cfg = {});

/// The cone equations (commutative monoid, and scalar action with
/// 1 x = x, (rs) x = r (s x), r (x + y) = r x + r y, (r + s) x = r x + s x,
/// 0 x = 0) on valuations over X.
std::vector<std::pair<std::string, LawOutcome>> checkConeAxioms(const PosetPtr& x,
                                                                const LawConfig& cfg = {});

struct NonIntegerReport {
  bool verdict = true;
  /// r times the point mass at x.
  SimpleValuation functional;
  /// Against (Q+, add, zero), lifted to predicates.
  MorphismReport morphism;
  ExtNN mass;
  bool massOutsideNaturals = false;
  /// Natural combinations of point masses have natural or infinite mass.
  LawOutcome naturalMasses;
};

/// Evidence that r x-hat is a monoid homomorphism outside the monoid
/// generated by the point masses. Throws RejectInteger for integral r and
/// InvalidValue for infinite r.
NonIntegerReport nonIntegerWitness(const PosetPtr& x, Elem point, const ExtNN& r,
                                   const LawConfig& cfg = {});

}  // namespace powdom
