#pragma once

// The continuation monad T X = [R^X -> R] over a finite algebra R, with unit
// delta, Kleisli lifting and the state/predicate transformer correspondence,
// plus the subordinate families of homomorphism, relaxed and free
// functionals. Every T X is materialized as an explicit exponential, so all
// constructions are exact and guarded by the size guard.

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powdom/algebra.hpp"
#include "powdom/funcspace.hpp"
#include "powdom/laws.hpp"
#include "powdom/poset.hpp"

namespace powdom {

/// An element of T X, as an index into the enumerated exponential.
struct Functional {
  ExpPtr space;
  Elem index = 0;

  /// Values on the predicates of R^X, in their enumeration order.
  std::span<const Elem> table() const { return space->table(index); }
  std::string str() const { return space->poset()->label(index); }

  friend bool operator==(const Functional& a, const Functional& b) {
    return a.space == b.space && a.index == b.index;
  }
};

/// t : X -> T Y, a monotone map into the poset of functionals on R^Y.
struct StateTransformer {
  PosetPtr x;
  PosetPtr y;
  MonoMap map;

  std::string str() const { return mapLabel(*map.target(), map.table()); }
  friend bool operator==(const StateTransformer& a, const StateTransformer& b) {
    return a.x == b.x && a.y == b.y && a.map == b.map;
  }
};

/// s : R^Y -> R^X, a monotone map between predicate posets.
struct PredicateTransformer {
  PosetPtr x;
  PosetPtr y;
  MonoMap map;

  std::string str() const { return mapLabel(*map.target(), map.table()); }
  friend bool operator==(const PredicateTransformer& a, const PredicateTransformer& b) {
    return a.x == b.x && a.y == b.y && a.map == b.map;
  }
};

enum class Family { Full, Hom, Relaxed, Free };

std::string_view to_string(Family f) noexcept;

class ContinuationMonad {
 public:
  explicit ContinuationMonad(FinAlgebra r, std::uint64_t sizeGuard = kDefaultSizeGuard);

  const FinAlgebra& algebra() const noexcept { return r_; }
  std::uint64_t sizeGuard() const noexcept { return guard_; }

  /// R^X and its pointwise algebra.
  const ExpPtr& predicates(const PosetPtr& x) const;
  const FinAlgebra& predicateAlgebra(const PosetPtr& x) const;
  /// T X = [R^X -> R] and its pointwise algebra.
  const ExpPtr& functionals(const PosetPtr& x) const;
  const FinAlgebra& functionalAlgebra(const PosetPtr& x) const;

  Functional functional(const PosetPtr& x, Elem index) const;
  /// Throws NonMonotoneResult when the table is not monotone on R^X.
  Functional functional(const PosetPtr& x, std::span<const Elem> table) const;

  /// The projection f |-> f(point).
  Functional delta(const PosetPtr& x, Elem point) const;
  std::vector<Functional> deltas(const PosetPtr& x) const;
  /// delta_X as a state transformer X -> T X.
  StateTransformer unit(const PosetPtr& x) const;
  /// delta_Y after u.
  StateTransformer pure(const MonoMap& u) const;
  StateTransformer stateTransformer(const PosetPtr& x, const PosetPtr& y,
                                    std::vector<Elem> table) const;

  /// t^dagger(phi)(g) = phi(x |-> t(x)(g)). Throws TypeMismatch.
  Functional kleisliLift(const StateTransformer& t, const Functional& phi) const;
  /// t^dagger : T X -> T Y as a monotone map.
  MonoMap kleisliMap(const StateTransformer& t) const;
  /// x |-> r^dagger(t(x)), a state transformer X -> T Z.
  StateTransformer kleisliCompose(const StateTransformer& t, const StateTransformer& r) const;
  /// g |-> phi(g after u).
  Functional functorAction(const MonoMap& u, const Functional& phi) const;

  /// P(t)(g)(x) = t(x)(g)
  PredicateTransformer pTransform(const StateTransformer& t) const;
  /// Q(s)(x)(g) = s(g)(x). Throws NonMonotoneResult if the result is not a
  /// state transformer, which a monotone s rules out.
  StateTransformer qTransform(const PredicateTransformer& s) const;

  /// Sorted indices into functionals(x).
  const std::vector<Elem>& family(const PosetPtr& x, Family f) const;
  bool inFamily(const Functional& phi, Family f) const;
  std::vector<Functional> homFunctionals(const PosetPtr& x) const;
  std::vector<Functional> relaxedFunctionals(const PosetPtr& x) const;
  std::vector<Functional> freeFunctionals(const PosetPtr& x) const;

  bool isHomomorphism(const Functional& phi) const;
  bool isRelaxedMorphism(const Functional& phi) const;
  bool isHomomorphism(const PredicateTransformer& s) const;
  bool isRelaxedMorphism(const PredicateTransformer& s) const;

  /// Every monotone X -> T Y whose values lie in the family of Y.
  std::vector<StateTransformer> stateTransformers(const PosetPtr& x, const PosetPtr& y,
                                                  Family f = Family::Full) const;
  /// Every monotone R^Y -> R^X.
  std::vector<PredicateTransformer> predicateTransformers(const PosetPtr& x,
                                                          const PosetPtr& y) const;

 private:
  struct Entry {
    PosetPtr x;
    ExpPtr preds;
    std::optional<FinAlgebra> predAlg;
    mutable ExpPtr funs;
    mutable std::optional<FinAlgebra> funAlg;
    mutable std::map<Family, std::vector<Elem>> families;
  };
  const Entry& entry(const PosetPtr& x) const;
  /// The X with phi in T X; throws TypeMismatch for foreign functionals.
  const PosetPtr& baseOf(const Functional& phi) const;
  void checkState(const StateTransformer& t) const;

  FinAlgebra r_;
  std::uint64_t guard_;
  mutable std::map<const FinPoset*, Entry> cache_;
};

// ------------------------------------------------------------------- checks

struct MonadLawReport {
  bool verdict = true;
  /// delta^dagger = id on the family of X.
  LawOutcome unitLeft;
  /// t^dagger(delta(x)) = t(x).
  LawOutcome unitRight;
  /// (r^dagger after t)^dagger = r^dagger after t^dagger on the family of X.
  LawOutcome associativity;
  /// Unit and liftings stay inside the family.
  LawOutcome closure;
};

/// The laws for one pair t : X -> T Y, r : Y -> T Z, quantified over the
/// family of X.
MonadLawReport checkMonadLaws(const ContinuationMonad& m, const StateTransformer& t,
                              const StateTransformer& r, Family f = Family::Full);
/// The laws for every t : X -> F Y and r : Y -> F Z of the family F.
MonadLawReport checkMonadLaws(const ContinuationMonad& m, const PosetPtr& x, const PosetPtr& y,
                              const PosetPtr& z, Family f = Family::Full);

/// Q(P(t)) = t for every state transformer and P(Q(s)) = s for every
/// predicate transformer X <-> Y.
LawOutcome checkTransformerBijection(const ContinuationMonad& m, const PosetPtr& x,
                                     const PosetPtr& y);
/// x <= x' iff delta(x) <= delta(x').
LawOutcome checkDeltaEmbedding(const ContinuationMonad& m, const PosetPtr& x);
/// Every t^dagger is a homomorphism of the functional algebras.
LawOutcome checkKleisliHomomorphism(const ContinuationMonad& m, const PosetPtr& x,
                                    const PosetPtr& y);
/// For t with every t(x) in the family (Hom or Relaxed), t^dagger maps the
/// family of X into that of Y.
LawOutcome checkKleisliPreserves(const ContinuationMonad& m, const PosetPtr& x,
                                 const PosetPtr& y, Family f);
/// P(t) is a homomorphism (relaxed morphism) iff every t(x) is one.
LawOutcome checkTransformerCorrespondence(const ContinuationMonad& m, const PosetPtr& x,
                                          const PosetPtr& y, Family f);
/// For an algebra A of R's signature, a |-> (h |-> h(a)) is a homomorphism
/// from A into the pointwise algebra R^{Hom(A, R)}.
LawOutcome checkUnitHomomorphism(const FinAlgebra& a, const FinAlgebra& r,
                                 std::uint64_t sizeGuard = kDefaultSizeGuard);

struct FamilyComparison {
  std::vector<Elem> free;
  std::vector<Elem> hom;
  std::vector<Elem> relaxed;
  bool freeInHom = false;
  bool freeInRelaxed = false;
  bool homInRelaxed = false;
  bool freeEqualsHom = false;
  /// Set differences, as functional indices.
  std::vector<Elem> freeMinusHom;
  std::vector<Elem> homMinusFree;
  std::vector<Elem> relaxedMinusHom;
};

FamilyComparison compareFamilies(const ContinuationMonad& m, const PosetPtr& x);

/// Sub-poset of an exponential on the given indices, labelled as there.
PosetPtr subPoset(const FinPoset& p, std::span<const Elem> indices, std::string name);

}  // namespace powdom
