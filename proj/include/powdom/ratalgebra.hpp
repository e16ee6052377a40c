#pragma once

// Algebras carried by the extended nonnegative rationals, and their pointwise
// liftings to monotone predicates X -> Q+. Operations are closed-form ExtNN
// arithmetic, so laws on these carriers are grid-plus-sample checks.

#include <string>
#include <vector>

#include "powdom/algebra.hpp"
#include "powdom/extnum.hpp"
#include "powdom/laws.hpp"
#include "powdom/poset.hpp"
#include "powdom/sampler.hpp"

namespace powdom {

enum class RatOpKind {
  Add,
  Max,
  Min,
  Mul,
  /// x |-> r x for one fixed r.
  Scale,
  /// The family x |-> r x, with r supplied per application.
  ScaleFamily,
  Const,
};

std::string_view to_string(RatOpKind kind) noexcept;
RatOpKind parseRatOpKind(std::string_view text);
unsigned arityOf(RatOpKind kind) noexcept;

struct RatOp {
  std::string symbol;
  RatOpKind kind = RatOpKind::Add;
  Tag tag = Tag::EQ;
  /// The scalar of Scale, the value of Const.
  ExtNN param;
};

ExtNN applyRatOp(RatOpKind kind, const ExtNN& param, std::span<const ExtNN> params,
                 std::span<const ExtNN> args);

class RatAlgebra {
 public:
  using value_type = ExtNN;
  static constexpr bool exhaustive = false;

  RatAlgebra(std::string name, std::vector<RatOp> ops);

  const std::string& name() const noexcept { return name_; }
  const Signature& signature() const noexcept { return signature_; }
  const std::vector<RatOp>& ops() const noexcept { return ops_; }
  const RatOp& op(std::size_t i) const { return ops_.at(i); }

  ExtNN apply(std::size_t op, std::span<const ExtNN> params, std::span<const ExtNN> args) const;
  bool leq(const ExtNN& a, const ExtNN& b) const { return a <= b; }
  bool equal(const ExtNN& a, const ExtNN& b) const { return a == b; }
  std::string format(const ExtNN& a) const { return a.str(); }
  const std::vector<ExtNN>& grid() const { return scalarGrid(); }
  ExtNN sample(Sampler& s) const { return s.extnn(); }

  RatAlgebra retagged(const std::vector<Tag>& tags) const;
  RatAlgebra renamed(std::string name) const;

 private:
  std::string name_;
  std::vector<RatOp> ops_;
  Signature signature_;
};

/// Monotonicity of every operation in every argument, on grid and samples.
LawOutcome checkMonotone(const RatAlgebra& a, const LawConfig& cfg = {});

/// A monotone map X -> Q+.
class Predicate {
 public:
  Predicate() = default;
  /// Throws ArityMismatch on a size mismatch and NonMonotone.
  Predicate(PosetPtr x, std::vector<ExtNN> values);

  static Predicate constant(const PosetPtr& x, const ExtNN& v);
  /// The characteristic function of an up-set: 1 on U, 0 elsewhere.
  static Predicate characteristic(const PosetPtr& x, const ElemBits& upSet);

  const PosetPtr& poset() const noexcept { return x_; }
  const std::vector<ExtNN>& values() const noexcept { return values_; }
  const ExtNN& operator()(Elem e) const { return values_.at(e); }
  std::string str() const;

  friend bool operator==(const Predicate& a, const Predicate& b) {
    return a.x_ == b.x_ && a.values_ == b.values_;
  }

 private:
  PosetPtr x_;
  std::vector<ExtNN> values_;
};

Predicate predAdd(const Predicate& f, const Predicate& g);
Predicate predScale(const ExtNN& r, const Predicate& f);
Predicate predMax(const Predicate& f, const Predicate& g);
Predicate predMin(const Predicate& f, const Predicate& g);
bool predLeq(const Predicate& f, const Predicate& g);

/// Characteristic functions of every up-set, in up-set order.
std::vector<Predicate> characteristicPredicates(const PosetPtr& x);
/// A random monotone predicate: the monotone hull f(x) = max_{y <= x} raw(y).
Predicate samplePredicate(const PosetPtr& x, Sampler& s);

/// A rational algebra lifted pointwise to the monotone predicates on X.
class PredicateAlgebra {
 public:
  using value_type = Predicate;
  static constexpr bool exhaustive = false;

  PredicateAlgebra(RatAlgebra base, PosetPtr x);

  const RatAlgebra& base() const noexcept { return base_; }
  const PosetPtr& poset() const noexcept { return x_; }
  const Signature& signature() const noexcept { return base_.signature(); }

  Predicate apply(std::size_t op, std::span<const ExtNN> params,
                  std::span<const Predicate> args) const;
  bool leq(const Predicate& a, const Predicate& b) const { return predLeq(a, b); }
  bool equal(const Predicate& a, const Predicate& b) const { return a == b; }
  std::string format(const Predicate& a) const { return a.str(); }
  /// Every characteristic function, then the constant infinity.
  const std::vector<Predicate>& grid() const noexcept { return grid_; }
  Predicate sample(Sampler& s) const { return samplePredicate(x_, s); }

 private:
  RatAlgebra base_;
  PosetPtr x_;
  std::vector<Predicate> grid_;
};

/// The endomorphisms x |-> r x of Q+, acting on the operations of a rational
/// algebra pointwise: (r1 + r2) x = r1 x + r2 x and so on. Multiplication has
/// no pointwise counterpart among scalings and constants other than 0 are not
/// scalings, so both throw SignatureMismatch.
class ScalarEndoSpace {
 public:
  using endo_type = ExtNN;

  explicit ScalarEndoSpace(const RatAlgebra& a) : a_(&a) {}

  ExtNN identity() const { return ExtNN(1); }
  ExtNN compose(const ExtNN& a, const ExtNN& b) const { return a * b; }
  ExtNN applyOp(std::size_t op, std::span<const ExtNN> params, std::span<const ExtNN> args) const;
  std::string format(const ExtNN& e) const { return e.str(); }
  SlotSource<ExtNN> slots() const { return scalarSlots(); }

 private:
  const RatAlgebra* a_;
};

}  // namespace powdom
