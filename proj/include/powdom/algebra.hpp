#pragma once

// Signatures with relaxation tags and finite d-algebras. On a finite carrier
// every subset is a sub-dcpo, so d-subalgebras are plain subalgebras and the
// d-closure of a generating set is its closure under the operations.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "powdom/extnum.hpp"
#include "powdom/funcspace.hpp"
#include "powdom/poset.hpp"

namespace powdom {

/// Which side of the relaxed morphism condition an operation sits on.
/// LE: h(w(x)) <= w(h(x)); GE: the reverse; EQ: both (a homomorphism
/// condition), i.e. the operation belongs to both families.
enum class Tag { LE, GE, EQ };

std::string_view to_string(Tag tag) noexcept;
Tag parseTag(std::string_view text);

struct OpSpec {
  std::string symbol;
  unsigned arity = 0;
  Tag tag = Tag::EQ;
  /// A unary family indexed by a scalar in Q+ (the maps x |-> r x).
  bool parametric = false;

  friend bool operator==(const OpSpec&, const OpSpec&) = default;
};

class Signature {
 public:
  Signature() = default;
  /// Throws InvalidValue on repeated symbols or a non-unary parametric op.
  explicit Signature(std::vector<OpSpec> ops);

  std::size_t size() const noexcept { return ops_.size(); }
  const OpSpec& op(std::size_t i) const { return ops_.at(i); }
  const std::vector<OpSpec>& ops() const noexcept { return ops_; }
  std::optional<std::size_t> find(std::string_view symbol) const;
  /// Throws UnknownOp.
  std::size_t index(std::string_view symbol) const;

  Signature withTags(const std::vector<Tag>& tags) const;
  std::vector<Tag> tags() const;
  /// Same symbols, arities and parametricity, tags ignored.
  bool sameShape(const Signature& other) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<OpSpec> ops_;
};

/// A finite carrier poset with one monotone table per operation. Table
/// entries are indexed by the argument tuple read as a base-|carrier| number
/// with the first argument most significant.
class FinAlgebra {
 public:
  using value_type = Elem;
  static constexpr bool exhaustive = true;

  /// Throws ArityMismatch on table size errors and NonMonotone when a table
  /// is not monotone in some argument.
  FinAlgebra(std::string name, PosetPtr carrier, Signature signature,
             std::vector<std::vector<Elem>> tables);

  const std::string& name() const noexcept { return name_; }
  const PosetPtr& carrier() const noexcept { return carrier_; }
  const Signature& signature() const noexcept { return signature_; }
  const std::vector<Elem>& table(std::size_t op) const { return tables_.at(op); }

  Elem apply(std::size_t op, std::span<const Elem> args) const;
  Elem apply(std::size_t op, std::span<const ExtNN>, std::span<const Elem> args) const {
    return apply(op, args);
  }

  bool leq(Elem a, Elem b) const { return carrier_->leq(a, b); }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::string format(Elem a) const { return carrier_->label(a); }
  std::size_t size() const noexcept { return carrier_->size(); }
  Elem element(std::size_t i) const { return static_cast<Elem>(i); }

  FinAlgebra retagged(const std::vector<Tag>& tags) const;
  FinAlgebra renamed(std::string name) const;

 private:
  std::string name_;
  PosetPtr carrier_;
  Signature signature_;
  std::vector<std::vector<Elem>> tables_;
};

std::size_t tupleIndex(std::span<const Elem> args, std::size_t base);

/// An algebra of functions [X -> R] with pointwise operations.
struct LiftedAlgebra {
  ExpPtr space;
  FinAlgebra algebra;
};

/// Pointwise lifting to [X -> R]. Throws SizeGuardExceeded when the space or
/// a lifted table would exceed the guard.
LiftedAlgebra liftPointwise(const FinAlgebra& a, const PosetPtr& x,
                            std::uint64_t sizeGuard = kDefaultSizeGuard);

/// Pointwise lifting over an already enumerated space [X -> R].
FinAlgebra liftOver(const FinAlgebra& a, const ExpPtr& space,
                    std::uint64_t sizeGuard = kDefaultSizeGuard);

/// Least subset containing the generators and closed under every operation,
/// as sorted element indices. Throws UnknownElement.
std::vector<Elem> generatedSubalgebra(const FinAlgebra& a, std::span<const Elem> generators);

bool isHomomorphism(const MonoMap& phi, const FinAlgebra& b, const FinAlgebra& r);
bool isRelaxedMorphism(const MonoMap& phi, const FinAlgebra& b, const FinAlgebra& r);

/// An endomorphism of R: a monotone self-map of a finite carrier, or the
/// scaling x |-> r x of Q+.
struct Endo {
  std::variant<MonoMap, ExtNN> action;
  bool isHom = true;
};

/// All monotone self-maps of the carrier preserving every operation.
std::vector<Endo> endomorphisms(const FinAlgebra& r, std::uint64_t sizeGuard = kDefaultSizeGuard);

/// Terms over a signature: variables or applications. Applications of a
/// parametric symbol carry their scalar.
class Term {
 public:
  static Term var(std::size_t index);
  static Term app(std::string symbol, std::vector<Term> args,
                  std::optional<ExtNN> param = std::nullopt);

  bool isVar() const noexcept { return std::holds_alternative<std::size_t>(node_); }
  std::size_t varIndex() const { return std::get<std::size_t>(node_); }
  const std::string& symbol() const { return std::get<App>(node_).symbol; }
  const std::vector<Term>& args() const { return std::get<App>(node_).args; }
  const std::optional<ExtNN>& param() const { return std::get<App>(node_).param; }

  std::string str() const;

 private:
  struct App {
    std::string symbol;
    std::vector<Term> args;
    std::optional<ExtNN> param;
  };
  std::variant<std::size_t, App> node_;
};

}  // namespace powdom
