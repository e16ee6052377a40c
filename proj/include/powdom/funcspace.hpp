#pragma once

// Exponentials [X -> Y] of finite posets: all monotone maps under the
// pointwise order.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "powdom/poset.hpp"

namespace powdom {

/// A monotone total map between two posets. Source and target are compared
/// by identity, never by isomorphism.
class MonoMap {
 public:
  /// Throws NonMonotone if the table is not monotone, InvalidValue on a
  /// malformed table.
  MonoMap(PosetPtr source, PosetPtr target, std::vector<Elem> table);

  static MonoMap identity(const PosetPtr& x);
  static MonoMap constant(const PosetPtr& source, const PosetPtr& target, Elem value);

  const PosetPtr& source() const noexcept { return source_; }
  const PosetPtr& target() const noexcept { return target_; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  Elem operator()(Elem x) const { return table_[x]; }

  /// Pointwise comparison; throws TypeMismatch across different posets.
  bool leq(const MonoMap& other) const;

  friend bool operator==(const MonoMap& a, const MonoMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.table_ == b.table_;
  }

 private:
  PosetPtr source_;
  PosetPtr target_;
  std::vector<Elem> table_;
};

bool isMonotone(const FinPoset& source, const FinPoset& target, std::span<const Elem> table);

/// v after u. Throws TypeMismatch unless u's target is v's source.
MonoMap compose(const MonoMap& u, const MonoMap& v);
/// The contravariant action R^u(g) = g after u.
MonoMap precompose(const MonoMap& u, const MonoMap& g);

/// Label of a map in an exponential: target labels in source order, "<a,b>".
std::string mapLabel(const FinPoset& target, std::span<const Elem> table);

/// The exponential [X -> Y]: every monotone map, sorted lexicographically by
/// table, together with the pointwise order as a FinPoset whose element i is
/// map i.
class ExpPoset {
 public:
  const PosetPtr& source() const noexcept { return source_; }
  const PosetPtr& target() const noexcept { return target_; }
  /// The maps as a poset (element i = map i).
  const PosetPtr& poset() const noexcept { return poset_; }

  std::size_t size() const noexcept { return count_; }
  std::span<const Elem> table(Elem i) const {
    return {flat_.data() + static_cast<std::size_t>(i) * width_, width_};
  }
  MonoMap map(Elem i) const;
  /// Index of the map with this table, if it is monotone.
  std::optional<Elem> find(std::span<const Elem> table) const;
  /// Throws NonMonotoneResult when the table is not in the exponential.
  Elem indexOf(std::span<const Elem> table) const;
  Elem indexOf(const MonoMap& m) const;

 private:
  friend std::shared_ptr<const ExpPoset> enumerateMonotone(const PosetPtr&, const PosetPtr&,
                                                           std::uint64_t);
  ExpPoset() = default;

  PosetPtr source_;
  PosetPtr target_;
  PosetPtr poset_;
  std::size_t width_ = 0;
  std::size_t count_ = 0;
  std::vector<Elem> flat_;
};

using ExpPtr = std::shared_ptr<const ExpPoset>;

/// Backtracking along a linear extension of X, pruning on already assigned
/// predecessors. Throws SizeGuardExceeded as soon as more than `sizeGuard`
/// maps have been produced.
ExpPtr enumerateMonotone(const PosetPtr& x, const PosetPtr& y,
                         std::uint64_t sizeGuard = kDefaultSizeGuard);

}  // namespace powdom
