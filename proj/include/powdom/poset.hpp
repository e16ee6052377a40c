#pragma once

// Finite partial orders. A finite poset is a dcpo (every directed subset has
// a largest element), so monotone maps are exactly the Scott-continuous ones,
// up-sets are the Scott-open sets and down-sets the Scott-closed sets.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace powdom {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultSizeGuard = 5'000'000;

/// Throws SizeGuardExceeded when `count` passes `guard`.
void checkSizeGuard(std::uint64_t count, std::uint64_t guard, std::string_view what);

/// Fixed-width bitset over the elements of a poset. Ordered as the binary
/// number whose bit i is membership of element i.
class ElemBits {
 public:
  ElemBits() = default;
  explicit ElemBits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true);
  std::size_t count() const;
  bool none() const;
  bool isSubsetOf(const ElemBits& other) const;
  bool intersects(const ElemBits& other) const;
  ElemBits complement() const;
  std::vector<Elem> members() const;

  ElemBits& operator|=(const ElemBits& other);
  ElemBits& operator&=(const ElemBits& other);
  friend ElemBits operator|(ElemBits a, const ElemBits& b) { return a |= b; }
  friend ElemBits operator&(ElemBits a, const ElemBits& b) { return a &= b; }

  friend bool operator==(const ElemBits& a, const ElemBits& b) = default;
  friend std::strong_ordering operator<=>(const ElemBits& a, const ElemBits& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

class FinPoset;
using PosetPtr = std::shared_ptr<const FinPoset>;

class FinPoset {
 public:
  using CoverPair = std::pair<std::string, std::string>;

  /// leq is the reflexive-transitive closure of the cover pairs.
  /// Throws DuplicateLabel, UnknownLabel or CycleDetected.
  static PosetPtr fromCover(std::string name, std::vector<std::string> labels,
                            const std::vector<CoverPair>& covers);

  /// `leqRows[i].test(j)` iff i <= j. Verifies the partial order axioms.
  static PosetPtr fromOrder(std::string name, std::vector<std::string> labels,
                            std::vector<ElemBits> leqRows);
  /// As fromOrder, for relations that are partial orders by construction
  /// (pointwise and inclusion orders). Only label uniqueness is checked.
  static PosetPtr fromTrustedOrder(std::string name, std::vector<std::string> labels,
                                   std::vector<ElemBits> leqRows);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Elem e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Elem> find(std::string_view label) const;
  /// Throws UnknownLabel.
  Elem index(std::string_view label) const;

  bool leq(Elem a, Elem b) const { return up_[a].test(b); }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  /// {b : a <= b}
  const ElemBits& above(Elem a) const { return up_[a]; }
  /// {b : b <= a}
  const ElemBits& below(Elem a) const { return down_[a]; }

  /// The transitive reduction, sorted by (lower, upper) index. Computed once.
  const std::vector<std::pair<Elem, Elem>>& covers() const;
  /// A linear extension, choosing the smallest available index first.
  const std::vector<Elem>& linearExtension() const noexcept { return linear_; }
  bool indexOrderIsLinear() const noexcept { return indexOrderIsLinear_; }

  std::optional<Elem> bottom() const;
  std::optional<Elem> top() const;

 private:
  FinPoset(std::string name, std::vector<std::string> labels, std::vector<ElemBits> up);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<ElemBits> up_;
  std::vector<ElemBits> down_;
  std::vector<Elem> linear_;
  bool indexOrderIsLinear_ = true;
  mutable std::once_flag coversOnce_;
  mutable std::vector<std::pair<Elem, Elem>> covers_;
};

/// Checks reflexivity, antisymmetry and transitivity of the stored relation.
bool isPartialOrder(const FinPoset& x);

enum class SetKind { UpClosed, DownClosed, Unconstrained };

struct ElemSet {
  ElemBits members;
  SetKind kind = SetKind::Unconstrained;

  friend bool operator==(const ElemSet& a, const ElemSet& b) = default;
};

PosetPtr posetFromCover(std::string name, std::vector<std::string> labels,
                        const std::vector<FinPoset::CoverPair>& covers);

bool isUpClosed(const FinPoset& x, const ElemBits& s);
bool isDownClosed(const FinPoset& x, const ElemBits& s);
ElemBits upClosure(const FinPoset& x, const ElemBits& s);
ElemBits downClosure(const FinPoset& x, const ElemBits& s);

/// Every up-closed subset (= Scott-open set), in increasing bitset order.
std::vector<ElemSet> allUpSets(const FinPoset& x, std::uint64_t sizeGuard = kDefaultSizeGuard);
/// Every down-closed subset (= Scott-closed set), in increasing bitset order.
std::vector<ElemSet> allDownSets(const FinPoset& x, std::uint64_t sizeGuard = kDefaultSizeGuard);

/// Cartesian product with the componentwise order; element (i, j) has index
/// i * |Y| + j and label "(x,y)".
PosetPtr productPoset(const PosetPtr& x, const PosetPtr& y);

/// A poset with the given labels ordered by inclusion of the given sets.
PosetPtr inclusionPoset(std::string name, std::vector<std::string> labels,
                        const std::vector<ElemBits>& sets, bool reverse = false);

/// Label for a set of elements: "{a,b}".
std::string formatSet(const FinPoset& x, const ElemBits& s);

/// Graphviz rendering of the Hasse diagram, nodes in element order.
std::string hasseDot(const FinPoset& x);

/// True if there is an order isomorphism f with f(i) = mapping[i].
bool isOrderIsomorphism(const FinPoset& a, const FinPoset& b, const std::vector<Elem>& mapping);

}  // namespace powdom
