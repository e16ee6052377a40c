#pragma once

// Extended nonnegative rationals: Q+ together with a top element +inf.
// Arithmetic follows the measure-theoretic conventions 0 * inf = 0 and
// r * inf = inf for r > 0.

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powdom {

class ExtNN {
 public:
  ExtNN() = default;
  explicit ExtNN(std::int64_t n);
  /// Throws InvalidValue for negative input. The value is canonicalized.
  explicit ExtNN(mpq_class q);

  static ExtNN fraction(std::int64_t num, std::int64_t den);
  static ExtNN infinity();
  /// Literal syntax: `p/q`, `n` or `inf`.
  static ExtNN parse(std::string_view text);

  bool isInfinite() const noexcept { return kind_ == Kind::Infinite; }
  bool isZero() const noexcept { return kind_ == Kind::Small && num_ == 0; }
  bool isInteger() const;
  /// The finite value. Throws InvalidValue on infinity.
  mpq_class rational() const;

  std::string str() const;

  friend bool operator==(const ExtNN& a, const ExtNN& b);
  friend std::strong_ordering operator<=>(const ExtNN& a, const ExtNN& b);
  friend ExtNN ennAdd(const ExtNN& a, const ExtNN& b);
  friend ExtNN ennMul(const ExtNN& a, const ExtNN& b);

 private:
  // Values whose reduced numerator and denominator fit in 64 bits are Small;
  // only those that do not fall back to GMP, so each value has exactly one
  // representation.
  enum class Kind : std::uint8_t { Small, Big, Infinite };

  __extension__ typedef unsigned __int128 Wide;
  static ExtNN fromReduced(Wide num, Wide den);
  void setFrom(mpq_class q);

  Kind kind_ = Kind::Small;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

ExtNN ennAdd(const ExtNN& a, const ExtNN& b);
ExtNN ennMul(const ExtNN& a, const ExtNN& b);
ExtNN ennMax(const ExtNN& a, const ExtNN& b);
ExtNN ennMin(const ExtNN& a, const ExtNN& b);

inline ExtNN operator+(const ExtNN& a, const ExtNN& b) { return ennAdd(a, b); }
inline ExtNN operator*(const ExtNN& a, const ExtNN& b) { return ennMul(a, b); }

std::ostream& operator<<(std::ostream& os, const ExtNN& x);

}  // namespace powdom
