#include "powdom/extnum.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <utility>

#include "powdom/error.hpp"

namespace powdom {

namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

__extension__ typedef unsigned __int128 u128;

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

mpz_class fromU128(u128 v) {
  mpz_class z(static_cast<unsigned long>(v >> 64));
  z <<= 64;
  z += static_cast<unsigned long>(v & ~std::uint64_t{0});
  return z;
}

constexpr u128 kSmallMax = static_cast<u128>(std::numeric_limits<std::int64_t>::max());

}  // namespace

ExtNN ExtNN::fromReduced(u128 num, u128 den) {
  const u128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  ExtNN x;
  if (num <= kSmallMax && den <= kSmallMax) {
    x.num_ = static_cast<std::int64_t>(num);
    x.den_ = static_cast<std::int64_t>(den);
    return x;
  }
  x.kind_ = Kind::Big;
  x.big_ = std::make_shared<const mpq_class>(fromU128(num), fromU128(den));
  return x;
}

void ExtNN::setFrom(mpq_class q) {
  q.canonicalize();
  if (sgn(q) < 0) fail(ErrorKind::InvalidValue, "negative value " + q.get_str());
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    kind_ = Kind::Small;
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    kind_ = Kind::Big;
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

ExtNN::ExtNN(std::int64_t n) : num_(n) {
  if (n < 0) fail(ErrorKind::InvalidValue, "negative value " + std::to_string(n));
}

ExtNN::ExtNN(mpq_class q) { setFrom(std::move(q)); }

ExtNN ExtNN::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorKind::InvalidValue, "zero denominator");
  if (num < 0 || den < 0) return ExtNN(mpq_class(static_cast<long>(num), static_cast<long>(den)));
  return fromReduced(static_cast<u128>(num), static_cast<u128>(den));
}

ExtNN ExtNN::infinity() {
  ExtNN x;
  x.kind_ = Kind::Infinite;
  return x;
}

ExtNN ExtNN::parse(std::string_view text) {
  if (text == "inf") return infinity();
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!allDigits(num) || !allDigits(den)) {
    fail(ErrorKind::InvalidValue, "malformed extended rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) fail(ErrorKind::InvalidValue, "zero denominator in '" + std::string(text) + "'");
  return ExtNN(mpq_class(n, d));
}

bool ExtNN::isInteger() const {
  switch (kind_) {
    case Kind::Small: return den_ == 1;
    case Kind::Big: return big_->get_den() == 1;
    case Kind::Infinite: return false;
  }
  return false;
}

mpq_class ExtNN::rational() const {
  switch (kind_) {
    case Kind::Small: return mpq_class(static_cast<long>(num_), static_cast<long>(den_));
    case Kind::Big: return *big_;
    case Kind::Infinite: break;
  }
  fail(ErrorKind::InvalidValue, "infinity has no rational value");
}

std::string ExtNN::str() const {
  switch (kind_) {
    case Kind::Small:
      return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    case Kind::Big: return big_->get_str();
    case Kind::Infinite: break;
  }
  return "inf";
}

bool operator==(const ExtNN& a, const ExtNN& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case ExtNN::Kind::Small: return a.num_ == b.num_ && a.den_ == b.den_;
    case ExtNN::Kind::Big: return *a.big_ == *b.big_;
    case ExtNN::Kind::Infinite: return true;
  }
  return false;
}

std::strong_ordering operator<=>(const ExtNN& a, const ExtNN& b) {
  if (a.isInfinite() || b.isInfinite()) {
    return static_cast<int>(a.isInfinite()) <=> static_cast<int>(b.isInfinite());
  }
  if (a.kind_ == ExtNN::Kind::Small && b.kind_ == ExtNN::Kind::Small) {
    return static_cast<u128>(a.num_) * static_cast<u128>(b.den_) <=>
           static_cast<u128>(b.num_) * static_cast<u128>(a.den_);
  }
  return cmp(a.rational(), b.rational()) <=> 0;
}

ExtNN ennAdd(const ExtNN& a, const ExtNN& b) {
  if (a.isInfinite() || b.isInfinite()) return ExtNN::infinity();
  if (a.kind_ == ExtNN::Kind::Small && b.kind_ == ExtNN::Kind::Small) {
    if (a.den_ == b.den_) {
      return ExtNN::fromReduced(static_cast<u128>(a.num_) + static_cast<u128>(b.num_),
                                static_cast<u128>(a.den_));
    }
    return ExtNN::fromReduced(
        static_cast<u128>(a.num_) * static_cast<u128>(b.den_) +
            static_cast<u128>(b.num_) * static_cast<u128>(a.den_),
        static_cast<u128>(a.den_) * static_cast<u128>(b.den_));
  }
  return ExtNN(mpq_class(a.rational() + b.rational()));
}

ExtNN ennMul(const ExtNN& a, const ExtNN& b) {
  if (a.isZero() || b.isZero()) return ExtNN{};
  if (a.isInfinite() || b.isInfinite()) return ExtNN::infinity();
  if (a.kind_ == ExtNN::Kind::Small && b.kind_ == ExtNN::Kind::Small) {
    return ExtNN::fromReduced(static_cast<u128>(a.num_) * static_cast<u128>(b.num_),
                              static_cast<u128>(a.den_) * static_cast<u128>(b.den_));
  }
  return ExtNN(mpq_class(a.rational() * b.rational()));
}

ExtNN ennMax(const ExtNN& a, const ExtNN& b) { return a < b ? b : a; }

ExtNN ennMin(const ExtNN& a, const ExtNN& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExtNN& x) { return os << x.str(); }

}  // namespace powdom
