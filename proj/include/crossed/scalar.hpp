#pragma once

// Exact scalars: arbitrary-precision rationals (with an inline 64-bit fast
// path) and prime-field elements GF(p).

#include <gmpxx.h>

#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "crossed/errors.hpp"

namespace crossed {

/// Which field a structure lives over. GF(p) requires p prime, p < 2^32.
struct FieldSpec {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 32)) throw ParseError("GF(p) needs 2 <= p < 2^32, got " + std::to_string(p));
    for (std::uint64_t q = 2; q * q <= p; ++q)
      if (p % q == 0) throw ParseError("GF(p) needs p prime, got " + std::to_string(p));
    return {Kind::Prime, p};
  }
  /// Parses "Q" or "GF<p>" (as used by the --field flag).
  static FieldSpec parse(std::string_view s) {
    if (s == "Q") return rationals();
    if (s.size() > 2 && s.substr(0, 2) == "GF") {
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), p);
      if (ec == std::errc() && ptr == s.data() + s.size()) return prime(p);
    }
    throw ParseError("unknown field '" + std::string(s) + "' (expected Q or GF<p>)");
  }

  bool is_rational() const { return kind == Kind::Rational; }
  std::string name() const { return is_rational() ? "Q" : "GF" + std::to_string(p); }
  bool operator==(const FieldSpec&) const = default;
};

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool fits_i64(i128 v) {
  return v >= static_cast<i128>(INT64_MIN) && v <= static_cast<i128>(INT64_MAX);
}

inline mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(m));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace detail

/// Exact rational number. Values whose normalized numerator and denominator
/// fit in int64 are stored inline; everything else spills to a shared mpq.
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral I>
  Rational(I n) : num_(static_cast<std::int64_t>(n)) {}  // NOLINT(implicit)
  template <std::unsigned_integral U>
  Rational(U n) {  // NOLINT(implicit)
    if (static_cast<std::uint64_t>(n) <= static_cast<std::uint64_t>(INT64_MAX))
      num_ = static_cast<std::int64_t>(n);
    else
      *this = from_i128(static_cast<detail::i128>(n), 1);
  }
  Rational(std::int64_t n, std::int64_t d) { *this = from_i128(n, d); }

  static Rational from_mpq(const mpq_class& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      Rational r;
      r.num_ = q.get_num().get_si();
      r.den_ = q.get_den().get_si();
      return r;
    }
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(q);
    return r;
  }

  /// Accepts "p", "-p", "p/q"; the result is normalized.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto valid_int = [](std::string_view t, bool allow_sign) {
      if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw ParseError("malformed rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return from_mpq(q);
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  }

  std::string to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (big_ || num_ == INT64_MIN) return from_mpq(-to_mpq());
    Rational r = *this;
    r.num_ = -num_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      using detail::i128;
      if (a.den_ == 1 && b.den_ == 1) return from_integer(static_cast<i128>(a.num_) + b.num_);
      if (a.den_ == b.den_)
        return from_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
      return from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                       static_cast<i128>(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      using detail::i128;
      if (a.num_ == 0 || b.num_ == 0) return {};
      if (a.den_ == 1 && b.den_ == 1) return from_integer(static_cast<i128>(a.num_) * b.num_);
      return from_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    if (a.is_zero() || b.is_zero()) return {};
    return from_mpq(a.to_mpq() * b.to_mpq());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("rational division by zero");
    if (!a.big_ && !b.big_) {
      using detail::i128;
      return from_i128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
    }
    return from_mpq(a.to_mpq() / b.to_mpq());
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const { return Rational(1) / *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a value that fits is never stored big
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static Rational from_integer(detail::i128 n) {
    if (detail::fits_i64(n)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      return r;
    }
    return from_mpq(mpq_class(detail::mpz_from_i128(n)));
  }

  static Rational from_i128(detail::i128 n, detail::i128 d) {
    using namespace detail;
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return {};
    u128 g = gcd_u128(n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (fits_i64(n) && fits_i64(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    return from_mpq(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

/// Element of GF(p). A modulus of zero marks an integer literal (as produced
/// by `ModP(0)`, `ModP(1)`, `ModP(-1)` in generic code) that adopts the
/// modulus of whatever it is combined with.
class ModP {
 public:
  ModP() = default;
  template <std::integral I>
  ModP(I n) : lit_(static_cast<std::int64_t>(n)) {}  // NOLINT(implicit)
  ModP(std::int64_t n, std::uint64_t p) : p_(p) { v_ = reduce(n, p); }

  static ModP parse(std::string_view text, std::uint64_t p) {
    Rational q = Rational::parse(text);
    mpq_class m = q.to_mpq();
    mpz_class num = m.get_num() % static_cast<unsigned long>(p);
    mpz_class den = m.get_den() % static_cast<unsigned long>(p);
    if (num < 0) num += static_cast<unsigned long>(p);
    if (den == 0) throw ParseError("'" + std::string(text) + "' has denominator divisible by " + std::to_string(p));
    ModP a(static_cast<std::int64_t>(num.get_ui()), p);
    ModP b(static_cast<std::int64_t>(den.get_ui()), p);
    return a / b;
  }

  std::uint64_t modulus() const { return p_; }
  std::uint64_t value() const {
    if (p_ == 0) throw ParseError("GF(p) literal without modulus");
    return v_;
  }
  ModP reduced(std::uint64_t p) const { return p_ == 0 ? ModP(lit_, p) : *this; }

  bool is_zero() const { return p_ == 0 ? lit_ == 0 : v_ == 0; }
  bool is_one() const { return p_ == 0 ? lit_ == 1 : v_ == 1; }

  std::string to_string() const { return p_ == 0 ? std::to_string(lit_) : std::to_string(v_); }

  ModP operator-() const {
    if (p_ == 0) return ModP(-lit_);
    return make(v_ == 0 ? 0 : p_ - v_, p_);
  }
  friend ModP operator+(const ModP& a, const ModP& b) {
    std::uint64_t p = common(a, b);
    if (p == 0) return ModP(a.lit_ + b.lit_);
    std::uint64_t s = a.at(p) + b.at(p);
    return make(s >= p ? s - p : s, p);
  }
  friend ModP operator-(const ModP& a, const ModP& b) { return a + (-b); }
  friend ModP operator*(const ModP& a, const ModP& b) {
    std::uint64_t p = common(a, b);
    if (p == 0) return ModP(a.lit_ * b.lit_);
    return make(a.at(p) * b.at(p) % p, p);
  }
  friend ModP operator/(const ModP& a, const ModP& b) {
    std::uint64_t p = common(a, b);
    if (b.is_zero()) throw DivisionByZero("GF(p) division by zero");
    if (p == 0) {
      if (b.lit_ == 1 || b.lit_ == -1) return ModP(a.lit_ * b.lit_);
      throw DivisionByZero("GF(p) literal division without modulus");
    }
    return a * b.inverse_mod(p);
  }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }

  ModP inverse() const { return ModP(1) / *this; }

  friend bool operator==(const ModP& a, const ModP& b) {
    std::uint64_t p = common(a, b);
    if (p == 0) return a.lit_ == b.lit_;
    return a.at(p) == b.at(p);
  }

  friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.to_string(); }

 private:
  static std::uint64_t reduce(std::int64_t n, std::uint64_t p) {
    std::int64_t r = n % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  static ModP make(std::uint64_t v, std::uint64_t p) {
    ModP r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static std::uint64_t common(const ModP& a, const ModP& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) throw DimensionMismatch("mixing GF(p) elements of different characteristic");
    return a.p_ != 0 ? a.p_ : b.p_;
  }
  std::uint64_t at(std::uint64_t p) const { return p_ == 0 ? reduce(lit_, p) : v_; }
  ModP inverse_mod(std::uint64_t p) const {
    std::uint64_t base = at(p), e = p - 2, r = 1;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return make(r, p);
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
  std::int64_t lit_ = 0;
};

template <class T>
concept FieldScalar = requires(T a, T b) {
  { a + b } -> std::same_as<T>;
  { a - b } -> std::same_as<T>;
  { a * b } -> std::same_as<T>;
  { a / b } -> std::same_as<T>;
  { -a } -> std::same_as<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  T(0);
  T(1);
};

/// Field-dependent construction and serialization of scalars.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool characteristic_zero = true;
  static Rational make(const FieldSpec&, std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }
  static Rational parse(std::string_view s, const FieldSpec&) { return Rational::parse(s); }
  static std::string format(const Rational& x, const FieldSpec&) { return x.to_string(); }
};

template <>
struct ScalarTraits<ModP> {
  static constexpr bool characteristic_zero = false;
  static ModP make(const FieldSpec& f, std::int64_t num, std::int64_t den = 1) {
    return ModP(num, f.p) / ModP(den, f.p);
  }
  static ModP parse(std::string_view s, const FieldSpec& f) { return ModP::parse(s, f.p); }
  static std::string format(const ModP& x, const FieldSpec& f) { return x.reduced(f.p).to_string(); }
};

static_assert(FieldScalar<Rational>);
static_assert(FieldScalar<ModP>);

}  // namespace crossed
