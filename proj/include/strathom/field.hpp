#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "strathom/errors.hpp"

namespace strathom {

/// Exact rational number. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static constexpr bool is_prime_field = false;
  static std::uint64_t characteristic() { return 0; }
  static Rational from_int(long n) { return Rational(n); }

  /// Parses "3", "-7", "1/2".
  static Rational parse(std::string_view s) {
    std::string str(s);
    mpq_class q;
    if (q.set_str(str, 10) != 0) throw ParseError("not a rational number: '" + str + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + str + "'");
    q.canonicalize();
    return Rational(q);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  std::string to_string() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

  Rational inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

 private:
  mpq_class v_{0};
};

/// Residue modulo a prime. The modulus of newly created constants is the
/// active one (see ScopedPrimeField); every value remembers its own modulus
/// so that mixing two prime fields is caught.
class Fp {
 public:
  Fp() : v_(0), p_(active()) {}
  Fp(long n) : p_(active()) { set(n); }  // NOLINT(google-explicit-constructor)

  static constexpr bool is_prime_field = true;
  static std::uint64_t characteristic() { return active(); }
  static Fp from_int(long n) { return Fp(n); }

  static Fp parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Fp(parse_long(s));
    Fp num(parse_long(s.substr(0, slash)));
    Fp den(parse_long(s.substr(slash + 1)));
    return num / den;
  }

  static std::uint64_t active() { return modulus_; }
  static void set_active(std::uint64_t p) {
    if (p < 2 || !is_prime(p)) throw DomainError("prime field modulus " + std::to_string(p) + " is not prime");
    if (p > (std::uint64_t{1} << 31)) throw DomainError("prime field modulus too large (max 2^31)");
    modulus_ = p;
  }

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  static void restore_active(std::uint64_t p) { modulus_ = p; }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::string to_string() const { return std::to_string(v_); }

  Fp inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    // Fermat: v^(p-2)
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return make(result, p_);
  }

  Fp& operator+=(const Fp& o) { check(o); v_ = (v_ + o.v_) % p_; return *this; }
  Fp& operator-=(const Fp& o) { check(o); v_ = (v_ + p_ - o.v_) % p_; return *this; }
  Fp& operator*=(const Fp& o) { check(o); v_ = v_ * o.v_ % p_; return *this; }
  Fp& operator/=(const Fp& o) { check(o); return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return make(v_ == 0 ? 0 : p_ - v_, p_); }
  friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  static Fp make(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  void set(long n) {
    if (p_ == 0) throw DomainError("no prime field is active");
    long m = n % static_cast<long>(p_);
    if (m < 0) m += static_cast<long>(p_);
    v_ = static_cast<std::uint64_t>(m);
  }
  void check(const Fp& o) const {
    if (o.p_ != p_) throw FieldMismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
  }
  static long parse_long(std::string_view s) {
    try {
      size_t used = 0;
      long n = std::stol(std::string(s), &used);
      if (used != s.size()) throw ParseError("not an integer: '" + std::string(s) + "'");
      return n;
    } catch (const std::logic_error&) {
      throw ParseError("not an integer: '" + std::string(s) + "'");
    }
  }

  std::uint64_t v_;
  std::uint64_t p_;
  static inline thread_local std::uint64_t modulus_ = 0;
};

/// Activates F_p for the lifetime of the guard.
class ScopedPrimeField {
 public:
  explicit ScopedPrimeField(std::uint64_t p) : saved_(Fp::active()) { Fp::set_active(p); }
  ~ScopedPrimeField() { Fp::restore_active(saved_); }
  ScopedPrimeField(const ScopedPrimeField&) = delete;
  ScopedPrimeField& operator=(const ScopedPrimeField&) = delete;

 private:
  std::uint64_t saved_;
};

template <class K>
concept ExactField = requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a.inverse() } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { K::from_int(1L) } -> std::convertible_to<K>;
  { K::characteristic() } -> std::convertible_to<std::uint64_t>;
};

}  // namespace strathom
