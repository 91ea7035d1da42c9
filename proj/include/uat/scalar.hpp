#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "uat/errors.hpp"

namespace uat {

using BigInt = mpz_class;

std::size_t hash_bigint(const BigInt& z);

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator.  Division by zero throws std::domain_error instead
// of aborting the process.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double approx() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }
  std::size_t hash() const;

  Rational operator-() const;

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.v_ + y.v_); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.v_ - y.v_); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.v_ * y.v_); }
  friend Rational operator/(const Rational& x, const Rational& y);

  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
  Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
  Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// Element of Q, Q(sqrt(d)) or Q(sqrt(d1))(sqrt(d2)).  Values are kept in a
// canonical form: the coefficient of a radical is never zero, radicands are
// positive non-square integers, and nested radicands increase outward.
// Equality is therefore structural and sign evaluation is exact.  Towers of
// depth greater than two are rejected.
class Scalar {
public:
  Scalar() : rep_(Rational()) {}
  Scalar(long n) : rep_(Rational(n)) {}
  Scalar(const BigInt& n) : rep_(Rational(n)) {}
  Scalar(Rational r) : rep_(std::move(r)) {}

  static Scalar parse(std::string_view text);

  bool is_rational() const { return rep_.index() == 0; }
  const Rational& rat() const;

  // Outermost-level decomposition x = a + b*sqrt(d); only valid when the
  // value is not rational.
  const Scalar& part_a() const;
  const Scalar& part_b() const;
  const BigInt& radicand() const;

  // Number of nested radicals (0 for rationals, at most 2).
  int depth() const;

  int sign() const;
  bool is_zero() const { return is_rational() && rat().is_zero(); }
  double approx() const;
  std::string str() const;
  std::size_t hash() const;

  Scalar operator-() const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);

  Scalar& operator+=(const Scalar& y) { *this = *this + y; return *this; }
  Scalar& operator-=(const Scalar& y) { *this = *this - y; return *this; }
  Scalar& operator*=(const Scalar& y) { *this = *this * y; return *this; }
  Scalar& operator/=(const Scalar& y) { *this = *this / y; return *this; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

  friend Scalar sqrt_scalar(const Scalar& x);
  friend Scalar inverse(const Scalar& x);

private:
  struct Ext;
  using ExtPtr = std::shared_ptr<const Ext>;

  explicit Scalar(ExtPtr e) : rep_(std::move(e)) {}
  const Ext& ext() const;

  static Scalar make(Scalar a, Scalar b, const BigInt& d);
  static Scalar rebase(const Scalar& x, const BigInt& to, const BigInt& root);

  std::variant<Rational, ExtPtr> rep_;
};

struct Scalar::Ext {
  Scalar a;
  Scalar b;
  BigInt d;
};

inline const Scalar::Ext& Scalar::ext() const { return *std::get<1>(rep_); }

// Exact square root.  The argument must be a nonnegative rational value;
// the result may extend the tower by one radical.
Scalar sqrt_scalar(const Scalar& x);

Scalar inverse(const Scalar& x);
Scalar abs(const Scalar& x);

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

}  // namespace uat
