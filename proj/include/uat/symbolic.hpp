#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uat/scalar.hpp"

namespace uat {

// Bivariate polynomial over Scalar coefficients, stored sparsely by exponent
// pair.  Zero coefficients are never kept, so equality is structural.
class BivarPoly {
public:
  using Key = std::pair<int, int>;  // (x-exponent, y-exponent)

  BivarPoly() = default;
  explicit BivarPoly(const Scalar& constant);
  static BivarPoly variable_x();
  static BivarPoly variable_y();
  static BivarPoly monomial(int i, int j, const Scalar& coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Scalar>& terms() const { return terms_; }

  Scalar eval(const Scalar& x, const Scalar& y) const;
  BivarPoly derivative(char var) const;  // var is 'x' or 'y'

  BivarPoly operator-() const;
  friend BivarPoly operator+(const BivarPoly& f, const BivarPoly& g);
  friend BivarPoly operator-(const BivarPoly& f, const BivarPoly& g);
  friend BivarPoly operator*(const BivarPoly& f, const BivarPoly& g);
  friend BivarPoly operator*(const Scalar& c, const BivarPoly& f);
  bool operator==(const BivarPoly& other) const { return terms_ == other.terms_; }
  bool operator!=(const BivarPoly& other) const { return !(*this == other); }

  // The constant c with *this == c * other, when it exists and is nonzero.
  std::optional<Scalar> ratio_to(const BivarPoly& other) const;

  std::string str() const;

private:
  void add_term(int i, int j, const Scalar& coeff);
  std::map<Key, Scalar> terms_;
};

// Quotient of two bivariate polynomials.  Kept lightly normalized: a zero
// numerator collapses to 0/1, a numerator proportional to the denominator
// collapses to a constant, and both parts are scaled so the denominator's
// least monomial has coefficient 1.  No full gcd reduction is attempted, so
// evaluation can reject points where only the unreduced denominator vanishes.
class BivarRatFunc {
public:
  BivarRatFunc() : BivarRatFunc(Scalar(0)) {}
  explicit BivarRatFunc(const Scalar& constant);
  BivarRatFunc(BivarPoly num, BivarPoly den);

  const BivarPoly& num() const { return num_; }
  const BivarPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Scalar eval(const Scalar& x, const Scalar& y) const;

  BivarRatFunc derivative(char var) const;  // quotient rule

  BivarRatFunc operator-() const;
  friend BivarRatFunc operator+(const BivarRatFunc& f, const BivarRatFunc& g);
  friend BivarRatFunc operator-(const BivarRatFunc& f, const BivarRatFunc& g);
  friend BivarRatFunc operator*(const BivarRatFunc& f, const BivarRatFunc& g);
  friend BivarRatFunc operator/(const BivarRatFunc& f, const BivarRatFunc& g);

  // Exact equality as rational functions (cross-multiplied identity).
  bool equal_to(const BivarRatFunc& other) const;

private:
  void normalize();
  BivarPoly num_;
  BivarPoly den_;
};

BivarRatFunc partial_derivative(const BivarRatFunc& f, char var);

// True iff d^2 log|q| / dx dy vanishes identically, decided through the
// equivalent polynomial identity q*q_xy - q_x*q_y == 0.
bool separability_test(const BivarRatFunc& q);

// Univariate polynomial, dense ascending coefficients, no trailing zeros.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> ascending_coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar eval(const Scalar& v) const;
  std::string str(const std::string& var) const;

private:
  std::vector<Scalar> coeffs_;
};

struct UniRatFunc {
  UniPoly num;
  UniPoly den;

  Scalar eval(const Scalar& v) const;  // DataError at a pole
  std::string str(const std::string& var) const;
};

// h((num_u/den_u)) for linear-fractional h: substitutes a bivariate argument
// into a univariate quotient of degree at most one.
BivarRatFunc compose_linear_fractional(const UniRatFunc& h, const BivarRatFunc& u);

// (x*y - alpha*x - 2) / (y - x)
BivarRatFunc triple_line_map(const Scalar& alpha);

// f = h(phi(x) * psi(y)) with phi, psi, h built from the two roots of
// s^2 - alpha*s - 2 = 0; the identity is verified exactly on construction.
struct Decomposition {
  Scalar s1;
  Scalar s2;
  UniRatFunc phi;
  UniRatFunc psi;
  UniRatFunc h;
  BivarRatFunc u;  // phi(x) * psi(y)
};

Decomposition decompose_f(const Scalar& alpha);

}  // namespace uat
