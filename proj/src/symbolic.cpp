#include "uat/symbolic.hpp"

#include <algorithm>

#include "uat/errors.hpp"

namespace uat {

namespace {

// Coefficient strings that would be ambiguous inside a term get parentheses.
bool needs_parens(const std::string& s) {
  if (s.find('+') != std::string::npos) return true;
  if (s.find('*') != std::string::npos) return true;
  return s.find('-', 1) != std::string::npos;
}

std::string wrap(const std::string& s) { return needs_parens(s) ? "(" + s + ")" : s; }

std::string monomial_str(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

std::string term_str(const Scalar& coeff, const std::string& mono) {
  const std::string cs = wrap(coeff.str());
  if (mono.empty()) return cs;
  if (cs == "1") return mono;
  if (cs == "-1") return "-" + mono;
  return cs + "*" + mono;
}

// Evaluates v^k with a tiny memo so repeated exponents cost one multiply.
const Scalar& power(std::map<int, Scalar>& cache, const Scalar& v, int k) {
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  Scalar acc(1);
  int have = 0;
  auto best = cache.lower_bound(k);
  if (best != cache.begin()) {
    --best;
    acc = best->second;
    have = best->first;
  }
  while (have < k) {
    acc = acc * v;
    ++have;
  }
  return cache.emplace(k, std::move(acc)).first->second;
}

}  // namespace

BivarPoly::BivarPoly(const Scalar& constant) { add_term(0, 0, constant); }

BivarPoly BivarPoly::variable_x() { return monomial(1, 0, Scalar(1)); }
BivarPoly BivarPoly::variable_y() { return monomial(0, 1, Scalar(1)); }

BivarPoly BivarPoly::monomial(int i, int j, const Scalar& coeff) {
  if (i < 0 || j < 0) throw DataError("polynomial exponents must be nonnegative");
  BivarPoly p;
  p.add_term(i, j, coeff);
  return p;
}

void BivarPoly::add_term(int i, int j, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  const Key key{i, j};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar BivarPoly::eval(const Scalar& x, const Scalar& y) const {
  std::map<int, Scalar> xp{{0, Scalar(1)}};
  std::map<int, Scalar> yp{{0, Scalar(1)}};
  Scalar acc(0);
  for (const auto& [key, coeff] : terms_) {
    acc += coeff * power(xp, x, key.first) * power(yp, y, key.second);
  }
  return acc;
}

BivarPoly BivarPoly::derivative(char var) const {
  if (var != 'x' && var != 'y') throw DataError("derivative variable must be 'x' or 'y'");
  BivarPoly out;
  for (const auto& [key, coeff] : terms_) {
    const auto [i, j] = key;
    if (var == 'x' && i > 0) out.add_term(i - 1, j, Scalar(i) * coeff);
    if (var == 'y' && j > 0) out.add_term(i, j - 1, Scalar(j) * coeff);
  }
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
  return out;
}

BivarPoly operator+(const BivarPoly& f, const BivarPoly& g) {
  BivarPoly out = f;
  for (const auto& [key, coeff] : g.terms_) out.add_term(key.first, key.second, coeff);
  return out;
}

BivarPoly operator-(const BivarPoly& f, const BivarPoly& g) { return f + (-g); }

BivarPoly operator*(const BivarPoly& f, const BivarPoly& g) {
  BivarPoly out;
  for (const auto& [fk, fc] : f.terms_) {
    for (const auto& [gk, gc] : g.terms_) {
      out.add_term(fk.first + gk.first, fk.second + gk.second, fc * gc);
    }
  }
  return out;
}

BivarPoly operator*(const Scalar& c, const BivarPoly& f) {
  BivarPoly out;
  for (const auto& [key, coeff] : f.terms_) out.add_term(key.first, key.second, c * coeff);
  return out;
}

std::optional<Scalar> BivarPoly::ratio_to(const BivarPoly& other) const {
  if (is_zero() || other.is_zero()) return std::nullopt;
  if (terms_.size() != other.terms_.size()) return std::nullopt;
  std::optional<Scalar> ratio;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return std::nullopt;
    const Scalar r = it->second / jt->second;
    if (!ratio.has_value()) {
      ratio = r;
    } else if (*ratio != r) {
      return std::nullopt;
    }
  }
  return ratio;
}

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest x-degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, coeff] = *it;
    std::string mono = monomial_str("x", key.first);
    const std::string my = monomial_str("y", key.second);
    if (!mono.empty() && !my.empty()) mono += "*";
    mono += my;
    if (out.empty()) {
      out = term_str(coeff, mono);
    } else if (coeff.sign() < 0) {
      out += " - " + term_str(-coeff, mono);
    } else {
      out += " + " + term_str(coeff, mono);
    }
  }
  return out;
}

BivarRatFunc::BivarRatFunc(const Scalar& constant)
    : num_(BivarPoly(constant)), den_(BivarPoly(Scalar(1))) {}

BivarRatFunc::BivarRatFunc(BivarPoly num, BivarPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DataError("rational function needs a nonzero denominator");
  normalize();
}

void BivarRatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = BivarPoly(Scalar(1));
    return;
  }
  if (const auto c = num_.ratio_to(den_); c.has_value()) {
    num_ = BivarPoly(*c);
    den_ = BivarPoly(Scalar(1));
    return;
  }
  const Scalar lead = den_.terms().begin()->second;
  const Scalar inv = Scalar(1) / lead;
  num_ = inv * num_;
  den_ = inv * den_;
}

Scalar BivarRatFunc::eval(const Scalar& x, const Scalar& y) const {
  const Scalar d = den_.eval(x, y);
  if (d.is_zero()) {
    throw DataError("evaluation at a zero of the (unreduced) denominator");
  }
  return num_.eval(x, y) / d;
}

BivarRatFunc BivarRatFunc::derivative(char var) const {
  return BivarRatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

BivarRatFunc BivarRatFunc::operator-() const { return BivarRatFunc(-num_, den_); }

BivarRatFunc operator+(const BivarRatFunc& f, const BivarRatFunc& g) {
  if (f.den_ == g.den_) return BivarRatFunc(f.num_ + g.num_, f.den_);
  return BivarRatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

BivarRatFunc operator-(const BivarRatFunc& f, const BivarRatFunc& g) { return f + (-g); }

BivarRatFunc operator*(const BivarRatFunc& f, const BivarRatFunc& g) {
  return BivarRatFunc(f.num_ * g.num_, f.den_ * g.den_);
}

BivarRatFunc operator/(const BivarRatFunc& f, const BivarRatFunc& g) {
  if (g.is_zero()) throw DataError("division by the zero function");
  return BivarRatFunc(f.num_ * g.den_, f.den_ * g.num_);
}

bool BivarRatFunc::equal_to(const BivarRatFunc& other) const {
  return (num_ * other.den_ - other.num_ * den_).is_zero();
}

BivarRatFunc partial_derivative(const BivarRatFunc& f, char var) {
  if (var != 'x' && var != 'y') throw DataError("derivative variable must be 'x' or 'y'");
  return f.derivative(var);
}

bool separability_test(const BivarRatFunc& q) {
  if (q.is_zero()) throw DataError("separability test needs a nonzero function");
  const BivarRatFunc qx = q.derivative('x');
  const BivarRatFunc qy = q.derivative('y');
  const BivarRatFunc qxy = qx.derivative('y');
  return (q * qxy - qx * qy).is_zero();
}

UniPoly::UniPoly(std::vector<Scalar> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::eval(const Scalar& v) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& coeff = coeffs_[static_cast<std::size_t>(k)];
    if (coeff.is_zero()) continue;
    const std::string mono = monomial_str(var, k);
    if (out.empty()) {
      out = term_str(coeff, mono);
    } else if (coeff.sign() < 0) {
      out += " - " + term_str(-coeff, mono);
    } else {
      out += " + " + term_str(coeff, mono);
    }
  }
  return out;
}

Scalar UniRatFunc::eval(const Scalar& v) const {
  const Scalar d = den.eval(v);
  if (d.is_zero()) throw DataError("evaluation at a pole");
  return num.eval(v) / d;
}

std::string UniRatFunc::str(const std::string& var) const {
  if (den.degree() == 0 && den.coeffs()[0] == Scalar(1)) return num.str(var);
  return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

BivarRatFunc compose_linear_fractional(const UniRatFunc& h, const BivarRatFunc& u) {
  if (h.num.degree() > 1 || h.den.degree() > 1) {
    throw DataError("composition argument must be linear-fractional");
  }
  const auto coeff = [](const UniPoly& p, int k) {
    return k <= p.degree() ? p.coeffs()[static_cast<std::size_t>(k)] : Scalar(0);
  };
  const BivarPoly num = coeff(h.num, 1) * u.num() + coeff(h.num, 0) * u.den();
  const BivarPoly den = coeff(h.den, 1) * u.num() + coeff(h.den, 0) * u.den();
  return BivarRatFunc(num, den);
}

BivarRatFunc triple_line_map(const Scalar& alpha) {
  BivarPoly num = BivarPoly::monomial(1, 1, Scalar(1)) + BivarPoly::monomial(1, 0, -alpha) +
                  BivarPoly(Scalar(-2));
  BivarPoly den = BivarPoly::variable_y() - BivarPoly::variable_x();
  return BivarRatFunc(std::move(num), std::move(den));
}

Decomposition decompose_f(const Scalar& alpha) {
  Scalar root(0);
  try {
    root = sqrt_scalar(alpha * alpha + Scalar(8));
  } catch (const std::domain_error& e) {
    throw DataError(std::string("cannot take the root discriminant: ") + e.what());
  }
  const Scalar half(Rational(BigInt(1), BigInt(2)));
  const Scalar s1 = (alpha + root) * half;
  const Scalar s2 = (alpha - root) * half;

  Decomposition d;
  d.s1 = s1;
  d.s2 = s2;
  d.phi = UniRatFunc{UniPoly({-s2, Scalar(1)}), UniPoly({-s1, Scalar(1)})};
  d.psi = UniRatFunc{UniPoly({-s1, Scalar(1)}), UniPoly({-s2, Scalar(1)})};
  d.h = UniRatFunc{UniPoly({s2, -s1}), UniPoly({Scalar(1), Scalar(-1)})};

  const BivarPoly x = BivarPoly::variable_x();
  const BivarPoly y = BivarPoly::variable_y();
  d.u = BivarRatFunc((x - BivarPoly(s2)) * (y - BivarPoly(s1)),
                     (x - BivarPoly(s1)) * (y - BivarPoly(s2)));

  const BivarRatFunc composed = compose_linear_fractional(d.h, d.u);
  const BivarRatFunc f = triple_line_map(alpha);
  if (!(f.num() * composed.den() - composed.num() * f.den()).is_zero()) {
    throw InternalError("decomposition identity failed for alpha = " + alpha.str());
  }
  return d;
}

}  // namespace uat
