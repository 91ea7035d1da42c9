#include "uat/scalar.hpp"

#include <cctype>
#include <cmath>
#include <utility>
#include <vector>

namespace uat {

namespace {

constexpr std::size_t kSeedPos = 0x243f6a8885a308d3ull;
constexpr std::size_t kSeedNeg = 0x9e3779b97f4a7c15ull;

std::size_t mix(std::size_t h) {
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

std::size_t combine(std::size_t h, std::size_t v) {
  return mix(h ^ (v + kSeedNeg + (h << 6) + (h >> 2)));
}

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 1000000;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p <= kLimit; ++p) {
      if (composite[p]) continue;
      ps.push_back(p);
      for (unsigned long q = p * p; q <= kLimit; q += p) composite[q] = true;
    }
    return ps;
  }();
  return primes;
}

// Splits n > 0 as s^2 * m, pulling out every square factor detectable by a
// perfect-square test plus trial division over primes below 10^6.
void split_square(const BigInt& n, BigInt& s, BigInt& m) {
  BigInt rem = n;
  s = 1;
  for (unsigned long p : small_primes()) {
    const unsigned long p2 = p * p;
    if (mpz_cmp_ui(rem.get_mpz_t(), p2) < 0) break;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p2)) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p2);
      s *= p;
    }
  }
  if (mpz_perfect_square_p(rem.get_mpz_t())) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
    s *= r;
    rem = 1;
  }
  m = rem;
}

}  // namespace

std::size_t hash_bigint(const BigInt& z) {
  mpz_srcptr p = z.get_mpz_t();
  std::size_t h = mpz_sgn(p) < 0 ? kSeedNeg : kSeedPos;
  const std::size_t limbs = mpz_size(p);
  for (std::size_t i = 0; i < limbs; ++i) {
    h = combine(h, static_cast<std::size_t>(mpz_getlimbn(p, i)));
  }
  return h;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(x.v_ / y.v_));
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { throw DataError("invalid rational literal: '" + std::string(text) + "'"); };
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) fail();
  BigInt num(std::string(text.substr(num_begin, i - num_begin)), 10);
  BigInt den(1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    const std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) fail();
    den = BigInt(std::string(text.substr(den_begin, i - den_begin)), 10);
    if (sgn(den) == 0) fail();
  }
  if (i != text.size()) fail();
  if (neg) num = -num;
  return Rational(num, den);
}

std::size_t Rational::hash() const { return combine(hash_bigint(num()), hash_bigint(den())); }

const Rational& Scalar::rat() const {
  if (!is_rational()) throw InternalError("scalar is not rational");
  return std::get<0>(rep_);
}

const Scalar& Scalar::part_a() const {
  if (is_rational()) throw InternalError("scalar has no radical part");
  return ext().a;
}

const Scalar& Scalar::part_b() const {
  if (is_rational()) throw InternalError("scalar has no radical part");
  return ext().b;
}

const BigInt& Scalar::radicand() const {
  if (is_rational()) throw InternalError("scalar has no radical part");
  return ext().d;
}

int Scalar::depth() const {
  if (is_rational()) return 0;
  return 1 + std::max(ext().a.depth(), ext().b.depth());
}

Scalar Scalar::make(Scalar a, Scalar b, const BigInt& d) {
  if (b.is_zero()) return a;
  Scalar out{std::make_shared<const Ext>(Ext{std::move(a), std::move(b), d})};
  if (out.depth() > 2) {
    throw DataError("scalar towers are incompatible (more than two nested radicals)");
  }
  return out;
}

// Rewrites x = a + b*sqrt(d_old) over the radicand `to`, given
// root = sqrt(d_old * to).
Scalar Scalar::rebase(const Scalar& x, const BigInt& to, const BigInt& root) {
  const Ext& e = x.ext();
  return make(e.a, e.b * Scalar(Rational(root, to)), to);
}

int Scalar::sign() const {
  if (is_rational()) return rat().sign();
  const Ext& e = ext();
  const int sa = e.a.sign();
  const int sb = e.b.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const int t = (e.a * e.a - e.b * e.b * Scalar(e.d)).sign();
  if (t == 0) throw InternalError("radicand is a square in its base field");
  return t > 0 ? sa : sb;
}

double Scalar::approx() const {
  if (is_rational()) return rat().approx();
  const Ext& e = ext();
  return e.a.approx() + e.b.approx() * std::sqrt(e.d.get_d());
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(-rat());
  const Ext& e = ext();
  return make(-e.a, -e.b, e.d);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) return Scalar(x.rat() + y.rat());
  if (x.is_rational()) {
    const auto& e = y.ext();
    return Scalar::make(x + e.a, e.b, e.d);
  }
  if (y.is_rational()) {
    const auto& e = x.ext();
    return Scalar::make(e.a + y, e.b, e.d);
  }
  const auto& ex = x.ext();
  const auto& ey = y.ext();
  const int c = cmp(ex.d, ey.d);
  if (c == 0) return Scalar::make(ex.a + ey.a, ex.b + ey.b, ex.d);
  BigInt prod = ex.d * ey.d;
  if (mpz_perfect_square_p(prod.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
    if (c < 0) return x + Scalar::rebase(y, ex.d, root);
    return Scalar::rebase(x, ey.d, root) + y;
  }
  if (c < 0) return Scalar::make(x + ey.a, ey.b, ey.d);
  return Scalar::make(ex.a + y, ex.b, ex.d);
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) return Scalar(x.rat() * y.rat());
  if (x.is_rational()) {
    if (x.is_zero()) return Scalar();
    const auto& e = y.ext();
    return Scalar::make(x * e.a, x * e.b, e.d);
  }
  if (y.is_rational()) {
    if (y.is_zero()) return Scalar();
    const auto& e = x.ext();
    return Scalar::make(e.a * y, e.b * y, e.d);
  }
  const auto& ex = x.ext();
  const auto& ey = y.ext();
  const int c = cmp(ex.d, ey.d);
  if (c == 0) {
    return Scalar::make(ex.a * ey.a + ex.b * ey.b * Scalar(ex.d), ex.a * ey.b + ex.b * ey.a, ex.d);
  }
  BigInt prod = ex.d * ey.d;
  if (mpz_perfect_square_p(prod.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
    if (c < 0) return x * Scalar::rebase(y, ex.d, root);
    return Scalar::rebase(x, ey.d, root) * y;
  }
  if (c < 0) return Scalar::make(x * ey.a, x * ey.b, ey.d);
  return Scalar::make(ex.a * y, ex.b * y, ex.d);
}

Scalar inverse(const Scalar& x) {
  if (x.is_zero()) throw std::domain_error("division by zero");
  if (x.is_rational()) return Scalar(Rational(1) / x.rat());
  const auto& e = x.ext();
  const Scalar norm = e.a * e.a - e.b * e.b * Scalar(e.d);
  if (norm.is_zero()) throw InternalError("radicand is a square in its base field");
  const Scalar ninv = inverse(norm);
  return Scalar::make(e.a * ninv, -(e.b * ninv), e.d);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * inverse(y); }

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) return x.rat() == y.rat();
  return (x - y).is_zero();
}

std::string Scalar::str() const {
  if (is_rational()) return rat().str();
  const Ext& e = ext();
  std::string out;
  const bool lead = !e.a.is_zero();
  if (lead) out += e.a.str();
  if (e.b.is_rational()) {
    const Rational& b = e.b.rat();
    if (b.sign() < 0) {
      out += '-';
    } else if (lead) {
      out += '+';
    }
    out += (b.sign() < 0 ? -b : b).str();
  } else {
    if (lead) out += '+';
    out += '(';
    out += e.b.str();
    out += ')';
  }
  out += "*sqrt(";
  out += e.d.get_str();
  out += ')';
  return out;
}

std::size_t Scalar::hash() const {
  if (is_rational()) return rat().hash();
  const Ext& e = ext();
  return combine(combine(e.a.hash(), e.b.hash()), hash_bigint(e.d));
}

namespace {

// Grammar:  expr   := ['-'] term (('+'|'-') term)*
//           term   := factor (('*'|'/') factor)*
//           factor := digits | 'sqrt' '(' expr ')' | '(' expr ')'
class ScalarParser {
public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DataError("invalid scalar literal '" + std::string(s_) + "': " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Scalar expr() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    }
    Scalar v = term();
    if (neg) v = -v;
    for (;;) {
      skip();
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v = v + term();
      } else if (c == '-') {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      skip();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * factor();
      } else if (c == '/') {
        ++pos_;
        const Scalar w = factor();
        if (w.is_zero()) fail("division by zero");
        v = v / w;
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == 's') {
      for (char want : {'s', 'q', 'r', 't'}) expect(want);
      skip();
      expect('(');
      const Scalar v = expr();
      skip();
      expect(')');
      if (!v.is_rational()) fail("sqrt of a non-rational value");
      if (v.sign() < 0) fail("sqrt of a negative value");
      return sqrt_scalar(v);
    }
    if (c == '(') {
      ++pos_;
      const Scalar v = expr();
      skip();
      expect(')');
      return v;
    }
    fail("unexpected character");
  }

  Scalar number() {
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Scalar(Rational(BigInt(std::string(s_.substr(begin, pos_ - begin)), 10)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).run(); }

Scalar sqrt_scalar(const Scalar& x) {
  if (!x.is_rational()) throw std::domain_error("square root of a non-rational value");
  const Rational& r = x.rat();
  const int s = r.sign();
  if (s < 0) throw std::domain_error("square root of a negative value");
  if (s == 0) return Scalar();
  BigInt sp, mp, sq, mq;
  split_square(r.num(), sp, mp);
  split_square(r.den(), sq, mq);
  const BigInt m = mp * mq;
  const Rational coeff(sp, sq * mq);
  if (m == 1) return Scalar(coeff);
  return Scalar::make(Scalar(), Scalar(coeff), m);
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

}  // namespace uat
