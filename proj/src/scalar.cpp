#include "torsor/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace torsor {

namespace mp = boost::multiprecision;

ZPoly::ZPoly(Int constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

ZPoly::ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(Int coeff, int power) {
  ZPoly p;
  if (coeff == 0) return p;
  if (power < 0) throw ScalarError("monomial power must be nonnegative");
  p.c_.assign(power + 1, Int(0));
  p.c_[power] = std::move(coeff);
  return p;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& ZPoly::leading() const {
  if (c_.empty()) throw ScalarError("leading coefficient of zero polynomial");
  return c_.back();
}

Int ZPoly::content() const {
  Int g = 0;
  for (const Int& x : c_) g = mp::gcd(g, x);
  if (g < 0) g = -g;
  return g;
}

ZPoly ZPoly::primitive() const {
  if (is_zero()) return ZPoly();
  Int g = content();
  if (leading() < 0) g = -g;
  ZPoly r = *this;
  for (Int& x : r.c_) x /= g;
  return r;
}

Int ZPoly::eval_one() const {
  Int s = 0;
  for (const Int& x : c_) s += x;
  return s;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (Int& x : r.c_) x = -x;
  return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  ZPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

ZPoly ZPoly::mul_int(const Int& k) const {
  if (k == 0) return ZPoly();
  ZPoly r = *this;
  for (Int& x : r.c_) x *= k;
  return r;
}

ZPoly ZPoly::div_exact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw ScalarError("division by zero polynomial");
  if (a.is_zero()) return ZPoly();
  if (a.degree() < b.degree()) throw ScalarError("inexact polynomial division");
  std::vector<Int> rem = a.c_;
  std::vector<Int> quo(a.degree() - b.degree() + 1, Int(0));
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Int& top = rem[k + b.degree()];
    if (top == 0) continue;
    if (top % b.leading() != 0) throw ScalarError("inexact polynomial division");
    Int q = top / b.leading();
    quo[k] = q;
    for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * b.c_[i];
  }
  for (const Int& x : rem)
    if (x != 0) throw ScalarError("inexact polynomial division");
  return ZPoly(std::move(quo));
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b, still in Z[q].
static ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  std::vector<Int> rem = a.coeffs();
  const int db = b.degree();
  const Int& lb = b.leading();
  int da = static_cast<int>(rem.size()) - 1;
  while (da >= db) {
    if (rem[da] == 0) {
      --da;
      continue;
    }
    Int lead = rem[da];
    for (Int& x : rem) x *= lb;
    for (int i = 0; i <= db; ++i) rem[da - db + i] -= lead * b.coeffs()[i];
    --da;
  }
  rem.resize(db > 0 ? db : 0);
  return ZPoly(std::move(rem));
}

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly x = a.primitive(), y = b.primitive();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ZPoly r = pseudo_rem(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x;  // primitive with positive leading coefficient by construction
}

int ZPoly::compare(const ZPoly& a, const ZPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
  for (size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
  }
  return 0;
}

std::string ZPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& coef = c_[i];
    if (coef == 0) continue;
    Int mag = coef < 0 ? Int(-coef) : coef;
    if (first) {
      if (coef < 0) out << "-";
      first = false;
    } else {
      out << (coef < 0 ? "-" : "+");
    }
    if (mag != 1 || i == 0) out << mag.str();
    if (i >= 1) {
      out << "q";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Scalar::Scalar(const Rational& r)
    : num_(Int(mp::numerator(r))), den_(Int(mp::denominator(r))) {
  normalize();
}

Scalar::Scalar(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ScalarError("zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = ZPoly::one();
    return;
  }
  ZPoly g = ZPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = ZPoly::div_exact(num_, g);
    den_ = ZPoly::div_exact(den_, g);
  }
  Int cn = num_.content(), cd = den_.content();
  Int ci = mp::gcd(cn, cd);
  if (den_.leading() < 0) ci = -ci;
  if (ci != 1) {
    num_ = ZPoly::div_exact(num_, ZPoly(ci));
    den_ = ZPoly::div_exact(den_, ZPoly(ci));
  }
}

Scalar Scalar::q_power(int n) {
  if (n >= 0) return Scalar(ZPoly::monomial(Int(1), n), ZPoly::one());
  return Scalar(ZPoly::one(), ZPoly::monomial(Int(1), -n));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("inverse of zero");
  return Scalar(den_, num_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(int n) const {
  Scalar base = n < 0 ? inverse() : *this;
  int k = n < 0 ? -n : n;
  Scalar r(1);
  while (k-- > 0) r = r * base;
  return r;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  int c = ZPoly::compare(a.num_, b.num_);
  if (c != 0) return c;
  return ZPoly::compare(a.den_, b.den_);
}

Rational Scalar::specialize_q1() const {
  Int d = den_.eval_one();
  if (d == 0) throw PoleError("denominator vanishes at q = 1: " + str());
  return Rational(num_.eval_one(), d);
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Scalar q_integer(long n, int d) {
  if (d < 1) throw std::invalid_argument("q_integer: d must be positive");
  // (q_d^n - q_d^-n)/(q_d - q_d^-1), cleared of negative powers:
  // (q^(2dn) - 1) / (q^(d(n+1)) - q^(d(n-1))) for n >= 0 after scaling,
  // but the direct fraction form below reduces to the same canonical result.
  Scalar qn = Scalar::q_power(d * static_cast<int>(n)) -
              Scalar::q_power(-d * static_cast<int>(n));
  Scalar q1 = Scalar::q_power(d) - Scalar::q_power(-d);
  return qn / q1;
}

Scalar q_factorial(long n, int d) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  Scalar r(1);
  for (long k = 1; k <= n; ++k) r = r * q_integer(k, d);
  return r;
}

}  // namespace torsor
