#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace torsor {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a rational function is evaluated at a root of its denominator.
struct PoleError : ScalarError {
  using ScalarError::ScalarError;
};

/// Dense univariate polynomial over Z in the formal parameter q.
/// Coefficient i is the coefficient of q^i; no trailing zeros are stored.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(Int constant);
  explicit ZPoly(long constant) : ZPoly(Int(constant)) {}
  explicit ZPoly(std::vector<Int> coeffs);

  static ZPoly monomial(Int coeff, int power);
  static ZPoly one() { return ZPoly(Int(1)); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const;

  Int content() const;   // gcd of coefficients, nonnegative; 0 for the zero poly
  ZPoly primitive() const;  // content removed, leading coefficient positive
  Int eval_one() const;     // value at q = 1

  ZPoly operator-() const;
  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  ZPoly mul_int(const Int& k) const;

  /// Exact division; throws ScalarError if the division leaves a remainder.
  static ZPoly div_exact(const ZPoly& a, const ZPoly& b);
  /// Primitive gcd with positive leading coefficient (primitive PRS).
  static ZPoly gcd(const ZPoly& a, const ZPoly& b);

  /// Total order usable as a map key; 0 < means a before b.
  static int compare(const ZPoly& a, const ZPoly& b);

  std::string str() const;

 private:
  std::vector<Int> c_;
  void trim();
};

/// Exact rational function in q over Q, held as a reduced fraction of
/// integer polynomials.  Canonical form: numerator and denominator share no
/// polynomial factor and no integer content, and the denominator has a
/// positive leading coefficient, so equality is representational equality.
class Scalar {
 public:
  Scalar() = default;  // zero
  Scalar(long n) : Scalar(Int(n)) {}
  explicit Scalar(Int n) : num_(std::move(n)), den_(ZPoly::one()) {}
  explicit Scalar(const Rational& r);
  Scalar(ZPoly num, ZPoly den);

  static Scalar q_power(int n);  // q^n for any integer n

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  Scalar operator-() const;
  Scalar inverse() const;  // throws ScalarError on zero
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar pow(int n) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  static int compare(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }

  /// Exact evaluation at q = 1; throws PoleError when the canonical
  /// denominator vanishes there.
  Rational specialize_q1() const;

  /// Canonical text form, e.g. `q^2+1`, `-2q`, `(q^2+1)/(q)`.
  std::string str() const;
  /// Parses the rendering grammar (also accepts q^-k shorthands and `/`).
  static Scalar parse(const std::string& text);

 private:
  ZPoly num_;                 // zero polynomial: the scalar 0
  ZPoly den_ = ZPoly::one();  // never the zero polynomial
  void normalize();
};

/// [n]_d = (q_d^n - q_d^-n)/(q_d - q_d^-1) with q_d = q^d; a Laurent
/// polynomial for every integer n.
Scalar q_integer(long n, int d);

/// [n]_d! = [1]_d [2]_d ... [n]_d; the empty product is 1.  Rejects n < 0.
Scalar q_factorial(long n, int d);

}  // namespace torsor
