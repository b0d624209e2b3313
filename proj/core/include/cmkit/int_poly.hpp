#ifndef CMKIT_INT_POLY_HPP
#define CMKIT_INT_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace cmkit {

/// Univariate polynomial over Z in the variable t, coefficients stored
/// ascending (constant term first). The zero polynomial has an empty
/// coefficient vector and degree -1.
///
/// Throughout the library a polynomial P with P(0) = 1 is read in the
/// reciprocal-root convention: P(t) = prod (1 - gamma_i t), and the
/// gamma_i are called its eigenvalues. A factor 1 - gamma t "has
/// eigenvalue gamma".
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly one() { return IntPoly{1}; }
  static IntPoly constant(const mpz_class& c);
  /// 1 - gamma t.
  static IntPoly linear_eigen(const mpz_class& gamma);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const mpz_class& coeff(std::size_t k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  mpz_class eval(const mpz_class& t) const;
  mpq_class eval(const mpq_class& t) const;

  IntPoly derivative() const;
  /// Coefficients reversed: t^deg * P(1/t). Requires a nonzero constant
  /// term so the degree is preserved.
  IntPoly reversed() const;
  /// P(c*t): coefficient k scaled by c^k.
  IntPoly scale_arg(const mpz_class& c) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return a.c_ != b.c_; }

  IntPoly pow(unsigned long e) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> c_;
};

/// Exact quotient a / b. Errors with NonDivisible when b does not divide
/// a over Q with an integer quotient; never truncates.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Largest k such that mu^k divides p. mu must be non-constant
/// (irreducible over Q or linear, caller-certified) and p nonzero.
int root_multiplicity(const IntPoly& p, const IntPoly& mu);

/// Polynomial whose eigenvalue multiset is the pairwise products
/// {gamma*delta} of the eigenvalue multisets of p and q, computed via a
/// bivariate resultant in exact integer arithmetic. Degree is
/// deg p * deg q; constant-term-1 inputs yield a constant-term-1 result.
/// Errors with ZeroConstantTerm when either constant term vanishes.
IntPoly composed_product(const IntPoly& p, const IntPoly& q);

/// prod over eigenvalues gamma of p of (1 - (q^d / gamma) t) -- the
/// functional-equation partner of p. Requires the map to land in Z[t].
IntPoly weil_dual(const IntPoly& p, const mpz_class& q, unsigned d);

/// Resultant of two rational polynomials (ascending coefficients).
mpq_class resultant(std::vector<mpq_class> f, std::vector<mpq_class> g);

namespace sturm {

/// Number of distinct real roots of p in the interval (a, b]. Endpoints
/// may be unbounded.
struct Endpoint {
  enum Kind { NegInf, Finite, PosInf } kind = Finite;
  mpq_class value;
};
int count_real_roots(const std::vector<mpq_class>& p, const Endpoint& a,
                     const Endpoint& b);

/// p / gcd(p, p'), monic over Q.
std::vector<mpq_class> squarefree_part(const std::vector<mpq_class>& p);

}  // namespace sturm

}  // namespace cmkit

#endif
