#ifndef CMKIT_QUADFIELD_HPP
#define CMKIT_QUADFIELD_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace cmkit {

/// Q(sqrt(m)) for squarefree m < 0. disc is m when m = 1 mod 4 and 4m
/// otherwise; the maximal order is generated by (1+sqrt(m))/2 resp.
/// sqrt(m).
struct QuadField {
  mpz_class m;
  mpz_class disc;
};

QuadField make_quad_field(const mpz_class& m);

/// x + y*sqrt(m), exact rational coordinates. Elements remember their m
/// so mixed-field arithmetic is rejected.
struct QuadElement {
  mpz_class m;
  mpq_class x;
  mpq_class y;

  friend bool operator==(const QuadElement& a, const QuadElement& b) {
    return a.m == b.m && a.x == b.x && a.y == b.y;
  }
};

QuadElement qelem(const mpz_class& m, const mpq_class& x, const mpq_class& y);
QuadElement qadd(const QuadElement& a, const QuadElement& b);
QuadElement qsub(const QuadElement& a, const QuadElement& b);
QuadElement qmul(const QuadElement& a, const QuadElement& b);
QuadElement qconj(const QuadElement& a);
QuadElement qneg(const QuadElement& a);
/// a^-1; errors with DivisionByZero on zero.
QuadElement qinv(const QuadElement& a);
/// a^n for any integer n (negative powers via qinv).
QuadElement qpow(const QuadElement& a, long n);
mpq_class qnorm(const QuadElement& a);   // x^2 - m y^2
mpq_class qtrace(const QuadElement& a);  // 2x
bool qis_zero(const QuadElement& a);
bool qis_rational(const QuadElement& a);
/// Membership in the maximal order of Q(sqrt(m)).
bool is_algebraic_integer(const QuadElement& a);
std::string qelem_to_string(const QuadElement& a);

/// Weil q-integer of weight w in Q(sqrt(m)): an algebraic integer with
/// value * conj(value) = q^w. Construction checks both invariants.
struct WeilNumber {
  QuadElement value;
  mpz_class q;
  unsigned weight;
};

WeilNumber make_weil(const QuadElement& value, const mpz_class& q, unsigned weight);

enum class SplittingType { Split, Inert, Ramified };
const char* splitting_name(SplittingType s);

/// Behaviour of the rational prime p in Q(sqrt(m)): ramified iff
/// p | disc, else split iff disc is a nonzero square mod p.
SplittingType splitting_type(const QuadField& field, const mpz_class& p);

/// Valuations of alpha at the two primes over the (odd, split) prime p.
/// The first entry belongs to the prime singled out by the Hensel lift
/// of the least nonnegative square root of m mod p. v1 + v2 equals
/// v_p(norm(alpha)). Errors: NotSplit, ZeroElement.
std::pair<long, long> padic_valuations(const QuadElement& alpha, const mpz_class& p);

/// All Weil q-integers of weight w in the maximal order of the field:
/// x + y*sqrt(m) with x^2 - m y^2 = q^w, half-integer lattice included
/// when m = 1 mod 4. Complete, duplicate-free, ordered by ascending
/// (y, x).
std::vector<WeilNumber> weil_enumerate(const QuadField& field, const mpz_class& q,
                                       unsigned w);

struct WeilRelationReport {
  bool pass = true;
  unsigned long cases_checked = 0;
  std::vector<std::string> witnesses;  // failures, empty on pass
};

/// Machine check of the multiplicative independence of an ordinary
/// alpha over F_q, q = p^e:
///   * alpha^r * beta is not a power of q, for 1 <= r <= R, every Weil
///     q-integer beta in F of weight 0 <= w < r (rational +-q^(w/2)
///     included by the lattice enumeration);
///   * q^s / alpha^(2s-1) is not an algebraic integer for 2 <= s <= S,
///     decided by p-adic valuations;
///   * alpha^r * beta != q^s for weight-one beta outside {alpha,
///     conj(alpha)} and |r| <= R, |s| <= S.
/// Errors with NotOrdinary when p divides trace(alpha).
WeilRelationReport verify_weil_relations(const WeilNumber& alpha, const mpz_class& p,
                                         unsigned R, unsigned S);

}  // namespace cmkit

#endif
