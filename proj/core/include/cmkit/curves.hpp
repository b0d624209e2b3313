#ifndef CMKIT_CURVES_HPP
#define CMKIT_CURVES_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmkit/gf.hpp"
#include "cmkit/int_poly.hpp"
#include "cmkit/quadfield.hpp"

namespace cmkit {

class PointCountCache;

/// Validated short Weierstrass curve y^2 = x^3 + Ax + B over F_{p^e},
/// p >= 5, with its Frobenius data. For an ordinary curve alpha is the
/// canonical Frobenius eigenvalue: the root of t^2 - a t + q in
/// Q(sqrt(m)) with positive sqrt(m)-coordinate. The field is shared so
/// the elements' field pointers survive copies of the struct.
struct EllipticCurveData {
  std::shared_ptr<const PrimePowerField> field;
  GFElement a4, a6;
  long trace = 0;
  bool ordinary = false;
  mpz_class cm_disc;  // a^2 - 4q
  mpz_class cm_m;     // squarefree part of cm_disc when negative, else 0
  long conductor = 0; // cm_disc = conductor^2 * disc(Q(sqrt(cm_m)))
  std::optional<WeilNumber> alpha;
  std::string curve_id;
};

/// A base or fiber curve for L-function work: either a concrete
/// elliptic curve or an abstract (q, P1-numerator) pair. Both carry the
/// zeta numerator, so consumers are uniform.
struct CurveDescriptor {
  mpz_class q;
  IntPoly p1;        // constant term 1, degree 2*genus
  unsigned genus = 0;
  std::optional<EllipticCurveData> elliptic;
  std::string curve_id;
};

/// Validates a Weierstrass model, counts |E(F_q)| by enumeration, and
/// fills in all classification fields. A and B are element indices
/// (base-p digits); for e = 1 that is just the integer mod p.
/// Errors: Singular, Char2Or3Unsupported, NotPrime, TooLarge.
EllipticCurveData validate_weierstrass(std::uint32_t p, std::uint32_t e,
                                       const mpz_class& a4_index,
                                       const mpz_class& a6_index);

/// Validates an abstract descriptor: constant term 1, even degree, the
/// functional-equation coefficient symmetry, and the weight-one
/// condition that every inverse root has absolute value sqrt(q)
/// (decided exactly by Sturm counts on the trace polynomial).
/// Errors: BadZetaNumerator, NotPrime.
CurveDescriptor validate_abstract(const mpz_class& q, const IntPoly& p1);

CurveDescriptor descriptor_of(const EllipticCurveData& e);

/// |E(F_{q^n})|. Naive enumeration whenever q^n is within the
/// enumeration bound, the trace recurrence always; the two must agree
/// where both apply. Results are memoized in the optional cache.
mpz_class point_count(const EllipticCurveData& e, unsigned n,
                      PointCountCache* cache = nullptr);

/// Frobenius trace over F_{q^n}: a_0 = 2, a_1 = a,
/// a_{n+1} = a * a_n - q * a_{n-1}.
mpz_class frobenius_trace_power(const EllipticCurveData& e, unsigned n);

/// |C(F_{q^n})| read off the zeta numerator through Newton power sums.
mpz_class rational_point_count(const CurveDescriptor& c, unsigned n);

/// Number of closed points of degree 1..N via Moebius inversion of
/// sum_{d|n} d * b_d = |C(F_{q^n})|. Errors with
/// NegativeClosedPointCount if any b_n < 0.
std::vector<mpz_class> closed_point_counts(const CurveDescriptor& c, unsigned N);

/// Canonical hash key of a normalized curve spec (shared by the cache
/// file and the CLI).
std::string weierstrass_curve_id(std::uint32_t p, std::uint32_t e,
                                 const mpz_class& a4_index, const mpz_class& a6_index);
std::string abstract_curve_id(const mpz_class& q, const IntPoly& p1);

}  // namespace cmkit

#endif
