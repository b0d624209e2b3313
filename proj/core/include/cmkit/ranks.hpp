#ifndef CMKIT_RANKS_HPP
#define CMKIT_RANKS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cmkit/curves.hpp"
#include "cmkit/int_poly.hpp"
#include "cmkit/motive.hpp"
#include "cmkit/rat_series.hpp"

namespace cmkit {

/// One eigenvalue relation contributing to a rank count.
struct RankWitness {
  std::string summand;     // canonical summand label
  std::string eigenvalue;  // the Frobenius eigenvalue gamma
  std::uint64_t multiplicity = 0;  // copies of gamma in the ambient space
  std::uint64_t pairing = 0;       // matches contributed per copy
};

/// Multiplicity of the eigenvalue q^i on H^{2i}(E^g (x C)): the number
/// of Tate classes in codimension i. Tensor summands contribute nothing
/// (checked exactly, not assumed); base-curve pairings are counted by
/// root multiplicities of minimal polynomials against P1(C).
/// Errors: NotOrdinary, DegreeOutOfRange.
std::uint64_t tate_class_dim(const EllipticCurveData& e, unsigned g, unsigned i,
                             const CurveDescriptor* base = nullptr,
                             std::vector<RankWitness>* witnesses = nullptr);

/// rank NS = Tate-class count in codimension 1, cross-checked against
/// the product closed form g + 2*binom(g,2) (+ 1 + g*hom_rank with a
/// base curve).
std::uint64_t picard_number(const EllipticCurveData& e, unsigned g,
                            const CurveDescriptor* base = nullptr);

/// rank of Hom(Jac C, E) tensor Q: the number of eigenvalue pairings
/// alpha' * beta = q between the two h^1's.
std::uint64_t hom_rank(const CurveDescriptor& c, const EllipticCurveData& e);

/// L-function of the constant family E^g over the function field of C
/// in cohomological degree 2i-1, as numerator / denominator:
///   numerator   = det(1 - Frob t | H^1(C) (x) V)
///   denominator = chi_V(t) * chi_V(qt),  V = H^(2i-1)(E^g).
/// The denominator provably has no zero at t = q^-i (odd weight); this
/// is asserted by exact evaluation. Errors: NotOrdinary,
/// DegreeOutOfRange.
struct LFunction {
  IntPoly numerator;
  IntPoly denominator;
  IntPoly chi_v;
};
LFunction l_cohomological(const EllipticCurveData& e, unsigned g, unsigned i,
                          const CurveDescriptor& c);

/// Predicted Beilinson--Bloch rank: ord at t = q^-i of the numerator of
/// l_cohomological, computed twice -- as a pairing count over the
/// eigenvalues of V against P1(C), and as a root multiplicity of the
/// composed product -- with the two routes required to agree.
std::uint64_t bb_rank(const EllipticCurveData& e, unsigned g, unsigned i,
                      const CurveDescriptor& c,
                      std::vector<RankWitness>* witnesses = nullptr);

struct EulerCheckResult {
  bool pass = true;
  long first_mismatch = -1;  // t-degree of the first differing coefficient
  mpq_class euler_side;
  mpq_class cohomological_side;
};

/// Expands the Euler product over closed points of C of the local
/// factors det(1 - Frob^deg(x) t^deg(x) | V)^-1 to order N and compares
/// it coefficient-by-coefficient with the series of l_cohomological.
/// N <= 12 (desk scale).
EulerCheckResult l_euler_check(const EllipticCurveData& e, unsigned g, unsigned i,
                               const CurveDescriptor& c, unsigned N);

}  // namespace cmkit

#endif
