#ifndef CMKIT_MOTIVE_HPP
#define CMKIT_MOTIVE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cmkit/curves.hpp"
#include "cmkit/int_poly.hpp"

namespace cmkit {

enum class SummandKind : int {
  Lefschetz = 0,  // 1(-j), one Frobenius eigenvalue q^j
  UnitF = 1,      // 1_F(-j), rank one over F; two copies of 1(-j) over Q
  Tensor = 2,     // (tensor_F^i h^1(E))(-j) or its conjugate, i >= 1
};

/// One summand of a decomposition. i is meaningful only for Tensor,
/// conj only for Tensor at the F-level; base_h1 marks an extra
/// "tensor h^1(C)" factor on product-with-curve summands.
struct MotiveSummand {
  SummandKind kind = SummandKind::Lefschetz;
  unsigned i = 0;
  unsigned j = 0;
  bool conj = false;
  bool base_h1 = false;

  unsigned weight() const {
    return (kind == SummandKind::Tensor ? i : 0) + 2 * j + (base_h1 ? 1 : 0);
  }
  /// Q_l-dimension, given twice the base-curve genus when base_h1 set.
  std::uint64_t q_dimension(std::uint64_t two_gc = 0) const {
    std::uint64_t d = (kind == SummandKind::Lefschetz) ? 1 : 2;
    return base_h1 ? d * two_gc : d;
  }
  std::string to_string() const;

  friend auto operator<=>(const MotiveSummand&, const MotiveSummand&) = default;
};

enum class Level { F, Q };

/// Decomposition with multiplicities, tagged F-level or Q-level. At the
/// Q-level conjugation flags are forgotten and 1_F(-j) counts as two
/// copies of 1(-j).
struct SummandMultiset {
  Level level = Level::Q;
  std::map<MotiveSummand, std::uint64_t> entries;

  void add(const MotiveSummand& s, std::uint64_t mult);
  std::uint64_t total_q_dimension(std::uint64_t two_gc = 0) const;
  std::uint64_t total_multiplicity() const;
  /// All Frobenius exponent data (j, i, conj) with multiplicity: each
  /// Tensor/UnitF summand yields both conjugate eigenvalues at Q-level.
  friend bool operator==(const SummandMultiset& a, const SummandMultiset& b) {
    return a.level == b.level && a.entries == b.entries;
  }
};

/// The zeta function of a smooth projective d-fold as the list
/// P_0, ..., P_2d with P_n = det(1 - Frob_q t | H^n). Construction
/// checks P_n(0) = 1 and the functional-equation pairing
/// P_{2d-n} = image of P_n under gamma -> q^d / gamma.
struct ZetaFunction {
  mpz_class q;
  unsigned dim = 0;
  std::vector<IntPoly> parts;  // size 2*dim + 1

  void validate() const;
};

/// Decomposition of tensor_Q^g h^1(E) into CM summands. At the F-level
/// the iteration applies
///   T(i,j,c) x h^1 -> T(i+1,j,c) + T(i-1,j+1,c)   (T(0,j) meaning 1_F(-j))
///   1_F(j) x h^1   -> T(1,j,plain) + T(1,j,conj)
/// starting from h^1(E) itself; the Q-level forgets conjugation and
/// expands the F-units. g = 0 gives the unit motive 1(0).
SummandMultiset cm_tensor_decompose(unsigned g, Level level);

/// Multiplicities a_{i,j} produced by the printed recurrence with base
/// row a_{i,0} = 1 (these are the F-level plain-summand counts, not the
/// Q-level ones; see cm_decompose_report in the serializer).
std::map<std::pair<unsigned, unsigned>, std::uint64_t> cm_recurrence_table(unsigned g);

/// Kuenneth piece h^n(E^g) (times h(C) when base is given) as a
/// summand multiset: degree patterns over the g elliptic factors are
/// distributed with multinomial multiplicities and the degree-1 block
/// goes through cm_tensor_decompose. Errors with DegreeOutOfRange when
/// n is outside [0, 2g (+2 with base)].
SummandMultiset kunneth(unsigned g, unsigned n, Level level,
                        const CurveDescriptor* base = nullptr);

/// det(1 - Frob t | summand) as an integer polynomial:
///   Tensor(i,j):  (1 - q^j alpha^i t)(1 - q^j conj(alpha)^i t)
///   1_F(-j):      (1 - q^j t)^2
///   1(-j):        (1 - q^j t)
/// with a composed product against P1(C) when base_h1 is set.
/// Errors: NotOrdinary for supersingular curves, MissingBase.
IntPoly summand_charpoly(const MotiveSummand& s, const EllipticCurveData& e,
                         const CurveDescriptor* base = nullptr);

/// Zeta function of E^g (times C when base given), assembled
/// cohomologically: P_n = product of summand charpolys over
/// kunneth(g, n).
ZetaFunction assemble_zeta(const EllipticCurveData& e, unsigned g,
                           const CurveDescriptor* base = nullptr);

/// One entry of a Frobenius decomposition list: the summand
/// (tensor_F^r h^1(E_m))(s) over the field Q(sqrt(m)); r = 0 entries
/// are pure Tate twists.
struct DecompEntry {
  mpz_class m;
  unsigned r = 0;
  long s = 0;
};

struct MatchResult {
  std::optional<std::vector<std::size_t>> permutation;  // right[perm[i]] ~ left[i]
  std::string unmatched;                                // set on NoMatch
};

/// Eigenvalue-matching step of the decomposition uniqueness theorem:
/// computes each entry's rational polynomial
/// (1 - q^-s alpha^r t)(1 - q^-s conj(alpha)^r t) and greedily pairs
/// equal polynomials across the two lists. Polynomial equality forces
/// parameter equality (the r >= 1 factors are irreducible); that is
/// re-verified directly. alpha_by_m supplies an ordinary Frobenius per
/// field; all alphas share one q. Errors with NotOrdinary.
MatchResult match_decompositions(const std::vector<DecompEntry>& left,
                                 const std::vector<DecompEntry>& right,
                                 const mpz_class& q, const mpz_class& p,
                                 const std::map<mpz_class, WeilNumber>& alpha_by_m);

/// Deterministic ordinary Frobenius pick for Q(sqrt(m)) over F_q: the
/// first weight-one Weil integer (ascending y then x, y > 0) whose
/// trace is prime to p. Errors with NotOrdinary when none exists.
WeilNumber canonical_frobenius(const mpz_class& m, const mpz_class& q,
                               const mpz_class& p);

}  // namespace cmkit

#endif
