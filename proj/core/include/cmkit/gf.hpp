#ifndef CMKIT_GF_HPP
#define CMKIT_GF_HPP

#include <cstdint>
#include <vector>

namespace cmkit {

class PrimePowerField;

/// Element of F_{p^e}: coordinate vector of length e over F_p in the
/// basis 1, x, ..., x^(e-1) of F_p[x]/(modulus), coordinates reduced
/// mod p.
struct GFElement {
  const PrimePowerField* field = nullptr;
  std::vector<std::uint32_t> c;

  friend bool operator==(const GFElement& a, const GFElement& b) {
    return a.field == b.field && a.c == b.c;
  }
};

/// F_{p^e} with the deterministic modulus: the lexicographically least
/// monic irreducible polynomial of degree e over F_p (coefficients
/// compared low-degree first). All fields are enumerable: construction
/// rejects p^e beyond the desk-scale bound.
class PrimePowerField {
 public:
  static constexpr std::uint64_t enumeration_bound = std::uint64_t{1} << 22;

  /// Errors: NotPrime when p is not prime, TooLarge when p^e exceeds the
  /// enumeration bound (or e == 0).
  PrimePowerField(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint64_t q() const { return q_; }
  /// Monic, length e+1, coefficients in [0, p).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  GFElement zero() const;
  GFElement one() const;
  /// Base-p digit decoding of k in [0, q).
  GFElement from_index(std::uint64_t k) const;
  std::uint64_t index(const GFElement& a) const;
  /// Image of the integer n under Z -> F_p -> F_{p^e}.
  GFElement from_int(long n) const;

  GFElement add(const GFElement& a, const GFElement& b) const;
  GFElement sub(const GFElement& a, const GFElement& b) const;
  GFElement neg(const GFElement& a) const;
  GFElement mul(const GFElement& a, const GFElement& b) const;
  GFElement inv(const GFElement& a) const;  // DivisionByZero on 0
  GFElement pow(const GFElement& a, std::uint64_t n) const;

  bool is_zero(const GFElement& a) const;

 private:
  std::uint32_t p_, e_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
};

/// Quadratic character of x: 0 iff x = 0, +1 iff x is a nonzero square
/// (decided by x^((q-1)/2)), -1 otherwise. Errors with
/// EvenCharacteristic when p = 2.
int quad_character(const GFElement& x);

bool is_prime_u64(std::uint64_t n);

}  // namespace cmkit

#endif
