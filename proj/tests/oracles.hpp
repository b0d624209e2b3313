// Brute-force reference computations for the test suite. These stay
// independent of the library code paths they are used to check: complex
// quadratic arithmetic is redone here on scaled integer coordinates,
// point counts walk F_p directly with int64 arithmetic, and tensor
// decompositions are expanded word by word.

#ifndef CMKIT_TESTS_ORACLES_HPP
#define CMKIT_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

// (u + v*sqrt(m))/2 with integral u, v: closed under multiplication for
// elements of the maximal order.
struct Half {
  mpz_class u, v;
};

inline Half half_mul(const Half& a, const Half& b, const mpz_class& m) {
  mpz_class u = a.u * b.u + m * a.v * b.v;
  mpz_class v = a.u * b.v + a.v * b.u;
  if (u % 2 != 0 || v % 2 != 0) throw std::runtime_error("oracle: non-integral product");
  return Half{u / 2, v / 2};
}

inline Half half_pow(Half a, unsigned g, const mpz_class& m) {
  Half acc{2, 0};  // the element 1
  while (g > 0) {
    if (g & 1) acc = half_mul(acc, a, m);
    a = half_mul(a, a, m);
    g >>= 1;
  }
  return acc;
}

// trace and norm of ((u + v sqrt(m))/2)^g
inline std::pair<mpz_class, mpz_class> alpha_power_trace_norm(const mpz_class& u,
                                                              const mpz_class& v,
                                                              const mpz_class& m,
                                                              unsigned g) {
  Half ag = half_pow(Half{u, v}, g, m);
  mpz_class norm4 = ag.u * ag.u - m * ag.v * ag.v;
  if (norm4 % 4 != 0) throw std::runtime_error("oracle: norm not divisible by 4");
  return {ag.u, norm4 / 4};
}

// Eigenvalue key (j, d): q^j * alpha^d for d > 0, q^j * conj(alpha)^(-d)
// for d < 0, q^j for d = 0.
using EigenKey = std::pair<unsigned, long>;
using EigenMultiset = std::map<EigenKey, std::uint64_t>;

// All 2^g words over {alpha, conj(alpha)}, reduced by
// alpha*conj(alpha) = q; fix_first pins the initial letter to alpha
// (the F-level normalization).
inline EigenMultiset word_expansion(unsigned g, bool fix_first) {
  EigenMultiset out;
  if (g == 0) {
    out[{0u, 0l}] = 1;
    return out;
  }
  const std::uint64_t words = std::uint64_t{1} << (fix_first ? g - 1 : g);
  for (std::uint64_t w = 0; w < words; ++w) {
    unsigned a = fix_first ? 1 : 0;
    for (unsigned bit = 0; bit < (fix_first ? g - 1 : g); ++bit)
      if ((w >> bit) & 1) ++a;
    unsigned b = g - a;
    unsigned j = std::min(a, b);
    long d = static_cast<long>(a) - static_cast<long>(b);
    out[{j, d}] += 1;
  }
  return out;
}

// |{(x, y) in F_p^2 : y^2 = x^3 + Ax + B}| + 1, by direct search.
inline long prime_field_curve_count(long p, long a, long b) {
  auto powmod = [&](long base, long e) {
    long acc = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (e > 0) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return acc;
  };
  long count = 1;
  for (long x = 0; x < p; ++x) {
    long f = ((x * x % p) * x % p + a % p * x % p + b % p) % p;
    if (f < 0) f += p;
    if (f == 0) {
      count += 1;
      continue;
    }
    long chi = powmod(f, (p - 1) / 2);
    if (chi == 1) count += 2;
  }
  return count;
}

}  // namespace oracle

#endif
