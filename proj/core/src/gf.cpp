#include "cmkit/gf.hpp"

#include <algorithm>
#include <cstdlib>

#include "cmkit/errors.hpp"

namespace cmkit {

namespace {

// Dense polynomials over F_p as uint32 vectors, ascending, used for the
// modulus search. Lengths are tiny (e <= 22).
using FpPoly = std::vector<std::uint32_t>;

int fp_deg(const FpPoly& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[static_cast<std::size_t>(d)] == 0) --d;
  return d;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
  std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  // reduce mod m (monic)
  int dm = fp_deg(m);
  for (int k = static_cast<int>(acc.size()) - 1; k >= dm; --k) {
    std::uint64_t c = acc[static_cast<std::size_t>(k)] % p;
    if (c == 0) continue;
    acc[static_cast<std::size_t>(k)] = 0;
    for (int i = 0; i < dm; ++i) {
      std::uint64_t sub = c * m[static_cast<std::size_t>(i)] % p;
      std::size_t idx = static_cast<std::size_t>(k - dm + i);
      acc[idx] = (acc[idx] + p - sub) % p;
    }
  }
  FpPoly out(static_cast<std::size_t>(dm), 0);
  for (int i = 0; i < dm; ++i) out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(acc[static_cast<std::size_t>(i)] % p);
  return out;
}

// x^(p^k) mod m by repeated p-th powering of x.
FpPoly fp_frobenius_power(const FpPoly& m, std::uint64_t p, unsigned k) {
  int dm = fp_deg(m);
  FpPoly x(static_cast<std::size_t>(dm), 0);
  if (dm > 1) x[1] = 1;
  else {
    // degree-1 modulus: x reduces to a constant
    x[0] = static_cast<std::uint32_t>((p - m[0] % p) % p);
  }
  FpPoly acc = x;
  for (unsigned round = 0; round < k; ++round) {
    // acc <- acc^p via square-and-multiply
    FpPoly result(static_cast<std::size_t>(dm), 0);
    result[0] = 1;
    FpPoly base = acc;
    std::uint64_t expo = p;
    while (expo > 0) {
      if (expo & 1) result = fp_mulmod(result, base, m, p);
      base = fp_mulmod(base, base, m, p);
      expo >>= 1;
    }
    acc = std::move(result);
  }
  return acc;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  auto mod = [&](FpPoly f, const FpPoly& g) {
    int dg = fp_deg(g);
    std::uint64_t lg = g[static_cast<std::size_t>(dg)];
    // inverse of lg mod p
    std::uint64_t inv = 1, base = lg % p, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int k = fp_deg(f); k >= dg; --k) {
      std::uint64_t c = f[static_cast<std::size_t>(k)] % p * inv % p;
      if (c == 0) continue;
      for (int i = 0; i <= dg; ++i) {
        std::size_t idx = static_cast<std::size_t>(k - dg + i);
        std::uint64_t sub = c * g[static_cast<std::size_t>(i)] % p;
        f[idx] = static_cast<std::uint32_t>((f[idx] + p - sub) % p);
      }
    }
    f.resize(static_cast<std::size_t>(fp_deg(f) + 1));
    return f;
  };
  a.resize(static_cast<std::size_t>(fp_deg(a) + 1));
  b.resize(static_cast<std::size_t>(fp_deg(b) + 1));
  while (fp_deg(b) >= 0) {
    FpPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f monic of degree e over F_p is irreducible iff x^(p^e) = x mod f and
// gcd(x^(p^(e/r)) - x, f) = 1 for every prime r | e.
bool fp_is_irreducible(const FpPoly& f, std::uint64_t p) {
  int e = fp_deg(f);
  if (e == 1) return true;
  FpPoly frob_e = fp_frobenius_power(f, p, static_cast<unsigned>(e));
  // frob_e must equal x
  FpPoly x(static_cast<std::size_t>(e), 0);
  x[1] = 1;
  if (frob_e != x) return false;
  for (int r = 2; r <= e; ++r) {
    if (e % r != 0) continue;
    bool r_prime = true;
    for (int s = 2; s * s <= r; ++s)
      if (r % s == 0) { r_prime = false; break; }
    if (!r_prime) continue;
    FpPoly fr = fp_frobenius_power(f, p, static_cast<unsigned>(e / r));
    // fr - x
    FpPoly diff = fr;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    FpPoly g = fp_gcd(f, diff, p);
    if (fp_deg(g) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePowerField::PrimePowerField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
  if (!is_prime_u64(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) fail(Errc::TooLarge, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t k = 0; k < e; ++k) {
    q *= p;
    if (q > enumeration_bound) fail(Errc::TooLarge, "p^e exceeds the enumeration bound");
  }
  q_ = q;
  // Least monic irreducible, coefficients compared low-degree first:
  // scan constant-first odometer order.
  std::uint64_t low_count = 1;
  for (std::uint32_t k = 0; k < e; ++k) low_count *= p;
  for (std::uint64_t idx = 0;; ++idx) {
    if (idx >= low_count) fail(Errc::BadInput, "no irreducible polynomial found");
    FpPoly f(e + 1, 0);
    f[e] = 1;
    std::uint64_t rest = idx;
    for (std::uint32_t k = 0; k < e; ++k) {
      // big-endian on (c_0, ..., c_{e-1}) so index order = lex order
      std::uint64_t place = 1;
      for (std::uint32_t j = 0; j < e - 1 - k; ++j) place *= p;
      f[k] = static_cast<std::uint32_t>(rest / place);
      rest %= place;
    }
    if (fp_is_irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }
}

GFElement PrimePowerField::zero() const { return GFElement{this, std::vector<std::uint32_t>(e_, 0)}; }

GFElement PrimePowerField::one() const {
  GFElement a = zero();
  a.c[0] = 1 % p_;
  return a;
}

GFElement PrimePowerField::from_index(std::uint64_t k) const {
  GFElement a = zero();
  for (std::uint32_t i = 0; i < e_; ++i) {
    a.c[i] = static_cast<std::uint32_t>(k % p_);
    k /= p_;
  }
  return a;
}

std::uint64_t PrimePowerField::index(const GFElement& a) const {
  std::uint64_t k = 0;
  for (std::uint32_t i = e_; i-- > 0;) k = k * p_ + a.c[i];
  return k;
}

GFElement PrimePowerField::from_int(long n) const {
  long r = n % static_cast<long>(p_);
  if (r < 0) r += p_;
  GFElement a = zero();
  a.c[0] = static_cast<std::uint32_t>(r);
  return a;
}

GFElement PrimePowerField::add(const GFElement& a, const GFElement& b) const {
  GFElement s = zero();
  for (std::uint32_t i = 0; i < e_; ++i) s.c[i] = (a.c[i] + b.c[i]) % p_;
  return s;
}

GFElement PrimePowerField::sub(const GFElement& a, const GFElement& b) const {
  GFElement s = zero();
  for (std::uint32_t i = 0; i < e_; ++i) s.c[i] = (a.c[i] + p_ - b.c[i]) % p_;
  return s;
}

GFElement PrimePowerField::neg(const GFElement& a) const { return sub(zero(), a); }

GFElement PrimePowerField::mul(const GFElement& a, const GFElement& b) const {
  GFElement s = zero();
  FpPoly prod = fp_mulmod(a.c, b.c, modulus_, p_);
  for (std::uint32_t i = 0; i < e_ && i < prod.size(); ++i) s.c[i] = prod[i];
  return s;
}

GFElement PrimePowerField::inv(const GFElement& a) const {
  if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

GFElement PrimePowerField::pow(const GFElement& a, std::uint64_t n) const {
  GFElement acc = one();
  GFElement base = a;
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

bool PrimePowerField::is_zero(const GFElement& a) const {
  return std::all_of(a.c.begin(), a.c.end(), [](std::uint32_t v) { return v == 0; });
}

int quad_character(const GFElement& x) {
  const PrimePowerField& f = *x.field;
  if (f.p() == 2) fail(Errc::EvenCharacteristic, "quadratic character needs odd p");
  if (f.is_zero(x)) return 0;
  GFElement r = f.pow(x, (f.q() - 1) / 2);
  return r == f.one() ? +1 : -1;
}

}  // namespace cmkit
