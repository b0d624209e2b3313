#include "cmkit/quadfield.hpp"

#include <algorithm>
#include <sstream>

#include "cmkit/errors.hpp"

namespace cmkit {

namespace {

mpz_class mod4(const mpz_class& m) {
  mpz_class r = m % 4;
  if (r < 0) r += 4;
  return r;
}

bool is_squarefree(const mpz_class& n) {
  mpz_class a = abs(n);
  for (mpz_class d = 2; d * d <= a; ++d) {
    if (a % (d * d) == 0) return false;
    while (a % d == 0) a /= d;
  }
  return true;
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

void check_same_field(const QuadElement& a, const QuadElement& b) {
  if (a.m != b.m) fail(Errc::BadInput, "mixed quadratic fields");
}

long val_p(mpz_class n, const mpz_class& p) {
  if (n == 0) fail(Errc::ZeroElement, "valuation of zero");
  long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

// Least nonnegative s0 with s0^2 = m mod p, then a Newton lift of s0 to
// square-root precision p^N.
mpz_class hensel_sqrt(const mpz_class& m, const mpz_class& p, long N) {
  mpz_class s0 = -1;
  mpz_class mm = m % p;
  if (mm < 0) mm += p;
  for (mpz_class s = 0; s < p; ++s) {
    if ((s * s - mm) % p == 0) {
      s0 = s;
      break;
    }
  }
  if (s0 < 0) fail(Errc::NotSplit, "m has no square root mod p");
  mpz_class modulus = p;
  mpz_class s = s0;
  long prec = 1;
  while (prec < N) {
    modulus = modulus * modulus;
    prec *= 2;
    // s <- s - (s^2 - m) / (2s) mod modulus
    mpz_class den = 2 * s;
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
      fail(Errc::BadInput, "Hensel step not invertible (p = 2 is unsupported)");
    s = (s - (s * s - m) * den_inv) % modulus;
    if (s < 0) s += modulus;
  }
  mpz_class target = pow_z(p, static_cast<unsigned long>(N));
  s %= target;
  if (s < 0) s += target;
  // keep the branch with s = s0 mod p
  if ((s - s0) % p != 0) s = target - s;
  return s;
}

}  // namespace

QuadField make_quad_field(const mpz_class& m) {
  if (m >= 0) fail(Errc::BadInput, "m must be negative");
  if (!is_squarefree(m)) fail(Errc::BadInput, "m must be squarefree");
  QuadField f;
  f.m = m;
  f.disc = (mod4(m) == 1) ? m : 4 * m;
  return f;
}

QuadElement qelem(const mpz_class& m, const mpq_class& x, const mpq_class& y) {
  QuadElement a;
  a.m = m;
  a.x = x;
  a.y = y;
  a.x.canonicalize();
  a.y.canonicalize();
  return a;
}

QuadElement qadd(const QuadElement& a, const QuadElement& b) {
  check_same_field(a, b);
  return qelem(a.m, a.x + b.x, a.y + b.y);
}

QuadElement qsub(const QuadElement& a, const QuadElement& b) {
  check_same_field(a, b);
  return qelem(a.m, a.x - b.x, a.y - b.y);
}

QuadElement qmul(const QuadElement& a, const QuadElement& b) {
  check_same_field(a, b);
  return qelem(a.m, a.x * b.x + mpq_class(a.m) * a.y * b.y, a.x * b.y + a.y * b.x);
}

QuadElement qconj(const QuadElement& a) { return qelem(a.m, a.x, -a.y); }

QuadElement qneg(const QuadElement& a) { return qelem(a.m, -a.x, -a.y); }

QuadElement qinv(const QuadElement& a) {
  mpq_class n = qnorm(a);
  if (n == 0) fail(Errc::DivisionByZero, "inverse of zero");
  return qelem(a.m, a.x / n, -a.y / n);
}

QuadElement qpow(const QuadElement& a, long n) {
  QuadElement base = n < 0 ? qinv(a) : a;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  QuadElement acc = qelem(a.m, 1, 0);
  while (e > 0) {
    if (e & 1) acc = qmul(acc, base);
    base = qmul(base, base);
    e >>= 1;
  }
  return acc;
}

mpq_class qnorm(const QuadElement& a) { return a.x * a.x - mpq_class(a.m) * a.y * a.y; }

mpq_class qtrace(const QuadElement& a) { return 2 * a.x; }

bool qis_zero(const QuadElement& a) { return a.x == 0 && a.y == 0; }

bool qis_rational(const QuadElement& a) { return a.y == 0; }

bool is_algebraic_integer(const QuadElement& a) {
  mpq_class tx = 2 * a.x, ty = 2 * a.y;
  if (tx.get_den() != 1 || ty.get_den() != 1) return false;
  const mpz_class u = tx.get_num(), v = ty.get_num();
  if (mod4(a.m) == 1) return (u - v) % 2 == 0;
  return u % 2 == 0 && v % 2 == 0;
}

std::string qelem_to_string(const QuadElement& a) {
  std::ostringstream os;
  os << a.x.get_str() << (a.y >= 0 ? "+" : "") << a.y.get_str() << "*sqrt("
     << a.m.get_str() << ")";
  return os.str();
}

WeilNumber make_weil(const QuadElement& value, const mpz_class& q, unsigned weight) {
  if (!is_algebraic_integer(value))
    fail(Errc::BadInput, "Weil number must be an algebraic integer");
  if (qnorm(value) != pow_z(q, weight))
    fail(Errc::BadInput, "Weil number norm must be q^w");
  return WeilNumber{value, q, weight};
}

const char* splitting_name(SplittingType s) {
  switch (s) {
    case SplittingType::Split: return "split";
    case SplittingType::Inert: return "inert";
    case SplittingType::Ramified: return "ramified";
  }
  return "?";
}

SplittingType splitting_type(const QuadField& field, const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
    fail(Errc::NotPrime, "splitting_type needs a prime");
  if (mpz_divisible_p(field.disc.get_mpz_t(), p.get_mpz_t())) return SplittingType::Ramified;
  int k = mpz_kronecker(field.disc.get_mpz_t(), p.get_mpz_t());
  return k == 1 ? SplittingType::Split : SplittingType::Inert;
}

std::pair<long, long> padic_valuations(const QuadElement& alpha, const mpz_class& p) {
  if (qis_zero(alpha)) fail(Errc::ZeroElement, "valuations of zero");
  if (p == 2) fail(Errc::BadInput, "p = 2 is unsupported by the Hensel lift");
  QuadField field = make_quad_field(alpha.m);
  if (splitting_type(field, p) != SplittingType::Split)
    fail(Errc::NotSplit, "p does not split");
  mpq_class n = qnorm(alpha);
  // alpha integral in all uses; scale by 2 to absorb half-integer coords
  mpq_class txq = 2 * alpha.x, tyq = 2 * alpha.y;
  if (txq.get_den() != 1 || tyq.get_den() != 1)
    fail(Errc::BadInput, "element is not half-integral");
  const mpz_class u = txq.get_num(), v = tyq.get_num();
  if (n.get_den() != 1) fail(Errc::BadInput, "element is not an algebraic integer");
  long vn = val_p(n.get_num(), p);
  long N = vn + 2;
  mpz_class s = hensel_sqrt(alpha.m, p, N);
  mpz_class target = pow_z(p, static_cast<unsigned long>(N));
  auto read_val = [&](const mpz_class& image) -> long {
    mpz_class r = image % target;
    if (r < 0) r += target;
    if (r == 0) return N;  // saturated; cannot happen when N > v_p(norm)
    return val_p(r, p);
  };
  long v1 = read_val(u + v * s);
  long v2 = read_val(u - v * s);
  if (v1 + v2 != vn) fail(Errc::BadInput, "valuation bookkeeping failed");
  return {v1, v2};
}

std::vector<WeilNumber> weil_enumerate(const QuadField& field, const mpz_class& q,
                                       unsigned w) {
  // Scaled lattice: u^2 - m v^2 = 4 q^w with u = v mod 2; when m != 1
  // mod 4 additionally u, v both even (so x, y are integers).
  const mpz_class target = 4 * pow_z(q, w);
  const mpz_class am = -field.m;
  const bool half_lattice = (mod4(field.m) == 1);
  mpz_class vmax;
  mpz_class bound = target / am;
  mpz_sqrt(vmax.get_mpz_t(), bound.get_mpz_t());
  std::vector<WeilNumber> out;
  for (mpz_class v = -vmax; v <= vmax; ++v) {
    mpz_class rhs = target - am * v * v;
    if (rhs < 0) continue;
    mpz_class u;
    mpz_sqrt(u.get_mpz_t(), rhs.get_mpz_t());
    if (u * u != rhs) continue;
    for (int sign = 0; sign < 2; ++sign) {
      mpz_class uu = sign == 0 ? -u : u;
      if (sign == 1 && u == 0) continue;
      if ((uu - v) % 2 != 0) continue;
      if (!half_lattice && (uu % 2 != 0 || v % 2 != 0)) continue;
      QuadElement e = qelem(field.m, mpq_class(uu, 2), mpq_class(v, 2));
      out.push_back(make_weil(e, q, w));
    }
  }
  // ascending (y, x); v loop is already ascending, u covered -u then +u
  std::sort(out.begin(), out.end(), [](const WeilNumber& a, const WeilNumber& b) {
    if (a.value.y != b.value.y) return a.value.y < b.value.y;
    return a.value.x < b.value.x;
  });
  return out;
}

WeilRelationReport verify_weil_relations(const WeilNumber& alpha, const mpz_class& p,
                                         unsigned R, unsigned S) {
  mpq_class tr = qtrace(alpha.value);
  if (tr.get_den() != 1) fail(Errc::BadInput, "alpha must be integral");
  if (mpz_divisible_p(tr.get_num().get_mpz_t(), p.get_mpz_t()))
    fail(Errc::NotOrdinary, "trace divisible by p");
  if (R < 1 || S < 1) fail(Errc::BadInput, "bounds must be >= 1");
  if (!mpz_divisible_p(alpha.q.get_mpz_t(), p.get_mpz_t()))
    fail(Errc::BadInput, "q must be a power of p");

  QuadField field = make_quad_field(alpha.value.m);
  const mpz_class& q = alpha.q;
  WeilRelationReport rep;

  auto is_power_of_q = [&](const QuadElement& g) {
    if (!qis_rational(g)) return false;
    if (g.x.get_den() != 1) return false;
    mpz_class v = g.x.get_num();
    if (v <= 0) return false;
    mpz_class acc(1);
    while (acc < v) acc *= q;
    return acc == v;
  };

  // (ii) alpha^r * beta is not a power of q for weights w < r.
  for (unsigned r = 1; r <= R; ++r) {
    QuadElement ar = qpow(alpha.value, static_cast<long>(r));
    for (unsigned w = 0; w < r; ++w) {
      for (const WeilNumber& beta : weil_enumerate(field, q, w)) {
        ++rep.cases_checked;
        QuadElement g = qmul(ar, beta.value);
        if (is_power_of_q(g)) {
          rep.pass = false;
          rep.witnesses.push_back("alpha^" + std::to_string(r) + " * " +
                                  qelem_to_string(beta.value) + " = " +
                                  qelem_to_string(g));
        }
      }
    }
  }

  // (ii) corollary: q^s / alpha^(2s-1) is never an algebraic integer.
  auto [v1, v2] = padic_valuations(alpha.value, p);
  long e_val = val_p(q, p);
  for (unsigned s = 2; s <= S; ++s) {
    ++rep.cases_checked;
    long w1 = static_cast<long>(s) * e_val - (2 * static_cast<long>(s) - 1) * v1;
    long w2 = static_cast<long>(s) * e_val - (2 * static_cast<long>(s) - 1) * v2;
    if (w1 >= 0 && w2 >= 0) {
      rep.pass = false;
      rep.witnesses.push_back("q^" + std::to_string(s) + "/alpha^" +
                              std::to_string(2 * s - 1) + " is integral");
    }
  }

  // (iii) alpha^r * beta != q^s for weight-one beta outside the pair.
  for (const WeilNumber& beta : weil_enumerate(field, q, 1)) {
    if (beta.value == alpha.value || beta.value == qconj(alpha.value)) continue;
    for (long r = -static_cast<long>(R); r <= static_cast<long>(R); ++r) {
      QuadElement g = qmul(qpow(alpha.value, r), beta.value);
      for (long s = -static_cast<long>(S); s <= static_cast<long>(S); ++s) {
        ++rep.cases_checked;
        mpq_class qs(1);
        if (s >= 0) qs = pow_z(q, static_cast<unsigned long>(s));
        else qs = mpq_class(1) / mpq_class(pow_z(q, static_cast<unsigned long>(-s)));
        if (qis_rational(g) && g.x == qs) {
          rep.pass = false;
          rep.witnesses.push_back("alpha^" + std::to_string(r) + " * " +
                                  qelem_to_string(beta.value) + " = q^" +
                                  std::to_string(s));
        }
      }
    }
  }
  return rep;
}

}  // namespace cmkit
