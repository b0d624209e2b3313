#include "cmkit/int_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cmkit/errors.hpp"

namespace cmkit {

namespace {

using QPoly = std::vector<mpq_class>;  // ascending, not normalized

int qdeg(const QPoly& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[static_cast<std::size_t>(d)] == 0) --d;
  return d;
}

void qtrim(QPoly& f) { f.resize(static_cast<std::size_t>(qdeg(f) + 1)); }

// Remainder of f modulo g over Q, deg g >= 0.
QPoly qrem(QPoly f, const QPoly& g) {
  int dg = qdeg(g);
  const mpq_class& lg = g[static_cast<std::size_t>(dg)];
  for (int k = qdeg(f); k >= dg; --k) {
    mpq_class c = f[static_cast<std::size_t>(k)] / lg;
    if (c == 0) continue;
    for (int i = 0; i <= dg; ++i)
      f[static_cast<std::size_t>(k - dg + i)] -= c * g[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(k)] = 0;
  }
  qtrim(f);
  return f;
}

QPoly qderiv(const QPoly& f) {
  QPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(mpq_class(k) * f[k]);
  qtrim(d);
  return d;
}

QPoly qmonic(QPoly f) {
  int d = qdeg(f);
  if (d < 0) return f;
  mpq_class l = f[static_cast<std::size_t>(d)];
  for (auto& c : f) c /= l;
  return f;
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (qdeg(b) >= 0) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return qmonic(a);
}

QPoly to_qpoly(const IntPoly& p) {
  QPoly f;
  f.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) f.emplace_back(c);
  return f;
}

int sign_of(const mpq_class& x) { return sgn(x); }

}  // namespace

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  normalize();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const mpz_class& c) {
  IntPoly p;
  p.c_.push_back(c);
  p.normalize();
  return p;
}

IntPoly IntPoly::linear_eigen(const mpz_class& gamma) {
  IntPoly p;
  p.c_.emplace_back(1);
  p.c_.push_back(-gamma);
  p.normalize();
  return p;
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(std::size_t k) const {
  static const mpz_class zero(0);
  return k < c_.size() ? c_[k] : zero;
}

mpz_class IntPoly::eval(const mpz_class& t) const {
  mpz_class acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

mpq_class IntPoly::eval(const mpq_class& t) const {
  mpq_class acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(mpz_class(k) * c_[k]);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const {
  if (is_zero() || c_[0] == 0)
    fail(Errc::ZeroConstantTerm, "reversal needs a nonzero constant term");
  std::vector<mpz_class> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scale_arg(const mpz_class& c) const {
  std::vector<mpz_class> out(c_.size());
  mpz_class f(1);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    out[k] = c_[k] * f;
    f *= c;
  }
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> s(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) s[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) s[k] += b.c_[k];
  return IntPoly(std::move(s));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator-(const IntPoly& a) {
  std::vector<mpz_class> s(a.c_);
  for (auto& c : s) c = -c;
  return IntPoly(std::move(s));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> s(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) s[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(s));
}

IntPoly IntPoly::pow(unsigned long e) const {
  IntPoly acc = IntPoly::one();
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << (c_[k] > 0 ? " + " : " - ");
    else if (c_[k] < 0) os << "-";
    mpz_class a = abs(c_[k]);
    if (k == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) fail(Errc::NonDivisible, "division by the zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) fail(Errc::NonDivisible, "degree too small");
  QPoly rem = to_qpoly(a);
  const QPoly g = to_qpoly(b);
  int dg = b.degree();
  const mpq_class lg(b.coeff(static_cast<std::size_t>(dg)));
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - dg + 1));
  for (int k = a.degree(); k >= dg; --k) {
    mpq_class c = rem[static_cast<std::size_t>(k)] / lg;
    quot[static_cast<std::size_t>(k - dg)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dg; ++i)
      rem[static_cast<std::size_t>(k - dg + i)] -= c * g[static_cast<std::size_t>(i)];
  }
  if (qdeg(rem) >= 0) fail(Errc::NonDivisible, "nonzero remainder");
  std::vector<mpz_class> zq;
  zq.reserve(quot.size());
  for (const auto& c : quot) {
    if (c.get_den() != 1) fail(Errc::NonDivisible, "non-integer quotient");
    zq.push_back(c.get_num());
  }
  return IntPoly(std::move(zq));
}

int root_multiplicity(const IntPoly& p, const IntPoly& mu) {
  if (p.is_zero()) fail(Errc::BadInput, "root_multiplicity of the zero polynomial");
  if (mu.degree() < 1) fail(Errc::BadInput, "modulus must be non-constant");
  IntPoly cur = p;
  int k = 0;
  while (cur.degree() >= mu.degree()) {
    try {
      cur = exact_div(cur, mu);
    } catch (const DomainError&) {
      break;
    }
    ++k;
  }
  return k;
}

mpq_class resultant(std::vector<mpq_class> f, std::vector<mpq_class> g) {
  qtrim(f);
  qtrim(g);
  int df = qdeg(f), dg = qdeg(g);
  if (df < 0 || dg < 0) return mpq_class(0);
  mpq_class acc(1);
  // Res(f,g) = lc(g)^(df-dr) * (-1)^(df*dg) * Res(g, f mod g)
  while (true) {
    df = qdeg(f);
    dg = qdeg(g);
    if (dg == 0) {
      mpq_class l = g[0];
      mpq_class p(1);
      for (int i = 0; i < df; ++i) p *= l;
      return acc * p;
    }
    QPoly r = qrem(f, g);
    int dr = qdeg(r);
    if (dr < 0) return mpq_class(0);
    const mpq_class& lg = g[static_cast<std::size_t>(dg)];
    mpq_class lp(1);
    for (int i = 0; i < df - dr; ++i) lp *= lg;
    acc *= lp;
    if ((df % 2) && (dg % 2)) acc = -acc;
    f = std::move(g);
    g = std::move(r);
  }
}

namespace {

// Lagrange interpolation through (x_k, v_k), exact over Q.
QPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& vs) {
  // Newton form, then expand.
  std::size_t n = xs.size();
  std::vector<mpq_class> dd(vs);  // divided differences, in place
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k)
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
  QPoly poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly = poly * (t - x_k) + dd[k]
    poly.insert(poly.begin(), mpq_class(0));
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) poly[i] -= xs[k] * poly[i + 1];
    poly[0] += dd[k];
  }
  return poly;
}

}  // namespace

IntPoly composed_product(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || p.coeff(0) == 0 || q.is_zero() || q.coeff(0) == 0)
    fail(Errc::ZeroConstantTerm, "composed_product needs nonzero constant terms");
  const int d = p.degree(), m = q.degree();
  if (d == 0 || m == 0) {
    // No eigenvalues on one side: empty product.
    return IntPoly::one();
  }
  // The reversed form A(y) of p has roots = eigenvalues of p. The
  // composed roots are cut out by Res_y(A(y), y^m q(x/y)); the
  // homogenization y^m q(x/y) has y^j-coefficient q_j * x^(m-j). The
  // resultant is recovered by evaluation at deg(p)*deg(q)+1 points and
  // exact interpolation.
  const IntPoly a = p.reversed();
  const int dd = d * m;
  QPoly af = to_qpoly(a);
  std::vector<mpq_class> xs, vs;
  xs.reserve(static_cast<std::size_t>(dd) + 1);
  vs.reserve(static_cast<std::size_t>(dd) + 1);
  long x0 = 0;
  for (int k = 0; k <= dd; ++k) {
    mpq_class x(x0);
    QPoly bs(static_cast<std::size_t>(m) + 1);
    mpq_class powx(1);
    for (int j = m; j >= 0; --j) {
      bs[static_cast<std::size_t>(j)] = mpq_class(q.coeff(static_cast<std::size_t>(j))) * powx;
      powx *= x;
    }
    xs.push_back(x);
    vs.push_back(resultant(af, bs));
    x0 = (x0 > 0) ? -x0 : -x0 + 1;  // 0, 1, -1, 2, -2, ...
  }
  QPoly res = interpolate(xs, vs);
  qtrim(res);
  if (qdeg(res) != dd) fail(Errc::BadInput, "composed_product degree defect");
  std::vector<mpz_class> rz(static_cast<std::size_t>(dd) + 1);
  for (int k = 0; k <= dd; ++k) {
    const mpq_class& c = res[static_cast<std::size_t>(k)];
    if (c.get_den() != 1) fail(Errc::BadInput, "composed_product non-integral result");
    // reverse back to the eigenvalue convention
    rz[static_cast<std::size_t>(dd - k)] = c.get_num();
  }
  return IntPoly(std::move(rz));
}

IntPoly weil_dual(const IntPoly& p, const mpz_class& q, unsigned d) {
  if (p.is_zero() || p.coeff(0) == 0)
    fail(Errc::ZeroConstantTerm, "weil_dual needs a nonzero constant term");
  const int deg = p.degree();
  if (deg == 0) return IntPoly::one();
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
  // Q[j] = c_{deg-j} * qd^j / c_deg
  const mpz_class& lead = p.coeff(static_cast<std::size_t>(deg));
  std::vector<mpz_class> out(static_cast<std::size_t>(deg) + 1);
  mpz_class f(1);
  for (int j = 0; j <= deg; ++j) {
    mpq_class c(p.coeff(static_cast<std::size_t>(deg - j)) * f, lead);
    c.canonicalize();
    if (c.get_den() != 1) fail(Errc::BadInput, "weil_dual does not land in Z[t]");
    out[static_cast<std::size_t>(j)] = c.get_num();
    f *= qd;
  }
  return IntPoly(std::move(out));
}

namespace sturm {

namespace {

int sign_at(const QPoly& f, const Endpoint& e) {
  int d = qdeg(f);
  if (d < 0) return 0;
  switch (e.kind) {
    case Endpoint::Finite: {
      mpq_class acc(0);
      for (int k = d; k >= 0; --k) acc = acc * e.value + f[static_cast<std::size_t>(k)];
      return sign_of(acc);
    }
    case Endpoint::PosInf:
      return sign_of(f[static_cast<std::size_t>(d)]);
    case Endpoint::NegInf:
      return (d % 2 == 0) ? sign_of(f[static_cast<std::size_t>(d)])
                          : -sign_of(f[static_cast<std::size_t>(d)]);
  }
  return 0;
}

int sign_changes(const std::vector<QPoly>& chain, const Endpoint& e) {
  int changes = 0, prev = 0;
  for (const auto& f : chain) {
    int s = sign_at(f, e);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::vector<mpq_class> squarefree_part(const std::vector<mpq_class>& p) {
  QPoly f(p);
  qtrim(f);
  if (qdeg(f) <= 0) return f;
  QPoly g = qgcd(f, qderiv(f));
  if (qdeg(g) == 0) return qmonic(f);
  // exact division f / g over Q
  QPoly quot(static_cast<std::size_t>(qdeg(f) - qdeg(g) + 1));
  QPoly rem = f;
  int dg = qdeg(g);
  const mpq_class lg = g[static_cast<std::size_t>(dg)];
  for (int k = qdeg(rem); k >= dg; --k) {
    mpq_class c = rem[static_cast<std::size_t>(k)] / lg;
    quot[static_cast<std::size_t>(k - dg)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dg; ++i)
      rem[static_cast<std::size_t>(k - dg + i)] -= c * g[static_cast<std::size_t>(i)];
  }
  return qmonic(quot);
}

int count_real_roots(const std::vector<mpq_class>& p, const Endpoint& a,
                     const Endpoint& b) {
  QPoly f(p);
  qtrim(f);
  if (qdeg(f) <= 0) return 0;
  std::vector<QPoly> chain;
  chain.push_back(f);
  chain.push_back(qderiv(f));
  while (qdeg(chain.back()) > 0) {
    QPoly r = qrem(chain[chain.size() - 2], chain.back());
    if (qdeg(r) < 0) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return sign_changes(chain, a) - sign_changes(chain, b);
}

}  // namespace sturm

}  // namespace cmkit
