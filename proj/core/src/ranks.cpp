#include "cmkit/ranks.hpp"

#include <algorithm>
#include <optional>

#include "cmkit/errors.hpp"

namespace cmkit {

namespace {

mpz_class pow_z(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

std::uint64_t binom_u64(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b.get_ui();
}

const WeilNumber& require_ordinary_alpha(const EllipticCurveData& e) {
  if (!e.ordinary || !e.alpha)
    fail(Errc::NotOrdinary, "operation requires an ordinary curve");
  return *e.alpha;
}

// Frobenius eigenvalue of a summand as an element of F = Q(sqrt(m)),
// together with its label; Tensor and UnitF summands carry two.
struct Eigenvalue {
  QuadElement value;
  std::string label;
};

std::vector<Eigenvalue> summand_eigenvalues(const MotiveSummand& s,
                                            const EllipticCurveData& e) {
  const WeilNumber& alpha = require_ordinary_alpha(e);
  const mpz_class q(static_cast<unsigned long>(e.field->q()));
  const mpq_class qj(pow_z(q, s.j));
  std::vector<Eigenvalue> out;
  switch (s.kind) {
    case SummandKind::Lefschetz:
      out.push_back({qelem(alpha.value.m, qj, 0), "q^" + std::to_string(s.j)});
      break;
    case SummandKind::UnitF:
      out.push_back({qelem(alpha.value.m, qj, 0), "q^" + std::to_string(s.j)});
      out.push_back({qelem(alpha.value.m, qj, 0), "q^" + std::to_string(s.j)});
      break;
    case SummandKind::Tensor: {
      QuadElement ai = qpow(alpha.value, static_cast<long>(s.i));
      QuadElement scale = qelem(alpha.value.m, qj, 0);
      out.push_back({qmul(scale, ai),
                     "q^" + std::to_string(s.j) + "*alpha^" + std::to_string(s.i)});
      out.push_back({qmul(scale, qconj(ai)),
                     "q^" + std::to_string(s.j) + "*conj(alpha)^" + std::to_string(s.i)});
      break;
    }
  }
  return out;
}

// Minimal polynomial of delta in the eigenvalue convention: (1 - delta t)
// for rational integral delta, (1 - delta t)(1 - conj(delta) t) for
// quadratic integral delta, nothing when delta is not an algebraic
// integer (it then cannot be an eigenvalue of an integral zeta part).
std::optional<IntPoly> eigen_minpoly(const QuadElement& delta) {
  if (!is_algebraic_integer(delta)) return std::nullopt;
  if (qis_rational(delta)) {
    return IntPoly{std::vector<mpz_class>{mpz_class(1), -delta.x.get_num()}};
  }
  mpq_class tr = qtrace(delta), nm = qnorm(delta);
  return IntPoly{std::vector<mpz_class>{mpz_class(1), -tr.get_num(), nm.get_num()}};
}

// Number of eigenvalues beta of P1(C) with gamma * beta = q^i, i.e. the
// multiplicity of q^i/gamma as an eigenvalue of P1.
std::uint64_t pairing_count(const IntPoly& p1, const QuadElement& gamma,
                            const mpz_class& qi) {
  QuadElement delta = qmul(qelem(gamma.m, mpq_class(qi), 0), qinv(gamma));
  auto mu = eigen_minpoly(delta);
  if (!mu) return 0;
  return static_cast<std::uint64_t>(root_multiplicity(p1, *mu));
}

}  // namespace

std::uint64_t tate_class_dim(const EllipticCurveData& e, unsigned g, unsigned i,
                             const CurveDescriptor* base,
                             std::vector<RankWitness>* witnesses) {
  require_ordinary_alpha(e);
  const unsigned dim = g + (base ? 1 : 0);
  if (i > dim) fail(Errc::DegreeOutOfRange, "codimension exceeds the dimension");
  const mpz_class q(static_cast<unsigned long>(e.field->q()));
  const mpz_class qi = pow_z(q, i);
  SummandMultiset ms = kunneth(g, 2 * i, Level::Q, base);
  std::uint64_t count = 0;
  for (const auto& [s, mult] : ms.entries) {
    if (!s.base_h1) {
      std::uint64_t contrib = 0;
      if (s.kind == SummandKind::Lefschetz) {
        contrib = (s.j == i) ? mult : 0;
      } else if (s.kind == SummandKind::UnitF) {
        contrib = (s.j == i) ? 2 * mult : 0;
      } else {
        // Tensor summands carry no Tate classes; verify rather than trust
        for (const auto& ev : summand_eigenvalues(s, e))
          if (qis_rational(ev.value) && ev.value.x == mpq_class(qi))
            fail(Errc::BadInput, "tensor summand produced a rational eigenvalue");
      }
      if (contrib > 0) {
        count += contrib;
        if (witnesses)
          witnesses->push_back({s.to_string(), "q^" + std::to_string(i), contrib, 1});
      }
    } else {
      for (const auto& ev : summand_eigenvalues(s, e)) {
        std::uint64_t k = pairing_count(base->p1, ev.value, qi);
        if (k > 0) {
          count += mult * k;
          if (witnesses)
            witnesses->push_back({s.to_string(), ev.label + " (x) h1(C)", mult, k});
        }
      }
    }
  }
  return count;
}

std::uint64_t hom_rank(const CurveDescriptor& c, const EllipticCurveData& e) {
  const WeilNumber& alpha = require_ordinary_alpha(e);
  const mpz_class q(static_cast<unsigned long>(e.field->q()));
  std::uint64_t acc = 0;
  acc += pairing_count(c.p1, alpha.value, q);
  acc += pairing_count(c.p1, qconj(alpha.value), q);
  return acc;
}

std::uint64_t picard_number(const EllipticCurveData& e, unsigned g,
                            const CurveDescriptor* base) {
  std::uint64_t by_eigenvalues = tate_class_dim(e, g, 1, base);
  // product closed form: NS(E^g) has rank g + 2*binom(g,2); a base
  // curve adds its hyperplane class and Hom(Alb(E^g), Jac C) = g
  // copies of Hom(E, Jac C)
  std::uint64_t closed = g + 2 * binom_u64(g, 2);
  if (base) closed += 1 + g * hom_rank(*base, e);
  if (g == 0 && !base) closed = 0;
  if (by_eigenvalues != closed)
    fail(Errc::BadInput, "Picard closed form disagrees with the eigenvalue count");
  return by_eigenvalues;
}

LFunction l_cohomological(const EllipticCurveData& e, unsigned g, unsigned i,
                          const CurveDescriptor& c) {
  require_ordinary_alpha(e);
  if (i < 1 || i > g) fail(Errc::DegreeOutOfRange, "need 1 <= i <= g");
  const mpz_class q(static_cast<unsigned long>(e.field->q()));
  SummandMultiset v = kunneth(g, 2 * i - 1, Level::Q);
  for (const auto& [s, mult] : v.entries) {
    (void)mult;
    if (s.weight() != 2 * i - 1)
      fail(Errc::BadInput, "odd-degree summand with wrong weight");
  }
  IntPoly chi_v = IntPoly::one();
  for (const auto& [s, mult] : v.entries)
    chi_v = chi_v * summand_charpoly(s, e).pow(mult);
  LFunction l;
  l.chi_v = chi_v;
  l.numerator = composed_product(c.p1, chi_v);
  l.denominator = chi_v * chi_v.scale_arg(q);
  // weights 2i-1 and 2i+1 on the denominator keep it away from t = q^-i
  mpq_class at = l.denominator.eval(mpq_class(1, pow_z(q, i)));
  if (at == 0) fail(Errc::BadInput, "denominator vanishes at t = q^-i");
  return l;
}

std::uint64_t bb_rank(const EllipticCurveData& e, unsigned g, unsigned i,
                      const CurveDescriptor& c, std::vector<RankWitness>* witnesses) {
  LFunction l = l_cohomological(e, g, i, c);
  const mpz_class q(static_cast<unsigned long>(e.field->q()));
  const mpz_class qi = pow_z(q, i);

  // route 1: pairing counts over the eigenvalues of V
  SummandMultiset v = kunneth(g, 2 * i - 1, Level::Q);
  std::uint64_t by_pairing = 0;
  for (const auto& [s, mult] : v.entries) {
    for (const auto& ev : summand_eigenvalues(s, e)) {
      std::uint64_t k = pairing_count(c.p1, ev.value, qi);
      if (k > 0) {
        by_pairing += mult * k;
        if (witnesses) witnesses->push_back({s.to_string(), ev.label, mult, k});
      }
    }
  }

  // route 2: order of vanishing of the numerator at t = q^-i
  std::uint64_t by_order = 0;
  if (!l.numerator.is_one())
    by_order = static_cast<std::uint64_t>(
        root_multiplicity(l.numerator, IntPoly::linear_eigen(qi)));
  if (by_pairing != by_order)
    fail(Errc::BadInput, "pairing count and order of vanishing disagree");
  return by_pairing;
}

EulerCheckResult l_euler_check(const EllipticCurveData& e, unsigned g, unsigned i,
                               const CurveDescriptor& c, unsigned N) {
  if (N == 0 || N > 12) fail(Errc::BadInput, "order must lie in [1, 12]");
  LFunction l = l_cohomological(e, g, i, c);
  const std::size_t order = N + 1;

  // Euler product over closed points, degree by degree. The degree-n
  // local factor is chi_V^(n)(t^n)^-1 with chi_V^(n)(u) =
  // prod_gamma (1 - gamma^n u), whose coefficients come out of Newton's
  // identities on the power sums of chi_V.
  std::vector<mpz_class> b = closed_point_counts(c, N);
  RatSeries ps = power_sum_series(l.chi_v, static_cast<std::size_t>(N) * 2 + 2);
  RatSeries euler(order);
  euler.coeff(0) = 1;
  for (unsigned n = 1; n <= N; ++n) {
    unsigned cap = std::min<unsigned>(N / n, static_cast<unsigned>(l.chi_v.degree()));
    // e_k(gamma^n) by Newton: k e_k = sum_{j<=k} (-1)^(j-1) e_{k-j} p_{nj}
    std::vector<mpq_class> el(cap + 1);
    el[0] = 1;
    for (unsigned k = 1; k <= cap; ++k) {
      mpq_class acc(0);
      for (unsigned j = 1; j <= k; ++j) {
        mpq_class term = el[k - j] * ps.coeff(static_cast<std::size_t>(n) * j);
        if (j % 2 == 0) acc -= term;
        else acc += term;
      }
      el[k] = acc / k;
    }
    RatSeries local(order);
    local.coeff(0) = 1;
    for (unsigned k = 1; k <= cap; ++k) {
      if (static_cast<std::size_t>(n) * k >= order) break;
      mpq_class coeff = el[k];
      if (k % 2 == 1) coeff = -coeff;
      if (coeff.get_den() != 1)
        fail(Errc::BadInput, "non-integral power-eigenvalue polynomial");
      local.coeff(static_cast<std::size_t>(n) * k) = coeff;
    }
    if (!b[n - 1].fits_ulong_p()) fail(Errc::TooLarge, "closed point count overflow");
    euler = euler * local.inverse().pow(b[n - 1].get_ui());
  }

  RatSeries coh = RatSeries::from_poly(l.numerator, order) *
                  RatSeries::from_poly(l.denominator, order).inverse();

  EulerCheckResult res;
  for (std::size_t k = 0; k < order; ++k) {
    if (euler.coeff(k) != coh.coeff(k)) {
      res.pass = false;
      res.first_mismatch = static_cast<long>(k);
      res.euler_side = euler.coeff(k);
      res.cohomological_side = coh.coeff(k);
      return res;
    }
  }
  return res;
}

}  // namespace cmkit
