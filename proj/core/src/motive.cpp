#include "cmkit/motive.hpp"

#include <algorithm>

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
  if (!b.fits_ulong_p()) fail(Errc::TooLarge, "binomial overflow");
  return b.get_ui();
}

std::uint64_t multinomial_u64(unsigned n, unsigned k1, unsigned k2) {
  // n! / (k1! k2! (n-k1-k2)!)
  return binom_u64(n, k1) * binom_u64(n - k1, k2);
}

const WeilNumber& require_ordinary_alpha(const EllipticCurveData& e) {
  if (!e.ordinary || !e.alpha)
    fail(Errc::NotOrdinary, "operation requires an ordinary curve");
  return *e.alpha;
}

}  // namespace

std::string MotiveSummand::to_string() const {
  std::string s;
  switch (kind) {
    case SummandKind::Lefschetz: s = "1(-" + std::to_string(j) + ")"; break;
    case SummandKind::UnitF: s = "1_F(-" + std::to_string(j) + ")"; break;
    case SummandKind::Tensor:
      s = (conj ? "conj(T^" : "T^") + std::to_string(i) + (conj ? ")" : "") + "(-" +
          std::to_string(j) + ")";
      break;
  }
  if (base_h1) s += "*h1C";
  return s;
}

void SummandMultiset::add(const MotiveSummand& s, std::uint64_t mult) {
  if (mult == 0) return;
  entries[s] += mult;
}

std::uint64_t SummandMultiset::total_q_dimension(std::uint64_t two_gc) const {
  std::uint64_t acc = 0;
  for (const auto& [s, m] : entries) acc += m * s.q_dimension(two_gc);
  return acc;
}

std::uint64_t SummandMultiset::total_multiplicity() const {
  std::uint64_t acc = 0;
  for (const auto& [s, m] : entries) acc += m;
  return acc;
}

SummandMultiset cm_tensor_decompose(unsigned g, Level level) {
  if (g > 30) fail(Errc::TooLarge, "g too large for 64-bit multiplicities");
  SummandMultiset f;
  f.level = Level::F;
  if (g == 0) {
    f.add(MotiveSummand{SummandKind::Lefschetz, 0, 0, false, false}, 1);
  } else {
    f.add(MotiveSummand{SummandKind::Tensor, 1, 0, false, false}, 1);
    for (unsigned step = 1; step < g; ++step) {
      SummandMultiset next;
      next.level = Level::F;
      for (const auto& [s, mult] : f.entries) {
        if (s.kind == SummandKind::Tensor) {
          next.add(MotiveSummand{SummandKind::Tensor, s.i + 1, s.j, s.conj, false}, mult);
          if (s.i == 1)
            next.add(MotiveSummand{SummandKind::UnitF, 0, s.j + 1, false, false}, mult);
          else
            next.add(MotiveSummand{SummandKind::Tensor, s.i - 1, s.j + 1, s.conj, false},
                     mult);
        } else {  // UnitF
          next.add(MotiveSummand{SummandKind::Tensor, 1, s.j, false, false}, mult);
          next.add(MotiveSummand{SummandKind::Tensor, 1, s.j, true, false}, mult);
        }
      }
      f = std::move(next);
    }
  }
  if (level == Level::F) return f;
  SummandMultiset q;
  q.level = Level::Q;
  for (const auto& [s, mult] : f.entries) {
    if (s.kind == SummandKind::UnitF)
      q.add(MotiveSummand{SummandKind::Lefschetz, 0, s.j, false, false}, 2 * mult);
    else if (s.kind == SummandKind::Tensor)
      q.add(MotiveSummand{SummandKind::Tensor, s.i, s.j, false, false}, mult);
    else
      q.add(s, mult);
  }
  return q;
}

std::map<std::pair<unsigned, unsigned>, std::uint64_t> cm_recurrence_table(unsigned g) {
  // a_{i,0} = 1; a_{i,j} = a_{i-1,j} + a_{i+1,j-1}
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> memo;
  auto a = [&](auto&& self, long i, long j) -> std::uint64_t {
    if (i < 0 || j < 0) return 0;
    if (j == 0) return 1;
    auto key = std::make_pair(static_cast<unsigned>(i), static_cast<unsigned>(j));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::uint64_t v = self(self, i - 1, j) + self(self, i + 1, j - 1);
    memo[key] = v;
    return v;
  };
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> out;
  for (unsigned j = 0; 2 * j <= g; ++j) {
    unsigned i = g - 2 * j;
    out[{i, j}] = a(a, i, j);
  }
  return out;
}

namespace {

SummandMultiset twist(const SummandMultiset& in, unsigned by) {
  SummandMultiset out;
  out.level = in.level;
  for (const auto& [s, m] : in.entries) {
    MotiveSummand t = s;
    t.j += by;
    out.add(t, m);
  }
  return out;
}

SummandMultiset flag_base(const SummandMultiset& in) {
  SummandMultiset out;
  out.level = in.level;
  for (const auto& [s, m] : in.entries) {
    MotiveSummand t = s;
    t.base_h1 = true;
    out.add(t, m);
  }
  return out;
}

SummandMultiset kunneth_fiber(unsigned g, unsigned n, Level level) {
  SummandMultiset out;
  out.level = level;
  for (unsigned l = 0; 2 * l <= n; ++l) {
    unsigned k = n - 2 * l;
    if (k + l > g) continue;
    std::uint64_t ways = multinomial_u64(g, k, l);
    SummandMultiset part = twist(cm_tensor_decompose(k, level), l);
    for (const auto& [s, m] : part.entries) out.add(s, m * ways);
  }
  return out;
}

}  // namespace

SummandMultiset kunneth(unsigned g, unsigned n, Level level, const CurveDescriptor* base) {
  const unsigned top = 2 * g + (base ? 2 : 0);
  if (n > top) fail(Errc::DegreeOutOfRange, "n must lie in [0, " + std::to_string(top) + "]");
  SummandMultiset out;
  if (!base) {
    out = kunneth_fiber(g, n, level);
    if (out.total_q_dimension() != binom_u64(2 * g, n))
      fail(Errc::BadInput, "Kuenneth dimension bookkeeping failed");
    return out;
  }
  out.level = level;
  // h(C) = 1 + h^1(C) + 1(-1): three layers
  if (n <= 2 * g) {
    for (const auto& [s, m] : kunneth_fiber(g, n, level).entries) out.add(s, m);
  }
  if (n >= 1 && n - 1 <= 2 * g) {
    for (const auto& [s, m] : flag_base(kunneth_fiber(g, n - 1, level)).entries)
      out.add(s, m);
  }
  if (n >= 2 && n - 2 <= 2 * g) {
    for (const auto& [s, m] : twist(kunneth_fiber(g, n - 2, level), 1).entries)
      out.add(s, m);
  }
  const std::uint64_t two_gc = 2 * base->genus;
  std::uint64_t expected = 0;
  if (n <= 2 * g) expected += binom_u64(2 * g, n);
  if (n >= 1 && n - 1 <= 2 * g) expected += two_gc * binom_u64(2 * g, n - 1);
  if (n >= 2 && n - 2 <= 2 * g) expected += binom_u64(2 * g, n - 2);
  if (out.total_q_dimension(two_gc) != expected)
    fail(Errc::BadInput, "Kuenneth dimension bookkeeping failed (with base)");
  return out;
}

IntPoly summand_charpoly(const MotiveSummand& s, const EllipticCurveData& e,
                         const CurveDescriptor* base) {
  const mpz_class q(static_cast<unsigned long>(e.field->q()));
  const mpz_class qj = pow_z(q, s.j);
  IntPoly core;
  switch (s.kind) {
    case SummandKind::Lefschetz:
      core = IntPoly::linear_eigen(qj);
      break;
    case SummandKind::UnitF:
      core = IntPoly::linear_eigen(qj) * IntPoly::linear_eigen(qj);
      break;
    case SummandKind::Tensor: {
      const WeilNumber& alpha = require_ordinary_alpha(e);
      QuadElement ai = qpow(alpha.value, static_cast<long>(s.i));
      mpq_class tr = qtrace(ai), nm = qnorm(ai);
      if (tr.get_den() != 1 || nm.get_den() != 1)
        fail(Errc::BadInput, "non-integral trace/norm of alpha^i");
      if (nm.get_num() != pow_z(q, s.i))
        fail(Errc::BadInput, "norm of alpha^i is not q^i");
      // (1 - q^j a^i t)(1 - q^j conj(a)^i t) = 1 - q^j Tr t + q^(2j+i) t^2
      core = IntPoly{std::vector<mpz_class>{
          mpz_class(1), -qj * tr.get_num(), pow_z(q, 2 * s.j + s.i)}};
      break;
    }
  }
  if (!s.base_h1) return core;
  if (!base) fail(Errc::MissingBase, "summand carries an h^1(C) factor");
  if (base->genus == 0) return IntPoly::one();
  return composed_product(base->p1, core);
}

void ZetaFunction::validate() const {
  if (parts.size() != 2 * dim + 1) fail(Errc::BadInput, "zeta part count mismatch");
  for (const auto& p : parts)
    if (p.is_zero() || p.coeff(0) != 1)
      fail(Errc::BadInput, "zeta parts must have constant term 1");
  for (unsigned n = 0; n <= 2 * dim; ++n) {
    if (parts[n].degree() != parts[2 * dim - n].degree())
      fail(Errc::BadInput, "functional equation degree symmetry fails");
    if (weil_dual(parts[n], q, dim) != parts[2 * dim - n])
      fail(Errc::BadInput, "functional equation fails");
  }
}

ZetaFunction assemble_zeta(const EllipticCurveData& e, unsigned g,
                           const CurveDescriptor* base) {
  if (g > 0) require_ordinary_alpha(e);
  ZetaFunction z;
  z.q = mpz_class(static_cast<unsigned long>(e.field->q()));
  z.dim = g + (base ? 1 : 0);
  for (unsigned n = 0; n <= 2 * z.dim; ++n) {
    IntPoly part = IntPoly::one();
    for (const auto& [s, m] : kunneth(g, n, Level::Q, base).entries)
      part = part * summand_charpoly(s, e, base).pow(m);
    z.parts.push_back(part);
  }
  z.validate();
  return z;
}

WeilNumber canonical_frobenius(const mpz_class& m, const mpz_class& q,
                               const mpz_class& p) {
  QuadField f = make_quad_field(m);
  for (const WeilNumber& w : weil_enumerate(f, q, 1)) {
    if (w.value.y <= 0) continue;
    mpq_class tr = qtrace(w.value);
    if (tr.get_den() != 1) continue;
    if (!mpz_divisible_p(tr.get_num().get_mpz_t(), p.get_mpz_t())) return w;
  }
  fail(Errc::NotOrdinary, "no ordinary Frobenius of norm q in Q(sqrt(" + m.get_str() + "))");
}

namespace {

// rational coefficients [1, c1, c2] of (1 - q^-s a^r t)(1 - q^-s conj(a)^r t)
std::vector<mpq_class> entry_poly(const DecompEntry& e, const mpz_class& q,
                                  const std::map<mpz_class, WeilNumber>& alpha_by_m) {
  mpq_class qs;
  if (e.s >= 0) {
    qs = mpq_class(1) / mpq_class(pow_z(q, static_cast<unsigned long>(e.s)));
  } else {
    qs = mpq_class(pow_z(q, static_cast<unsigned long>(-e.s)));
  }
  if (e.r == 0) {
    // (1 - q^-s t)^2
    return {mpq_class(1), -2 * qs, qs * qs};
  }
  auto it = alpha_by_m.find(e.m);
  if (it == alpha_by_m.end())
    fail(Errc::BadInput, "no Frobenius supplied for m=" + e.m.get_str());
  QuadElement ar = qpow(it->second.value, static_cast<long>(e.r));
  return {mpq_class(1), -qs * qtrace(ar), qs * qs * qnorm(ar)};
}

}  // namespace

MatchResult match_decompositions(const std::vector<DecompEntry>& left,
                                 const std::vector<DecompEntry>& right,
                                 const mpz_class& q, const mpz_class& p,
                                 const std::map<mpz_class, WeilNumber>& alpha_by_m) {
  for (const auto& [m, w] : alpha_by_m) {
    mpq_class tr = qtrace(w.value);
    if (tr.get_den() != 1 ||
        mpz_divisible_p(tr.get_num().get_mpz_t(), p.get_mpz_t()))
      fail(Errc::NotOrdinary, "supplied Frobenius is not ordinary (m=" + m.get_str() + ")");
  }
  MatchResult res;
  if (left.size() != right.size()) {
    res.unmatched = "size mismatch";
    return res;
  }
  std::vector<std::vector<mpq_class>> lp, rp;
  for (const auto& e : left) lp.push_back(entry_poly(e, q, alpha_by_m));
  for (const auto& e : right) rp.push_back(entry_poly(e, q, alpha_by_m));
  std::vector<bool> used(right.size(), false);
  std::vector<std::size_t> perm(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j] || lp[i] != rp[j]) continue;
      // ordinarity makes the r >= 1 factors irreducible, so polynomial
      // equality force parameter equality; verify directly
      if (left[i].r != right[j].r || left[i].s != right[j].s ||
          (left[i].r >= 1 && left[i].m != right[j].m))
        fail(Errc::BadInput, "equal polynomials with unequal parameters");
      used[j] = true;
      perm[i] = j;
      found = true;
      break;
    }
    if (!found) {
      res.unmatched = "left entry " + std::to_string(i) + " (m=" + left[i].m.get_str() +
                      ", r=" + std::to_string(left[i].r) +
                      ", s=" + std::to_string(left[i].s) + ") has no partner";
      return res;
    }
  }
  res.permutation = std::move(perm);
  return res;
}

}  // namespace cmkit
