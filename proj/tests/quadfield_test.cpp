#include <doctest.h>

#include <random>
#include <set>

#include "cmkit/errors.hpp"
#include "cmkit/quadfield.hpp"

using namespace cmkit;

namespace {

// direct two-variable lattice scan of x^2 - m y^2 = q^w over the
// maximal order, counting solutions
long lattice_count(long m, long target) {
  long bound = 2;
  while (bound * bound < 4 * target) ++bound;
  long count = 0;
  // integer lattice a + b sqrt(m)
  for (long b = -bound; b <= bound; ++b)
    for (long a = -bound; a <= bound; ++a)
      if (a * a - m * b * b == target) ++count;
  // half-integer points (u/2 + v/2 sqrt(m)), u, v both odd
  if (((m % 4) + 4) % 4 == 1) {
    for (long v = -bound * 2 + 1; v <= bound * 2; v += 2)
      for (long u = -bound * 2 + 1; u <= bound * 2; u += 2)
        if (u * u - m * v * v == 4 * target) ++count;
  }
  return count;
}

QuadElement gaussian(long x, long y) { return qelem(mpz_class(-1), mpq_class(x), mpq_class(y)); }

}  // namespace

TEST_CASE("element arithmetic") {
  QuadElement a = gaussian(1, 2);
  CHECK(qnorm(a) == 5);
  CHECK(qtrace(a) == 2);
  CHECK(qconj(qconj(a)) == a);
  CHECK(qtrace(gaussian(0, 1)) == 0);
  CHECK(qmul(a, qconj(a)) == gaussian(5, 0));
  CHECK(qmul(a, qinv(a)) == gaussian(1, 0));
  CHECK_THROWS_AS(qinv(gaussian(0, 0)), DomainError);
  CHECK(qpow(a, 2) == gaussian(-3, 4));
  CHECK(qpow(a, 3) == gaussian(-11, -2));
  CHECK(qpow(a, -1) == qinv(a));
}

TEST_CASE("norm is multiplicative and conjugation is a ring map") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-20, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    QuadElement a = qelem(-7, mpq_class(c(rng), 2), mpq_class(c(rng), 2));
    QuadElement b = qelem(-7, mpq_class(c(rng), 2), mpq_class(c(rng), 2));
    CHECK(qnorm(qmul(a, b)) == qnorm(a) * qnorm(b));
    CHECK(qconj(qmul(a, b)) == qmul(qconj(a), qconj(b)));
    CHECK(qconj(qadd(a, b)) == qadd(qconj(a), qconj(b)));
  }
}

TEST_CASE("integrality in the maximal order") {
  CHECK(is_algebraic_integer(gaussian(1, 2)));
  CHECK(!is_algebraic_integer(qelem(-1, mpq_class(1, 2), mpq_class(1, 2))));
  // (1 + sqrt(-3))/2 lies in the maximal order
  CHECK(is_algebraic_integer(qelem(-3, mpq_class(1, 2), mpq_class(1, 2))));
  CHECK(!is_algebraic_integer(qelem(-3, mpq_class(1, 2), mpq_class(1))));
}

TEST_CASE("splitting types in Q(i)") {
  QuadField f = make_quad_field(-1);
  CHECK(f.disc == -4);
  CHECK(splitting_type(f, 5) == SplittingType::Split);
  CHECK(splitting_type(f, 2) == SplittingType::Ramified);
  CHECK(splitting_type(f, 3) == SplittingType::Inert);
  QuadField f3 = make_quad_field(-3);
  CHECK(f3.disc == -3);
  CHECK(splitting_type(f3, 3) == SplittingType::Ramified);
  CHECK(splitting_type(f3, 7) == SplittingType::Split);
  CHECK(splitting_type(f3, 5) == SplittingType::Inert);
}

TEST_CASE("p-adic valuations at a split prime") {
  // E0's Frobenius
  auto [v1, v2] = padic_valuations(gaussian(1, 2), 5);
  CHECK(v1 + v2 == 1);
  CHECK(((v1 == 1 && v2 == 0) || (v1 == 0 && v2 == 1)));

  // rational 5 is symmetric
  auto [r1, r2] = padic_valuations(gaussian(5, 0), 5);
  CHECK(r1 == 1);
  CHECK(r2 == 1);

  // squaring doubles the valuation
  auto [s1, s2] = padic_valuations(qpow(gaussian(1, 2), 2), 5);
  CHECK(s1 + s2 == 2);
  CHECK((s1 == 2 * v1 && s2 == 2 * v2));

  CHECK_THROWS_AS(padic_valuations(gaussian(1, 2), 3), DomainError);   // inert
  CHECK_THROWS_AS(padic_valuations(gaussian(0, 0), 5), DomainError);   // zero
}

TEST_CASE("valuations are additive and swap under conjugation") {
  QuadField f = make_quad_field(-1);
  auto weil = weil_enumerate(f, 5, 1);
  for (const auto& a : weil)
    for (const auto& b : weil) {
      auto [a1, a2] = padic_valuations(a.value, 5);
      auto [b1, b2] = padic_valuations(b.value, 5);
      auto [p1, p2] = padic_valuations(qmul(a.value, b.value), 5);
      CHECK(p1 == a1 + b1);
      CHECK(p2 == a2 + b2);
      auto [c1, c2] = padic_valuations(qconj(a.value), 5);
      CHECK(c1 == a2);
      CHECK(c2 == a1);
    }
}

TEST_CASE("weil number enumeration") {
  QuadField gi = make_quad_field(-1);
  auto w1 = weil_enumerate(gi, 5, 1);
  CHECK(w1.size() == 8);  // (+-1, +-2) and (+-2, +-1)
  std::set<std::pair<long, long>> coords;
  for (const auto& w : w1) {
    CHECK(qnorm(w.value) == 5);
    CHECK(is_algebraic_integer(w.value));
    coords.insert({static_cast<long>(w.value.x.get_num().get_si()),
                   static_cast<long>(w.value.y.get_num().get_si())});
  }
  CHECK(coords.size() == 8);

  auto w0 = weil_enumerate(gi, 5, 0);
  CHECK(w0.size() == 4);  // the units of Z[i]

  QuadField f3 = make_quad_field(-3);
  CHECK(weil_enumerate(f3, 5, 1).empty());
  CHECK(weil_enumerate(f3, 5, 0).size() == 6);  // sixth roots of unity

  // completeness against the direct lattice scan
  for (long m : {-1L, -2L, -3L, -7L}) {
    QuadField f = make_quad_field(m);
    for (long q : {5L, 7L, 13L})
      for (unsigned w = 0; w <= 2; ++w) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(q), w);
        CHECK(weil_enumerate(f, q, w).size() ==
              static_cast<std::size_t>(lattice_count(m, t.get_si())));
      }
  }
}

TEST_CASE("weil enumeration is ordered and duplicate-free") {
  QuadField f = make_quad_field(-7);
  auto ws = weil_enumerate(f, 11, 2);
  for (std::size_t k = 1; k < ws.size(); ++k) {
    bool ordered = ws[k - 1].value.y < ws[k].value.y ||
                   (ws[k - 1].value.y == ws[k].value.y && ws[k - 1].value.x < ws[k].value.x);
    CHECK(ordered);
  }
}

TEST_CASE("eigenvalue relation checks for the E0 Frobenius") {
  WeilNumber alpha = make_weil(gaussian(1, 2), 5, 1);
  WeilRelationReport rep = verify_weil_relations(alpha, 5, 4, 4);
  CHECK(rep.pass);
  CHECK(rep.witnesses.empty());
  CHECK(rep.cases_checked > 0);

  // q^2 / alpha^3 = (-11+2i)/5 is not an algebraic integer
  QuadElement ratio = qmul(gaussian(25, 0), qinv(qpow(gaussian(1, 2), 3)));
  CHECK(ratio == qelem(-1, mpq_class(-11, 5), mpq_class(2, 5)));
  CHECK(!is_algebraic_integer(ratio));

  // the degenerate instance r=1, beta=1: alpha itself is not rational
  CHECK(!qis_rational(gaussian(1, 2)));

  // a supersingular trace is rejected
  WeilNumber ss = make_weil(qelem(-5, mpq_class(0), mpq_class(1)), 5, 1);
  CHECK_THROWS_AS(verify_weil_relations(ss, 5, 3, 3), DomainError);
}

TEST_CASE("weil number constructor enforces the invariants") {
  CHECK_THROWS_AS(make_weil(gaussian(1, 1), 5, 1), DomainError);  // norm 2 != 5
  CHECK_THROWS_AS(make_weil(qelem(-1, mpq_class(1, 2), mpq_class(1, 2)), 5, 1),
                  DomainError);  // not integral
}
