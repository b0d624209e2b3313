#include "cmkit/rat_series.hpp"

#include <algorithm>

#include "cmkit/errors.hpp"

namespace cmkit {

namespace {

void check_same_order(const RatSeries& a, const RatSeries& b) {
  if (a.order() != b.order())
    fail(Errc::BadInput, "series truncation orders differ");
}

}  // namespace

RatSeries RatSeries::from_poly(const IntPoly& p, std::size_t order) {
  RatSeries s(order);
  const std::size_t n = std::min<std::size_t>(order, p.coeffs().size());
  for (std::size_t k = 0; k < n; ++k) s.c_[k] = mpq_class(p.coeffs()[k]);
  return s;
}

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
  check_same_order(a, b);
  RatSeries s(a.order());
  for (std::size_t k = 0; k < a.order(); ++k) s.c_[k] = a.c_[k] + b.c_[k];
  return s;
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) {
  check_same_order(a, b);
  RatSeries s(a.order());
  for (std::size_t k = 0; k < a.order(); ++k) s.c_[k] = a.c_[k] - b.c_[k];
  return s;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  check_same_order(a, b);
  RatSeries s(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < b.order(); ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return s;
}

RatSeries RatSeries::inverse() const {
  if (c_.empty() || c_[0] == 0)
    fail(Errc::DivisionByZero, "series inverse needs a unit constant term");
  RatSeries inv(order());
  inv.c_[0] = 1 / c_[0];
  for (std::size_t n = 1; n < order(); ++n) {
    mpq_class acc(0);
    for (std::size_t k = 1; k <= n; ++k)
      if (k < c_.size() && c_[k] != 0) acc += c_[k] * inv.c_[n - k];
    inv.c_[n] = -acc / c_[0];
  }
  return inv;
}

RatSeries RatSeries::pow(unsigned long e) const {
  RatSeries acc(order());
  acc.coeff(0) = 1;
  RatSeries base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

RatSeries power_sum_series(const IntPoly& p, std::size_t order) {
  if (p.is_zero() || p.coeff(0) == 0)
    fail(Errc::ZeroConstantTerm, "power sums need a nonzero constant term");
  // -t p'(t)/p(t) = sum_{n>=1} (sum_i gamma_i^n) t^n
  RatSeries num(order);
  const IntPoly d = p.derivative();
  for (std::size_t k = 0; k + 1 < order && k < d.coeffs().size(); ++k)
    num.coeff(k + 1) = -mpq_class(d.coeffs()[k]);
  return num * RatSeries::from_poly(p, order).inverse();
}

RatSeries series_log_zeta(const std::vector<std::pair<IntPoly, ZetaPart>>& factors,
                          std::size_t max_n) {
  RatSeries acc(max_n + 1);
  for (const auto& [poly, part] : factors) {
    if (poly.is_zero() || poly.coeff(0) != 1)
      fail(Errc::BadInput, "series_log_zeta factors must have constant term 1");
    RatSeries ps = power_sum_series(poly, max_n + 1);
    acc = (part == ZetaPart::Denominator) ? acc + ps : acc - ps;
  }
  return acc;
}

}  // namespace cmkit
