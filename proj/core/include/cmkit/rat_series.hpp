#ifndef CMKIT_RAT_SERIES_HPP
#define CMKIT_RAT_SERIES_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "cmkit/int_poly.hpp"

namespace cmkit {

/// Power series over Q truncated at a fixed order N: exactly the
/// coefficients of t^0 .. t^(N-1) are kept, arithmetic is closed under
/// the truncation. Coefficients stay exact rationals; integrality where
/// expected is asserted by callers, never assumed.
class RatSeries {
 public:
  explicit RatSeries(std::size_t order) : c_(order) {}
  RatSeries(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {}

  static RatSeries from_poly(const IntPoly& p, std::size_t order);

  std::size_t order() const { return c_.size(); }
  const mpq_class& coeff(std::size_t k) const { return c_.at(k); }
  mpq_class& coeff(std::size_t k) { return c_.at(k); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator-(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
  friend bool operator==(const RatSeries& a, const RatSeries& b) { return a.c_ == b.c_; }

  /// Multiplicative inverse; needs an invertible constant term.
  RatSeries inverse() const;
  RatSeries pow(unsigned long e) const;

 private:
  std::vector<mpq_class> c_;
};

/// Power sums of the eigenvalues of p: sum_i gamma_i^n at index n for
/// 1 <= n < order, index 0 set to zero. Computed from -t p'(t)/p(t).
RatSeries power_sum_series(const IntPoly& p, std::size_t order);

enum class ZetaPart { Numerator, Denominator };

/// Point-count generating data of an alternating product: index n holds
/// the Lefschetz number sum_{denominator factors} gamma^n - sum
/// {numerator factors} gamma^n for 1 <= n <= max_n (order max_n + 1,
/// index 0 zero). All factors must have constant term 1.
RatSeries series_log_zeta(const std::vector<std::pair<IntPoly, ZetaPart>>& factors,
                          std::size_t max_n);

}  // namespace cmkit

#endif
