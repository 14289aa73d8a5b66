#include "llmetrica/student_t.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <string>

#include "llmetrica/errors.hpp"

namespace llmetrica {

namespace {

void check_df(double df, const char* who) {
  if (!(df > 0.0) || !std::isfinite(df)) throw DomainError(std::string(who) + ": df must be positive and finite");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("incomplete beta: shape parameters must be positive and finite");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete beta: x must lie in [0, 1]");
  return boost::math::ibeta(a, b, x);
}

double student_t_cdf(double t, double df) {
  check_df(df, "t distribution");
  if (std::isnan(t)) throw DomainError("t distribution: t is NaN");
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  return boost::math::cdf(boost::math::students_t(df), t);
}

double t_quantile(double df, double alpha) {
  check_df(df, "t_quantile");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("t_quantile: alpha must lie in (0, 1)");
  if (alpha == 0.5) return 0.0;
  return boost::math::quantile(boost::math::complement(boost::math::students_t(df), alpha));
}

}  // namespace llmetrica
