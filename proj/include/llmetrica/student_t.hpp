#pragma once

namespace llmetrica {

/// I_x(a, b), the regularized incomplete beta function. Throws DomainError
/// on invalid arguments.
double regularized_incomplete_beta(double a, double b, double x);

/// P(T <= t) for Student's t with `df` degrees of freedom (df > 0, real).
double student_t_cdf(double t, double df);

/// The q with P(T <= q) = 1 - alpha, i.e. the one-sided upper-alpha critical
/// value.
double t_quantile(double df, double alpha);

}  // namespace llmetrica
