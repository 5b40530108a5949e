#pragma once

#include <vector>

namespace hfc {

/// Parameters of the Jacobi polynomial P_n^(alpha,beta).
struct JacobiParams {
    double alpha = 0.0;
    double beta = 0.0;
    int n = 1;
};

/// Throws DomainError unless alpha > -1, beta > -1 and n >= min_degree.
void validate(const JacobiParams& params, int min_degree = 1);

/// P_n^(alpha,beta)(x) by the three-term recurrence. Degree 0 is accepted here.
double jacobi_eval(const JacobiParams& params, double x);

/// First or second derivative of P_n^(alpha,beta) at x.
double jacobi_deriv(const JacobiParams& params, double x, int order);

/// The n zeros of P_n^(alpha,beta), strictly increasing, all in (-1, 1).
///
/// Newton iteration with deflation against the zeros already found, started
/// from the Chebyshev angles cos((2k-1)pi/(2n)). If that does not produce n
/// distinct zeros meeting the residual bound, the zeros are bracketed on a
/// grid uniform in arccos(x) and refined by bisection. Throws
/// NumericalFailure if both routes fail.
std::vector<double> jacobi_zeros(const JacobiParams& params);

/// K_n kept in log space: value = sign * exp(log_magnitude).
struct LogValue {
    double log_magnitude = 0.0;
    int sign = 1;

    double value() const;
};

/// K_n = 2^{2n} n! Gamma(alpha+beta+n+1) / Gamma(alpha+beta+2n+1).
LogValue leading_constant(const JacobiParams& params);

}  // namespace hfc

namespace hfc::detail {

/// Bracketing fallback used by jacobi_zeros; exposed for testing.
std::vector<double> jacobi_zeros_bisection(const JacobiParams& params);

/// Residual bound |P_n(x)| <= 1e-12 * max(1, |P_n'(x)|) required of every zero.
bool zero_residual_ok(const JacobiParams& params, double x);

}  // namespace hfc::detail
