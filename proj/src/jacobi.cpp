#include "hfcircle/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hfcircle/error.hpp"

namespace hfc {

namespace {

constexpr double kZeroResidualTol = 1e-12;
constexpr int kMaxNewtonIterations = 100;

double eval_recurrence(double a, double b, int n, double x) {
    if (n == 0) return 1.0;
    const double p1 = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
    if (n == 1) return p1;
    double prev = 1.0;
    double cur = p1;
    const double ab = a + b;
    for (int m = 2; m <= n; ++m) {
        const double s = 2.0 * m + ab;
        const double denom = 2.0 * m * (m + ab) * (s - 2.0);
        const double c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double c2 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * s;
        const double next = (c1 * cur - c2 * prev) / denom;
        prev = cur;
        cur = next;
    }
    return cur;
}

// d^order/dx^order P_n^(a,b) = prod_{j<order} (n+a+b+1+j)/2 * P_{n-order}^(a+order,b+order)
double deriv_identity(double a, double b, int n, double x, int order) {
    if (n < order) return 0.0;
    double factor = 1.0;
    for (int j = 0; j < order; ++j) factor *= 0.5 * (n + a + b + 1.0 + j);
    return factor * eval_recurrence(a + order, b + order, n - order, x);
}

bool zeros_acceptable(const JacobiParams& params, const std::vector<double>& zeros) {
    if (zeros.size() != static_cast<std::size_t>(params.n)) return false;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const double x = zeros[i];
        if (!std::isfinite(x) || x <= -1.0 || x >= 1.0) return false;
        if (i > 0 && !(zeros[i - 1] < x)) return false;
        if (!detail::zero_residual_ok(params, x)) return false;
    }
    return true;
}

std::vector<double> newton_deflated(const JacobiParams& params) {
    const int n = params.n;
    std::vector<double> zeros;
    zeros.reserve(n);
    for (int k = 1; k <= n; ++k) {
        double x = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n));
        for (int it = 0; it < kMaxNewtonIterations; ++it) {
            const double p = eval_recurrence(params.alpha, params.beta, n, x);
            const double dp = deriv_identity(params.alpha, params.beta, n, x, 1);
            double shift = 0.0;
            for (double r : zeros) shift += 1.0 / (x - r);
            const double denom = dp - p * shift;
            if (denom == 0.0 || !std::isfinite(denom)) break;
            const double step = p / denom;
            x -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
        }
        // A couple of undeflated steps restore full accuracy.
        for (int it = 0; it < 3; ++it) {
            const double dp = deriv_identity(params.alpha, params.beta, n, x, 1);
            if (dp == 0.0) break;
            const double step = eval_recurrence(params.alpha, params.beta, n, x) / dp;
            if (!std::isfinite(step)) break;
            x -= step;
        }
        zeros.push_back(x);
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

}  // namespace

void validate(const JacobiParams& params, int min_degree) {
    if (!(params.alpha > -1.0) || !(params.beta > -1.0) || !std::isfinite(params.alpha) ||
        !std::isfinite(params.beta)) {
        std::ostringstream msg;
        msg << "Jacobi parameters must satisfy alpha > -1 and beta > -1 (got alpha=" << params.alpha
            << ", beta=" << params.beta << ")";
        throw DomainError(msg.str());
    }
    if (params.n < min_degree) {
        std::ostringstream msg;
        msg << "Jacobi degree must be >= " << min_degree << " (got " << params.n << ")";
        throw DomainError(msg.str());
    }
}

double jacobi_eval(const JacobiParams& params, double x) {
    validate(params, 0);
    return eval_recurrence(params.alpha, params.beta, params.n, x);
}

double jacobi_deriv(const JacobiParams& params, double x, int order) {
    if (order != 1 && order != 2) {
        throw UnsupportedOrder("jacobi_deriv supports orders 1 and 2, got " + std::to_string(order));
    }
    validate(params, 0);
    return deriv_identity(params.alpha, params.beta, params.n, x, order);
}

std::vector<double> jacobi_zeros(const JacobiParams& params) {
    validate(params);
    auto zeros = newton_deflated(params);
    if (zeros_acceptable(params, zeros)) return zeros;
    zeros = detail::jacobi_zeros_bisection(params);
    if (zeros_acceptable(params, zeros)) return zeros;
    std::ostringstream msg;
    msg << "jacobi_zeros: could not isolate " << params.n << " zeros for alpha=" << params.alpha
        << ", beta=" << params.beta;
    throw NumericalFailure(msg.str());
}

double LogValue::value() const { return sign * std::exp(log_magnitude); }

LogValue leading_constant(const JacobiParams& params) {
    validate(params);
    const double n = params.n;
    const double ab = params.alpha + params.beta;
    LogValue out;
    out.log_magnitude = 2.0 * n * std::numbers::ln2 + std::lgamma(n + 1.0) + std::lgamma(ab + n + 1.0) -
                        std::lgamma(ab + 2.0 * n + 1.0);
    out.sign = 1;
    return out;
}

namespace detail {

bool zero_residual_ok(const JacobiParams& params, double x) {
    const double p = eval_recurrence(params.alpha, params.beta, params.n, x);
    const double dp = deriv_identity(params.alpha, params.beta, params.n, x, 1);
    return std::abs(p) <= kZeroResidualTol * std::max(1.0, std::abs(dp));
}

std::vector<double> jacobi_zeros_bisection(const JacobiParams& params) {
    validate(params);
    const int n = params.n;
    auto P = [&](double x) { return eval_recurrence(params.alpha, params.beta, n, x); };
    std::vector<double> zeros;
    // Grid uniform in theta = arccos(x) resolves the endpoint clustering.
    for (int grid = 64 * n; grid <= 4096 * n; grid *= 4) {
        zeros.clear();
        double x_prev = std::cos(std::numbers::pi / grid);
        double p_prev = P(x_prev);
        for (int i = 2; i < grid; ++i) {
            const double x = std::cos(std::numbers::pi * i / grid);
            const double p = P(x);
            if (p == 0.0) {
                zeros.push_back(x);
            } else if (p_prev != 0.0 && std::signbit(p) != std::signbit(p_prev)) {
                double hi = x_prev;
                double lo = x;
                double p_lo = p;
                for (int it = 0; it < 200 && lo < hi; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (mid <= lo || mid >= hi) break;
                    const double pm = P(mid);
                    if (pm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if (std::signbit(pm) == std::signbit(p_lo)) {
                        lo = mid;
                        p_lo = pm;
                    } else {
                        hi = mid;
                    }
                }
                const double root = std::abs(P(lo)) <= std::abs(P(hi)) ? lo : hi;
                zeros.push_back(root);
            }
            x_prev = x;
            p_prev = p;
        }
        if (zeros.size() == static_cast<std::size_t>(n)) break;
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

}  // namespace detail

}  // namespace hfc
