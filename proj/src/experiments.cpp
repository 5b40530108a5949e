#include "hfcircle/experiments.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "hfcircle/error.hpp"

namespace hfc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_samples(int m_samples) {
    if (m_samples < kMinSamples) {
        throw InputError("at least " + std::to_string(kMinSamples) + " circle samples are required, got " +
                         std::to_string(m_samples));
    }
}

// B_{2k} / (2k+1)!, k = 1..15.
constexpr std::array<double, 15> kDilogBernoulli = {
    1.0 / 36.0,
    -1.0 / 3600.0,
    1.0 / 211680.0,
    -1.0 / 10886400.0,
    1.0 / 526901760.0,
    -4.0647616451442255e-11,
    8.9216910204564526e-13,
    -1.9939295860721076e-14,
    4.5189800296199182e-16,
    -1.0356517612181247e-17,
    2.3952186210261867e-19,
    -5.5817858743250093e-21,
    1.3091507554183213e-22,
    -3.0874198024267403e-24,
    7.315975652702203e-26,
};

// Li_2 for |z| <= 1 and Re z <= 1/2, via the Bernoulli series in u = -log(1-z).
cplx dilog_core(cplx z) {
    const cplx u = -std::log(1.0 - z);
    const cplx u2 = u * u;
    cplx term = u * u2;
    cplx sum = u - 0.25 * u2;
    for (double b : kDilogBernoulli) {
        sum += b * term;
        term *= u2;
    }
    return sum;
}

}  // namespace

std::string_view to_string(QuantityKind kind) {
    switch (kind) {
        case QuantityKind::lebesgue_constant: return "lebesgue_constant";
        case QuantityKind::sup_error: return "sup_error";
        case QuantityKind::lk_bound_ratio: return "lk_bound_ratio";
        case QuantityKind::cpk_ratio: return "cpk_ratio";
        case QuantityKind::omega: return "omega";
    }
    return "unknown";
}

void sort_records(std::vector<ExperimentRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
        if (a.n != b.n) return a.n < b.n;
        return to_string(a.kind) < to_string(b.kind);
    });
}

std::string_view to_string(TestFunction f) {
    switch (f) {
        case TestFunction::one: return "one";
        case TestFunction::z: return "z";
        case TestFunction::z8: return "z8";
        case TestFunction::exp: return "exp";
        case TestFunction::pole: return "pole";
        case TestFunction::rough: return "rough";
    }
    return "unknown";
}

TestFunction parse_test_function(std::string_view name) {
    for (auto f : {TestFunction::one, TestFunction::z, TestFunction::z8, TestFunction::exp, TestFunction::pole,
                   TestFunction::rough}) {
        if (to_string(f) == name) return f;
    }
    throw InputError("unknown test function '" + std::string(name) + "'");
}

ComplexFunction make_test_function(TestFunction f) {
    switch (f) {
        case TestFunction::one: return [](cplx) { return cplx(1.0, 0.0); };
        case TestFunction::z: return [](cplx z) { return z; };
        case TestFunction::z8: return [](cplx z) {
            const cplx z2 = z * z;
            const cplx z4 = z2 * z2;
            return z4 * z4;
        };
        case TestFunction::exp: return [](cplx z) { return std::exp(z); };
        case TestFunction::pole: return [](cplx z) { return 1.0 / (z - 2.0); };
        case TestFunction::rough: return [](cplx z) { return dilog(z); };
    }
    throw InputError("unknown test function");
}

cplx dilog(cplx z) {
    constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    if (z == cplx(0.0, 0.0)) return 0.0;
    if (z == cplx(1.0, 0.0)) return pi2_6;
    // The margin keeps |z| = 1 from bouncing between z and 1/z under rounding;
    // the core series still converges just outside the disk.
    if (std::norm(z) > 1.0 + 1e-9) {
        const cplx l = std::log(-z);
        return -dilog(1.0 / z) - pi2_6 - 0.5 * l * l;
    }
    if (z.real() > 0.5) {
        return -dilog_core(1.0 - z) + pi2_6 - std::log(z) * std::log(1.0 - z);
    }
    return dilog_core(z);
}

std::vector<cplx> circle_samples(const NodalSystem& sys, int m_samples) {
    check_samples(m_samples);
    std::vector<cplx> out;
    out.reserve(m_samples + sys.size());
    for (int j = 0; j < m_samples; ++j) {
        out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j / m_samples));
    }
    out.insert(out.end(), sys.nodes().begin(), sys.nodes().end());
    return out;
}

bool alpha_in_estimate_range(double alpha) { return alpha > -1.0 && alpha <= 0.5; }

double lebesgue_function(const HermiteOperator& op, cplx z) {
    thread_local std::vector<cplx> a;
    op.a0k_all(z, a);
    double sum = 0.0;
    for (const cplx& v : a) sum += std::abs(v);
    return sum;
}

double lebesgue_constant(const HermiteOperator& op, int m_samples) {
    double best = 0.0;
    for (const cplx& z : circle_samples(op.system(), m_samples)) {
        const double v = lebesgue_function(op, z);
        if (std::isnan(v)) return v;
        best = std::max(best, v);
    }
    return best;
}

double LagrangeBoundTable::interior_spread() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& row : rows) {
        if (row.scaling_index == 0) continue;
        lo = std::min(lo, row.scaled);
        hi = std::max(hi, row.scaled);
    }
    return lo > 0.0 && std::isfinite(lo) ? hi / lo : std::numeric_limits<double>::infinity();
}

double LagrangeBoundTable::endpoint_sup() const {
    double out = 0.0;
    for (const auto& row : rows) {
        if (row.scaling_index == 0) out = std::max(out, row.sup_abs);
    }
    return out;
}

LagrangeBoundTable lagrange_decay_table(const HermiteOperator& op, int m_samples) {
    const auto& sys = op.system();
    const int n = sys.degree();
    const double alpha = sys.params().alpha;
    const auto samples = circle_samples(sys, m_samples);

    LagrangeBoundTable table;
    table.alpha_in_range = alpha_in_estimate_range(alpha);
    table.rows.resize(sys.size());
    for (std::size_t k = 0; k < sys.size(); ++k) {
        auto& row = table.rows[k];
        row.node_index = k;
        if (k == 0 || k == sys.size() - 1) {
            row.scaling_index = 0;
        } else {
            row.scaling_index = k <= static_cast<std::size_t>(n) ? static_cast<int>(k) : static_cast<int>(k) - n;
        }
        const cplx rp = op.basis()[k].r_prime();
        double sup = 0.0;
        for (const cplx& z : samples) sup = std::max(sup, std::abs(lagrange_eval(sys, k, z, rp)));
        row.sup_abs = sup;
        row.scaled = row.scaling_index == 0 ? sup : sup * std::pow(row.scaling_index, 1.5 - alpha);
    }
    return table;
}

std::vector<CoefficientBoundRow> coefficient_growth_table(const HermiteOperator& op) {
    const auto& sys = op.system();
    const int n = sys.degree();
    const double alpha = sys.params().alpha;
    const double log_k_n = leading_constant(sys.params()).log_magnitude;
    const double log_n = std::log(static_cast<double>(n));

    std::vector<CoefficientBoundRow> out;
    out.reserve(4 * n);
    for (int p = 1; p <= 4; ++p) {
        for (int k = 1; k <= n; ++k) {
            CoefficientBoundRow row;
            row.p = p;
            row.node_index = static_cast<std::size_t>(k);
            row.abs_c = std::abs(op.coefficients()[k].c[p - 1]);
            const double log_c = row.abs_c > 0.0 ? std::log(row.abs_c) : -std::numeric_limits<double>::max();
            row.log_scaled = log_c + p * log_k_n + p * (alpha - 1.0) * log_n + (0.5 * p - p * alpha) * std::log(k);
            out.push_back(row);
        }
    }
    return out;
}

double modulus_of_continuity(const ComplexFunction& f, double delta, int m_samples) {
    if (!(delta > 0.0)) throw DomainError("modulus_of_continuity requires delta > 0");
    check_samples(m_samples);
    constexpr int kOffsetSteps = 8;
    double best = 0.0;
    for (int i = 0; i < m_samples; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / m_samples;
        const cplx base = f(std::polar(1.0, theta));
        for (int j = 1; j <= kOffsetSteps; ++j) {
            const double phi = theta + delta * j / kOffsetSteps;
            best = std::max(best, std::abs(base - f(std::polar(1.0, phi))));
        }
    }
    return best;
}

std::vector<ConvergenceRow> convergence_rows(const ComplexFunction& f, double alpha, double beta,
                                             std::span<const int> n_list, int m_samples) {
    check_samples(m_samples);
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        const auto start = Clock::now();
        const NodalSystem sys(JacobiParams{alpha, beta, n});
        std::vector<cplx> values;
        values.reserve(sys.size());
        for (const cplx& z : sys.nodes()) values.push_back(f(z));
        const Interpolant q = interpolate(sys, std::move(values));

        ConvergenceRow row;
        row.n = n;
        for (const cplx& z : circle_samples(sys, m_samples)) {
            const double err = std::abs(q.eval(z) - f(z));
            row.sup_error = std::isnan(err) ? err : std::max(row.sup_error, err);
            if (std::isnan(err)) break;
        }
        row.omega = modulus_of_continuity(f, 1.0 / n, m_samples);
        row.log_n = std::log(static_cast<double>(n));
        const double denom = row.omega * row.log_n;
        row.ratio = denom > 0.0 ? row.sup_error / denom : std::numeric_limits<double>::infinity();
        row.runtime_ms = elapsed_ms(start);
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
    return rows;
}

std::vector<ExperimentRecord> convergence_study(const ComplexFunction& f, double alpha, double beta,
                                                std::span<const int> n_list, int m_samples) {
    std::vector<ExperimentRecord> out;
    for (const auto& row : convergence_rows(f, alpha, beta, n_list, m_samples)) {
        out.push_back({alpha, beta, row.n, QuantityKind::sup_error, row.sup_error, m_samples, row.runtime_ms});
        out.push_back({alpha, beta, row.n, QuantityKind::omega, row.omega, m_samples, row.runtime_ms});
    }
    sort_records(out);
    return out;
}

std::vector<ExperimentRecord> lebesgue_study(double alpha, double beta, std::span<const int> n_list, int m_samples) {
    check_samples(m_samples);
    std::vector<ExperimentRecord> out;
    for (int n : n_list) {
        auto start = Clock::now();
        const HermiteOperator op(NodalSystem(JacobiParams{alpha, beta, n}));
        const double setup_ms = elapsed_ms(start);

        start = Clock::now();
        const double lambda = lebesgue_constant(op, m_samples);
        out.push_back({alpha, beta, n, QuantityKind::lebesgue_constant, lambda, m_samples,
                       setup_ms + elapsed_ms(start)});

        start = Clock::now();
        const double spread = lagrange_decay_table(op, m_samples).interior_spread();
        out.push_back({alpha, beta, n, QuantityKind::lk_bound_ratio, spread, m_samples, elapsed_ms(start)});

        start = Clock::now();
        double max_log = -std::numeric_limits<double>::max();
        for (const auto& row : coefficient_growth_table(op)) max_log = std::max(max_log, row.log_scaled);
        const double capped = std::exp(std::min(max_log, std::log(std::numeric_limits<double>::max())));
        out.push_back({alpha, beta, n, QuantityKind::cpk_ratio, capped, m_samples, elapsed_ms(start)});
    }
    sort_records(out);
    return out;
}

}  // namespace hfc
