#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfcircle/hermite.hpp"
#include "hfcircle/nodal.hpp"

namespace hfc {

enum class QuantityKind { lebesgue_constant, sup_error, lk_bound_ratio, cpk_ratio, omega };

std::string_view to_string(QuantityKind kind);

/// One row of a study; serialized by write_records_csv.
struct ExperimentRecord {
    double alpha = 0.0;
    double beta = 0.0;
    int n = 0;
    QuantityKind kind = QuantityKind::sup_error;
    double value = 0.0;
    int samples = 0;
    double runtime_ms = 0.0;
};

/// Deterministic order: by n, then by the quantity name.
void sort_records(std::vector<ExperimentRecord>& records);

using ComplexFunction = std::function<cplx(cplx)>;

/// The fixed test suite: 1, z, z^8, e^z, 1/(z-2), sum_{j>=1} z^j/j^2.
enum class TestFunction { one, z, z8, exp, pole, rough };

std::string_view to_string(TestFunction f);
/// Throws InputError on an unknown name.
TestFunction parse_test_function(std::string_view name);
ComplexFunction make_test_function(TestFunction f);

/// Dilogarithm Li_2(z) = sum_{j>=1} z^j / j^2, continued analytically outside the disk.
cplx dilog(cplx z);

inline constexpr int kMinSamples = 64;

/// m equally spaced points e^{2 pi i j/m} followed by every node of the system.
std::vector<cplx> circle_samples(const NodalSystem& sys, int m_samples);

/// True when -1 < alpha <= 1/2, the range in which the log n growth of the
/// Lebesgue constant is claimed. Outside it the operator is still built.
bool alpha_in_estimate_range(double alpha);

/// sum_k |A_{0k}(z)|.
double lebesgue_function(const HermiteOperator& op, cplx z);

/// max of lebesgue_function over circle_samples(sys, m_samples).
double lebesgue_constant(const HermiteOperator& op, int m_samples);

struct LagrangeBoundRow {
    std::size_t node_index = 0;
    /// k used in the k^{3/2-alpha} scaling; 0 for the endpoint nodes, which are left unscaled.
    int scaling_index = 0;
    double sup_abs = 0.0;
    double scaled = 0.0;
};

struct LagrangeBoundTable {
    std::vector<LagrangeBoundRow> rows;
    bool alpha_in_range = true;

    /// max/min of the scaled values over the upper interior nodes k = 1..n.
    double interior_spread() const;
    /// max(sup |L_0|, sup |L_{2n+1}|).
    double endpoint_sup() const;
};

/// sup over the sampled circle of |L_k(z)|, scaled by k^{3/2-alpha} for the
/// interior nodes (conjugate nodes reuse the index of their partner).
LagrangeBoundTable lagrange_decay_table(const HermiteOperator& op, int m_samples);

struct CoefficientBoundRow {
    int p = 1;
    std::size_t node_index = 0;
    double abs_c = 0.0;
    /// log(|c_pk| K_n^p n^{p(alpha-1)} k^{p/2 - p alpha}), always finite.
    double log_scaled = 0.0;
};

/// Rows for p = 1..4 and the upper interior nodes k = 1..n, K_n applied in log space.
std::vector<CoefficientBoundRow> coefficient_growth_table(const HermiteOperator& op);

/// Empirical omega(f, delta): max |f(e^{i t}) - f(e^{i(t+s)})| over m base
/// angles and 8 offsets s = delta*j/8. Throws DomainError unless delta > 0.
double modulus_of_continuity(const ComplexFunction& f, double delta, int m_samples);

struct ConvergenceRow {
    int n = 0;
    double sup_error = 0.0;
    double omega = 0.0;
    double log_n = 0.0;
    /// sup_error / (omega * log n).
    double ratio = 0.0;
    double runtime_ms = 0.0;
};

std::vector<ConvergenceRow> convergence_rows(const ComplexFunction& f, double alpha, double beta,
                                             std::span<const int> n_list, int m_samples);

/// sup_error and omega records for every n, sorted.
std::vector<ExperimentRecord> convergence_study(const ComplexFunction& f, double alpha, double beta,
                                                std::span<const int> n_list, int m_samples);

/// lebesgue_constant, lk_bound_ratio (interior spread of the Lagrange table)
/// and cpk_ratio (largest scaled coefficient) records for every n, sorted.
std::vector<ExperimentRecord> lebesgue_study(double alpha, double beta, std::span<const int> n_list, int m_samples);

}  // namespace hfc
